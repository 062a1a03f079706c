"""Exact lattice polytopes in rank 3.

Hulls are computed by gift wrapping with integer orientation predicates.
Every coordinate is a plain Python ``int``; inputs are bounded so that all
determinants stay inside the signed 64-bit range, and leaving that range is
reported as :class:`LatticeOverflowError` rather than silently promoted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import DegenerateInput, LatticeOverflowError, NotReflexive

Point = tuple[int, int, int]

INT64_MAX = 2**63 - 1
# |coord| <= 2**19 keeps every 3x3 orientation determinant below 2**63.
MAX_COORD = 2**19
# Bounding-box scans larger than this are refused.
MAX_SCAN = 50_000_000


def check_int64(value: int) -> int:
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise LatticeOverflowError(f"value {value} does not fit in 64 bits")
    return value


def as_point(coords: Iterable) -> Point:
    out = []
    for c in coords:
        if isinstance(c, bool) or int(c) != c:
            raise TypeError(f"non-integer coordinate {c!r}")
        c = int(c)
        if abs(c) > MAX_COORD:
            raise LatticeOverflowError(f"coordinate {c} exceeds the supported bound {MAX_COORD}")
        out.append(c)
    if len(out) != 3:
        raise ValueError(f"expected 3 coordinates, got {len(out)}")
    return (out[0], out[1], out[2])


def sub(a: Sequence[int], b: Sequence[int]) -> Point:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a: Sequence[int], b: Sequence[int]) -> Point:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def orient(a: Point, b: Point, c: Point, d: Point) -> int:
    """Signed volume det[b-a, c-a, d-a]."""
    return check_int64(dot(cross(sub(b, a), sub(c, a)), sub(d, a)))


def primitive(v: Sequence[int]) -> Point:
    g = gcd(gcd(v[0], v[1]), v[2])
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return (v[0] // g, v[1] // g, v[2] // g)


@dataclass(frozen=True, order=True)
class FacetInequality:
    """Half-space ``<normal, x> >= -offset`` with a primitive inward normal."""

    normal: Point
    offset: int

    def value(self, x: Sequence[int]) -> int:
        """Lattice distance of ``x`` from the facet plane (0 on the facet)."""
        return dot(self.normal, x) + self.offset

    def contains(self, x: Sequence[int]) -> bool:
        return self.value(x) >= 0


@dataclass(frozen=True)
class LatticePolytope:
    """Full-dimensional lattice polytope with both V- and H-representation.

    Build instances with :func:`convex_hull`; the constructor trusts its
    arguments.
    """

    vertices: tuple[Point, ...]
    facets: tuple[FacetInequality, ...]

    def contains(self, x: Sequence[int]) -> bool:
        return all(f.contains(x) for f in self.facets)

    def tight_facets(self, x: Sequence[int]) -> frozenset[int]:
        """Indices of the facets whose plane passes through ``x``."""
        return frozenset(i for i, f in enumerate(self.facets) if f.value(x) == 0)

    @cached_property
    def lattice_points(self) -> tuple[Point, ...]:
        return _scan_box(self)

    @cached_property
    def interior_points(self) -> tuple[Point, ...]:
        return tuple(p for p in self.lattice_points if all(f.value(p) > 0 for f in self.facets))

    @cached_property
    def boundary_points(self) -> tuple[Point, ...]:
        return tuple(p for p in self.lattice_points if any(f.value(p) == 0 for f in self.facets))

    @property
    def num_points(self) -> int:
        return len(self.lattice_points)

    def vertex_set(self) -> frozenset[Point]:
        return frozenset(self.vertices)


def _affine_rank(pts: Sequence[Point]) -> int:
    if not pts:
        return -1
    base = pts[0]
    m = [list(sub(p, base)) for p in pts[1:]]
    rank = 0
    cols = 3
    rows = len(m)
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                a, b = m[r][c], m[i][c]
                m[i] = [a * m[i][k] - b * m[r][k] for k in range(cols)]
        r += 1
        rank += 1
    return rank


def _hull_2d(pts: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Monotone chain; strictly convex vertices in counter-clockwise order."""
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[int, int]] = []
    for p in pts:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[int, int]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _plane(normal: Point, through: Point, pts: Sequence[Point]) -> FacetInequality:
    n = primitive(normal)
    if any(dot(n, sub(p, through)) < 0 for p in pts):
        n = (-n[0], -n[1], -n[2])
    return FacetInequality(n, check_int64(-dot(n, through)))


def _facet_polygon(facet: FacetInequality, pts: Sequence[Point]) -> list[Point]:
    on = [p for p in pts if facet.value(p) == 0]
    n = facet.normal
    drop = max(range(3), key=lambda k: abs(n[k]))
    keep = [k for k in range(3) if k != drop]
    lift = {(p[keep[0]], p[keep[1]]): p for p in on}
    return [lift[q] for q in _hull_2d(list(lift))]


def convex_hull(points: Iterable[Iterable[int]]) -> LatticePolytope:
    """Convex hull of lattice points in Z^3.

    Raises :class:`DegenerateInput` when the points do not span rank 3.
    Vertices and facets come back in lexicographic order.
    """
    pts = sorted({as_point(p) for p in points})
    if len(pts) < 4 or _affine_rank(pts) < 3:
        raise DegenerateInput("points do not affinely span a 3-dimensional space")

    # The lexicographic minimum is a vertex; some supporting plane passes through it.
    a = pts[0]
    first = None
    for i in range(1, len(pts)):
        for j in range(i + 1, len(pts)):
            n = cross(sub(pts[i], a), sub(pts[j], a))
            if n == (0, 0, 0):
                continue
            signs = {(s > 0) - (s < 0) for s in (dot(n, sub(p, a)) for p in pts)}
            if not (1 in signs and -1 in signs):
                first = _plane(n, a, pts)
                break
        if first is not None:
            break
    assert first is not None

    facets = {first}
    queue = [first]
    seen_edges: set[frozenset[Point]] = set()
    while queue:
        facet = queue.pop()
        poly = _facet_polygon(facet, pts)
        for k in range(len(poly)):
            u, w = poly[k], poly[(k + 1) % len(poly)]
            key = frozenset((u, w))
            if key in seen_edges:
                continue
            seen_edges.add(key)
            r = next(p for p in poly if p != u and p != w)
            axis = sub(w, u)
            q = next(p for p in pts if facet.value(p) != 0)

            def normal_through(q: Point) -> Point:
                m = cross(axis, sub(q, u))
                if dot(m, sub(r, u)) < 0:
                    m = (-m[0], -m[1], -m[2])
                return m

            m = normal_through(q)
            for p in pts:
                if dot(m, sub(p, u)) < 0:
                    q = p
                    m = normal_through(q)
            nxt = _plane(m, u, pts)
            if nxt not in facets:
                facets.add(nxt)
                queue.append(nxt)

    vertices: set[Point] = set()
    for f in facets:
        vertices.update(_facet_polygon(f, pts))
    return LatticePolytope(tuple(sorted(vertices)), tuple(sorted(facets)))


def _scan_box(P: LatticePolytope) -> tuple[Point, ...]:
    vs = np.array(P.vertices, dtype=np.int64)
    lo, hi = vs.min(axis=0), vs.max(axis=0)
    size = int(np.prod(hi - lo + 1))
    if size > MAX_SCAN:
        raise LatticeOverflowError(f"bounding box holds {size} points, above scan limit {MAX_SCAN}")
    grid = np.mgrid[lo[0] : hi[0] + 1, lo[1] : hi[1] + 1, lo[2] : hi[2] + 1].reshape(3, -1).T
    normals = np.array([f.normal for f in P.facets], dtype=np.int64)
    offsets = np.array([f.offset for f in P.facets], dtype=np.int64)
    ok = (grid @ normals.T + offsets >= 0).all(axis=1)
    return tuple((int(x), int(y), int(z)) for x, y, z in grid[ok])


def lattice_points(P: LatticePolytope) -> tuple[Point, ...]:
    """All lattice points of ``P`` in lexicographic order (bounding-box scan)."""
    return P.lattice_points


def is_reflexive(P: LatticePolytope) -> bool:
    # Origin strictly interior means every offset is positive; reflexive means all are 1.
    return all(f.offset == 1 for f in P.facets)


def polar_dual(P: LatticePolytope) -> LatticePolytope:
    """Polar dual of a reflexive polytope; its vertices are the facet normals of ``P``."""
    if not is_reflexive(P):
        raise NotReflexive("polar dual is only a lattice polytope for reflexive input")
    return convex_hull(f.normal for f in P.facets)
