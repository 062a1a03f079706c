"""Unimodular triangulation of the boundary of a reflexive polytope and its
integral simplicial homology.

The boundary complex uses every boundary lattice point as a vertex. It is the
dual intersection complex of the fiber at infinity of the LG model, and the
check that it is a homology 2-sphere goes through Smith normal forms of the
boundary operators.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import DegenerateFace
from .faces import Face, FaceLattice, enumerate_faces
from .lattice import LatticePolytope, Point, _hull_2d, check_int64

Point2 = tuple[int, int]
Triangle = tuple[int, int, int]


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SNFResult:
    factors: tuple[int, ...]
    rank: int

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.factors if d > 1)


def _dense_snf(A: list[list[int]]) -> list[int]:
    m = len(A)
    n = len(A[0]) if m else 0
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not entries:
            break
        _, pi, pj = min(entries)
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            changed = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    A[i] = [check_int64(a - q * b) for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
                        changed = True
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    for row in A:
                        row[j] = check_int64(row[j] - q * row[t])
                    if A[t][j]:
                        for row in A:
                            row[t], row[j] = row[j], row[t]
                        changed = True
            if changed:
                continue
            p = A[t][t]
            bad = next(
                (i for i in range(t + 1, m) if any(A[i][j] % p for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def smith_normal_form(M: Sequence[Sequence[int]]) -> SNFResult:
    """Invariant factors of an integer matrix.

    Unit pivots are eliminated first on a sparse representation; whatever is
    left is reduced densely.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for i, r in enumerate(M):
        for j, a in enumerate(r):
            a = check_int64(int(a))
            if a:
                rows.setdefault(i, {})[j] = a
                cols.setdefault(j, set()).add(i)

    units = 0
    while True:
        best = None
        for i, r in rows.items():
            for j, a in r.items():
                if a in (1, -1):
                    cost = (len(r) - 1) * (len(cols[j]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
                        if cost == 0:
                            break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, pi, pj = best
        prow = rows.pop(pi)
        piv = prow[pj]
        for j in prow:
            cols[j].discard(pi)
        for i in list(cols[pj]):
            r = rows[i]
            q = r[pj] * piv  # piv is its own inverse
            for j, a in prow.items():
                v = check_int64(r.get(j, 0) - q * a)
                if v:
                    if j not in r:
                        cols[j].add(i)
                    r[j] = v
                elif j in r:
                    del r[j]
                    cols[j].discard(i)
            if not r:
                del rows[i]
        del cols[pj]
        units += 1

    rest_rows = sorted(rows)
    rest_cols = sorted(j for j, s in cols.items() if s)
    if rest_rows and rest_cols:
        dense = [[rows[i].get(j, 0) for j in rest_cols] for i in rest_rows]
        tail = _dense_snf(dense)
    else:
        tail = []
    factors = tuple([1] * units + sorted(tail))
    return SNFResult(factors, len(factors))


# ---------------------------------------------------------------------------
# Facet triangulation


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def plane_basis(normal: Sequence[int]) -> list[list[int]]:
    """Unimodular matrix U (rows are the columns u1, u2, u3) with <n,u1> = 1 and
    u2, u3 spanning the lattice orthogonal to the primitive vector n."""
    n = list(normal)
    U = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]  # U[k] is column k
    # Column operations on the row vector n, mirrored on U.
    for k in (1, 2):
        a, b = n[0], n[k]
        if b == 0:
            continue
        g, x, y = _ext_gcd(a, b)
        # [[x, -b/g], [y, a/g]] has determinant 1.
        ca, cb = U[0], U[k]
        U[0] = [x * p + y * q for p, q in zip(ca, cb)]
        U[k] = [-(b // g) * p + (a // g) * q for p, q in zip(ca, cb)]
        n[0], n[k] = g, 0
    if n[0] < 0:
        U[0] = [-c for c in U[0]]
        n[0] = -n[0]
    if n[0] != 1:
        raise DegenerateFace("facet normal is not primitive")
    return U


def _inverse_unimodular(U: list[list[int]]) -> list[list[int]]:
    # U holds columns; build the matrix C with those columns and invert via the adjugate.
    C = [[U[j][i] for j in range(3)] for i in range(3)]
    det = (
        C[0][0] * (C[1][1] * C[2][2] - C[1][2] * C[2][1])
        - C[0][1] * (C[1][0] * C[2][2] - C[1][2] * C[2][0])
        + C[0][2] * (C[1][0] * C[2][1] - C[1][1] * C[2][0])
    )
    assert det in (1, -1)
    inv = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [x for x in range(3) if x != j]
            c = [x for x in range(3) if x != i]
            minor = C[r[0]][c[0]] * C[r[1]][c[1]] - C[r[0]][c[1]] * C[r[1]][c[0]]
            inv[i][j] = (-1) ** (i + j) * minor * det
    return inv


def _turn(o: Point2, a: Point2, b: Point2) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def triangulate_polygon(points: Sequence[Point2]) -> list[tuple[Point2, Point2, Point2]]:
    """Triangulate a lattice polygon using every given point as a vertex.

    Fan the convex hull from its first vertex, then insert the remaining
    points in lexicographic order by 1-3 splits (interior) or 2-4 / 1-2
    splits (on an edge). Triangles are counter-clockwise.
    """
    pts = sorted(set(points))
    hull = _hull_2d(pts)
    if len(hull) < 3:
        raise DegenerateFace("polygon has no interior")
    tris = [(hull[0], hull[i], hull[i + 1]) for i in range(1, len(hull) - 1)]
    corners = set(hull)
    for p in pts:
        if p in corners:
            continue
        for idx, (a, b, c) in enumerate(tris):
            s = (_turn(a, b, p), _turn(b, c, p), _turn(c, a, p))
            if min(s) < 0:
                continue
            if min(s) > 0:
                tris[idx : idx + 1] = [(a, b, p), (b, c, p), (c, a, p)]
                break
            # p is on one edge of this triangle.
            k = s.index(0)
            tri = (a, b, c)
            u, w, opp = tri[k], tri[(k + 1) % 3], tri[(k + 2) % 3]
            del tris[idx]
            tris += [(u, p, opp), (p, w, opp)]
            for jdx, t in enumerate(tris[:-2]):
                for e in range(3):
                    if t[e] == w and t[(e + 1) % 3] == u:
                        o2 = t[(e + 2) % 3]
                        del tris[jdx]
                        tris += [(w, p, o2), (p, u, o2)]
                        break
                else:
                    continue
                break
            break
        else:  # pragma: no cover - every point of the polygon lies in some triangle
            raise DegenerateFace(f"point {p} not covered by the triangulation")
    return tris


def triangulate_facet(face: Face, normal: Sequence[int]) -> list[tuple[Point, Point, Point]]:
    """Unimodular triangulation of a 2-face using all of its lattice points.

    ``normal`` is the primitive normal of the facet; lattice coordinates in
    the facet plane come from a unimodular completion of it.
    """
    if face.dim != 2 or len(face.points) < 3:
        raise DegenerateFace("only 2-dimensional faces can be triangulated")
    U = plane_basis(normal)
    inv = _inverse_unimodular(U)
    to2d: dict[Point2, Point] = {}
    for p in face.points:
        coords = [sum(inv[i][j] * p[j] for j in range(3)) for i in range(3)]
        to2d[(coords[1], coords[2])] = p
    tris2 = triangulate_polygon(list(to2d))
    for a, b, c in tris2:
        if _turn(a, b, c) != 1:
            raise DegenerateFace("triangulation produced a non-unimodular triangle")
    ell_star = face.ell_star
    boundary = face.ell - ell_star
    if len(tris2) != 2 * ell_star + boundary - 2:
        raise DegenerateFace("triangle count disagrees with Pick's theorem")
    return [(to2d[a], to2d[b], to2d[c]) for a, b, c in tris2]


# ---------------------------------------------------------------------------
# Boundary complex and homology


@dataclass(frozen=True)
class SimplicialSurface:
    vertices: tuple[Point, ...]
    edges: tuple[tuple[int, int], ...]
    triangles: tuple[Triangle, ...]
    areas: tuple[int, ...]
    facet_triangle_counts: tuple[int, ...]

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.triangles)

    def edge_degrees(self) -> dict[tuple[int, int], int]:
        deg = {e: 0 for e in self.edges}
        for i, j, k in self.triangles:
            for e in ((i, j), (i, k), (j, k)):
                deg[e] += 1
        return deg

    @property
    def is_closed(self) -> bool:
        return all(d == 2 for d in self.edge_degrees().values())

    @property
    def all_unimodular(self) -> bool:
        return all(a == 1 for a in self.areas)


def normalized_area(a: Point, b: Point, c: Point) -> int:
    """Twice the lattice area of a triangle in its own plane.

    The gcd of the cross-product entries is the index of the triangle's edge
    lattice inside the plane's lattice.
    """
    u = (b[0] - a[0], b[1] - a[1], b[2] - a[2])
    v = (c[0] - a[0], c[1] - a[1], c[2] - a[2])
    x = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
    return gcd(gcd(x[0], x[1]), x[2])


def boundary_complex(P: LatticePolytope | FaceLattice) -> SimplicialSurface:
    lattice = P if isinstance(P, FaceLattice) else enumerate_faces(P)
    poly = lattice.polytope
    verts = tuple(sorted(poly.boundary_points))
    index = {p: i for i, p in enumerate(verts)}
    triangles: list[Triangle] = []
    areas: list[int] = []
    counts: list[int] = []
    for face in lattice.facets:
        (j,) = face.facet_ids
        tris = triangulate_facet(face, poly.facets[j].normal)
        counts.append(len(tris))
        for a, b, c in tris:
            triangles.append(tuple(sorted((index[a], index[b], index[c]))))
            areas.append(normalized_area(a, b, c))
    order = sorted(range(len(triangles)), key=triangles.__getitem__)
    triangles = [triangles[i] for i in order]
    areas = [areas[i] for i in order]
    edges = sorted({e for i, j, k in triangles for e in ((i, j), (i, k), (j, k))})
    return SimplicialSurface(verts, tuple(edges), tuple(triangles), tuple(areas), tuple(counts))


def boundary_matrices(S: SimplicialSurface) -> tuple[list[list[int]], list[list[int]]]:
    """Boundary operators d1 (V x E) and d2 (E x T) in sorted-vertex orientation."""
    eindex = {e: i for i, e in enumerate(S.edges)}
    d1 = [[0] * len(S.edges) for _ in S.vertices]
    for c, (i, j) in enumerate(S.edges):
        d1[i][c] -= 1
        d1[j][c] += 1
    d2 = [[0] * len(S.triangles) for _ in S.edges]
    for c, (i, j, k) in enumerate(S.triangles):
        d2[eindex[(j, k)]][c] += 1
        d2[eindex[(i, k)]][c] -= 1
        d2[eindex[(i, j)]][c] += 1
    return d1, d2


@dataclass(frozen=True)
class SphereCheck:
    b0: int
    b1: int
    b2: int
    torsion_free: bool
    euler: int
    vertices: int
    edges: int
    triangles: int
    closed: bool
    unimodular: bool

    @property
    def betti(self) -> tuple[int, int, int]:
        return (self.b0, self.b1, self.b2)

    @property
    def is_sphere(self) -> bool:
        return (
            self.betti == (1, 0, 1)
            and self.torsion_free
            and self.euler == 2
            and self.closed
            and self.unimodular
        )


def sphere_check(P: LatticePolytope | FaceLattice | SimplicialSurface) -> SphereCheck:
    """Integral homology of the triangulated boundary via Smith normal form."""
    S = P if isinstance(P, SimplicialSurface) else boundary_complex(P)
    d1, d2 = boundary_matrices(S)
    s1 = smith_normal_form(d1)
    s2 = smith_normal_form(d2)
    V, E, T = len(S.vertices), len(S.edges), len(S.triangles)
    return SphereCheck(
        b0=V - s1.rank,
        b1=E - s1.rank - s2.rank,
        b2=T - s2.rank,
        torsion_free=not s1.torsion and not s2.torsion,
        euler=S.euler_characteristic,
        vertices=V,
        edges=E,
        triangles=T,
        closed=S.is_closed,
        unimodular=S.all_unimodular,
    )


__all__ = [
    "SNFResult",
    "SimplicialSurface",
    "SphereCheck",
    "boundary_complex",
    "boundary_matrices",
    "normalized_area",
    "plane_basis",
    "smith_normal_form",
    "sphere_check",
    "triangulate_facet",
    "triangulate_polygon",
]
