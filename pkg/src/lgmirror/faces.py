"""Face lattices of 3-dimensional lattice polytopes and Batyrev dual faces.

A face is identified by the set of facets containing it. A lattice point lies
in the relative interior of a face exactly when the facets through the point
are the facets of that face, so one pass over the scanned lattice points gives
every l and l* at once.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .errors import InvalidPair, NotOnBoundary, NotReflexive
from .lattice import LatticePolytope, Point, is_reflexive, polar_dual


@dataclass(frozen=True)
class Face:
    dim: int
    vertex_ids: frozenset[int]
    facet_ids: frozenset[int]
    ell: int
    ell_star: int
    points: tuple[Point, ...] = field(repr=False, compare=False)
    interior: tuple[Point, ...] = field(repr=False, compare=False)


@dataclass(frozen=True)
class FaceLattice:
    polytope: LatticePolytope
    vertices: tuple[Face, ...]
    edges: tuple[Face, ...]
    facets: tuple[Face, ...]
    by_facets: dict[frozenset[int], Face] = field(repr=False, compare=False)
    point_tight: dict[Point, frozenset[int]] = field(repr=False, compare=False)

    def __getitem__(self, dim: int) -> tuple[Face, ...]:
        return (self.vertices, self.edges, self.facets)[dim]

    def proper_faces(self) -> Iterator[Face]:
        yield from self.vertices
        yield from self.edges
        yield from self.facets

    def superfaces(self, face: Face) -> list[Face]:
        """Faces of dimension ``face.dim + 1`` containing ``face``."""
        if face.dim >= 2:
            return []
        return [g for g in self[face.dim + 1] if g.facet_ids <= face.facet_ids]

    def subfaces(self, face: Face) -> list[Face]:
        if face.dim == 0:
            return []
        return [g for g in self[face.dim - 1] if face.facet_ids <= g.facet_ids]

    def sum_interior(self, dim: int) -> int:
        return sum(f.ell_star for f in self[dim])

    @property
    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.facets)


def _tight_sets(P: LatticePolytope) -> dict[Point, frozenset[int]]:
    pts = np.array(P.lattice_points, dtype=np.int64)
    normals = np.array([f.normal for f in P.facets], dtype=np.int64)
    offsets = np.array([f.offset for f in P.facets], dtype=np.int64)
    zero = (pts @ normals.T + offsets) == 0
    return {
        p: frozenset(np.flatnonzero(row).tolist())
        for p, row in zip(P.lattice_points, zero)
    }


def enumerate_faces(P: LatticePolytope) -> FaceLattice:
    """All proper faces of ``P`` with their l and l* counts."""
    tight = _tight_sets(P)
    counts = Counter(tight.values())
    vindex = {v: i for i, v in enumerate(P.vertices)}
    vertex_facets = [tight[v] for v in P.vertices]

    def make(dim: int, facet_ids: frozenset[int]) -> Face:
        vids = frozenset(i for i, fs in enumerate(vertex_facets) if facet_ids <= fs)
        pts = tuple(p for p, t in tight.items() if facet_ids <= t)
        inner = tuple(p for p in pts if tight[p] == facet_ids)
        return Face(dim, vids, facet_ids, len(pts), counts[facet_ids], pts, inner)

    facets = [make(2, frozenset([j])) for j in range(len(P.facets))]
    edges = []
    nf = len(P.facets)
    for a in range(nf):
        for b in range(a + 1, nf):
            common = facets[a].vertex_ids & facets[b].vertex_ids
            if len(common) >= 2:
                ids = frozenset.intersection(*(vertex_facets[i] for i in common))
                edges.append(make(1, ids))
    vertices = [make(0, vertex_facets[vindex[v]]) for v in P.vertices]

    by_facets = {f.facet_ids: f for f in (*vertices, *edges, *facets)}
    return FaceLattice(P, tuple(vertices), tuple(edges), tuple(facets), by_facets, tight)


def minimal_face_containing(lattice: FaceLattice | LatticePolytope, v: Sequence[int]) -> Face:
    """The face whose relative interior contains the boundary point ``v``."""
    if isinstance(lattice, LatticePolytope):
        lattice = enumerate_faces(lattice)
    P = lattice.polytope
    if not P.contains(v):
        raise NotOnBoundary(f"{tuple(v)} lies outside the polytope")
    ids = P.tight_facets(v)
    if not ids:
        raise NotOnBoundary(f"{tuple(v)} is an interior point")
    return lattice.by_facets[ids]


@dataclass(frozen=True)
class DualPair:
    """A reflexive polytope together with its polar dual and both face lattices.

    ``dual.vertices[i]`` is the normal of ``delta.facets[facet_of_dual_vertex[i]]``
    and symmetrically for the other side.
    """

    delta: LatticePolytope
    dual: LatticePolytope
    delta_faces: FaceLattice = field(repr=False)
    dual_faces: FaceLattice = field(repr=False)
    facet_of_dual_vertex: tuple[int, ...] = field(repr=False)
    facet_of_delta_vertex: tuple[int, ...] = field(repr=False)

    @classmethod
    def build(cls, delta: LatticePolytope, dual: LatticePolytope | None = None) -> "DualPair":
        if not is_reflexive(delta):
            raise NotReflexive("dual pairs require a reflexive polytope")
        if dual is None:
            dual = polar_dual(delta)
        normals = {f.normal: j for j, f in enumerate(delta.facets)}
        dual_normals = {f.normal: j for j, f in enumerate(dual.facets)}
        if (
            not is_reflexive(dual)
            or set(normals) != set(dual.vertices)
            or set(dual_normals) != set(delta.vertices)
        ):
            raise InvalidPair("second polytope is not the polar dual of the first")
        return cls(
            delta,
            dual,
            enumerate_faces(delta),
            enumerate_faces(dual),
            tuple(normals[v] for v in dual.vertices),
            tuple(dual_normals[v] for v in delta.vertices),
        )

    def swapped(self) -> "DualPair":
        return DualPair(
            self.dual,
            self.delta,
            self.dual_faces,
            self.delta_faces,
            self.facet_of_delta_vertex,
            self.facet_of_dual_vertex,
        )


def dual_face(pair: DualPair, face: Face) -> Face:
    """Dual face in ``pair.delta`` of a proper face of ``pair.dual``.

    The result is the set of points s of delta with <v, s> = -1 for every
    vertex v of ``face``; its dimension is ``2 - face.dim``.
    """
    if pair.dual_faces.by_facets.get(face.facet_ids) != face:
        raise InvalidPair("face does not belong to the dual side of this pair")
    ids = frozenset(pair.facet_of_dual_vertex[i] for i in face.vertex_ids)
    try:
        return pair.delta_faces.by_facets[ids]
    except KeyError:
        raise InvalidPair("vertex set of the face does not cut out a face of delta") from None
