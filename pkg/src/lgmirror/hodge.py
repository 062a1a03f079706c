"""Hodge numbers attached to a reflexive 3-polytope and its polar dual.

Conventions: ``pair.delta`` is the fan polytope of the crepant resolution X,
``pair.dual`` is the Newton side whose anticanonical pencil gives the
compactified LG model Z. Every function takes a :class:`DualPair`; a bare
reflexive :class:`LatticePolytope` is accepted and paired with its polar dual.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .faces import DualPair, Face, dual_face, minimal_face_containing
from .lattice import LatticePolytope, Point

# Second Betti number of a K3 surface.
K3_B2 = 22
# h^{1,1} of a K3 surface.
K3_H11 = 20


def as_pair(obj: DualPair | LatticePolytope) -> DualPair:
    if isinstance(obj, DualPair):
        return obj
    return DualPair.build(obj)


def edge_product_sum(pair: DualPair) -> int:
    """Sum over edges F of the dual polytope of l*(F) * l*(F dual)."""
    pair = as_pair(pair)
    return sum(F.ell_star * dual_face(pair, F).ell_star for F in pair.dual_faces.edges)


def h11_resolution(pair: DualPair | LatticePolytope) -> int:
    """h^{1,1} of the crepant resolution: number of lattice points minus 4."""
    pair = as_pair(pair)
    return pair.delta.num_points - 4


def h21_Z(pair: DualPair | LatticePolytope) -> int:
    pair = as_pair(pair)
    return pair.delta_faces.sum_interior(2)


def h11_Z_closed(pair: DualPair | LatticePolytope) -> int:
    pair = as_pair(pair)
    return (
        2 * pair.dual.num_points
        - 5
        - pair.dual_faces.sum_interior(2)
        + edge_product_sum(pair)
    )


def pic_toric_fiber(pair: DualPair | LatticePolytope) -> int:
    """Rank of the Picard sublattice of a generic anticanonical K3 in the dual
    toric variety spanned by curves from its toric boundary.

    Computed on ``pair.dual``.
    """
    pair = as_pair(pair)
    return (
        pair.dual.num_points
        - 4
        - pair.dual_faces.sum_interior(2)
        + edge_product_sum(pair)
    )


def ph(pair: DualPair | LatticePolytope) -> int:
    """Rank of the cokernel of H^2(Y) -> H^2(fiber), i.e. 22 minus the toric Picard rank."""
    return K3_B2 - pic_toric_fiber(pair)


class CurveKind(str, Enum):
    EMPTY = "empty"
    RATIONAL_CURVES = "rational_curves"
    SINGLE_CURVE = "single_curve"


@dataclass(frozen=True)
class BaseLocusEntry:
    point: Point
    face_dim: int
    dual_face_dim: int
    kind: CurveKind
    curves: int
    genus: int


@dataclass(frozen=True)
class BlowupLedger:
    """Irreducible base-locus curves of the anticanonical pencil, per boundary divisor."""

    entries: tuple[BaseLocusEntry, ...]
    curve_count: int
    genus_sum: int
    closed_form: int

    @property
    def consistent(self) -> bool:
        return self.curve_count == self.closed_form


def classify_boundary_point(pair: DualPair, v: Point) -> BaseLocusEntry:
    """Base-locus curves on the toric divisor of the boundary point ``v`` of the dual.

    The divisor meets a generic anticanonical section in a curve whose Newton
    polytope is the dual face G of the smallest face containing ``v``:
    dim G = 2 gives one smooth curve of genus l*(G), dim G = 1 gives
    1 + l*(G) disjoint rational curves, dim G = 0 gives nothing.
    """
    gamma: Face = minimal_face_containing(pair.dual_faces, v)
    g = dual_face(pair, gamma)
    if g.dim == 2:
        kind, curves, genus = CurveKind.SINGLE_CURVE, 1, g.ell_star
    elif g.dim == 1:
        kind, curves, genus = CurveKind.RATIONAL_CURVES, 1 + g.ell_star, 0
    else:
        kind, curves, genus = CurveKind.EMPTY, 0, 0
    return BaseLocusEntry(v, gamma.dim, g.dim, kind, curves, genus)


def base_locus_ledger(pair: DualPair | LatticePolytope) -> BlowupLedger:
    pair = as_pair(pair)
    entries = tuple(classify_boundary_point(pair, v) for v in pair.dual.boundary_points)
    closed = (
        pair.dual.num_points
        - 1
        - pair.dual_faces.sum_interior(2)
        + edge_product_sum(pair)
    )
    return BlowupLedger(
        entries,
        sum(e.curves for e in entries),
        sum(e.genus for e in entries),
        closed,
    )


def ks_lemma_check(pair: DualPair | LatticePolytope) -> tuple[int, int]:
    """Both sides of l(D) - 4 = 24 - l(D*) + S2(D*) - E + S2(D)."""
    pair = as_pair(pair)
    lhs = pair.delta.num_points - 4
    rhs = (
        24
        - pair.dual.num_points
        + pair.dual_faces.sum_interior(2)
        - edge_product_sum(pair)
        + pair.delta_faces.sum_interior(2)
    )
    return lhs, rhs


def picard_sum_relation(pair: DualPair | LatticePolytope) -> tuple[int, int]:
    """Sum of the toric Picard ranks on both sides versus 20 + edge products over delta."""
    pair = as_pair(pair)
    swapped = pair.swapped()
    lhs = pic_toric_fiber(pair) + pic_toric_fiber(swapped)
    rhs = K3_H11 + edge_product_sum(swapped)
    return lhs, rhs


@dataclass(frozen=True)
class ToricHodgeData:
    h11_X: int
    h21_Z: int
    h11_Z: int
    pic_toric_fiber: int
    ph: int
    k: int
    ell_Delta: int
    ell_Delta_dual: int


def toric_hodge_data(pair: DualPair | LatticePolytope) -> ToricHodgeData:
    pair = as_pair(pair)
    pic = pic_toric_fiber(pair)
    return ToricHodgeData(
        h11_X=h11_resolution(pair),
        h21_Z=h21_Z(pair),
        h11_Z=h11_Z_closed(pair),
        pic_toric_fiber=pic,
        ph=K3_B2 - pic,
        # The LG mirror of a toric resolution has no reducible fibers away from infinity.
        k=0,
        ell_Delta=pair.delta.num_points,
        ell_Delta_dual=pair.dual.num_points,
    )
