"""Hodge diamonds of X and of its LG mirror, and the entrywise mirror check."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .errors import InvalidParameter
from .faces import DualPair
from .hodge import (
    ToricHodgeData,
    as_pair,
    base_locus_ledger,
    ks_lemma_check,
    picard_sum_relation,
    toric_hodge_data,
)
from .lattice import LatticePolytope
from .sphere import SphereCheck, sphere_check

DIM = 3


class DiamondKind(str, Enum):
    FANO_HPQ = "fano_hpq"
    LG_FPQ = "lg_fpq"


@dataclass(frozen=True)
class HodgeDiamond:
    """4x4 grid of Hodge numbers, ``entries[p][q]``."""

    entries: tuple[tuple[int, ...], ...]
    kind: DiamondKind

    def __post_init__(self):
        if len(self.entries) != DIM + 1 or any(len(r) != DIM + 1 for r in self.entries):
            raise ValueError("a threefold diamond is a 4x4 grid")

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        return self.entries[p][q]

    def is_symmetric(self) -> bool:
        return all(self[p, q] == self[q, p] for p in range(4) for q in range(4))

    def is_rotation_symmetric(self) -> bool:
        return all(self[p, q] == self[3 - p, 3 - q] for p in range(4) for q in range(4))

    def lg_support_ok(self) -> bool:
        """Zero outside (1,1), (2,2) and the antidiagonal p + q = 3."""
        return all(
            self[p, q] == 0
            for p in range(4)
            for q in range(4)
            if (p, q) not in ((1, 1), (2, 2)) and p + q != 3
        )

    def render(self) -> str:
        """Classical diamond layout: one row per total degree p + q, top row 6."""
        width = max(len(str(x)) for row in self.entries for x in row) + 1
        lines = []
        for s in range(2 * DIM, -1, -1):
            cells = [
                str(self[p, s - p]).rjust(width)
                for p in range(DIM, -1, -1)
                if 0 <= s - p <= DIM
            ]
            pad = " " * (width * (DIM + 1 - len(cells)))
            lines.append(pad + (" " * width).join(cells))
        return "\n".join(lines)

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def assemble_f_diamond(ph: int, k: int, h12Z: int) -> HodgeDiamond:
    """f^{p,q} of a threefold LG model with a type III fiber at infinity.

    Corners f^{3,0} = f^{0,3} = 1, middle f^{2,1} = f^{1,2} = ph - 2 + h^{1,2}(Z),
    f^{1,1} = f^{2,2} = k, everything else zero.
    """
    if ph < 2:
        raise InvalidParameter(f"ph must be at least 2, got {ph}")
    if k < 0 or h12Z < 0:
        raise InvalidParameter("k and h^{1,2}(Z) must be non-negative")
    g = [[0] * 4 for _ in range(4)]
    g[3][0] = g[0][3] = 1
    g[2][1] = g[1][2] = ph - 2 + h12Z
    g[1][1] = g[2][2] = k
    return HodgeDiamond(tuple(map(tuple, g)), DiamondKind.LG_FPQ)


def toric_hodge_diamond(pair: DualPair | LatticePolytope) -> HodgeDiamond:
    pair = as_pair(pair)
    h11 = pair.delta.num_points - 4
    g = [[0] * 4 for _ in range(4)]
    g[0][0] = g[3][3] = 1
    g[1][1] = g[2][2] = h11
    return HodgeDiamond(tuple(map(tuple, g)), DiamondKind.FANO_HPQ)


def mirror_index(p: int, q: int) -> tuple[int, int]:
    """Position in the LG diamond matched with h^{p,q}: (3 - q, p)."""
    return (DIM - q, p)


def check_extremal(local_ranks: Sequence[int], rank: int) -> bool:
    """Extremality of a local system on a punctured line: sum of local ranks is 2 * rank."""
    if rank < 1 or any(r < 0 for r in local_ranks):
        raise InvalidParameter("ranks must be non-negative and the global rank positive")
    return sum(local_ranks) == 2 * rank


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: object
    rhs: object

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    @property
    def residual(self) -> int | None:
        if isinstance(self.lhs, int) and isinstance(self.rhs, int):
            return self.lhs - self.rhs
        return None


@dataclass
class VerificationRecord:
    polytope_id: str
    data: ToricHodgeData
    hodge: HodgeDiamond
    lg: HodgeDiamond
    checks: list[IdentityCheck]
    sphere: SphereCheck
    curve_count: int
    genus_sum: int
    facets_without_interior: bool
    seconds: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> IdentityCheck:
        return next(c for c in self.checks if c.name == name)

    def group_passed(self, prefix: str) -> bool:
        return all(c.passed for c in self.checks if c.name.startswith(prefix))

    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.passed]


def verify_mirror(pair: DualPair | LatticePolytope, polytope_id: str = "") -> VerificationRecord:
    """Run every identity for one reflexive polytope; failures are recorded, not raised."""
    start = time.perf_counter()
    pair = as_pair(pair)
    data = toric_hodge_data(pair)
    hodge = toric_hodge_diamond(pair)
    lg = assemble_f_diamond(data.ph, data.k, data.h21_Z)
    checks: list[IdentityCheck] = []
    for p in range(4):
        for q in range(4):
            checks.append(IdentityCheck(f"mirror[{p},{q}]", hodge[p, q], lg[mirror_index(p, q)]))

    checks.append(IdentityCheck("point_count", *ks_lemma_check(pair)))
    checks.append(IdentityCheck("point_count_dual", *ks_lemma_check(pair.swapped())))
    checks.append(IdentityCheck("picard_sum", *picard_sum_relation(pair)))

    ledger = base_locus_ledger(pair)
    checks.append(IdentityCheck("base_locus", ledger.curve_count, ledger.closed_form))
    checks.append(
        IdentityCheck("h11_Z_ledger", data.h11_Z, data.ell_Delta_dual - 4 + ledger.curve_count)
    )
    checks.append(IdentityCheck("h21_Z_ledger", data.h21_Z, ledger.genus_sum))

    no_interior = all(F.ell_star == 0 for F in pair.delta_faces.facets)
    # Facets without interior points force h^{2,1}(Z) = 0.
    checks.append(IdentityCheck("empty_facets", True, (not no_interior) or data.h21_Z == 0))

    sph = sphere_check(pair.dual_faces)
    checks.append(IdentityCheck("sphere", (sph.b0, sph.b1, sph.b2, sph.euler), (1, 0, 1, 2)))
    checks.append(IdentityCheck("sphere_torsion_free", sph.torsion_free, True))
    checks.append(IdentityCheck("sphere_unimodular", sph.unimodular and sph.closed, True))
    checks.append(IdentityCheck("sphere_vertices", sph.vertices, data.ell_Delta_dual - 1))

    return VerificationRecord(
        polytope_id=polytope_id,
        data=data,
        hodge=hodge,
        lg=lg,
        checks=checks,
        sphere=sph,
        curve_count=ledger.curve_count,
        genus_sum=ledger.genus_sum,
        facets_without_interior=no_interior,
        seconds=time.perf_counter() - start,
    )
