"""Synthetic corpora of reflexive 3-polytopes for stress testing.

Starting from the polar duals of the bundled fixtures, repeatedly drop one
vertex and take the hull of the remaining lattice points; reflexive results
are kept. The descent may pass through at most ``bridge`` consecutive
non-reflexive polytopes that still have the origin strictly inside.

Entries are deduplicated by a cheap combinatorial signature. The result is a
large set of distinct reflexive polytopes, not a classification: equivalent
polytopes can appear twice and coverage of the census is incomplete.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Callable

from .config import CorpusConfig
from .errors import DegenerateInput
from .faces import enumerate_faces
from .fixtures import load_fixtures
from .lattice import LatticePolytope, Point, convex_hull, is_reflexive, polar_dual


def signature(P: LatticePolytope) -> tuple:
    L = enumerate_faces(P)
    return (
        P.num_points,
        tuple(sorted(f.offset for f in P.facets)),
        tuple(len(L[d]) for d in range(3)),
        tuple(sorted(F.ell for F in L.facets)),
        tuple(sorted(F.ell for F in L.edges)),
    )


def random_unimodular(rng: random.Random, steps: int = 6) -> list[list[int]]:
    M = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for _ in range(steps):
        i, j = rng.sample(range(3), 2)
        c = rng.choice((-1, 1))
        M[i] = [a + c * b for a, b in zip(M[i], M[j])]
    return M


def transform(M: list[list[int]], verts) -> list[Point]:
    return [tuple(sum(M[i][k] * v[k] for k in range(3)) for i in range(3)) for v in verts]


def descend(
    limit: int,
    bridge: int = 2,
    seed: int = 0,
    progress: Callable[[int, int], None] | None = None,
) -> list[LatticePolytope]:
    CorpusConfig(limit, bridge, seed)  # validates
    rng = random.Random(seed)
    seen: set[tuple] = set()
    found: list[LatticePolytope] = []
    queue: deque[tuple[LatticePolytope, int]] = deque()
    for P in (polar_dual(F) for F in load_fixtures().values()):
        sig = signature(P)
        if sig not in seen:
            seen.add(sig)
            found.append(P)
            queue.append((P, 0))
    while queue and len(found) < limit:
        P, depth = queue.popleft()
        for v in rng.sample(P.vertices, len(P.vertices)):
            try:
                Q = convex_hull(p for p in P.lattice_points if p != v)
            except DegenerateInput:
                continue
            if any(f.offset <= 0 for f in Q.facets):
                continue
            sig = signature(Q)
            if sig in seen:
                continue
            reflexive = is_reflexive(Q)
            if not reflexive and depth >= bridge:
                continue
            seen.add(sig)
            queue.append((Q, 0 if reflexive else depth + 1))
            if reflexive:
                found.append(Q)
                if progress is not None:
                    progress(len(found), len(queue))
                if len(found) >= limit:
                    break
    return found[:limit]


def build_corpus(cfg: CorpusConfig, progress: Callable[[int, int], None] | None = None):
    """``(vertices, comment)`` blocks ready for :func:`lgmirror.io.emit_palp`."""
    found = descend(cfg.limit, cfg.bridge, cfg.seed, progress=progress)
    rng = random.Random(cfg.seed + 1)
    blocks = []
    for n, P in enumerate(found, start=1):
        verts = transform(random_unimodular(rng), P.vertices) if cfg.shuffle_coords else P.vertices
        blocks.append((verts, f"synthetic:{n}"))
    return blocks
