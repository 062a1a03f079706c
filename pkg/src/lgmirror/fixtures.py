"""Bundled reflexive polytopes used by the tests and the quick acceptance tier."""

from __future__ import annotations

from importlib import resources

from .io import CensusEntry, parse_simple
from .lattice import LatticePolytope, convex_hull


def fixture_entries() -> list[CensusEntry]:
    text = resources.files("lgmirror").joinpath("data/fixtures.json").read_text(encoding="utf-8")
    return parse_simple(text)


def fixture_path():
    return resources.files("lgmirror").joinpath("data/fixtures.json")


def load_fixtures() -> dict[str, LatticePolytope]:
    """Fixture polytopes keyed by the name in front of the colon in their comment."""
    return {
        (e.comment or str(e.id)).split(":")[0]: convex_hull(e.vertices)
        for e in fixture_entries()
    }
