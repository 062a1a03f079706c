import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lgmirror.errors import DegenerateInput
from lgmirror.fixtures import load_fixtures
from lgmirror.lattice import convex_hull, is_reflexive, polar_dual

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
)
settings.load_profile("default")

P3 = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
CUBE = list(itertools.product([-1, 1], repeat=3))
OCTAHEDRON = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]


def pytest_addoption(parser):
    parser.addoption(
        "--census",
        action="store",
        default=None,
        help="path to the 4319-entry census of reflexive 3-polytopes (PALP format)",
    )


@pytest.fixture(scope="session")
def census_path(request):
    return request.config.getoption("--census")


@pytest.fixture(scope="session")
def fixtures():
    return load_fixtures()


@pytest.fixture(scope="session")
def simplex():
    return convex_hull(P3)


@pytest.fixture(scope="session")
def cube():
    return convex_hull(CUBE)


@pytest.fixture(scope="session")
def octahedron():
    return convex_hull(OCTAHEDRON)


_BIG = None


def _big_polytopes():
    global _BIG
    if _BIG is None:
        _BIG = [polar_dual(P) for P in load_fixtures().values()]
    return _BIG


@st.composite
def unimodular_matrices(draw):
    M = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for _ in range(draw(st.integers(0, 3))):
        i, j = draw(st.permutations(range(3)))[:2]
        c = draw(st.sampled_from((-1, 1)))
        M[i] = [a + c * b for a, b in zip(M[i], M[j])]
    if draw(st.booleans()):
        M[0] = [-a for a in M[0]]
    return M


def apply(M, pts):
    return [tuple(sum(M[i][k] * p[k] for k in range(3)) for i in range(3)) for p in pts]


@st.composite
def reflexive_polytopes(draw):
    """Hulls of random lattice-point subsets of the large fixture duals, kept when reflexive,
    then moved by a random unimodular map."""
    big = draw(st.sampled_from(_big_polytopes()))
    pts = [p for p in big.lattice_points if p != (0, 0, 0)]
    mask = draw(st.lists(st.booleans(), min_size=len(pts), max_size=len(pts)))
    chosen = [p for p, keep in zip(pts, mask) if keep]
    try:
        P = convex_hull(chosen)
    except DegenerateInput:
        P = None
    if P is None or not is_reflexive(P):
        P = big
    M = draw(unimodular_matrices())
    return convex_hull(apply(M, P.vertices))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
