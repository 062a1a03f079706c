from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import reflexive_polytopes
from lgmirror.errors import DegenerateFace
from lgmirror.faces import enumerate_faces
from lgmirror.lattice import _hull_2d, polar_dual
from lgmirror.sphere import (
    SimplicialSurface,
    boundary_complex,
    boundary_matrices,
    normalized_area,
    plane_basis,
    smith_normal_form,
    sphere_check,
    triangulate_facet,
    triangulate_polygon,
)
from oracles import rational_rank


def _det(M):
    m = [[Fraction(x) for x in r] for r in M]
    n, det = len(m), Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return int(det)


class TestSNF:
    def test_identity(self):
        assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).factors == (1, 1, 1)

    def test_diagonal(self):
        assert smith_normal_form([[2, 0], [0, 4]]).factors == (2, 4)

    def test_textbook_example(self):
        r = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        assert r.factors == (2, 6, 12)
        assert r.torsion == (2, 6, 12)

    def test_non_divisible_diagonal(self):
        # diag(2, 3) is equivalent to diag(1, 6)
        assert smith_normal_form([[2, 0], [0, 3]]).factors == (1, 6)

    def test_zero_and_empty(self):
        assert smith_normal_form([[0, 0], [0, 0]]).rank == 0
        assert smith_normal_form([]).rank == 0

    def test_tetrahedron_surface(self):
        tris = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
        edges = tuple(sorted({e for t in tris for e in combinations(t, 2)}))
        S = SimplicialSurface(tuple((i, 0, 0) for i in range(4)), edges, tris, (1,) * 4, (4,))
        _, d2 = boundary_matrices(S)
        r = smith_normal_form(d2)
        assert r.rank == rational_rank(d2) == 3
        assert r.factors == (1, 1, 1)

    @given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=1, max_size=5))
    def test_rank_matches_rationals(self, M):
        assert smith_normal_form(M).rank == rational_rank(M)

    @given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3), min_size=3, max_size=3))
    def test_factors_divide_and_multiply_to_det(self, M):
        r = smith_normal_form(M)
        for a, b in zip(r.factors, r.factors[1:]):
            assert b % a == 0
        d = abs(_det(M))
        if d:
            prod = 1
            for f in r.factors:
                prod *= f
            assert prod == d


class TestPlaneBasis:
    @pytest.mark.parametrize("n", [(1, 0, 0), (0, 0, -1), (3, -1, -1), (2, 3, 5), (-4, 6, 9)])
    def test_unimodular_completion(self, n):
        U = plane_basis(n)
        assert abs(_det(U)) == 1
        assert sum(a * b for a, b in zip(n, U[0])) == 1
        for u in U[1:]:
            assert sum(a * b for a, b in zip(n, u)) == 0

    def test_rejects_non_primitive(self):
        with pytest.raises(DegenerateFace):
            plane_basis((2, 0, 4))


class TestTriangulation:
    def _facet_counts(self, P):
        L = enumerate_faces(P)
        return [len(triangulate_facet(F, P.facets[next(iter(F.facet_ids))].normal)) for F in L.facets]

    def test_cube_square(self, cube):
        assert self._facet_counts(cube) == [8] * 6

    def test_octahedron_triangle(self, octahedron):
        assert self._facet_counts(octahedron) == [1] * 8

    def test_p3_dual_facet(self, simplex):
        assert self._facet_counts(polar_dual(simplex)) == [16] * 4

    def test_polygon_uses_every_point(self):
        pts = [(x, y) for x in range(3) for y in range(3)]
        tris = triangulate_polygon(pts)
        assert len(tris) == 8
        assert {p for t in tris for p in t} == set(pts)

    def test_collinear_polygon(self):
        with pytest.raises(DegenerateFace):
            triangulate_polygon([(0, 0), (1, 1), (2, 2)])

    def test_edge_face_rejected(self, cube):
        e = enumerate_faces(cube).edges[0]
        with pytest.raises(DegenerateFace):
            triangulate_facet(e, (1, 0, 0))

    @given(st.sets(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=3, max_size=12))
    def test_random_point_sets_are_unimodular(self, pts):
        # use every lattice point of the hull, as the facet triangulation does
        hull = _hull_2d(sorted(pts))
        if len(hull) < 3:
            return

        def inside(p):
            n = len(hull)
            return all(
                (hull[(i + 1) % n][0] - hull[i][0]) * (p[1] - hull[i][1])
                - (hull[(i + 1) % n][1] - hull[i][1]) * (p[0] - hull[i][0]) >= 0
                for i in range(n)
            )

        full = [(x, y) for x in range(5) for y in range(5) if inside((x, y))]
        tris = triangulate_polygon(full)
        area2 = 0
        for a, b, c in tris:
            t = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
            assert t == 1
            area2 += t
        # Pick: 2A = 2i + b - 2, and the hull area is the triangle sum
        n = len(hull)
        shoelace = sum(hull[i][0] * hull[(i + 1) % n][1] - hull[(i + 1) % n][0] * hull[i][1] for i in range(n))
        assert area2 == abs(shoelace)


class TestBoundaryComplex:
    @pytest.mark.parametrize(
        "name, sizes", [("octahedron", (6, 12, 8)), ("cube", (26, 72, 48))]
    )
    def test_sizes(self, request, name, sizes):
        S = boundary_complex(request.getfixturevalue(name))
        assert (len(S.vertices), len(S.edges), len(S.triangles)) == sizes
        assert S.euler_characteristic == 2
        assert sum(S.facet_triangle_counts) == len(S.triangles)

    def test_p3_dual(self, simplex):
        S = boundary_complex(polar_dual(simplex))
        assert len(S.vertices) == 34
        assert S.euler_characteristic == 2
        assert S.facet_triangle_counts == (16, 16, 16, 16)

    def test_normalized_area(self):
        assert normalized_area((1, 0, 0), (0, 1, 0), (0, 0, 1)) == 1
        assert normalized_area((0, 0, 0), (2, 0, 0), (0, 1, 0)) == 2


class TestSphereCheck:
    @pytest.mark.parametrize("name", ["octahedron", "cube", "simplex"])
    def test_worked(self, request, name):
        s = sphere_check(request.getfixturevalue(name))
        assert s.betti == (1, 0, 1)
        assert s.torsion_free and s.euler == 2 and s.is_sphere

    def test_cube_counts(self, cube):
        s = sphere_check(cube)
        assert (s.vertices, s.edges, s.triangles) == (26, 72, 48)

    def test_all_fixture_duals(self, fixtures):
        for name, P in fixtures.items():
            D = polar_dual(P)
            s = sphere_check(D)
            assert s.is_sphere, name
            assert s.vertices == D.num_points - 1

    def test_torus_is_not_a_sphere(self):
        # 7-vertex torus (Moebius-Kantor / Csaszar combinatorics)
        tris = []
        for i in range(7):
            tris.append(tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))))
            tris.append(tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))))
        tris = tuple(sorted(tris))
        edges = tuple(sorted({e for t in tris for e in combinations(t, 2)}))
        S = SimplicialSurface(tuple((i, 0, 0) for i in range(7)), edges, tris, (1,) * 14, (14,))
        s = sphere_check(S)
        assert s.betti == (1, 2, 1)
        assert s.euler == 0 and not s.is_sphere

    @given(reflexive_polytopes())
    def test_random_reflexive(self, P):
        S = boundary_complex(P)
        s = sphere_check(S)
        assert s.is_sphere
        assert s.vertices == P.num_points - 1
        # every edge is shared by exactly two triangles after gluing
        assert set(S.edge_degrees().values()) == {2}
