import pytest
from hypothesis import given, strategies as st

from systolic.balls import (
    BallTower,
    contraction_image,
    elementary_contraction,
    projection,
    projection_link_sides,
    push_path,
    retract_simplex,
    retraction,
)
from systolic.complex import build_complex, faces, full_subcomplex, is_full, simplex_complex
from systolic.errors import NotASimplexError, SystolicityViolation
from systolic.generators import flat_torus, platonic, triangular_disk, wheel
from systolic.largeness import is_k_large

import oracles
from strategies import complexes

DISK = triangular_disk(4)
X = DISK.complex
T = BallTower(X, (0,))


def vid(name):
    return X.vertex_id(name)


class TestTower:
    def test_sphere_sizes(self):
        assert [len(T.vertices_at(k)) for k in range(5)] == [1, 6, 12, 18, 24]

    def test_ball_zero_is_closure(self):
        T2 = BallTower(X, (0, 1, 2) if (0, 1, 2) in X.simplices else X.maximal_simplices[0])
        assert T2.ball(0) == simplex_complex(T2.base)

    def test_missing_base(self):
        with pytest.raises(NotASimplexError):
            BallTower(X, (0, 999))

    def test_bounded_tower(self):
        T2 = BallTower(X, (0,), 2)
        assert T2.imax == 2 and not T2.complete
        with pytest.raises(IndexError):
            T2.ball(3)
        assert T.complete and T.ball(40) == X

    @given(complexes(max_vertices=6), st.data())
    def test_balls_match_definition(self, Y, data):
        base = data.draw(st.sampled_from(Y.sorted_simplices))
        tower = BallTower(Y, base, 3)
        dist = oracles.distances(Y, base)
        for i in range(4):
            assert tower.ball(i).simplices == oracles.ball(Y, base, i)
            assert set(tower.vertices_at(i)) == {v for v, d in dist.items() if d == i}
            S = tower.sphere(i)
            assert S == full_subcomplex(tower.ball(i), tower.vertices_at(i))
            for s in tower.ball(i).simplices:
                assert tower.in_interior(s, i) == (s not in S.simplices)

    @pytest.mark.parametrize("g", [triangular_disk(4), flat_torus(7), wheel(7)], ids=lambda g: g.label)
    def test_balls_spheres_full_and_large(self, g):
        Y = g.complex
        for v in Y.vertices[:12]:
            tower = BallTower(Y, (v,), g.safe_radius)
            for i in range(g.safe_radius + 1):
                for Z in (tower.ball(i), tower.sphere(i)):
                    assert is_full(Y, Z)
                    assert is_k_large(Z, 6).is_k_large


class TestProjection:
    def test_edge_projection(self):
        # (0, 2) sits on a side of the hexagon S_2, between two S_1 vertices
        w = vid("1:1")
        assert T.distance[w] == 2
        rho = projection(X, T, (w,))
        assert len(rho) == 2 and all(T.distance[v] == 1 for v in rho)

    def test_corner_projection(self):
        w = vid("2:0")
        assert projection(X, T, (w,)) == (vid("1:0"),)

    def test_edge_of_sphere(self):
        e = tuple(sorted((vid("2:0"), vid("1:1"))))
        assert projection(X, T, e) == (vid("1:0"),)

    def test_rejects_radius_zero_and_mixed(self):
        with pytest.raises(ValueError):
            projection(X, T, (0,))
        with pytest.raises(ValueError):
            projection(X, T, tuple(sorted((0, vid("1:0")))))

    def test_octahedron_violation(self):
        Y = platonic("octahedron").complex
        tower = BallTower(Y, (0,))
        # the antipode sees the whole equator, a 4-cycle, not a simplex
        with pytest.raises(SystolicityViolation) as exc:
            projection(Y, tower, (1,))
        assert exc.value.witness == (2, 3, 4, 5)

    def test_projection_link_sides(self):
        for i in (1, 2, 3):
            for tau in T.sphere(i).sorted_simplices:
                rho, (lb, rb), (ls, rs) = projection_link_sides(X, T, tau)
                assert lb == rb and ls == rs


class TestContraction:
    def test_identity_on_ball(self):
        pi = elementary_contraction(X, T, 2)
        assert pi.fixes(T.ball(2))
        assert pi.is_simplicial()

    def test_vertex_goes_to_projection(self):
        w = vid("1:1")
        assert contraction_image(X, T, (w,), 1) == projection(X, T, (w,))

    def test_crossing_edge_goes_to_its_lower_vertex(self):
        e = tuple(sorted((vid("1:0"), vid("2:0"))))
        assert contraction_image(X, T, e, 1) == (vid("1:0"),)

    def test_maps_annulus_into_sphere(self):
        pi = elementary_contraction(X, T, 1)
        outer = full_subcomplex(T.ball(2), [v for v in T.ball(2).vertices if T.distance[v] >= 1])
        assert pi.maps_into(outer, T.sphere(1))

    def test_barycentric_image_is_simplicial(self):
        pi = elementary_contraction(X, T, 1)
        dom, cod, vmap = pi.on_barycenters()
        for s in dom.complex.simplices:
            assert tuple(sorted({vmap[v] for v in s})) in cod.complex.simplices

    def test_retraction_single_step_equals_contraction(self):
        assert retraction(X, T, 1, 2).image == elementary_contraction(X, T, 1).image

    def test_retraction_to_unit_sphere(self):
        P = retraction(X, T, 1, 3)
        for s in T.sphere(3).simplices:
            assert P(s) in T.sphere(1).simplices
            assert retract_simplex(X, T, s, 1) == P(s)
        assert P.fixes(T.ball(1))

    def test_octahedron_contraction_fails_loudly(self):
        Y = platonic("octahedron").complex
        with pytest.raises(SystolicityViolation):
            elementary_contraction(Y, BallTower(Y, (0,)), 1)


def hexagon_order(vertices, adj):
    vs = set(vertices)
    cyc = [min(vs)]
    while len(cyc) < len(vs):
        cyc.append(min(w for w in adj[cyc[-1]] if w in vs and w not in cyc))
    return cyc


class TestPush:
    def test_constant(self):
        w = vid("2:0")
        assert push_path(X, T, 1, [w]).vertices == [vid("1:0")]

    def test_twelve_cycle_pushes_to_closed_walk(self):
        cyc = hexagon_order(T.vertices_at(2), X.adjacency)
        res = push_path(X, T, 1, cyc + [cyc[0]])
        assert res.closed and res.vertices[0] == res.vertices[-1]
        assert set(res.vertices) == set(T.vertices_at(1))
        for a, b in zip(res.vertices, res.vertices[1:]):
            assert a == b or (min(a, b), max(a, b)) in T.sphere(1).simplices

    def test_single_edge(self):
        e = [vid("2:0"), vid("1:1")]
        out = push_path(X, T, 1, e).vertices
        assert 1 <= len(out) <= 3

    def test_rejects_low_sphere(self):
        with pytest.raises(ValueError):
            push_path(X, T, 2, [vid("1:0")])
