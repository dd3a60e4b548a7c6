import pytest

from systolic.balls import BallTower
from systolic.chamber import chamber_report, r_condition
from systolic.complex import faces, link
from systolic.errors import MalformedInputError
from systolic.generators import flat_torus, glued_halfplanes, platonic, triangular_disk, wheel
from systolic.homology import components, homology
from systolic.largeness import check_systolic, is_flag, is_k_large, is_locally_k_large

import oracles

CORPUS = [
    triangular_disk(1), triangular_disk(3), flat_torus(7), flat_torus(8),
    platonic("tetra_boundary"), platonic("octahedron"), platonic("icosahedron"),
    wheel(3), wheel(4), wheel(5), wheel(6), wheel(8),
    glued_halfplanes(1, 3), glued_halfplanes(2, 4), glued_halfplanes(3, 4),
]

CHECKS = {
    "flag": lambda X: is_flag(X).is_flag,
    "not-flag": lambda X: not is_flag(X).is_flag,
    "6-large": lambda X: is_k_large(X, 6).is_k_large,
    "not-6-large": lambda X: not is_k_large(X, 6).is_k_large,
    "locally-6-large": lambda X: is_locally_k_large(X, 6).holds,
    "not-locally-6-large": lambda X: not is_locally_k_large(X, 6).holds,
    "systolic": lambda X: check_systolic(X).verified,
    "chamber": lambda X: chamber_report(X).is_chamber,
    "normal": lambda X: chamber_report(X).normal,
    "pseudomanifold": lambda X: chamber_report(X).pseudomanifold,
    "connected": lambda X: len(components(X)) == 1,
    "sphere": lambda X: homology(X).group(2) == "Z" and homology(X).group(1) == "0",
}


@pytest.mark.parametrize("g", CORPUS, ids=lambda g: g.label)
def test_self_verifying_tags(g):
    X = g.complex
    assert all(f in X.simplices for s in X.simplices for f in faces(s))
    for tag in g.tags:
        assert CHECKS[tag](X), tag


class TestDisk:
    @pytest.mark.parametrize("R", [1, 2, 3, 5])
    def test_vertex_count(self, R):
        assert len(triangular_disk(R).complex.vertices) == 1 + 3 * R * (R + 1)

    def test_counts(self):
        assert triangular_disk(1).complex.f_vector == (7, 12, 6)
        assert len(triangular_disk(2).complex.vertices) == 19

    def test_center_link(self):
        L = link(triangular_disk(2).complex, (0,))
        assert L.f_vector == (6, 6)

    def test_nested(self):
        for R in range(1, 5):
            assert triangular_disk(R).complex.simplices <= triangular_disk(R + 1).complex.simplices

    def test_safe_radius(self):
        g = triangular_disk(4)
        assert g.safe_radius == 3
        T = BallTower(g.complex, g.base)
        assert not set(T.vertices_at(g.safe_radius)) & g.frontier

    def test_rejects_zero(self):
        with pytest.raises(MalformedInputError):
            triangular_disk(0)


class TestTorus:
    def test_counts(self):
        X = flat_torus(7).complex
        assert X.f_vector == (49, 147, 98) and X.euler_characteristic == 0

    def test_homology(self):
        assert homology(flat_torus(7).complex).group(1) == "Z^2"

    def test_rejects_small(self):
        with pytest.raises(MalformedInputError):
            flat_torus(6)

    def test_small_quotients_are_not_large(self):
        # the reason for the bound: a 6x6 quotient has short essential induced cycles
        from systolic.complex import build_complex

        n = 6
        v = lambda x, y: (x % n) * n + (y % n)  # noqa: E731
        tris = [t for x in range(n) for y in range(n)
                for t in ((v(x, y), v(x + 1, y), v(x, y + 1)), (v(x, y), v(x + 1, y), v(x + 1, y - 1)))]
        assert not is_k_large(build_complex(tris), 7).is_k_large


class TestPlatonic:
    def test_examples(self):
        assert not is_flag(platonic("tetra_boundary").complex).is_flag
        octa, ico = platonic("octahedron").complex, platonic("icosahedron").complex
        assert octa.f_vector == (6, 12, 8) and ico.f_vector == (12, 30, 20)
        for X in (octa, ico):
            rep = is_k_large(X, 6)
            assert rep.is_flag and not rep.is_k_large
        # icosahedron vertex links are induced 5-cycles
        assert all(link(ico, (v,)).f_vector == (5, 5) for v in ico.vertices)
        assert oracles.chordless_cycles(link(ico, (0,)), 5)

    def test_unknown(self):
        with pytest.raises(MalformedInputError):
            platonic("cube")


class TestWheel:
    def test_six(self):
        X = wheel(6).complex
        assert check_systolic(X).verified and r_condition(X, 0).holds

    def test_five(self):
        rep = is_locally_k_large(wheel(5).complex, 6)
        assert not rep.holds and rep.failing_simplex == (0,)

    def test_small(self):
        with pytest.raises(MalformedInputError):
            wheel(2)


class TestGlued:
    def test_single_patch(self):
        g = glued_halfplanes(1, 4)
        r = chamber_report(g.complex)
        assert r.is_chamber and r.normal and not r.pseudomanifold

    def test_two_patches(self):
        g = glued_halfplanes(2, 5)
        X = g.complex
        assert not r_condition(X, g.marks["b"][1]).holds
        assert check_systolic(X).verified

    def test_gluing_order_follows_lowest_index(self):
        g = glued_halfplanes(6, 6)
        assert g.marks["gluings"] == [
            (2, 1, "right"), (3, 1, "left"), (4, 2, "right"), (5, 2, "left"), (6, 3, "right"),
        ]
        assert g.marks["glued_b"] == [1, 2, 3]

    def test_seams_are_identified(self):
        g = glued_halfplanes(2, 4)
        X = g.complex
        # a_2 = (0, 1) in patch 2 is identified with b_1
        assert X.name(g.marks["b"][1]) == "b1"
        patch = [(x, y) for y in range(5) for x in range(-4, 5) if (abs(x) + y + abs(x + y)) // 2 <= 4]
        assert len(X.vertices) == 2 * len(patch) - 4
        assert len(g.marks["seams"]) == 4

    def test_links_are_six_large(self):
        g = glued_halfplanes(3, 5)
        assert is_locally_k_large(g.complex, 6).holds

    def test_parameters(self):
        with pytest.raises(MalformedInputError):
            glued_halfplanes(3, 2)
        with pytest.raises(MalformedInputError):
            glued_halfplanes(0, 4)

    def test_deterministic(self):
        a, b = glued_halfplanes(3, 5), glued_halfplanes(3, 5)
        assert a.complex == b.complex and dict(a.complex.names) == dict(b.complex.names)
