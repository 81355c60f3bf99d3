"""Complexes and the exact homology engine, cross-checked against a plain
Fraction-elimination oracle."""

import random

import pytest
from oracles import (
    faces_from_facets,
    fraction_rank,
    mod_rank,
    oracle_homology,
    oracle_sr_facets,
    random_gens,
)

from monomial_lab.complexes import (
    GF2,
    RATIONALS,
    FieldSpec,
    SimplicialComplex,
    reduced_homology_dims,
    restrict_complex,
    stanley_reisner,
)
from monomial_lab.core import Ideal, InputError, Monomial, minimal_generators
from monomial_lab.exact_rank import rank_bareiss, rank_f2_columns, rank_mod_p

# minimal 6-vertex triangulation of the real projective plane: 10 facets,
# every edge in exactly two triangles, Euler characteristic 1
RP2_FACETS = [
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
    (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
]


def ideal(n, *var_tuples):
    return minimal_generators([Monomial.of(n, *vs) for vs in var_tuples], ambient=n)


class TestFieldSpec:
    def test_prime_validation(self):
        with pytest.raises(InputError):
            FieldSpec(4)
        with pytest.raises(InputError):
            FieldSpec(1)
        assert FieldSpec(32003).label == "GF(32003)"
        assert RATIONALS.label == "Q"

    @pytest.mark.parametrize("text,p", [("q", None), ("Q", None), ("rationals", None),
                                        ("p:2", 2), ("p:32003", 32003), ("7", 7)])
    def test_parse(self, text, p):
        assert FieldSpec.parse(text).p == p

    def test_parse_error(self):
        with pytest.raises(InputError):
            FieldSpec.parse("gf4")


class TestSimplicialComplex:
    def test_facets_canonicalized(self):
        C = SimplicialComplex.from_vertex_sets(3, [(1,), (1, 2), (3,), (1, 2)])
        assert C.facets == (0b100, 0b011)
        assert C.facet_vertex_sets() == ((3,), (1, 2))

    def test_void_vs_irrelevant(self):
        void = SimplicialComplex(3)
        irr = SimplicialComplex(3, (0,))
        assert void.is_void and not irr.is_void
        assert irr.dim == -1
        with pytest.raises(InputError):
            void.dim


class TestStanleyReisner:
    def test_examples(self):
        assert stanley_reisner(ideal(2, (1, 2))).facet_vertex_sets() == ((1,), (2,))
        assert stanley_reisner(Ideal(3)).facet_vertex_sets() == ((1, 2, 3),)
        tri = stanley_reisner(ideal(3, (1, 2), (2, 3), (1, 3)))
        assert tri.facet_vertex_sets() == ((1,), (2,), (3,))

    def test_against_subset_scan(self):
        rng = random.Random(11)
        for _ in range(60):
            n = rng.randint(1, 7)
            gens = random_gens(rng, n, rng.randint(0, 5))
            I = Ideal.from_masks(n, gens)
            assert stanley_reisner(I).facets == oracle_sr_facets(gens, n)


class TestRestrictComplex:
    def test_examples(self):
        full = SimplicialComplex.from_vertex_sets(3, [(1, 2, 3)])
        assert restrict_complex(full, {1, 2}).facet_vertex_sets() == ((1, 2),)
        pts = SimplicialComplex.from_vertex_sets(3, [(1,), (2,), (3,)])
        assert restrict_complex(pts, set()).facets == (0,)
        void = SimplicialComplex(3)
        assert restrict_complex(void, {1}).is_void

    def test_matches_face_filter(self):
        rng = random.Random(12)
        for _ in range(40):
            n = rng.randint(1, 6)
            gens = random_gens(rng, n, rng.randint(0, 4))
            C = stanley_reisner(Ideal.from_masks(n, gens))
            sigma = rng.randrange(1 << n)
            R = restrict_complex(C, sigma)
            want = sorted(f for f in faces_from_facets(C.facets, n) if f & ~sigma == 0)
            assert sorted(faces_from_facets(R.facets, n)) == want


class TestHomology:
    def test_circle(self):
        tri = SimplicialComplex.from_vertex_sets(3, [(1, 2), (2, 3), (1, 3)])
        assert reduced_homology_dims(tri, RATIONALS) == {-1: 0, 0: 0, 1: 1}

    def test_two_points(self):
        two = SimplicialComplex.from_vertex_sets(2, [(1,), (2,)])
        assert reduced_homology_dims(two, RATIONALS) == {-1: 0, 0: 1}

    def test_irrelevant_and_void(self):
        assert reduced_homology_dims(SimplicialComplex(2, (0,)), RATIONALS) == {-1: 1}
        assert reduced_homology_dims(SimplicialComplex(2), RATIONALS) == {}

    def test_projective_plane_characteristics(self):
        rp2 = SimplicialComplex.from_vertex_sets(6, RP2_FACETS)
        over_q = reduced_homology_dims(rp2, RATIONALS)
        over_2 = reduced_homology_dims(rp2, GF2)
        assert over_q == {-1: 0, 0: 0, 1: 0, 2: 0}
        assert over_2 == {-1: 0, 0: 0, 1: 1, 2: 1}
        # mod-p dims dominate the rational ones
        assert all(over_q[k] <= over_2[k] for k in over_q)

    def test_sphere(self):
        # boundary of the tetrahedron
        sphere = SimplicialComplex.from_vertex_sets(
            4, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]
        )
        assert reduced_homology_dims(sphere, RATIONALS) == {-1: 0, 0: 0, 1: 0, 2: 1}

    def test_cone_has_no_homology(self):
        rng = random.Random(13)
        for _ in range(30):
            n = rng.randint(2, 6)
            facets = []
            for _ in range(rng.randint(1, 5)):
                f = {1}
                f.update(rng.sample(range(2, n + 1), rng.randint(0, n - 1)))
                facets.append(tuple(f))
            cone = SimplicialComplex.from_vertex_sets(n, facets)
            dims = reduced_homology_dims(cone, RATIONALS)
            assert all(v == 0 for v in dims.values())

    def test_facet_order_irrelevant(self):
        rng = random.Random(14)
        facets = list(RP2_FACETS)
        rng.shuffle(facets)
        a = reduced_homology_dims(SimplicialComplex.from_vertex_sets(6, facets), GF2)
        b = reduced_homology_dims(SimplicialComplex.from_vertex_sets(6, RP2_FACETS), GF2)
        assert a == b

    def test_against_fraction_oracle(self):
        rng = random.Random(15)
        for _ in range(60):
            n = rng.randint(1, 6)
            count = rng.randint(0, 6)
            facets = [rng.randint(1, (1 << n) - 1) for _ in range(count)] or [0]
            C = SimplicialComplex(n, tuple(facets))
            got = reduced_homology_dims(C, RATIONALS)
            faces = faces_from_facets(C.facets, n)
            want = oracle_homology(faces, n)
            assert {k: v for k, v in got.items()} == want

    def test_two_large_primes_agree_with_rationals(self):
        rng = random.Random(16)
        for _ in range(25):
            n = rng.randint(1, 6)
            facets = [rng.randint(1, (1 << n) - 1) for _ in range(rng.randint(1, 6))]
            C = SimplicialComplex(n, tuple(facets))
            over_q = reduced_homology_dims(C, RATIONALS)
            for p in (32003, 1000003):
                assert reduced_homology_dims(C, FieldSpec(p)) == over_q


class TestRankKernels:
    def test_known_singular_matrix(self):
        rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
        assert rank_bareiss([r[:] for r in rows]) == 2
        assert rank_mod_p([r[:] for r in rows], 5) == 2

    def test_random_against_fraction_elimination(self):
        rng = random.Random(17)
        for _ in range(80):
            nr, nc = rng.randint(1, 8), rng.randint(1, 8)
            rows = [[rng.randint(-3, 3) for _ in range(nc)] for _ in range(nr)]
            want = fraction_rank(rows)
            assert rank_bareiss([r[:] for r in rows]) == want
            big = 1000003
            assert rank_mod_p([r[:] for r in rows], big) == mod_rank(rows, big)
            cols = []
            for j in range(nc):
                col = 0
                for i in range(nr):
                    if rows[i][j] % 2:
                        col |= 1 << i
                cols.append(col)
            assert rank_f2_columns(cols) == mod_rank(rows, 2)

    def test_f2_rank_bounds_rational_rank(self):
        rng = random.Random(18)
        for _ in range(60):
            nr, nc = rng.randint(1, 7), rng.randint(1, 7)
            rows = [[rng.randint(-2, 2) for _ in range(nc)] for _ in range(nr)]
            cols = []
            for j in range(nc):
                col = 0
                for i in range(nr):
                    if rows[i][j] % 2:
                        col |= 1 << i
                cols.append(col)
            assert rank_f2_columns(cols) <= fraction_rank(rows)
