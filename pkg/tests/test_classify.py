"""Classification, profiles, Cohen-Macaulay shapes, and connectivity."""

from __future__ import annotations

from fractions import Fraction

import pytest

from polymat import (
    MaximalPower,
    Monomial,
    MonomialIdeal,
    NotUnmixed,
    PrimePowerProduct,
    PrimePowerTimesMatroidal,
    UnmixedMatroidal,
    VariablePrime,
    VeroneseTypeSpec,
    associated_primes,
    classify_unmixed_polymatroidal,
    cm_shape,
    colon,
    construct_multipartite_edge_ideal,
    construct_veronese_type,
    height,
    height_bounds_report,
    hypergraph_profile,
    is_cohen_macaulay,
    is_connected_in_codim_one,
    is_matroidal,
    is_unmixed,
    minimalize,
    parse_ideal,
    reconstruct,
    support,
)
from polymat.errors import Mixed, NotFullySupported, NotPolymatroidal
from polymat.polymatroid import BlockPartition


def mono(powers: dict[int, int], n: int) -> Monomial:
    return Monomial.from_powers(powers, n)


class TestHypergraphProfile:
    def test_tripartite_2_balanced(self, tripartite_d3):
        profile = hypergraph_profile(tripartite_d3)
        assert (profile.degree, profile.block_count, profile.block_size) == (3, 3, 2)
        assert profile.complete and profile.balanced

    def test_tripartite_3_balanced(self, tripartite_9_d3):
        profile = hypergraph_profile(tripartite_9_d3)
        assert (profile.degree, profile.block_count, profile.block_size) == (3, 3, 3)
        assert profile.complete and profile.balanced

    def test_complete_but_unbalanced(self):
        ideal = parse_ideal("x1*x2, x1*x3", 3)
        profile = hypergraph_profile(ideal)
        assert profile.complete
        assert not profile.balanced
        assert profile.block_size is None
        assert not is_unmixed(ideal)

    def test_unmixed_without_completeness_exists(self, prime_times_triangle):
        # Unmixed does not force the complete balanced shape: a disjoint
        # prime-times-triangle product is a witness.
        assert is_matroidal(prime_times_triangle)
        assert is_unmixed(prime_times_triangle)
        profile = hypergraph_profile(prime_times_triangle)
        assert not profile.complete
        assert not profile.balanced

    def test_rejects_non_matroidal(self, square_times_prime):
        from polymat.errors import NotMatroidal

        with pytest.raises(NotMatroidal):
            hypergraph_profile(square_times_prime)


class TestClassify:
    def test_square_times_prime_is_disjoint_prime_powers(self, square_times_prime):
        outcome = classify_unmixed_polymatroidal(square_times_prime)
        assert isinstance(outcome, PrimePowerProduct)
        assert outcome.factors == (
            (VariablePrime.of(1, 2), 2),
            (VariablePrime.of(3, 4), 1),
        )
        assert sum(a for _, a in outcome.factors) == 3
        assert reconstruct(outcome, 4) == square_times_prime

    def test_square_times_triangle_has_residual_factor(
        self, square_times_triangle, triangle_on_345
    ):
        outcome = classify_unmixed_polymatroidal(square_times_triangle)
        assert isinstance(outcome, PrimePowerTimesMatroidal)
        assert outcome.factors == ((VariablePrime.of(1, 2), 2),)
        assert outcome.tail == triangle_on_345
        assert reconstruct(outcome, 5) == square_times_triangle

    def test_mixed_product_witness(self, mixed_principal_times_prime):
        outcome = classify_unmixed_polymatroidal(mixed_principal_times_prime)
        assert isinstance(outcome, NotUnmixed)
        p, q = outcome.witness
        assert {p.height, q.height} == {1, 2}
        assert reconstruct(outcome, 2) is None

    def test_full_power(self):
        cube = VariablePrime.of(1, 2).power(3, 2)
        outcome = classify_unmixed_polymatroidal(cube)
        assert outcome == MaximalPower(degree=3)
        assert reconstruct(outcome, 2) == cube

    def test_degree_one_full_ideal_is_maximal_power(self):
        full = VariablePrime.of(1, 2, 3).as_ideal(3)
        assert classify_unmixed_polymatroidal(full) == MaximalPower(degree=1)

    def test_squarefree_overlapping_case(self, tripartite_d2):
        outcome = classify_unmixed_polymatroidal(tripartite_d2)
        assert isinstance(outcome, UnmixedMatroidal)
        assert outcome.profile.complete and outcome.profile.balanced
        assert reconstruct(outcome, 6) == tripartite_d2

    def test_prime_times_triangle_is_case_three(self, prime_times_triangle):
        outcome = classify_unmixed_polymatroidal(prime_times_triangle)
        assert isinstance(outcome, PrimePowerTimesMatroidal)
        assert outcome.factors == ((VariablePrime.of(1, 2), 1),)
        assert reconstruct(outcome, 5) == prime_times_triangle

    def test_requires_exchange_condition(self):
        path = parse_ideal("x1*x2, x2*x3, x3*x4", 4)
        with pytest.raises(NotPolymatroidal):
            classify_unmixed_polymatroidal(path)

    def test_requires_full_support(self, triangle_on_345):
        with pytest.raises(NotFullySupported):
            classify_unmixed_polymatroidal(triangle_on_345)

    def test_degree_two_unmixed_is_squarefree_or_full_power(self):
        # Degree-2 structure: every unmixed exchange-closed degree-2 ideal is
        # either squarefree or the full square, checked over seeded samples
        # including non-squarefree ones.
        import random

        from polymat import restrict_to_support, sample_polymatroidal

        rng = random.Random(55)
        seen_nonsquarefree = 0
        for _ in range(150):
            n = rng.randint(2, 6)
            ideal = restrict_to_support(sample_polymatroidal(rng, n, 2))
            if not ideal.is_squarefree:
                seen_nonsquarefree += 1
            if is_unmixed(ideal):
                full = VariablePrime(frozenset(range(1, ideal.ambient + 1)))
                assert ideal.is_squarefree or ideal == full.power(2, ideal.ambient)
        assert seen_nonsquarefree > 10


class TestCohenMacaulay:
    def test_full_square_is_cm(self):
        assert is_cohen_macaulay(VariablePrime.of(1, 2, 3).power(2, 3))

    def test_triangle_is_cm(self, triangle):
        assert cm_shape(triangle) == "squarefree-veronese"

    def test_square_times_prime_not_cm(self, square_times_prime):
        assert not is_cohen_macaulay(square_times_prime)

    def test_principal_is_cm(self):
        ideal = minimalize([mono({1: 2, 2: 1}, 3)], 3)
        assert cm_shape(ideal) == "principal"

    def test_veronese_on_partial_support(self):
        ideal = VariablePrime.of(1, 2).power(2, 4)
        assert cm_shape(ideal) == "veronese"


class TestCodimOneConnectivity:
    def test_triangle_connected(self, triangle):
        assert is_connected_in_codim_one(triangle)

    def test_square_times_prime_disconnected(self, square_times_prime):
        assert not is_connected_in_codim_one(square_times_prime)

    def test_single_minimal_prime_connected(self):
        assert is_connected_in_codim_one(VariablePrime.of(1, 2).power(3, 2))

    def test_mixed_heights_disconnected(self):
        # (x1*x2, x1*x3) has minimal primes (x1) and (x2, x3) of heights 1
        # and 2, so equidimensionality already fails.
        ideal = parse_ideal("x1*x2, x1*x3", 3)
        assert not is_connected_in_codim_one(ideal)

    def test_prime_times_triangle_disconnected(self, prime_times_triangle):
        assert not is_connected_in_codim_one(prime_times_triangle)


class TestHeightBounds:
    def test_tripartite_d3_lower_equality(self, tripartite_d3):
        report = height_bounds_report(tripartite_d3)
        assert report.lower == Fraction(6, 3)
        assert report.upper == 4
        assert report.actual == 2 == report.predicted
        assert report.equality_case == "lower"

    def test_tripartite_d2_no_equality(self, tripartite_d2):
        report = height_bounds_report(tripartite_d2)
        assert report.actual == 4 == report.predicted
        assert report.equality_case is None

    def test_squarefree_veronese_upper_equality(self, squarefree_veronese_4_2):
        report = height_bounds_report(squarefree_veronese_4_2)
        assert report.actual == 3 == report.upper
        assert report.equality_case == "upper"

    def test_mixed_rejected(self):
        ideal = parse_ideal("x1*x2, x1*x3", 3)
        with pytest.raises(Mixed):
            height_bounds_report(ideal)


class TestRealityPins:
    """Regression pins for structural facts discovered by the sweeps.

    These document actual behavior of unmixed squarefree ideals that fall
    outside the complete multipartite shape; the harness reports them as
    counterexamples to the completeness/balance equivalence.
    """

    def test_support_size_constancy_fails_for_prime_times_triangle(
        self, prime_times_triangle
    ):
        sizes = {
            len(support(colon(prime_times_triangle, mono({i: 1}, 5))))
            for i in range(1, 6)
        }
        assert sizes == {3, 4}

    def test_some_colon_support_of_size_n_minus_one_without_veronese(
        self, prime_times_triangle
    ):
        # One colon support has n-1 variables even though the ideal is not
        # the squarefree Veronese, so "some" and "every" genuinely differ.
        sizes = [
            len(support(colon(prime_times_triangle, mono({i: 1}, 5))))
            for i in range(1, 6)
        ]
        assert max(sizes) == 4 == prime_times_triangle.ambient - 1
        assert min(sizes) == 3
        assert cm_shape(prime_times_triangle) is None

    def test_full_pairwise_support_unions_without_veronese(self):
        # Spanning trees of the four-vertex graph with one missing edge
        # (vertices a..d, edges 1=ab, 2=bc, 3=cd, 4=da, 5=ac): every 3-subset
        # except the two triangles {1,2,5} and {3,4,5}. A simple rank-3
        # exchange-closed family where every pairwise colon support union
        # covers all variables, yet not all 3-subsets occur.
        trees = parse_ideal(
            "x1*x2*x3, x1*x2*x4, x1*x3*x4, x1*x3*x5, x1*x4*x5, "
            "x2*x3*x4, x2*x3*x5, x2*x4*x5",
            5,
        )
        assert is_matroidal(trees)
        n = trees.ambient
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                union = support(colon(trees, mono({i: 1}, n))) | support(
                    colon(trees, mono({j: 1}, n))
                )
                assert union == frozenset(range(1, n + 1))
        assert len(trees.generators) == 8 < 10
        assert cm_shape(trees) is None

    def test_balanced_unmixed_incomplete_breaks_block_height_formula(self):
        # Two disjoint triangles: unmixed of height 2, all blocks singletons
        # (balanced, k=1), but the complete-hypergraph height formula would
        # predict k*(m-d+1) = 3.
        two_triangles = parse_ideal(
            "x1*x2*x4*x5, x1*x2*x4*x6, x1*x2*x5*x6, "
            "x1*x3*x4*x5, x1*x3*x4*x6, x1*x3*x5*x6, "
            "x2*x3*x4*x5, x2*x3*x4*x6, x2*x3*x5*x6",
            6,
        )
        assert is_matroidal(two_triangles)
        assert is_unmixed(two_triangles)
        profile = hypergraph_profile(two_triangles)
        assert profile.balanced and profile.block_size == 1
        assert not profile.complete
        assert height(two_triangles) == 2
        assert profile.block_size * (profile.block_count - profile.degree + 1) == 3