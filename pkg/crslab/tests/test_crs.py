"""Tests for CRS parameters, exact laws, samplers and limits"""
import pytest
from fractions import Fraction

from crslab.crs import (
    ANNIHILATOR,
    KERNEL,
    MARGINAL_CSV_COLUMNS,
    CrsParam,
    SequenceDescriptor,
    SubgroupDistribution,
    TruncSubgroup,
    apply_automorphism,
    automorphism_generators,
    char_subgroups,
    classify_limit,
    elementary_tv_sequence,
    enumerate_params,
    evaluation_zero_probability,
    evaluation_zero_probability_bruteforce,
    exact_distribution,
    from_json_dict,
    intersection_dim_counts,
    iter_samples,
    marginal_csv_rows,
    monte_carlo_distribution,
    normalize_side,
    pushforward_ann,
    sample_subgroup,
    to_json_dict,
    tv_distance,
    tv_to_limit,
    within_sigma,
)
from crslab.finab import FinAbGroup, enumerate_groups, is_over
from crslab.qlinalg import vtilde, vtilde_vector
from crslab.utils.errors import DomainError, ResourceLimitError, UnsupportedParameterError

TRIVIAL = FinAbGroup()
Z2 = FinAbGroup((2,))


def bridge_params():
    """Every parameter for n <= 4 with |F| <= 4"""
    return [p for n in range(1, 5) for p in enumerate_params(n, 4)]


class TestParams:
    """Test parameter validity and enumeration"""

    def test_prime_case(self):
        """Test the parameters for n = 2"""
        params = enumerate_params(2, 4)
        assert [(p.m, p.group) for p in params] == [
            (1, TRIVIAL), (1, Z2), (1, FinAbGroup((2, 2))), (2, TRIVIAL),
        ]

    def test_trivial_ambient(self):
        """Test n = 1 has a single parameter"""
        assert [(p.m, p.group) for p in enumerate_params(1, 10)] == [(1, TRIVIAL)]

    def test_n_four(self):
        """Test (2, Z/4) is valid and (2, Z/2) is not"""
        pairs = {(p.m, p.group) for p in enumerate_params(4, 4)}
        assert (2, FinAbGroup((4,))) in pairs
        assert (2, Z2) not in pairs

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8, 12])
    def test_matches_brute_force_filter(self, n):
        """Test enumeration against a filter over every (m, F)"""
        expected = {
            (m, g)
            for m in range(1, n + 1) if n % m == 0
            for g in enumerate_groups(8)
            if n % g.exponent() == 0 and is_over(g, m)
        }
        assert {(p.m, p.group) for p in enumerate_params(n, 8)} == expected

    def test_untwisted_enumeration(self):
        """Test n = 0 cuts m at max_order"""
        params = enumerate_params(0, 2)
        assert [(p.m, p.group) for p in params] == [
            (0, TRIVIAL), (1, TRIVIAL), (1, Z2), (2, TRIVIAL),
        ]

    def test_sorted_and_unique(self):
        """Test canonical order without repeats"""
        params = enumerate_params(12, 12)
        keys = [p.sort_key() for p in params]
        assert keys == sorted(keys)
        assert len(set(params)) == len(params)

    @pytest.mark.parametrize("n,m,group,message", [
        (4, 3, TRIVIAL, "m must divide n"),
        (4, 2, Z2, "F must be over m"),
        (2, 1, FinAbGroup((4,)), "nF must vanish"),
        (0, 0, Z2, "F must be over m"),
    ])
    def test_invalid_params(self, n, m, group, message):
        """Test each violated condition is named"""
        with pytest.raises(DomainError, match=message):
            CrsParam(n, m, group)

    def test_text(self):
        """Test the printed form"""
        assert str(CrsParam(2, 2)) == "(2, trivial)"
        assert str(CrsParam(4, 1, FinAbGroup((2, 4)))) == "(1, Z/2 + Z/4)"

    def test_char_subgroups(self):
        """Test characteristic subgroup markers"""
        assert char_subgroups(4) == [0, 1, 2, 4]
        assert char_subgroups(1) == [0, 1]
        assert char_subgroups(7) == [0, 1, 7]
        assert char_subgroups(0, bound=3) == [0, 1, 2, 3]
        with pytest.raises(DomainError):
            char_subgroups(0)


class TestExactDistributions:
    """Test exact laws over the finite Hom spaces"""

    def test_kernel_side_elementary(self):
        """Test (1, Z/2) on (Z/2)^3: full group and the 7 hyperplanes, 1/8 each"""
        dist = exact_distribution(CrsParam(2, 1, Z2), KERNEL, 3)
        assert len(dist) == 8
        assert all(p == Fraction(1, 8) for _, p in dist.entries)
        assert dist.probability(TruncSubgroup.full(2, 3)) == Fraction(1, 8)
        assert sorted(s.order for s in dist.support) == [4] * 7 + [8]

    def test_annihilator_side_elementary(self):
        """Test (1, Z/2) on (Z/2)^2: zero and the 3 lines, 1/4 each"""
        dist = exact_distribution(CrsParam(2, 1, Z2), ANNIHILATOR, 2)
        assert len(dist) == 4
        assert dist.probability(TruncSubgroup.zero(2, 2)) == Fraction(1, 4)
        assert all(p == Fraction(1, 4) for _, p in dist.entries)

    def test_trivial_group_is_point_mass(self):
        """Test (n, trivial) on both sides"""
        param = CrsParam(4, 4)
        assert exact_distribution(param, KERNEL, 2).support == [TruncSubgroup.zero(4, 2)]
        assert exact_distribution(param, ANNIHILATOR, 2).support == [TruncSubgroup.full(4, 2)]
        assert exact_distribution(CrsParam(3, 1), KERNEL, 2).support == [TruncSubgroup.full(3, 2)]
        assert exact_distribution(CrsParam(3, 1), ANNIHILATOR, 2).support == [TruncSubgroup.zero(3, 2)]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_full_kernel_matches_rank_law(self, n):
        """Test P(Ker h = everything) = vtilde(n, n, 1, 2)"""
        dist = exact_distribution(CrsParam(2, 1, Z2), KERNEL, n)
        assert dist.probability(TruncSubgroup.full(2, n)) == vtilde(n, n, 1, 2)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_kernel_dimensions_match_rank_law(self, n):
        """Test the law of dim Ker h for h into (Z/2)^2"""
        dist = exact_distribution(CrsParam(2, 1, FinAbGroup((2, 2))), KERNEL, n)
        by_dim = [Fraction(0)] * (n + 1)
        for subgroup, probability in dist.entries:
            by_dim[subgroup.order.bit_length() - 1] += probability
        assert by_dim == vtilde_vector(n, 2, 2)

    def test_duality_bridge(self):
        """Test pushforward by Ann of the kernel side is the annihilator side"""
        for param in bridge_params():
            for coords in (1, 2, 3):
                kernel_side = exact_distribution(param, KERNEL, coords)
                annihilator_side = exact_distribution(param, ANNIHILATOR, coords)
                assert pushforward_ann(kernel_side) == annihilator_side

    def test_pushforward_is_involution(self):
        """Test applying Ann twice"""
        dist = exact_distribution(CrsParam(4, 1, FinAbGroup((2, 2))), KERNEL, 2)
        assert pushforward_ann(pushforward_ann(dist)) == dist
        zero = SubgroupDistribution.point_mass(TruncSubgroup.zero(4, 2))
        assert pushforward_ann(zero) == SubgroupDistribution.point_mass(TruncSubgroup.full(4, 2))

    def test_automorphism_invariance(self):
        """Test exact laws are fixed by generators of GL_c(Z/n)"""
        for param in bridge_params():
            for coords in (1, 2, 3):
                for side in (KERNEL, ANNIHILATOR):
                    dist = exact_distribution(param, side, coords)
                    for matrix in automorphism_generators(param.ambient_n, coords):
                        assert apply_automorphism(dist, matrix) == dist

    def test_automorphism_generators(self):
        """Test swaps, one transvection and one scaling"""
        generators = automorphism_generators(3, 2)
        assert [[0, 1], [1, 0]] in generators
        assert [[1, 0], [1, 1]] in generators
        assert [[2, 0], [0, 1]] in generators

    def test_non_invariant_law_moves(self):
        """Test a point mass off the diagonal is moved by a swap"""
        dist = SubgroupDistribution.point_mass(TruncSubgroup.span(4, 2, [[1, 0]]))
        assert apply_automorphism(dist, [[0, 1], [1, 0]]) != dist

    def test_cap(self):
        """Test exact laws refuse oversized Hom spaces"""
        with pytest.raises(ResourceLimitError):
            exact_distribution(CrsParam(2, 1, FinAbGroup((2, 2, 2))), KERNEL, 3, cap=100)

    def test_untwisted_not_samplable(self, rng):
        """Test ambient n = 0 has no finite truncation"""
        param = CrsParam(0, 1, Z2)
        with pytest.raises(UnsupportedParameterError):
            exact_distribution(param, KERNEL, 2)
        with pytest.raises(UnsupportedParameterError):
            sample_subgroup(param, ANNIHILATOR, 2, rng)

    def test_side_aliases(self):
        """Test short and long side names"""
        assert normalize_side("ker") == KERNEL
        assert normalize_side("Annihilator") == ANNIHILATOR
        with pytest.raises(DomainError):
            normalize_side("left")


class TestDistributionValues:
    """Test distribution values and TV distance"""

    def test_mass_must_be_one(self):
        """Test entries must sum to 1"""
        with pytest.raises(DomainError):
            SubgroupDistribution(2, 1, ((TruncSubgroup.zero(2, 1), Fraction(1, 2)),))

    def test_tv_examples(self):
        """Test identical, disjoint and mixed cases"""
        dist = exact_distribution(CrsParam(2, 1, Z2), KERNEL, 2)
        full = SubgroupDistribution.point_mass(TruncSubgroup.full(2, 2))
        zero = SubgroupDistribution.point_mass(TruncSubgroup.zero(2, 2))
        assert tv_distance(dist, dist) == 0
        assert tv_distance(full, zero) == 1
        assert tv_distance(dist, full) == Fraction(3, 4)

    def test_tv_requires_same_group(self):
        """Test distributions on different groups"""
        with pytest.raises(DomainError):
            tv_distance(
                SubgroupDistribution.point_mass(TruncSubgroup.zero(2, 2)),
                SubgroupDistribution.point_mass(TruncSubgroup.zero(4, 2)),
            )

    def test_marginal_csv_rows(self):
        """Test the k, exact, empirical, abs_err rows"""
        assert MARGINAL_CSV_COLUMNS == ("k", "exact", "empirical", "abs_err")
        exact = [Fraction(1, 2), Fraction(1, 2), Fraction(0)]
        empirical = [Fraction(3, 5), Fraction(2, 5), Fraction(0)]
        assert marginal_csv_rows(exact, empirical) == [
            ["0", "1/2", "3/5", "1/10"],
            ["1", "1/2", "2/5", "1/10"],
            ["2", "0/1", "0/1", "0/1"],
        ]

    def test_marginal_csv_rows_length_mismatch(self):
        """Test marginals of different lengths are rejected"""
        with pytest.raises(DomainError):
            marginal_csv_rows([Fraction(1)], [Fraction(1, 2), Fraction(1, 2)])

    def test_json_document(self):
        """Test the JSON document shape and reading it back"""
        dist = exact_distribution(CrsParam(2, 1, Z2), ANNIHILATOR, 2)
        document = to_json_dict(dist)
        assert document["modulus"] == 2
        assert document["rank"] == 2
        assert document["entries"][0] == {"gens": [], "prob": "1/4"}
        assert from_json_dict(document) == dist


class TestSampling:
    """Test seeded samplers against exact laws"""

    def test_samples_reproducible(self):
        """Test the same seed replays the same subgroups"""
        param = CrsParam(4, 1, FinAbGroup((2, 4)))
        first = list(iter_samples(param, KERNEL, 3, 50, seed=7))
        second = list(iter_samples(param, KERNEL, 3, 50, seed=7))
        assert first == second
        assert first != list(iter_samples(param, KERNEL, 3, 50, seed=8))

    def test_worker_count_does_not_change_counts(self):
        """Test merged stream counts are independent of the thread count"""
        param = CrsParam(2, 1, Z2)
        serial = monte_carlo_distribution(param, KERNEL, 2, 25_000, seed=3, workers=1)
        threaded = monte_carlo_distribution(param, KERNEL, 2, 25_000, seed=3, workers=4)
        assert serial == threaded

    def test_samples_in_support(self):
        """Test every sample lies in the exact support"""
        param = CrsParam(4, 2, FinAbGroup((4,)))
        for side in (KERNEL, ANNIHILATOR):
            support = set(exact_distribution(param, side, 2).support)
            assert set(iter_samples(param, side, 2, 200, seed=1)) <= support

    def test_monte_carlo_within_sigma(self):
        """Test empirical subgroup counts against the exact law"""
        param = CrsParam(2, 1, Z2)
        exact = exact_distribution(param, ANNIHILATOR, 2)
        samples = 4000
        counts = monte_carlo_distribution(param, ANNIHILATOR, 2, samples, seed=11)
        assert set(counts) == set(exact.support)
        for subgroup, probability in exact.entries:
            assert within_sigma(counts[subgroup], samples, probability)

    def test_rank_law_monte_carlo(self):
        """Test 10^5 uniform 3 x 3 matrices over F_2 against vtilde"""
        samples = 100_000
        counts = intersection_dim_counts(2, 3, 3, samples, seed=0)
        assert sum(counts) == samples
        for count, probability in zip(counts, vtilde_vector(3, 3, 2)):
            assert within_sigma(count, samples, probability)

    def test_within_sigma(self):
        """Test the band edges"""
        assert within_sigma(50, 100, Fraction(1, 2))
        assert within_sigma(70, 100, Fraction(1, 2))
        assert not within_sigma(71, 100, Fraction(1, 2))


class TestLimits:
    """Test limits of untwisted parameter sequences"""

    def test_diverging_n(self):
        """Test n -> infinity gives the point mass at the whole dual"""
        assert classify_limit(SequenceDescriptor("diverges")) == CrsParam(0, 0)

    def test_diverging_maxorder(self):
        """Test unbounded element orders"""
        descriptor = SequenceDescriptor("constant", n=3, stable_part=Z2, maxorder_trend="diverges")
        assert classify_limit(descriptor) == CrsParam(0, 0)

    def test_bounded_regime(self):
        """Test lcm of n and the growing blocks"""
        assert classify_limit(SequenceDescriptor("constant", n=2, growing_blocks=(2,))) == CrsParam(0, 2)
        descriptor = SequenceDescriptor("constant", n=1, stable_part=FinAbGroup((3,)), growing_blocks=(2,))
        assert classify_limit(descriptor) == CrsParam(0, 2, FinAbGroup((3,)))
        descriptor = SequenceDescriptor("constant", n=2, growing_blocks=(4, 3))
        assert classify_limit(descriptor) == CrsParam(0, 12)

    def test_stable_part_reduced_over_m(self):
        """Test a stable part not over m is replaced by its lift"""
        descriptor = SequenceDescriptor("constant", n=2, stable_part=FinAbGroup((2, 8)), growing_blocks=(2,))
        assert classify_limit(descriptor) == CrsParam(0, 2, FinAbGroup((8,)))

    def test_zero_m(self):
        """Test n = 0 without growing blocks"""
        assert classify_limit(SequenceDescriptor("constant", n=0)) == CrsParam(0, 0)

    def test_descriptor_validation(self):
        """Test malformed descriptors"""
        with pytest.raises(DomainError):
            SequenceDescriptor("sideways")
        with pytest.raises(DomainError):
            SequenceDescriptor("constant", n=2, growing_blocks=(6,))

    def test_tv_witness_strictly_decreasing(self):
        """Test TV of (1, (Z/2)^k) to (2, trivial), k = 1..6"""
        distances = elementary_tv_sequence(6)
        assert len(distances) == 6
        assert all(a > b for a, b in zip(distances, distances[1:]))
        for k, distance in enumerate(distances, start=1):
            full_rank = (1 - Fraction(1, 2 ** k)) * (1 - Fraction(2, 2 ** k))
            assert distance == 1 - full_rank
        assert distances[0] == 1

    def test_tv_to_limit_at_limit(self):
        """Test the limit parameter itself is at distance 0"""
        descriptor = SequenceDescriptor("constant", n=2, growing_blocks=(2,))
        assert tv_to_limit([CrsParam(2, 2)], descriptor, ambient=2) == [0]

    def test_evaluation_probability(self):
        """Test gcd(k, m)/m against counting"""
        for m in range(1, 13):
            for k in range(0, 13):
                assert evaluation_zero_probability(k, m) == evaluation_zero_probability_bruteforce(k, m)
        assert evaluation_zero_probability(2, 4) == Fraction(1, 2)
