"""Tests for free-group words, permutation groups and Schreier graphs"""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.combinatorics import Permutation

from crslab.freegrp import (
    POINTS,
    REGULAR,
    FinGroup,
    FreeWord,
    IndexPSubgroup,
    adyan_word,
    basis_size,
    commutator,
    enumerate_index_p_functionals,
    evaluate_word,
    format_permutation,
    format_word,
    in_k_p,
    index_p_subgroup_count,
    invert,
    is_fully_invariant,
    multiply,
    normalize_functional,
    parse_permutation,
    parse_permutation_list,
    parse_word,
    power,
    reduce_word,
    rewrite_in_basis,
    sample_index_p_subgroup,
    schreier_basis,
    schreier_graph,
    verbal_subgroup,
    word_map_eval,
)
from crslab.qlinalg import gaussian_binomial
from crslab.utils.errors import DomainError, ParseError, ResourceLimitError
from crslab.utils.rng import make_rng

RANK = 3
WORD_EXAMPLES = 10_000

syllables = st.lists(
    st.tuples(st.integers(min_value=1, max_value=RANK), st.integers(min_value=-3, max_value=3)),
    max_size=8,
)
words = syllables.map(lambda s: reduce_word(RANK, s))


def unit(size, index):
    return tuple(1 if i == index else 0 for i in range(size))


class TestWords:
    """Test free reduction and word arithmetic"""

    @given(words)
    @settings(max_examples=WORD_EXAMPLES, deadline=None)
    def test_inverse_cancels(self, u):
        """Test u·u^-1 is the identity"""
        assert multiply(u, invert(u)).is_identity
        assert (~u * u).is_identity

    @given(words, words)
    @settings(max_examples=WORD_EXAMPLES, deadline=None)
    def test_length_subadditive(self, u, v):
        """Test |uv| <= |u| + |v|"""
        assert multiply(u, v).length <= u.length + v.length

    @given(words, words, words)
    @settings(max_examples=WORD_EXAMPLES, deadline=None)
    def test_associative(self, u, v, w):
        """Test (uv)w = u(vw)"""
        assert (u * v) * w == u * (v * w)

    @given(words)
    @settings(max_examples=WORD_EXAMPLES, deadline=None)
    def test_text_form_parses_back(self, u):
        """Test format_word output parses to the same word"""
        assert parse_word(format_word(u), rank=RANK) == u

    def test_reduction_examples(self):
        """Test cancellation and merging of syllables"""
        assert reduce_word(2, [(1, 1), (1, -1), (2, 2)]) == FreeWord(2, ((2, 2),))
        assert reduce_word(2, [(1, 2), (1, 3)]) == FreeWord(2, ((1, 5),))
        assert reduce_word(2, [(1, 1), (2, 1), (2, -1), (1, -1)]).is_identity
        assert reduce_word(1, [(1, 0)]).is_identity

    def test_unreduced_value_rejected(self):
        """Test the constructor enforces reduced syllables"""
        with pytest.raises(DomainError):
            FreeWord(2, ((1, 1), (1, 1)))
        with pytest.raises(DomainError):
            FreeWord(2, ((3, 1),))
        with pytest.raises(DomainError):
            FreeWord(0)

    def test_commutator(self):
        """Test [x1, x2] = x1 x2 x1^-1 x2^-1"""
        x1, x2 = FreeWord.generator(2, 1), FreeWord.generator(2, 2)
        word = commutator(x1, x2)
        assert word.length == 4
        assert format_word(word) == "x1 x2 x1^-1 x2^-1"
        assert commutator(x1, x1).is_identity

    def test_power(self):
        """Test powers of a cyclically reduced word"""
        word = parse_word("x1 x2")
        assert power(word, 3).length == 6
        assert power(word, -1) == invert(word)
        assert power(word, 0).is_identity

    def test_rank_mismatch(self):
        """Test products of words from different free groups"""
        with pytest.raises(DomainError):
            multiply(FreeWord.generator(1, 1), FreeWord.generator(2, 1))

    def test_adyan_word(self):
        """Test the first word and the length 4n²p"""
        assert format_word(adyan_word(1, 2)) == "x1^2 x2^2 x1^-2 x2^-2"
        for n in range(1, 11):
            for p in (2, 3, 5, 7, 11, 13):
                assert adyan_word(n, p).length == 4 * n * n * p

    def test_adyan_needs_prime(self):
        """Test a composite exponent"""
        with pytest.raises(DomainError):
            adyan_word(2, 4)

    def test_parse_word(self):
        """Test the syllable text format"""
        assert parse_word("x1^2 x2^-3 x1") == FreeWord(2, ((1, 2), (2, -3), (1, 1)))
        assert parse_word("x1*x2") == FreeWord(2, ((1, 1), (2, 1)))
        assert parse_word("1", rank=2) == FreeWord.identity(2)
        assert parse_word("x1 x1^-1").is_identity
        assert parse_word("x1", rank=3).rank == 3

    @pytest.mark.parametrize("text,rank", [("y1", None), ("x0", None), ("x3", 2), ("x1^a", None)])
    def test_parse_word_rejects(self, text, rank):
        """Test malformed words"""
        with pytest.raises(ParseError):
            parse_word(text, rank=rank)


@pytest.mark.usefixtures("mock_config")
class TestPermutationGroups:
    """Test permutation parsing, word maps and verbal subgroups"""

    def test_parse_and_format(self):
        """Test cycle notation in and out"""
        perm = parse_permutation("(1 3)(2 4)")
        assert perm.array_form == [2, 3, 0, 1]
        assert format_permutation(perm) == "(1 3)(2 4)"
        assert format_permutation(parse_permutation("()", 3)) == "()"
        assert parse_permutation("(1 2)", 4).size == 4

    @pytest.mark.parametrize("text", ["(1 2)(2 3)", "1 2", "(0 1)", "(1 a)", ""])
    def test_parse_rejects(self, text):
        """Test malformed permutations"""
        with pytest.raises(ParseError):
            parse_permutation(text)

    def test_permutation_list(self):
        """Test a list shares one degree"""
        perms = parse_permutation_list("(1 2);(1 2 3)")
        assert [p.size for p in perms] == [3, 3]
        with pytest.raises(ParseError):
            parse_permutation_list("(1 2);;(1 3)")

    def test_symmetric_group(self):
        """Test Sym(3) and Sym(4)"""
        assert FinGroup.symmetric(3).order == 6
        assert FinGroup.symmetric(4).order == 24
        assert not FinGroup.symmetric(3).is_abelian()
        assert FinGroup.symmetric(1).order == 1

    def test_group_order_cap(self):
        """Test groups larger than the configured cap are refused"""
        with pytest.raises(ResourceLimitError):
            FinGroup.symmetric(8)
        assert FinGroup.symmetric(5).order == 120

    def test_word_map_eval(self):
        """Test x1^2 on a 3-cycle"""
        group = FinGroup.symmetric(3)
        value = word_map_eval(parse_word("x1^2"), group, [parse_permutation("(1 2 3)")])
        assert format_permutation(value) == "(1 3 2)"

    def test_evaluation_is_a_homomorphism(self):
        """Test evaluate(uv) = evaluate(u)·evaluate(v)"""
        values = [parse_permutation("(1 2)", 4), parse_permutation("(2 3 4)", 4)]
        u, v = parse_word("x1 x2^2"), parse_word("x2^-1 x1")
        assert evaluate_word(u * v, values) == evaluate_word(u, values) * evaluate_word(v, values)

    def test_too_few_values(self):
        """Test a word using more variables than values"""
        with pytest.raises(DomainError):
            evaluate_word(parse_word("x2"), [parse_permutation("(1 2)")])

    def test_verbal_subgroups_of_s3(self):
        """Test squares and commutators both give A3"""
        s3 = FinGroup.symmetric(3)
        squares = verbal_subgroup(s3, [parse_word("x1^2")])
        commutators = verbal_subgroup(s3, [parse_word("x1 x2 x1^-1 x2^-1")])
        assert squares.order == 3
        assert commutators == squares
        assert squares.is_normal_in(s3)
        assert is_fully_invariant(s3, squares)

    def test_commutators_of_abelian_group(self):
        """Test the commutator subgroup of a cyclic group is trivial"""
        cyclic = FinGroup.from_text("(1 2 3 4)")
        assert verbal_subgroup(cyclic, [parse_word("x1 x2 x1^-1 x2^-1")]).order == 1
        assert verbal_subgroup(cyclic, [parse_word("x1^2")]).order == 2

    @pytest.mark.parametrize("text", [
        "()", "(1 2)", "(1 2 3)", "(1 2 3 4)", "(1 2)(3 4);(1 3)(2 4)", "(1 2 3 4 5)",
        "(1 2 3)(4 5)", "(1 2);(3 4);(5 6)", "(1 2 3 4);(5 6)", "(1 2 3);(1 2)", "(1 2 3 4);(1 3)",
        "(1 2 3 4 5);(2 5)(3 4)", "(1 2 3);(2 3 4)", "(1 2 3 4 5 6);(2 6)(3 5)", "(1 2);(3 4 5);(3 4)",
        "(1 2);(1 2 3 4)",
    ])
    @pytest.mark.parametrize("word", ["x1^2", "x1^3", "x1^4", "x1^6", "x1 x2 x1^-1 x2^-1", "x1^2 x2^2 x1^-2 x2^-2"])
    def test_verbal_subgroups_fully_invariant(self, mock_config, text, word):
        """Test every verbal subgroup of a group of order <= 24 is fully invariant"""
        group = FinGroup.from_text(text)
        assert group.order <= 24
        subgroup = verbal_subgroup(group, [parse_word(word)])
        assert subgroup.is_normal_in(group)
        assert is_fully_invariant(group, subgroup)

    def test_not_fully_invariant(self):
        """Test a relabeling swapping the factors of Z/2 x Z/2"""
        klein = FinGroup.from_text("(1 2);(3 4)")
        factor = FinGroup.from_text("(1 2)", degree=4)
        assert factor.is_normal_in(klein)
        assert not is_fully_invariant(klein, factor)


@pytest.mark.usefixtures("mock_config")
class TestSchreierGraphs:
    """Test coset graphs and their free bases"""

    def test_cyclic_image(self):
        """Test both generators mapped to one 3-cycle"""
        graph = schreier_graph(2, parse_permutation_list("(1 2 3);(1 2 3)"))
        assert graph.index == 3
        assert len(schreier_basis(graph)) == basis_size(2, 3) == 4

    def test_s3_image(self):
        """Test the regular and points graphs of a surjection onto Sym(3)"""
        images = parse_permutation_list("(1 2);(1 2 3)")
        regular = schreier_graph(2, images, REGULAR)
        assert regular.index == 6
        assert len(schreier_basis(regular)) == 7
        points = schreier_graph(2, images, POINTS)
        assert points.index == 3
        assert len(schreier_basis(points)) == 4

    def test_trivial_image(self):
        """Test the whole free group"""
        graph = schreier_graph(2, parse_permutation_list("();()"))
        assert graph.index == 1
        assert [format_word(w) for w in schreier_basis(graph)] == ["x1", "x2"]

    def test_intransitive_points_rejected(self):
        """Test points mode needs a transitive action"""
        with pytest.raises(DomainError):
            schreier_graph(2, parse_permutation_list("(1 2);(1 2)", 4), POINTS)

    def test_bad_arguments(self):
        """Test image count and mode checks"""
        images = parse_permutation_list("(1 2);(1 2)")
        with pytest.raises(DomainError):
            schreier_graph(3, images)
        with pytest.raises(DomainError):
            schreier_graph(2, images, "cosets")

    def test_breadth_first_numbering(self):
        """Test x1 is tried before x1^-1 and x2"""
        graph = schreier_graph(1, parse_permutation_list("(1 2 3)"))
        assert graph.tree == (None, (0, 1, 1), (0, 1, -1))
        assert format_word(graph.path_word(2)) == "x1^-1"

    def test_random_homomorphisms(self):
        """Test basis words lie in the kernel and rewrite to unit vectors"""
        rng = np.random.default_rng(20240)
        for i in range(20):
            rank = 1 + i % 3
            images = [Permutation([int(v) for v in rng.permutation(4)]) for _ in range(rank)]
            graph = schreier_graph(rank, images, REGULAR)
            basis = schreier_basis(graph)
            assert len(basis) == basis_size(rank, graph.index)
            identity = Permutation(list(range(4)))
            for position, word in enumerate(basis):
                assert evaluate_word(word, images, 4) == identity
                assert graph.in_subgroup(word)
                assert rewrite_in_basis(graph, word) == unit(len(basis), position)

    def test_rewrite_is_additive(self):
        """Test the rewrite of a product is the sum of rewrites"""
        graph = schreier_graph(2, parse_permutation_list("(1 2);(1 2 3)"))
        basis = schreier_basis(graph)
        u, v = basis[0], basis[3]
        total = rewrite_in_basis(graph, u * v * invert(basis[5]))
        expected = [a + b - c for a, b, c in zip(
            rewrite_in_basis(graph, u), rewrite_in_basis(graph, v), rewrite_in_basis(graph, basis[5]))]
        assert total == tuple(expected)

    def test_rewrite_outside_subgroup(self):
        """Test a word not in K"""
        graph = schreier_graph(2, parse_permutation_list("(1 2 3);(1 2 3)"))
        with pytest.raises(DomainError):
            rewrite_in_basis(graph, parse_word("x1", rank=2))

    def test_k_p_membership(self):
        """Test K_p = [K, K]K^p through rewrite vectors"""
        graph = schreier_graph(2, parse_permutation_list("(1 2 3);(1 2 3)"))
        basis = schreier_basis(graph)
        assert not in_k_p(graph, basis[0], 2)
        assert in_k_p(graph, power(basis[0], 2), 2)
        assert in_k_p(graph, commutator(basis[0], basis[1]), 3)
        assert not in_k_p(graph, parse_word("x1", rank=2), 2)


class TestIndexPSubgroups:
    """Test index-p subgroups of K as nonzero functionals"""

    @pytest.mark.parametrize("size,p", [(1, 2), (3, 2), (3, 3), (4, 2), (2, 5)])
    def test_count(self, size, p):
        """Test the enumeration count against the Gaussian binomial"""
        count = len(enumerate_index_p_functionals(size, p))
        assert count == index_p_subgroup_count(size, p) == gaussian_binomial(size, size - 1, p)

    def test_normalization(self):
        """Test the leading nonzero entry becomes 1"""
        assert normalize_functional([0, 2, 1], 3) == (0, 1, 2)
        with pytest.raises(DomainError):
            normalize_functional([0, 3], 3)

    def test_sample_is_nonzero(self):
        """Test sampled functionals are normalized and nonzero"""
        rng = make_rng(5)
        for _ in range(50):
            functional = sample_index_p_subgroup(4, 3, rng)
            assert functional == normalize_functional(functional, 3)

    def test_sample_reproducible(self):
        """Test one seed gives one functional sequence"""
        first = [sample_index_p_subgroup(5, 2, make_rng(9)) for _ in range(3)]
        assert first == [sample_index_p_subgroup(5, 2, make_rng(9)) for _ in range(3)]

    @pytest.mark.usefixtures("mock_config")
    def test_contains(self):
        """Test membership against the functional"""
        graph = schreier_graph(2, parse_permutation_list("(1 2 3);(1 2 3)"))
        basis = schreier_basis(graph)
        subgroup = IndexPSubgroup(graph, 2, (1, 0, 0, 0))
        assert not subgroup.contains(basis[0])
        assert subgroup.contains(basis[1])
        assert subgroup.contains(power(basis[0], 2))
        assert not subgroup.contains(parse_word("x1", rank=2))

    @pytest.mark.usefixtures("mock_config")
    def test_sampled_subgroup_contains_k_p(self):
        """Test a sampled index-p subgroup contains p-th powers of the basis"""
        graph = schreier_graph(2, parse_permutation_list("(1 2);(1 2 3)"))
        subgroup = IndexPSubgroup.sample(graph, 3, make_rng(1))
        for word in schreier_basis(graph):
            assert subgroup.contains(power(word, 3))

    @pytest.mark.usefixtures("mock_config")
    def test_functional_length_checked(self):
        """Test the functional must match the basis size"""
        graph = schreier_graph(2, parse_permutation_list("(1 2 3);(1 2 3)"))
        with pytest.raises(DomainError):
            IndexPSubgroup(graph, 2, (1, 0))
