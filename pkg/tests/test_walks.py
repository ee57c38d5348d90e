"""Staircase walks, signed children, the involution, and Dyck reduction."""

import pytest

from freeseries import symbols
from freeseries.families import (
    D_series,
    U_series,
    c_poly,
    catalan,
    d_poly,
    substitute_commutator,
)
from freeseries.freealg import NcPolynomial, parse_polynomial
from freeseries.walks import (
    ExpandedPair,
    PairKind,
    StaircasePath,
    Step,
    all_pairs,
    classify_pair,
    composition_child,
    composition_parent,
    composition_sign,
    compositions,
    cn_weight_enumerator,
    dyck_reduce,
    dyck_reduction_sum,
    enumerate_cn_paths,
    enumerate_dyck_words,
    enumerate_staircase,
    expand_children,
    good_pairs_sum,
    involution,
    is_dyck_word,
    staircase_weight_enumerator,
    verify_dyck_reduction,
    verify_involution_suite,
)

H, D, V = Step.HORIZONTAL, Step.DIAGONAL, Step.VERTICAL


def path(*steps):
    return StaircasePath(tuple(steps))


# -- staircase enumeration ------------------------------------------------------


def test_smallest_walks_are_the_listed_ones():
    assert enumerate_staircase(1) == [path()]
    assert enumerate_staircase(2) == [path(D)]
    assert set(enumerate_staircase(3)) == {path(D, D), path(H, D, V)}
    assert set(enumerate_staircase(4)) == {
        path(D, D, D),
        path(H, D, D, V),
        path(H, D, V, D),
        path(D, H, D, V),
        path(H, H, D, V, V),
    }


def test_walk_counts_are_catalan():
    for n in range(1, 11):
        assert len(enumerate_staircase(n)) == catalan(n - 1)


def test_walks_respect_the_constraints():
    for n in range(1, 7):
        for walk in enumerate_staircase(n):
            positions = list(walk.positions())
            assert positions[0] == (0, 0)
            assert positions[-1] == (n - 1, n - 1)
            assert all(i >= j for i, j in positions)
            for first, second in zip(walk.steps, walk.steps[1:]):
                assert not (first is H and second is V)


def test_weight_enumerator_examples():
    assert staircase_weight_enumerator(2) == NcPolynomial.monomial(symbols.x)
    assert staircase_weight_enumerator(4) == parse_polynomial(
        "x^3 + a x^2 b + a x b x + x a x b + a^2 x b^2"
    )


def test_weight_enumerator_matches_recurrence():
    for n in range(1, 9):
        assert staircase_weight_enumerator(n) == d_poly(n)


def test_cn_paths():
    assert enumerate_cn_paths(1) == [path(H, V)]
    assert enumerate_cn_paths(1)[0].weight_word().text() == "a b"
    assert enumerate_cn_paths(2) == [path(H, D, V)]
    for n in range(1, 6):
        assert cn_weight_enumerator(n) == c_poly(n)
        for walk in enumerate_cn_paths(n):
            interior = list(walk.positions())[1:-1]
            assert all(i > j for i, j in interior)


# -- children -------------------------------------------------------------------


def test_expand_children_no_diagonals():
    pairs = expand_children(path(H, V))
    assert pairs == [ExpandedPair(path(H, V), (), "ab", 1)]


def test_expand_children_one_diagonal():
    pairs = expand_children(path(H, D, V))
    assert pairs == [
        ExpandedPair(path(H, D, V), (False,), "aabb", 1),
        ExpandedPair(path(H, D, V), (True,), "abab", -1),
    ]


def pair_word(pair):
    from freeseries.walks import _child_word

    return _child_word(pair.child)


def test_signed_children_sum_equals_substituted_cn():
    for n in range(1, 7):
        total = NcPolynomial(
            (pair_word(pair), pair.sign) for pair in all_pairs(n)
        )
        assert total == substitute_commutator(c_poly(n))


# -- classification ----------------------------------------------------------------


def test_classify_composition_children_good():
    # abab is the (1,1)-composition child: its valley touches the diagonal
    for pair in all_pairs(2):
        assert classify_pair(pair) is PairKind.GOOD
    good_children = {
        pair.child for pair in all_pairs(3) if classify_pair(pair) is PairKind.GOOD
    }
    assert good_children == {"aaabbb", "aabbab", "abaabb", "ababab"}


def test_classify_bad_example():
    # a a b a b b has its b,a factor strictly below the diagonal
    bad = [pair for pair in all_pairs(3) if classify_pair(pair) is PairKind.BAD]
    assert {pair.child for pair in bad} == {"aababb"}
    assert sorted(pair.sign for pair in bad) == [-1, 1]


# -- the involution -----------------------------------------------------------------


def test_involution_smallest_orbit():
    bad = [pair for pair in all_pairs(3) if classify_pair(pair) is PairKind.BAD]
    first, second = bad
    assert involution(first) == second
    assert involution(second) == first
    assert first.parent != second.parent


def test_involution_rejects_good_pairs():
    good = next(pair for pair in all_pairs(2) if classify_pair(pair) is PairKind.GOOD)
    with pytest.raises(ValueError):
        involution(good)


def test_involution_suite_exhaustive():
    reports = verify_involution_suite(5)
    assert all(report.passed for report in reports), [
        report.line() for report in reports if not report.passed
    ]


def test_bad_pairs_cancel():
    for n in range(1, 6):
        signed = NcPolynomial(
            (pair_word(pair), pair.sign)
            for pair in all_pairs(n)
            if classify_pair(pair) is PairKind.BAD
        )
        assert signed == NcPolynomial.zero()


# -- the composition census -----------------------------------------------------------


def test_compositions():
    assert list(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert len(list(compositions(6))) == 32


def test_good_pairs_are_the_compositions():
    for n in range(1, 7):
        good = [pair for pair in all_pairs(n) if classify_pair(pair) is PairKind.GOOD]
        by_child = {}
        for pair in good:
            by_child.setdefault(pair.child, []).append(pair)
        expected = {composition_child(parts): parts for parts in compositions(n)}
        assert set(by_child) == set(expected)
        for child, group in by_child.items():
            parts = expected[child]
            assert len(group) == 1  # a unique parent per composition
            assert group[0] == composition_parent(parts)
            assert group[0].sign == composition_sign(parts)


def test_good_pairs_sum():
    assert good_pairs_sum(1) == parse_polynomial("a b")
    assert good_pairs_sum(2) == parse_polynomial("a^2 b^2 - a b a b")
    assert good_pairs_sum(4).monomial_count() == 8
    for n in range(1, 7):
        assert good_pairs_sum(n) == substitute_commutator(c_poly(n))


# -- Dyck words and reduction ------------------------------------------------------------


def test_dyck_enumeration():
    assert enumerate_dyck_words(0) == [""]
    assert enumerate_dyck_words(2) == ["aabb", "abab"]
    for m in range(7):
        words = enumerate_dyck_words(m)
        assert len(words) == catalan(m)
        assert all(is_dyck_word(w) for w in words)


def test_dyck_reduce_examples():
    assert dyck_reduce("aabb").text() == "a x b"
    assert dyck_reduce("abab").text() == "x^2"
    assert dyck_reduce("abab", keep_level0=True).text() == "a b a b"
    assert dyck_reduce("aabb", keep_level0=True).text() == "a x b"
    with pytest.raises(ValueError):
        dyck_reduce("ba")


def test_dyck_reduction_sums():
    for order in (0, 4, 10):
        assert dyck_reduction_sum(order) == D_series(order)
        a = NcPolynomial.monomial(symbols.a)
        b = NcPolynomial.monomial(symbols.b)
        assert dyck_reduction_sum(order, keep_level0=True) == 1 + a * U_series(order) * b
    assert all(report.passed for report in verify_dyck_reduction(10))
