#!/usr/bin/env python3
"""Tests for freedom matroids."""

import sys
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from canonical import canonicalize
from fixtures import named
from freedom import (bases_by_dominance, build, build_recursive, closed_rank, closure_formula,
                     dual_word, flag_of_word, flat_size_bound_holds, free_extension, freedom_catalogue,
                     freedom_key, freedom_matroid, independent_agrees, independent_iff_dominates,
                     is_closed_characterization, minor_formulas, realize_flag, shifting_holds,
                     word_of_key)
from matroid import (bases, closure, contract, delete, dual, free, from_flag, loops, multipoint,
                     uniform, zero)
from matroid_errors import DomainError
from word_order import lambda_order_reversing_check, pi

word_strategy = st.text(alphabet='01', min_size=1, max_size=6)


def test_flag_of_word():
    assert flag_of_word('0101') == [frozenset({1}), frozenset({1, 2, 3}), frozenset({1, 2, 3, 4})]
    assert flag_of_word('11') == [frozenset(), frozenset({1}), frozenset({1, 2})]
    assert flag_of_word('00') == [frozenset({1, 2})]


def test_flag_of_twelve_letter_word():
    w = '001011001000'
    assert flag_of_word(w) == [frozenset(range(1, t)) for t in (3, 5, 6, 9)] + [frozenset(range(1, 13))]
    assert pi(w) == frozenset({3, 5, 6, 9})


def test_twelve_element_freedom_matroid():
    fm = build('001001010010')
    M = fm.matroid
    assert fm.rank == 4
    assert M.rank_of({3, 4, 5}) == 1
    assert M.rank_of(range(3, 8)) == 2
    assert M.rank_of(range(3, 11)) == 3
    assert M.rank_of({1, 2}) == 0


def test_build():
    fm = build('0101')
    assert fm.word == '0101'
    assert fm.rank == 2
    assert fm.nullity == 2
    assert loops(fm.matroid) == frozenset({1})


@pytest.mark.parametrize("w,expected", [
    ('1100', uniform(2, 4)),
    ('1000', multipoint(4)),
    ('111', free(3)),
    ('000', zero(3)),
    ('1110', uniform(3, 4)),
])
def test_familiar_freedom_matroids(w, expected):
    assert freedom_matroid(w) == expected


def test_doubled_line_is_a_freedom_matroid():
    assert freedom_key('1010') == canonicalize(named('N'))
    assert word_of_key(canonicalize(named('N'))) == '1010'
    assert word_of_key(canonicalize(named('D'))) is None
    assert word_of_key(canonicalize(named('L'))) is None


def test_free_extension():
    assert free_extension(free(2)) == uniform(2, 3)
    assert free_extension(zero(1)) == zero(2)


@settings(max_examples=50, deadline=None)
@given(word_strategy)
def test_two_constructions_agree(w):
    assert from_flag(len(w), flag_of_word(w)) == build_recursive(w)


@settings(max_examples=50, deadline=None)
@given(word_strategy)
def test_independence_by_dominance(w):
    assert independent_agrees(w)
    assert bases_by_dominance(w) == bases(freedom_matroid(w))


def test_bases_of_seven_element_example():
    found = sorted(''.join(map(str, sorted(b))) for b in bases(freedom_matroid('0100110')))
    assert found == ['256', '257', '267', '356', '357', '367', '456', '457', '467', '567']
    assert independent_iff_dominates('0100110', {5, 6, 7})
    assert not independent_iff_dominates('0100110', {2, 3, 5})


@settings(max_examples=40, deadline=None)
@given(word_strategy)
def test_closure_formulas(w):
    M = freedom_matroid(w)
    n = len(w)
    for r in range(n + 1):
        for A in combinations(range(1, n + 1), r):
            closed = closure(M, A)
            assert closure_formula(w, A) == closed
            assert is_closed_characterization(w, A) == (closed == frozenset(A))
            if closed == frozenset(A):
                assert closed_rank(w, A) == M.rank_of(A)


@settings(max_examples=40, deadline=None)
@given(word_strategy)
def test_minor_formulas(w):
    M = freedom_matroid(w)
    ground = set(range(1, len(w) + 1))
    for e in ground:
        deletion, contraction = minor_formulas(w, e)
        assert realize_flag(ground - {e}, deletion) == delete(M, [e])
        assert realize_flag(ground - {e}, contraction) == contract(M, [e])


def test_minor_formulas_reject_missing_element():
    with pytest.raises(DomainError):
        minor_formulas('0101', 5)


def test_dual_word():
    assert dual_word('0101') == '0101'
    assert dual_word('1000') == '1110'
    assert dual_word('') == ''


@settings(max_examples=50, deadline=None)
@given(word_strategy)
def test_dual_of_freedom_matroid(w):
    assert canonicalize(dual(freedom_matroid(w))) == freedom_key(dual_word(w))


@pytest.mark.parametrize("w", ['0101', '100110', '0011', '11010', '0100110'])
def test_flat_sizes_and_shifting(w):
    assert flat_size_bound_holds(w)
    assert shifting_holds(w)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5, 6])
def test_freedom_matroids_are_pairwise_non_isomorphic(n):
    catalogue = freedom_catalogue(n)
    assert len(catalogue) == 2 ** n
    assert sorted(catalogue.values()) == sorted(format(i, f'0{n}b') if n else '' for i in range(2 ** n))


@pytest.mark.parametrize("w", ['01', '0101', '1001', '01101'])
def test_lambda_is_order_reversing(w):
    assert lambda_order_reversing_check(w)


def test_bad_word():
    with pytest.raises(DomainError):
        build('01a')


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
