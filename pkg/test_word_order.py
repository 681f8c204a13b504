#!/usr/bin/env python3
"""Tests for subset, word and permutation orders and the distinguished-word map."""

import sys
from itertools import combinations, permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from fixtures import named
from freedom import freedom_matroid
from matroid import bases
from matroid_errors import DomainError, SizeMismatch
from word_order import (DominanceLattice, all_words, bruhat_covers, bruhat_leq, bruhat_leq_by_covers,
                        chi, complement, distinguished_word, format_permutation, hasse_dot,
                        is_order_ideal, is_order_reversing, lambda_fibres, lambda_image, lambda_map,
                        lower_covers, maximal_elements, parse_permutation, pi, principal_ideal,
                        reverse_subset, shuffle, shuffles_realize_ideal, subset_leq, subset_leq_under,
                        upper_covers, validate_word, word_leq, word_leq_prefix, words)

word_strategy = st.text(alphabet='01', min_size=0, max_size=7)


def test_words_in_linear_extension_order():
    assert words(4, 2) == ['1100', '1010', '1001', '0110', '0101', '0011']
    assert words(3, 0) == ['000']
    assert words(2, 3) == []
    assert len(all_words(5)) == 32


def test_validate_word():
    assert validate_word('0101') == '0101'
    with pytest.raises(DomainError):
        validate_word('012')


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_two_word_orders_agree(n):
    for r in range(n + 1):
        cell = words(n, r)
        for v in cell:
            for w in cell:
                assert word_leq(v, w) == word_leq_prefix(v, w)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_words_and_subsets_correspond(n):
    for r in range(n + 1):
        for A in combinations(range(1, n + 1), r):
            assert pi(chi(A, n)) == frozenset(A)
        for v in words(n, r):
            for w in words(n, r):
                assert word_leq(v, w) == subset_leq(pi(v), pi(w))


def _subsets(n, sizes=None):
    sizes = range(n + 1) if sizes is None else sizes
    return [frozenset(c) for r in sizes for c in combinations(range(1, n + 1), r)]


@pytest.mark.parametrize("n", range(1, 9))
def test_complement_reverses_subset_order(n):
    subsets = _subsets(n)
    for A in subsets:
        for B in subsets:
            assert subset_leq(A, B) == subset_leq(complement(B, n), complement(A, n))


@pytest.mark.parametrize("n", range(1, 9))
def test_reversed_ground_set_reverses_subset_order(n):
    backwards = tuple(range(n, 0, -1))
    for r in range(n + 1):
        cell = _subsets(n, [r])
        for A in cell:
            for B in cell:
                assert subset_leq(A, B) == subset_leq_under(backwards, B, A)
                assert subset_leq(A, B) == subset_leq(reverse_subset(B, n), reverse_subset(A, n))


def test_subset_order_under_reversed_ground_set():
    order = [3, 2, 1]
    assert subset_leq_under(order, {3}, {1})
    assert not subset_leq_under(order, {1}, {3})


def test_longer_subsets_are_smaller():
    assert subset_leq({1, 2, 3}, {1, 2})
    assert not subset_leq({1, 2}, {1, 2, 3})


@settings(max_examples=60, deadline=None)
@given(word_strategy)
def test_covers_are_inverse(w):
    for u in upper_covers(w):
        assert w in lower_covers(u)
        assert word_leq(w, u)
    for u in lower_covers(w):
        assert w in upper_covers(u)


def test_lattice_meet_and_join():
    lattice = DominanceLattice(4, 2)
    assert lattice.meet('1001', '0110') == '1010'
    assert lattice.join('1001', '0110') == '0101'


@pytest.mark.parametrize("n,r", [(4, 2), (5, 2), (6, 3), (7, 3)])
def test_covers_by_two_routes(n, r):
    lattice = DominanceLattice(n, r)
    assert sorted(lattice.covers()) == lattice.covers_by_reduction()


def test_hasse_diagram():
    lattice = DominanceLattice(5, 2)
    dot = hasse_dot(lattice)
    assert len(lattice.elements) == 10
    assert dot.startswith('digraph')
    assert '"11000" -> "10100";' in dot
    assert '"10100" -> "01100";' in dot
    assert '"10100" -> "10010";' in dot
    assert dot.count('->') == len(lattice.covers())
    assert DominanceLattice(4, 0).elements == ['0000']


def test_shuffle_example():
    sigma = shuffle({4, 7}, {1, 5}, 7)
    assert format_permutation(sigma) == '4123756'
    with pytest.raises(SizeMismatch):
        shuffle({1}, {1, 2}, 3)


def test_parse_permutation():
    assert parse_permutation('312') == (3, 1, 2)
    assert parse_permutation('1,2,3') == (1, 2, 3)
    with pytest.raises(DomainError):
        parse_permutation('112')


def test_bruhat_covers():
    assert bruhat_covers((1, 4, 2, 3)) == {(4, 1, 2, 3), (2, 4, 1, 3), (1, 4, 3, 2)}


def test_bruhat_order_by_two_routes():
    perms = list(permutations(range(1, 5)))
    for sigma in perms:
        for tau in perms:
            assert bruhat_leq(sigma, tau) == bruhat_leq_by_covers(sigma, tau)


def test_distinguished_word_of_freedom_matroid():
    assert distinguished_word(freedom_matroid('0101')) == '0101'
    assert lambda_map(freedom_matroid('0101'), (1, 2, 3, 4)) == '0101'


def test_lambda_of_seven_points():
    assert lambda_map(named('figure_two'), parse_permutation('6237154')) == '1110010'


def test_lambda_table_of_0101():
    M = freedom_matroid('0101')
    intervals = [('1234', '1324', '0101'), ('1243', '1432', '0110'),
                 ('2134', '3214', '1001'), ('2413', '4321', '1100')]
    for sigma in permutations(range(1, 5)):
        inside = [w for low, high, w in intervals
                  if bruhat_leq(parse_permutation(low), sigma) and bruhat_leq(sigma, parse_permutation(high))]
        assert len(inside) <= 1
        assert lambda_map(M, sigma) == (inside[0] if inside else '1010')


@pytest.mark.parametrize("name", ['L', 'N', 'D', 'five_coplanar', 'U24_P2', 'figure_two'])
def test_distinguished_word_marks_the_least_basis(name):
    M = named(name)
    least = min(sorted(b) for b in bases(M))
    assert sorted(pi(distinguished_word(M))) == least


def test_distinguished_word_of_line_configuration():
    assert distinguished_word(named('L')) == '11010'


def test_lambda_map_rejects_bad_ordering():
    with pytest.raises(DomainError):
        lambda_map(freedom_matroid('01'), (1, 1))


def test_image_of_freedom_matroid():
    image = lambda_image(freedom_matroid('0101'))
    assert image == {'1100', '1010', '1001', '0110', '0101'}
    assert image == principal_ideal('0101')


def test_fibres_cover_every_ordering():
    fibres = lambda_fibres(named('L'))
    assert sum(fibres.values()) == factorial(5)


def test_non_principal_image():
    image = lambda_image(named('U24_P2'))
    assert image == {'111000', '110100', '101100', '110010'}
    assert is_order_ideal(image)
    assert maximal_elements(image) == {'101100', '110010'}


@pytest.mark.parametrize("name", ['L', 'N', 'D', 'five_coplanar', 'U23_P2'])
def test_images_are_order_ideals(name):
    M = named(name)
    assert is_order_ideal(lambda_image(M))
    assert shuffles_realize_ideal(M)


@pytest.mark.parametrize("w", ['0101', '1010', '0110', '10010', '01101'])
def test_lambda_reverses_bruhat_order(w):
    assert is_order_reversing(freedom_matroid(w))


def test_parallel_fibres_match_inline():
    M = named('five_coplanar')
    assert lambda_fibres(M, threads=2) == lambda_fibres(M, threads=1)


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
