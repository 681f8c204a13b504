#!/usr/bin/env python3
"""Tests for the restriction-contraction coproduct and the dual product."""

import sys
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from acceptance import DELTA_1010, expected_delta_L
from canonical import are_isomorphic, canonicalize
from families import get_family
from fixtures import named
from free_structure import word_coproduct
from freedom import freedom_matroid
from hopf import (KEY_CACHE, FormalSum, TensorSum, circuit_coproduct_formula,
                  coefficient_total_is_power_of_two, coproduct, coproduct_of_key, counit,
                  counit_laws_hold, dual_key, duality_check, empty_key, free_coproduct_formula,
                  is_bigraded, is_coassociative, is_cocommutative, iterated_coproduct,
                  multisection_coefficient, power, product, product_is_associative, product_sums,
                  section_coefficient, uniform_coproduct_formula)
from matroid import circuit, contract, direct_sum, free, multipoint, uniform, zero
from matroid_errors import SizeCapExceeded

word_strategy = st.text(alphabet='01', min_size=0, max_size=5)
point, loop = free(1), zero(1)


def key(M):
    return canonicalize(M)


def test_formal_sum_arithmetic():
    a = FormalSum({'x': 2, 'y': 1})
    b = FormalSum({'y': -1, 'z': 3})
    assert (a + b) == FormalSum({'x': 2, 'z': 3})
    assert (a - a) == FormalSum()
    assert len(a - a) == 0
    assert (3 * a).coefficient('x') == 6
    assert a.total() == 3
    assert FormalSum({'x': 0}) == FormalSum()


def test_tensor_sum_json():
    doc = TensorSum({(empty_key(), empty_key()): 1}).to_json()
    assert doc['terms'][0]['coeff'] == '1'
    assert doc['terms'][0]['left']['n'] == 0


def test_coproduct_of_1010():
    assert word_coproduct('1010') == TensorSum(DELTA_1010)


def test_coproduct_of_line_configuration():
    delta = coproduct(named('L'))
    assert delta == expected_delta_L()
    assert sorted(c for _, c in delta.items()) == sorted((1, 4, 1, 2, 8, 6, 4, 4, 1, 1))


def test_section_coefficients():
    L = named('L')
    assert section_coefficient(L, free(3), zero(2)) == 8
    assert section_coefficient(L, uniform(2, 3), multipoint(2)) == 2
    assert section_coefficient(L, point, named('D')) == 1


@pytest.mark.parametrize("r,n", [(r, n) for n in range(6) for r in range(n + 1)])
def test_uniform_coproduct_formula(r, n):
    assert coproduct(uniform(r, n)) == uniform_coproduct_formula(r, n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_free_and_circuit_formulas(n):
    assert coproduct(free(n)) == free_coproduct_formula(n)
    assert coproduct(circuit(n)) == circuit_coproduct_formula(n)


@settings(max_examples=30, deadline=None)
@given(word_strategy)
def test_counit_and_grading(w):
    M = freedom_matroid(w)
    assert counit_laws_hold(M)
    assert is_bigraded(M)
    assert coefficient_total_is_power_of_two(M)


@settings(max_examples=20, deadline=None)
@given(st.text(alphabet='01', min_size=0, max_size=4))
def test_coassociativity(w):
    assert is_coassociative(freedom_matroid(w))


@settings(max_examples=20, deadline=None)
@given(st.text(alphabet='01', min_size=0, max_size=4))
def test_duality(w):
    assert duality_check(freedom_matroid(w), get_family('freedom'))


@pytest.mark.parametrize("name", ['L', 'N', 'D', 'five_coplanar', 'U24_P2'])
def test_duality_on_named_matroids(name):
    assert duality_check(named(name))


def test_cocommutative_exactly_for_free_and_zero():
    assert is_cocommutative(free(3))
    assert is_cocommutative(zero(3))
    assert not is_cocommutative(multipoint(2))
    assert not is_cocommutative(named('N'))


def test_counit():
    assert counit(FormalSum({empty_key(): 3, key(point): 2})) == 3


def test_iterated_coproduct():
    k = key(named('N'))
    assert iterated_coproduct(k, 1) == FormalSum({(k,): 1})
    assert iterated_coproduct(k, 3).total() == 3 ** 4
    with pytest.raises(ValueError):
        iterated_coproduct(k, 0)


def test_multisection_of_letters():
    letters = {'1': point, '0': loop}
    assert multisection_coefficient(freedom_matroid('0101'), [letters[c] for c in '0101']) == 2
    assert multisection_coefficient(freedom_matroid('0011'), [letters[c] for c in '1100']) == 4
    assert multisection_coefficient(freedom_matroid('0011'), [point, point]) == 0


def test_products_of_points_and_loops():
    freedom = get_family('freedom')
    assert product(loop, point, freedom) == FormalSum({key(direct_sum(point, loop)): 1})
    assert product(point, loop, freedom) == FormalSum({key(direct_sum(point, loop)): 1,
                                                      key(multipoint(2)): 2})
    assert power(point, 4, freedom) == FormalSum({key(free(4)): 24})
    assert power(loop, 3, freedom) == FormalSum({key(zero(3)): 6})


def test_product_in_all_matroids():
    result = product(uniform(2, 3), multipoint(2), get_family('all'))
    assert result == FormalSum({key(named('five_coplanar')): 1, key(named('L')): 2,
                                key(named('U23_P2')): 1})


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("w", ['1', '0', '01', '101', '0110'])
def test_zero_times_freedom_matroid(k, w):
    loops_of_w = len(w) - len(w.lstrip('0'))
    expected = FormalSum({key(freedom_matroid('0' * k + w)): comb(k + loops_of_w, k)})
    assert product(zero(k), freedom_matroid(w), get_family('freedom')) == expected


@pytest.mark.parametrize("n,k", [(1, 2), (2, 2), (1, 3), (3, 2), (2, 3)])
def test_circuit_family_products(n, k):
    circuits = get_family('circuits')
    assert product(free(n), circuit(k), circuits) == FormalSum({key(circuit(n + k)): comb(n + k, n)})
    assert product(free(n), free(k), circuits) == FormalSum({key(free(n + k)): comb(n + k, n)})
    assert len(product(circuit(k), free(n), circuits)) == 0
    assert len(product(circuit(k), circuit(2), circuits)) == 0


@pytest.mark.parametrize("n,k", [(1, 1), (2, 1), (1, 2), (2, 3)])
def test_multipoint_family_products(n, k):
    multipoints = get_family('multipoints')
    assert product(multipoint(k), zero(n), multipoints) == FormalSum({key(multipoint(n + k)): comb(n + k, n)})
    assert len(product(zero(n), multipoint(k), multipoints)) == 0
    assert len(product(multipoint(k), multipoint(2), multipoints)) == 0


@pytest.mark.parametrize("triple", ['010', '101', '110', '001'])
def test_point_loop_products_associate(triple):
    letters = {'0': loop, '1': point}
    assert product_is_associative(*(letters[c] for c in triple), get_family('freedom'))


@settings(max_examples=15, deadline=None)
@given(st.lists(st.text(alphabet='01', min_size=1, max_size=2), min_size=3, max_size=3))
def test_freedom_products_associate(words):
    freedom = get_family('freedom')
    a, b, c = (FormalSum({key(freedom_matroid(w)): 1}) for w in words)
    left = product_sums(product_sums(a, b, freedom), c, freedom)
    assert left == product_sums(a, product_sums(b, c, freedom), freedom)
    assert left.coefficient(key(freedom_matroid(''.join(words)))) > 0


def test_seven_point_example():
    M = named('figure_two')
    assert section_coefficient(M, uniform(2, 3), named('D')) == 1
    assert section_coefficient(M, uniform(2, 3), direct_sum(multipoint(2), multipoint(2))) == 1
    assert are_isomorphic(contract(M, [1, 2, 3]), named('D'))
    assert are_isomorphic(contract(M, [1, 4, 5]), named('N'))


def test_threaded_coproduct_matches():
    M = named('figure_two')
    assert coproduct(M, threads=2) == coproduct_of_key(key(M))


def test_class_caches_are_bounded():
    assert coproduct_of_key.cache_info().maxsize == KEY_CACHE
    assert dual_key.cache_info().maxsize == KEY_CACHE


def test_coproduct_size_cap():
    with pytest.raises(SizeCapExceeded):
        coproduct(free(11))


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
