#!/usr/bin/env python3
"""Acceptance suite: the worked examples and tables, plus exhaustive property checks."""

import sys
import time
from itertools import permutations
from math import comb
from typing import Callable, List, Tuple

from canonical import canonicalize
from census import census
from config import get_config
from families import get_family
from fixtures import display_names, named
from free_structure import (enlarged_block, dual_basis_check, inverse_coefficients, m_in_p_prime,
                            matrix_C, p_expansion, p_product_words, word_coproduct)
from freedom import (bases_by_dominance, closed_rank, closure_formula, dual_word, freedom_catalogue,
                     freedom_key, freedom_matroid, is_closed_characterization, minor_formulas,
                     realize_flag, shifting_holds)
from hopf import (FormalSum, TensorSum, coproduct, counit_laws_hold, duality_check,
                  is_bigraded, is_coassociative, power, product, product_is_associative)
from matroid import (bases, circuit, closure_mask, contract, contract_mask, delete, direct_sum, dual,
                     free, multipoint, restrict_mask, uniform, validate_rank_axioms, zero)
from matroid_errors import MatroidError
from word_order import (all_words, bruhat_leq, bruhat_leq_by_covers, is_order_ideal, lambda_image,
                        lambda_order_reversing_check, maximal_elements, principal_ideal,
                        shuffles_realize_ideal)

C42_ORDER = ['1100', '1010', '1001', '0110', '0101', '0011']
C42 = [
    [24, 20, 12, 12, 8, 4],
    [0, 4, 6, 6, 6, 4],
    [0, 0, 6, 0, 4, 4],
    [0, 0, 0, 6, 4, 4],
    [0, 0, 0, 0, 2, 4],
    [0, 0, 0, 0, 0, 4],
]

DELTA_1010 = {('', '1010'): 1, ('1', '010'): 2, ('1', '100'): 2, ('10', '10'): 1,
              ('11', '00'): 5, ('101', '0'): 2, ('110', '0'): 2, ('1010', ''): 1}

U24_P2_IMAGE = {'111000', '110100', '101100', '110010'}

BASES_0100110 = ['256', '257', '267', '356', '357', '367', '456', '457', '467', '567']


def check_matrix_c(full: bool = False) -> bool:
    matrix = matrix_C(4, 2)
    entries = [[int(x) for x in row] for row in matrix.entries]
    return matrix.order == C42_ORDER and entries == C42 and matrix.column_sums() == [24] * 6


def check_enlarged_matrix(full: bool = False) -> bool:
    block = enlarged_block(4, 2, get_family('freedom+D'), display_names())
    if block.columns != ['1100', '1010', 'P_2⊕P_2', '1001', '0110', '0101', '0011']:
        print(f"  columns: {block.columns}")
        return False
    d_column = [row[2] for row in block.entries]
    rest = [[x for j, x in enumerate(row) if j != 2] for row in block.entries]
    return d_column == [16, 8, 0, 0, 0, 0] and rest == C42 and block.full_row_rank


def check_delta_1010(full: bool = False) -> bool:
    return word_coproduct('1010') == TensorSum(DELTA_1010)


def expected_delta_L() -> TensorSum:
    k = canonicalize
    point, loop = free(1), zero(1)
    terms = [
        ((k(free(0)), k(named('L'))), 1),
        ((k(point), k(named('D'))), 1),
        ((k(point), k(named('N'))), 4),
        ((k(free(2)), k(direct_sum(multipoint(2), loop))), 6),
        ((k(free(2)), k(multipoint(3))), 4),
        ((k(uniform(2, 3)), k(multipoint(2))), 2),
        ((k(free(3)), k(zero(2))), 8),
        ((k(circuit(4)), k(loop)), 1),
        ((k(direct_sum(uniform(2, 3), point)), k(loop)), 4),
        ((k(named('L')), k(free(0))), 1),
    ]
    return TensorSum(terms)


def check_delta_L(full: bool = False) -> bool:
    delta = coproduct(named('L'))
    coefficients = sorted(c for _, c in delta.items())
    return delta == expected_delta_L() and coefficients == sorted((1, 4, 1, 2, 8, 6, 4, 4, 1, 1))


def check_products(full: bool = False) -> bool:
    k = canonicalize
    point, loop = free(1), zero(1)
    freedom = get_family('freedom')
    checks = [
        product(loop, point, freedom) == FormalSum({k(direct_sum(point, loop)): 1}),
        product(point, loop, freedom) == FormalSum({k(direct_sum(point, loop)): 1, k(multipoint(2)): 2}),
        power(point, 4, freedom) == FormalSum({k(free(4)): 24}),
        power(loop, 3, freedom) == FormalSum({k(zero(3)): 6}),
        product(uniform(2, 3), multipoint(2), get_family('all')) == FormalSum(
            {k(named('five_coplanar')): 1, k(named('L')): 2, k(named('U23_P2')): 1}),
    ]
    circuits = get_family('circuits')
    top = 6 if full else 5
    for n in range(1, top):
        for m in range(2, top - n + 1):
            checks.append(product(free(n), circuit(m), circuits) ==
                          FormalSum({k(circuit(n + m)): comb(n + m, n)}))
    for a in range(2, top - 1):
        for b in range(2, top - a + 1):
            checks.append(len(product(circuit(a), circuit(b), circuits)) == 0)
    return all(checks)


def check_p_expansions(full: bool = False) -> bool:
    expected = {'1001': 6, '0101': 4, '0011': 4}
    return (p_expansion('1001') == expected and p_product_words('1001') == expected
            and m_in_p_prime('0110') == {'1100': 12, '1010': 6, '0110': 6})


def check_image_theorem(full: bool = False) -> bool:
    top = 7 if full else 6
    cells = 0
    for n in range(1, top + 1):
        for w in all_words(n):
            if lambda_image(freedom_matroid(w)) != principal_ideal(w):
                print(f"  image of λ for M_{w} is not the ideal below {w}")
                return False
            cells += 1
    print(f"  {cells} words checked")
    return True


def check_non_principal_image(full: bool = False) -> bool:
    M = named('U24_P2')
    image = lambda_image(M)
    return (image == U24_P2_IMAGE and len(maximal_elements(image)) > 1
            and canonicalize(M) not in freedom_catalogue(6))


def check_bases(full: bool = False) -> bool:
    found = sorted(''.join(str(x) for x in sorted(b)) for b in bases(freedom_matroid('0100110')))
    return found == BASES_0100110 and bases_by_dominance('0100110') == bases(freedom_matroid('0100110'))


def check_freedom_census(full: bool = False) -> bool:
    top = 8 if full else 6
    return all(len(freedom_catalogue(n)) == 2 ** n for n in range(top + 1))


# Property suites

def _zoo(top: int):
    for n in range(min(top, get_config().census_n) + 1):
        for key in census(n):
            yield key.to_matroid()


def _words(top: int):
    for n in range(top + 1):
        yield from all_words(n)


def prop_rank_axioms(top: int) -> bool:
    for M in _zoo(top):
        validate_rank_axioms(M.n, M.ranks, submodular=True)
    return True


def prop_minor_identities(top: int) -> bool:
    for M in _zoo(top):
        D = dual(M)
        for mask in range(1 << M.n):
            rest = M.full_mask & ~mask
            if dual(contract_mask(M, mask)) != restrict_mask(D, rest):
                return False
            if dual(restrict_mask(M, mask)) != contract_mask(D, rest):
                return False
    for w in _words(top):
        M = freedom_matroid(w)
        ground = set(range(1, len(w) + 1))
        for e in ground:
            deletion, contraction = minor_formulas(w, e)
            if realize_flag(ground - {e}, deletion) != delete(M, [e]):
                return False
            if realize_flag(ground - {e}, contraction) != contract(M, [e]):
                return False
    return True


def prop_coassociative(top: int) -> bool:
    return all(is_coassociative(freedom_matroid(w)) for w in _words(top))


def prop_counit(top: int) -> bool:
    return all(counit_laws_hold(M) for M in _zoo(top))


def prop_bigraded(top: int) -> bool:
    return all(is_bigraded(M) for M in _zoo(top))


def prop_duality(top: int) -> bool:
    if not all(duality_check(M) for M in _zoo(top)):
        return False
    freedom = get_family('freedom')
    return all(duality_check(freedom_matroid(w), freedom) for w in _words(top - 1))


def prop_dual_word(top: int) -> bool:
    return all(canonicalize(dual(freedom_matroid(w))) == freedom_key(dual_word(w)) for w in _words(top))


def prop_closure_formulas(top: int) -> bool:
    for w in _words(top):
        M = freedom_matroid(w)
        for mask in range(1 << M.n):
            subset = [i + 1 for i in range(M.n) if mask >> i & 1]
            closed = closure_mask(M, mask)
            if sum(1 << (x - 1) for x in closure_formula(w, subset)) != closed:
                return False
            if is_closed_characterization(w, subset) != (closed == mask):
                return False
            if closed == mask and closed_rank(w, subset) != int(M.ranks[mask]):
                return False
    return True


def prop_shifting(top: int) -> bool:
    return all(shifting_holds(w) for w in _words(top))


def prop_shuffles(top: int) -> bool:
    zoo = list(_zoo(top)) + [freedom_matroid(w) for w in _words(top)]
    return all(shuffles_realize_ideal(M) for M in zoo)


def prop_order_ideal(top: int) -> bool:
    zoo = list(_zoo(top)) + [named(name) for name in ('L', 'N', 'D', 'five_coplanar', 'U24_P2', 'U23_P2')]
    zoo += [freedom_matroid(w) for w in _words(top)]
    return all(is_order_ideal(lambda_image(M)) for M in zoo)


def prop_bruhat(top: int) -> bool:
    perms = list(permutations(range(1, 5)))
    if any(bruhat_leq(s, t) != bruhat_leq_by_covers(s, t) for s in perms for t in perms):
        return False
    return all(lambda_order_reversing_check(w) for w in _words(top))


def prop_two_routes(top: int) -> bool:
    for n in range(top + 1):
        for r in range(n + 1):
            matrix_C(n, r, check=True)
    return True


def prop_inverse(top: int) -> bool:
    return all(matrix_C(n, r).matmul(inverse_coefficients(n, r)).is_identity()
               for n in range(top + 1) for r in range(n + 1))


def prop_associative(top: int) -> bool:
    freedom = get_family('freedom')
    words = [w for w in _words(top - 2) if w]
    return all(product_is_associative(freedom_matroid(a), freedom_matroid(b), freedom_matroid(c), freedom)
               for a in words for b in words for c in words if len(a + b + c) <= top)


def prop_deconcatenation(top: int) -> bool:
    return dual_basis_check(top).ok


PROPERTY_SUITES: List[Tuple[str, Callable[[int], bool], int, int]] = [
    # name, suite, quick n, full n
    ('rank axioms', prop_rank_axioms, 4, 5),
    ('minor identities', prop_minor_identities, 4, 6),
    ('coassociativity', prop_coassociative, 5, 7),
    ('counit laws', prop_counit, 4, 5),
    ('bigrading', prop_bigraded, 4, 5),
    ('duality antiisomorphism', prop_duality, 4, 6),
    ('dual-word formula', prop_dual_word, 6, 8),
    ('closure and closed-set formulas', prop_closure_formulas, 6, 8),
    ('rank never drops when shifting upward', prop_shifting, 6, 7),
    ('shuffles realise every word below the distinguished word', prop_shuffles, 5, 6),
    ('λ-images are order ideals', prop_order_ideal, 5, 6),
    ('λ reverses Bruhat order on covers', prop_bruhat, 4, 5),
    ('c(w, v) by chains and by orderings', prop_two_routes, 5, 7),
    ('C·C^{-1} = I', prop_inverse, 5, 7),
    ("deconcatenation coproduct on P'", prop_deconcatenation, 4, 5),
    ('associativity of the freedom product', prop_associative, 4, 6),
]


def check_properties(full: bool = False) -> bool:
    all_ok = True
    for name, suite, quick_n, full_n in PROPERTY_SUITES:
        top = full_n if full else quick_n
        try:
            ok = suite(top)
        except MatroidError as e:
            print(f"  ✗ {name} (n ≤ {top}): {e}")
            ok = False
        else:
            print(f"  {'✓' if ok else '✗'} {name} (n ≤ {top})")
        all_ok = all_ok and ok
    return all_ok


CRITERIA: List[Tuple[str, Callable[[bool], bool]]] = [
    ("Matrix C for W(4,2)", check_matrix_c),
    ("Enlarged W(4,2) block with P_2⊕P_2", check_enlarged_matrix),
    ("δ(1010)", check_delta_1010),
    ("δ(L)", check_delta_L),
    ("Products of points, loops and circuits", check_products),
    ("P_1001 and M_0110 expansions", check_p_expansions),
    ("λ-image of M_w is the ideal below w", check_image_theorem),
    ("U_{2,4}⊕P_2 has a non-principal λ-image", check_non_principal_image),
    ("Bases of M_0100110", check_bases),
    ("2^n freedom matroids up to isomorphism", check_freedom_census),
    ("Property suites", check_properties),
]


def run_acceptance(full: bool = False) -> int:
    """Run every criterion, printing one line per criterion and a summary.

    Args:
        full: Use the larger sizes (n = 7 images, n = 8 census, up to n = 8 in the suites)

    Returns:
        0 if every criterion passed, 1 otherwise
    """
    print(f"Acceptance Suite ({'full' if full else 'quick'})")
    print("=" * 60)
    failed = []
    for number, (title, check) in enumerate(CRITERIA, 1):
        start = time.time()
        try:
            ok = check(full)
        except MatroidError as e:
            print(f"  Error: {e}")
            ok = False
        elapsed = time.time() - start
        print(f"{'✓' if ok else '✗'} {number}. {title} ({elapsed:.1f}s)")
        if not ok:
            failed.append(f"{number}. {title}")

    print("\n" + "=" * 60)
    print("SUMMARY")
    print("=" * 60)
    if not failed:
        print(f"✓ All {len(CRITERIA)} criteria passed")
        return 0
    print(f"✗ {len(failed)} of {len(CRITERIA)} criteria failed")
    for title in failed:
        print(f"  - {title}")
    return 1


if __name__ == '__main__':
    sys.exit(run_acceptance(full='--full' in sys.argv[1:]))
