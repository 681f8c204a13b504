#!/usr/bin/env python3
"""Freedom matroids M_w named by 0/1 words: construction, closure, minors and duality."""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import numpy as np

from canonical import CanonicalKey, canonicalize
from config import check_cap
from matroid import (Matroid, closure, direct_sum, empty, free, from_flag, from_mask,
                     is_independent, popcount, to_mask)
from matroid_errors import ConsistencyError, DomainError
from word_order import Word, all_words, pi, subset_leq, validate_word

Flag = List[FrozenSet[int]]


@dataclass(frozen=True)
class FreedomMatroid:
    word: Word
    matroid: Matroid

    @property
    def rank(self) -> int:
        return self.word.count('1')

    @property
    def nullity(self) -> int:
        return self.word.count('0')


def flag_of_word(w: Word) -> Flag:
    """Initial-segment flag of w: S_{k-1} = {1, ..., t_k - 1} for the k-th 1 at t_k, S_r = [n]."""
    validate_word(w)
    n = len(w)
    flag = [frozenset(range(1, t)) for t in sorted(pi(w))]
    flag.append(frozenset(range(1, n + 1)))
    return flag


def free_extension(M: Matroid) -> Matroid:
    """Add element n+1 in general position in the top rank."""
    check_cap('matroid_n', M.n + 1)
    low = M.ranks.astype(np.int64)
    high = np.minimum(low + 1, M.rank)
    return Matroid(M.n + 1, np.concatenate((low, high)))


def build_recursive(w: Word) -> Matroid:
    """A 1 adds a coloop, a 0 adds a free extension."""
    point = free(1)
    M = empty()
    for letter in validate_word(w):
        M = direct_sum(M, point) if letter == '1' else free_extension(M)
    return M


def build(w: Word) -> FreedomMatroid:
    """Realise M_w through its flag and through the recursive construction; both must agree."""
    validate_word(w)
    check_cap('matroid_n', len(w))
    by_flag = from_flag(len(w), flag_of_word(w))
    if by_flag != build_recursive(w):
        raise ConsistencyError(f"freedom matroid {w}", "flag and recursive constructions differ")
    return FreedomMatroid(w, by_flag)


@lru_cache(maxsize=4096)
def freedom_matroid(w: Word) -> Matroid:
    return build(w).matroid


def independent_iff_dominates(w: Word, A: Iterable[int]) -> bool:
    """A is independent in M_w exactly when A >= pi(w) in the subset order."""
    return subset_leq(pi(w), A)


def bases_by_dominance(w: Word) -> Set[FrozenSet[int]]:
    T = pi(w)
    return {frozenset(B) for B in combinations(range(1, len(w) + 1), len(T))
            if subset_leq(T, B)}


def _flag_masks(w: Word) -> List[int]:
    return [to_mask(s) for s in flag_of_word(w)]


def closure_formula(w: Word, A: Iterable[int]) -> FrozenSet[int]:
    """Closure of A as B ∪ S_m ∪ A for a maximal independent B inside A,
    with m the largest i such that B meets S_i in exactly i elements."""
    A = frozenset(A)
    masks = _flag_masks(w)
    B: List[int] = []
    for x in sorted(A):
        if independent_iff_dominates(w, B + [x]):
            B.append(x)
    b = to_mask(B)
    m = max(i for i, s in enumerate(masks) if popcount(b & s) == i)
    return frozenset(B) | from_mask(masks[m]) | A


def is_closed_characterization(w: Word, F: Iterable[int]) -> bool:
    """F is a flat iff F = A ∪ S_m with m the largest i having S_i ⊆ F
    and |A ∩ S_i| < i - m for every i > m."""
    f = to_mask(F)
    masks = _flag_masks(w)
    contained = [i for i, s in enumerate(masks) if s & ~f == 0]
    if not contained:
        return False
    m = max(contained)
    a = f & ~masks[m]
    return all(popcount(a & masks[i]) < i - m for i in range(m + 1, len(masks)))


def closed_rank(w: Word, F: Iterable[int]) -> int:
    """Rank m + |A| of a flat F = A ∪ S_m."""
    f = to_mask(F)
    masks = _flag_masks(w)
    m = max(i for i, s in enumerate(masks) if s & ~f == 0)
    return m + popcount(f & ~masks[m])


def flat_size_bound_holds(w: Word) -> bool:
    """Every flat of rank k has at most |S_k| elements."""
    M = freedom_matroid(w)
    sizes = [len(s) for s in flag_of_word(w)]
    for mask in range(1 << M.n):
        if closure(M, from_mask(mask)) == from_mask(mask):
            if popcount(mask) > sizes[int(M.ranks[mask])]:
                return False
    return True


def minor_formulas(w: Word, e: int) -> Tuple[Flag, Flag]:
    """Deletion and contraction flags of M_w at e, in the original labels.

    Deletion: T_i = S_i - e. Contraction: drop T_{k-1}, k the first index with e in S_k.
    """
    n = len(validate_word(w))
    if e < 1 or e > n:
        raise DomainError(f"element {e} is not in [{n}]")
    flag = flag_of_word(w)
    deletion = [s - {e} for s in flag]
    k = min(i for i, s in enumerate(flag) if e in s)
    if k == 0:
        return deletion, list(deletion)
    return deletion, deletion[:k - 1] + deletion[k:]


def realize_flag(ground: Iterable[int], flag: Flag) -> Matroid:
    """Matroid of a weakly nested flag on ``ground``, relabelled 1..|ground| in order."""
    labels = sorted(ground)
    place = {x: i for i, x in enumerate(labels, 1)}
    relabelled = [frozenset(place[x] for x in s) for s in flag]
    return from_flag(len(labels), relabelled, strict=False)


def dual_word(w: Word) -> Word:
    """Word of the dual: complement every letter, then reverse."""
    return ''.join('1' if c == '0' else '0' for c in reversed(validate_word(w)))


def shifting_holds(w: Word) -> bool:
    """Replacing a in A by a larger b outside A never lowers the rank."""
    M = freedom_matroid(w)
    n = M.n
    for mask in range(1 << n):
        for a in range(n):
            if not mask >> a & 1:
                continue
            for b in range(a + 1, n):
                if mask >> b & 1:
                    continue
                if M.ranks[(mask & ~(1 << a)) | 1 << b] < M.ranks[mask]:
                    return False
    return True


@lru_cache(maxsize=None)
def freedom_catalogue(n: int) -> Dict[CanonicalKey, Word]:
    """Canonical key of every M_w with |w| = n, mapped to its word."""
    catalogue = {}
    for w in all_words(n):
        key = canonicalize(freedom_matroid(w))
        if key in catalogue:
            raise ConsistencyError(f"freedom matroids of length {n}",
                                   f"{catalogue[key]} and {w} are isomorphic")
        catalogue[key] = w
    return catalogue


def word_of_key(key: CanonicalKey) -> Optional[Word]:
    """The word w with M_w in the class of ``key``, or None if it is not a freedom matroid."""
    return freedom_catalogue(key.n).get(key)


def freedom_key(w: Word) -> CanonicalKey:
    return canonicalize(freedom_matroid(w))


def independent_agrees(w: Word) -> bool:
    """Independence by dominance matches independence by rank for every subset."""
    M = freedom_matroid(w)
    return all(independent_iff_dominates(w, from_mask(m)) == is_independent(M, from_mask(m))
               for m in range(1 << M.n))
