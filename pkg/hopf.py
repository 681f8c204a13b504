#!/usr/bin/env python3
"""Restriction-contraction coproduct of matroids and the dual product."""

from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import (Callable, Dict, Hashable, Iterable, Iterator, List, Mapping, Optional,
                    Sequence, Tuple, Union)

import numpy as np

from canonical import CanonicalKey, canonicalize
from config import check_cap, get_config
from matroid import (Matroid, circuit, contract_mask, deposit, dual, empty, free, restrict_mask,
                     uniform, zero)
from parallel import map_chunks

# entries per class-keyed memo
KEY_CACHE = 1 << 14

Basis = Hashable
MatroidLike = Union[Matroid, CanonicalKey]


def _order(basis) -> tuple:
    if isinstance(basis, CanonicalKey):
        return (0,) + basis.sort_key()
    if isinstance(basis, tuple):
        return tuple(_order(b) for b in basis)
    if isinstance(basis, str):
        return (1, -len(basis), basis)
    return (2, repr(basis))


class FormalSum:
    """Integer linear combination of basis elements; zero coefficients are dropped."""

    def __init__(self, terms: Union[Mapping, Iterable[Tuple[Basis, int]], None] = None):
        self._terms: Dict[Basis, int] = {}
        if terms is None:
            return
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for basis, coeff in pairs:
            self._add(basis, coeff)

    def _add(self, basis: Basis, coeff: int) -> None:
        value = self._terms.get(basis, 0) + coeff
        if value:
            self._terms[basis] = value
        else:
            self._terms.pop(basis, None)

    def coefficient(self, basis: Basis) -> int:
        return self._terms.get(basis, 0)

    def items(self) -> List[Tuple[Basis, int]]:
        """Terms in deterministic order."""
        return sorted(self._terms.items(), key=lambda kv: _order(kv[0]))

    def support(self) -> List[Basis]:
        return [b for b, _ in self.items()]

    def total(self) -> int:
        return sum(self._terms.values())

    def map_basis(self, fn: Callable[[Basis], Basis]) -> 'FormalSum':
        return type(self)((fn(b), c) for b, c in self._terms.items())

    def __add__(self, other: 'FormalSum') -> 'FormalSum':
        out = type(self)(self._terms)
        for b, c in other._terms.items():
            out._add(b, c)
        return out

    def __sub__(self, other: 'FormalSum') -> 'FormalSum':
        return self + other * -1

    def __mul__(self, scalar: int) -> 'FormalSum':
        return type(self)((b, c * scalar) for b, c in self._terms.items())

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Basis]:
        return iter(self.support())

    def __contains__(self, basis: Basis) -> bool:
        return basis in self._terms

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self)} terms)"

    def format(self, namer: Callable[[Basis], str] = str) -> str:
        if not self._terms:
            return '0'
        parts = []
        for basis, coeff in self.items():
            name = namer(basis)
            parts.append(name if coeff == 1 else f"{coeff}·{name}")
        return ' + '.join(parts)

    def to_json(self) -> Dict:
        terms = []
        for basis, coeff in self.items():
            terms.append({'class': _basis_json(basis), 'coeff': str(coeff)})
        return {'terms': terms}


def _basis_json(basis):
    if isinstance(basis, CanonicalKey):
        return basis.to_json()
    if isinstance(basis, tuple):
        return [_basis_json(b) for b in basis]
    return basis


class TensorSum(FormalSum):
    """Integer combination of ordered pairs (left, right)."""

    def swap(self) -> 'TensorSum':
        return TensorSum(((b, a), c) for (a, b), c in self._terms.items())

    def format(self, namer: Callable[[Basis], str] = str) -> str:
        return super().format(lambda pair: ' ⊗ '.join(namer(x) for x in pair))

    def to_json(self) -> Dict:
        terms = []
        for (left, right), coeff in self.items():
            terms.append({'left': _basis_json(left), 'right': _basis_json(right),
                          'coeff': str(coeff)})
        return {'terms': terms}


def as_key(M: MatroidLike) -> CanonicalKey:
    return M if isinstance(M, CanonicalKey) else canonicalize(M)


@lru_cache(maxsize=None)
def empty_key() -> CanonicalKey:
    return canonicalize(empty())


def _coproduct_chunk(n: int, table: bytes, start: int, stop: int) -> Counter:
    M = Matroid(n, np.frombuffer(table, dtype=np.uint8))
    counts: Counter = Counter()
    for mask in range(start, stop):
        left = canonicalize(restrict_mask(M, mask), checked=False)
        right = canonicalize(contract_mask(M, mask), checked=False)
        counts[(left, right)] += 1
    return counts


@lru_cache(maxsize=KEY_CACHE)
def coproduct_of_key(key: CanonicalKey) -> TensorSum:
    check_cap('coproduct_n', key.n)
    check_cap('canon_n', key.n)
    return TensorSum(_coproduct_chunk(key.n, key.ranks, 0, 1 << key.n))


def coproduct(M: MatroidLike, threads: Optional[int] = None) -> TensorSum:
    """δ(M) = Σ_A M|A ⊗ M/A, restriction on the left, terms collected by class."""
    key = as_key(M)
    threads = threads or get_config().threads
    if threads <= 1 or key.n < 6:
        return coproduct_of_key(key)
    check_cap('coproduct_n', key.n)
    size = 1 << key.n
    step = max(1, size // (4 * threads))
    chunks = [(key.n, key.ranks, start, min(size, start + step)) for start in range(0, size, step)]
    total: Counter = Counter()
    for part in map_chunks(_coproduct_chunk, chunks, threads=threads, label='subset block'):
        total.update(part)
    return TensorSum(total)


def counit(x: FormalSum) -> int:
    """Coefficient of the empty matroid."""
    return x.coefficient(empty_key())


def counit_laws_hold(M: MatroidLike) -> bool:
    """(ε⊗id)δ(M) = M = (id⊗ε)δ(M)."""
    key = as_key(M)
    delta = coproduct(key)
    nothing = empty_key()
    left = FormalSum((b, c) for (a, b), c in delta.items() if a == nothing)
    right = FormalSum((a, c) for (a, b), c in delta.items() if b == nothing)
    expected = FormalSum({key: 1})
    return left == expected and right == expected


def is_bigraded(M: MatroidLike) -> bool:
    """Every term K1 ⊗ K2 has rank and nullity adding up to those of M."""
    key = as_key(M)
    return all(a.rank + b.rank == key.rank and a.nullity + b.nullity == key.nullity
               for a, b in coproduct(key).support())


def is_cocommutative(M: MatroidLike) -> bool:
    delta = coproduct(M)
    return delta == delta.swap()


def section_coefficient(M: MatroidLike, N1: MatroidLike, N2: MatroidLike) -> int:
    """Number of subsets A with M|A ≅ N1 and M/A ≅ N2."""
    return coproduct(M).coefficient((as_key(N1), as_key(N2)))


def _interval_minor(M: Matroid, low: int, high: int) -> Matroid:
    """(M|high)/low, relabelled in increasing order."""
    labels = [i + 1 for i in range(M.n) if (high & ~low) >> i & 1]
    old = deposit(len(labels), labels) | low
    return Matroid(len(labels), M.ranks[old].astype(np.int64) - int(M.ranks[low]))


def multisection_coefficient(M: MatroidLike, parts: Sequence[MatroidLike]) -> int:
    """Number of chains ∅ = S_0 ⊆ ... ⊆ S_k = S with (M|S_i)/S_{i-1} ≅ parts[i-1]."""
    key = as_key(M)
    check_cap('coproduct_n', key.n)
    keys = [as_key(p) for p in parts]
    if sum(k.n for k in keys) != key.n or sum(k.rank for k in keys) != key.rank:
        return 0
    matroid = key.to_matroid()
    full = (1 << key.n) - 1
    minor_keys: Dict[Tuple[int, int], CanonicalKey] = {}
    memo: Dict[Tuple[int, int], int] = {}

    def chains(low: int, i: int) -> int:
        if i == len(keys):
            return 1 if low == full else 0
        if (low, i) in memo:
            return memo[(low, i)]
        target = keys[i]
        free_bits = [1 << b for b in range(key.n) if not low >> b & 1]
        base_rank = int(matroid.ranks[low])
        count = 0
        for chosen in combinations(free_bits, target.n):
            high = low | sum(chosen)
            if int(matroid.ranks[high]) - base_rank != target.rank:
                continue
            minor = minor_keys.get((low, high))
            if minor is None:
                minor = canonicalize(_interval_minor(matroid, low, high))
                minor_keys[(low, high)] = minor
            if minor == target:
                count += chains(high, i + 1)
        memo[(low, i)] = count
        return count

    return chains(0, 0)


def letter_multisections(M: MatroidLike) -> Counter:
    """⟨M; x_1, ..., x_n⟩ for every 0/1 word x: chains through single elements,
    a step being a point (1) or a loop (0)."""
    key = as_key(M)
    check_cap('coproduct_n', key.n)
    ranks = list(key.ranks)
    full = (1 << key.n) - 1
    layer: Dict[int, Counter] = {0: Counter({'': 1})}
    for _step in range(key.n):
        following: Dict[int, Counter] = {}
        for low, prefixes in layer.items():
            rest = full & ~low
            while rest:
                bit = rest & -rest
                letter = '1' if ranks[low | bit] > ranks[low] else '0'
                target = following.setdefault(low | bit, Counter())
                for prefix, count in prefixes.items():
                    target[prefix + letter] += count
                rest ^= bit
        layer = following
    return layer.get(full, Counter())


@lru_cache(maxsize=KEY_CACHE)
def _iterated_key(key: CanonicalKey, k: int, side: str) -> FormalSum:
    if k == 1:
        return FormalSum({(key,): 1})
    terms: Counter = Counter()
    for (left, right), coeff in coproduct_of_key(key).items():
        if side == 'right':
            for tail, c in _iterated_key(right, k - 1, side).items():
                terms[(left,) + tail] += coeff * c
        else:
            for head, c in _iterated_key(left, k - 1, side).items():
                terms[head + (right,)] += coeff * c
    return FormalSum(terms)


def iterated_coproduct(M: MatroidLike, k: int, side: str = 'right') -> FormalSum:
    """k-fold coproduct over k-tuples of classes, expanding the right (or left) factor."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if side not in ('left', 'right'):
        raise ValueError("side must be 'left' or 'right'")
    return _iterated_key(as_key(M), k, side)


def is_coassociative(M: MatroidLike) -> bool:
    """(δ⊗id)δ(M) = (id⊗δ)δ(M), and each coefficient is a multisection coefficient."""
    right = iterated_coproduct(M, 3, 'right')
    if right != iterated_coproduct(M, 3, 'left'):
        return False
    return all(coeff == multisection_coefficient(M, list(triple)) for triple, coeff in right.items())


def product(N1: MatroidLike, N2: MatroidLike, family) -> FormalSum:
    """N1·N2 = Σ_K [K; N1, N2] K over the classes K of the family of size |N1| + |N2|."""
    k1, k2 = as_key(N1), as_key(N2)
    n = k1.n + k2.n
    check_cap('coproduct_n', n)
    terms = {}
    for K in family.members(n):
        if K.rank != k1.rank + k2.rank:
            continue
        coeff = coproduct_of_key(K).coefficient((k1, k2))
        if coeff:
            terms[K] = coeff
    return FormalSum(terms)


def product_sums(x: FormalSum, y: FormalSum, family) -> FormalSum:
    """Bilinear extension of ``product``."""
    terms: Counter = Counter()
    for a, ca in x.items():
        for b, cb in y.items():
            for K, c in product(a, b, family).items():
                terms[K] += c * ca * cb
    return FormalSum(terms)


def power(N: MatroidLike, k: int, family) -> FormalSum:
    out = FormalSum({empty_key(): 1})
    single = FormalSum({as_key(N): 1})
    for _ in range(k):
        out = product_sums(out, single, family)
    return out


def product_is_associative(N1: MatroidLike, N2: MatroidLike, N3: MatroidLike, family) -> bool:
    """(N1·N2)·N3 = N1·(N2·N3) inside the family."""
    a, b, c = (FormalSum({as_key(N): 1}) for N in (N1, N2, N3))
    return product_sums(product_sums(a, b, family), c, family) == \
        product_sums(a, product_sums(b, c, family), family)


@lru_cache(maxsize=KEY_CACHE)
def dual_key(key: CanonicalKey) -> CanonicalKey:
    return canonicalize(dual(key.to_matroid()))


def dual_sum(x: FormalSum) -> FormalSum:
    return x.map_basis(dual_key)


def duality_check(M: MatroidLike, family=None) -> bool:
    """δ(M*) = (D⊗D)τδ(M); with a family, also (M·N)* = N*·M* for N the point and the loop."""
    key = as_key(M)
    lhs = coproduct(dual_key(key))
    rhs = TensorSum(((dual_key(b), dual_key(a)), c) for (a, b), c in coproduct(key).items())
    if lhs != rhs:
        return False
    if family is None:
        return True
    for letter in (free(1), zero(1)):
        other = canonicalize(letter)
        if dual_sum(product(key, other, family)) != product(dual_key(other), dual_key(key), family):
            return False
        if dual_sum(product(other, key, family)) != product(dual_key(key), dual_key(other), family):
            return False
    return True


def _clamped_uniform(r: int, n: int) -> CanonicalKey:
    return canonicalize(uniform(max(0, min(r, n)), n))


def uniform_coproduct_formula(r: int, n: int) -> TensorSum:
    """Σ_i C(n,i) U_{r,i} ⊗ U_{r-i,n-i}, ranks clamped into [0, size]."""
    out = TensorSum()
    for i in range(n + 1):
        out = out + TensorSum({(_clamped_uniform(r, i), _clamped_uniform(r - i, n - i)): comb(n, i)})
    return out


def free_coproduct_formula(n: int) -> TensorSum:
    """Σ_k C(n,k) F_k ⊗ F_{n-k}."""
    out = TensorSum()
    for k in range(n + 1):
        out = out + TensorSum({(canonicalize(free(k)), canonicalize(free(n - k))): comb(n, k)})
    return out


def circuit_coproduct_formula(m: int) -> TensorSum:
    """C_m ⊗ ∅ + Σ_{k<m} C(m,k) F_k ⊗ C_{m-k}."""
    out = TensorSum({(canonicalize(circuit(m)), empty_key()): 1})
    for k in range(m):
        out = out + TensorSum({(canonicalize(free(k)), canonicalize(circuit(m - k))): comb(m, k)})
    return out


def coefficient_total_is_power_of_two(M: MatroidLike) -> bool:
    key = as_key(M)
    return coproduct(key).total() == 1 << key.n
