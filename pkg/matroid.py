#!/usr/bin/env python3
"""Matroids stored as explicit rank tables indexed by subset bitmask."""

import json
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Set, Union

import numpy as np

from config import check_cap, get_config
from matroid_errors import AxiomViolation, DomainError, ExchangeViolation, InvalidFlag

Subset = Iterable[int]


def to_mask(subset: Subset) -> int:
    """Bitmask of a set of 1-based labels (bit i-1 for element i)."""
    mask = 0
    for x in subset:
        mask |= 1 << (x - 1)
    return mask


def from_mask(mask: int) -> FrozenSet[int]:
    """Set of 1-based labels for a bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def popcount(mask: int) -> int:
    return bin(mask).count('1')


@lru_cache(maxsize=None)
def _indices(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


@lru_cache(maxsize=None)
def popcounts(n: int) -> np.ndarray:
    """Cardinality of every subset of [n], indexed by bitmask."""
    counts = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        counts[1 << i:1 << (i + 1)] = counts[:1 << i] + 1
    return counts


def deposit(n_new: int, labels: Sequence[int]) -> np.ndarray:
    """Old bitmask for every new bitmask when new element t+1 is old element labels[t]."""
    old = np.zeros(1 << n_new, dtype=np.int64)
    idx = _indices(n_new)
    for t, label in enumerate(labels):
        old |= ((idx >> t) & 1) << (label - 1)
    return old


class Matroid:
    """A matroid on [n] given by its full rank table.

    ``ranks[m]`` is the rank of the subset with bitmask ``m``. Instances are
    immutable; build them through the module-level constructors, which check
    the rank axioms.
    """

    __slots__ = ('n', 'ranks')

    def __init__(self, n: int, ranks: np.ndarray):
        self.n = n
        ranks = np.array(ranks, dtype=np.uint8)
        ranks.setflags(write=False)
        self.ranks = ranks

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def rank(self) -> int:
        return int(self.ranks[-1])

    @property
    def nullity(self) -> int:
        return self.n - self.rank

    @property
    def ground(self) -> FrozenSet[int]:
        return frozenset(range(1, self.n + 1))

    def rank_of(self, subset: Subset) -> int:
        return int(self.ranks[self._mask_in_range(to_mask(subset))])

    def rank_of_mask(self, mask: int) -> int:
        return int(self.ranks[mask])

    def _mask_in_range(self, mask: int) -> int:
        if mask >> self.n:
            raise DomainError(f"subset {sorted(from_mask(mask))} is not contained in [{self.n}]")
        return mask

    def table_bytes(self) -> bytes:
        return self.ranks.tobytes()

    def to_json(self) -> Dict:
        return {'n': self.n, 'ranks': [int(x) for x in self.ranks]}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.ranks, other.ranks)

    def __hash__(self) -> int:
        return hash((self.n, self.table_bytes()))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank})"


def validate_rank_axioms(n: int, ranks: np.ndarray, submodular: Optional[bool] = None) -> None:
    """Check normalization, unit increase and (optionally) submodularity.

    Submodularity is checked in its local form r(A+x) + r(A+y) >= r(A+x+y) + r(A),
    which is equivalent to the global inequality once unit increase holds.

    Raises:
        AxiomViolation: naming the axiom and a witness
    """
    if submodular is None:
        submodular = n <= get_config().submodular_n
    ranks = np.asarray(ranks, dtype=np.int64)
    if ranks[0] != 0:
        raise AxiomViolation('normalization', (frozenset(),))

    idx = _indices(n)
    for i in range(n):
        bit = 1 << i
        base = idx[(idx & bit) == 0]
        step = ranks[base | bit] - ranks[base]
        bad = np.nonzero((step < 0) | (step > 1))[0]
        if bad.size:
            a = int(base[bad[0]])
            raise AxiomViolation('unit-increase', (from_mask(a), from_mask(a | bit)))

    if not submodular:
        return
    for i, j in combinations(range(n), 2):
        bi, bj = 1 << i, 1 << j
        base = idx[(idx & (bi | bj)) == 0]
        lhs = ranks[base | bi] + ranks[base | bj]
        rhs = ranks[base | bi | bj] + ranks[base]
        bad = np.nonzero(lhs < rhs)[0]
        if bad.size:
            a = int(base[bad[0]])
            raise AxiomViolation('submodularity', (from_mask(a | bi), from_mask(a | bj)))


def from_rank_table(n: int, table: Union[Sequence[int], Mapping, np.ndarray],
                    submodular: Optional[bool] = None) -> Matroid:
    """Build a matroid from a rank for every subset of [n].

    Args:
        n: Ground-set size
        table: Sequence indexed by bitmask, or a mapping from subsets
            (bitmasks or iterables of labels) to ranks
        submodular: Force the submodularity check on or off

    Returns:
        Validated Matroid
    """
    check_cap('matroid_n', n)
    if isinstance(table, Mapping):
        ranks = np.full(1 << n, -1, dtype=np.int64)
        for subset, value in table.items():
            mask = subset if isinstance(subset, (int, np.integer)) else to_mask(subset)
            if mask >> n:
                raise DomainError(f"subset {sorted(from_mask(mask))} is not contained in [{n}]")
            ranks[mask] = value
        missing = np.nonzero(ranks < 0)[0]
        if missing.size:
            raise DomainError(f"rank table missing subset {sorted(from_mask(int(missing[0])))}")
    else:
        ranks = np.asarray(table, dtype=np.int64)
        if ranks.shape != (1 << n,):
            raise DomainError(f"rank table must have {1 << n} entries, got {ranks.size}")
    validate_rank_axioms(n, ranks, submodular)
    return Matroid(n, ranks)


def from_bases(n: int, bases: Iterable[Subset]) -> Matroid:
    """Build a matroid from its bases after checking basis exchange."""
    check_cap('matroid_n', n)
    basis_sets = {frozenset(b) for b in bases}
    if not basis_sets:
        raise DomainError("a matroid needs at least one basis")
    sizes = {len(b) for b in basis_sets}
    if len(sizes) != 1:
        raise DomainError(f"bases must have equal cardinality, got sizes {sorted(sizes)}")
    for b in basis_sets:
        if not b <= frozenset(range(1, n + 1)):
            raise DomainError(f"basis {sorted(b)} is not contained in [{n}]")

    for b1 in basis_sets:
        for b2 in basis_sets:
            for x in b1 - b2:
                if not any((b1 - {x}) | {y} in basis_sets for y in b2 - b1):
                    raise ExchangeViolation(b1, b2, x)

    counts = popcounts(n)
    idx = _indices(n)
    ranks = np.zeros(1 << n, dtype=np.int64)
    for b in basis_sets:
        np.maximum(ranks, counts[idx & to_mask(b)], out=ranks)
    return Matroid(n, ranks)


def rank_from_independence(n: int, independent: np.ndarray) -> np.ndarray:
    """Rank table from a boolean independence table (largest independent subset)."""
    counts = popcounts(n)
    ranks = np.where(independent, counts, 0).astype(np.int64)
    for mask in range(1, 1 << n):
        if independent[mask]:
            continue
        best = 0
        rest = mask
        while rest:
            low = rest & -rest
            value = ranks[mask ^ low]
            if value > best:
                best = value
            rest ^= low
        ranks[mask] = best
    return ranks


def from_flag(n: int, flag: Sequence[Subset], strict: bool = True) -> Matroid:
    """Freedom matroid of a flag S_0, ..., S_r: I is independent iff |I & S_i| <= i.

    With ``strict=False`` consecutive members may coincide; minor formulas
    produce such weakly nested chains.
    """
    check_cap('matroid_n', n)
    masks = [to_mask(s) for s in flag]
    if not masks:
        raise InvalidFlag("a flag needs at least one set")
    full = (1 << n) - 1
    for s, m in zip(flag, masks):
        if m & ~full:
            raise InvalidFlag(f"{sorted(s)} is not contained in [{n}]")
    if masks[-1] != full:
        raise InvalidFlag(f"last set must be the ground set [{n}]")
    for i in range(1, len(masks)):
        if masks[i - 1] & ~masks[i]:
            raise InvalidFlag(f"S_{i - 1} is not contained in S_{i}")
        if strict and masks[i - 1] == masks[i]:
            raise InvalidFlag(f"S_{i - 1} = S_{i}; inclusions must be proper")

    idx = _indices(n)
    counts = popcounts(n)
    independent = np.ones(1 << n, dtype=bool)
    for i, m in enumerate(masks):
        independent &= counts[idx & m] <= i
    return Matroid(n, rank_from_independence(n, independent))


def uniform(r: int, n: int) -> Matroid:
    check_cap('matroid_n', n)
    if n < 0 or r < 0 or r > n:
        raise DomainError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    return Matroid(n, np.minimum(popcounts(n), r))


def free(n: int) -> Matroid:
    return uniform(n, n)


def zero(n: int) -> Matroid:
    return uniform(0, n)


def multipoint(n: int) -> Matroid:
    if n < 1:
        raise DomainError("the n-point needs n >= 1")
    return uniform(1, n)


def circuit(n: int) -> Matroid:
    if n < 1:
        raise DomainError("the n-circuit needs n >= 1")
    return uniform(n - 1, n)


def empty() -> Matroid:
    return zero(0)


def _check_subset(M: Matroid, mask: int) -> None:
    if mask >> M.n:
        raise DomainError(f"subset {sorted(from_mask(mask))} is not contained in [{M.n}]")


def restrict_mask(M: Matroid, mask: int) -> Matroid:
    _check_subset(M, mask)
    labels = sorted(from_mask(mask))
    return Matroid(len(labels), M.ranks[deposit(len(labels), labels)])


def contract_mask(M: Matroid, mask: int) -> Matroid:
    _check_subset(M, mask)
    labels = sorted(from_mask(M.full_mask & ~mask))
    base = int(M.ranks[mask])
    old = deposit(len(labels), labels) | mask
    return Matroid(len(labels), M.ranks[old].astype(np.int64) - base)


def restrict(M: Matroid, subset: Subset) -> Matroid:
    """M|A on A, relabelled 1..|A| in increasing order."""
    return restrict_mask(M, to_mask(subset))


def contract(M: Matroid, subset: Subset) -> Matroid:
    """M/A on S - A, relabelled 1..|S - A| in increasing order."""
    return contract_mask(M, to_mask(subset))


def delete(M: Matroid, subset: Subset) -> Matroid:
    mask = to_mask(subset)
    _check_subset(M, mask)
    return restrict_mask(M, M.full_mask & ~mask)


def relabel(M: Matroid, order: Sequence[int]) -> Matroid:
    """Matroid whose element i is element ``order[i-1]`` of M."""
    if sorted(order) != list(range(1, M.n + 1)):
        raise DomainError(f"{list(order)} is not an ordering of [{M.n}]")
    return Matroid(M.n, M.ranks[deposit(M.n, order)])


def dual(M: Matroid) -> Matroid:
    idx = _indices(M.n)
    ranks = popcounts(M.n) + M.ranks[M.full_mask ^ idx].astype(np.int64) - M.rank
    return Matroid(M.n, ranks)


def direct_sum(M1: Matroid, M2: Matroid) -> Matroid:
    """M1 on labels 1..n1 followed by M2 on n1+1..n1+n2."""
    n = M1.n + M2.n
    check_cap('matroid_n', n)
    idx = _indices(n)
    ranks = M1.ranks[idx & M1.full_mask].astype(np.int64) + M2.ranks[idx >> M1.n]
    return Matroid(n, ranks)


def closure_mask(M: Matroid, mask: int) -> int:
    base = M.ranks[mask]
    out = mask
    for i in range(M.n):
        bit = 1 << i
        if not mask & bit and M.ranks[mask | bit] == base:
            out |= bit
    return out


def closure(M: Matroid, subset: Subset) -> FrozenSet[int]:
    mask = to_mask(subset)
    _check_subset(M, mask)
    return from_mask(closure_mask(M, mask))


def is_independent(M: Matroid, subset: Subset) -> bool:
    mask = to_mask(subset)
    _check_subset(M, mask)
    return int(M.ranks[mask]) == popcount(mask)


def basis_masks(M: Matroid) -> List[int]:
    counts = popcounts(M.n)
    hits = np.nonzero((counts == M.rank) & (M.ranks == M.rank))[0]
    return [int(m) for m in hits]


def bases(M: Matroid) -> Set[FrozenSet[int]]:
    return {from_mask(m) for m in basis_masks(M)}


def loops(M: Matroid) -> FrozenSet[int]:
    return closure(M, ())


def coloops(M: Matroid) -> FrozenSet[int]:
    return frozenset(x for x in range(1, M.n + 1)
                     if M.ranks[M.full_mask ^ (1 << (x - 1))] < M.rank)


def nullity(M: Matroid) -> int:
    return M.nullity


def from_json(doc: Mapping) -> Matroid:
    """Matroid from ``{"n", "ranks"}`` or ``{"n", "bases"}``."""
    if 'n' not in doc:
        raise DomainError("matroid JSON needs an 'n' field")
    n = int(doc['n'])
    if 'ranks' in doc:
        return from_rank_table(n, [int(x) for x in doc['ranks']])
    if 'bases' in doc:
        return from_bases(n, [[int(x) for x in b] for b in doc['bases']])
    raise DomainError("matroid JSON needs a 'ranks' or 'bases' field")


def load_matroid(path: str) -> Matroid:
    with open(path, 'r') as f:
        return from_json(json.load(f))


def save_matroid(M: Matroid, path: str) -> None:
    with open(path, 'w') as f:
        json.dump(M.to_json(), f)
