#!/usr/bin/env python3
"""Canonical forms and isomorphism testing for rank-table matroids."""

import hashlib
import threading
from collections import OrderedDict
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import check_cap, get_config
from matroid import Matroid, relabel


@dataclass(frozen=True)
class CanonicalKey:
    """Isomorphism class of a matroid: its lexicographically least rank table."""

    n: int
    ranks: bytes

    @property
    def rank(self) -> int:
        return self.ranks[-1]

    @property
    def nullity(self) -> int:
        return self.n - self.rank

    @property
    def digest(self) -> str:
        return hashlib.sha1(bytes([self.n]) + self.ranks).hexdigest()[:10]

    def sort_key(self) -> Tuple[int, int, str]:
        return (self.rank, self.nullity, self.digest)

    def to_matroid(self) -> Matroid:
        return Matroid(self.n, np.frombuffer(self.ranks, dtype=np.uint8))

    def to_json(self) -> Dict:
        return {'n': self.n, 'ranks': list(self.ranks), 'digest': self.digest}

    def __lt__(self, other: 'CanonicalKey') -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"CanonicalKey(n={self.n}, rank={self.rank}, {self.digest})"


def key_from_json(doc: Dict) -> CanonicalKey:
    return CanonicalKey(int(doc['n']), bytes(int(x) for x in doc['ranks']))


class _KeyCache:
    """Bounded LRU map from raw rank tables to canonical tables."""

    def __init__(self):
        self._lock = threading.Lock()
        self._data: 'OrderedDict[Tuple[int, bytes], bytes]' = OrderedDict()
        self.hits = 0
        self.misses = 0

    def get(self, key: Tuple[int, bytes]) -> Optional[bytes]:
        with self._lock:
            value = self._data.get(key)
            if value is None:
                self.misses += 1
                return None
            self._data.move_to_end(key)
            self.hits += 1
            return value

    def put(self, key: Tuple[int, bytes], value: bytes) -> None:
        limit = get_config().cache_size
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > limit:
                self._data.popitem(last=False)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = self.misses = 0

    def __len__(self) -> int:
        return len(self._data)


_cache = _KeyCache()


def cache_info() -> Dict[str, int]:
    return {'size': len(_cache), 'hits': _cache.hits, 'misses': _cache.misses}


def clear_cache() -> None:
    _cache.clear()


def _swap_table(n: int, x: int, y: int) -> np.ndarray:
    """Index permutation of [0, 2^n) exchanging bits x and y."""
    idx = np.arange(1 << n, dtype=np.int64)
    bx, by = 1 << x, 1 << y
    differ = ((idx >> x) & 1) != ((idx >> y) & 1)
    return np.where(differ, idx ^ (bx | by), idx)


def twin_classes(ranks: np.ndarray, n: int) -> List[int]:
    """Class representative per element (0-based): x, y are twins when swapping them is an automorphism."""
    parent = list(range(n))
    for x in range(n):
        if parent[x] != x:
            continue
        for y in range(x + 1, n):
            if parent[y] == y and np.array_equal(ranks, ranks[_swap_table(n, x, y)]):
                parent[y] = x
    return parent


def _minimal_table(n: int, ranks: np.ndarray) -> bytes:
    """Least relabelled rank table, built one element at a time.

    Placing the k-th element fixes the table block [2^(k-1), 2^k); only partial
    orders whose block is minimal survive, and of several twins only the first
    unplaced one is tried.
    """
    if n == 0:
        return ranks.tobytes()
    twin_of = twin_classes(ranks, n)
    frontier: List[Tuple[int, np.ndarray]] = [(0, np.zeros(1, dtype=np.int64))]
    table = [ranks[:1].tobytes()]
    for _level in range(n):
        best: Optional[bytes] = None
        survivors: List[Tuple[int, np.ndarray]] = []
        for used, old in frontier:
            tried = set()
            for x in range(n):
                if used >> x & 1 or twin_of[x] in tried:
                    continue
                tried.add(twin_of[x])
                block_masks = old | (1 << x)
                block = ranks[block_masks].tobytes()
                if best is None or block < best:
                    best = block
                    survivors = [(used | 1 << x, np.concatenate((old, block_masks)))]
                elif block == best:
                    survivors.append((used | 1 << x, np.concatenate((old, block_masks))))
        frontier = survivors
        table.append(best)
    return b''.join(table)


def canonicalize(M: Matroid, checked: bool = True) -> CanonicalKey:
    """Canonical key of M; equal keys exactly for isomorphic matroids.

    Worker processes pass ``checked=False``; the parent has already applied the cap.
    """
    if checked:
        check_cap('canon_n', M.n)
    raw = (M.n, M.table_bytes())
    cached = _cache.get(raw)
    if cached is None:
        cached = _minimal_table(M.n, M.ranks)
        _cache.put(raw, cached)
    return CanonicalKey(M.n, cached)


def are_isomorphic(M: Matroid, N: Matroid) -> bool:
    if M.n != N.n or M.rank != N.rank:
        return False
    return canonicalize(M) == canonicalize(N)


def find_isomorphism(M: Matroid, N: Matroid) -> Optional[Tuple[int, ...]]:
    """Brute-force search for an ordering taking N onto M (slow; small n only).

    Returns ``order`` with ``relabel(N, order) == M``, or None.
    """
    check_cap('perm_n', M.n)
    if M.n != N.n:
        return None
    for order in permutations(range(1, M.n + 1)):
        if relabel(N, order) == M:
            return order
    return None


def canonical_bruteforce(M: Matroid) -> bytes:
    """Least rank table over all n! relabellings (reference for small n)."""
    check_cap('perm_n', M.n)
    return min(relabel(M, order).table_bytes() for order in permutations(range(1, M.n + 1)))


def automorphism_twins(M: Matroid) -> List[frozenset]:
    """Twin classes as sets of 1-based labels."""
    parent = twin_classes(M.ranks, M.n)
    groups: Dict[int, List[int]] = {}
    for x, p in enumerate(parent):
        groups.setdefault(p, []).append(x + 1)
    return [frozenset(g) for _, g in sorted(groups.items())]


def describe(key: CanonicalKey, names: Optional[Dict[CanonicalKey, str]] = None) -> str:
    """Display name for a key: a registered name, else n/rank/digest."""
    if names and key in names:
        return names[key]
    if key.n == 0:
        return '∅'
    return f"[n={key.n} r={key.rank} {key.digest}]"


def keys_sorted(keys: Sequence[CanonicalKey]) -> List[CanonicalKey]:
    return sorted(keys, key=CanonicalKey.sort_key)
