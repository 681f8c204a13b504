#!/usr/bin/env python3
"""Census of all matroids on small ground sets via single-element extensions."""

from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

import numpy as np

from canonical import CanonicalKey, canonicalize, keys_sorted
from catalogue_store import CatalogueStore
from config import check_cap
from matroid import Matroid, closure_mask, empty

KNOWN_COUNTS = (1, 2, 4, 8, 17, 38, 98)

_levels: Dict[int, List[CanonicalKey]] = {}


def closure_table(M: Matroid) -> np.ndarray:
    return np.array([closure_mask(M, m) for m in range(1 << M.n)], dtype=np.int64)


def flats(M: Matroid) -> List[int]:
    """All flats as bitmasks, sorted by rank then mask."""
    closed = [m for m in range(1 << M.n) if closure_mask(M, m) == m]
    return sorted(closed, key=lambda m: (int(M.ranks[m]), m))


def _modular_meets(M: Matroid, flat_list: List[int]) -> Dict[int, List[Tuple[int, int]]]:
    """For each flat F, the incomparable modular pairs of flats meeting in F."""
    meets: Dict[int, List[Tuple[int, int]]] = {f: [] for f in flat_list}
    r = M.ranks
    for f1, f2 in combinations(flat_list, 2):
        meet = f1 & f2
        if meet in (f1, f2):
            continue
        join_rank = r[f1 | f2]
        if int(r[f1]) + int(r[f2]) == int(join_rank) + int(r[meet]):
            meets[meet].append((f1, f2))
    return meets


def modular_cuts(M: Matroid) -> Iterator[FrozenSet[int]]:
    """Every modular cut of the lattice of flats, the empty and the full cut included.

    Flats are decided from the top rank down: a flat is forced out if a flat
    above it is out, and forced in if it is the meet of a modular pair already in.
    """
    flat_list = flats(M)[::-1]
    above = {f: [g for g in flat_list if g != f and g & f == f] for f in flat_list}
    meets = _modular_meets(M, flat_list)

    chosen: Set[int] = set()
    excluded: Set[int] = set()

    def decide(i: int) -> Iterator[FrozenSet[int]]:
        if i == len(flat_list):
            yield frozenset(chosen)
            return
        f = flat_list[i]
        forced_out = any(g in excluded for g in above[f])
        forced_in = any(a in chosen and b in chosen for a, b in meets[f])
        if forced_in and forced_out:
            return
        if not forced_out:
            chosen.add(f)
            yield from decide(i + 1)
            chosen.discard(f)
        if not forced_in:
            excluded.add(f)
            yield from decide(i + 1)
            excluded.discard(f)

    yield from decide(0)


def extend_by_cut(M: Matroid, cut: FrozenSet[int]) -> Matroid:
    """Add element n+1 so that r(A + e) = r(A) exactly when cl(A) is in the cut."""
    closures = closure_table(M)
    in_cut = np.array([int(c) in cut for c in closures], dtype=bool)
    low = M.ranks.astype(np.int64)
    high = np.where(in_cut, low, low + 1)
    return Matroid(M.n + 1, np.concatenate((low, high)))


def single_element_extensions(M: Matroid) -> List[Matroid]:
    return [extend_by_cut(M, cut) for cut in modular_cuts(M)]


def census(n: int, store: Optional[CatalogueStore] = None, verbose: bool = False) -> List[CanonicalKey]:
    """Isomorphism classes of all matroids on n elements.

    Level k is obtained by canonicalising every single-element extension of
    every class at level k-1.
    """
    check_cap('census_n', n)
    if n in _levels:
        return list(_levels[n])
    if store is not None and store.has_classes('all', n):
        _levels[n] = store.get_classes('all', n)
        return list(_levels[n])
    if n == 0:
        level = [canonicalize(empty())]
    else:
        previous = census(n - 1, store=store, verbose=verbose)
        found: Set[CanonicalKey] = set()
        for k, key in enumerate(previous, 1):
            for ext in single_element_extensions(key.to_matroid()):
                found.add(canonicalize(ext))
            if verbose:
                print(f"  [{k}/{len(previous)}] extended n={n - 1} classes, {len(found)} classes on {n}")
        level = keys_sorted(list(found))
    _levels[n] = level
    if store is not None:
        store.record_classes('all', n, level)
    if verbose:
        print(f"✓ {len(level)} matroids on {n} elements")
    return list(level)


def rank_profile(keys: List[CanonicalKey]) -> Dict[int, int]:
    """Number of classes per rank."""
    profile: Dict[int, int] = {}
    for key in keys:
        profile[key.rank] = profile.get(key.rank, 0) + 1
    return dict(sorted(profile.items()))
