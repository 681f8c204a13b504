#!/usr/bin/env python3
"""Tests for the census of all matroids by single-element extension."""

import sys

import pytest

import census as census_module
from canonical import canonicalize
from catalogue_store import CatalogueStore
from census import (KNOWN_COUNTS, census, extend_by_cut, flats, modular_cuts, rank_profile,
                    single_element_extensions)
from fixtures import named
from matroid import direct_sum, free, multipoint, uniform, zero
from matroid_errors import SizeCapExceeded


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
def test_known_counts(n):
    keys = census(n)
    assert len(keys) == KNOWN_COUNTS[n]
    assert len(set(keys)) == len(keys)


def test_rank_profile():
    assert rank_profile(census(3)) == {0: 1, 1: 3, 2: 3, 3: 1}


def test_census_contains_named_matroids():
    five = set(census(5))
    for name in ('L', 'five_coplanar', 'U23_P2'):
        assert canonicalize(named(name)) in five


def test_flats():
    assert flats(uniform(2, 3)) == [0b000, 0b001, 0b010, 0b100, 0b111]
    assert flats(zero(2)) == [0b11]


def test_extensions_of_a_point():
    found = {canonicalize(M) for M in single_element_extensions(free(1))}
    assert found == {canonicalize(free(2)), canonicalize(multipoint(2)),
                     canonicalize(direct_sum(free(1), zero(1)))}


def test_full_cut_adds_a_loop():
    M = uniform(2, 3)
    cuts = list(modular_cuts(M))
    assert frozenset() in cuts
    everything = frozenset(flats(M))
    assert everything in cuts
    extended = extend_by_cut(M, everything)
    assert extended.rank_of([4]) == 0


def test_census_size_cap():
    with pytest.raises(SizeCapExceeded):
        census(6)


def test_census_uses_store(tmp_path, monkeypatch):
    monkeypatch.setattr(census_module, '_levels', {})
    store = CatalogueStore(str(tmp_path / 'catalogue.json'))
    keys = census(3, store=store)
    assert store.has_classes('all', 3)
    assert store.get_classes('all', 3) == keys

    monkeypatch.setattr(census_module, '_levels', {})
    reloaded = CatalogueStore(str(tmp_path / 'catalogue.json'))
    assert census(3, store=reloaded) == keys


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
