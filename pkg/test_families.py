#!/usr/bin/env python3
"""Tests for the built-in families of matroids."""

import sys

import pytest

from canonical import canonicalize
from families import family_names, get_family
from fixtures import named
from matroid import circuit, free, uniform
from matroid_errors import UnsupportedFamily


def test_builtin_names():
    assert set(family_names()) == {'all', 'freedom', 'freedom+D', 'uniform', 'circuits',
                                   'multipoints', 'free', 'zero'}
    assert get_family('freedom+d') is get_family('freedom+D')
    assert get_family('circuits+free') is get_family('circuits')


def test_unknown_family():
    with pytest.raises(UnsupportedFamily):
        get_family('graphic')


def test_all_family_is_capped_by_the_census():
    with pytest.raises(UnsupportedFamily):
        get_family('all').members(6)
    with pytest.raises(UnsupportedFamily):
        get_family('freedom').members(-1)


@pytest.mark.parametrize("name,sizes", [
    ('freedom', [1, 2, 4, 8, 16, 32]),
    ('circuits', [1, 2, 2, 2, 2, 2]),
    ('uniform', [1, 2, 3, 4, 5, 6]),
    ('all', [1, 2, 4, 8, 17, 38]),
])
def test_member_counts(name, sizes):
    family = get_family(name)
    assert [len(family.members(n)) for n in range(6)] == sizes


def test_membership():
    freedom = get_family('freedom')
    assert freedom.contains(canonicalize(named('N')))
    assert not freedom.contains(canonicalize(named('D')))
    assert get_family('freedom+D').contains(canonicalize(named('D')))
    assert get_family('circuits').contains(canonicalize(circuit(4)))
    assert not get_family('circuits').contains(canonicalize(uniform(2, 4)))
    assert get_family('free').contains(canonicalize(free(3)))


@pytest.mark.parametrize("name", ['freedom', 'freedom+D', 'uniform', 'circuits', 'multipoints', 'all'])
def test_families_are_minor_closed(name):
    family = get_family(name)
    assert all(family.check_minor_closed(n) for n in range(5))


if __name__ == '__main__':
    sys.exit(pytest.main([__file__, '-v']))
