#!/usr/bin/env python3
"""Named matroids and the matroid reference syntax used on the command line."""

import os
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict

from canonical import CanonicalKey, canonicalize
from freedom import freedom_matroid
from matroid import (Matroid, circuit, direct_sum, free, from_bases, load_matroid, multipoint,
                     uniform, zero)
from matroid_errors import DomainError
from word_order import validate_word


def _all_but(n: int, r: int, excluded) -> Matroid:
    excluded = {frozenset(s) for s in excluded}
    return from_bases(n, [set(b) for b in combinations(range(1, n + 1), r)
                          if frozenset(b) not in excluded])


def line_configuration() -> Matroid:
    """Five points a..e in the plane with a,b,c and a,d,e collinear."""
    return _all_but(5, 3, [{1, 2, 3}, {1, 4, 5}])


def doubled_line() -> Matroid:
    """Three-point line with its third point doubled."""
    return _all_but(4, 2, [{3, 4}])


def two_double_points() -> Matroid:
    return direct_sum(multipoint(2), multipoint(2))


def five_coplanar() -> Matroid:
    """Five coplanar points with only a,b,c collinear."""
    return _all_but(5, 3, [{1, 2, 3}])


def seven_points() -> Matroid:
    """Rank 4 on a..g: a,b,c and a,d,e collinear, a..e and a,b,c,f,g coplanar."""
    planes = [frozenset({1, 2, 3, 4, 5}), frozenset({1, 2, 3, 6, 7})]
    triples = [frozenset({1, 2, 3}), frozenset({1, 4, 5})]
    return from_bases(7, [set(b) for b in combinations(range(1, 8), 4)
                          if not any(t <= set(b) for t in triples)
                          and not any(set(b) <= p for p in planes)])


NAMED: Dict[str, Callable[[], Matroid]] = {
    'L': line_configuration,
    'N': doubled_line,
    'D': two_double_points,
    'five_coplanar': five_coplanar,
    'figure_two': seven_points,
    'U24_P2': lambda: direct_sum(uniform(2, 4), multipoint(2)),
    'U23_P2': lambda: direct_sum(uniform(2, 3), multipoint(2)),
    'point': lambda: free(1),
    'loop': lambda: zero(1),
}


def named(name: str) -> Matroid:
    if name not in NAMED:
        raise DomainError(f"unknown matroid name '{name}' (known: {', '.join(sorted(NAMED))})")
    return NAMED[name]()


def _int_args(text: str, count: int, kind: str):
    try:
        values = [int(x) for x in text.split(',')]
    except ValueError:
        raise DomainError(f"bad {kind} arguments: {text!r}")
    if len(values) != count:
        raise DomainError(f"{kind} needs {count} integer argument(s), got {text!r}")
    return values


def parse_matroid_ref(text: str) -> Matroid:
    """Resolve ``word:0101``, ``named:L``, ``uniform:2,4``, ``free:3``, ``zero:2``,
    ``circuit:3``, ``multipoint:2``, ``file:m.json`` or a bare 0/1 word."""
    kind, sep, arg = text.partition(':')
    if not sep:
        if os.path.exists(text) and text.endswith('.json'):
            return load_matroid(text)
        return freedom_matroid(validate_word(text))
    if kind == 'word':
        return freedom_matroid(validate_word(arg))
    if kind == 'named':
        return named(arg)
    if kind == 'uniform':
        r, n = _int_args(arg, 2, kind)
        return uniform(r, n)
    if kind in ('free', 'zero', 'circuit', 'multipoint'):
        (n,) = _int_args(arg, 1, kind)
        return {'free': free, 'zero': zero, 'circuit': circuit, 'multipoint': multipoint}[kind](n)
    if kind == 'file':
        return load_matroid(arg)
    raise DomainError(f"unknown matroid reference '{text}'")


def _uniform_name(r: int, n: int) -> str:
    if n == 0:
        return '∅'
    if r == n:
        return 'ι' if n == 1 else f"F_{n}"
    if r == 0:
        return 'ζ' if n == 1 else f"Z_{n}"
    if r == 1:
        return f"P_{n}"
    if r == n - 1:
        return f"C_{n}"
    return f"U_{{{r},{n}}}"


@lru_cache(maxsize=None)
def display_names(max_n: int = 6) -> Dict[CanonicalKey, str]:
    """Readable names for the classes that show up in the worked examples."""
    names: Dict[CanonicalKey, str] = {}

    def add(M: Matroid, name: str) -> None:
        if M.n <= max_n:
            names.setdefault(canonicalize(M), name)

    for n in range(max_n + 1):
        for r in range(n, -1, -1):
            add(uniform(r, n), _uniform_name(r, n))
    for name in ('L', 'N', 'D', 'five_coplanar', 'U23_P2', 'U24_P2'):
        add(named(name), {'U23_P2': 'U_{2,3}⊕P_2', 'U24_P2': 'U_{2,4}⊕P_2',
                          'D': 'P_2⊕P_2'}.get(name, name))
    point, loop = free(1), zero(1)
    for n in range(1, max_n):
        add(direct_sum(free(n), loop), 'ι⊕ζ' if n == 1 else f"F_{n}⊕ζ")
        if n >= 2:
            add(direct_sum(multipoint(n), loop), f"P_{n}⊕ζ")
        if n >= 3:
            add(direct_sum(circuit(n), point), f"C_{n}⊕ι")
    return names
