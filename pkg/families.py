#!/usr/bin/env python3
"""Minor-closed families of matroids with per-size class catalogues."""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from canonical import CanonicalKey, canonicalize, keys_sorted
from census import census
from config import get_config
from fixtures import two_double_points
from freedom import freedom_catalogue
from matroid import circuit, contract_mask, delete, free, multipoint, uniform, zero
from matroid_errors import UnsupportedFamily


@dataclass
class Family:
    """A family given by its catalogue of classes at each size."""

    name: str
    members_fn: Callable[[int], List[CanonicalKey]]
    description: str = ''
    _cache: Dict[int, List[CanonicalKey]] = field(default_factory=dict, repr=False)

    def members(self, n: int) -> List[CanonicalKey]:
        """Sorted classes of size n; raises UnsupportedFamily if no catalogue is available."""
        if n < 0:
            raise UnsupportedFamily(self.name, n)
        if n not in self._cache:
            self._cache[n] = keys_sorted(list(dict.fromkeys(self.members_fn(n))))
        return list(self._cache[n])

    def contains(self, key: CanonicalKey) -> bool:
        return key in self.members(key.n)

    def check_minor_closed(self, n: int, samples: Optional[int] = None) -> bool:
        """Every single-element deletion and contraction of a member is a member."""
        if n == 0:
            return True
        smaller = set(self.members(n - 1))
        members = self.members(n)
        if samples is not None:
            members = members[:samples]
        for key in members:
            M = key.to_matroid()
            for e in range(1, n + 1):
                if canonicalize(delete(M, [e])) not in smaller:
                    return False
                if canonicalize(contract_mask(M, 1 << (e - 1))) not in smaller:
                    return False
        return True


def _all_members(n: int) -> List[CanonicalKey]:
    if n > get_config().census_n:
        raise UnsupportedFamily('all', n)
    return census(n)


def _freedom_members(n: int) -> List[CanonicalKey]:
    return list(freedom_catalogue(n))


def _freedom_d_members(n: int) -> List[CanonicalKey]:
    members = _freedom_members(n)
    if n == 4:
        members.append(canonicalize(two_double_points()))
    return members


def _circuit_members(n: int) -> List[CanonicalKey]:
    members = [canonicalize(free(n))]
    if n >= 1:
        members.append(canonicalize(circuit(n)))
    return members


def _multipoint_members(n: int) -> List[CanonicalKey]:
    members = [canonicalize(zero(n))]
    if n >= 1:
        members.append(canonicalize(multipoint(n)))
    return members


_BUILTINS = {
    'all': (_all_members, 'every matroid (census catalogue)'),
    'freedom': (_freedom_members, 'freedom matroids M_w'),
    'freedom+D': (_freedom_d_members, 'freedom matroids and P_2⊕P_2'),
    'uniform': (lambda n: [canonicalize(uniform(r, n)) for r in range(n + 1)], 'uniform matroids'),
    'circuits': (_circuit_members, 'free matroids and circuits'),
    'multipoints': (_multipoint_members, 'zero matroids and multipoints'),
    'free': (lambda n: [canonicalize(free(n))], 'free matroids'),
    'zero': (lambda n: [canonicalize(zero(n))], 'zero matroids'),
}

ALIASES = {'all<=5': 'all', 'circuits+free': 'circuits', 'freedom+d': 'freedom+D'}

_families: Dict[str, Family] = {}


def family_names() -> List[str]:
    return list(_BUILTINS)


def get_family(name: str) -> Family:
    name = ALIASES.get(name, name)
    if name not in _BUILTINS:
        raise UnsupportedFamily(name)
    if name not in _families:
        fn, description = _BUILTINS[name]
        _families[name] = Family(name, fn, description)
    return _families[name]
