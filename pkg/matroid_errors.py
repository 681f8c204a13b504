#!/usr/bin/env python3
"""Exceptions raised by the matroid toolkit."""

from typing import FrozenSet, Iterable, Optional, Tuple


def _fmt_set(subset: Iterable[int]) -> str:
    return '{' + ','.join(str(x) for x in sorted(subset)) + '}'


class MatroidError(ValueError):
    """Base class for every domain error raised by this package."""


class AxiomViolation(MatroidError):
    """A rank table breaks one of the rank axioms."""

    def __init__(self, axiom: str, witness: Tuple[FrozenSet[int], ...]):
        self.axiom = axiom
        self.witness = witness
        sets = ', '.join(_fmt_set(s) for s in witness)
        super().__init__(f"Rank axiom '{axiom}' violated at {sets}")


class ExchangeViolation(MatroidError):
    """A basis family fails the basis-exchange axiom."""

    def __init__(self, b1: FrozenSet[int], b2: FrozenSet[int], x: int):
        self.b1 = b1
        self.b2 = b2
        self.x = x
        super().__init__(
            f"Basis exchange fails: no y in {_fmt_set(b2 - b1)} makes "
            f"{_fmt_set(b1)} - {x} + y a basis"
        )


class InvalidFlag(MatroidError):
    """A flag (S_0, ..., S_r) is not properly nested or does not end at the ground set."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"Invalid flag: {reason}")


class DomainError(MatroidError):
    """An argument lies outside the domain of an operation."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class SizeCapExceeded(MatroidError):
    """A computation was asked for a size beyond a configured cap."""

    def __init__(self, cap_name: str, limit: int, requested: int):
        self.cap_name = cap_name
        self.limit = limit
        self.requested = requested
        super().__init__(
            f"Size cap '{cap_name}' exceeded: requested n={requested}, limit is {limit}"
        )


class UnsupportedFamily(MatroidError):
    """No class catalogue is available for a family at a given size."""

    def __init__(self, family: str, n: Optional[int] = None):
        self.family = family
        self.n = n
        where = f" at size {n}" if n is not None else ''
        super().__init__(f"Family '{family}' has no class catalogue{where}")


class NonInvertible(MatroidError):
    """An incidence function vanishes on the diagonal."""

    def __init__(self, element: str):
        self.element = element
        super().__init__(f"Incidence function is not invertible: f({element},{element}) = 0")


class SizeMismatch(MatroidError):
    """Two arguments that must have equal size do not."""

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"Size mismatch: {left} != {right}")


class ConsistencyError(MatroidError):
    """Two independent computations of the same quantity disagree."""

    def __init__(self, what: str, detail: str = ''):
        self.what = what
        self.detail = detail
        super().__init__(f"Inconsistent results for {what}" + (f": {detail}" if detail else ''))


class ConfigError(MatroidError):
    """A configuration value is malformed or out of range."""

    def __init__(self, variable: str, reason: str):
        self.variable = variable
        self.reason = reason
        super().__init__(f"Bad configuration value {variable}: {reason}")
