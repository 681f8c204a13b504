#!/usr/bin/env python3
"""Freeness of the point-and-loop subalgebra: coefficient matrices, inverses and dual bases."""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from canonical import CanonicalKey, canonicalize
from config import check_cap
from families import Family, get_family
from fixtures import display_names
from freedom import freedom_matroid, word_of_key
from hopf import (FormalSum, TensorSum, coproduct, empty_key, letter_multisections,
                  multisection_coefficient, product_sums)
from matroid import free, zero
from matroid_errors import ConsistencyError, DomainError, NonInvertible
from word_order import DominanceLattice, Word, lambda_fibres, validate_word, word_leq, words


@dataclass
class CoeffMatrix:
    """Square matrix indexed by a linear extension of W(n, r)."""

    order: List[Word]
    entries: np.ndarray  # object array of int or Fraction

    def __post_init__(self):
        self._index = {w: i for i, w in enumerate(self.order)}

    def entry(self, row: Word, col: Word):
        return self.entries[self._index[row], self._index[col]]

    def column(self, col: Word) -> Dict[Word, object]:
        j = self._index[col]
        return {w: self.entries[i, j] for i, w in enumerate(self.order) if self.entries[i, j] != 0}

    def row(self, row: Word) -> Dict[Word, object]:
        i = self._index[row]
        return {w: self.entries[i, j] for j, w in enumerate(self.order) if self.entries[i, j] != 0}

    def column_sums(self) -> List:
        return [sum(self.entries[:, j]) for j in range(len(self.order))]

    def is_upper_triangular(self) -> bool:
        m = len(self.order)
        return all(self.entries[i, j] == 0 for i in range(m) for j in range(i))

    def diagonal(self) -> List:
        return [self.entries[i, i] for i in range(len(self.order))]

    def inverse(self) -> 'CoeffMatrix':
        """Inverse of an upper-triangular matrix by back-substitution."""
        m = len(self.order)
        a = self.entries
        inv = np.full((m, m), Fraction(0), dtype=object)
        for j in range(m):
            for i in range(j, -1, -1):
                total = Fraction(1) if i == j else Fraction(0)
                for k in range(i + 1, j + 1):
                    total -= Fraction(a[i, k]) * inv[k, j]
                if a[i, i] == 0:
                    raise NonInvertible(self.order[i])
                inv[i, j] = total / Fraction(a[i, i])
        return CoeffMatrix(list(self.order), inv)

    def matmul(self, other: 'CoeffMatrix') -> 'CoeffMatrix':
        if self.order != other.order:
            raise DomainError("matrices are indexed by different word orders")
        return CoeffMatrix(list(self.order), self.entries.dot(other.entries))

    def is_identity(self) -> bool:
        m = len(self.order)
        return all(self.entries[i, j] == (1 if i == j else 0) for i in range(m) for j in range(m))

    def to_table(self) -> str:
        """Bordered text table: row and column labels are the words."""
        cells = [[_fmt(x) for x in row] for row in self.entries]
        width = max([len(w) for w in self.order] + [len(c) for row in cells for c in row] + [1])
        label = max(len(w) for w in self.order) if self.order else 1
        lines = [' ' * label + '  ' + ' '.join(w.rjust(width) for w in self.order)]
        for w, row in zip(self.order, cells):
            lines.append(w.rjust(label) + '  ' + ' '.join(c.rjust(width) for c in row))
        return '\n'.join(lines)

    def to_json(self) -> Dict:
        return {'order': list(self.order),
                'entries': [[_fmt(x) for x in row] for row in self.entries]}


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return str(x)


def _letter(c: str):
    return free(1) if c == '1' else zero(1)


def _check_same_grade(w: Word, v: Word) -> None:
    validate_word(w)
    validate_word(v)
    if len(w) != len(v) or w.count('1') != v.count('1'):
        raise DomainError(f"{w} and {v} do not lie in the same W(n, r)")


def c_coefficient(w: Word, v: Word) -> int:
    """⟨M_v; letters of w⟩, checked against the number of orderings with λ = w."""
    _check_same_grade(w, v)
    check_cap('perm_n', len(w))
    chains = multisection_coefficient(freedom_matroid(v), [_letter(c) for c in w])
    orderings = lambda_fibres(freedom_matroid(v))[w]
    if chains != orderings:
        raise ConsistencyError(f"c({w},{v})", f"chains give {chains}, orderings give {orderings}")
    return chains


def _assemble_C(n: int, r: int, check: bool = False) -> CoeffMatrix:
    check_cap('perm_n', n)
    if r < 0 or r > n:
        raise DomainError(f"W({n},{r}) is empty")
    order = words(n, r)
    m = len(order)
    entries = np.zeros((m, m), dtype=object)
    for j, v in enumerate(order):
        counts = letter_multisections(freedom_matroid(v))
        if check:
            fibres = lambda_fibres(freedom_matroid(v))
            if +counts != +fibres:
                raise ConsistencyError(f"column {v} of C({n},{r})", "chain and ordering counts differ")
        for i, w in enumerate(order):
            entries[i, j] = counts.get(w, 0)
    return CoeffMatrix(order, entries)


def matrix_C(n: int, r: int, check: bool = False) -> CoeffMatrix:
    """Matrix (c(w_i, w_j)) over W(n, r) in descending lexicographic order.

    With ``check`` every column is also counted over all orderings.
    """
    matrix = _assemble_C(n, r, check)
    if not matrix.is_upper_triangular():
        raise ConsistencyError(f"C({n},{r})", "not upper triangular")
    if any(d <= 0 for d in matrix.diagonal()):
        raise ConsistencyError(f"C({n},{r})", "non-positive diagonal entry")
    if any(s != factorial(n) for s in matrix.column_sums()):
        raise ConsistencyError(f"C({n},{r})", f"a column does not sum to {n}!")
    return matrix


@dataclass
class IncidenceFunction:
    """Function on the intervals x <= y of W(n, r); absent pairs are zero."""

    lattice: DominanceLattice
    values: Dict[Tuple[Word, Word], Fraction] = field(default_factory=dict)

    def __call__(self, x: Word, y: Word) -> Fraction:
        return self.values.get((x, y), Fraction(0))

    @classmethod
    def delta(cls, lattice: DominanceLattice) -> 'IncidenceFunction':
        return cls(lattice, {(x, x): Fraction(1) for x in lattice.elements})

    @classmethod
    def zeta(cls, lattice: DominanceLattice) -> 'IncidenceFunction':
        elements = lattice.elements
        return cls(lattice, {(x, y): Fraction(1) for x in elements for y in elements
                             if word_leq(x, y)})

    @classmethod
    def from_matrix(cls, matrix: CoeffMatrix, lattice: DominanceLattice) -> 'IncidenceFunction':
        values = {}
        for x in matrix.order:
            for y in matrix.order:
                value = matrix.entry(x, y)
                if value != 0:
                    if not word_leq(x, y):
                        raise DomainError(f"entry ({x},{y}) is nonzero but {x} is not below {y}")
                    values[(x, y)] = Fraction(value)
        return cls(lattice, values)

    def convolve(self, other: 'IncidenceFunction') -> 'IncidenceFunction':
        """(f*g)(x, y) = Σ_{x<=z<=y} f(x, z) g(z, y)."""
        elements = self.lattice.elements
        values = {}
        for x in elements:
            for y in elements:
                if not word_leq(x, y):
                    continue
                total = sum((self(x, z) * other(z, y) for z in elements
                             if word_leq(x, z) and word_leq(z, y)), Fraction(0))
                if total:
                    values[(x, y)] = total
        return IncidenceFunction(self.lattice, values)

    def to_matrix(self) -> CoeffMatrix:
        order = self.lattice.elements
        entries = np.array([[self(x, y) for y in order] for x in order], dtype=object)
        return CoeffMatrix(order, entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IncidenceFunction):
            return NotImplemented
        return self.lattice == other.lattice and \
            {k: v for k, v in self.values.items() if v} == {k: v for k, v in other.values.items() if v}


def convolution_inverse(f: IncidenceFunction) -> IncidenceFunction:
    """f^{-1}(x,x) = 1/f(x,x); f^{-1}(x,y) = -f(x,x)^{-1} Σ_{x<z<=y} f(x,z) f^{-1}(z,y)."""
    elements = f.lattice.elements
    for x in elements:
        if f(x, x) == 0:
            raise NonInvertible(x)
    inv: Dict[Tuple[Word, Word], Fraction] = {}
    for j, y in enumerate(elements):
        for i in range(j, -1, -1):
            x = elements[i]
            if not word_leq(x, y):
                continue
            if x == y:
                inv[(x, y)] = 1 / f(x, x)
                continue
            total = Fraction(0)
            for z in elements[i + 1:j + 1]:
                if word_leq(x, z) and (z, y) in inv:
                    total += f(x, z) * inv[(z, y)]
            if total:
                inv[(x, y)] = -total / f(x, x)
    return IncidenceFunction(f.lattice, inv)


def mobius(lattice: DominanceLattice) -> IncidenceFunction:
    return convolution_inverse(IncidenceFunction.zeta(lattice))


def inverse_coefficients(n: int, r: int) -> CoeffMatrix:
    """c^{-1} on W(n, r), by the incidence-algebra recursion and by back-substitution."""
    matrix = matrix_C(n, r)
    lattice = DominanceLattice(n, r)
    by_recursion = convolution_inverse(IncidenceFunction.from_matrix(matrix, lattice)).to_matrix()
    by_substitution = matrix.inverse()
    if not np.array_equal(by_recursion.entries, by_substitution.entries):
        raise ConsistencyError(f"inverse of C({n},{r})", "recursion and back-substitution differ")
    return by_substitution


def p_product(w: Word, family: Optional[Family] = None) -> FormalSum:
    """Left-to-right product of the letters of w (1 = point, 0 = loop) in the family's algebra."""
    validate_word(w)
    family = family or get_family('freedom')
    check_cap('coproduct_n', len(w))
    out = FormalSum({empty_key(): 1})
    for c in w:
        out = product_sums(out, FormalSum({canonicalize(_letter(c)): 1}), family)
    return out


def p_expansion(w: Word) -> Dict[Word, int]:
    """P_w = Σ_{v >= w} c(w, v) M_v, as word -> coefficient."""
    return {v: int(c) for v, c in matrix_C(len(w), w.count('1')).row(w).items()}


def p_product_words(w: Word) -> Dict[Word, int]:
    """p_product in the freedom family with classes named by their words."""
    return {word_of_key(k): c for k, c in p_product(w).items()}


def concatenation_law_holds(v: Word, w: Word, family: Optional[Family] = None) -> bool:
    """P_v · P_w = P_{vw}."""
    family = family or get_family('freedom')
    return product_sums(p_product(v, family), p_product(w, family), family) == p_product(v + w, family)


def express_m_in_p(w: Word) -> Dict[Word, Fraction]:
    """M_w = Σ_{v >= w} c^{-1}(w, v) P_v."""
    inverse = inverse_coefficients(len(w), w.count('1'))
    return {v: c for v, c in inverse.row(w).items()}


def reconstruct_from_products(w: Word) -> Dict[CanonicalKey, Fraction]:
    """Evaluate Σ_v c^{-1}(w, v) P_v in the freedom family; the result is the single class M_w."""
    total: Dict[CanonicalKey, Fraction] = {}
    for v, coeff in express_m_in_p(w).items():
        for key, c in p_product(v).items():
            total[key] = total.get(key, Fraction(0)) + coeff * c
    return {k: c for k, c in total.items() if c}


def m_in_p_prime(w: Word) -> Dict[Word, int]:
    """M_w = Σ_{v <= w} c(v, w) P'_v."""
    return {v: int(c) for v, c in matrix_C(len(w), w.count('1')).column(w).items()}


def m_from_lambda(w: Word) -> Counter:
    """M_w = Σ_σ P'_{λ(σ)}: the multiset of distinguished words over all orderings."""
    return lambda_fibres(freedom_matroid(w))


def word_coproduct(w: Word) -> TensorSum:
    """δ(M_w) with every class written as its freedom word."""
    return coproduct(freedom_matroid(validate_word(w))).map_basis(
        lambda pair: (word_of_key(pair[0]), word_of_key(pair[1])))


@dataclass
class DualBasisReport:
    n: int
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _matrices_up_to(n: int) -> Dict[Tuple[int, int], Tuple[CoeffMatrix, CoeffMatrix]]:
    return {(m, r): (matrix_C(m, r), inverse_coefficients(m, r))
            for m in range(n + 1) for r in range(m + 1)}


def p_prime_coproduct(v: Word, matrices=None) -> Dict[Tuple[Word, Word], Fraction]:
    """δ(P'_v) in P' ⊗ P' coordinates.

    P'_v = Σ_w c^{-1}(w, v) M_w; each M_u ⊗ M_u' of δ(M_w) is rewritten with
    M_u = Σ_a c(a, u) P'_a.
    """
    matrices = matrices or _matrices_up_to(len(v))
    m, r = len(v), v.count('1')
    inverse = matrices[(m, r)][1]
    out: Dict[Tuple[Word, Word], Fraction] = {}
    for w, coeff in inverse.column(v).items():
        for (u1, u2), count in word_coproduct(w).items():
            c1 = matrices[(len(u1), u1.count('1'))][0].column(u1)
            c2 = matrices[(len(u2), u2.count('1'))][0].column(u2)
            for a, ca in c1.items():
                for b, cb in c2.items():
                    key = (a, b)
                    out[key] = out.get(key, Fraction(0)) + coeff * count * ca * cb
    return {k: c for k, c in out.items() if c}


def dual_basis_check(n: int) -> DualBasisReport:
    """δ(P'_v) is deconcatenation for every word of length <= n, and
    M_w = Σ_{v<=w} c(v,w) P'_v agrees with the multiset of distinguished words."""
    check_cap('perm_n', n)
    report = DualBasisReport(n)
    matrices = _matrices_up_to(n)
    for m in range(n + 1):
        for r in range(m, -1, -1):
            for v in words(m, r):
                expected = {(v[:i], v[i:]): Fraction(1) for i in range(m + 1)}
                if p_prime_coproduct(v, matrices) != expected:
                    report.failures.append(f"δ(P'_{v or '∅'}) is not deconcatenation")
                column = {u: int(c) for u, c in matrices[(m, r)][0].column(v).items()}
                if column != dict(m_from_lambda(v)):
                    report.failures.append(f"M_{v or '∅'} in the P' basis disagrees with λ")
                report.checked += 1
    return report


def rational_rank(rows: Sequence[Sequence]) -> int:
    """Rank over the rationals by Gaussian elimination."""
    matrix = [[Fraction(x) for x in row] for row in rows]
    if not matrix:
        return 0
    rank = 0
    cols = len(matrix[0])
    for col in range(cols):
        pivot = next((i for i in range(rank, len(matrix)) if matrix[i][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        for i in range(len(matrix)):
            if i != rank and matrix[i][col] != 0:
                factor = matrix[i][col] / matrix[rank][col]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[rank])]
        rank += 1
    return rank


@dataclass
class EnlargedBlock:
    """Products of letters written in the class basis of a larger family."""

    r: int
    rows: List[Word]
    columns: List[str]
    entries: List[List[int]]
    rank: int

    @property
    def full_row_rank(self) -> bool:
        return self.rank == len(self.rows)

    def to_table(self) -> str:
        width = max([len(c) for c in self.columns] + [len(str(x)) for row in self.entries for x in row])
        label = max(len(w) for w in self.rows)
        lines = [' ' * label + '  ' + ' '.join(c.rjust(width) for c in self.columns)]
        for w, row in zip(self.rows, self.entries):
            lines.append(w.rjust(label) + '  ' + ' '.join(str(x).rjust(width) for x in row))
        return '\n'.join(lines)


def _column_position(key: CanonicalKey, order: List[Word]) -> Tuple[int, int]:
    """Columns follow the greatest distinguished word a class reaches; freedom classes first on ties."""
    reached = lambda_fibres(key.to_matroid())
    place = max(order.index(w) for w in reached if w in order)
    return (place, 0 if word_of_key(key) is not None else 1)


def enlarged_block(n: int, r: int, family: Family, names: Optional[Dict[CanonicalKey, str]] = None) -> EnlargedBlock:
    rows = words(n, r)
    classes = [k for k in family.members(n) if k.rank == r]
    classes.sort(key=lambda k: _column_position(k, rows))
    labels = []
    for k in classes:
        word = word_of_key(k)
        labels.append(word if word is not None else (names or {}).get(k, k.digest))
    entries = []
    for w in rows:
        q = p_product(w, family)
        entries.append([q.coefficient(k) for k in classes])
    return EnlargedBlock(r, rows, labels, entries, rational_rank(entries))


@dataclass
class BlockCertificate:
    r: int
    size: int
    triangular: bool
    positive_diagonal: bool
    column_sums_ok: bool

    @property
    def ok(self) -> bool:
        return self.triangular and self.positive_diagonal and self.column_sums_ok


@dataclass
class FreenessReport:
    n: int
    blocks: List[BlockCertificate] = field(default_factory=list)
    enlarged: List[EnlargedBlock] = field(default_factory=list)
    spanned: Dict[int, int] = field(default_factory=dict)  # r -> rank of the P_w rows

    @property
    def classes_spanned(self) -> int:
        return sum(self.spanned.values())

    @property
    def ok(self) -> bool:
        return (all(b.ok for b in self.blocks) and all(e.full_row_rank for e in self.enlarged)
                and self.classes_spanned == 2 ** self.n)

    def lines(self) -> List[str]:
        out = []
        for b in self.blocks:
            mark = '✓' if b.ok else '✗'
            if b.ok:
                out.append(f"{mark} W({self.n},{b.r}): {b.size}x{b.size} triangular with positive diagonal")
                continue
            failed = [name for name, good in (('triangular', b.triangular),
                                              ('positive diagonal', b.positive_diagonal),
                                              ('column sums', b.column_sums_ok)) if not good]
            out.append(f"{mark} W({self.n},{b.r}): certificate failed ({', '.join(failed)})")
        for e in self.enlarged:
            mark = '✓' if e.full_row_rank else '✗'
            out.append(f"{mark} W({self.n},{e.r}) in the enlarged family: "
                       f"{len(e.rows)}x{len(e.columns)}, rank {e.rank}")
        out.append(f"{'✓' if self.ok else '✗'} {self.classes_spanned} of {2 ** self.n} "
                   f"degree-{self.n} classes spanned by products of letters")
        return out


def _block_certificate(n: int, r: int) -> BlockCertificate:
    try:
        matrix = _assemble_C(n, r)
    except ConsistencyError:
        return BlockCertificate(r, len(words(n, r)), False, False, False)
    return BlockCertificate(r, len(matrix.order), matrix.is_upper_triangular(),
                            all(d > 0 for d in matrix.diagonal()),
                            all(s == factorial(n) for s in matrix.column_sums()))


def spanned_rank(n: int, r: int) -> int:
    """Rank of the products P_w, w in W(n, r), written over the freedom classes of rank r."""
    freedom = get_family('freedom')
    classes = [k for k in freedom.members(n) if k.rank == r]
    rows = []
    for w in words(n, r):
        q = p_product(w, freedom)
        rows.append([q.coefficient(k) for k in classes])
    return rational_rank(rows)


def freeness_certificate(n: int, enlarged_family: str = 'freedom+D', verbose: bool = False) -> FreenessReport:
    """Per-grade triangularity of C, the rank of the letter products, and their rank in a larger family."""
    check_cap('perm_n', n)
    report = FreenessReport(n)
    family = get_family(enlarged_family)
    names = display_names()
    for r in range(n, -1, -1):
        report.blocks.append(_block_certificate(n, r))
        report.spanned[r] = spanned_rank(n, r)
        report.enlarged.append(enlarged_block(n, r, family, names))
        if verbose:
            print(f"  [{n - r + 1}/{n + 1}] W({n},{r}) certified")
    return report
