#!/usr/bin/env python3
"""Orders on subsets, 0/1 words and permutations, and the distinguished-word map."""

from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from config import check_cap
from matroid import Matroid
from matroid_errors import DomainError, SizeMismatch
from parallel import map_chunks

Word = str
Permutation = Tuple[int, ...]


def validate_word(w: str) -> Word:
    """Return ``w`` if it is a 0/1 string, else raise DomainError."""
    if not isinstance(w, str) or any(c not in '01' for c in w):
        raise DomainError(f"not a 0/1 word: {w!r}")
    return w


# Subsets: P(S) ordered by A <= B iff |B| <= |A| and a_i <= b_i for i <= |B|

def subset_leq(A: Iterable[int], B: Iterable[int]) -> bool:
    a = sorted(A)
    b = sorted(B)
    if len(b) > len(a):
        return False
    return all(x <= y for x, y in zip(a, b))


def subset_leq_under(order: Sequence[int], A: Iterable[int], B: Iterable[int]) -> bool:
    """subset_leq on the ground set ordered as ``order`` (order[0] smallest)."""
    place = {x: i for i, x in enumerate(order, 1)}
    return subset_leq((place[x] for x in A), (place[x] for x in B))


def complement(A: Iterable[int], n: int) -> FrozenSet[int]:
    return frozenset(range(1, n + 1)) - frozenset(A)


def reverse_subset(A: Iterable[int], n: int) -> FrozenSet[int]:
    """Image of A under x -> n + 1 - x (the reversed ground set)."""
    return frozenset(n + 1 - x for x in A)


def chi(A: Iterable[int], n: int) -> Word:
    """Indicator word of A in [n]."""
    members = set(A)
    if any(x < 1 or x > n for x in members):
        raise DomainError(f"{sorted(members)} is not contained in [{n}]")
    return ''.join('1' if i in members else '0' for i in range(1, n + 1))


def pi(w: Word) -> FrozenSet[int]:
    """Positions of the 1s of w."""
    return frozenset(i for i, c in enumerate(validate_word(w), 1) if c == '1')


def positions(w: Word) -> Tuple[int, ...]:
    return tuple(i for i, c in enumerate(w, 1) if c == '1')


# Words: W(n, r) ordered by v <= w iff the k-th 1 of v is weakly left of the k-th 1 of w

def word_leq(v: Word, w: Word) -> bool:
    if len(v) != len(w) or v.count('1') != w.count('1'):
        return False
    return all(p <= q for p, q in zip(positions(v), positions(w)))


def word_leq_prefix(v: Word, w: Word) -> bool:
    """Same order through prefix counts: every prefix of v has at least as many 1s."""
    if len(v) != len(w) or v.count('1') != w.count('1'):
        return False
    cv = cw = 0
    for a, b in zip(v, w):
        cv += a == '1'
        cw += b == '1'
        if cv < cw:
            return False
    return True


def words(n: int, r: int) -> List[Word]:
    """W(n, r) in descending lexicographic order, a linear extension of dominance."""
    if r < 0 or r > n:
        return []
    out = []
    for pos in combinations(range(n), r):
        letters = ['0'] * n
        for p in pos:
            letters[p] = '1'
        out.append(''.join(letters))
    return out


def all_words(n: int) -> List[Word]:
    return [w for r in range(n, -1, -1) for w in words(n, r)]


def upper_covers(w: Word) -> List[Word]:
    """Words covering w: an adjacent '10' becomes '01'."""
    return [w[:i] + '01' + w[i + 2:] for i in range(len(w) - 1) if w[i:i + 2] == '10']


def lower_covers(w: Word) -> List[Word]:
    return [w[:i] + '10' + w[i + 2:] for i in range(len(w) - 1) if w[i:i + 2] == '01']


def principal_ideal(w: Word) -> Set[Word]:
    return {v for v in words(len(w), w.count('1')) if word_leq(v, w)}


def is_order_ideal(ideal: Iterable[Word]) -> bool:
    members = set(ideal)
    return all(v in members for w in members for v in lower_covers(w))


def maximal_elements(ideal: Iterable[Word]) -> Set[Word]:
    members = set(ideal)
    return {w for w in members if not any(u in members for u in upper_covers(w))}


@dataclass(frozen=True)
class DominanceLattice:
    """W(n, r) under the dominance order."""

    n: int
    r: int

    @property
    def elements(self) -> List[Word]:
        return words(self.n, self.r)

    def leq(self, v: Word, w: Word) -> bool:
        return word_leq(v, w)

    def _from_positions(self, pos: Iterable[int]) -> Word:
        return chi(pos, self.n)

    def meet(self, v: Word, w: Word) -> Word:
        return self._from_positions(min(p, q) for p, q in zip(positions(v), positions(w)))

    def join(self, v: Word, w: Word) -> Word:
        return self._from_positions(max(p, q) for p, q in zip(positions(v), positions(w)))

    def covers(self) -> List[Tuple[Word, Word]]:
        return [(v, w) for v in self.elements for w in upper_covers(v)]

    def order_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        elements = self.elements
        graph.add_nodes_from(elements)
        graph.add_edges_from((v, w) for v in elements for w in elements
                             if v != w and word_leq(v, w))
        return graph

    def covers_by_reduction(self) -> List[Tuple[Word, Word]]:
        """Cover relation as the transitive reduction of the order."""
        return sorted(nx.transitive_reduction(self.order_graph()).edges())


def hasse_dot(lattice: DominanceLattice) -> str:
    """Hasse diagram of the lattice in DOT; edges point from smaller to larger."""
    lines = [f'digraph "W({lattice.n},{lattice.r})" {{']
    for w in lattice.elements:
        lines.append(f'  "{w}";')
    for v, w in lattice.covers():
        lines.append(f'  "{v}" -> "{w}";')
    lines.append('}')
    return '\n'.join(lines) + '\n'


# Permutations in one-line notation

def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    parts = text.split(',') if ',' in text else list(text)
    try:
        sigma = tuple(int(p) for p in parts)
    except ValueError:
        raise DomainError(f"not a permutation: {text!r}")
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise DomainError(f"not a permutation: {text!r}")
    return sigma


def format_permutation(sigma: Permutation) -> str:
    sep = ',' if len(sigma) > 9 else ''
    return sep.join(str(x) for x in sigma)


def shuffle(A: Iterable[int], B: Iterable[int], n: int) -> Permutation:
    """The permutation taking B onto A and the complement of B onto the complement of A,
    increasing on both parts."""
    a, b = sorted(A), sorted(B)
    if len(a) != len(b):
        raise SizeMismatch(len(a), len(b))
    a_rest = sorted(complement(a, n))
    b_rest = sorted(complement(b, n))
    image = {}
    image.update(zip(b, a))
    image.update(zip(b_rest, a_rest))
    return tuple(image[i] for i in range(1, n + 1))


def inversions(sigma: Permutation) -> int:
    return sum(1 for i, j in combinations(range(len(sigma)), 2) if sigma[i] > sigma[j])


def bruhat_covers(tau: Permutation) -> Set[Permutation]:
    """Permutations covering tau: swap tau_i < tau_j with no value between them in between."""
    out = set()
    n = len(tau)
    for i in range(n):
        for j in range(i + 1, n):
            lo, hi = tau[i], tau[j]
            if lo > hi or any(lo < tau[k] < hi for k in range(i + 1, j)):
                continue
            swapped = list(tau)
            swapped[i], swapped[j] = hi, lo
            out.add(tuple(swapped))
    return out


def bruhat_leq(sigma: Permutation, tau: Permutation) -> bool:
    """Bruhat order by comparing sorted prefixes."""
    if len(sigma) != len(tau):
        raise SizeMismatch(len(sigma), len(tau))
    for i in range(1, len(sigma)):
        if any(x > y for x, y in zip(sorted(sigma[:i]), sorted(tau[:i]))):
            return False
    return True


def bruhat_leq_by_covers(sigma: Permutation, tau: Permutation) -> bool:
    """Bruhat order as the transitive closure of covers (breadth-first search)."""
    if sigma == tau:
        return True
    target = inversions(tau)
    seen = {sigma}
    queue = deque([sigma])
    while queue:
        current = queue.popleft()
        for nxt in bruhat_covers(current):
            if nxt == tau:
                return True
            if nxt not in seen and inversions(nxt) < target:
                seen.add(nxt)
                queue.append(nxt)
    return False


# Distinguished words

def distinguished_word(M: Matroid) -> Word:
    """Rank increments along 1, 2, ..., n."""
    ranks = M.ranks
    return ''.join('1' if ranks[(1 << i) - 1] > ranks[(1 << (i - 1)) - 1] else '0'
                   for i in range(1, M.n + 1))


def lambda_map(M: Matroid, sigma: Permutation) -> Word:
    """Distinguished word of M with its ground set ordered sigma_1, sigma_2, ..., sigma_n."""
    if sorted(sigma) != list(range(1, M.n + 1)):
        raise DomainError(f"{format_permutation(sigma)} is not a permutation of [{M.n}]")
    letters = []
    mask = 0
    rank = 0
    for x in sigma:
        mask |= 1 << (x - 1)
        new = int(M.ranks[mask])
        letters.append('1' if new > rank else '0')
        rank = new
    return ''.join(letters)


def _lambda_chunk(n: int, table: bytes, first: int) -> Counter:
    """Distinguished-word counts over the permutations starting with ``first``."""
    ranks = list(table)
    full = (1 << n) - 1
    counts: Counter = Counter()

    def extend(mask: int, rank: int, word: str) -> None:
        if mask == full:
            counts[word] += 1
            return
        rest = full & ~mask
        while rest:
            low = rest & -rest
            new = ranks[mask | low]
            extend(mask | low, new, word + ('1' if new > rank else '0'))
            rest ^= low

    bit = 1 << (first - 1)
    extend(bit, ranks[bit], '1' if ranks[bit] else '0')
    return counts


def lambda_fibres(M: Matroid, threads: Optional[int] = None, verbose: bool = False) -> Counter:
    """Number of orderings of the ground set with each distinguished word."""
    check_cap('perm_n', M.n)
    if M.n == 0:
        return Counter({'': 1})
    table = M.table_bytes()
    chunks = [(M.n, table, first) for first in range(1, M.n + 1)]
    total: Counter = Counter()
    for part in map_chunks(_lambda_chunk, chunks, threads=threads, verbose=verbose,
                           label='first-letter block'):
        total.update(part)
    return total


def lambda_image(M: Matroid, threads: Optional[int] = None, verbose: bool = False) -> Set[Word]:
    return set(lambda_fibres(M, threads=threads, verbose=verbose))


def lambda_table(M: Matroid) -> Dict[Permutation, Word]:
    """λ for every permutation, keyed by permutation (small n)."""
    check_cap('perm_n', M.n)
    return {sigma: lambda_map(M, sigma) for sigma in permutations(range(1, M.n + 1))}


def is_order_reversing(M: Matroid) -> bool:
    """Check sigma <= tau in Bruhat order implies λ(sigma) >= λ(tau), over all covers."""
    table = lambda_table(M)
    for sigma, word in table.items():
        for tau in bruhat_covers(sigma):
            if not word_leq(table[tau], word):
                return False
    return True


def lambda_order_reversing_check(w: Word) -> bool:
    """is_order_reversing for the freedom matroid of w."""
    from freedom import freedom_matroid  # freedom depends on this module
    check_cap('perm_n', len(w))
    return is_order_reversing(freedom_matroid(w))


def shuffles_realize_ideal(M: Matroid) -> bool:
    """Every v below the distinguished word w is λ of the shuffle taking pi(v) onto pi(w)."""
    w = distinguished_word(M)
    A = pi(w)
    return all(lambda_map(M, shuffle(A, pi(v), M.n)) == v for v in principal_ideal(w))
