"""Exact congruence tables for any permutation-relation presentation.

All defining relations replace a factor by an anagram of it, so words
of one length form a closed finite stratum: the congruence restricted
to it is the connected-component relation of the one-step rewrite
graph.  Classes are computed by a single scan over every (word,
position, relation) triple feeding a union-find, which is complete
because every edge of the graph is seen from both endpoints.

Also here: the point-stabilizer reduction to degree n-1, and the
semidecision for the least cancellative congruence (divide out powers
of the central word).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .errors import (
    BudgetExceededError,
    CentralityError,
    LengthMismatchError,
    UnsupportedGroupError,
)
from .perms import PermutationSet, full_cycle, permutation_set
from .presentation import Presentation, Relation
from .words import Word, all_words, central_word, check_word, format_word

DEFAULT_BUDGET = 10**8


class UnionFind:
    """Array union-find with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> int:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return ra


@dataclass
class CongruenceTable:
    """All words of one length, partitioned into congruence classes."""

    n: int
    length: int
    presentation: Presentation
    parent: UnionFind
    representatives: dict[int, Word] = field(repr=False)

    @property
    def class_count(self) -> int:
        return len(self.representatives)

    def word_index(self, w: Word) -> int:
        if len(w) != self.length:
            raise LengthMismatchError(
                f"table holds words of length {self.length}, got {len(w)}"
            )
        check_word(w, self.n)
        idx = 0
        for letter in w:
            idx = idx * self.n + (letter - 1)
        return idx

    def root_of(self, w: Word) -> int:
        return self.parent.find(self.word_index(w))

    def representative_of(self, w: Word) -> Word:
        return self.representatives[self.root_of(w)]

    def class_sizes(self) -> Counter:
        counts = Counter()
        for idx in range(self.n**self.length):
            counts[self.parent.find(idx)] += 1
        return counts

    def singleton_count(self) -> int:
        return sum(1 for size in self.class_sizes().values() if size == 1)

    def rows(self):
        """Yield (word, representative) pairs in lexicographic order."""
        for idx, w in enumerate(all_words(self.n, self.length)):
            yield w, self.representatives[self.parent.find(idx)]


def build_table(
    pres: Presentation, length: int, budget: int = DEFAULT_BUDGET
) -> CongruenceTable:
    """Close the defining relations over all words of the given length.

    >>> from permrel.presentation import presentation_from_spec
    >>> build_table(presentation_from_spec(3, "trivial"), 3).class_count
    27
    >>> build_table(presentation_from_spec(3, "cyclic"), 3).class_count
    25
    >>> build_table(presentation_from_spec(3, "sym"), 3).class_count
    22
    """
    n = pres.n
    required = n**length
    if required > budget:
        raise BudgetExceededError(required, budget)
    uf = UnionFind(required)
    span = length - n + 1
    if span > 0:
        oriented = []
        for lhs, rhs in pres.relations():
            oriented.append((lhs, rhs))
            oriented.append((rhs, lhs))
        # replacing pattern a by b at position p shifts the word's index
        # by a fixed amount; precompute it per (pattern, position)
        pows = [n**e for e in range(length)]
        by_pos = []
        for p in range(span):
            shifts: dict[Word, list[int]] = {}
            for a, b in oriented:
                d = sum(
                    (b[t] - a[t]) * pows[length - 1 - p - t] for t in range(n)
                )
                if d:
                    shifts.setdefault(a, []).append(d)
            by_pos.append(shifts)
        idx = 0
        for w in itertools.product(range(1, n + 1), repeat=length):
            for p in range(span):
                ds = by_pos[p].get(w[p : p + n])
                if ds:
                    for d in ds:
                        uf.union(idx, idx + d)
            idx += 1
    representatives: dict[int, Word] = {}
    for idx, w in enumerate(all_words(n, length)):
        root = uf.find(idx)
        if root not in representatives:
            representatives[root] = w
    return CongruenceTable(n, length, pres, uf, representatives)


def oracle_equal(table: CongruenceTable, u: Word, v: Word) -> bool:
    """
    >>> from permrel.presentation import presentation_from_spec
    >>> t = build_table(presentation_from_spec(3, "cyclic"), 3)
    >>> oracle_equal(t, (2, 3, 1), (3, 1, 2))
    True
    >>> oracle_equal(t, (1, 2, 3), (1, 3, 2))
    False
    """
    return table.root_of(u) == table.root_of(v)


def growth(
    pres: Presentation, max_length: int, budget: int = DEFAULT_BUDGET
) -> list[int]:
    """Class counts per length, from 0 up to and including max_length."""
    return [build_table(pres, L, budget).class_count for L in range(max_length + 1)]


def table_to_csv(table: CongruenceTable) -> str:
    lines = ["word,class-representative"]
    lines.extend(f"{format_word(w)},{format_word(r)}" for w, r in table.rows())
    return "\n".join(lines) + "\n"


def check_sym_identity(
    n: int,
    i: int,
    j: int,
    h: PermutationSet | None = None,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Whether z a_i a_j = z a_j a_i holds, by default over the full Sym_n.

    >>> check_sym_identity(3, 1, 2)
    True
    """
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got ({i}, {j})")
    if h is None:
        from .perms import symmetric_set

        h = symmetric_set(n)
    pres = Presentation(n, h)
    table = build_table(pres, n + 2, budget)
    z = central_word(n)
    return oracle_equal(table, z + (i, j), z + (j, i))


def check_centrality(pres: Presentation, budget: int = DEFAULT_BUDGET) -> None:
    """Raise unless the full product commutes with every generator."""
    z = central_word(pres.n)
    table = build_table(pres, pres.n + 1, budget)
    for g in range(1, pres.n + 1):
        if not oracle_equal(table, z + (g,), (g,) + z):
            raise CentralityError(
                f"the full product does not commute with generator {g}"
            )


def rho_related(
    pres: Presentation,
    s: Word,
    t: Word,
    max_power: int = 3,
    budget: int = DEFAULT_BUDGET,
) -> bool | None:
    """Semidecision for the least cancellative congruence.

    Two elements are related exactly when some power of the central
    word z stabilizes them: s z^i = t z^i.  Searches i = 0..max_power
    and returns True on success, None when the search is exhausted
    (no decision procedure is available, so False is never returned).
    """
    if len(s) != len(t):
        raise LengthMismatchError(
            f"cancellative comparison needs equal lengths, got {len(s)} and {len(t)}"
        )
    if s == t:
        return True
    check_centrality(pres, budget)
    z = central_word(pres.n)
    for i in range(max_power + 1):
        table = build_table(pres, len(s) + i * pres.n, budget)
        if oracle_equal(table, s + z * i, t + z * i):
            return True
    return None


def rho_class_count(
    pres: Presentation,
    length: int,
    power: int,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Classes among {w z^power : |w| = length}; non-increasing in power.

    At power 0 this is the plain class count; growing powers let the
    central word absorb differences, converging on the cancellative
    quotient's count for the stratum.
    """
    suffix = central_word(pres.n) * power
    table = build_table(pres, length + len(suffix), budget)
    return len({table.root_of(w + suffix) for w in all_words(pres.n, length)})


@dataclass(frozen=True)
class StabilizerReduction:
    """Degree-(n-1) presentation induced by the stabilizer of the point 1.

    Every defining relation of the original monoid, rewritten in the
    fraction group where the central word is invertible, becomes a
    permutation relation on the images of a_2, .., a_n; the permutations
    that arise form the stabilizer subgroup reindexed down one degree.
    """

    h: PermutationSet
    h1: PermutationSet
    induced_relations: tuple[Relation, ...]

    @property
    def is_free(self) -> bool:
        return not self.induced_relations

    def reduced_presentation(self) -> Presentation:
        return Presentation(self.h.n - 1, self.h1)


def stabilizer_reduction(h: PermutationSet) -> StabilizerReduction:
    """
    >>> from permrel.perms import cyclic_set, symmetric_set
    >>> stabilizer_reduction(cyclic_set(3)).induced_relations
    ()
    >>> stabilizer_reduction(symmetric_set(3)).induced_relations
    (((1, 2), (2, 1)),)
    """
    n = h.n
    if n < 3:
        raise UnsupportedGroupError("reduction needs degree at least 3")
    if full_cycle(n) not in h.members:
        raise UnsupportedGroupError(
            "reduction requires the full cycle (1,2,..,n) in the set"
        )
    h1 = permutation_set(
        n - 1,
        [tuple(x - 1 for x in p[1:]) for p in h.members if p[0] == 1],
    )
    lhs = central_word(n - 1)
    relations = set()
    for tau in h.members:
        k0 = tau.index(1)
        rhs = tuple(x - 1 for x in tau[k0 + 1 :] + tau[:k0])
        if rhs != lhs:
            relations.add((lhs, rhs))
    return StabilizerReduction(h, h1, tuple(sorted(relations)))
