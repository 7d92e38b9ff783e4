"""Permutations in one-line notation and subsets of the symmetric group.

A permutation of degree n is a tuple ``(p(1), .., p(n))`` of images, so
``p[k-1]`` is the image of k.  Parsing accepts one-line notation
("2,3,1") and cycle notation ("(1 2 3)" or "(1 2)(3 4)").
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import MixedDegreeError, WordSyntaxError

Permutation = tuple[int, ...]


def is_permutation(images: tuple[int, ...]) -> bool:
    """
    >>> is_permutation((2, 3, 1))
    True
    >>> is_permutation((2, 2, 1))
    False
    """
    return sorted(images) == list(range(1, len(images) + 1))


def identity_perm(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The product p∘q, acting as (p∘q)(k) = p(q(k))."""
    if len(p) != len(q):
        raise MixedDegreeError(f"degrees {len(p)} and {len(q)} differ")
    return tuple(p[q[k] - 1] for k in range(len(p)))


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for k, image in enumerate(p, start=1):
        inv[image - 1] = k
    return tuple(inv)


def full_cycle(n: int) -> Permutation:
    """The n-cycle sending 1 to 2, 2 to 3, .., n to 1."""
    return tuple(range(2, n + 1)) + (1,)


def parse_permutation(text: str, n: int) -> Permutation:
    """Parse one-line ("2,3,1") or cycle ("(1 2 3)(4 5)") notation.

    >>> parse_permutation("2,3,1", 3)
    (2, 3, 1)
    >>> parse_permutation("(1 2)", 3)
    (2, 1, 3)
    """
    text = text.strip()
    if text in ("id", "e", "()"):
        return identity_perm(n)
    if text.startswith("("):
        images = list(range(1, n + 1))
        rest = text
        while rest:
            if not rest.startswith("(") or ")" not in rest:
                raise WordSyntaxError(f"bad cycle notation {text!r}")
            body, rest = rest[1:].split(")", 1)
            rest = rest.strip()
            points = [p for chunk in body.split(",") for p in chunk.split()]
            try:
                cycle = [int(p) for p in points]
            except ValueError:
                raise WordSyntaxError(f"bad cycle notation {text!r}") from None
            if any(not 1 <= p <= n for p in cycle) or len(set(cycle)) != len(cycle):
                raise WordSyntaxError(f"bad cycle {body!r} for degree {n}")
            for k, point in enumerate(cycle):
                images[point - 1] = cycle[(k + 1) % len(cycle)]
        perm = tuple(images)
    else:
        try:
            perm = tuple(int(tok) for tok in text.split(","))
        except ValueError:
            raise WordSyntaxError(f"bad one-line notation {text!r}") from None
    if len(perm) != n or not is_permutation(perm):
        raise WordSyntaxError(f"{text!r} is not a permutation of degree {n}")
    return perm


@dataclass(frozen=True)
class PermutationSet:
    """A set of degree-n permutations, with a flag recording subgroup-ness."""

    n: int
    members: frozenset[Permutation]
    is_subgroup: bool

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"degree must be at least 2, got {self.n}")
        for p in self.members:
            if len(p) != self.n:
                raise MixedDegreeError(f"member {p} has degree {len(p)}, not {self.n}")
            if not is_permutation(p):
                raise ValueError(f"{p} is not a permutation")

    def __len__(self) -> int:
        return len(self.members)

    def sorted_members(self) -> list[Permutation]:
        return sorted(self.members)


def _is_subgroup(n: int, members: frozenset[Permutation]) -> bool:
    if identity_perm(n) not in members:
        return False
    return all(
        compose(p, q) in members for p in members for q in members
    )


def permutation_set(n: int, members) -> PermutationSet:
    """Wrap an arbitrary collection of permutations, computing the flag."""
    frozen = frozenset(tuple(m) for m in members)
    return PermutationSet(n, frozen, _is_subgroup(n, frozen))


def close_under_group(generators: list[Permutation], n: int | None = None) -> PermutationSet:
    """The subgroup generated by the given permutations.

    Closure under composition suffices: every permutation has finite
    order, so inverses appear as powers.

    >>> sorted(close_under_group([(2, 3, 1)]).members)
    [(1, 2, 3), (2, 3, 1), (3, 1, 2)]
    """
    generators = [tuple(g) for g in generators]
    if n is None:
        if not generators:
            raise ValueError("empty generating set needs an explicit degree")
        n = len(generators[0])
    for g in generators:
        if len(g) != n:
            raise MixedDegreeError(f"generator {g} has degree {len(g)}, not {n}")
    members = {identity_perm(n)}
    frontier = list(members)
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = compose(g, p)
                if q not in members:
                    members.add(q)
                    nxt.append(q)
        frontier = nxt
    return PermutationSet(n, frozenset(members), True)


def cyclic_set(n: int) -> PermutationSet:
    """The cyclic subgroup generated by the full n-cycle."""
    return close_under_group([full_cycle(n)], n)


def symmetric_set(n: int) -> PermutationSet:
    """The full symmetric group of degree n."""
    members = frozenset(itertools.permutations(range(1, n + 1)))
    return PermutationSet(n, members, True)


def trivial_set(n: int) -> PermutationSet:
    return PermutationSet(n, frozenset({identity_perm(n)}), True)
