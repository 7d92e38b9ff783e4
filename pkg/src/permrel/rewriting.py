"""Rewriting engine for the cyclic-relation monoid on n generators.

The relations a_1..a_n = (any cyclic rotation) orient into two rule
families, both length-preserving and strictly decreasing in the
length-lexicographic order:

* ``rot(i)``  for 1 <= i <= n-1:
      (i+1) .. n 1 .. i              ->  1 2 .. n
* ``pull(j, m)``  for 2 <= j <= n-1, m >= 1, or j = n, m >= 2:
      j 1^m 2 3 .. n                 ->  1 2 .. n j 1^(m-1)

``pull(n, 1)`` is deliberately absent: its input n 1 2 .. n contains
the rot(n-1) pattern n 1 2 .. n-1, which rewrites to the same output,
and including it would break the unique-redex-per-position property.

The terminal words of this system are the length-lex-minimal
representatives; :func:`decompose` parses them into the canonical
shape  1^i (1 2 .. n)^eps (2 3 .. n)^j tail.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidRedexError, NotIrreducibleError
from .words import Word, ascent_word, central_word, check_word, rotation

_KIND_ORDER = {"rot": 0, "pull": 1}


@dataclass(frozen=True)
class Redex:
    """One rule occurrence inside a host word.

    ``index`` is the rotation amount i for rot rules and the leading
    letter j for pull rules; ``run`` is the length m of the 1-run for
    pull rules and 0 for rot rules.
    """

    position: int
    kind: str
    index: int
    run: int

    def span(self, n: int) -> int:
        return n if self.kind == "rot" else n + self.run

    def sort_key(self) -> tuple[int, int, int]:
        # leftmost first; rot before pull; longer 1-run first
        return (self.position, _KIND_ORDER[self.kind], -self.run)


def redex_sides(r: Redex, n: int, allow_illegal: bool = False) -> tuple[Word, Word]:
    """The (pattern, replacement) pair of the rule instance ``r``."""
    if r.kind == "rot":
        if not 1 <= r.index <= n - 1 or r.run != 0:
            raise InvalidRedexError(f"no rotation rule rot({r.index})")
        return rotation(n, r.index), central_word(n)
    if r.kind == "pull":
        legal = (2 <= r.index <= n - 1 and r.run >= 1) or (r.index == n and r.run >= 2)
        if not legal and not (allow_illegal and r.index == n and r.run == 1):
            raise InvalidRedexError(f"no pull rule pull({r.index},{r.run})")
        lhs = (r.index,) + (1,) * r.run + ascent_word(n)
        rhs = central_word(n) + (r.index,) + (1,) * (r.run - 1)
        return lhs, rhs
    raise InvalidRedexError(f"unknown redex kind {r.kind!r}")


def _redex_at(w: Word, p: int, n: int) -> Redex | None:
    """The unique rule occurrence starting at position p, if any.

    The first letter pins everything down: letter c >= 2 admits only
    the rotation by c-1, and only a pull led by j = c.  The two kinds
    cannot both match: a rot match continues c+1 after c (so no 1-run)
    except for c = n, where the run has length exactly 1 and the pull
    it would feed is the excluded pull(n,1).
    """
    c = w[p]
    if c < 2:
        return None
    if w[p : p + n] == rotation(n, c - 1):
        return Redex(p, "rot", c - 1, 0)
    m = 0
    while p + 1 + m < len(w) and w[p + 1 + m] == 1:
        m += 1
    if m >= 1 and w[p + 1 + m : p + m + n] == ascent_word(n):
        if c <= n - 1 or m >= 2:
            return Redex(p, "pull", c, m)
    return None


def find_redexes(w: Word, n: int) -> list[Redex]:
    """All rule occurrences in ``w``, leftmost first.

    >>> find_redexes((2, 3, 1), 3)
    [Redex(position=0, kind='rot', index=1, run=0)]
    >>> find_redexes((3, 1, 1, 2, 3), 3)
    [Redex(position=0, kind='pull', index=3, run=2)]
    >>> find_redexes((2, 1), 3)
    []
    """
    _check_degree(n)
    check_word(w, n)
    found = [r for p in range(len(w)) if (r := _redex_at(w, p, n)) is not None]
    return sorted(found, key=Redex.sort_key)


def apply_redex(w: Word, r: Redex, n: int, allow_illegal: bool = False) -> Word:
    """Replace the matched span of ``r`` by the rule replacement.

    >>> apply_redex((2, 3, 1), Redex(0, "rot", 1, 0), 3)
    (1, 2, 3)
    >>> apply_redex((2, 1, 2, 3), Redex(0, "pull", 2, 1), 3)
    (1, 2, 3, 2)
    >>> apply_redex((3, 1, 1, 2, 3), Redex(0, "pull", 3, 2), 3)
    (1, 2, 3, 3, 1)
    """
    lhs, rhs = redex_sides(r, n, allow_illegal)
    p = r.position
    if p < 0 or w[p : p + len(lhs)] != lhs:
        raise InvalidRedexError(f"{r} does not match at position {p}")
    return w[:p] + rhs + w[p + len(lhs):]


def _leftmost_redex(w: Word, n: int) -> Redex | None:
    for p in range(len(w)):
        r = _redex_at(w, p, n)
        if r is not None:
            return r
    return None


def normal_form(w: Word, n: int) -> Word:
    """The unique length-lex-minimal word equal to ``w`` in the monoid.

    >>> normal_form((3, 1, 2), 3)
    (1, 2, 3)
    >>> normal_form((2, 1), 3)
    (2, 1)
    >>> normal_form((2, 1, 2, 3, 1), 3)
    (1, 2, 3, 2, 1)
    """
    _check_degree(n)
    check_word(w, n)
    while True:
        r = _leftmost_redex(w, n)
        if r is None:
            return w
        nxt = apply_redex(w, r, n)
        assert nxt < w, "rewrite must decrease the word lexicographically"
        w = nxt


def rewrite_steps(w: Word, n: int) -> tuple[Word, int]:
    """Normal form together with the number of rule applications."""
    _check_degree(n)
    check_word(w, n)
    steps = 0
    while True:
        r = _leftmost_redex(w, n)
        if r is None:
            return w, steps
        w = apply_redex(w, r, n)
        steps += 1


def rewrite_random(w: Word, n: int, rng: random.Random) -> Word:
    """Normal form reached by applying redexes in random order.

    Local confluence plus termination make the endpoint independent of
    the choices, which is what the tests exercise.
    """
    _check_degree(n)
    check_word(w, n)
    while True:
        redexes = find_redexes(w, n)
        if not redexes:
            return w
        w = apply_redex(w, rng.choice(redexes), n)


def is_irreducible(w: Word, n: int) -> bool:
    return _leftmost_redex(w, n) is None


@dataclass(frozen=True)
class Factorization:
    """The canonical shape 1^ones (1 2 .. n)^central (2 .. n)^ascents tail.

    ``central`` is 0 or 1; ``ascents >= 1`` forces ``central = 1`` or
    ``ones = 0`` (otherwise the ones and the ascent block would splice
    into another copy of the central word).
    """

    ones: int
    central: int
    ascents: int
    tail: Word


def decompose(w: Word, n: int) -> Factorization:
    """Parse an irreducible word into its canonical factorization.

    >>> decompose((1, 2, 3, 2), 3)
    Factorization(ones=0, central=1, ascents=0, tail=(2,))
    >>> decompose((), 3)
    Factorization(ones=0, central=0, ascents=0, tail=())
    >>> decompose((1, 1, 2, 1), 3)
    Factorization(ones=2, central=0, ascents=0, tail=(2, 1))
    """
    _check_degree(n)
    if not is_irreducible(w, n):
        raise NotIrreducibleError(f"{w} is reducible; decompose needs a normal form")
    p = 0
    while p < len(w) and w[p] == 1:
        p += 1
    ascent = ascent_word(n)
    q = 0
    pos = p
    while w[pos : pos + n - 1] == ascent:
        q += 1
        pos += n - 1
    tail = w[pos:]
    if p >= 1 and q >= 1:
        # 1 followed by an ascent block is a copy of the central word
        return Factorization(p - 1, 1, q - 1, tail)
    return Factorization(p, 0, q, tail)


def recompose(f: Factorization, n: int) -> Word:
    return (
        (1,) * f.ones
        + central_word(n) * f.central
        + ascent_word(n) * f.ascents
        + f.tail
    )


def multiply(u: Word, v: Word, n: int) -> Word:
    """Product in the monoid, returned in normal form.

    >>> multiply((1,), (2, 3), 3)
    (1, 2, 3)
    >>> multiply((3,), (1, 1, 2, 3), 3)
    (1, 2, 3, 3, 1)
    """
    return normal_form(u + v, n)


def equal(u: Word, v: Word, n: int) -> bool:
    """
    >>> equal((2, 3, 1), (3, 1, 2), 3)
    True
    >>> equal((2, 1), (1, 2), 3)
    False
    """
    return normal_form(u, n) == normal_form(v, n)


def is_in_P(w: Word, n: int) -> bool:
    """Membership in the ideal generated by the central word.

    The normal form of a multiple of 1 2 .. n keeps one copy of it as
    the ``central`` factor, so the flag of the factorization decides.

    >>> is_in_P((1, 2, 3), 3)
    True
    >>> is_in_P((2, 1), 3)
    False
    >>> is_in_P((2, 3, 1), 3)
    True
    """
    return decompose(normal_form(w, n), n).central == 1


def prime_witness(a: Word, b: Word, n: int) -> int:
    """Least i with a a_i a_i b outside the central ideal.

    Exists whenever a and b are outside it themselves: at most one
    generator pushes a into the ideal on the right, at most one pushes
    b in on the left, and n >= 3 leaves a third choice.

    >>> prime_witness((), (), 3)
    1
    """
    if is_in_P(a, n) or is_in_P(b, n):
        raise ValueError("witness requires both factors outside the ideal")
    for i in range(1, n + 1):
        if not is_in_P(a + (i, i) + b, n):
            return i
    raise AssertionError("primality guarantees a witness below n+1")


def _check_degree(n: int) -> None:
    if n < 3:
        raise ValueError(f"rewriting needs degree n >= 3, got {n}")
