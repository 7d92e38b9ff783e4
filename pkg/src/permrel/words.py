"""Words over the alphabet {1, .., n}.

A word is a plain tuple of generator indices; the empty tuple is the
monoid identity.  All modules in this package share this representation,
so concatenation is tuple addition and equality is tuple equality.

Text formats accepted by :func:`parse_word`:

* whitespace-separated integers, e.g. ``"2 3 1"``;
* dot-separated generator tokens, e.g. ``"a1.a1.a2"``.
"""

from __future__ import annotations

import re

from .errors import LetterOutOfRangeError, WordSyntaxError

Word = tuple[int, ...]

_GEN_TOKEN = re.compile(r"^a([0-9]+)$")


def check_word(w: Word, n: int) -> None:
    """Raise if any letter of ``w`` is outside 1..n."""
    for letter in w:
        if not 1 <= letter <= n:
            raise LetterOutOfRangeError(f"letter {letter} outside 1..{n}")


def parse_word(text: str, n: int) -> Word:
    """Parse a word literal.

    >>> parse_word("2 3 1", 3)
    (2, 3, 1)
    >>> parse_word("a1.a1.a2", 3)
    (1, 1, 2)
    >>> parse_word("", 3)
    ()
    """
    if text.strip() in ("", "ε"):
        return ()
    tokens = text.split()
    if len(tokens) == 1 and "." in tokens[0]:
        tokens = tokens[0].split(".")
    letters = []
    for tok in tokens:
        m = _GEN_TOKEN.match(tok)
        digits = m.group(1) if m else tok
        try:
            letter = int(digits)
        except ValueError:
            raise WordSyntaxError(f"bad word token {tok!r}") from None
        if not 1 <= letter <= n:
            raise LetterOutOfRangeError(f"letter {tok!r} outside 1..{n}")
        letters.append(letter)
    return tuple(letters)


def format_word(w: Word) -> str:
    """Render a word as space-separated letters; the empty word as ``ε``."""
    return " ".join(str(x) for x in w) if w else "ε"


def central_word(n: int) -> Word:
    """The full ascending product 1 2 .. n (a central element)."""
    return tuple(range(1, n + 1))


def ascent_word(n: int) -> Word:
    """The ascending product 2 3 .. n of all generators but the first."""
    return tuple(range(2, n + 1))


def rotation(n: int, i: int) -> Word:
    """The cyclic rotation of 1 2 .. n starting at letter i+1.

    ``rotation(n, 0)`` is the ascending product itself.

    >>> rotation(3, 1)
    (2, 3, 1)
    """
    base = central_word(n)
    return base[i:] + base[:i]


def all_rotations(n: int) -> list[Word]:
    """All n cyclic rotations of 1 2 .. n, ascending product first."""
    return [rotation(n, i) for i in range(n)]


def multidegree(w: Word, n: int) -> tuple[int, ...]:
    """Letter-count vector of ``w`` (entry k-1 counts letter k)."""
    counts = [0] * n
    for letter in w:
        counts[letter - 1] += 1
    return tuple(counts)


def all_words(n: int, length: int):
    """Yield every word of the given length in lexicographic order."""
    if length == 0:
        yield ()
        return
    w = [1] * length
    while True:
        yield tuple(w)
        pos = length - 1
        while pos >= 0 and w[pos] == n:
            w[pos] = 1
            pos -= 1
        if pos < 0:
            return
        w[pos] += 1
