"""The fraction group of the cyclic-relation monoid: (free group) x (cyclic).

Inverting the central word z = a_1 .. a_n turns the monoid into F x C,
with F free on x_1, .., x_{n-1} and C infinite cyclic on c.  The letter
a_k maps to x_k for k < n; the last letter maps to x_n c where x_n
stands for (x_1 .. x_{n-1})^-1, so that the image of z is exactly c.

Free-group elements are kept as syllable sequences (generator, nonzero
exponent), freely reduced at construction, which makes group equality
plain structural equality.  Comparing images under this map is an
equality test for the monoid that shares nothing with the rewriting
engine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LetterOutOfRangeError
from .words import Word, central_word, check_word

Syllable = tuple[int, int]


def _reduced(pairs) -> tuple[Syllable, ...]:
    out: list[Syllable] = []
    for gen, exp in pairs:
        if exp == 0:
            continue
        if out and out[-1][0] == gen:
            merged = out[-1][1] + exp
            out.pop()
            if merged:
                out.append((gen, merged))
        else:
            out.append((gen, exp))
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    syllables: tuple[Syllable, ...] = ()


def free_word(pairs) -> FreeWord:
    """Build a freely reduced word from raw (generator, exponent) pairs.

    >>> free_word([(1, 1), (2, 1), (2, -1), (1, 2)])
    FreeWord(syllables=((1, 3),))
    """
    return FreeWord(_reduced(pairs))


def free_mul(a: FreeWord, b: FreeWord) -> FreeWord:
    return FreeWord(_reduced(a.syllables + b.syllables))


def free_inv(a: FreeWord) -> FreeWord:
    return FreeWord(tuple((gen, -exp) for gen, exp in reversed(a.syllables)))


@dataclass(frozen=True)
class GroupElement:
    free: FreeWord = FreeWord()
    c_exp: int = 0


IDENTITY = GroupElement()


def phi(w: Word, n: int) -> GroupElement:
    """Image of a word in (free group of rank n-1) x (cyclic on c).

    >>> phi((1, 2, 3), 3)
    GroupElement(free=FreeWord(syllables=()), c_exp=1)
    >>> phi((2, 3, 1), 3) == phi((1, 2, 3), 3)
    True
    >>> phi((2, 1), 3)
    GroupElement(free=FreeWord(syllables=((2, 1), (1, 1))), c_exp=0)
    """
    if n < 3:
        raise ValueError(f"the embedding needs degree n >= 3, got {n}")
    check_word(w, n)
    pairs: list[Syllable] = []
    c_exp = 0
    for letter in w:
        if letter < n:
            pairs.append((letter, 1))
        else:
            pairs.extend((k, -1) for k in range(n - 1, 0, -1))
            c_exp += 1
    return GroupElement(FreeWord(_reduced(pairs)), c_exp)


def group_mul(g1: GroupElement, g2: GroupElement) -> GroupElement:
    return GroupElement(free_mul(g1.free, g2.free), g1.c_exp + g2.c_exp)


def group_inv(g: GroupElement) -> GroupElement:
    return GroupElement(free_inv(g.free), -g.c_exp)


def equal_via_group(u: Word, v: Word, n: int) -> bool:
    """Equality in the monoid, decided through the group embedding.

    >>> equal_via_group((2, 3, 1), (1, 2, 3), 3)
    True
    >>> equal_via_group((1, 2), (2, 1), 3)
    False
    """
    return phi(u, n) == phi(v, n)


def psi_on_generators(n: int) -> dict[str, Word]:
    """Monoid preimages of the group generators: x_k -> a_k, c -> z.

    >>> psi_on_generators(3)
    {'x1': (1,), 'x2': (2,), 'c': (1, 2, 3)}
    """
    if n < 3:
        raise ValueError(f"the embedding needs degree n >= 3, got {n}")
    mapping: dict[str, Word] = {f"x{k}": (k,) for k in range(1, n)}
    mapping["c"] = central_word(n)
    return mapping


def psi_word(g: GroupElement, n: int) -> Word:
    """Apply the generator preimages to an element with no inverses.

    Only images of actual monoid elements can come back; a negative
    exponent anywhere means there is nothing to return.
    """
    if g.c_exp < 0 or any(exp < 0 for _, exp in g.free.syllables):
        raise ValueError("negative exponents have no preimage in the monoid")
    mapping = psi_on_generators(n)
    w: Word = ()
    for gen, exp in g.free.syllables:
        w += mapping[f"x{gen}"] * exp
    return w + mapping["c"] * g.c_exp


def verify_inverse_on_generators(n: int) -> bool:
    """Check phi(psi(x_k)) = x_k and phi(psi(c)) = c, per the theorem."""
    mapping = psi_on_generators(n)
    for k in range(1, n):
        if phi(mapping[f"x{k}"], n) != GroupElement(FreeWord(((k, 1),)), 0):
            return False
    return phi(mapping["c"], n) == GroupElement(FreeWord(), 1)


def render_group_element(g: GroupElement) -> str:
    """
    >>> render_group_element(phi((3,), 3))
    'x2^-1 x1^-1 ; c^1'
    >>> render_group_element(IDENTITY)
    '1 ; c^0'
    """
    if g.free.syllables:
        parts = [
            f"x{gen}" if exp == 1 else f"x{gen}^{exp}"
            for gen, exp in g.free.syllables
        ]
        head = " ".join(parts)
    else:
        head = "1"
    return f"{head} ; c^{g.c_exp}"


def group_element_to_dict(g: GroupElement) -> dict:
    return {"syllables": [[gen, exp] for gen, exp in g.free.syllables], "c": g.c_exp}


def group_element_from_dict(data: dict, n: int | None = None) -> GroupElement:
    pairs = [(int(gen), int(exp)) for gen, exp in data["syllables"]]
    if n is not None:
        for gen, _ in pairs:
            if not 1 <= gen <= n - 1:
                raise LetterOutOfRangeError(
                    f"free generator x{gen} outside x1..x{n - 1}"
                )
    return GroupElement(free_word(pairs), int(data["c"]))
