"""Monoid presentations whose relations permute the product of all generators.

Degree n gives generators a_1, .., a_n.  Each permutation p in a chosen
set H contributes the relation

    a_1 a_2 .. a_n  =  a_p(1) a_p(2) .. a_p(n)

so in one-line notation the right-hand side *is* the permutation.  The
identity permutation contributes nothing and is skipped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import MixedDegreeError, UnsupportedGroupError
from .perms import (
    PermutationSet,
    close_under_group,
    cyclic_set,
    identity_perm,
    parse_permutation,
    permutation_set,
    symmetric_set,
    trivial_set,
)
from .words import Word, central_word

Relation = tuple[Word, Word]


@dataclass(frozen=True)
class Presentation:
    n: int
    h: PermutationSet

    def __post_init__(self):
        if self.h.n != self.n:
            raise MixedDegreeError(
                f"degree {self.n} does not match permutation degree {self.h.n}"
            )

    def relations(self) -> list[Relation]:
        """All defining relations, identity skipped, sorted for determinism.

        >>> pres = Presentation(3, cyclic_set(3))
        >>> pres.relations()
        [((1, 2, 3), (2, 3, 1)), ((1, 2, 3), (3, 1, 2))]
        """
        lhs = central_word(self.n)
        ident = identity_perm(self.n)
        return [(lhs, p) for p in self.h.sorted_members() if p != ident]


def resolve_permutation_set(n: int, h_spec: str) -> PermutationSet:
    """Build the permutation set named by a command-line spec.

    Keywords: "cyclic" (generated by the full n-cycle), "sym" (all of
    Sym_n), "trivial" (identity only).  Anything else is parsed as a
    semicolon-separated list of generators, in one-line or cycle
    notation, and closed into a subgroup.

    >>> len(resolve_permutation_set(3, "sym"))
    6
    >>> sorted(resolve_permutation_set(3, "(1 2)").members)
    [(1, 2, 3), (2, 1, 3)]
    """
    spec = h_spec.strip().lower()
    if spec == "cyclic":
        return cyclic_set(n)
    if spec in ("sym", "symmetric"):
        return symmetric_set(n)
    if spec in ("trivial", "id"):
        return trivial_set(n)
    generators = [parse_permutation(chunk, n) for chunk in h_spec.split(";") if chunk.strip()]
    if not generators:
        raise UnsupportedGroupError(f"empty permutation spec {h_spec!r}")
    return close_under_group(generators, n)


def presentation_from_spec(n: int, h_spec: str) -> Presentation:
    return Presentation(n, resolve_permutation_set(n, h_spec))


def presentation_to_dict(pres: Presentation) -> dict:
    return {
        "n": pres.n,
        "members": [list(p) for p in pres.h.sorted_members()],
    }


def presentation_from_dict(data: dict) -> Presentation:
    """Accepts {"n": .., "generators": [..]} or {"n": .., "members": [..]}.

    Generators are closed into a subgroup; members are taken verbatim.
    """
    n = int(data["n"])
    if "generators" in data:
        gens = [tuple(g) for g in data["generators"]]
        return Presentation(n, close_under_group(gens, n))
    if "members" in data:
        return Presentation(n, permutation_set(n, data["members"]))
    raise UnsupportedGroupError("presentation JSON needs 'generators' or 'members'")


def dump_presentation(pres: Presentation) -> str:
    return json.dumps(presentation_to_dict(pres), indent=2) + "\n"


def load_presentation(text: str) -> Presentation:
    return presentation_from_dict(json.loads(text))
