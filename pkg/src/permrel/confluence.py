"""Certification that overlapping rule applications always rejoin.

Every rule pattern is a concrete word, so an overlap of two rule
instances is an alignment of two patterns agreeing on their shared
letters; the union of the two spans determines the smallest word
hosting both (the ambient).  For each such placement the certifier
applies each rule once and checks that the two results share their
terminal word, which decides joinability because rewriting terminates.

Rule families for classification: "rot" (rotation rules), "pull"
(pull rules led by a letter below n), "pull_n" (pull rules led by n).
Two pull-family patterns can never overlap: a pull pattern led by
j < n continues j+1 after any of its letters j, never the 1 the second
pattern would need, so that combination is asserted empty.

The excluded rule pull(n, 1) can be re-enabled to show why it is
excluded: its instances are flagged as malformed rather than fed to
the rewriting engine as legitimate rules.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidRedexError
from .rewriting import Redex, apply_redex, redex_sides, rewrite_steps
from .words import Word

_FAMILY_ORDER = {"rot": 0, "pull": 1, "pull_n": 2}


def rule_family(r: Redex, n: int) -> str:
    if r.kind == "rot":
        return "rot"
    return "pull_n" if r.index == n else "pull"


@dataclass(frozen=True)
class OverlapInstance:
    """Two rule instances sharing letters inside one ambient word."""

    n: int
    left: Redex
    right: Redex
    ambient: Word

    @property
    def offset(self) -> int:
        return self.right.position

    def case_label(self) -> str:
        families = sorted(
            (rule_family(self.left, self.n), rule_family(self.right, self.n)),
            key=_FAMILY_ORDER.__getitem__,
        )
        return "-".join(families)

    def is_malformed(self) -> bool:
        """True when either rule instance is outside the legal rule list."""
        for r in (self.left, self.right):
            try:
                redex_sides(r, self.n)
            except InvalidRedexError:
                return True
        return False


@dataclass(frozen=True)
class JoinReport:
    instance: OverlapInstance
    left_result: Word
    right_result: Word
    common_descendant: Word | None
    left_path_length: int
    right_path_length: int
    joinable: bool


def _rule_templates(n: int, max_m: int, include_illegal: bool):
    templates = [("rot", i, 0) for i in range(1, n)]
    templates += [("pull", j, m) for j in range(2, n) for m in range(1, max_m + 1)]
    first_run = 1 if include_illegal else 2
    templates += [("pull", n, m) for m in range(first_run, max_m + 1)]
    return templates


def _template_key(t) -> tuple[int, int, int]:
    kind, index, run = t
    return (0 if kind == "rot" else 1, index, run)


def enumerate_overlaps(
    n: int, max_m: int, include_illegal: bool = False
) -> list[OverlapInstance]:
    """All overlapping placements of two rule patterns, run bound max_m.

    >>> instances = enumerate_overlaps(3, 2)
    >>> any(i.ambient == (2, 3, 1, 2) for i in instances)
    True
    >>> any(i.ambient == (3, 1, 1, 2, 3, 1) for i in instances)
    True
    """
    if n < 3:
        raise ValueError(f"overlap analysis needs n >= 3, got {n}")
    if max_m < 2:
        raise ValueError(f"run bound must be at least 2, got {max_m}")
    templates = _rule_templates(n, max_m, include_illegal)
    patterns = {
        t: redex_sides(Redex(0, t[0], t[1], t[2]), n, allow_illegal=True)[0]
        for t in templates
    }
    out = []
    for a in templates:
        pa = patterns[a]
        for b in templates:
            pb = patterns[b]
            for u in range(len(pa)):
                if u == 0 and _template_key(a) >= _template_key(b):
                    continue  # same start: count unordered pairs once
                shared = min(len(pa), u + len(pb))
                if pa[u:shared] != pb[: shared - u]:
                    continue
                ambient = pa + pb[shared - u :]
                out.append(
                    OverlapInstance(
                        n,
                        Redex(0, a[0], a[1], a[2]),
                        Redex(u, b[0], b[1], b[2]),
                        ambient,
                    )
                )
    out.sort(key=lambda i: (i.ambient, i.left.sort_key(), i.right.sort_key()))
    assert all(
        i.case_label() != "pull-pull" for i in out
    ), "pull patterns led by letters below n can never overlap"
    return out


def check_joinable(inst: OverlapInstance) -> JoinReport:
    """Apply each rule once, then race both results to their terminal word.

    Malformed instances are still exercised (that is the point of the
    negative control), so rule application tolerates the illegal rule.
    """
    left_result = apply_redex(inst.ambient, inst.left, inst.n, allow_illegal=True)
    right_result = apply_redex(inst.ambient, inst.right, inst.n, allow_illegal=True)
    left_nf, left_steps = rewrite_steps(left_result, inst.n)
    right_nf, right_steps = rewrite_steps(right_result, inst.n)
    joinable = left_nf == right_nf
    return JoinReport(
        instance=inst,
        left_result=left_result,
        right_result=right_result,
        common_descendant=left_nf if joinable else None,
        left_path_length=1 + left_steps,
        right_path_length=1 + right_steps,
        joinable=joinable,
    )


@dataclass
class ConfluenceSummary:
    n: int
    max_m: int
    include_illegal: bool
    total: int
    case_counts: dict[str, int]
    joinable_count: int
    malformed_count: int
    all_joinable: bool
    max_left_path: int
    max_right_path: int
    counterexample: JoinReport | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        from .words import format_word

        data = {
            "n": self.n,
            "max_m": self.max_m,
            "include_illegal": self.include_illegal,
            "total": self.total,
            "case_counts": dict(self.case_counts),
            "joinable": self.joinable_count,
            "malformed": self.malformed_count,
            "all_joinable": self.all_joinable,
            "max_left_path": self.max_left_path,
            "max_right_path": self.max_right_path,
            "counterexample": (
                format_word(self.counterexample.instance.ambient)
                if self.counterexample
                else None
            ),
        }
        return data


def certify_local_confluence(
    n: int, max_m: int = 5, include_illegal: bool = False
) -> ConfluenceSummary:
    """Exhaustive joinability check over all bounded overlaps.

    >>> certify_local_confluence(3, 3).all_joinable
    True
    """
    instances = enumerate_overlaps(n, max_m, include_illegal)
    case_counts: dict[str, int] = {
        "rot-rot": 0,
        "rot-pull": 0,
        "rot-pull_n": 0,
        "pull-pull": 0,
        "pull-pull_n": 0,
        "pull_n-pull_n": 0,
    }
    joinable_count = 0
    malformed_count = 0
    max_left = 0
    max_right = 0
    counterexample = None
    for inst in instances:
        case_counts[inst.case_label()] += 1
        if inst.is_malformed():
            malformed_count += 1
        report = check_joinable(inst)
        if report.joinable:
            joinable_count += 1
            max_left = max(max_left, report.left_path_length)
            max_right = max(max_right, report.right_path_length)
        elif counterexample is None:
            counterexample = report
    return ConfluenceSummary(
        n=n,
        max_m=max_m,
        include_illegal=include_illegal,
        total=len(instances),
        case_counts=case_counts,
        joinable_count=joinable_count,
        malformed_count=malformed_count,
        all_joinable=joinable_count == len(instances),
        max_left_path=max_left,
        max_right_path=max_right,
        counterexample=counterexample,
    )
