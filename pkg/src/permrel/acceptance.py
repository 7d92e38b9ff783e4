"""Desk-scale acceptance criteria for the whole toolkit.

Ten independent checks, each returning a verdict line.  They favor
exhaustive small-degree sweeps over spot checks: strategy independence
of the rewriting engine, agreement of three counting methods, transfer
of equality through the fraction group, joinability of every rule
overlap, and the stabilizer reduction's growth arithmetic.

Every check is a pure function of (seed, budget), so repeated runs
print byte-identical verdict lines.
"""

from __future__ import annotations

import random
import subprocess
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .confluence import certify_local_confluence
from .congruence import (
    DEFAULT_BUDGET,
    build_table,
    check_sym_identity,
    growth,
    rho_class_count,
    stabilizer_reduction,
)
from .counting import count_avoiding, count_normal_forms, series_report
from .free_group import phi
from .perms import cyclic_set, symmetric_set
from .presentation import Presentation
from .rewriting import (
    decompose,
    is_in_P,
    is_irreducible,
    normal_form,
    prime_witness,
    rewrite_random,
)
from .words import Word, all_rotations, all_words, ascent_word, central_word


@dataclass
class CriterionResult:
    number: int
    passed: bool
    detail: str
    seconds: float = field(compare=False, default=0.0)

    @property
    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number}: {status} {self.detail}"

    def to_dict(self) -> dict:
        return {"number": self.number, "passed": self.passed, "detail": self.detail}


def _rng(seed: int, criterion: int) -> random.Random:
    return random.Random(f"{seed}:{criterion}")


def criterion_1(seed: int, budget: int) -> tuple[bool, str]:
    """Random rewrite orders terminate at the deterministic normal form."""
    rng = _rng(seed, 1)
    mismatches = 0
    words = 0
    for n, max_len in ((3, 7), (4, 6)):
        for length in range(max_len + 1):
            for w in all_words(n, length):
                words += 1
                nf = normal_form(w, n)
                for _ in range(20):
                    if rewrite_random(w, n, rng) != nf:
                        mismatches += 1
    detail = (
        f"20 random rewrite orders per word reach the deterministic normal form"
        f" on {words} words (n=3 len<=7, n=4 len<=6): {mismatches} mismatches"
    )
    return mismatches == 0, detail


def criterion_2(seed: int, budget: int) -> tuple[bool, str]:
    """Explorer class counts equal the decomposition counter entrywise."""
    checks = []
    for n, max_len in ((3, 7), (4, 6)):
        pres = Presentation(n, cyclic_set(n))
        checks.append(growth(pres, max_len, budget) == count_normal_forms(n, max_len))
    prefix = count_normal_forms(3, 3) == [1, 3, 9, 25]
    passed = all(checks) and prefix
    detail = (
        "explorer and decomposition counts agree entrywise"
        f" (n=3 len<=7, n=4 len<=6); n=3 begins 1,3,9,25: {prefix}"
    )
    return passed, detail


def criterion_3(seed: int, budget: int) -> tuple[bool, str]:
    """Equality transfers to the fraction group; cancellation holds."""
    n = 3
    pair_violations = 0
    pairs = 0
    for length in range(6):
        stratum = list(all_words(n, length))
        nfs = [normal_form(w, n) for w in stratum]
        images = [phi(w, n) for w in stratum]
        for a in range(len(stratum)):
            for b in range(a + 1, len(stratum)):
                pairs += 1
                if (nfs[a] == nfs[b]) != (images[a] == images[b]):
                    pair_violations += 1

    rng = _rng(seed, 3)
    triple_violations = 0
    for _ in range(10_000):
        u = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 4)))
        w1 = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 5)))
        w2 = tuple(rng.randint(1, n) for _ in range(len(w1)))
        same = normal_form(w1, n) == normal_form(w2, n)
        right = normal_form(w1 + u, n) == normal_form(w2 + u, n)
        left = normal_form(u + w1, n) == normal_form(u + w2, n)
        if right != same or left != same:
            triple_violations += 1
    passed = pair_violations == 0 and triple_violations == 0
    detail = (
        f"monoid equality matches group equality on {pairs} equal-length pairs"
        f" (len<=5): {pair_violations} mismatches;"
        f" 10000 random cancellation triples: {triple_violations} violations"
    )
    return passed, detail


def criterion_4(seed: int, budget: int) -> tuple[bool, str]:
    """Every enumerated overlap joins; the excluded rule trips the control."""
    totals = []
    clean = True
    for n in (3, 4, 5):
        summary = certify_local_confluence(n, max_m=5)
        totals.append(summary.total)
        clean = clean and summary.all_joinable and summary.malformed_count == 0
        clean = clean and summary.case_counts["pull-pull"] == 0
    control = certify_local_confluence(3, max_m=5, include_illegal=True)
    control_ok = control.malformed_count >= 1
    passed = clean and control_ok
    detail = (
        f"all overlaps joinable for n=3,4,5 at max_m=5"
        f" ({totals[0]}/{totals[1]}/{totals[2]} instances, no short-pull pairs);"
        f" excluded-rule control flags {control.malformed_count} malformed instances"
    )
    return passed, detail


def _constrained_parses(w: Word, n: int) -> list[tuple[int, int, int, Word]]:
    z = central_word(n)
    block = ascent_word(n)
    rotations = set(all_rotations(n))
    ones = 0
    while ones < len(w) and w[ones] == 1:
        ones += 1
    parses = []
    for i in range(ones + 1):
        after_ones = w[i:]
        for eps in (0, 1):
            if eps and after_ones[: n] != z:
                continue
            rest = after_ones[n:] if eps else after_ones
            j = 0
            while True:
                b = rest[(n - 1) * j :]
                admissible = not (j >= 1 and eps == 0 and i != 0)
                if b[:1] == (1,):
                    admissible = False
                if len(b) >= n - 1 and b[: n - 1] == block:
                    admissible = False
                if any(b[t : t + n] in rotations for t in range(len(b) - n + 1)):
                    admissible = False
                if admissible:
                    parses.append((i, eps, j, b))
                if b[: n - 1] == block:
                    j += 1
                else:
                    break
    return parses


def criterion_5(seed: int, budget: int) -> tuple[bool, str]:
    """The decomposition grammar parses each irreducible word uniquely."""
    n = 3
    bad = 0
    irreducible = 0
    for length in range(8):
        for w in all_words(n, length):
            parses = _constrained_parses(w, n)
            if is_irreducible(w, n):
                irreducible += 1
                parts = decompose(w, n)
                expected = (parts.ones, parts.central, parts.ascents, parts.tail)
                if parses != [expected]:
                    bad += 1
            elif parses:
                bad += 1
    detail = (
        f"exhaustive parse enumeration: one constrained parse for each of"
        f" {irreducible} irreducible words (n=3 len<=7), none for reducible:"
        f" {bad} deviations"
    )
    return bad == 0, detail


def criterion_6(seed: int, budget: int) -> tuple[bool, str]:
    """Centrality, ideal membership, and the prime witness."""
    n = 3
    z = central_word(n)
    central_bad = sum(
        1
        for length in range(6)
        for w in all_words(n, length)
        if normal_form(z + w, n) != normal_form(w + z, n)
    )

    ideal_bad = 0
    for length in range(8):
        if length < n:
            in_ideal = set()
        else:
            in_ideal = {
                normal_form(z + s, n) for s in all_words(n, length - n)
            }
        for w in all_words(n, length):
            if is_in_P(w, n) != (normal_form(w, n) in in_ideal):
                ideal_bad += 1

    outside = [
        w
        for length in range(4)
        for w in all_words(n, length)
        if not is_in_P(w, n)
    ]
    witness_bad = 0
    for a in outside:
        for b in outside:
            i = prime_witness(a, b, n)
            if is_in_P(a + (i, i) + b, n):
                witness_bad += 1
            elif any(not is_in_P(a + (k, k) + b, n) for k in range(1, i)):
                witness_bad += 1
    passed = central_bad == 0 and ideal_bad == 0 and witness_bad == 0
    detail = (
        f"central word commutes with all words len<=5 ({central_bad} failures);"
        f" ideal membership matches the z-prefix oracle len<=7 ({ideal_bad});"
        f" prime witness minimal for {len(outside)}^2 outside pairs ({witness_bad})"
    )
    return passed, detail


def criterion_7(seed: int, budget: int) -> tuple[bool, str]:
    """The symmetric relation set makes z a_i a_j symmetric; H0 does not."""
    holds = all(
        check_sym_identity(n, i, j, budget=budget)
        for n in (3, 4)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    )
    contrast = not check_sym_identity(3, 1, 2, h=cyclic_set(3), budget=budget)
    detail = (
        f"z a_i a_j = z a_j a_i for all i<j under Sym_n (n=3,4): {holds};"
        f" same check under the cyclic set is false: {contrast}"
    )
    return holds and contrast, detail


def criterion_8(seed: int, budget: int) -> tuple[bool, str]:
    """Forbidden-factor counts match singleton classes; series agree."""
    avoiding = count_avoiding(3, 7)
    prefix = avoiding[:4] == [1, 3, 9, 24]
    pres = Presentation(3, cyclic_set(3))
    singles = [
        build_table(pres, length, budget).singleton_count() for length in range(8)
    ]
    reports = [series_report(3, 7, budget), series_report(4, 5, budget)]
    consistent = all(r.consistent for r in reports)
    passed = prefix and avoiding == singles and consistent
    detail = (
        f"avoidance counts begin 1,3,9,24 ({prefix}) and equal singleton"
        f" classes len<=7 ({avoiding == singles});"
        f" series three-way agreement n=3 len<=7 and n=4 len<=5: {consistent}"
    )
    return passed, detail


def criterion_9(seed: int, budget: int) -> tuple[bool, str]:
    """Stabilizer reduction: free for the cyclic set, binomial for Sym_n."""
    free_ok = True
    for n in (3, 4):
        reduction = stabilizer_reduction(cyclic_set(n))
        free_ok = free_ok and reduction.is_free
        free_ok = free_ok and len(reduction.h1.members) == 1
        reduced = reduction.reduced_presentation()
        free_ok = free_ok and growth(reduced, 4, budget) == [
            (n - 1) ** length for length in range(5)
        ]

    sym_ok = True
    binomial_ok = True
    for n in (3, 4):
        reduction = stabilizer_reduction(symmetric_set(n))
        order = len(reduction.h1.members)
        sym_ok = sym_ok and order == _factorial(n - 1)
        reduced = reduction.reduced_presentation()
        counts = [
            rho_class_count(reduced, length, power=1, budget=budget)
            for length in range(6)
        ]
        binomial_ok = binomial_ok and counts == [
            _binomial(length + n - 2, n - 2) for length in range(6)
        ]
    passed = free_ok and sym_ok and binomial_ok
    detail = (
        f"cyclic set reduces to a free monoid of rank n-1 (n=3,4): {free_ok};"
        f" Sym_n stabilizer has order (n-1)! : {sym_ok};"
        f" reduced classes after one central stabilization are binomial"
        f" len<=5: {binomial_ok}"
    )
    return passed, detail


def _factorial(k: int) -> int:
    out = 1
    for t in range(2, k + 1):
        out *= t
    return out


def _binomial(a: int, b: int) -> int:
    out = 1
    for t in range(b):
        out = out * (a - t) // (t + 1)
    return out


_REPLAY_COMMANDS = (
    ("growth", "-n", "3", "--h", "cyclic", "--max-len", "5"),
    ("confluence", "-n", "3", "--max-m", "3", "--json"),
    ("reduce", "-n", "4", "--h", "sym"),
    ("nf", "-n", "3", "2 3 1", "--json"),
)


def criterion_10(seed: int, budget: int, elapsed: float) -> tuple[bool, str]:
    """One CLI entry point, byte-identical reruns, bounded total runtime."""
    identical = True
    started = time.perf_counter()
    commands = _REPLAY_COMMANDS + (
        ("acceptance", "--only", "8", "--seed", str(seed)),
    )
    for command in commands:
        outputs = []
        for _ in range(2):
            proc = subprocess.run(
                [sys.executable, "-m", "permrel.cli", *command],
                capture_output=True,
                timeout=300,
            )
            if proc.returncode != 0:
                identical = False
            outputs.append(proc.stdout)
        if outputs[0] != outputs[1] or not outputs[0]:
            identical = False
    total = elapsed + (time.perf_counter() - started)
    timely = total < 600.0
    detail = (
        f"{len(commands)} CLI commands byte-identical across repeated seeded"
        f" runs: {identical}; suite runtime under 600s: {timely}"
    )
    return identical and timely, detail


_CRITERIA: tuple[tuple[int, Callable], ...] = (
    (1, criterion_1),
    (2, criterion_2),
    (3, criterion_3),
    (4, criterion_4),
    (5, criterion_5),
    (6, criterion_6),
    (7, criterion_7),
    (8, criterion_8),
    (9, criterion_9),
    (10, criterion_10),
)


def run_all(
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    only: Optional[Sequence[int]] = None,
    report: Optional[Callable[[str], None]] = None,
) -> list[CriterionResult]:
    """Run the acceptance criteria in order and collect verdicts.

    ``only`` restricts to a subset of criterion numbers; ``report``
    receives each verdict line as it is produced.
    """
    chosen = set(range(1, 11)) if only is None else set(only)
    unknown = chosen - set(range(1, 11))
    if unknown:
        raise ValueError(f"unknown criteria: {sorted(unknown)}")
    results = []
    suite_start = time.perf_counter()
    for number, fn in _CRITERIA:
        if number not in chosen:
            continue
        start = time.perf_counter()
        if number == 10:
            passed, detail = criterion_10(
                seed, budget, elapsed=time.perf_counter() - suite_start
            )
        else:
            passed, detail = fn(seed, budget)
        result = CriterionResult(number, passed, detail, time.perf_counter() - start)
        results.append(result)
        if report is not None:
            report(result.line)
    return results
