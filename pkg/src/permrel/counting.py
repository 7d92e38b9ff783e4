"""Counting the cyclic-case monoid by length, three independent ways.

``count_avoiding`` tallies words with no rotation of 1..n as a factor.
No rewrite touches such a word in either direction, so each one sits
alone in its congruence class.  ``count_normal_forms`` instead sums over
the decomposition shapes (leading 1-run, central power, ascent-block
power) with tails counted by a product automaton.  ``series_report``
lines both up against explorer tables and flags disagreement.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .congruence import DEFAULT_BUDGET, build_table
from .errors import BudgetExceededError
from .perms import cyclic_set
from .presentation import Presentation
from .words import Word, all_rotations, check_word


@dataclass(frozen=True)
class FactorAutomaton:
    """Deterministic scanner for a finite set of forbidden factors.

    A word avoids every forbidden factor exactly when its run from state
    0 never enters a forbidden state.  Forbidden states absorb.
    """

    n: int
    transitions: tuple[tuple[int, ...], ...]
    forbidden: tuple[bool, ...]

    @property
    def state_count(self) -> int:
        return len(self.transitions)

    def step(self, state: int, letter: int) -> int:
        return self.transitions[state][letter - 1]

    def scan(self, word: Sequence[int]) -> bool:
        """True when no forbidden factor occurs in the word.

        >>> auto = factor_automaton(3)
        >>> auto.scan((2, 2, 1))
        True
        >>> auto.scan((2, 2, 3, 1))
        False
        """
        state = 0
        for letter in word:
            state = self.step(state, letter)
            if self.forbidden[state]:
                return False
        return True


def factor_automaton(n: int, patterns: Optional[Iterable[Word]] = None) -> FactorAutomaton:
    """Build the failure-link automaton for the given forbidden factors.

    Defaults to the n rotations of 1..n, whose avoidance characterizes
    the words outside the ideal generated by the central word.
    """
    if n < 2:
        raise ValueError(f"need at least 2 letters, got n={n}")
    pats = sorted({tuple(p) for p in (all_rotations(n) if patterns is None else patterns)})
    for p in pats:
        if not p:
            raise ValueError("forbidden factors must be non-empty")
        check_word(p, n)

    goto: list[dict[int, int]] = [{}]
    terminal: list[bool] = [False]
    for p in pats:
        state = 0
        for letter in p:
            nxt = goto[state].get(letter)
            if nxt is None:
                goto.append({})
                terminal.append(False)
                nxt = len(goto) - 1
                goto[state][letter] = nxt
            state = nxt
        terminal[state] = True

    delta = [[0] * n for _ in goto]
    fail = [0] * len(goto)
    queue: deque[int] = deque()
    for letter in range(1, n + 1):
        child = goto[0].get(letter)
        if child is not None:
            delta[0][letter - 1] = child
            queue.append(child)
    while queue:
        state = queue.popleft()
        if terminal[fail[state]]:
            terminal[state] = True
        for letter in range(1, n + 1):
            child = goto[state].get(letter)
            fallback = delta[fail[state]][letter - 1]
            if child is None:
                delta[state][letter - 1] = fallback
            else:
                fail[child] = fallback
                delta[state][letter - 1] = child
                queue.append(child)

    for state, bad in enumerate(terminal):
        if bad:
            delta[state] = [state] * n
    return FactorAutomaton(n, tuple(tuple(row) for row in delta), tuple(terminal))


def _check_counting_args(n: int, max_length: int) -> None:
    if n < 3:
        raise ValueError(f"counting needs degree at least 3, got n={n}")
    if max_length < 0:
        raise ValueError(f"max_length must be non-negative, got {max_length}")


def _counts_from(
    transitions: Sequence[Sequence[int]],
    alive: Sequence[bool],
    start: int,
    max_length: int,
) -> list[int]:
    weights = [0] * len(transitions)
    weights[start] = 1
    out = [1 if alive[start] else 0]
    for _ in range(max_length):
        nxt = [0] * len(transitions)
        for state, weight in enumerate(weights):
            if weight and alive[state]:
                for target in transitions[state]:
                    nxt[target] += weight
        weights = nxt
        out.append(sum(w for state, w in enumerate(weights) if alive[state]))
    return out


def count_avoiding(n: int, max_length: int) -> list[int]:
    """Count words of each length with no rotation of 1..n as a factor.

    These are exactly the singleton congruence classes, and exact big
    integers keep long prefixes of the sequence overflow-free.

    >>> count_avoiding(3, 4)
    [1, 3, 9, 24, 66]
    """
    _check_counting_args(n, max_length)
    auto = factor_automaton(n)
    alive = [not f for f in auto.forbidden]
    return _counts_from(auto.transitions, alive, 0, max_length)


def _prefix_step(n: int, state: int, letter: int) -> int:
    # tracker states: 0 fresh, 1..n-2 matched that many ascent letters,
    # n-1 free of both prefix restrictions, n dead
    free, dead = n - 1, n
    if state == free or state == dead:
        return state
    if state == 0:
        if letter == 1:
            return dead
        return 1 if letter == 2 else free
    if letter == state + 2:
        return dead if state + 1 == n - 1 else state + 1
    return free


def _tail_counts(n: int, max_length: int) -> list[int]:
    # product of factor avoidance with the two prefix restrictions: a
    # tail never starts with letter 1 nor with the full ascent block
    auto = factor_automaton(n)
    prefix_states = n + 1
    dead = n

    def index(f: int, p: int) -> int:
        return f * prefix_states + p

    transitions = []
    alive = []
    for f in range(auto.state_count):
        for p in range(prefix_states):
            row = tuple(
                index(auto.step(f, letter), _prefix_step(n, p, letter))
                for letter in range(1, n + 1)
            )
            transitions.append(row)
            alive.append(not auto.forbidden[f] and p != dead)
    return _counts_from(transitions, alive, index(0, 0), max_length)


def count_normal_forms(n: int, max_length: int) -> list[int]:
    """Count irreducible words of each length through their decomposition.

    Sums the tail counts over every admissible (ones, central, ascents)
    weight; an ascent power without the central letter forces an empty
    1-run.  Entry by entry this must equal the explorer's class count,
    each class holding exactly one irreducible word.

    >>> count_normal_forms(3, 3)
    [1, 3, 9, 25]
    """
    _check_counting_args(n, max_length)
    tails = _tail_counts(n, max_length)
    shapes = [0] * (max_length + 1)
    for central in (0, 1):
        base = n * central
        if base > max_length:
            break
        for ascents in range((max_length - base) // (n - 1) + 1):
            start = base + (n - 1) * ascents
            for ones in range(max_length - start + 1):
                if ascents >= 1 and central == 0 and ones != 0:
                    continue
                shapes[start + ones] += 1
    return [
        sum(shapes[d] * tails[length - d] for d in range(length + 1))
        for length in range(max_length + 1)
    ]


@dataclass(frozen=True)
class SeriesRow:
    length: int
    normal_forms: int
    avoiding: int
    explorer_classes: Optional[int]
    explorer_singletons: Optional[int]

    @property
    def consistent(self) -> bool:
        if self.explorer_classes is not None and self.explorer_classes != self.normal_forms:
            return False
        if self.explorer_singletons is not None and self.explorer_singletons != self.avoiding:
            return False
        return True


@dataclass(frozen=True)
class SeriesReport:
    n: int
    rows: tuple[SeriesRow, ...]

    @property
    def consistent(self) -> bool:
        return all(row.consistent for row in self.rows)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "consistent": self.consistent,
            "rows": [
                {
                    "length": row.length,
                    "normal_forms": row.normal_forms,
                    "avoiding": row.avoiding,
                    "explorer_classes": row.explorer_classes,
                    "explorer_singletons": row.explorer_singletons,
                    "consistent": row.consistent,
                }
                for row in self.rows
            ],
        }


def series_report(n: int, max_length: int, budget: int = DEFAULT_BUDGET) -> SeriesReport:
    """Tabulate both counters next to explorer counts, length by length.

    Explorer columns stay empty at lengths whose enumeration would blow
    the budget; the closed-form-free counters are always filled in.
    """
    _check_counting_args(n, max_length)
    normal = count_normal_forms(n, max_length)
    avoiding = count_avoiding(n, max_length)
    pres = Presentation(n, cyclic_set(n))
    rows = []
    for length in range(max_length + 1):
        try:
            table = build_table(pres, length, budget=budget)
            classes: Optional[int] = table.class_count
            singletons: Optional[int] = table.singleton_count()
        except BudgetExceededError:
            classes = None
            singletons = None
        rows.append(SeriesRow(length, normal[length], avoiding[length], classes, singletons))
    return SeriesReport(n, tuple(rows))


def series_to_csv(report: SeriesReport) -> str:
    lines = ["length,normal-forms,avoiding,explorer-classes,explorer-singletons"]
    for row in report.rows:
        lines.append(
            ",".join(
                [
                    str(row.length),
                    str(row.normal_forms),
                    str(row.avoiding),
                    "" if row.explorer_classes is None else str(row.explorer_classes),
                    "" if row.explorer_singletons is None else str(row.explorer_singletons),
                ]
            )
        )
    return "\n".join(lines) + "\n"
