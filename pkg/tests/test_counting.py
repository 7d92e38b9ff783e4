import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permrel.congruence import build_table, growth
from permrel.counting import (
    count_avoiding,
    count_normal_forms,
    factor_automaton,
    series_report,
    series_to_csv,
)
from permrel.presentation import presentation_from_spec
from permrel.rewriting import is_irreducible
from permrel.words import all_rotations, all_words


def has_factor(word, patterns):
    return any(
        word[i : i + len(p)] == p
        for p in patterns
        for i in range(len(word) - len(p) + 1)
    )


def test_avoiding_frozen_n3():
    assert count_avoiding(3, 7) == [1, 3, 9, 24, 66, 180, 492, 1344]


def test_avoiding_frozen_n4():
    assert count_avoiding(4, 6) == [1, 4, 16, 64, 252, 996, 3936]


def test_normal_forms_frozen_n3():
    assert count_normal_forms(3, 7) == [1, 3, 9, 25, 69, 189, 517, 1413]


def test_normal_forms_frozen_n4():
    assert count_normal_forms(4, 6) == [1, 4, 16, 64, 253, 1000, 3952]


def test_short_lengths_are_free():
    # forbidden factors all have length n
    for n in (3, 4, 5):
        counts = count_avoiding(n, n - 1)
        assert counts == [n**length for length in range(n)]


@pytest.mark.parametrize("n,max_len", [(3, 6), (4, 4)])
def test_avoiding_matches_direct_enumeration(n, max_len):
    rotations = all_rotations(n)
    counts = count_avoiding(n, max_len)
    for length in range(max_len + 1):
        direct = sum(
            1 for w in itertools.product(range(1, n + 1), repeat=length)
            if not has_factor(w, rotations)
        )
        assert counts[length] == direct


@pytest.mark.parametrize("n,max_len", [(3, 6), (4, 5), (5, 4)])
def test_normal_forms_match_irreducible_enumeration(n, max_len):
    counts = count_normal_forms(n, max_len)
    for length in range(max_len + 1):
        direct = sum(1 for w in all_words(n, length) if is_irreducible(w, n))
        assert counts[length] == direct


@pytest.mark.parametrize("n,max_len", [(3, 6), (4, 5)])
def test_normal_forms_match_explorer_growth(n, max_len):
    pres = presentation_from_spec(n, "cyclic")
    assert count_normal_forms(n, max_len) == growth(pres, max_len)


def test_avoiding_matches_singleton_classes():
    pres = presentation_from_spec(3, "cyclic")
    counts = count_avoiding(3, 6)
    for length in range(7):
        table = build_table(pres, length)
        assert counts[length] == table.singleton_count()


def test_counting_validates_arguments():
    with pytest.raises(ValueError):
        count_avoiding(2, 5)
    with pytest.raises(ValueError):
        count_normal_forms(3, -1)
    with pytest.raises(ValueError):
        factor_automaton(1)
    with pytest.raises(ValueError):
        factor_automaton(3, [()])


def test_automaton_rejects_each_pattern():
    for n in (3, 4):
        auto = factor_automaton(n)
        for p in all_rotations(n):
            assert not auto.scan(p)
            assert auto.scan(p[:-1])


def test_forbidden_states_absorb():
    auto = factor_automaton(3)
    for state, bad in enumerate(auto.forbidden):
        if bad:
            assert auto.transitions[state] == (state,) * 3


pattern = st.lists(st.integers(1, 3), min_size=1, max_size=3).map(tuple)


@settings(max_examples=150)
@given(
    patterns=st.lists(pattern, min_size=1, max_size=3),
    word=st.lists(st.integers(1, 3), max_size=8).map(tuple),
)
def test_automaton_agrees_with_direct_scan(patterns, word):
    auto = factor_automaton(3, patterns)
    assert auto.scan(word) == (not has_factor(word, patterns))


def characteristic_polynomial(matrix):
    # Faddeev-LeVerrier; returns coefficients c_0..c_m with c_m = 1
    m = len(matrix)
    coeffs = [Fraction(0)] * m + [Fraction(1)]
    work = [[Fraction(0)] * m for _ in range(m)]
    for k in range(1, m + 1):
        for i in range(m):
            work[i][i] += coeffs[m - k + 1]
        work = [
            [sum(Fraction(matrix[i][t]) * work[t][j] for t in range(m)) for j in range(m)]
            for i in range(m)
        ]
        coeffs[m - k] = -sum(work[i][i] for i in range(m)) / k
    return coeffs


def alive_adjacency(auto):
    alive = [s for s in range(auto.state_count) if not auto.forbidden[s]]
    pos = {s: i for i, s in enumerate(alive)}
    matrix = [[0] * len(alive) for _ in alive]
    for s in alive:
        for target in auto.transitions[s]:
            if target in pos:
                matrix[pos[s]][pos[target]] += 1
    return matrix


def test_avoiding_satisfies_transfer_matrix_recurrence():
    auto = factor_automaton(3)
    matrix = alive_adjacency(auto)
    coeffs = characteristic_polynomial(matrix)
    order = len(matrix)
    seq = count_avoiding(3, 2 * order + 8)
    for k in range(len(seq) - order):
        assert sum(coeffs[i] * seq[k + i] for i in range(order + 1)) == 0


def test_series_report_consistent():
    report = series_report(3, 6)
    assert report.consistent
    lengths = [row.length for row in report.rows]
    assert lengths == list(range(7))
    assert all(row.explorer_classes == row.normal_forms for row in report.rows)
    assert all(row.explorer_singletons == row.avoiding for row in report.rows)


def test_series_report_single_row():
    report = series_report(3, 0)
    (row,) = report.rows
    assert (row.normal_forms, row.avoiding, row.explorer_classes) == (1, 1, 1)
    assert report.consistent


def test_series_report_respects_budget():
    report = series_report(3, 7, budget=100)
    assert report.consistent
    filled = [row for row in report.rows if row.explorer_classes is not None]
    empty = [row for row in report.rows if row.explorer_classes is None]
    assert [row.length for row in filled] == [0, 1, 2, 3, 4]
    assert [row.length for row in empty] == [5, 6, 7]
    assert all(row.explorer_singletons is None for row in empty)


def test_series_report_serializes():
    report = series_report(4, 4)
    data = json.loads(json.dumps(report.to_dict()))
    assert data["consistent"] is True
    assert data["rows"][4]["normal_forms"] == 253


def test_series_csv_frozen():
    text = series_to_csv(series_report(3, 3))
    lines = text.splitlines()
    assert lines[0] == "length,normal-forms,avoiding,explorer-classes,explorer-singletons"
    assert lines[4] == "3,25,24,25,24"
    assert text.endswith("\n")


def test_series_csv_blank_cells_over_budget():
    text = series_to_csv(series_report(3, 5, budget=10))
    assert "5,189,180,," in text.splitlines()
