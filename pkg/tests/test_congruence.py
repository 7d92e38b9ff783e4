import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracle_closure import classes_at_length
from permrel.congruence import (
    UnionFind,
    build_table,
    check_centrality,
    check_sym_identity,
    growth,
    oracle_equal,
    rho_class_count,
    rho_related,
    stabilizer_reduction,
    table_to_csv,
)
from permrel.errors import (
    BudgetExceededError,
    CentralityError,
    LengthMismatchError,
    UnsupportedGroupError,
)
from permrel.perms import cyclic_set, permutation_set, symmetric_set
from permrel.presentation import Presentation, presentation_from_spec
from permrel.rewriting import is_irreducible, normal_form
from permrel.words import all_words, multidegree


def test_union_find_basics():
    uf = UnionFind(5)
    uf.union(0, 1)
    uf.union(3, 4)
    assert uf.find(0) == uf.find(1)
    assert uf.find(2) == 2
    assert uf.find(3) == uf.find(4) != uf.find(0)


def test_class_counts_frozen():
    assert build_table(presentation_from_spec(3, "trivial"), 3).class_count == 27
    assert build_table(presentation_from_spec(3, "cyclic"), 3).class_count == 25
    assert build_table(presentation_from_spec(3, "sym"), 3).class_count == 22


@pytest.mark.parametrize("h_spec", ["trivial", "cyclic", "sym", "(1 2)"])
def test_classes_match_bfs_oracle(h_spec):
    pres = presentation_from_spec(3, h_spec)
    for L in range(6):
        table = build_table(pres, L)
        expected = classes_at_length(3, pres.relations(), L)
        assert table.class_count == len(expected)
        for cls in expected:
            assert len({table.root_of(w) for w in cls}) == 1
            assert table.representative_of(min(cls)) == min(cls)


def test_non_subgroup_member_set():
    # a bare member set is a legal presentation too
    pres = Presentation(3, permutation_set(3, [(2, 3, 1)]))
    assert build_table(pres, 3).class_count == 26


def test_oracle_equal_examples():
    t = build_table(presentation_from_spec(3, "cyclic"), 3)
    assert oracle_equal(t, (2, 3, 1), (3, 1, 2))
    assert not oracle_equal(t, (1, 2, 3), (1, 3, 2))
    assert oracle_equal(t, (2, 2, 2), (2, 2, 2))


def test_oracle_equal_length_mismatch():
    t = build_table(presentation_from_spec(3, "cyclic"), 3)
    with pytest.raises(LengthMismatchError):
        oracle_equal(t, (1, 2), (1, 2, 3))


def test_growth_sequences():
    # oracle: BFS closure counts
    assert growth(presentation_from_spec(3, "cyclic"), 5) == [1, 3, 9, 25, 69, 189]
    assert growth(presentation_from_spec(3, "trivial"), 4) == [1, 3, 9, 27, 81]
    assert growth(presentation_from_spec(2, "sym"), 5) == [1, 2, 3, 4, 5, 6]


def test_growth_shrinks_as_h_grows():
    cyc = growth(presentation_from_spec(4, "cyclic"), 4)
    sym = growth(presentation_from_spec(4, "sym"), 4)
    assert all(s <= c for s, c in zip(sym, cyc))


def test_budget_refusal():
    pres = presentation_from_spec(3, "cyclic")
    with pytest.raises(BudgetExceededError) as exc:
        build_table(pres, 10, budget=1000)
    assert exc.value.required == 3**10
    assert exc.value.budget == 1000
    assert "59049" in str(exc.value)


def test_representatives_are_normal_forms_in_cyclic_case():
    pres = presentation_from_spec(3, "cyclic")
    for L in range(6):
        table = build_table(pres, L)
        reps = set(table.representatives.values())
        nfs = {normal_form(w, 3) for w in all_words(3, L)}
        assert reps == nfs
        assert all(is_irreducible(r, 3) for r in reps)


def test_multidegree_constant_on_classes():
    table = build_table(presentation_from_spec(4, "sym"), 5)
    for w, rep in table.rows():
        assert multidegree(w, 4) == multidegree(rep, 4)


def test_csv_export():
    table = build_table(presentation_from_spec(3, "cyclic"), 3)
    text = table_to_csv(table)
    lines = text.splitlines()
    assert lines[0] == "word,class-representative"
    assert len(lines) == 28
    assert "2 3 1,1 2 3" in lines
    assert text.endswith("\n")


def test_csv_for_empty_word():
    table = build_table(presentation_from_spec(3, "cyclic"), 0)
    assert table_to_csv(table) == "word,class-representative\nε,ε\n"


# --- the symmetric-case identity ---------------------------------------


def test_sym_identity_all_pairs_n3():
    for i in range(1, 4):
        for j in range(i + 1, 4):
            assert check_sym_identity(3, i, j)


def test_sym_identity_fails_in_cancellative_case():
    assert not check_sym_identity(3, 1, 2, h=cyclic_set(3))


def test_sym_identity_validates_pair():
    with pytest.raises(ValueError):
        check_sym_identity(3, 2, 2)
    with pytest.raises(ValueError):
        check_sym_identity(3, 2, 1)


# --- centrality and the cancellative-quotient semidecision -------------


def test_centrality_holds_for_cyclic_and_sym():
    check_centrality(presentation_from_spec(3, "cyclic"))
    check_centrality(presentation_from_spec(3, "sym"))


def test_centrality_fails_without_the_cycle():
    pres = presentation_from_spec(3, "(1 2)")
    with pytest.raises(CentralityError):
        check_centrality(pres)


def test_rho_related_trivially_true():
    pres = presentation_from_spec(3, "sym")
    assert rho_related(pres, (2, 1), (2, 1)) is True


def test_rho_related_sym_commutes_at_power_one():
    pres = presentation_from_spec(3, "sym")
    assert rho_related(pres, (1, 2), (2, 1), max_power=1) is True


def test_rho_related_unknown_when_multidegree_differs():
    pres = presentation_from_spec(3, "sym")
    assert rho_related(pres, (1,), (2,), max_power=2) is None


def test_rho_related_unknown_in_cancellative_case():
    # the cyclic monoid is cancellative, so distinct elements never merge
    pres = presentation_from_spec(3, "cyclic")
    assert rho_related(pres, (1, 2), (2, 1), max_power=2) is None


def test_rho_related_length_mismatch():
    pres = presentation_from_spec(3, "sym")
    with pytest.raises(LengthMismatchError):
        rho_related(pres, (1,), (1, 2))


def test_rho_class_count_reaches_multidegree_count():
    pres = presentation_from_spec(3, "sym")
    assert rho_class_count(pres, 2, 0) == 9
    # one central factor merges everything of equal multidegree
    assert rho_class_count(pres, 2, 1) == 6
    assert rho_class_count(pres, 3, 1) == 10


def test_rho_class_count_non_increasing_in_power():
    pres = presentation_from_spec(3, "sym")
    counts = [rho_class_count(pres, 3, p) for p in range(3)]
    assert counts == sorted(counts, reverse=True)


# --- stabilizer reduction ----------------------------------------------


def test_reduction_of_cyclic_is_free():
    red = stabilizer_reduction(cyclic_set(3))
    assert red.induced_relations == ()
    assert red.is_free
    assert red.h1.members == {(1, 2)}


def test_reduction_of_sym3():
    red = stabilizer_reduction(symmetric_set(3))
    assert red.h1.members == {(1, 2), (2, 1)}
    assert red.induced_relations == (((1, 2), (2, 1)),)


def test_reduction_of_sym4():
    red = stabilizer_reduction(symmetric_set(4))
    assert len(red.h1) == 6
    assert len(red.induced_relations) == 5
    assert red.h1.is_subgroup


def test_reduction_needs_the_cycle():
    with pytest.raises(UnsupportedGroupError):
        stabilizer_reduction(permutation_set(3, [(1, 2, 3), (2, 1, 3)]))


def test_induced_relations_match_reduced_presentation():
    for n in (3, 4, 5):
        red = stabilizer_reduction(symmetric_set(n))
        assert list(red.induced_relations) == red.reduced_presentation().relations()


def test_orbit_stabilizer_count():
    for n in (3, 4):
        red = stabilizer_reduction(symmetric_set(n))
        assert len(red.h1) * n == len(symmetric_set(n))


@settings(max_examples=20, deadline=None)
@given(st.permutations([1, 2, 3, 4]).map(tuple))
def test_reduction_of_generated_group(extra):
    from permrel.perms import close_under_group, full_cycle

    h = close_under_group([full_cycle(4), extra], 4)
    red = stabilizer_reduction(h)
    assert len(red.h1) * 4 == len(h)
    assert len(red.induced_relations) == len(red.h1) - 1
