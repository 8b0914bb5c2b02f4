"""Dominance primitives, the comparison counter, and front-set validation."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from ndfronts import (
    Counter,
    DimensionMismatchError,
    DomRelation,
    FrontSet,
    Solution,
    check_dom,
    dom_nature,
    full_sort,
    validate,
)
from tests.conftest import TWELVE_LEVELS, s

vectors = st.lists(
    st.floats(min_value=-50, max_value=50, allow_nan=False), min_size=2, max_size=5
)
pair_vectors = st.integers(min_value=2, max_value=5).flatmap(
    lambda m: st.tuples(
        st.lists(st.floats(-50, 50, allow_nan=False), min_size=m, max_size=m),
        st.lists(st.floats(-50, 50, allow_nan=False), min_size=m, max_size=m),
    )
)


def test_dom_nature_strict_dominance():
    c = Counter()
    assert dom_nature(s("a", 1, 1), s("b", 2, 2), c) == 1
    assert dom_nature(s("b", 2, 2), s("a", 1, 1), c) == -1


def test_dom_nature_tradeoff_is_non_dominated():
    assert dom_nature(s("a", 1, 3), s("b", 2, 1), Counter()) == 0


def test_dom_nature_identical_vectors_cannot_dominate():
    assert dom_nature(s("a", 5, 5), s("b", 5, 5), Counter()) == 0


def test_dom_nature_weak_improvement_dominates():
    # equal in one coordinate, strictly better in the other
    assert dom_nature(s("a", 1, 2), s("b", 1, 3), Counter()) == 1


def test_check_dom_identical():
    assert check_dom(s("a", 1, 2), s("b", 1, 2), Counter()) is DomRelation.IDENTICAL


def test_check_dom_dominates():
    assert check_dom(s("a", 1, 2), s("b", 3, 2), Counter()) is DomRelation.DOMINATES


def test_check_dom_non_dominated():
    assert check_dom(s("a", 2, 1), s("b", 1, 2), Counter()) is DomRelation.NON_DOMINATED


def test_dimension_mismatch_raises():
    with pytest.raises(DimensionMismatchError):
        dom_nature(s("a", 1, 2), Solution("b", (1, 2, 3)), Counter())
    with pytest.raises(DimensionMismatchError):
        check_dom(s("a", 1, 2), Solution("b", (1, 2, 3)), Counter())


def test_solution_rejects_bad_vectors():
    with pytest.raises(ValueError):
        Solution("a", (1.0,))
    with pytest.raises(ValueError):
        Solution("a", (1.0, math.inf))
    with pytest.raises(ValueError):
        Solution("a", (1.0, math.nan))


@given(pair_vectors)
def test_antisymmetry(pair):
    va, vb = pair
    a, b = Solution("a", tuple(va)), Solution("b", tuple(vb))
    c = Counter()
    assert dom_nature(a, b, c) == -dom_nature(b, a, c)


@given(pair_vectors)
def test_check_dom_consistent_with_dom_nature(pair):
    va, vb = pair
    a, b = Solution("a", tuple(va)), Solution("b", tuple(vb))
    c = Counter()
    nat = dom_nature(a, b, c)
    rel = check_dom(a, b, c)
    if nat == 1:
        assert rel is DomRelation.DOMINATES
    elif nat == -1:
        assert rel is DomRelation.DOMINATED_BY
    else:
        assert rel in (DomRelation.NON_DOMINATED, DomRelation.IDENTICAL)
    if rel is DomRelation.IDENTICAL:
        assert tuple(va) == tuple(vb)


@given(st.integers(min_value=0, max_value=200))
def test_counter_exactness(t):
    c = Counter()
    a, b = s("a", 1, 2), s("b", 2, 1)
    for _ in range(t):
        dom_nature(a, b, c)
    assert c.pair_compares == t
    c.reset()
    assert c.pair_compares == 0


def test_counter_counts_pairs_not_objectives():
    c = Counter()
    dom_nature(Solution("a", (1,) * 5), Solution("b", (2,) * 5), c)
    assert c.pair_compares == 1


def test_validate_accepts_five_level_layout(twelve_in_five_levels):
    fs = full_sort(twelve_in_five_levels)
    assert fs.level_ids() == TWELVE_LEVELS
    assert validate(fs) == []


def test_validate_flags_intra_front_dominance():
    fs = FrontSet(2, [[s("a", 1, 1), s("b", 2, 2)]])
    problems = validate(fs)
    assert len(problems) == 1
    assert "dominates" in problems[0]


def test_validate_flags_undominated_lower_front():
    fs = FrontSet(2, [[s("a", 5, 5)], [s("b", 1, 1)]])
    problems = validate(fs)
    assert len(problems) == 1
    assert "not dominated" in problems[0]


def test_validate_flags_empty_front_and_duplicate_id():
    fs = FrontSet(2, [[s("a", 1, 1)], [], [s("a", 2, 2)]])
    problems = validate(fs)
    assert any("empty" in p for p in problems)
    assert any("duplicate" in p for p in problems)


def test_validate_empty_front_set_is_fine():
    assert validate(FrontSet(3)) == []


def test_validate_reports_objective_count_drift():
    fs = FrontSet(3, [[Solution("a", (1, 2, 3))]])
    fs.fronts[0].append(Solution("b", (1, 2)))
    problems = validate(fs)
    assert len(problems) == 1
    assert "M=2" in problems[0]


def test_front_set_copy_is_independent(twelve_in_five_levels):
    fs = full_sort(twelve_in_five_levels)
    clone = fs.copy()
    clone.fronts[0].pop()
    assert len(fs.fronts[0]) == 1
    assert len(fs) == 12


def test_front_set_contains_and_len(twelve_in_five_levels):
    fs = full_sort(twelve_in_five_levels)
    assert "p7" in fs
    assert "nope" not in fs
    assert len(fs) == 12
    assert fs.k == 5


def test_front_set_rejects_single_objective():
    with pytest.raises(ValueError):
        FrontSet(1)
