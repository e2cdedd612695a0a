import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from calculus.combinat import SchubertSubset, all_subsets, solve_degree, subset_to_partition
from calculus.exceptions import RingMismatchError, WeightError
from calculus.quantum import gw_number
from calculus.shifting import (
    ShiftedCondition,
    WeightedPoint1N,
    generalized_gw,
    normalize_weights_1n,
    shift_condition_down,
    shift_condition_up,
)

F = Fraction


def test_shift_examples():
    down = shift_condition_down(ShiftedCondition(SchubertSubset((1, 3), 3), 5))
    assert down == ShiftedCondition(SchubertSubset((2, 3), 3), 4)
    down = shift_condition_down(ShiftedCondition(SchubertSubset((2, 3), 3), 5))
    assert down == ShiftedCondition(SchubertSubset((1, 2), 3), 5)
    up = shift_condition_up(ShiftedCondition(SchubertSubset((2, 3), 3), 4))
    assert up == ShiftedCondition(SchubertSubset((1, 3), 3), 5)


@pytest.mark.parametrize("n", range(1, 6))
def test_shifts_are_inverse(n):
    for r in range(0, n + 1):
        for subset in all_subsets(r, n):
            for d in (-1, 0, 2):
                c = ShiftedCondition(subset, d)
                assert shift_condition_up(shift_condition_down(c)) == c
                assert shift_condition_down(shift_condition_up(c)) == c


@pytest.mark.parametrize("n", range(2, 6))
def test_n_shifts_are_a_full_cycle(n):
    for r in range(1, n):
        for subset in all_subsets(r, n):
            c = ShiftedCondition(subset, 0)
            for _ in range(n):
                c = shift_condition_down(c)
            assert c == ShiftedCondition(subset, -r)


def test_generalized_gw_example():
    one, two = SchubertSubset((1,), 2), SchubertSubset((2,), 2)
    assert generalized_gw([two, one, one], 0, -1, 1, 2) == 1
    assert generalized_gw([one, one, two], 1, 1, 1, 2) == 1
    with pytest.raises(RingMismatchError):
        generalized_gw([one, one, two], 1, 1, 1, 3)


@pytest.mark.parametrize("r, n", [(1, 2), (1, 3), (2, 4), (1, 4), (3, 4)])
def test_base_case_is_ordinary_gw(r, n):
    for choice in itertools.product(all_subsets(r, n), repeat=3):
        for d in range(0, 3):
            classes = [subset_to_partition(s) for s in choice]
            assert generalized_gw(choice, d, 0, r, n) == gw_number(classes, d, r, n)


@pytest.mark.slow
@pytest.mark.parametrize("r, n", [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)])
def test_independent_of_shifted_point(r, n):
    for triple in itertools.combinations_with_replacement(all_subsets(r, n), 3):
        for D in range(-3, 4):
            delta = solve_degree(triple, r, n, D)
            for d in {0, 1, delta if delta is not None else 0}:
                values = {generalized_gw(p, d, D, r, n) for p in itertools.permutations(triple)}
                assert len(values) == 1, (triple, d, D)
                # (d, D) and (d - r, D - n) are the same invariant
                assert generalized_gw(triple, d, D, r, n) == generalized_gw(triple, d - r, D - n, r, n)


def test_generalized_gw_known_values():
    # Gr(2,4), D = 1, computed three ways by shifting at each point
    triple = [SchubertSubset((1, 2), 4), SchubertSubset((1, 4), 4), SchubertSubset((3, 4), 4)]
    assert solve_degree(triple, 2, 4, 1) == 1
    for p in itertools.permutations(triple):
        assert generalized_gw(p, 1, 1, 2, 4) == 1


def test_single_condition():
    # <s_I>_{d,D} pads with the fundamental class
    top = SchubertSubset((1, 2), 4)
    assert generalized_gw([top], 0, 0, 2, 4) == 1
    assert generalized_gw([SchubertSubset((3, 4), 4)], 0, 0, 2, 4) == 0


# weights

def test_weighted_point_rejects():
    with pytest.raises(WeightError):
        WeightedPoint1N(F(0), (F(1, 2), F(1, 4)))
    with pytest.raises(WeightError):
        WeightedPoint1N(F(1, 4), (F(1, 4), F(1, 2)))
    with pytest.raises(WeightError):
        WeightedPoint1N(F(-1, 2), (F(0), F(1, 2)))
    with pytest.raises(WeightError):
        WeightedPoint1N(F(0), ())


def test_normalize_example():
    point = WeightedPoint1N(F(9, 10), (F(1, 10), F(1, 2)))
    (shifted,), degL, degV, log = normalize_weights_1n([point], 0, 0)
    assert shifted == WeightedPoint1N(F(-1, 10), (F(1, 10), F(1, 2)))
    assert (degL, degV) == (1, 0)
    assert [(s.component, s.before, s.after) for s in log] == [("L", F(9, 10), F(-1, 10))]


def test_normalize_shifts_v():
    # alpha between the betas: the top beta moves below it
    point = WeightedPoint1N(F(1, 3), (F(0), F(1, 2)))
    (shifted,), degL, degV, log = normalize_weights_1n([point], 2, 0)
    assert shifted.alpha == F(-2, 3)
    assert shifted.betas == (F(-1, 2), F(0))
    assert (degL, degV) == (3, 1)
    assert [s.component for s in log] == ["V", "L"]
    assert shifted.is_normalized


def test_normalize_leaves_normalized_points_alone():
    point = WeightedPoint1N(F(-1, 3), (F(0), F(1, 2)))
    shifted, degL, degV, log = normalize_weights_1n([point], 1, -1)
    assert shifted == [point]
    assert (degL, degV, log) == (1, -1, [])


@st.composite
def weighted_points(draw, n):
    values = draw(st.lists(st.integers(-49, 49), min_size=n + 1, max_size=n + 1, unique=True))
    alpha, *betas = [F(v, 100) for v in values]
    return WeightedPoint1N(alpha, tuple(sorted(betas)))


@given(st.data(), st.integers(1, 4), st.integers(1, 4), st.integers(-5, 5), st.integers(-5, 5))
def test_normalize_preserves_parabolic_degree(data, n, s, degL, degV):
    points = data.draw(st.lists(weighted_points(n), min_size=s, max_size=s))
    shifted, degL2, degV2, log = normalize_weights_1n(points, degL, degV)
    before = degL + degV + sum(sum(p.weights) for p in points)
    after = degL2 + degV2 + sum(sum(p.weights) for p in shifted)
    assert before == after
    assert all(p.is_normalized for p in shifted)
    assert all(max(p.weights) - min(p.weights) < 1 for p in shifted)
