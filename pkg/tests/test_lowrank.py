import math
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from calculus.shifting import WeightedPoint1N
from checkers.exceptions import DegreeSumError, PreconditionError, WeightSumError
from checkers.hodge import HodgeProblem1N, check_1n, check_unitary
from checkers.lowrank import (
    ChainProblem,
    HodgeProblem12,
    SplittingType,
    WeightedPoint12,
    biswas_check,
    biswas_records,
    check_11,
    check_111,
    check_111_search,
    check_12,
    check_chain,
    classify_points_12,
    shifted_splitting_12,
    valid_line_degrees,
)
from shared.schemas import RecordKind

F = Fraction
LABELS = ("0", "1", "inf")


def problem12(point_weights, degL, degV, labels=LABELS):
    points = tuple((label, WeightedPoint12(*map(F, w))) for label, w in zip(labels, point_weights))
    return HodgeProblem12(points, degL, degV)


TWO_SPECIAL = [("-1/2", "-1/4", "1/4"), ("-1/6", "-1/3", "1/3"), ("-1/6", "-1/2", "1/3")]
THREE_SPECIAL = [("-1/6", "-1/3", "1/6")] * 3


# ========
# (1,2)
# ========

def test_classify_points():
    classes = classify_points_12(problem12(TWO_SPECIAL, 1, 0))
    assert (classes.l, classes.m) == (3, 2)
    assert classes.special == {"1", "inf"}
    # alpha at or above beta2: no pole
    classes = classify_points_12(problem12([("1/3", "-1/3", "1/3")] + TWO_SPECIAL[1:], 1, 0))
    assert (classes.l, classes.m) == (2, 2)


def test_shifted_splitting():
    assert shifted_splitting_12(problem12(TWO_SPECIAL, 1, 0)) == (SplittingType(3, 2), 3)
    assert shifted_splitting_12(problem12(THREE_SPECIAL, 1, 0)) == (SplittingType(4, 1), 4)
    # L = O(-1), four special points: the special line reaches degree 3
    four = problem12(THREE_SPECIAL[:1] * 4, -1, -4, labels=("0", "1", "2", "inf"))
    assert classify_points_12(four).m == 4
    assert shifted_splitting_12(four) == (SplittingType(3, 1), 3)
    with pytest.raises(PreconditionError):
        shifted_splitting_12(problem12(TWO_SPECIAL, 2, 0))


def test_splitting_type():
    assert SplittingType.evenly(5) == SplittingType(3, 2)
    assert SplittingType.evenly(-1) == SplittingType(0, -1)
    assert SplittingType(3, 2).twist(-1) == SplittingType(2, 1)
    with pytest.raises(PreconditionError):
        SplittingType(1, 2)


def test_valid_line_degrees():
    split = SplittingType(3, 1)
    assert [a for a in range(-1, 5) if valid_line_degrees(split, a)] == [-1, 0, 1, 3]
    split = SplittingType(2, 2)
    assert [a for a in range(0, 4) if valid_line_degrees(split, a)] == [0, 1, 2]


def test_valid_line_degrees_balanced():
    for k in range(-5, 6):
        for a in range(-12, 13):
            assert valid_line_degrees(SplittingType(k, k), a) == (a <= k)


def _type_i(report):
    return {rec.subsets: rec for rec in report.ledger if rec.kind == RecordKind.type_i}


def test_two_special_points():
    report = check_12(problem12(TWO_SPECIAL, 1, 0))
    assert report.total == 2 + 8
    records = _type_i(report)
    for choice in [(2, 2, 1), (2, 1, 2), (1, 2, 2)]:
        rec = records[tuple((i,) for i in choice)]
        assert rec.delta == 0
        assert rec.rhs == 0
    assert records[((2,),) * 3].delta == -1
    assert records[((1,),) * 3].delta == 0
    assert records[((2,), (2,), (1,))].expression == "beta_2(0) + beta_2(1) + beta_1(inf)"

    theta = next(rec for rec in report.ledger if rec.kind == RecordKind.theta)
    assert theta.expression == (
        "(1 + alpha(0) + alpha(1) + alpha(inf) + beta_1(0) + beta_2(1) + beta_2(inf))/2"
    )
    assert theta.lhs == F(7, 24)
    assert not report.exists


def test_three_special_points():
    report = check_12(problem12(THREE_SPECIAL, 1, 0))
    records = _type_i(report)
    rec = records[((2,),) * 3]
    assert rec.delta == 0
    assert rec.expression == "beta_2(0) + beta_2(1) + beta_2(inf)"
    assert rec.lhs == F(1, 2)
    assert not rec.satisfied


def test_check_12_rejects():
    with pytest.raises(PreconditionError):
        check_12(problem12(TWO_SPECIAL, 2, 0))
    with pytest.raises(PreconditionError):
        check_12(problem12(TWO_SPECIAL[:2], 1, 0, labels=("0", "1")))
    with pytest.raises(PreconditionError):
        problem12([("0", "1/2", "1/4")] * 3, 1, 0)
    with pytest.raises(PreconditionError):
        problem12([("-1/2", "0", "1/2")] * 3, 1, 0)


@st.composite
def problems12(draw):
    s = draw(st.integers(3, 5))
    points = []
    for _ in range(s):
        alpha, b1, b2 = (F(draw(st.integers(-9, 9)), 20) for _ in range(3))
        points.append((alpha, min(b1, b2), max(b1, b2)))
    degV = draw(st.integers(-4, 4))
    sample = problem12(points, -100, degV, labels=[str(i) for i in range(s)])
    w = degV + 2 * (classify_points_12(sample).l - 2)
    degL = draw(st.integers(math.ceil(F(w, 2)) - 4, math.ceil(F(w, 2))))
    return problem12(points, degL, degV, labels=[str(i) for i in range(s)])


@given(problems12(), st.integers(-3, 3))
def test_twist_invariance(prob, t):
    before = check_12(prob)
    after = check_12(prob.twisted(t))
    assert before.exists == after.exists
    assert [rec.gap for rec in before.ledger] == [rec.gap for rec in after.ledger]
    assert [rec.symbols for rec in before.ledger] == [rec.symbols for rec in after.ledger]


def test_implies_general_enumeration():
    """With alpha smallest everywhere, a solvable (1,2) system passes every (1,n) record at n = 2."""
    rng = random.Random(5)
    for _ in range(200):
        s = rng.choice((3, 4))
        weights = [tuple(F(v, 100) for v in sorted(rng.sample(range(-45, 46), 3))) for _ in range(s)]
        labels = [str(i) for i in range(s)]
        degV = rng.randint(-2, 2)
        top = math.ceil(F(degV + 2 * (s - 2), 2))
        degL = rng.randint(top - 3, top)

        p12 = problem12(weights, degL, degV, labels=labels)
        p1n = HodgeProblem1N(
            tuple((label, WeightedPoint1N(a, (b1, b2))) for label, (a, b1, b2) in zip(labels, weights)),
            degL, degV,
        )
        r12, r1n = check_12(p12), check_1n(p1n)

        by_choice = _type_i(r12)
        for rec in r1n.ledger:
            if rec.kind != RecordKind.type_i:
                continue
            partner = by_choice[tuple((3 - i,) for (i,) in rec.subsets)]
            assert partner.lhs >= rec.lhs
        theta = next(rec for rec in r12.ledger if rec.kind == RecordKind.theta)
        containing = next(rec for rec in r1n.ledger if rec.kind == RecordKind.type_ii)
        assert theta.lhs == containing.lhs
        if r12.exists:
            assert r1n.exists


# ========
# (1,1)
# ========

@pytest.mark.parametrize("pairs, k, degrees", [
    ([("1/9", "2/9")] * 3, 0, (0, -1)),
    ([("6/9", "7/9"), ("1/9", "2/9"), ("5/9", "6/9")], 0, (-1, -2)),
    ([("13/15", "14/15"), ("10/15", "14/15"), ("10/15", "14/15")], 0, (-2, -3)),
    ([("8/9", "1/9"), ("6/9", "1/9"), ("5/9", "6/9")], 1, (-2, -1)),
    ([("5/6", "1/6"), ("1/6", "2/6"), ("1/6", "2/6")], 0, (-1, -1)),
    ([("5/6", "1/6"), ("4/6", "5/6"), ("4/6", "5/6")], 0, (-2, -2)),
])
def test_line_pair_solutions(pairs, k, degrees):
    report = check_11([(F(a), F(b)) for a, b in pairs])
    assert report.exists
    assert [(sol.k, sol.degrees) for sol in report.solutions] == [(k, degrees)]
    assert report.degrees == {"L": degrees[0], "L'": degrees[1]}
    assert report.ledger[0].satisfied


def test_line_pair_value():
    report = check_11([(F(1, 9), F(2, 9))] * 3)
    assert report.solutions[0].value == F(-1, 3)


@pytest.mark.parametrize("pairs", [
    [("2/9", "4/9")] * 3,
    [("0", "0")] * 3,
])
def test_line_pair_impossible(pairs):
    report = check_11([(F(a), F(b)) for a, b in pairs])
    assert not report.exists
    assert report.solutions == ()
    assert report.violated == 1


def test_line_pair_rejects():
    with pytest.raises(WeightSumError):
        check_11([(F(1, 9), F(2, 9))] * 2)
    with pytest.raises(PreconditionError):
        check_11([(F(-1, 2), F(1, 2)), (F(0), F(0)), (F(0), F(0))])


# ========
# Biswas
# ========

def test_biswas_records():
    records = biswas_records([(F(1, 4), F(-1, 4))] * 3)
    assert len(records) == 4
    assert sorted(rec.delta for rec in records) == [0, 0, 0, 1]
    assert biswas_check([(F(1, 4), F(-1, 4))] * 3)
    assert not biswas_check([(F(49, 100), F(-49, 100))] * 3)
    with pytest.raises(PreconditionError):
        biswas_records([(F(-1, 4), F(1, 4))] * 3)
    with pytest.raises(WeightSumError):
        biswas_records([(F(1, 4), F(0))] * 3)


def test_biswas_matches_unitary():
    rng = random.Random(3)
    for _ in range(1000):
        shifts = [F(rng.randint(-20, 20), 100) for _ in range(2)]
        shifts.append(-sum(shifts))
        halves = [F(rng.randint(0, 49), 100) for _ in range(3)]
        unitary = [(t - a, t + a) for t, a in zip(shifts, halves)]
        biswas = [(t + a, t - a) for t, a in zip(shifts, halves)]
        assert check_unitary(unitary, 2, strict=True).exists == biswas_check(biswas)


def test_biswas_excludes_line_pairs():
    """alpha' = -alpha never satisfies both criteria."""
    rng = random.Random(17)
    for _ in range(10_000):
        alphas = [F(rng.randint(-49, 49), 100) for _ in range(3)]
        line_pairs = check_11([(a, -a) for a in alphas])
        unitary = biswas_check([(abs(a), -abs(a)) for a in alphas])
        assert not (line_pairs.exists and unitary)


# ========
# chains
# ========

def test_chain_search_example():
    weights = [(F(-2, 9), F(0), F(2, 9))] * 3
    report = check_111_search(weights)
    assert [sol.degrees for sol in report.solutions] == [(1, 0, -1)]
    assert report.exists
    assert report.command == "check-111"
    assert report.degrees == {"d1": 1, "d2": 0, "d3": -1}


def test_chain_search_shows_extreme_triple():
    weights = [(F(-1, 3), F(0), F(1, 3))] * 3
    # sum(alpha_2 + alpha_3) = 1 and -sum(alpha_3) = -1 pin the only candidate, which is tight
    assert check_111_search(weights).solutions
    report = check_111_search(weights, strict=True)
    assert report.solutions == ()
    assert report.degrees == {"d1": 1, "d2": 0, "d3": -1}
    assert not report.exists


def test_chain_records():
    prob = ChainProblem((1, 0, -1), ((F(-2, 9), F(0), F(2, 9)),) * 3)
    report = check_chain(prob, strict=True)
    assert report.exists
    kinds = [rec.kind for rec in report.ledger]
    assert kinds == [RecordKind.degree, RecordKind.degree, RecordKind.tail, RecordKind.tail]
    assert all(not rec.strict for rec in report.ledger if rec.kind == RecordKind.degree)
    assert all(rec.strict for rec in report.ledger if rec.kind == RecordKind.tail)
    assert prob.poles(1) == 3 and prob.poles(2) == 3


def test_chain_rejects():
    with pytest.raises(DegreeSumError):
        check_chain(ChainProblem((1, 0, 0), ((F(0), F(0), F(0)),) * 3))
    with pytest.raises(WeightSumError):
        check_chain(ChainProblem((0, 0, 0), ((F(0), F(0), F(1, 3)),) * 3))
    with pytest.raises(PreconditionError):
        ChainProblem((0, 0), ((F(-1, 2), F(1, 2)),) * 3)
    with pytest.raises(PreconditionError):
        check_111([(F(0), F(0))] * 3, (0, 0, 0))


def _zero_sum_pairs(rng):
    alphas = [F(rng.randint(-24, 24), 100) for _ in range(3)]
    t = [F(rng.randint(-24, 24), 100) for _ in range(2)]
    t.append(-sum(t))
    return [(a, -a + ti) for a, ti in zip(alphas, t)]


def test_two_step_chain_matches_line_pairs():
    rng = random.Random(23)
    for _ in range(1000):
        pairs = _zero_sum_pairs(rng)
        feasible = {sol.k for sol in check_11(pairs).solutions}
        for k in range(-3, 4):
            report = check_chain(ChainProblem((-k, k), tuple(pairs)), strict=True)
            assert report.exists == (k in feasible), (pairs, k)


def _displayed_chain(weights, degrees):
    d1, d2, d3 = degrees
    a23 = sum(p[1] + p[2] for p in weights)
    a3 = sum(p[2] for p in weights)
    l1 = sum(1 for p in weights if p[1] > p[0])
    l2 = sum(1 for p in weights if p[2] > p[1])
    return a23 <= d1 <= d2 - 2 + l1 <= d3 - 4 + l1 + l2 <= -a3 - 4 + l1 + l2


def test_three_step_chain_matches_display():
    rng = random.Random(29)
    for _ in range(1000):
        weights = []
        for _ in range(3):
            values = [F(rng.randint(-30, 30), 100) for _ in range(2)]
            weights.append((values[0], values[1]))
        total = sum(a + b for a, b in weights)
        # close the system with a third component at the last point
        weights = [(a, b, F(0)) for a, b in weights]
        last = weights[-1]
        weights[-1] = (last[0], last[1], -total)
        if max(weights[-1]) - min(weights[-1]) >= 1:
            continue
        d1, d3 = rng.randint(-3, 3), rng.randint(-3, 3)
        degrees = (d1, -d1 - d3, d3)
        assert check_111(weights, degrees).exists == _displayed_chain(weights, degrees), (weights, degrees)
        assert check_111(weights, degrees).exists == check_chain(ChainProblem(degrees, tuple(weights))).exists
