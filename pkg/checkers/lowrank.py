"""
Low-rank systems of Hodge bundles: type (1,2) through shifted splitting types,
type (1,1) by solving for the admissible degree split, the rank-2 unitary (Biswas) test,
and chains of line bundles (1,1,...,1).
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from calculus.combinat import evenly_split
from shared.logger import get_logger
from shared.schemas import DegreeSolution, ExistenceReport, InequalityRecord, RecordKind
from .exceptions import DegreeSumError, PreconditionError, WeightSumError

logger = get_logger(__name__)


def _window_ok(weights: Sequence[Fraction]) -> bool:
    return max(weights) - min(weights) < 1


def _labels(labels: Sequence[str] | None, count: int) -> list[str]:
    labels = list(labels) if labels is not None else [str(i) for i in range(count)]
    if len(labels) != count or len(set(labels)) != count:
        raise PreconditionError(f"need {count} distinct point labels, got {labels}")
    return labels


# ========
# (1,2)
# ========

@dataclass(frozen=True)
class WeightedPoint12:
    alpha: Fraction
    beta1: Fraction
    beta2: Fraction

    def __post_init__(self) -> None:
        for name in ("alpha", "beta1", "beta2"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.beta1 > self.beta2:
            raise PreconditionError(f"beta1 {self.beta1} above beta2 {self.beta2}")
        if not _window_ok((self.alpha, self.beta1, self.beta2)):
            raise PreconditionError("weights at a point must lie in a window shorter than 1")

    @property
    def is_pole(self) -> bool:
        return self.alpha < self.beta2

    @property
    def is_special(self) -> bool:
        return self.beta1 <= self.alpha < self.beta2

    def beta(self, i: int) -> Fraction:
        return self.beta1 if i == 1 else self.beta2


@dataclass(frozen=True)
class HodgeProblem12:
    points: tuple[tuple[str, WeightedPoint12], ...]
    degL: int
    degV: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        _labels([label for label, _ in self.points], len(self.points))

    @property
    def s(self) -> int:
        return len(self.points)

    @property
    def pardeg(self) -> Fraction:
        return self.degL + self.degV + sum(
            (p.alpha + p.beta1 + p.beta2 for _, p in self.points), Fraction(0)
        )

    def twisted(self, t: int) -> HodgeProblem12:
        """E -> E(t): every component degree moves by t per rank."""
        return HodgeProblem12(self.points, self.degL + t, self.degV + 2 * t)


@dataclass(frozen=True, order=True)
class SplittingType:
    hi: int
    lo: int

    def __post_init__(self) -> None:
        if self.hi < self.lo:
            raise PreconditionError(f"splitting ({self.hi},{self.lo}) not ordered")

    @classmethod
    def evenly(cls, degree: int) -> SplittingType:
        return cls(*evenly_split(degree, 2))

    def twist(self, t: int) -> SplittingType:
        return SplittingType(self.hi + t, self.lo + t)


class PointClasses(NamedTuple):
    l: int
    m: int
    special: frozenset[str]
    poles: frozenset[str]


def classify_points_12(prob: HodgeProblem12) -> PointClasses:
    """Poles of theta (alpha < beta2) and the special ones among them (beta1 <= alpha < beta2)."""
    poles = frozenset(label for label, p in prob.points if p.is_pole)
    special = frozenset(label for label, p in prob.points if p.is_special)
    return PointClasses(len(poles), len(special), special, poles)


def shifted_splitting_12(prob: HodgeProblem12) -> tuple[SplittingType, int]:
    """
    Splitting type of W = V(l-2) after one shift at every point, and the degree of the shifted L.
    Example: degL=1, degV=0, three points of which two special -> ((3, 2), 3)
    """
    classes = classify_points_12(prob)
    w = prob.degV + 2 * (classes.l - 2)
    a = prob.degL
    if a > math.ceil(w / 2):
        raise PreconditionError(
            f"deg L = {a} exceeds the top summand {math.ceil(w / 2)} of the generic W of degree {w}"
        )
    shifted_l = a + classes.m
    total = w + prob.s
    hi = max(shifted_l, math.ceil(total / 2))
    return SplittingType(hi, total - hi), shifted_l


def valid_line_degrees(split: SplittingType, a: int) -> bool:
    """O(a) is a subbundle of O(hi) + O(lo) iff a <= lo or a == hi."""
    return a <= split.lo or a == split.hi


def _best_delta(v: SplittingType, v_shifted: SplittingType, N: int) -> int:
    candidates = {min(v.lo, v_shifted.lo - N), v.hi, v_shifted.hi - N}
    return max(d for d in candidates if valid_line_degrees(v, d) and valid_line_degrees(v_shifted, d + N))


def check_12(prob: HodgeProblem12, strict: bool = False) -> ExistenceReport:
    if prob.s < 3:
        raise PreconditionError(f"need at least three marked points, got {prob.s}")
    classes = classify_points_12(prob)
    w_tilde, _ = shifted_splitting_12(prob)
    v_split = SplittingType.evenly(prob.degV)
    v_shifted = w_tilde.twist(2 - classes.l)
    rhs = prob.pardeg / 3

    records = [
        InequalityRecord.build(
            RecordKind.theta, r=2,
            constant=2 * prob.degL - (classes.l - 2),
            terms=[(f"alpha({label})", p.alpha) for label, p in prob.points] + [
                (f"beta_2({label})", p.beta2) if label in classes.special else (f"beta_1({label})", p.beta1)
                for label, p in prob.points
            ],
            divisor=2, rhs=rhs, strict=strict,
        ),
        InequalityRecord.build(
            RecordKind.full_v, r=2,
            constant=prob.degV,
            terms=[(f"beta_{i}({label})", p.beta(i)) for label, p in prob.points for i in (1, 2)],
            divisor=2, rhs=rhs, strict=strict,
        ),
    ]
    for choice in itertools.product((1, 2), repeat=prob.s):
        N = choice.count(2)
        delta = _best_delta(v_split, v_shifted, N)
        records.append(InequalityRecord.build(
            RecordKind.type_i, r=1, delta=delta,
            subsets=tuple((i,) for i in choice),
            constant=delta,
            terms=[(f"beta_{i}({label})", p.beta(i)) for (label, p), i in zip(prob.points, choice)],
            rhs=rhs, strict=strict,
        ))

    report = ExistenceReport.from_records(
        "check-12", records, strict=strict, degrees={"L": prob.degL, "V": prob.degV},
    )
    logger.info("check-12: l=%d m=%d, %d records, %d violated", classes.l, classes.m, report.total, report.violated)
    return report


# ========
# (1,1)
# ========

def check_11(
        weights: Sequence[tuple[Fraction, Fraction]],
        *,
        labels: Sequence[str] | None = None,
) -> ExistenceReport:
    """
    Stable E = L + L' with theta: L -> L'(log S) and pardeg E = 0, weights given as (alpha, alpha').
    A sum 2N+1 allows (deg L, deg L') = (-N-k, -N-1+k), a sum 2N allows (-N-k, -N+k); k must make
    theta possible (lower bound from the pole count) and keep L' destabilizing-free (upper bound).
    Example: three points (1/9, 2/9) -> k=0, degrees (0, -1)
    """
    pairs = [(Fraction(a), Fraction(b)) for a, b in weights]
    labels = _labels(labels, len(pairs))
    for a, b in pairs:
        if not _window_ok((a, b)):
            raise PreconditionError(f"weights ({a}, {b}) span 1 or more")
    total = sum((a + b for a, b in pairs), Fraction(0))
    if total.denominator != 1:
        raise WeightSumError(f"weights add up to {total}, not an integer")
    total = int(total)
    ell = sum(1 for a, b in pairs if b > a)
    sum_prime = sum((b for _, b in pairs), Fraction(0))

    if total % 2:
        N = (total - 1) // 2
        k_min = math.ceil(Fraction(3 - ell, 2))
        bound = N + 1 - sum_prime

        def degrees(k: int) -> tuple[int, int]:
            return -N - k, -N - 1 + k
    else:
        N = total // 2
        k_min = math.ceil(Fraction(2 - ell, 2))
        bound = N - sum_prime

        def degrees(k: int) -> tuple[int, int]:
            return -N - k, -N + k

    k_max = math.ceil(bound) - 1
    solutions = tuple(
        DegreeSolution(degrees=degrees(k), k=k, value=degrees(k)[1] + sum_prime)
        for k in range(k_min, k_max + 1)
    )
    degL, degLp = degrees(k_min)
    record = InequalityRecord.build(
        RecordKind.full_v, r=1,
        constant=degLp,
        terms=[(f"alpha'({label})", b) for label, (_, b) in zip(labels, pairs)],
        rhs=Fraction(0), strict=True,
    )
    report = ExistenceReport.from_records(
        "check-11", [record], strict=True, solutions=solutions, degrees={"L": degL, "L'": degLp},
    )
    logger.info("check-11: sum=%d poles=%d, %d feasible k", total, ell, len(solutions))
    return report


def biswas_records(
        weights: Sequence[tuple[Fraction, Fraction]],
        *,
        labels: Sequence[str] | None = None,
) -> list[InequalityRecord]:
    """-j + sum_{A} alpha + sum_{S - A} beta < 0 for every A of odd size 2j+1."""
    pairs = [(Fraction(a), Fraction(b)) for a, b in weights]
    labels = _labels(labels, len(pairs))
    if any(a < b for a, b in pairs):
        raise PreconditionError("Biswas weights need alpha >= beta at every point")
    total = sum((a + b for a, b in pairs), Fraction(0))
    if total != 0:
        raise WeightSumError(f"weights add up to {total}, expected 0")
    records = []
    for size in range(1, len(pairs) + 1, 2):
        for chosen in itertools.combinations(range(len(pairs)), size):
            terms = [
                (f"alpha({label})", a) if i in chosen else (f"beta({label})", b)
                for i, (label, (a, b)) in enumerate(zip(labels, pairs))
            ]
            records.append(InequalityRecord.build(
                RecordKind.type_i, r=1, delta=(size - 1) // 2,
                subsets=tuple((1,) if i in chosen else (2,) for i in range(len(pairs))),
                constant=-((size - 1) // 2), terms=terms, rhs=Fraction(0), strict=True,
            ))
    return records


def biswas_check(weights: Sequence[tuple[Fraction, Fraction]]) -> bool:
    return all(rec.satisfied for rec in biswas_records(weights))


# ========
# chains (1,1,...,1)
# ========

@dataclass(frozen=True)
class ChainProblem:
    degrees: tuple[int, ...]
    weights: tuple[tuple[Fraction, ...], ...]    # per point, alpha_1 .. alpha_N
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        object.__setattr__(self, "weights", tuple(tuple(Fraction(a) for a in p) for p in self.weights))
        object.__setattr__(self, "labels", tuple(_labels(self.labels or None, len(self.weights))))
        if any(len(p) != self.N for p in self.weights):
            raise PreconditionError(f"every point needs {self.N} weights")
        if any(not _window_ok(p) for p in self.weights):
            raise PreconditionError("weights at a point must lie in a window shorter than 1")

    @property
    def N(self) -> int:
        return len(self.degrees)

    def poles(self, i: int) -> int:
        """l_i: points where theta_i: E_i -> E_{i+1} has a pole, i.e. alpha_{i+1} > alpha_i (1-based i)."""
        return sum(1 for p in self.weights if p[i] > p[i - 1])


def _check_sums(prob: ChainProblem) -> None:
    total = sum((sum(p) for p in prob.weights), Fraction(0))
    if total != 0:
        raise WeightSumError(f"weights add up to {total}, expected 0")
    if sum(prob.degrees) != 0:
        raise DegreeSumError(f"degrees {prob.degrees} do not add up to 0")


def _chain_records(prob: ChainProblem, strict: bool) -> list[InequalityRecord]:
    records = []
    for i in range(1, prob.N):
        ell = prob.poles(i)
        records.append(InequalityRecord.build(
            RecordKind.degree, r=i,
            constant=prob.degrees[i - 1] - prob.degrees[i] + 2 - ell,
            terms=(), rhs=Fraction(0), strict=False,
        ))
    for m in range(2, prob.N + 1):
        records.append(InequalityRecord.build(
            RecordKind.tail, r=prob.N - m + 1,
            constant=sum(prob.degrees[m - 1:]),
            terms=[
                (f"alpha_{i}({label})", p[i - 1])
                for label, p in zip(prob.labels, prob.weights)
                for i in range(m, prob.N + 1)
            ],
            rhs=Fraction(0), strict=strict,
        ))
    return records


def check_chain(prob: ChainProblem, strict: bool = False) -> ExistenceReport:
    """
    d_i <= d_{i+1} - 2 + l_i for every theta_i, and sum_{i >= m} (d_i + sum_p alpha_i(p)) <= 0 for m >= 2.
    """
    _check_sums(prob)
    report = ExistenceReport.from_records(
        "check-chain", _chain_records(prob, strict), strict=strict,
        degrees={f"d{i}": d for i, d in enumerate(prob.degrees, start=1)},
    )
    logger.info("check-chain: N=%d, %d records, %d violated", prob.N, report.total, report.violated)
    return report


def check_111(
        weights: Sequence[Sequence[Fraction]],
        degrees: Sequence[int],
        strict: bool = False,
        *,
        labels: Sequence[str] | None = None,
) -> ExistenceReport:
    """
    sum(alpha_2 + alpha_3) <= d_1 <= d_2 - 2 + l_1 <= d_3 - 4 + l_1 + l_2 <= -sum(alpha_3) - 4 + l_1 + l_2
    """
    if len(degrees) != 3 or any(len(p) != 3 for p in weights):
        raise PreconditionError("type (1,1,1) needs three degrees and three weights per point")
    prob = ChainProblem(tuple(degrees), tuple(map(tuple, weights)), tuple(labels or ()))
    report = check_chain(prob, strict)
    return report.model_copy(update={"command": "check-111"})


def check_111_search(
        weights: Sequence[Sequence[Fraction]],
        strict: bool = False,
        *,
        labels: Sequence[str] | None = None,
) -> ExistenceReport:
    """Every degree triple satisfying check_111, scanned over the window the outer bounds allow."""
    base = ChainProblem((0, 0, 0), tuple(map(tuple, weights)), tuple(labels or ()))
    _check_sums(base)
    a23 = sum((p[1] + p[2] for p in base.weights), Fraction(0))
    a3 = sum((p[2] for p in base.weights), Fraction(0))
    ell = base.poles(1) + base.poles(2)
    lowest, highest = math.ceil(a23), math.floor(-a3)

    solutions = []
    for d1 in range(lowest, highest - 4 + ell + 1):
        for d3 in range(d1 + 4 - ell, highest + 1):
            report = check_111(base.weights, (d1, -d1 - d3, d3), strict, labels=base.labels)
            if report.exists:
                solutions.append(DegreeSolution(degrees=(d1, -d1 - d3, d3)))

    # ledger: a feasible triple, or the extreme triple to show what fails
    shown = solutions[0].degrees if solutions else (lowest, -lowest - highest, highest)
    report = check_111(base.weights, shown, strict, labels=base.labels)
    logger.info("check-111 search: %d feasible triples", len(solutions))
    return report.model_copy(update={"solutions": tuple(solutions)})
