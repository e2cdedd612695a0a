"""
Type (1,n) systems of Hodge bundles E = L + V with theta: L -> V(log S), and the unitary case.

Every inequality is produced in the form (constant + sum of weights) / divisor <= pardeg(E) / rank(E);
GW-backed families use D = -w for subbundles of V and D = deg L - w for subbundles containing L,
where w = deg V + n(s - 2) is the degree of W = V twisted by the log canonical bundle.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from calculus.combinat import SchubertSubset, all_subsets, solve_degree, subset_to_partition
from calculus.quantum import gw_number
from calculus.shifting import (
    ShiftStep,
    WeightedPoint1N,
    generalized_gw,
    normalize_condition,
    normalize_weights_1n,
)
from shared.logger import get_logger
from shared.schemas import ExistenceReport, InequalityRecord, RecordKind
from .exceptions import PreconditionError, WeightSumError

logger = get_logger(__name__)


@dataclass(frozen=True)
class HodgeProblem1N:
    points: tuple[tuple[str, WeightedPoint1N], ...]
    degL: int
    degV: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        if not self.points:
            raise PreconditionError("no marked points")
        if len({p.n for _, p in self.points}) != 1:
            raise PreconditionError("points disagree on the rank of V")
        labels = [label for label, _ in self.points]
        if len(set(labels)) != len(labels):
            raise PreconditionError(f"duplicate point labels: {labels}")

    @property
    def n(self) -> int:
        return self.points[0][1].n

    @property
    def s(self) -> int:
        return len(self.points)

    @property
    def w(self) -> int:
        return self.degV + self.n * (self.s - 2)

    @property
    def pardeg(self) -> Fraction:
        return self.degL + self.degV + sum((sum(p.weights) for _, p in self.points), Fraction(0))

    @property
    def is_normalized(self) -> bool:
        return all(p.is_normalized for _, p in self.points)

    def normalized(self) -> tuple[HodgeProblem1N, list[ShiftStep]]:
        labels = [label for label, _ in self.points]
        points, degL, degV, log = normalize_weights_1n([p for _, p in self.points], self.degL, self.degV)
        return HodgeProblem1N(tuple(zip(labels, points)), degL, degV), log


def _ggw(choice: Sequence[SchubertSubset], D: int, r: int, n: int) -> tuple[int, int, int] | None:
    """(delta, base delta, invariant) for one choice of conditions, None when it vanishes."""
    delta = solve_degree(choice, r, n, D)
    if delta is None:
        return None
    canonical = sorted(choice)
    gw = generalized_gw(canonical, delta, D, r, n)
    if not gw:
        return None
    _, base = normalize_condition(canonical, delta, D)
    return delta, base, gw


def _type_i(prob: HodgeProblem1N, r: int, rhs: Fraction, strict: bool) -> list[InequalityRecord]:
    n, s, D = prob.n, prob.s, -prob.w
    records = []
    for choice in itertools.product(all_subsets(r, n), repeat=s):
        hit = _ggw(choice, D, r, n)
        if hit is None:
            continue
        delta, base, gw = hit
        terms = [
            (f"beta_{n - i + 1}({label})", point.beta(n - i + 1))
            for (label, point), subset in zip(prob.points, choice)
            for i in subset.elems
        ]
        records.append(InequalityRecord.build(
            RecordKind.type_i, r=r, delta=delta, base_delta=base, ambient=D,
            subsets=tuple(c.elems for c in choice), gw=gw,
            constant=-delta + r * (2 - s), terms=terms, divisor=r, rhs=rhs, strict=strict,
        ))
    return records


def _type_ii(prob: HodgeProblem1N, r: int, rhs: Fraction, strict: bool) -> list[InequalityRecord]:
    n, s, D = prob.n, prob.s, prob.degL - prob.w
    if r == 1:
        choices = [(SchubertSubset((), n - 1),) * s]
    else:
        choices = itertools.product(all_subsets(r - 1, n - 1), repeat=s)
    records = []
    for choice in choices:
        if r == 1:
            delta, base, gw = 0, 0, 1
        else:
            hit = _ggw(choice, D, r - 1, n - 1)
            if hit is None:
                continue
            delta, base, gw = hit
        terms = []
        for (label, point), subset in zip(prob.points, choice):
            terms.append((f"alpha({label})", point.alpha))
            terms.append((f"beta_1({label})", point.beta(1)))
            terms.extend((f"beta_{n - j + 1}({label})", point.beta(n - j + 1)) for j in subset.elems)
        records.append(InequalityRecord.build(
            RecordKind.type_ii, r=r, delta=delta, base_delta=base, ambient=D,
            subsets=tuple(c.elems for c in choice), gw=gw,
            constant=2 * prob.degL - delta + r * (2 - s), terms=terms, divisor=r + 1, rhs=rhs, strict=strict,
        ))
    return records


def enumerate_inequalities_1n(
        prob: HodgeProblem1N,
        *,
        strict: bool = False,
        workers: int = 1,
) -> list[InequalityRecord]:
    """
    All inequalities of a normalized (1,n) problem, sorted by (kind, r, delta, subsets).
    Which records appear depends only on (n, s, degL, degV); the weights only decide `satisfied`.
    """
    if prob.s < 3:
        raise PreconditionError(f"need at least three marked points, got {prob.s}")
    if not prob.is_normalized:
        raise PreconditionError("weights are not normalized (alpha must be the smallest weight at every point)")

    n = prob.n
    rhs = prob.pardeg / (n + 1)
    records = [InequalityRecord.build(
        RecordKind.full_v, r=n,
        constant=prob.degV,
        terms=[(f"beta_{i}({label})", p.beta(i)) for label, p in prob.points for i in range(1, n + 1)],
        divisor=n, rhs=rhs, strict=strict,
    )]
    if n == 1:
        # theta: L -> V(s-2) must be nonzero
        records.append(InequalityRecord.build(
            RecordKind.degree, r=1, constant=prob.degL - prob.w, terms=(), rhs=Fraction(0), strict=False,
        ))

    jobs = [(family, r) for r in range(1, n) for family in (_type_i, _type_ii)]
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda job: job[0](prob, job[1], rhs, strict), jobs))
    else:
        chunks = [family(prob, r, rhs, strict) for family, r in jobs]
    for chunk in chunks:
        records.extend(chunk)

    records.sort(key=lambda rec: rec.sort_key)
    logger.debug("(1,%d) problem with %d points: %d inequalities", n, prob.s, len(records))
    return records


def check_1n(
        prob: HodgeProblem1N,
        strict: bool = False,
        *,
        workers: int = 1,
        shifts: Sequence[ShiftStep] = (),
) -> ExistenceReport:
    records = enumerate_inequalities_1n(prob, strict=strict, workers=workers)
    labels = [label for label, _ in prob.points]
    report = ExistenceReport.from_records(
        "check-1n", records, strict=strict,
        degrees={"L": prob.degL, "V": prob.degV},
        shifts=tuple(
            {"point": labels[step.point], "component": step.component, "before": step.before, "after": step.after}
            for step in shifts
        ),
    )
    logger.info("check-1n: %d records, %d violated", report.total, report.violated)
    return report


# unitary

def check_unitary(
        weights: Sequence[Sequence[Fraction]],
        n: int,
        strict: bool = False,
        *,
        labels: Sequence[str] | None = None,
) -> ExistenceReport:
    """
    Rank-n parabolic bundles of degree 0 with the given weights (ascending per point, total 0):
    -d + sum_p sum_{i in I^p} a_{n-i+1}(p) <= 0 for every nonzero <s_I^1, ..., s_I^s>_d.
    """
    weights = [tuple(Fraction(a) for a in point) for point in weights]
    labels = list(labels) if labels is not None else [str(i) for i in range(len(weights))]
    if any(len(point) != n for point in weights):
        raise PreconditionError(f"every point needs {n} weights")
    for point in weights:
        if any(b < a for a, b in zip(point, point[1:])) or point[-1] - point[0] >= 1:
            raise PreconditionError(f"weights {point} not ascending inside a window shorter than 1")
    total = sum((sum(point) for point in weights), Fraction(0))
    if total != 0:
        raise WeightSumError(f"weights add up to {total}, expected 0")

    records = []
    for r in range(1, n):
        for choice in itertools.product(all_subsets(r, n), repeat=len(weights)):
            d = solve_degree(choice, r, n, 0)
            if d is None:
                continue
            classes = [subset_to_partition(c) for c in choice]
            gw = gw_number(sorted(classes) + [()] if len(classes) == 1 else sorted(classes), d, r, n)
            if not gw:
                continue
            terms = [
                (f"a_{n - i + 1}({label})", point[n - i])
                for label, point, subset in zip(labels, weights, choice)
                for i in subset.elems
            ]
            records.append(InequalityRecord.build(
                RecordKind.type_i, r=r, delta=d, base_delta=d, ambient=0,
                subsets=tuple(c.elems for c in choice), gw=gw,
                constant=-d, terms=terms, rhs=Fraction(0), strict=strict,
            ))
    report = ExistenceReport.from_records("check-unitary", records, strict=strict)
    logger.info("check-unitary: %d records, %d violated", report.total, report.violated)
    return report
