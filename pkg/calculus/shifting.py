"""
Parabolic shifts.

On conditions: moving to a bundle of one degree higher rotates each index set by one
(1 wraps to n) and lowers the curve degree when it wraps. On weights: the largest weight
at a point drops by one while the degree of its component rises by one.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from shared.logger import get_logger
from .combinat import SchubertSubset, base_degree, ring_of, rotate_down, rotate_up, subset_to_partition
from .exceptions import RingMismatchError, WeightError
from .quantum import gw_number

logger = get_logger(__name__)


@dataclass(frozen=True)
class ShiftedCondition:
    subset: SchubertSubset
    degree: int


def shift_condition_down(c: ShiftedCondition) -> ShiftedCondition:
    """
    Example: ({1,3}, d) in n=3 -> ({2,3}, d-1)
    """
    elems, wrapped = rotate_down(c.subset.elems, c.subset.n)
    return ShiftedCondition(SchubertSubset(elems, c.subset.n), c.degree - wrapped)


def shift_condition_up(c: ShiftedCondition) -> ShiftedCondition:
    elems, wrapped = rotate_up(c.subset.elems, c.subset.n)
    return ShiftedCondition(SchubertSubset(elems, c.subset.n), c.degree + wrapped)


def normalize_condition(
        subsets: Sequence[SchubertSubset],
        d: int,
        D: int,
) -> tuple[tuple[SchubertSubset, ...], int]:
    """The D = 0 representative of <subsets>_{d, D}, shifting at the first listed point."""
    return base_degree(tuple(subsets), d, D)


def generalized_gw(subsets: Sequence[SchubertSubset], d: int, D: int, r: int, n: int) -> int:
    """
    <s_I1, ..., s_Is>_{d, D}: subbundle count inside a generic bundle of degree -D.
    Example: Gr(1,2), <{2},{1},{1}>_{0,-1} -> 1
    """
    if ring_of(subsets) != (r, n):
        raise RingMismatchError(f"conditions are not in Gr({r},{n})")
    base, d0 = normalize_condition(subsets, d, D)
    if d0 < 0:
        return 0
    classes = [subset_to_partition(s) for s in base]
    if len(classes) == 1:
        classes.append(())
    return gw_number(classes, d0, r, n)


# weights

@dataclass(frozen=True)
class WeightedPoint1N:
    alpha: Fraction
    betas: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "betas", tuple(Fraction(b) for b in self.betas))
        if not self.betas:
            raise WeightError("a point needs at least one beta weight")
        if any(b <= a for a, b in zip(self.betas, self.betas[1:])):
            raise WeightError(f"betas not strictly increasing: {self.betas}")
        if self.alpha in self.betas:
            raise WeightError(f"alpha {self.alpha} ties with a beta weight")
        weights = self.weights
        if max(weights) - min(weights) >= 1:
            raise WeightError(f"weights span {max(weights) - min(weights)} >= 1")

    @property
    def n(self) -> int:
        return len(self.betas)

    @property
    def weights(self) -> tuple[Fraction, ...]:
        return (self.alpha, *self.betas)

    @property
    def is_normalized(self) -> bool:
        return self.alpha < self.betas[0]

    def beta(self, i: int) -> Fraction:
        """1-based, beta(1) smallest."""
        return self.betas[i - 1]


class ShiftStep(NamedTuple):
    point: int          # position in the input list
    component: str      # "L" or "V"
    before: Fraction
    after: Fraction


def normalize_weights_1n(
        points: Sequence[WeightedPoint1N],
        degL: int,
        degV: int,
) -> tuple[list[WeightedPoint1N], int, int, list[ShiftStep]]:
    """
    Shifts every point until alpha is its strict minimum.
    Example: alpha=9/10, betas=(1/10, 1/2), degL=0 -> alpha=-1/10, degL=1
    """
    shifted: list[WeightedPoint1N] = []
    log: list[ShiftStep] = []
    for idx, point in enumerate(points):
        alpha, betas = point.alpha, list(point.betas)
        while not alpha < betas[0]:
            if alpha > betas[-1]:
                log.append(ShiftStep(idx, "L", alpha, alpha - 1))
                alpha -= 1
                degL += 1
            else:
                top = betas.pop()
                log.append(ShiftStep(idx, "V", top, top - 1))
                betas.insert(0, top - 1)
                degV += 1
        shifted.append(WeightedPoint1N(alpha, tuple(betas)))
    if log:
        logger.debug("normalized weights with %d shifts, degL=%d degV=%d", len(log), degL, degV)
    return shifted, degL, degV, log
