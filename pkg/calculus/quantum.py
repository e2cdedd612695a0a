"""
Small quantum cohomology of Gr(r, n).

Products expand classically and then strip n-rim hooks: with beta-numbers
beta_i = nu_i + r - i, a hook removal lowers the largest beta by n, costs one q
and the sign (-1)^(r-1) times the sign of re-sorting the betas.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

import numpy as np

from shared.logger import get_logger
from .combinat import Partition, check_box, check_ring, dual_partition, normalize_partition
from .exceptions import RingMismatchError, SchubertError
from .schur import schur_product

logger = get_logger(__name__)

Term = tuple[Partition, int]    # (partition, q-degree)


@dataclass(frozen=True)
class QuantumClass:
    r: int
    n: int
    terms: Mapping[Term, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        check_ring(self.r, self.n)
        clean: dict[Term, int] = {}
        for (lam, d), c in self.terms.items():
            lam = check_box(lam, self.r, self.n)
            if d < 0:
                raise SchubertError(f"negative q-degree {d}")
            if c:
                clean[(lam, d)] = clean.get((lam, d), 0) + c
        object.__setattr__(self, "terms", {k: v for k, v in clean.items() if v})

    @classmethod
    def from_partition(cls, lam: Partition, r: int, n: int, coefficient: int = 1) -> QuantumClass:
        return cls(r, n, {(normalize_partition(lam), 0): coefficient})

    @classmethod
    def one(cls, r: int, n: int) -> QuantumClass:
        return cls.from_partition((), r, n)

    def coefficient(self, lam: Partition, d: int = 0) -> int:
        return self.terms.get((normalize_partition(lam), d), 0)

    def at_q_zero(self) -> dict[Partition, int]:
        return {lam: c for (lam, d), c in self.terms.items() if d == 0}

    def is_homogeneous(self) -> bool:
        return len({sum(lam) + self.n * d for lam, d in self.terms}) <= 1

    def __mul__(self, other: QuantumClass) -> QuantumClass:
        return quantum_product(self, other)

    def __add__(self, other: QuantumClass) -> QuantumClass:
        if (self.r, self.n) != (other.r, other.n):
            raise RingMismatchError(f"Gr({self.r},{self.n}) vs Gr({other.r},{other.n})")
        total = Counter(self.terms)
        total.update(other.terms)
        return QuantumClass(self.r, self.n, total)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (lam, d), c in sorted(self.terms.items(), key=lambda t: (t[0][1], -sum(t[0][0]), t[0][0])):
            factors = [str(abs(c))] if abs(c) != 1 else []
            if d:
                factors.append("q" if d == 1 else f"q^{d}")
            factors.append("s[" + (",".join(map(str, lam)) or "0") + "]")
            pieces.append(("-" if c < 0 else "+", "*".join(factors)))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text


def rim_hook_reduce(nu: Partition, r: int, n: int) -> tuple[int, Partition, int] | None:
    """
    Reduces an arbitrary partition to (sign, box partition, q-degree), or None when it vanishes.
    Example: rim_hook_reduce((4,), 1, 3) -> (1, (1,), 1)
    """
    nu = normalize_partition(nu)
    if len(nu) > r:
        return None
    betas = [part + r - i for i, part in enumerate(nu + (0,) * (r - len(nu)), start=1)]
    sign, qdeg = 1, 0
    while betas and betas[0] >= n:
        lowered = betas[0] - n
        if lowered in betas:
            return None
        passed = sum(1 for b in betas[1:] if b > lowered)
        sign *= (-1) ** (r - 1 + passed)
        qdeg += 1
        betas = sorted(betas[1:] + [lowered], reverse=True)
    lam = normalize_partition(b - (r - i) for i, b in enumerate(betas, start=1))
    return sign, lam, qdeg


def quantum_product(a: QuantumClass, b: QuantumClass) -> QuantumClass:
    """
    Example: Gr(1,3) s[1] * s[2] -> q*s[0]
    """
    if (a.r, a.n) != (b.r, b.n):
        raise RingMismatchError(f"Gr({a.r},{a.n}) vs Gr({b.r},{b.n})")
    result: Counter[Term] = Counter()
    for ((lam, d1), c1), ((mu, d2), c2) in itertools.product(a.terms.items(), b.terms.items()):
        for (kappa, k), c in _reduced_product(lam, mu, a.r, a.n):
            result[(kappa, d1 + d2 + k)] += c1 * c2 * c
    return QuantumClass(a.r, a.n, result)


@lru_cache(maxsize=8192)
def _reduced_product(lam: Partition, mu: Partition, r: int, n: int) -> tuple[tuple[Term, int], ...]:
    reduced: Counter[Term] = Counter()
    for nu, c in schur_product(lam, mu).items():
        hit = rim_hook_reduce(nu, r, n)
        if hit is not None:
            sign, kappa, k = hit
            reduced[(kappa, k)] += sign * c
    return tuple(sorted((t, c) for t, c in reduced.items() if c))


def gw_number(classes: Sequence[Partition], d: int, r: int, n: int) -> int:
    """
    <s_1, ..., s_s>_d: coefficient of q^d s_{last^v} in the product of all but the last class.
    Example: gw_number([(2, 2)] * 3, 2, 2, 4) -> 1
    """
    if len(classes) < 2:
        raise SchubertError("need at least two classes")
    classes = tuple(check_box(lam, r, n) for lam in classes)
    if d < 0 or sum(map(sum, classes)) != r * (n - r) + d * n:
        return 0
    return _gw(classes, d, r, n)


@lru_cache(maxsize=65536)
def _gw(classes: tuple[Partition, ...], d: int, r: int, n: int) -> int:
    acc: dict[Term, int] = {(classes[0], 0): 1}
    for mu in classes[1:-1]:
        step: Counter[Term] = Counter()
        for (lam, d1), c1 in acc.items():
            for (kappa, k), c in _reduced_product(lam, mu, r, n):
                if d1 + k <= d:
                    step[(kappa, d1 + k)] += c1 * c
        acc = {t: c for t, c in step.items() if c}
    value = acc.get((dual_partition(classes[-1], r, n), d), 0)
    if value < 0:
        logger.error("negative invariant %d for %s in Gr(%d,%d), d=%d", value, classes, r, n, d)
    return value


# numeric cross-check

def vafa_intriligator_estimate(classes: Sequence[Partition], d: int, r: int, n: int) -> float:
    """
    Root-of-unity evaluation of the same invariant: sum over r-subsets z of the roots of
    x^n = (-1)^(r-1) of prod_i s_i(z) * prod_{a!=b}(z_a - z_b) / prod_a (n z_a^(n-1)).
    """
    classes = [check_box(lam, r, n) for lam in classes]
    if d < 0 or sum(map(sum, classes)) != r * (n - r) + d * n:
        return 0.0
    roots = np.exp(1j * np.pi * (2 * np.arange(n) + r - 1) / n)
    off_diagonal = ~np.eye(r, dtype=bool)
    total = 0j
    for idx in itertools.combinations(range(n), r):
        z = roots[list(idx)]
        value = np.prod([_schur_at(lam, z) for lam in classes])
        vandermonde = np.prod((z[:, None] - z[None, :])[off_diagonal])
        total += value * vandermonde / np.prod(n * z ** (n - 1))
    return float(total.real)


def _schur_at(lam: Partition, z: np.ndarray) -> complex:
    r = len(z)
    staircase = np.arange(r - 1, -1, -1)
    parts = np.array(lam + (0,) * (r - len(lam)))
    numerator = np.linalg.det(z[None, :] ** (parts + staircase)[:, None])
    return numerator / np.linalg.det(z[None, :] ** staircase[:, None])
