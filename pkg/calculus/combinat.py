"""
Partitions, Schubert index subsets and the dimension count linking them.

A Schubert condition in Gr(r, n) is an index set I = {i_1 < ... < i_r} in [1, n];
its partition is lambda_j = n - r + j - i_j and its codimension is |lambda|.
Partitions are plain tuples without trailing zeros, so (2, 0) and (2,) are the same key.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .exceptions import BoxError, InvalidSubsetError, RingMismatchError, SchubertError

Partition = tuple[int, ...]


# partitions

def normalize_partition(parts: Iterable[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise SchubertError(f"not a partition: {parts}")
    return tuple(p for p in parts if p)


def fits_box(lam: Partition, r: int, n: int) -> bool:
    return len(lam) <= r and (not lam or lam[0] <= n - r)


def check_ring(r: int, n: int) -> None:
    if n < 1 or not 0 <= r <= n:
        raise SchubertError(f"Gr({r},{n}) needs 0 <= r <= n and n >= 1")


def check_box(lam: Partition, r: int, n: int) -> Partition:
    check_ring(r, n)
    lam = normalize_partition(lam)
    if not fits_box(lam, r, n):
        raise BoxError(f"{lam} does not fit the {r}x{n - r} box")
    return lam


def padded(lam: Partition, r: int) -> tuple[int, ...]:
    return tuple(lam) + (0,) * (r - len(lam))


def box_partitions(r: int, n: int) -> tuple[Partition, ...]:
    """Every partition in the r x (n-r) box, ordered by weight then lexicographically."""
    return tuple(sorted(
        (subset_to_partition(s) for s in all_subsets(r, n)),
        key=lambda lam: (sum(lam), lam),
    ))


def dual_partition(lam: Partition, r: int, n: int) -> Partition:
    """
    Poincare dual inside the box: lambda^v_j = (n - r) - lambda_{r+1-j}.
    Example: dual_partition((2, 1), 2, 4) -> (1,)
    """
    lam = padded(check_box(lam, r, n), r)
    return normalize_partition((n - r) - lam[r - j] for j in range(1, r + 1))


# subsets

@dataclass(frozen=True, order=True)
class SchubertSubset:
    elems: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        elems = tuple(self.elems)
        object.__setattr__(self, "elems", elems)
        if self.n < 1 or len(elems) > self.n:
            raise InvalidSubsetError(f"{elems} cannot index a subspace of C^{self.n}")
        if elems and (elems[0] < 1 or elems[-1] > self.n):
            raise InvalidSubsetError(f"{elems} leaves [1, {self.n}]")
        if any(b <= a for a, b in zip(elems, elems[1:])):
            raise InvalidSubsetError(f"{elems} is not strictly increasing")

    @property
    def r(self) -> int:
        return len(self.elems)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elems)) + "}"


@lru_cache(maxsize=None)
def all_subsets(r: int, n: int) -> tuple[SchubertSubset, ...]:
    return tuple(SchubertSubset(c, n) for c in itertools.combinations(range(1, n + 1), r))


def subset_to_partition(subset: SchubertSubset) -> Partition:
    """
    Example: subset_to_partition(SchubertSubset((1, 2), 4)) -> (2, 2)
    """
    n, r = subset.n, subset.r
    return normalize_partition(n - r + j - i for j, i in enumerate(subset.elems, start=1))


def partition_to_subset(lam: Partition, r: int, n: int) -> SchubertSubset:
    lam = padded(check_box(lam, r, n), r)
    return SchubertSubset(tuple(n - r + j - lam[j - 1] for j in range(1, r + 1)), n)


def codim_of_subset(subset: SchubertSubset) -> int:
    n, r = subset.n, subset.r
    return sum(n - r + j - i for j, i in enumerate(subset.elems, start=1))


def rotate_down(elems: tuple[int, ...], n: int) -> tuple[tuple[int, ...], bool]:
    """Subset part of the downward shift; the flag says whether 1 wrapped around to n."""
    if elems and elems[0] == 1:
        return tuple(i - 1 for i in elems[1:]) + (n,), True
    return tuple(i - 1 for i in elems), False


def rotate_up(elems: tuple[int, ...], n: int) -> tuple[tuple[int, ...], bool]:
    if elems and elems[-1] == n:
        return (1,) + tuple(k + 1 for k in elems[:-1]), True
    return tuple(k + 1 for k in elems), False


def ring_of(subsets: Sequence[SchubertSubset]) -> tuple[int, int]:
    if not subsets:
        raise SchubertError("empty condition list")
    rings = {(s.r, s.n) for s in subsets}
    if len(rings) != 1:
        raise RingMismatchError(f"conditions from several Grassmannians: {sorted(rings)}")
    return rings.pop()


def base_degree(subsets: Sequence[SchubertSubset], d: int, D: int) -> tuple[tuple[SchubertSubset, ...], int]:
    """
    Moves (subsets, d, D) to D = 0: whole cycles first ((d, D) -> (d - r, D - n)),
    then the remainder one step at a time at the first listed point.
    """
    r, n = ring_of(subsets)
    cycles, rest = divmod(D, n)
    d -= r * cycles
    elems = subsets[0].elems
    for _ in range(rest):
        elems, wrapped = rotate_down(elems, n)
        d -= wrapped
    return (SchubertSubset(elems, n), *subsets[1:]), d


def solve_degree(subsets: Sequence[SchubertSubset], r: int, n: int, D: int = 0) -> int | None:
    """
    Solves sum codim = r(n-r) + n*delta - r*D for delta.

    Returns None when delta is not an integer or when the D = 0 representative
    would need a negative degree; either way every such invariant vanishes.
    The returned delta may be negative when D != 0.
    Example: three copies of {1,2} in Gr(2,4), D=0 -> 2
    """
    if ring_of(subsets) != (r, n):
        raise RingMismatchError(f"conditions are not in Gr({r},{n})")
    numerator = sum(codim_of_subset(s) for s in subsets) - r * (n - r) + r * D
    if numerator % n:
        return None
    delta = numerator // n
    _, base = base_degree(subsets, delta, D)
    return delta if base >= 0 else None


def evenly_split(degree: int, rank: int) -> tuple[int, ...]:
    """
    Generic splitting type of a rank-`rank` bundle of degree `degree` on the line.
    Example: evenly_split(5, 2) -> (3, 2)
    """
    if rank < 1:
        raise SchubertError("rank must be positive")
    q, rem = divmod(degree, rank)
    return (q + 1,) * rem + (q,) * (rank - rem)
