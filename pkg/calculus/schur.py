"""
Classical Littlewood-Richardson numbers.

`schur_product` builds s_lambda * s_mu letter by letter: mu_1 ones, then mu_2 twos, ...
each added as a horizontal strip whose reverse reading word stays a lattice word.
`lr_tableau_count` is an independent cell-by-cell enumeration of LR tableaux of a fixed
skew shape and only serves as a cross-check.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterator

from .combinat import Partition, normalize_partition

SchurSum = dict[Partition, int]


def schur_product(lam: Partition, mu: Partition) -> SchurSum:
    """
    Full expansion of s_lam * s_mu.
    Example: schur_product((1,), (1,)) -> {(2,): 1, (1, 1): 1}
    """
    lam, mu = normalize_partition(lam), normalize_partition(mu)
    return dict(_product(lam, mu))


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    lam, mu, nu = normalize_partition(lam), normalize_partition(mu), normalize_partition(nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    return schur_product(lam, mu).get(nu, 0)


def box_truncate(terms: SchurSum, r: int, n: int) -> SchurSum:
    return {nu: c for nu, c in terms.items() if len(nu) <= r and (not nu or nu[0] <= n - r)}


# internals

@lru_cache(maxsize=4096)
def _product(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    # cached value is an immutable snapshot; callers get a fresh dict
    found: Counter[Partition] = Counter()
    _place(list(lam), mu, 0, None, found)
    return tuple(sorted(found.items()))


def _place(shape: list[int], mu: Partition, letter: int, prev: list[int] | None, found: Counter) -> None:
    if letter == len(mu):
        found[tuple(shape)] += 1
        return
    for counts in _strips(shape, mu[letter], prev):
        grown = [a + b for a, b in zip(shape + [0], counts)]
        _place([x for x in grown if x], mu, letter + 1, counts, found)


def _strips(shape: list[int], size: int, prev: list[int] | None) -> Iterator[list[int]]:
    """
    Horizontal strips of `size` boxes on `shape`, as per-row counts.
    With `prev` (per-row counts of the previous letter) the running total of the new letter
    through row i may not exceed the previous letter's total strictly above row i.
    """
    rows = shape + [0]
    counts = [0] * len(rows)

    def rec(i: int, remaining: int, placed: int, above: int) -> Iterator[list[int]]:
        if remaining == 0:
            yield list(counts)
            return
        if i == len(rows):
            return
        room = remaining if i == 0 else min(remaining, rows[i - 1] - rows[i])
        if prev is not None:
            room = min(room, above - placed)
        for c in range(room, -1, -1):
            counts[i] = c
            seen = prev[i] if prev is not None and i < len(prev) else 0
            yield from rec(i + 1, remaining - c, placed + c, above + seen)
        counts[i] = 0

    yield from rec(0, size, 0, 0)


# oracle

def lr_tableau_count(lam: Partition, mu: Partition, nu: Partition) -> int:
    """
    Counts semistandard fillings of nu/lam with content mu whose reverse reading word
    (rows top to bottom, each right to left) is a lattice word.
    Example: lr_tableau_count((2, 1), (2, 1), (3, 2, 1)) -> 2
    """
    lam, mu, nu = normalize_partition(lam), normalize_partition(mu), normalize_partition(nu)
    if len(lam) > len(nu) or any(a > b for a, b in zip(lam, nu)):
        return 0
    if sum(nu) != sum(lam) + sum(mu):
        return 0

    inner = list(lam) + [0] * (len(nu) - len(lam))
    cells = [(i, j) for i in range(len(nu)) for j in range(nu[i] - 1, inner[i] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    content = [0] * (len(mu) + 1)

    def allowed(i: int, j: int, v: int) -> bool:
        right = filling.get((i, j + 1))
        if right is not None and v > right:
            return False
        above = filling.get((i - 1, j))
        if above is not None and v <= above:
            return False
        if content[v] >= mu[v - 1]:
            return False
        return v == 1 or content[v] + 1 <= content[v - 1]

    def count(pos: int) -> int:
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        total = 0
        for v in range(1, len(mu) + 1):
            if allowed(i, j, v):
                filling[(i, j)] = v
                content[v] += 1
                total += count(pos + 1)
                content[v] -= 1
                del filling[(i, j)]
        return total

    return count(0)
