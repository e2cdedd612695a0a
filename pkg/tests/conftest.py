from pathlib import Path

import hypothesis
import pytest

from calculus.combinat import normalize_partition

hypothesis.settings.register_profile("fast", max_examples=10)
hypothesis.settings.register_profile("ci", max_examples=300, deadline=None)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False)

FIXTURES = Path(__file__).parent / "fixtures"


def partitions_of(k: int, largest: int | None = None) -> list[tuple[int, ...]]:
    """Every partition of k with parts at most `largest`."""
    largest = k if largest is None else largest
    if k == 0:
        return [()]
    out = []
    for first in range(min(k, largest), 0, -1):
        out.extend((first, *rest) for rest in partitions_of(k - first, first))
    return out


def sub_partitions(nu: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Every lambda contained in nu."""
    if not nu:
        return [()]
    out = []
    for rest in sub_partitions(nu[1:]):
        low = rest[0] if rest else 0
        out.extend(normalize_partition((head, *rest)) for head in range(low, nu[0] + 1))
    return out


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
