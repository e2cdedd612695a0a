"""
Command dispatch shared by the typer app and the tests.

Calculator commands (qprod, gw, ggw) return text; check-* commands and biswas return an ExistenceReport.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from calculus.combinat import SchubertSubset
from calculus.quantum import QuantumClass, gw_number
from calculus.shifting import WeightedPoint1N, generalized_gw
from checkers.hodge import HodgeProblem1N, check_1n, check_unitary
from checkers.lowrank import (
    ChainProblem,
    HodgeProblem12,
    WeightedPoint12,
    biswas_records,
    check_11,
    check_111,
    check_111_search,
    check_12,
    check_chain,
)
from shared import locale
from shared.logger import get_logger
from shared.schemas import ExistenceReport
from shared.utils import parse_partition, parse_subset, stringify
from .parsers import ProblemFileError
from .schemas import ProblemFile

logger = get_logger(__name__)

COMMAND_SCHEMAS = {
    "check-1n": "hodge1n",
    "check-12": "hodge12",
    "check-11": "hodge11",
    "check-111": "hodge111",
    "check-chain": "chain",
    "check-unitary": "unitary",
    "biswas": "unitary",
}


@dataclass(frozen=True)
class Flags:
    strict: bool | None = None
    d: int = 0
    D: int = 0
    search_degrees: bool = False
    workers: int = 1
    default_strict: bool = False


# calculators

def run_qprod(r: int, n: int, lam: str, mu: str) -> str:
    a = QuantumClass.from_partition(parse_partition(lam), r, n)
    b = QuantumClass.from_partition(parse_partition(mu), r, n)
    return str(a * b)


def run_gw(r: int, n: int, classes: Sequence[str], d: int) -> str:
    return str(gw_number([parse_partition(c) for c in classes], d, r, n))


def run_ggw(r: int, n: int, subsets: Sequence[str], d: int, D: int) -> str:
    return str(generalized_gw([SchubertSubset(parse_subset(s), n) for s in subsets], d, D, r, n))


# checkers

def _strictness(problem: ProblemFile, flags: Flags) -> bool:
    if flags.strict is not None:
        return flags.strict
    if problem.options.strict is not None:
        return problem.options.strict
    return flags.default_strict


def run_command(command: str, problem: ProblemFile, flags: Flags = Flags()) -> ExistenceReport:
    """Runs a check-* (or biswas) command on a parsed problem file."""
    expected = COMMAND_SCHEMAS.get(command)
    if expected is None:
        raise ProblemFileError("UNKNOWN_COMMAND", "command", f"no such command {command}")
    if problem.kind != expected:
        raise ProblemFileError(
            "SCHEMA_MISMATCH", "schema",
            stringify(locale.ERR_SCHEMA_MISMATCH, command=command, expected=expected, actual=problem.kind),
        )
    strict = _strictness(problem, flags)
    labels, weights = problem.labels, problem.weights
    logger.debug("%s on %d points (strict=%s)", command, len(labels), strict)

    if command == "check-1n":
        prob = HodgeProblem1N(
            tuple((label, WeightedPoint1N(w[0], w[1:])) for label, w in zip(labels, weights)),
            problem.degrees["L"],
            problem.degrees["V"],
        )
        prob, shifts = prob.normalized()
        return check_1n(prob, strict, workers=flags.workers, shifts=shifts)

    if command == "check-12":
        prob = HodgeProblem12(
            tuple((label, WeightedPoint12(*w)) for label, w in zip(labels, weights)),
            problem.degrees["L"],
            problem.degrees["V"],
        )
        return check_12(prob, strict)

    if command == "check-11":
        return check_11(weights, labels=labels)

    if command == "check-111":
        if flags.search_degrees or not problem.degrees:
            return check_111_search(weights, strict, labels=labels)
        return check_111(weights, problem.ordered_degrees(3), strict, labels=labels)

    if command == "check-chain":
        N = len(weights[0])
        return check_chain(ChainProblem(problem.ordered_degrees(N), tuple(weights), tuple(labels)), strict)

    if command == "check-unitary":
        return check_unitary(weights, problem.n, strict, labels=labels)

    # biswas: unitary rank-2 data, (smaller, larger) per point
    if problem.n != 2:
        raise ProblemFileError("ARITY", "n", "biswas needs n = 2")
    records = biswas_records([(w[1], w[0]) for w in weights], labels=labels)
    return ExistenceReport.from_records("biswas", records, strict=True)
