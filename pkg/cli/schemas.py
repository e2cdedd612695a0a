from fractions import Fraction
from typing import Annotated, Optional

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, PlainSerializer, field_validator, model_validator
from pydantic_core import PydanticCustomError

from shared.utils import format_rational, parse_rational

SCHEMAS = ("unitary", "hodge1n", "hodge12", "hodge11", "hodge111", "chain")


def _wire_rational(value):
    if isinstance(value, Fraction):
        return value
    try:
        return parse_rational(value)
    except ZeroDivisionError:
        raise PydanticCustomError("DEN_ZERO", "zero denominator in {value}", {"value": str(value)})
    except ValueError:
        raise PydanticCustomError("BAD_RATIONAL", "expected \"num/den\" or an integer, got {value}", {"value": repr(value)})


WireRational = Annotated[
    Fraction,
    BeforeValidator(_wire_rational),
    PlainSerializer(format_rational, return_type=str, when_used="json"),
]


def _fail(code: str, message: str, location: str) -> PydanticCustomError:
    return PydanticCustomError(code, message + " ({location})", {"location": location})


class PointEntry(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: str
    weights: tuple[WireRational, ...]


class ProblemOptions(BaseModel):
    model_config = ConfigDict(frozen=True)

    strict: Optional[bool] = None


class ProblemFile(BaseModel):
    """
    One problem instance. Weights per point, by schema:
    unitary [a_1 <= ... <= a_n]; hodge1n [alpha, beta_1, ..., beta_n]; hodge12 [alpha, beta_1, beta_2];
    hodge11 [alpha, alpha']; hodge111 [alpha_1, alpha_2, alpha_3]; chain [alpha_1, ..., alpha_N].
    """
    model_config = ConfigDict(frozen=True, populate_by_name=True, arbitrary_types_allowed=True, extra="ignore")

    kind: str = Field(alias="schema")
    n: Optional[int] = None
    points: tuple[PointEntry, ...]
    degrees: dict[str, int] = {}
    options: ProblemOptions = ProblemOptions()

    @field_validator("kind")
    @classmethod
    def _known_schema(cls, value: str) -> str:
        if value not in SCHEMAS:
            raise PydanticCustomError("UNKNOWN_SCHEMA", "unknown schema {value}", {"value": value})
        return value

    @model_validator(mode="after")
    def _invariants(self) -> "ProblemFile":
        labels = [p.label for p in self.points]
        for idx, label in enumerate(labels):
            if label in labels[:idx]:
                raise _fail("DUP_LABEL", f"label {label!r} used twice", f"points.{idx}.label")
        if not self.points:
            raise _fail("ARITY", "at least one point is required", "points")

        arity = self._arity()
        for idx, point in enumerate(self.points):
            where = f"points.{idx}.weights"
            if len(point.weights) != arity:
                raise _fail("ARITY", f"expected {arity} weights, got {len(point.weights)}", where)
            if max(point.weights) - min(point.weights) >= 1:
                raise _fail("WINDOW", "weights at a point must lie in a window shorter than 1", where)
            self._check_order(point.weights, where)

        self._check_sums()
        self._check_degrees(arity)
        return self

    # internals

    def _arity(self) -> int:
        if self.kind in ("unitary", "hodge1n"):
            if self.n is None or self.n < 1:
                raise _fail("MISSING_FIELD", f"schema {self.kind} needs a positive n", "n")
            return self.n if self.kind == "unitary" else self.n + 1
        if self.kind == "chain":
            if not self.points[0].weights:
                raise _fail("ARITY", "a chain needs at least one component", "points.0.weights")
            return len(self.points[0].weights)
        return {"hodge12": 3, "hodge11": 2, "hodge111": 3}[self.kind]

    def _check_order(self, weights: tuple[Fraction, ...], where: str) -> None:
        if self.kind == "unitary" and any(b < a for a, b in zip(weights, weights[1:])):
            raise _fail("ORDER", "weights must be ascending", where)
        if self.kind == "hodge1n":
            alpha, betas = weights[0], weights[1:]
            if any(b <= a for a, b in zip(betas, betas[1:])) or alpha in betas:
                raise _fail("ORDER", "betas must be strictly ascending and distinct from alpha", where)
        if self.kind == "hodge12" and weights[1] > weights[2]:
            raise _fail("ORDER", "beta_1 must not exceed beta_2", where)

    def _check_sums(self) -> None:
        total = sum((sum(p.weights) for p in self.points), Fraction(0))
        if self.kind in ("unitary", "hodge111", "chain") and total != 0:
            raise _fail("SUM", f"weights add up to {format_rational(total)}, expected 0", "points")
        if self.kind == "hodge11" and total.denominator != 1:
            raise _fail("SUM", f"weights add up to {format_rational(total)}, expected an integer", "points")

    def _check_degrees(self, arity: int) -> None:
        required: tuple[str, ...] = ()
        if self.kind in ("hodge1n", "hodge12"):
            required = ("L", "V")
        elif self.kind == "chain":
            required = tuple(f"d{i}" for i in range(1, arity + 1))
        elif self.kind == "hodge111" and self.degrees:
            required = ("d1", "d2", "d3")
        for key in required:
            if key not in self.degrees:
                raise _fail("MISSING_FIELD", f"degree {key} is required", f"degrees.{key}")

    # views

    @property
    def labels(self) -> list[str]:
        return [p.label for p in self.points]

    @property
    def weights(self) -> list[tuple[Fraction, ...]]:
        return [p.weights for p in self.points]

    def ordered_degrees(self, count: int) -> tuple[int, ...]:
        return tuple(self.degrees[f"d{i}"] for i in range(1, count + 1))
