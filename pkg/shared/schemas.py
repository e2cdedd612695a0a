import enum
from fractions import Fraction
from typing import Annotated, Iterable, Optional, Sequence

from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer, computed_field

from shared.utils import format_rational, parse_rational


def _to_fraction(value):
    if isinstance(value, Fraction):
        return value
    return parse_rational(value)


# exact rational, "num/den" on the wire
Rational = Annotated[
    Fraction,
    BeforeValidator(_to_fraction),
    PlainSerializer(format_rational, return_type=str, when_used="json"),
]


class RecordKind(enum.Enum):  # definition order is the ledger order
    type_i = "TypeI"      # subbundle of V (or of the unitary bundle)
    type_ii = "TypeII"    # subbundle containing L
    full_v = "FullV"      # the theta-invariant summand itself
    theta = "Theta"       # L plus the saturation of theta(L)
    degree = "Degree"     # theta_i must not vanish
    tail = "Tail"         # E_m + ... + E_N in a chain


class InequalityRecord(BaseModel):
    """
    One semistability inequality (constant + sum(symbols)) / divisor  vs  rhs.
    `subsets` holds one index tuple per marked point, in point order.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: RecordKind
    r: int
    delta: Optional[int] = None
    base_delta: Optional[int] = None
    ambient: Optional[int] = None
    subsets: tuple[tuple[int, ...], ...] = ()
    gw: Optional[int] = None
    constant: Rational = Fraction(0)
    symbols: tuple[str, ...] = ()
    divisor: int = 1
    lhs: Rational
    rhs: Rational
    strict: bool
    satisfied: bool

    @classmethod
    def build(
            cls,
            kind: RecordKind,
            *,
            r: int,
            constant: Fraction | int,
            terms: Iterable[tuple[str, Fraction]],
            rhs: Fraction,
            strict: bool,
            divisor: int = 1,
            **provenance,
    ) -> "InequalityRecord":
        terms = list(terms)
        lhs = (Fraction(constant) + sum((v for _, v in terms), Fraction(0))) / divisor
        return cls(
            kind=kind,
            r=r,
            constant=Fraction(constant),
            symbols=tuple(s for s, _ in terms),
            divisor=divisor,
            lhs=lhs,
            rhs=Fraction(rhs),
            strict=strict,
            satisfied=lhs < rhs if strict else lhs <= rhs,
            **provenance,
        )

    @property
    def gap(self) -> Fraction:
        return self.lhs - self.rhs

    @property
    def relation(self) -> str:
        return "<" if self.strict else "<="

    @property
    def sort_key(self) -> tuple:
        return (list(RecordKind).index(self.kind), self.r,
                self.delta if self.delta is not None else 0, self.subsets, self.symbols)

    @computed_field
    @property
    def expression(self) -> str:
        """ "(-2 + beta_4(0) + beta_3(0))/2" """
        pieces = [format_rational(self.constant)] if self.constant or not self.symbols else []
        pieces += list(self.symbols)
        body = " + ".join(pieces).replace("+ -", "- ")
        if self.divisor != 1:
            body = f"({body})/{self.divisor}"
        return body


class DegreeSolution(BaseModel):
    """A feasible choice of component degrees (with the integer k that produced it, if any)."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    degrees: tuple[int, ...]
    k: Optional[int] = None
    value: Optional[Rational] = None


class ShiftEntry(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    point: str
    component: str
    before: Rational
    after: Rational


class ExistenceReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    command: str
    exists: bool
    strict: bool
    total: int
    violated: int
    ledger: tuple[InequalityRecord, ...]
    solutions: tuple[DegreeSolution, ...] = ()
    shifts: tuple[ShiftEntry, ...] = ()
    degrees: dict[str, int] = {}

    @classmethod
    def from_records(
            cls,
            command: str,
            records: Sequence[InequalityRecord],
            *,
            strict: bool,
            **extra,
    ) -> "ExistenceReport":
        """Violations first (largest gap first), then the satisfied records in canonical order."""
        canonical = sorted(records, key=lambda rec: rec.sort_key)
        bad = sorted((rec for rec in canonical if not rec.satisfied), key=lambda rec: -rec.gap)
        good = [rec for rec in canonical if rec.satisfied]
        return cls(
            command=command,
            exists=not bad,
            strict=strict,
            total=len(canonical),
            violated=len(bad),
            ledger=tuple(bad + good),
            **extra,
        )

    @property
    def violations(self) -> tuple[InequalityRecord, ...]:
        return self.ledger[:self.violated]
