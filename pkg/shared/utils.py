import re
import string
from fractions import Fraction

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


class SafeFormatter(string.Formatter):
    """
    We skip missing {args} instead of raising KeyValue and return placeholder.
    """
    def get_value(self, key, args, kwargs):
        if isinstance(key, str):
            if key in kwargs:
                return kwargs[key]
            return "{" + key + "}"
        return super().get_value(key, args, kwargs)


def stringify(template: str, /, **kwargs) -> str:
    """
    Used to safely format string, skip missing {args} instead of raising KeyValue.
    Returns placeholders inside {} if arg is missing.
    Example: stringify("k={k}; degrees {degrees}", k=0) -> "k=0; degrees {degrees}"
    """
    return SafeFormatter().vformat(template, args=(), kwargs=kwargs)


# rationals

def parse_rational(raw: str | int) -> Fraction:
    """
    Parses "num/den" or a plain integer into an exact Fraction.
    Raises ZeroDivisionError on a zero denominator and ValueError on anything else malformed.
    Example: parse_rational("-2/8") -> Fraction(-1, 4)
    """
    if isinstance(raw, bool):
        raise ValueError(f"not a rational: {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    match = _RATIONAL.match(raw) if isinstance(raw, str) else None
    if match is None:
        raise ValueError(f"not a rational: {raw!r}")
    num, den = match.groups()
    if den is None:
        return Fraction(int(num))
    if int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {raw!r}")
    return Fraction(int(num), int(den))


def format_rational(value: Fraction | int) -> str:
    """Reduced form with positive denominator, integers without "/1"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# partitions and subsets on the command line

def _int_list(raw: str, brackets: str) -> tuple[int, ...]:
    body = raw.strip()
    if body[:1] in brackets:
        body = body[1:]
    if body[-1:] in brackets:
        body = body[:-1]
    items = [piece.strip() for piece in body.split(",") if piece.strip()]
    return tuple(int(piece) for piece in items)


def parse_partition(raw: str) -> tuple[int, ...]:
    """
    "(2,1)" / "2,1" / "()" -> parts without trailing zeros.
    Example: parse_partition("(2,0)") -> (2,)
    """
    parts = _int_list(raw, "()[]")
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not a partition: {raw!r}")
    return tuple(p for p in parts if p)


def parse_subset(raw: str) -> tuple[int, ...]:
    """ "{1,3}" / "1,3" -> (1, 3); ordering is checked by SchubertSubset itself."""
    return _int_list(raw, "{}()[]")
