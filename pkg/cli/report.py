import json
from typing import Literal

from shared import locale
from shared.schemas import ExistenceReport, InequalityRecord
from shared.utils import format_rational, stringify


def _subsets(record: InequalityRecord) -> str:
    if not record.subsets:
        return ""
    return " subsets=(" + ",".join("{" + ",".join(map(str, s)) + "}" for s in record.subsets) + ")"


def render_record(record: InequalityRecord) -> str:
    return stringify(
        locale.RECORD,
        status=locale.STATUS_OK if record.satisfied else locale.STATUS_BAD,
        kind=record.kind.value,
        r=record.r,
        delta="" if record.delta is None else f" delta={record.delta}",
        gw="" if record.gw is None else f" gw={record.gw}",
        subsets=_subsets(record),
        expression=record.expression,
        relation=record.relation,
        rhs=format_rational(record.rhs),
        lhs=format_rational(record.lhs),
        gap=format_rational(record.gap),
    )


def _verdict_line(report: ExistenceReport) -> str:
    line = locale.VERDICT_EXISTS if report.exists else locale.VERDICT_NOT_EXISTS
    if report.solutions:
        first = report.solutions[0]
        degrees = ",".join(map(str, first.degrees))
        template = locale.SOLUTION if first.k is not None else locale.SOLUTION_NO_K
        line += "; " + stringify(template, k=first.k, degrees=degrees)
    return line


def emit_report(report: ExistenceReport, fmt: Literal["text", "json"] = "text", *, indent: int = 2) -> str:
    """
    Deterministic rendering: identical reports give identical bytes.
    Text: verdict line, then (if there is anything to show) mode, summary, degrees, shifts, records.
    """
    if fmt == "json":
        return json.dumps(report.model_dump(mode="json"), indent=indent, ensure_ascii=False) + "\n"

    lines = [_verdict_line(report)]
    for extra in report.solutions[1:]:
        template = locale.SOLUTION if extra.k is not None else locale.SOLUTION_NO_K
        lines.append("  " + stringify(template, k=extra.k, degrees=",".join(map(str, extra.degrees))))
    if not report.ledger:
        return "\n".join(lines) + "\n"

    lines.append(stringify(
        locale.MODE, mode="stable" if report.strict else "semistable", relation="<" if report.strict else "<=",
    ))
    lines.append(stringify(locale.SUMMARY, total=report.total, violated=report.violated))
    if report.degrees:
        lines.append(stringify(
            locale.DEGREES, degrees=" ".join(f"{key}={value}" for key, value in report.degrees.items()),
        ))
    for shift in report.shifts:
        lines.append(stringify(
            locale.SHIFT, point=shift.point, component=shift.component,
            before=format_rational(shift.before), after=format_rational(shift.after),
        ))
    lines.extend(render_record(record) for record in report.ledger)
    return "\n".join(lines) + "\n"
