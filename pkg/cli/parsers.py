from __future__ import annotations

import json

from pydantic import ValidationError

from checkers.exceptions import CheckerError
from shared.logger import get_logger
from .schemas import ProblemFile

logger = get_logger(__name__)

# pydantic's own error types -> our diagnostic codes
_BUILTIN_CODES = {
    "missing": "MISSING_FIELD",
}


class ProblemFileError(CheckerError):
    """Problem file rejected; `code` names the rule, `location` the first offending field"""

    def __init__(self, code: str, location: str, message: str) -> None:
        super().__init__(f"[{code}] {location}: {message}")
        self.code = code
        self.location = location
        self.message = message


def parse_problem_file(text: str | bytes) -> ProblemFile:
    """
    Validates a JSON problem file; bytes must be UTF-8.
    Example: parse_problem_file('{"schema": "hodge11", "points": [...]}') -> ProblemFile(kind="hodge11", ...)
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ProblemFileError("BAD_ENCODING", f"byte {exc.start}", "file is not valid UTF-8") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFileError("BAD_JSON", f"line {exc.lineno} column {exc.colno}", exc.msg) from exc
    if not isinstance(data, dict):
        raise ProblemFileError("BAD_JSON", "$", "top level must be an object")
    if "schema" not in data:
        raise ProblemFileError("MISSING_FIELD", "schema", "the schema field is mandatory")

    try:
        return ProblemFile.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        kind = first["type"]
        code = kind if kind.isupper() else _BUILTIN_CODES.get(kind, "BAD_TYPE")
        location = (first.get("ctx") or {}).get("location") or ".".join(str(part) for part in first["loc"]) or "$"
        logger.debug("problem file rejected: %s", first)
        raise ProblemFileError(code, str(location), first["msg"]) from exc


def emit_problem(problem: ProblemFile, indent: int = 2) -> str:
    """Canonical JSON text of a problem; parse_problem_file(emit_problem(p)) == p."""
    data = problem.model_dump(mode="json", by_alias=True, exclude_none=True)
    return json.dumps(data, indent=indent, ensure_ascii=False) + "\n"
