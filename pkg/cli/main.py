from pathlib import Path
from typing import Optional

import typer

from calculus.exceptions import SchubertError
from checkers.exceptions import CheckerError
from cli.loader import logger, settings
from shared import locale
from shared.utils import stringify
from .commands import Flags, run_command, run_gw, run_ggw, run_qprod
from .parsers import ProblemFileError, parse_problem_file
from .report import emit_report

app = typer.Typer(add_completion=False, no_args_is_help=True, help=locale.APP_HELP)

EXIT_EXISTS, EXIT_NOT_EXISTS, EXIT_INPUT = 0, 1, 2


def _fail(exc: Exception) -> None:
    if isinstance(exc, ProblemFileError):
        text = stringify(locale.ERR_INPUT, code=exc.code, location=exc.location, message=exc.message)
    else:
        text = stringify(locale.ERR_RUN, message=str(exc))
    logger.error(text)
    typer.echo(text, err=True)
    raise typer.Exit(EXIT_INPUT)


def _check(command: str, path: Path, strict: Optional[bool], as_json: bool, search: bool = False) -> None:
    try:
        problem = parse_problem_file(path.read_bytes())
        flags = Flags(
            strict=strict,
            search_degrees=search,
            workers=settings.workers,
            default_strict=settings.default_strict,
        )
        report = run_command(command, problem, flags)
    except (ProblemFileError, CheckerError, SchubertError, OSError, KeyError) as exc:
        _fail(exc)
        return
    typer.echo(emit_report(report, "json" if as_json else "text", indent=settings.json_indent), nl=False)
    raise typer.Exit(EXIT_EXISTS if report.exists else EXIT_NOT_EXISTS)


def _calc(func, *args) -> None:
    try:
        typer.echo(func(*args))
    except (SchubertError, ValueError) as exc:
        _fail(exc)


# calculators

@app.command("qprod", help=locale.CMD_QPROD)
def qprod(r: int, n: int, lam: str, mu: str) -> None:
    _calc(run_qprod, r, n, lam, mu)


@app.command("gw", help=locale.CMD_GW)
def gw(
        r: int,
        n: int,
        classes: list[str],
        d: int = typer.Option(0, "--d", help=locale.OPT_D),
) -> None:
    _calc(run_gw, r, n, classes, d)


@app.command("ggw", help=locale.CMD_GGW)
def ggw(
        r: int,
        n: int,
        subsets: list[str],
        d: int = typer.Option(0, "--d", help=locale.OPT_D),
        big_d: int = typer.Option(0, "--D", help=locale.OPT_BIG_D),
) -> None:
    _calc(run_ggw, r, n, subsets, d, big_d)


# checkers

_STRICT = typer.Option(None, "--strict/--semistable", help=locale.OPT_STRICT)
_JSON = typer.Option(False, "--json", help=locale.OPT_JSON)


@app.command("check-1n", help=locale.CMD_CHECK_1N)
def check_1n(path: Path, strict: Optional[bool] = _STRICT, as_json: bool = _JSON) -> None:
    _check("check-1n", path, strict, as_json)


@app.command("check-12", help=locale.CMD_CHECK_12)
def check_12(path: Path, strict: Optional[bool] = _STRICT, as_json: bool = _JSON) -> None:
    _check("check-12", path, strict, as_json)


@app.command("check-11", help=locale.CMD_CHECK_11)
def check_11(path: Path, as_json: bool = _JSON) -> None:
    _check("check-11", path, True, as_json)


@app.command("check-111", help=locale.CMD_CHECK_111)
def check_111(
        path: Path,
        strict: Optional[bool] = _STRICT,
        as_json: bool = _JSON,
        search: bool = typer.Option(False, "--search-degrees", help=locale.OPT_SEARCH),
) -> None:
    _check("check-111", path, strict, as_json, search)


@app.command("check-chain", help=locale.CMD_CHECK_CHAIN)
def check_chain(path: Path, strict: Optional[bool] = _STRICT, as_json: bool = _JSON) -> None:
    _check("check-chain", path, strict, as_json)


@app.command("check-unitary", help=locale.CMD_CHECK_UNITARY)
def check_unitary(path: Path, strict: Optional[bool] = _STRICT, as_json: bool = _JSON) -> None:
    _check("check-unitary", path, strict, as_json)


@app.command("biswas", help=locale.CMD_BISWAS)
def biswas(path: Path, as_json: bool = _JSON) -> None:
    _check("biswas", path, True, as_json)
