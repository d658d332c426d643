"""Command-line front end: sweeps, figure datasets, the formula audit and self-checks."""

from contextlib import contextmanager
from dataclasses import asdict
import logging
from pathlib import Path
from typing import Any, Dict, Iterator, List, NoReturn, Optional

import orjson
from pydantic import ValidationError as PydanticValidationError
import typer

from app import __version__
from app.config import settings
from app.logging_config import setup_logging
from constants.enum import FigureId, Scenario
from services.config import get_service_config
from services.oracle.auditor import run_audit
from services.phase.engine import phase_deficit
from services.reporting import (
    build_sweep_config,
    emit_figure_datasets,
    run_selftest,
    run_sweep,
    write_audit_report,
)
from services.scenarios import (
    cat_build,
    cat_closed,
    kondo_build,
    kondo_closed,
    micro_macro_build,
    micro_macro_closed,
    params_for,
)
from services.shared.exceptions import (
    AuditError,
    ConfigurationError,
    PersistenceError,
    ServiceError,
    TruncationError,
    UndefinedPhaseError,
    ValidationError,
)
from utils.parsing import parse_assignment, parse_number

logger = logging.getLogger("deficit")

EXIT_SELFTEST_FAILED = 1
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_UNDEFINED = 4

cli = typer.Typer(
    name="phase-deficit",
    help="Pancharatnam phase deficit: scenario sweeps, figure datasets and formula audit.",
    no_args_is_help=True,
    add_completion=False,
)

_BUILDERS = {
    Scenario.MICRO_MACRO: (micro_macro_build, micro_macro_closed),
    Scenario.CAT: (cat_build, cat_closed),
    Scenario.KONDO: (kondo_build, kondo_closed),
}


def _json_default(obj: Any) -> Any:
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _dumps(payload: Dict[str, Any]) -> str:
    return orjson.dumps(
        payload, default=_json_default, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2
    ).decode("utf-8")


def _fail(err: ServiceError, code: int) -> NoReturn:
    logger.error("[CLI] %s: %s", err.error_code, err.message)
    typer.echo(_dumps(err.to_dict()), err=True)
    raise typer.Exit(code)


@contextmanager
def _handled() -> Iterator[None]:
    """Map domain errors onto the documented exit codes."""
    try:
        yield
    except UndefinedPhaseError as e:
        _fail(e, EXIT_UNDEFINED)
    except (ConfigurationError, ValidationError, TruncationError, AuditError) as e:
        _fail(e, EXIT_CONFIG)
    except PydanticValidationError as e:
        _fail(
            ConfigurationError(
                "Invalid parameters",
                error_code="INVALID_PARAMETERS",
                context={"errors": [err["msg"] for err in e.errors()]},
                cause=e,
            ),
            EXIT_CONFIG,
        )
    except PersistenceError as e:
        _fail(e, EXIT_IO)
    except OSError as e:
        _fail(PersistenceError(str(e), error_code="IO_ERROR", cause=e), EXIT_IO)


def _workers(value: Optional[int]) -> int:
    return value if value is not None else settings.workers


@cli.callback()
def main(
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Override PHASE_LOG_LEVEL."),
) -> None:
    setup_logging(log_level or settings.effective_log_level, settings.log_file)


@cli.command()
def sweep(
    scenario: Optional[str] = typer.Option(None, "--scenario", help="micro_macro, cat or kondo."),
    assignments: Optional[List[str]] = typer.Option(
        None, "--set", help="Fixed parameter key=value; repeatable."
    ),
    sweep_range: Optional[str] = typer.Option(
        None, "--sweep", help="Swept parameter key=start:stop:count."
    ),
    out: Optional[Path] = typer.Option(None, "--out", help="Output CSV path."),
    seed: Optional[int] = typer.Option(None, "--seed"),
    tail: Optional[float] = typer.Option(None, "--tail", help="Fock truncation tail bound."),
    config: Optional[Path] = typer.Option(None, "--config", help="Flat key = value file."),
    workers: Optional[int] = typer.Option(None, "--workers", min=1),
) -> None:
    """Sweep one parameter of a scenario and write a CSV dataset."""
    with _handled():
        resolved = build_sweep_config(
            scenario=scenario,
            assignments=assignments or [],
            sweep=sweep_range,
            out=out,
            seed=seed,
            tail=tail,
            config_file=config,
            default_seed=settings.default_seed,
            default_tail=settings.default_tail,
        )
        path = run_sweep(resolved, _workers(workers))
    typer.echo(str(path))


@cli.command()
def figures(
    figure: Optional[List[FigureId]] = typer.Option(
        None, "--figure", help="fig1 and/or fig2; both when omitted."
    ),
    out: Path = typer.Option(Path("figures"), "--out", help="Output directory."),
    seed: Optional[int] = typer.Option(None, "--seed"),
    tail: Optional[float] = typer.Option(None, "--tail"),
    points: int = typer.Option(201, "--points", min=2),
    workers: Optional[int] = typer.Option(None, "--workers", min=1),
) -> None:
    """Write the figure datasets and the audit report."""
    with _handled():
        paths = emit_figure_datasets(
            figure or [FigureId.FIG1, FigureId.FIG2],
            out,
            seed=settings.default_seed if seed is None else seed,
            tail=settings.default_tail if tail is None else tail,
            points=points,
            workers=_workers(workers),
        )
    for path in paths:
        typer.echo(str(path))


@cli.command()
def audit(
    formula: Optional[List[str]] = typer.Option(
        None, "--formula", help="Formula id; repeatable, all when omitted."
    ),
    out: Optional[Path] = typer.Option(None, "--out", help="Audit report path."),
    seed: Optional[int] = typer.Option(None, "--seed"),
    workers: Optional[int] = typer.Option(None, "--workers", min=1),
) -> None:
    """Grade the published closed forms against the brute-force oracle."""
    with _handled():
        ids = list(formula) if formula else None
        records = run_audit(ids, workers=_workers(workers))
        if out is not None:
            write_audit_report(
                out,
                records,
                get_service_config().audit.get_params_dict(),
                settings.default_seed if seed is None else seed,
            )
    for record in records:
        err = "n/a" if record.max_abs_error is None else f"{record.max_abs_error:.3e}"
        typer.echo(
            f"{record.formula_id:<28} {record.classification.value:<10} {err:>10} "
            f"undefined={record.undefined_points}"
        )


@cli.command()
def selftest(
    seed: Optional[int] = typer.Option(None, "--seed"),
    count: int = typer.Option(200, "--count", min=1),
) -> None:
    """Product nullity, cross-path identity, Schmidt closed form and dynamical additivity."""
    summary = run_selftest(settings.default_seed if seed is None else seed, count)
    for check in summary.checks:
        status = "ok" if check.passed else "FAILED"
        typer.echo(
            f"{check.name:<22} {status:<6} max_error={check.max_error:.3e} "
            f"samples={check.samples} skipped={check.skipped}"
        )
    if not summary.passed:
        raise typer.Exit(EXIT_SELFTEST_FAILED)


@cli.command()
def evaluate(
    scenario: str = typer.Option(..., "--scenario"),
    assignments: Optional[List[str]] = typer.Option(None, "--set"),
    tail: Optional[float] = typer.Option(None, "--tail"),
) -> None:
    """Deficit report and published closed forms at one scenario point."""
    with _handled():
        try:
            kind = Scenario(scenario)
        except ValueError as e:
            raise ConfigurationError(
                f"Unknown scenario '{scenario}'", error_code="UNKNOWN_SCENARIO", cause=e
            ) from e
        values: Dict[str, float] = {}
        for item in assignments or []:
            key, raw = parse_assignment(item)
            values[key] = parse_number(raw)
        if kind is Scenario.CAT:
            values["tail"] = settings.default_tail if tail is None else tail
        params = params_for(kind, values)
        build, closed = _BUILDERS[kind]
        psi, local_set = build(params)
        report = phase_deficit(psi, local_set)
        payload = {
            "scenario": kind.value,
            "parameters": params.model_dump(),
            "report": report.to_dict(),
            "published": asdict(closed(params)),
            "version": __version__,
        }
        typer.echo(_dumps(payload))
        if not report.defined:
            report.global_phase.require("global")
            for i, phase in enumerate(report.local_phases):
                phase.require(f"local[{i}]")


def run() -> None:
    cli()


if __name__ == "__main__":
    run()
