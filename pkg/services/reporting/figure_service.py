from __future__ import annotations

import logging
import math
from pathlib import Path
from typing import List, Sequence

from constants.enum import Classification, FigureId, Scenario
from services.config import get_service_config
from services.oracle.auditor import FIG1_FIXED, FIG2_FIXED, run_audit
from services.reporting.audit_report import write_audit_report
from services.reporting.sweep_service import SweepConfig, SweepRange, run_sweep

logger = logging.getLogger("deficit.sweep")

FIGURE_POINTS = 201
AUDIT_REPORT_NAME = "audit_report.txt"

_QUANTITIES = {
    FigureId.FIG1: "deficit and entropy of entanglement against psi (cat state)",
    FigureId.FIG2: "deficit and concurrence against theta (boundary spins, g1 = g4 = pi/2)",
}


def figure_config(
    figure: FigureId, outdir: Path, seed: int, tail: float, points: int = FIGURE_POINTS
) -> SweepConfig:
    figure = FigureId(figure)
    if figure is FigureId.FIG1:
        return SweepConfig(
            scenario=Scenario.CAT,
            fixed=dict(FIG1_FIXED),
            sweep=SweepRange(key="psi", start=0.0, stop=math.pi, count=points),
            out=Path(outdir) / "fig1.csv",
            seed=seed,
            tail=tail,
        )
    return SweepConfig(
        scenario=Scenario.KONDO,
        fixed=dict(FIG2_FIXED),
        sweep=SweepRange(key="theta", start=0.0, stop=math.pi, count=points),
        out=Path(outdir) / "fig2.csv",
        seed=seed,
        tail=tail,
    )


def emit_figure_datasets(
    which: Sequence[FigureId],
    outdir: Path,
    seed: int,
    tail: float = 1e-12,
    points: int = FIGURE_POINTS,
    workers: int = 1,
) -> List[Path]:
    """Figure datasets in the order requested, then the full audit report."""
    paths: List[Path] = []
    for figure in dict.fromkeys(FigureId(f) for f in which):
        config = figure_config(figure, outdir, seed, tail, points)
        paths.append(run_sweep(config, workers, quantity=f"{figure.value}: {_QUANTITIES[figure]}"))

    records = run_audit(workers=workers)
    deviating = [r.formula_id for r in records if r.classification is Classification.DEVIATES]
    logger.info("[AUDIT] %d records, deviating: %s", len(records), deviating)
    paths.append(
        write_audit_report(
            Path(outdir) / AUDIT_REPORT_NAME,
            records,
            get_service_config().audit.get_params_dict(),
            seed,
        )
    )
    return paths
