from .audit_report import parse_audit_report, render_audit_report, write_audit_report
from .csv_writer import UNDEFINED_TOKEN, DatasetColumn, format_value, render_dataset, write_dataset
from .figure_service import emit_figure_datasets, figure_config
from .rows import evaluate_row, sweep_columns
from .selftest import SelfTestCheck, SelfTestSummary, run_selftest
from .sweep_service import SweepConfig, SweepRange, build_sweep_config, run_sweep

__all__ = [
    "UNDEFINED_TOKEN",
    "DatasetColumn",
    "format_value",
    "render_dataset",
    "write_dataset",
    "evaluate_row",
    "sweep_columns",
    "SweepConfig",
    "SweepRange",
    "build_sweep_config",
    "run_sweep",
    "emit_figure_datasets",
    "figure_config",
    "render_audit_report",
    "write_audit_report",
    "parse_audit_report",
    "SelfTestCheck",
    "SelfTestSummary",
    "run_selftest",
]
