# Domain packages
from .measures import entanglement_entropy, schmidt_entropy, wootters_concurrence
from .phase import phase_deficit, principal_arg
from .reporting import emit_figure_datasets, run_selftest, run_sweep

__all__ = [
    "principal_arg",
    "phase_deficit",
    "entanglement_entropy",
    "schmidt_entropy",
    "wootters_concurrence",
    "run_sweep",
    "emit_figure_datasets",
    "run_selftest",
]
