from .engine import (
    apply_locals,
    deficit_closed_form_schmidt,
    dynamical_deficit,
    dynamical_phase,
    dynamical_phase_mixed,
    geometric_phase,
    pancharatnam_mixed,
    pancharatnam_pure,
    phase_deficit,
)
from .principal import arctan_pair, principal_arg, wrap_phase

__all__ = [
    "principal_arg",
    "arctan_pair",
    "wrap_phase",
    "pancharatnam_pure",
    "pancharatnam_mixed",
    "dynamical_phase",
    "dynamical_phase_mixed",
    "dynamical_deficit",
    "geometric_phase",
    "apply_locals",
    "phase_deficit",
    "deficit_closed_form_schmidt",
]
