from .brute_force import (
    OracleAmplitudes,
    oracle_amplitudes,
    oracle_deficit,
    oracle_evolved,
    oracle_reduced,
)
from .truncation import poisson_tail, truncation_for_tolerance

__all__ = [
    "OracleAmplitudes",
    "oracle_amplitudes",
    "oracle_deficit",
    "oracle_evolved",
    "oracle_reduced",
    "poisson_tail",
    "truncation_for_tolerance",
]
