"""Entangled cat state of a field mode and a two-level system.

The qubit level |g> is index 0 and |e> is index 1; the mode is the slow
Kronecker factor. Locals are exp(-i theta N) on the mode and sigma_x on
the qubit.
"""

from __future__ import annotations

import logging
import math

import numpy as np
from scipy.special import xlogy

from services.oracle.truncation import poisson_tail
from services.phase.principal import arctan_pair, wrap_phase
from services.qstate.fock import coherent_state, number_phase_unitary
from services.qstate.gates import pauli_x
from services.scenarios.models import CatClosedForm, CatParams, ScenarioSetup
from services.shared.exceptions import TruncationError
from services.shared.types import LocalUnitarySet, StateVector

logger = logging.getLogger("deficit")


def cat_build(params: CatParams) -> ScenarioSetup:
    spec = params.fock
    achieved = max(
        poisson_tail(spec.n_max, params.n_minus), poisson_tail(spec.n_max, params.n_plus)
    )
    if achieved >= params.tail:
        raise TruncationError(
            "Fock cutoff leaves more than the allowed tail probability",
            error_code="TAIL_ABOVE_TOLERANCE",
            context={"n_max": spec.n_max, "tail": achieved, "tolerance": params.tail},
        )

    minus = coherent_state(params.alpha_minus, spec).amplitudes
    plus = coherent_state(params.alpha_plus, spec).amplitudes
    ground = np.array([1.0, 0.0], dtype=np.complex128)
    excited = np.array([0.0, 1.0], dtype=np.complex128)
    k = params.k
    amps = (k * np.kron(minus, ground) + k.conjugate() * np.kron(plus, excited)) / math.sqrt(2.0)
    initial = StateVector.from_amplitudes(amps, (spec.dimension, 2), normalize=True)

    local_set = LocalUnitarySet((number_phase_unitary(params.theta, spec), pauli_x()))
    logger.debug("[CAT] built n_max=%d tail=%.3e", spec.n_max, achieved)
    return ScenarioSetup(initial, local_set)


def _published_traces(params: CatParams) -> tuple[complex, complex, complex]:
    nm, np_, n = params.n_minus, params.n_plus, params.mean_photon
    xi, theta = params.xi, params.theta
    k2 = params.k**2
    kc2 = k2.conjugate()

    em = math.exp(n * math.cos(xi - theta))
    ep = math.exp(n * math.cos(xi + theta))
    sm, sp = n * math.sin(xi - theta), n * math.sin(xi + theta)
    pre = 0.5 * math.exp(-0.5 * (nm + np_))
    trace_ab = pre * (
        (k2 * em * math.cos(sm) + kc2 * ep * math.cos(sp))
        + 1j * (k2 * em * math.sin(sm) - kc2 * ep * math.sin(sp))
    )

    dm, dp = math.exp(nm * (math.cos(theta) - 1.0)), math.exp(np_ * (math.cos(theta) - 1.0))
    am, ap = nm * math.sin(theta), np_ * math.sin(theta)
    trace_a = 0.5 * (
        (dm * math.cos(am) + dp * math.cos(ap)) - 1j * (dm * math.sin(am) + dp * math.sin(ap))
    )

    pre_b = 0.5 * math.exp(-0.5 * (nm + np_) + n * math.cos(xi))
    s = n * math.sin(xi)
    trace_b = pre_b * ((k2 + kc2) * math.cos(s) + 1j * (k2 - kc2) * math.sin(s))
    return complex(trace_ab), complex(trace_a), complex(trace_b)


def _published_delta(params: CatParams) -> float | None:
    """Three-term arctangent expression as printed.

    The printed numerators and denominators carry k^2 and k*^2 and so are
    complex; each arctangent is taken of their real parts. The third
    denominator (k^2 - k*^2) is purely imaginary, so that term is +-pi/2
    or undefined.
    """
    nm, np_, n = params.n_minus, params.n_plus, params.mean_photon
    xi, theta = params.xi, params.theta
    k2 = params.k**2
    kc2 = k2.conjugate()

    em = math.exp(n * math.cos(xi - theta))
    ep = math.exp(n * math.cos(xi + theta))
    sm, sp = n * math.sin(xi - theta), n * math.sin(xi + theta)
    num1 = k2 * em * math.sin(sm) - kc2 * ep * math.sin(sp)
    den1 = k2 * em * math.cos(sm) + kc2 * ep * math.cos(sp)

    dm, dp = math.exp(nm * (math.cos(theta) - 1.0)), math.exp(np_ * (math.cos(theta) - 1.0))
    am, ap = nm * math.sin(theta), np_ * math.sin(theta)
    num2 = -dm * math.sin(am) - dp * math.sin(ap)
    den2 = dm * math.cos(am) + dp * math.cos(ap)

    s = n * math.sin(xi)
    num3 = (k2 + kc2) * math.sin(s)
    den3 = (k2 - kc2) * math.cos(s)

    terms = [
        arctan_pair(num1.real, den1.real),
        arctan_pair(num2, den2),
        arctan_pair(num3.real, den3.real),
    ]
    if not all(t.defined for t in terms):
        return None
    return wrap_phase(terms[0].phase - terms[1].phase - terms[2].phase)


def _published_entropy_bits(params: CatParams) -> float | None:
    """Closed-form entropy in bits; undefined once the overlap term exceeds one."""
    kk = (params.k * params.k.conjugate()).real
    x = kk * math.exp(
        -0.5 * params.n_minus
        - 0.5 * params.n_plus
        + params.n_minus * params.n_plus * math.cos(params.xi)
    )
    if not math.isfinite(x) or x > 1.0:
        return None
    scale = 1.0 / (2.0 * math.log(2.0))
    return float(scale * xlogy(x - 1.0, 0.5 * (1.0 - x)) - scale * xlogy(1.0 + x, 0.5 * (1.0 + x)))


def cat_closed(params: CatParams) -> CatClosedForm:
    trace_ab, trace_a, trace_b = _published_traces(params)
    return CatClosedForm(
        trace_ab=trace_ab,
        trace_a=trace_a,
        trace_b=trace_b,
        delta=_published_delta(params),
        entropy_bits=_published_entropy_bits(params),
    )
