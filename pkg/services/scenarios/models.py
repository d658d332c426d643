from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
import math
from typing import Dict, NamedTuple, Optional

from pydantic import BaseModel, ConfigDict, Field

from constants.enum import Scenario
from services.oracle.truncation import truncation_for_tolerance
from services.shared.types import FockSpec, LocalUnitarySet, StateVector


# Parameter models
class MicroMacroParams(BaseModel):
    """sqrt(l0)|00> + sqrt(1 - l0)|11>, each factor phased on its second level."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    lambda0: float = Field(gt=0.0, le=1.0)
    g1: float = 0.0
    g2: float = 0.0

    @property
    def lambda1(self) -> float:
        return 1.0 - self.lambda0


class CatParams(BaseModel):
    """(k|a_-, g> + k*|a_+, e>)/sqrt(2), k = e^{-i psi}, a_- = sqrt(n_-) e^{i xi}."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    n_minus: float = Field(ge=0.0)
    n_plus: float = Field(ge=0.0)
    xi: float = 0.0
    psi: float = 0.0
    theta: float = 0.0
    tail: float = Field(default=1e-12, gt=0.0, lt=1.0)
    n_max: Optional[int] = Field(default=None, ge=0)

    @cached_property
    def fock(self) -> FockSpec:
        auto = truncation_for_tolerance(max(self.n_minus, self.n_plus), self.tail)
        if self.n_max is None:
            return auto
        return FockSpec(n_max=self.n_max, tail_bound=auto.tail_bound)

    @property
    def mean_photon(self) -> float:
        """sqrt(n_- n_+)."""
        return math.sqrt(self.n_minus * self.n_plus)

    @property
    def alpha_minus(self) -> complex:
        return math.sqrt(self.n_minus) * complex(math.cos(self.xi), math.sin(self.xi))

    @property
    def alpha_plus(self) -> complex:
        return complex(math.sqrt(self.n_plus), 0.0)

    @property
    def k(self) -> complex:
        return complex(math.cos(self.psi), -math.sin(self.psi))


class KondoParams(BaseModel):
    """Four spins 1..4 with only the outer two driven."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    theta: float = 0.0
    g1: float = 0.0
    g4: float = 0.0


SCENARIO_PARAMS = {
    Scenario.MICRO_MACRO: MicroMacroParams,
    Scenario.CAT: CatParams,
    Scenario.KONDO: KondoParams,
}


def scenario_keys(scenario: Scenario) -> tuple[str, ...]:
    return tuple(SCENARIO_PARAMS[Scenario(scenario)].model_fields)


def params_for(scenario: Scenario, values: Dict[str, float]) -> BaseModel:
    """Validate a flat key/value mapping into the scenario's parameter model."""
    return SCENARIO_PARAMS[Scenario(scenario)].model_validate(values)


# Build and closed-form results
class ScenarioSetup(NamedTuple):
    initial: StateVector
    locals: LocalUnitarySet


@dataclass(frozen=True)
class MicroMacroClosedForm:
    phi_global: Optional[float]
    phi_a: Optional[float]
    phi_b: Optional[float]
    delta: Optional[float]


@dataclass(frozen=True)
class MicroMacroInversion:
    lambda0: float
    lambda1: float
    entropy_nats: float


@dataclass(frozen=True)
class CatClosedForm:
    trace_ab: complex
    trace_a: complex
    trace_b: complex
    delta: Optional[float]
    entropy_bits: Optional[float]


@dataclass(frozen=True)
class KondoClosedForm:
    phi_global: Optional[float]
    phi_1: Optional[float]
    phi_4: Optional[float]
    delta: Optional[float]
    e_from_delta: Optional[float]
