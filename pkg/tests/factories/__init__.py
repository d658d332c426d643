from .scenario_factories import CatParamsFactory, KondoParamsFactory, MicroMacroParamsFactory
from .state_factories import SHAPES, LocalsFactory, StateFactory

__all__ = [
    "SHAPES",
    "StateFactory",
    "LocalsFactory",
    "MicroMacroParamsFactory",
    "CatParamsFactory",
    "KondoParamsFactory",
]
