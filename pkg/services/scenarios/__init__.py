from .cat import cat_build, cat_closed
from .kondo import (
    kondo_build,
    kondo_closed,
    kondo_concurrence,
    kondo_e_from_delta,
    kondo_evolved_published,
)
from .micro_macro import (
    micro_macro_build,
    micro_macro_closed,
    micro_macro_evolved_published,
    micro_macro_invert,
)
from .models import (
    CatClosedForm,
    CatParams,
    KondoClosedForm,
    KondoParams,
    MicroMacroClosedForm,
    MicroMacroInversion,
    MicroMacroParams,
    ScenarioSetup,
    params_for,
    scenario_keys,
)

__all__ = [
    "MicroMacroParams",
    "CatParams",
    "KondoParams",
    "ScenarioSetup",
    "MicroMacroClosedForm",
    "MicroMacroInversion",
    "CatClosedForm",
    "KondoClosedForm",
    "params_for",
    "scenario_keys",
    "micro_macro_build",
    "micro_macro_closed",
    "micro_macro_invert",
    "micro_macro_evolved_published",
    "cat_build",
    "cat_closed",
    "kondo_build",
    "kondo_closed",
    "kondo_concurrence",
    "kondo_e_from_delta",
    "kondo_evolved_published",
]
