from enum import Enum


class OperatorKind(str, Enum):
    GENERAL = "general"
    UNITARY = "unitary"
    HERMITIAN = "hermitian"
    DENSITY = "density"


class Scenario(str, Enum):
    MICRO_MACRO = "micro_macro"
    CAT = "cat"
    KONDO = "kondo"


class Classification(str, Enum):
    CONFIRMED = "CONFIRMED"
    DEVIATES = "DEVIATES"


class FormulaId(str, Enum):
    MICRO_MACRO_CLOSED = "micro_macro_closed"
    CAT_TRACE_AB = "cat_closed.trace_ab"
    CAT_TRACE_A = "cat_closed.trace_a"
    CAT_TRACE_B = "cat_closed.trace_b"
    CAT_DELTA = "cat_closed.delta"
    CAT_ENTROPY = "cat_closed.entropy"
    KONDO_GLOBAL = "kondo_closed.global"
    KONDO_LOCALS = "kondo_closed.locals"
    KONDO_DELTA = "kondo_closed.delta"
    KONDO_E_FROM_DELTA = "kondo_closed.e_from_delta"
    KONDO_CONCURRENCE = "kondo_concurrence"


class Unit(str, Enum):
    RADIANS = "radians"
    NATS = "nats"
    BITS = "bits"
    DIMENSIONLESS = "dimensionless"


class FigureId(str, Enum):
    FIG1 = "fig1"
    FIG2 = "fig2"
