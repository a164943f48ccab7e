"""ldcheck: a proof checker for a calculus of constructions with definitions,
plus a machine-checked group-theory corpus written in its .ld surface syntax."""

from .env import Definition, Environment
from .errors import (
    ArityMismatch,
    DuplicateName,
    FuelExhausted,
    LDError,
    NotAFunction,
    ParseError,
    SortError,
    TypeMismatch,
    UnboundName,
    UnboundVariable,
    UnderflowError,
    UnknownConstant,
)
from .reduce import DEFAULT_FUEL, Fuel, OPAQUE, convertible, delta_unfold, normalize, whnf
from .terms import (
    App,
    BOX,
    Const,
    Lam,
    Pi,
    Sort,
    SortRef,
    STAR,
    Term,
    Var,
    alpha_eq,
    shift,
    subst,
)
from .typecheck import check_definition, check_environment, check_type, infer_type

__all__ = [
    "App",
    "ArityMismatch",
    "BOX",
    "Const",
    "DEFAULT_FUEL",
    "Definition",
    "DuplicateName",
    "Environment",
    "Fuel",
    "FuelExhausted",
    "LDError",
    "Lam",
    "NotAFunction",
    "OPAQUE",
    "ParseError",
    "Pi",
    "STAR",
    "Sort",
    "SortError",
    "SortRef",
    "Term",
    "TypeMismatch",
    "UnboundName",
    "UnboundVariable",
    "UnderflowError",
    "UnknownConstant",
    "Var",
    "alpha_eq",
    "check_definition",
    "check_environment",
    "check_type",
    "convertible",
    "delta_unfold",
    "infer_type",
    "normalize",
    "shift",
    "subst",
    "whnf",
]
