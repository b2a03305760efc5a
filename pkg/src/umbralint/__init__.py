"""Closed-form evaluation of Bessel-type integrals by umbral methods, with a quadrature oracle."""
from .closed_forms import (
    FAMILY_PARAMS, DomainCheck, FamilyInvocation, check_domain, eval_A, eval_E, eval_I,
    eval_Omega, eval_Psi, eval_Theta, eval_tricomi_int, eval_tricomi_moment, eval_Upsilon,
    eval_Xi, evaluate,
)
from .errors import (
    ConvergenceError, DomainError, IntegerOrderError, NoMatchError, ParseError, PoleError,
    ResidualError, TruncationError, UmbralError, UnsupportedError,
)
from .oracle import OracleResult, oracle_for
from .parser import match_family, parse
from .specfun.series import DEFAULT_CONFIG, EvalConfig

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_CONFIG", "FAMILY_PARAMS", "ConvergenceError", "DomainCheck", "DomainError",
    "EvalConfig", "FamilyInvocation", "IntegerOrderError", "NoMatchError", "OracleResult",
    "ParseError", "PoleError", "ResidualError", "TruncationError", "UmbralError",
    "UnsupportedError", "check_domain", "eval_A", "eval_E", "eval_I", "eval_Omega", "eval_Psi",
    "eval_Theta", "eval_Upsilon", "eval_Xi", "eval_tricomi_int", "eval_tricomi_moment",
    "evaluate", "match_family", "oracle_for", "parse",
]
