"""Exact Contou-Carrere symbols over F[e]/(e^n), big Witt vectors and reciprocity on P^1."""
from .errors import (
    BadParameter,
    CCSymError,
    DomainError,
    ExprSyntaxError,
    FieldOnly,
    InsufficientPrecision,
    InternalError,
    InvalidOrder,
    NonPrimeModulus,
    NotAUnit,
    NotInUnitGroup,
    RingMismatch,
    ShapeMismatch,
)
from .laurent import LaurentSeries
from .oracle import DistinguishedPoly, Matrix, det_over_k, factor_tdu, mult_matrix, symbol_oracle
from .p1 import (
    INF,
    Point,
    RationalFunction,
    local_expand,
    verify_cc_reciprocity,
    verify_residue_theorem,
    verify_weil,
    verify_witt_reciprocity,
)
from .parser import parse_element, parse_ratfunc, parse_series
from .ring import Ring, RingElement
from .symbol import contou_carrere, residue_from_symbol, symbol_exp_log, tame_symbol
from .witt import GhostVector, WittVector, ghost, res_w, unghost, witt_add, witt_mul
from .witt_params import WittParameters, unipotent_factor, witt_assemble, witt_factor

__version__ = "0.1.0"
