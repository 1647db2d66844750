"""Exact algebra of real-time energy functions and automata built on it."""

from .algebra import (
    Atom,
    BOTTOM,
    Energy,
    INFINITY,
    LinearRtef,
    Rtef,
    TIME_INF,
    Time,
    atom,
    leq_linear,
    normalize,
    precedes,
)
from .matrix import (
    AutomatonRep,
    RtefMatrix,
    buchi_behavior,
    finite_behavior,
    mat_mul,
    mat_omega_accepting,
    mat_star,
    mat_sup,
)
from .model import ModelError, RteaModel, Transition, parse_model, serialize_model, to_matrix_rep
from .omega import OmegaVal, act, eval_omega, omega_of, sup_omega
from .rational import format_rational, parse_rational
from .algebra import order_witness
from .regions import RegionPiece, extract_regions, function_json, region_eval

__version__ = "0.1.0"

__all__ = [
    "Atom",
    "AutomatonRep",
    "BOTTOM",
    "Energy",
    "INFINITY",
    "LinearRtef",
    "ModelError",
    "OmegaVal",
    "RegionPiece",
    "Rtef",
    "RtefMatrix",
    "RteaModel",
    "TIME_INF",
    "Time",
    "Transition",
    "act",
    "atom",
    "buchi_behavior",
    "eval_omega",
    "extract_regions",
    "finite_behavior",
    "format_rational",
    "function_json",
    "leq_linear",
    "mat_mul",
    "mat_omega_accepting",
    "mat_star",
    "mat_sup",
    "normalize",
    "omega_of",
    "order_witness",
    "parse_model",
    "parse_rational",
    "precedes",
    "region_eval",
    "serialize_model",
    "sup_omega",
    "to_matrix_rep",
]
