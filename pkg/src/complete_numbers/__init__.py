"""Exact arithmetic for complete numbers: indexed complex values with an
up (Vastavic) part and a down (Calpanic) part, division by exact zero,
and a seeded law checker."""

from .algebra import (
    VOID,
    CompleteNumber,
    IndexedComplex,
    Mode,
    Void,
    cn_add,
    cn_div,
    cn_eq,
    cn_mul,
    cn_mul_expanded,
    cn_sub,
    down,
    embed,
    ic_add,
    ic_modulus,
    ic_mul,
    ic_sub,
    purify,
    shadow,
    special_div,
    up,
)
from .evaluate import evaluate, evaluate_text, format_value
from .exact import Complex, Radical, Rational, c_add, c_div, c_modulus, c_mul, c_sub
from .index import DOWN, UP, Index, index_abs, index_div, index_mul
from .laws import LawReport, TrialConfig, check_law, gen_complete, run_suite

__all__ = [
    "VOID", "CompleteNumber", "IndexedComplex", "Mode", "Void",
    "cn_add", "cn_div", "cn_eq", "cn_mul", "cn_mul_expanded", "cn_sub",
    "down", "embed", "ic_add", "ic_modulus", "ic_mul", "ic_sub", "purify",
    "shadow", "special_div", "up",
    "evaluate", "evaluate_text", "format_value",
    "Complex", "Radical", "Rational", "c_add", "c_div", "c_modulus", "c_mul", "c_sub",
    "DOWN", "UP", "Index", "index_abs", "index_div", "index_mul",
    "LawReport", "TrialConfig", "check_law", "gen_complete", "run_suite",
]
