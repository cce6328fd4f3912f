"""Evaluate parsed expressions to pure, full or void values."""

from __future__ import annotations

from functools import singledispatch

from . import syntax as ast
from .algebra import (
    VOID,
    CompleteNumber,
    EvalValue,
    IndexedComplex,
    Mode,
    Void,
    cn_add,
    cn_div,
    cn_mul,
    cn_sub,
    embed,
    ic_add,
    ic_modulus,
    ic_mul,
    ic_sub,
    special_div,
)
from .errors import IrrationalModulus, ModulusOfFull, RetagOfFull
from .exact import Complex
from .index import DOWN, UP


def _to_full(v) -> CompleteNumber:
    return embed(v) if isinstance(v, IndexedComplex) else v


def _binary(pure_op, full_op, a, b, mode):
    if a is VOID or b is VOID:
        return VOID
    if isinstance(a, IndexedComplex) and isinstance(b, IndexedComplex):
        if a.index is b.index:
            return pure_op(a, b, mode)
    return full_op(_to_full(a), _to_full(b))


_PURE = {
    ast.Add: lambda a, b, mode: ic_add(a, b),
    ast.Sub: lambda a, b, mode: ic_sub(a, b),
    ast.Mul: lambda a, b, mode: ic_mul(a, b),
    ast.Div: special_div,
}
_FULL = {ast.Add: cn_add, ast.Sub: cn_sub, ast.Mul: cn_mul, ast.Div: cn_div}


def evaluate(expr: ast.Expr, mode: Mode = Mode.STRICT) -> EvalValue:
    mode = Mode(mode)
    return _eval(expr, mode)


@singledispatch
def _eval(expr, mode):
    raise TypeError(f"not an expression node: {expr!r}")


@_eval.register
def _(expr: ast.Number, mode):
    return IndexedComplex(UP, Complex(expr.value, 0))


@_eval.register
def _(expr: ast.ImagUnit, mode):
    return IndexedComplex(UP, Complex(0, 1))


def _retag(expr, mode, index):
    v = _eval(expr.operand, mode)
    if v is VOID:
        return VOID
    if isinstance(v, CompleteNumber):
        raise RetagOfFull(f"cannot apply {index}() to the complete number {format_value(v)}")
    return IndexedComplex(index, v.value)


@_eval.register
def _(expr: ast.Up, mode):
    return _retag(expr, mode, UP)


@_eval.register
def _(expr: ast.Down, mode):
    return _retag(expr, mode, DOWN)


@_eval.register
def _(expr: ast.Abs, mode):
    v = _eval(expr.operand, mode)
    if v is VOID:
        return VOID
    if isinstance(v, CompleteNumber):
        raise ModulusOfFull(f"modulus of the complete number {format_value(v)} is undefined")
    index, radical = ic_modulus(v)
    if radical.exact_root is None:
        raise IrrationalModulus(f"|{format_value(v)}| = {radical} is not rational")
    return IndexedComplex(index, Complex(radical.exact_root, 0))


@_eval.register
def _(expr: ast.Neg, mode):
    # Negation keeps the index: -down(z) is down(-z), not up(0) - down(z).
    v = _eval(expr.operand, mode)
    if v is VOID:
        return VOID
    if isinstance(v, IndexedComplex):
        return IndexedComplex(v.index, -v.value)
    return -v


@_eval.register(ast.Add)
@_eval.register(ast.Sub)
@_eval.register(ast.Mul)
@_eval.register(ast.Div)
def _(expr, mode):
    a = _eval(expr.left, mode)
    b = _eval(expr.right, mode)
    kind = type(expr)
    return _binary(_PURE[kind], _FULL[kind], a, b, mode)


def format_value(v: EvalValue) -> str:
    """Canonical text; every non-void result re-parses to an equal value."""
    if isinstance(v, Void):
        return "void"
    return str(v)


def evaluate_text(source: str, mode: Mode = Mode.STRICT) -> EvalValue:
    return evaluate(ast.parse_text(source), mode)
