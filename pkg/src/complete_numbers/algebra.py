"""Indexed complex numbers, complete numbers and their arithmetic.

Two layers of values exist:

* :class:`IndexedComplex` ("pure" values) carry a single index and are the
  only place the zero-division index transitions and void results apply.
* :class:`CompleteNumber` ("full" values) hold an up part and a down part.
  Once a value is full only part-wise arithmetic and shadow division apply;
  embedding forgets the difference between ``up(0)`` and ``down(0)``.

:data:`VOID` is an ordinary value that absorbs every operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Union

from .errors import MixedIndexDivision, SingularDenominator
from .exact import ONE, ZERO, Complex, Radical, c_add, c_div, c_modulus, c_mul, c_sub
from .index import DOWN, UP, Index, index_abs, index_div, index_mul


class Mode(str, Enum):
    """How ``up(0) / up(z)`` is read: void (strict) or ``up(0)`` (lenient)."""

    STRICT = "strict"
    LENIENT = "lenient"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class IndexedComplex:
    index: Index
    value: Complex

    def __str__(self):
        return f"{self.index}({self.value})"


@dataclass(frozen=True)
class CompleteNumber:
    vast: Complex = ZERO
    calp: Complex = ZERO

    def __add__(self, other):
        return cn_add(self, other)

    def __sub__(self, other):
        return cn_sub(self, other)

    def __mul__(self, other):
        return cn_mul(self, other)

    def __truediv__(self, other):
        return cn_div(self, other)

    def __neg__(self):
        return CompleteNumber(-self.vast, -self.calp)

    def __str__(self):
        return f"up({self.vast}) + down({self.calp})"


class Void:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "VOID"

    def __str__(self):
        return "void"

    def __reduce__(self):
        return (Void, ())


VOID = Void()

EvalValue = Union[IndexedComplex, CompleteNumber, Void]

ZERO_CN = CompleteNumber(ZERO, ZERO)


def up(value: Complex) -> IndexedComplex:
    return IndexedComplex(UP, value)


def down(value: Complex) -> IndexedComplex:
    return IndexedComplex(DOWN, value)


def embed(a: IndexedComplex) -> CompleteNumber:
    if a.index is UP:
        return CompleteNumber(a.value, ZERO)
    return CompleteNumber(ZERO, a.value)


def shadow(p: CompleteNumber) -> Complex:
    """Part-sum ``vast + calp``: what complete-number division divides by."""
    return c_add(p.vast, p.calp)


def purify(p: CompleteNumber) -> EvalValue:
    """Display helper: a full value with one zero part as a pure value.

    Never used by arithmetic dispatch; re-purifying would let the zero
    division rules fire on values whose index history has been lost.
    """
    if p.calp.is_zero():
        return IndexedComplex(UP, p.vast)
    if p.vast.is_zero():
        return IndexedComplex(DOWN, p.calp)
    return p


def cn_add(p: CompleteNumber, q: CompleteNumber) -> CompleteNumber:
    return CompleteNumber(c_add(p.vast, q.vast), c_add(p.calp, q.calp))


def cn_sub(p: CompleteNumber, q: CompleteNumber) -> CompleteNumber:
    return CompleteNumber(c_sub(p.vast, q.vast), c_sub(p.calp, q.calp))


def cn_mul(p: CompleteNumber, q: CompleteNumber) -> CompleteNumber:
    # Every left part multiplies into the index of the right part, so the
    # four-term expansion factors through the shadow of the left operand.
    s = shadow(p)
    return CompleteNumber(c_mul(s, q.vast), c_mul(s, q.calp))


def cn_mul_expanded(p: CompleteNumber, q: CompleteNumber) -> CompleteNumber:
    """The literal four-term product, each term placed by the index table."""
    parts = {UP: ZERO, DOWN: ZERO}
    for ia, a in ((UP, p.vast), (DOWN, p.calp)):
        for ib, b in ((UP, q.vast), (DOWN, q.calp)):
            idx = index_mul(ia, ib)
            parts[idx] = c_add(parts[idx], c_mul(a, b))
    return CompleteNumber(parts[UP], parts[DOWN])


def cn_div(p: CompleteNumber, q: CompleteNumber) -> CompleteNumber:
    """Solve ``q * r = p`` for r; both parts of p are divided by shadow(q)."""
    s = shadow(q)
    if s.is_zero():
        raise SingularDenominator(f"divisor {q} has zero part-sum")
    return CompleteNumber(c_div(p.vast, s), c_div(p.calp, s))


def cn_eq(p: CompleteNumber, q: CompleteNumber) -> bool:
    return p.vast == q.vast and p.calp == q.calp


def special_div(n: IndexedComplex, d: IndexedComplex, mode: Mode = Mode.STRICT) -> EvalValue:
    """Same-index division of pure values, including division by exact zero.

    ``up(z) / up(0)`` demotes to ``down(z)``; ``down(0) / down(z)`` promotes
    to ``up(1/z)``; anything over ``down(0)`` and ``up(0) / up(0)`` are void.
    ``up(0) / up(z)`` is void in strict mode and ``up(0)`` in lenient mode.
    """
    if n.index is not d.index:
        raise MixedIndexDivision(f"{n} / {d}: indices differ; embed and use cn_div")
    mode = Mode(mode)
    if d.index is UP and d.value.is_zero():
        if n.value.is_zero():
            return VOID
        return IndexedComplex(DOWN, n.value)
    if d.index is DOWN and d.value.is_zero():
        return VOID
    if n.index is DOWN and n.value.is_zero():
        return IndexedComplex(UP, c_div(ONE, d.value))
    if n.index is UP and n.value.is_zero():
        return VOID if mode is Mode.STRICT else IndexedComplex(UP, ZERO)
    return IndexedComplex(index_div(n.index, d.index), c_div(n.value, d.value))


def ic_add(a: IndexedComplex, b: IndexedComplex) -> EvalValue:
    if a.index is b.index:
        return IndexedComplex(a.index, c_add(a.value, b.value))
    return cn_add(embed(a), embed(b))


def ic_sub(a: IndexedComplex, b: IndexedComplex) -> EvalValue:
    if a.index is b.index:
        return IndexedComplex(a.index, c_sub(a.value, b.value))
    return cn_sub(embed(a), embed(b))


def ic_mul(a: IndexedComplex, b: IndexedComplex) -> EvalValue:
    if a.index is b.index:
        return IndexedComplex(index_mul(a.index, b.index), c_mul(a.value, b.value))
    return cn_mul(embed(a), embed(b))


def ic_modulus(a: IndexedComplex) -> tuple[Index, Radical]:
    return index_abs(a.index), c_modulus(a.value)
