"""Seeded randomized checks of the complete-number algebraic laws.

Every trial draws its operands from its own generator seeded with
``"{seed}:{law_id}:{trial}"``, so a trial's operands depend only on the
configuration and its position. Serial and parallel runs, and repeated
runs, give identical reports.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .algebra import (
    CompleteNumber,
    Mode,
    cn_add,
    cn_div,
    cn_mul,
    cn_mul_expanded,
    shadow,
)
from .errors import UnknownLaw
from .exact import ONE, Complex, Rational, c_mul, c_sub
from .index import Index, index_mul

PRNG_NAME = "MT19937 (Python random.Random), one stream per trial seeded with '<seed>:<law_id>:<trial>'"

PASS = "pass"
FAIL = "fail"
WITNESS_FOUND = "witness_found"
VACUOUS = "vacuous"


@dataclass(frozen=True)
class TrialConfig:
    seed: int = 42
    trials: int = 10_000
    magnitude_bound: int = 10
    mode: Mode = Mode.STRICT

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.trials < 0:
            raise ValueError("trials must be >= 0")
        if self.magnitude_bound < 1:
            raise ValueError("magnitude_bound must be >= 1")
        object.__setattr__(self, "mode", Mode(self.mode))


@dataclass
class LawReport:
    law_id: str
    trials_run: int
    status: str
    seed: int
    counterexample: Optional[str] = None
    skipped: int = 0
    operands: tuple = field(default=(), repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "law_id": self.law_id,
            "status": self.status,
            "trials_run": self.trials_run,
            "seed": self.seed,
            "counterexample": self.counterexample,
            "skipped": self.skipped,
        }


def trial_rng(seed: int, law_id: str, trial: int) -> random.Random:
    return random.Random(f"{seed}:{law_id}:{trial}")


def gen_rational(rng: random.Random, bound: int) -> Rational:
    return Rational(rng.randint(-bound, bound), rng.randint(1, bound))


def gen_complex(rng: random.Random, bound: int) -> Complex:
    return Complex(gen_rational(rng, bound), gen_rational(rng, bound))


def gen_complete(rng: random.Random, magnitude_bound: int) -> CompleteNumber:
    if magnitude_bound < 1:
        raise ValueError("magnitude_bound must be >= 1")
    return CompleteNumber(gen_complex(rng, magnitude_bound), gen_complex(rng, magnitude_bound))


def _render(*operands) -> str:
    return "; ".join(f"psi{k}={op}" for k, op in enumerate(operands, 1))


# Oracles written against raw components, independent of c_add / c_mul.


def _component_sum(a: Complex, b: Complex) -> tuple:
    return (a.re + b.re, a.im + b.im)


def _component_product(a: tuple, b: tuple) -> tuple:
    (x1, y1), (x2, y2) = a, b
    return (x1 * x2 - y1 * y2, x1 * y2 + y1 * x2)


# Each universal law takes (rng, bound) and returns (holds, operands, skipped).


def _add_comm(rng, bound):
    p, q = gen_complete(rng, bound), gen_complete(rng, bound)
    return cn_add(p, q) == cn_add(q, p), (p, q), False


def _add_assoc(rng, bound):
    p, q, r = (gen_complete(rng, bound) for _ in range(3))
    return cn_add(p, cn_add(q, r)) == cn_add(cn_add(p, q), r), (p, q, r), False


def _mul_assoc(rng, bound):
    p, q, r = (gen_complete(rng, bound) for _ in range(3))
    return cn_mul(p, cn_mul(q, r)) == cn_mul(cn_mul(p, q), r), (p, q, r), False


def _left_distrib(rng, bound):
    p, q, r = (gen_complete(rng, bound) for _ in range(3))
    return cn_mul(p, cn_add(q, r)) == cn_add(cn_mul(p, q), cn_mul(p, r)), (p, q, r), False


def _right_distrib(rng, bound):
    p, q, r = (gen_complete(rng, bound) for _ in range(3))
    lhs = cn_mul(cn_add(q, r), p)
    rhs = cn_add(cn_mul_expanded(q, p), cn_mul_expanded(r, p))
    return lhs == rhs, (p, q, r), False


def _div_roundtrip(rng, bound):
    p, q = gen_complete(rng, bound), gen_complete(rng, bound)
    if shadow(q).is_zero():
        return True, (p, q), True
    return cn_mul(q, cn_div(p, q)) == p, (p, q), False


def _shadow_hom(rng, bound):
    p, q = gen_complete(rng, bound), gen_complete(rng, bound)
    sp = _component_sum(p.vast, p.calp)
    sq = _component_sum(q.vast, q.calp)
    add_ok = shadow(cn_add(p, q)) == Complex(sp[0] + sq[0], sp[1] + sq[1])
    mul_ok = shadow(cn_mul(p, q)) == Complex(*_component_product(sp, sq))
    return add_ok and mul_ok, (p, q), False


def _left_identity_family(rng, bound):
    vast = gen_complex(rng, bound)
    e = CompleteNumber(vast, c_sub(ONE, vast))
    p = gen_complete(rng, bound)
    return cn_mul(e, p) == p, (e, p), False


def _index_right_projection(rng, bound):
    a, b = rng.choice(list(Index)), rng.choice(list(Index))
    return index_mul(a, b) is b, (a, b), False


_UNIVERSAL: dict[str, Callable] = {
    "add_comm": _add_comm,
    "add_assoc": _add_assoc,
    "mul_assoc": _mul_assoc,
    "left_distrib": _left_distrib,
    "right_distrib": _right_distrib,
    "div_roundtrip": _div_roundtrip,
    "shadow_hom": _shadow_hom,
    "left_identity_family": _left_identity_family,
    "index_right_projection": _index_right_projection,
}

LAW_IDS = (
    "add_comm",
    "add_assoc",
    "mul_noncomm",
    "mul_assoc",
    "left_distrib",
    "right_distrib",
    "div_roundtrip",
    "shadow_hom",
    "left_identity_family",
    "index_right_projection",
)

# up(1) and down(1) as complete numbers.
FIXED_PAIR = (CompleteNumber(ONE, Complex(0)), CompleteNumber(Complex(0), ONE))


def _noncomm_text(p, q) -> str:
    return f"psi1={p}; psi2={q}; psi1*psi2={cn_mul(p, q)}; psi2*psi1={cn_mul(q, p)}"


def _check_universal(law_id, config):
    check = _UNIVERSAL[law_id]
    skipped = 0
    for trial in range(config.trials):
        holds, operands, skip = check(trial_rng(config.seed, law_id, trial), config.magnitude_bound)
        skipped += skip
        if not holds:
            return LawReport(law_id, trial + 1, FAIL, config.seed, _render(*operands), skipped, operands)
    if law_id == "index_right_projection":
        for a in Index:
            for b in Index:
                if index_mul(a, b) is not b:
                    return LawReport(law_id, config.trials, FAIL, config.seed, _render(a, b), skipped, (a, b))
    return LawReport(law_id, config.trials, PASS, config.seed, None, skipped)


def _check_noncomm(config):
    """Witness search; products of a pair always share the shadow s1*s2."""
    law_id = "mul_noncomm"
    p, q = FIXED_PAIR
    if cn_mul(p, q) == cn_mul(q, p):
        return LawReport(law_id, config.trials, FAIL, config.seed, _noncomm_text(p, q), 0, (p, q))
    random_witness = None
    for trial in range(config.trials):
        rng = trial_rng(config.seed, law_id, trial)
        a, b = gen_complete(rng, config.magnitude_bound), gen_complete(rng, config.magnitude_bound)
        ab, ba = cn_mul(a, b), cn_mul(b, a)
        if shadow(ab) != shadow(ba) or shadow(ab) != c_mul(shadow(a), shadow(b)):
            return LawReport(law_id, trial + 1, FAIL, config.seed, _render(a, b), 0, (a, b))
        if random_witness is None and ab != ba:
            random_witness = (trial, a, b)
    text = _noncomm_text(p, q)
    if random_witness is not None:
        trial, a, b = random_witness
        text += f" | random witness at trial {trial}: {_noncomm_text(a, b)}"
    return LawReport(law_id, config.trials, WITNESS_FOUND, config.seed, text, 0, (p, q))


def check_law(law_id: str, config: TrialConfig = TrialConfig()) -> LawReport:
    if law_id not in LAW_IDS:
        raise UnknownLaw(f"unknown law {law_id!r}; expected one of {', '.join(LAW_IDS)}")
    if config.trials == 0:
        return LawReport(law_id, 0, VACUOUS, config.seed)
    if law_id == "mul_noncomm":
        return _check_noncomm(config)
    return _check_universal(law_id, config)


def run_suite(config: TrialConfig = TrialConfig()) -> list[LawReport]:
    return [check_law(law_id, config) for law_id in LAW_IDS]


def suite_passed(reports: list[LawReport]) -> bool:
    for r in reports:
        expected = WITNESS_FOUND if r.law_id == "mul_noncomm" else PASS
        if r.status not in (expected, VACUOUS):
            return False
    return True


def reports_to_json(reports: list[LawReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
