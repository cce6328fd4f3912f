from pathlib import Path

import pytest
from hypothesis import given

from complete_numbers import VOID, CompleteNumber, Complex, IndexedComplex, Mode, down, up
from complete_numbers.errors import IrrationalModulus, ModulusOfFull, RetagOfFull
from complete_numbers.evaluate import evaluate_text, format_value

from conftest import completes, indexed

GOLDEN = Path(__file__).parent / "golden" / "paper_examples.txt"


def golden_cases():
    for line in GOLDEN.read_text(encoding="utf-8").splitlines():
        if line.strip() and not line.startswith("#"):
            source, expected = line.split(" => ")
            yield source, expected


@pytest.mark.parametrize("source, expected", list(golden_cases()))
def test_golden_file(source, expected):
    assert format_value(evaluate_text(source)) == expected


def test_literals_are_vastavic(C):
    assert evaluate_text("2") == up(C(2))
    assert evaluate_text("i") == up(C(0, 1))
    assert evaluate_text("3i") == up(C(0, 3))


def test_retag(C):
    assert evaluate_text("down(2+i)") == down(C(2, 1))
    assert evaluate_text("up(down(2))") == up(C(2))
    assert evaluate_text("down(down(2))") == down(C(2))
    assert evaluate_text("up(down(1)/down(0))") is VOID


def test_retag_of_full_refused():
    with pytest.raises(RetagOfFull):
        evaluate_text("up(up(1)+down(1))")


def test_abs(C):
    assert evaluate_text("|down(3-4i)|") == down(C(5))
    assert evaluate_text("|down(1)/down(0)|") is VOID
    with pytest.raises(IrrationalModulus):
        evaluate_text("|1+i|")
    with pytest.raises(ModulusOfFull):
        evaluate_text("|up(1)+down(1)|")


def test_negation_keeps_index(C):
    assert evaluate_text("-down(2)") == down(C(-2))
    assert evaluate_text("-(up(1)+down(2))") == CompleteNumber(C(-1), C(-2))
    assert evaluate_text("-(down(1)/down(0))") is VOID


def test_void_absorbs():
    for source in ["down(1)/down(0) + 1", "2 * (down(1)/down(0))", "(down(1)/down(0)) / up(0)",
                   "(up(1)+down(1)) - down(1)/down(0)"]:
        assert evaluate_text(source) is VOID


def test_mixed_pure_division_goes_through_complete_division(C):
    assert evaluate_text("up(2)/down(1)") == CompleteNumber(C(2), C(0))


def test_full_divided_by_embedded_zero_is_singular():
    from complete_numbers.errors import SingularDenominator

    with pytest.raises(SingularDenominator):
        evaluate_text("(up(1)+down(1))/up(0)")
    with pytest.raises(SingularDenominator):
        evaluate_text("up(2)/(up(1)+down(-1))")


def test_mode_only_changes_up_zero_over_up():
    assert evaluate_text("up(0)/up(1)", Mode.STRICT) is VOID
    assert format_value(evaluate_text("up(0)/up(1)", Mode.LENIENT)) == "up(0)"
    assert evaluate_text("0/0", Mode.LENIENT) is VOID


def test_format_examples(C):
    assert format_value(up(C(7, 10))) == "up(7+10i)"
    assert format_value(CompleteNumber(C(1), C("3/2"))) == "up(1) + down(3/2)"
    assert format_value(VOID) == "void"


@given(indexed())
def test_pure_roundtrip(v):
    assert evaluate_text(format_value(v)) == v


@given(completes())
def test_full_roundtrip(v):
    assert evaluate_text(format_value(v)) == v


@given(indexed())
def test_roundtrip_lenient(v):
    assert evaluate_text(format_value(v), Mode.LENIENT) == v


def test_unicode_arrows(C):
    assert evaluate_text("↑(1)/↑(0)") == down(C(1))
    assert isinstance(evaluate_text("↓(2)"), IndexedComplex)
