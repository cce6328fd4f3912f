"""Exception hierarchy shared by the arithmetic, law-checking and CLI layers."""


class CompleteNumberError(Exception):
    """Base class. ``kind`` is the stable name used in JSON error output."""

    kind = "error"


class MixedIndexDivision(CompleteNumberError):
    kind = "MixedIndexDivision"


class ZeroComplexDivisor(CompleteNumberError, ZeroDivisionError):
    kind = "ZeroComplexDivisor"


class SingularDenominator(CompleteNumberError, ZeroDivisionError):
    kind = "SingularDenominator"


class UnknownLaw(CompleteNumberError, KeyError):
    kind = "UnknownLaw"

    def __str__(self):
        return Exception.__str__(self)


class SyntaxProblem(CompleteNumberError):
    """Lexing or parsing failure; carries the byte offset of the offending input."""

    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.message = message
        self.position = position


class LexError(SyntaxProblem):
    kind = "LexError"


class ParseError(SyntaxProblem):
    kind = "ParseError"


class EvaluationError(CompleteNumberError):
    pass


class RetagOfFull(EvaluationError):
    kind = "RetagOfFull"


class IrrationalModulus(EvaluationError):
    kind = "IrrationalModulus"


class ModulusOfFull(EvaluationError):
    kind = "ModulusOfFull"
