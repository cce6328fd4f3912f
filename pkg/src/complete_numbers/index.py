"""The two-valued index (Vastavic ``up`` / Calpanic ``down``) and its calculus."""

from enum import Enum

from .errors import MixedIndexDivision


class Index(Enum):
    VASTAVIC = "up"
    CALPANIC = "down"

    @property
    def arrow(self) -> str:
        return "↑" if self is Index.VASTAVIC else "↓"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, text: str) -> "Index":
        text = text.strip()
        if text in ("up", "↑"):
            return cls.VASTAVIC
        if text in ("down", "↓"):
            return cls.CALPANIC
        raise ValueError(f"not an index: {text!r}")


UP = Index.VASTAVIC
DOWN = Index.CALPANIC

# One entry per published rule; the closed form is "always the right operand".
MUL_TABLE = {
    (UP, UP): UP,  # property 1
    (UP, DOWN): DOWN,  # eqn (2)
    (DOWN, UP): UP,  # eqn (3)
    (DOWN, DOWN): DOWN,  # property 5
}

DIV_TABLE = {
    (UP, UP): UP,  # property 2
    (DOWN, DOWN): DOWN,  # property 6
}

ABS_TABLE = {
    UP: UP,  # property 3
    DOWN: DOWN,  # property 7
}


def index_mul(a: Index, b: Index) -> Index:
    return MUL_TABLE[a, b]


def index_div(a: Index, b: Index) -> Index:
    """Same-index division only; mixed pairs have no bare-index meaning."""
    try:
        return DIV_TABLE[a, b]
    except KeyError:
        raise MixedIndexDivision(f"{a} / {b} is undefined for bare indices") from None


def index_abs(a: Index) -> Index:
    return ABS_TABLE[a]
