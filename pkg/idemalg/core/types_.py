from enum import Enum


class Letter(str, Enum):
    P = "P"
    Q = "Q"

    @property
    def other(self) -> "Letter":
        return Letter.Q if self is Letter.P else Letter.P

    def __str__(self) -> str:
        return self.value.lower()


class Family(str, Enum):
    ZN = "Zn"
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"


class Summand(str, Enum):
    W3 = "W3"
    W4 = "W4"

    @property
    def dimension(self) -> int:
        return 3 if self is Summand.W3 else 4


class VerdictKind(str, Enum):
    ZERO = "Zero"
    INVERTIBLE = "Invertible"
    PROPERLY_GROUP_INVERTIBLE = "ProperlyGroupInvertible"
    DRAZIN_ONLY = "DrazinOnly"
    NILPOTENT = "Nilpotent"

    @property
    def group_invertible(self) -> bool:
        return self in (
            VerdictKind.ZERO,
            VerdictKind.INVERTIBLE,
            VerdictKind.PROPERLY_GROUP_INVERTIBLE,
        )


class Rule(str, Enum):
    """Which criterion decided a verdict."""

    ZERO = "zero"
    UNIT_SPECTRUM = "unit-spectrum"
    UNIT_PSI = "unit-psi"
    NO_UNIT_INVERTIBLE_PART = "no-unit-invertible-part"
    NO_UNIT_PSI = "no-unit-psi"
    NILPOTENT = "nilpotent"
    W3_ZERO_SUMMAND = "w3-zero-summand"
    W3_NONZERO_TRACE = "w3-nonzero-trace"
    W3_FAILS = "w3-fails"
    W4_ZERO_SUMMAND = "w4-zero-summand"
    W4_NONZERO_TRACE = "w4-nonzero-trace"
    ORACLE = "rank-oracle"


class CouplingCase(str, Enum):
    P_WORD = "i"
    Q_WORD = "ii"
    Q_POWER = "iii"


class Method(str, Enum):
    ORACLE = "oracle"
    CLOSED_FORM = "closed-form"
    BOTH = "both"


class Suite(str, Enum):
    DIMS = "dims"
    RADICAL = "radical"
    DRAZIN = "drazin"
    LAMBDA = "lambda"
    CLASSIFY = "classify"
    SPECTRUM = "spectrum"
    INDEX = "index"
    COUNTZERO = "countzero"
    EXAMPLE = "example"
    COUPLING = "coupling"
    ALL = "all"
