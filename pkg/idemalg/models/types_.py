from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Tuple, Union

from idemalg.core.exceptions import ParameterError, WrongUsage
from idemalg.core.types_ import Summand
from idemalg.core.utils import to_fraction
from idemalg.linalg import RationalMatrix, as_dict
from idemalg.wordalg.types_ import Presentation


@dataclass(frozen=True)
class LambdaSpec:
    """Hypothesis ``lam * (pq)^(m-1) = (pq)^m`` for a scalar ``lam != 1``."""

    m: int
    lam: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lam", to_fraction(self.lam))
        if self.m < 2:
            raise ParameterError(f"The lambda relation needs m >= 2, got {self.m}.")
        if self.lam == 1:
            raise ParameterError("lambda must not be 1.")

    @property
    def degenerate(self) -> bool:
        """``lam == 0`` collapses to the nilpotent ``(pq)^(m-1) = 0`` case."""
        return self.lam == 0

    def __str__(self) -> str:
        return f"lambda({self.lam}, m={self.m})"

    def as_dict(self) -> Dict[str, Any]:
        return {"m": self.m, "lambda": str(self.lam), "degenerate": self.degenerate}


Intended = Union[Presentation, LambdaSpec, Summand]


def intended_dict(intended: Intended) -> Dict[str, Any]:
    if isinstance(intended, Summand):
        return {"summand": intended.value}
    return intended.as_dict()


@dataclass(frozen=True)
class ModelPair:
    P: RationalMatrix
    Q: RationalMatrix
    intended: Intended
    contains_ambient_unit: bool
    label: str = ""

    def __post_init__(self):
        if not (self.P.is_square and self.P.shape == self.Q.shape):
            raise WrongUsage(f"P {self.P.shape} and Q {self.Q.shape} must be square of one size.")

    @property
    def size(self) -> int:
        return self.P.rows

    @property
    def m(self) -> int:
        if isinstance(self.intended, Summand):
            raise WrongUsage(f"{self.intended.value} has no parameter m.")
        return self.intended.m

    def __str__(self) -> str:
        return self.label or str(self.intended)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "label": str(self),
            "intended": intended_dict(self.intended),
            "contains_ambient_unit": self.contains_ambient_unit,
            "P": as_dict(self.P),
            "Q": as_dict(self.Q),
        }


@dataclass(frozen=True)
class RelationCheck:
    """Outcome of one statement checked on a model.

    ``kind`` is one of ``equality``, ``inequality``, ``rank`` or ``membership``. ``holds`` says
    whether the statement is true for the matrices.
    """

    name: str
    kind: str
    holds: bool

    @property
    def passed(self) -> bool:
        return self.holds

    def as_dict(self) -> Dict[str, Any]:
        return {"relation": self.name, "kind": self.kind, "passed": self.passed}


@dataclass(frozen=True)
class VerificationReport:
    label: str
    checks: Tuple[RelationCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed]

    def as_dict(self) -> Dict[str, Any]:
        return {
            "model": self.label,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }
