from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional, Union

from idemalg.core.exceptions import ParameterError
from idemalg.core.utils import to_fraction
from idemalg.linalg import RationalMatrix, as_dict
from idemalg.wordalg.types_ import Element

Operand = Union[Element, RationalMatrix]


def operand_dict(value: Operand) -> Dict[str, Any]:
    if isinstance(value, Element):
        return value.as_dict()
    return as_dict(value)


@dataclass(frozen=True)
class DrazinResult:
    """``inverse`` is the Drazin inverse b of a with ``index`` k.

    ``residuals`` holds ``ab - ba``, ``ab^2 - b`` and ``a^(k+1)b - a^k``; all of them are zero
    for a genuine Drazin inverse. ``minimal`` records that ``a^k b != a^(k-1)``.
    """

    inverse: Operand
    index: int
    residuals: Mapping[str, Operand] = field(default_factory=dict)
    minimal: bool = True
    method: str = "oracle"

    @property
    def verified(self) -> bool:
        return self.minimal and all(r.is_zero for r in self.residuals.values())

    @property
    def group_invertible(self) -> bool:
        return self.index <= 1

    def as_dict(self) -> Dict[str, Any]:
        return {
            "method": self.method,
            "index": self.index,
            "inverse": operand_dict(self.inverse),
            "checks": {name: r.is_zero for name, r in self.residuals.items()},
            "minimal": self.minimal,
            "verified": self.verified,
        }


def phi(i: int) -> int:
    """1 for odd ``i``, 0 for even ``i``."""
    return i % 2


@dataclass(frozen=True)
class ClosedFormCoefficients:
    """Scalars entering the closed forms for ``alpha p + q``.

    ``a1, a2, b1, b2`` are only defined when ``lam`` is given.
    """

    alpha: Fraction
    m: int
    lam: Optional[Fraction] = None
    a1: Optional[Fraction] = None
    a2: Optional[Fraction] = None
    b1: Optional[Fraction] = None
    b2: Optional[Fraction] = None

    @classmethod
    def for_alpha(cls, alpha, m: int) -> "ClosedFormCoefficients":
        alpha = to_fraction(alpha)
        if alpha == 0:
            raise ParameterError("alpha must be nonzero.")
        if m < 2:
            raise ParameterError(f"m must be at least 2, got {m}.")
        return cls(alpha, m)

    @classmethod
    def for_lambda(cls, alpha, lam, m: int) -> "ClosedFormCoefficients":
        base = cls.for_alpha(alpha, m)
        alpha, lam = base.alpha, to_fraction(lam)
        if lam == 1:
            raise ParameterError("lambda must not be 1.")
        denominator = alpha * (lam - 1) ** 2
        a1 = (alpha + 1) * (m * (lam - 1) + 1 - 2 * lam) / denominator
        a2 = (m * (1 + alpha - lam - alpha * lam) + (lam - alpha + 2 * alpha * lam)) / denominator
        b1 = (m * (alpha + 1) * (1 - lam) + alpha * lam + 2 * lam - 1) / denominator
        b2 = -(m * (1 + alpha - alpha * lam - lam) + lam * (alpha + 1)) / denominator
        return cls(alpha, m, lam, a1, a2, b1, b2)

    def as_dict(self) -> Dict[str, Any]:
        data = {"alpha": str(self.alpha), "m": self.m}
        if self.lam is not None:
            data.update(
                {
                    "lambda": str(self.lam),
                    "a1": str(self.a1),
                    "a2": str(self.a2),
                    "b1": str(self.b1),
                    "b2": str(self.b2),
                }
            )
        return data
