from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import sympy

from idemalg.core.exceptions import InputError, WrongUsage
from idemalg.core.types_ import Letter, Rule, VerdictKind
from idemalg.core.utils import parse_rationals, to_fraction
from idemalg.wordalg.types_ import Element, Presentation, Word

t = sympy.Symbol("t")


@dataclass(frozen=True)
class CoefficientProfile:
    """Coefficients of ``x1 p + y1 q + x2 pq + y2 qp + x3 pqp + ...``.

    ``x[i - 1]`` belongs to the P-word of order i and ``y[i - 1]`` to the Q-word of order i. The
    shorter list is padded with zeros.
    """

    x: Tuple[Fraction, ...]
    y: Tuple[Fraction, ...]

    def __post_init__(self):
        x, y = parse_rationals(self.x), parse_rationals(self.y)
        size = max(len(x), len(y))
        x += [Fraction(0)] * (size - len(x))
        y += [Fraction(0)] * (size - len(y))
        object.__setattr__(self, "x", tuple(x))
        object.__setattr__(self, "y", tuple(y))

    @classmethod
    def zero(cls, length: int = 1) -> "CoefficientProfile":
        return cls((Fraction(0),) * length, (Fraction(0),) * length)

    @classmethod
    def from_element(cls, elem: Element) -> "CoefficientProfile":
        size = max((w.order for w in elem.coeffs), default=1)
        x = [elem.coefficient(Word(Letter.P, i)) for i in range(1, size + 1)]
        y = [elem.coefficient(Word(Letter.Q, i)) for i in range(1, size + 1)]
        return cls(tuple(x), tuple(y))

    def __len__(self) -> int:
        return len(self.x)

    def xi(self, i: int) -> Fraction:
        """1-based, zero beyond the stored length."""
        return self.x[i - 1] if 1 <= i <= len(self.x) else Fraction(0)

    def yi(self, i: int) -> Fraction:
        return self.y[i - 1] if 1 <= i <= len(self.y) else Fraction(0)

    @property
    def x1(self) -> Fraction:
        return self.xi(1)

    @property
    def y1(self) -> Fraction:
        return self.yi(1)

    @property
    def is_zero(self) -> bool:
        return not any(self.x) and not any(self.y)

    def terms(self) -> List[Tuple[Fraction, Word]]:
        out = []
        for i in range(1, len(self) + 1):
            out.append((self.xi(i), Word(Letter.P, i)))
            out.append((self.yi(i), Word(Letter.Q, i)))
        return out

    def element(self, pres: Presentation) -> Element:
        return Element.combination(pres, self.terms())

    def truncated(self, pres: Presentation) -> "CoefficientProfile":
        """Zero the coefficients of words that vanish in a Zn presentation."""
        elem = self.element(pres)
        x = [elem.coefficient(Word(Letter.P, i)) for i in range(1, len(self) + 1)]
        y = [elem.coefficient(Word(Letter.Q, i)) for i in range(1, len(self) + 1)]
        return CoefficientProfile(tuple(x), tuple(y))

    def odd_sum(self, values: Sequence[Fraction]) -> Fraction:
        return sum(values[0::2], Fraction(0))

    def even_sum(self, values: Sequence[Fraction]) -> Fraction:
        return sum(values[1::2], Fraction(0))

    @property
    def total(self) -> Fraction:
        """``x + y`` with ``x = sum(x_i)`` and ``y = sum(y_i)``."""
        return sum(self.x, Fraction(0)) + sum(self.y, Fraction(0))

    def as_dict(self) -> Dict[str, Any]:
        return {"x": [str(v) for v in self.x], "y": [str(v) for v in self.y]}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "CoefficientProfile":
        try:
            return cls(tuple(data.get("x", ())), tuple(data.get("y", ())))
        except (TypeError, AttributeError) as exc:
            raise InputError(f"Malformed profile {data!r}.") from exc

    @classmethod
    def parse(cls, x: Iterable[str], y: Iterable[str]) -> "CoefficientProfile":
        return cls(tuple(to_fraction(v) for v in x), tuple(to_fraction(v) for v in y))


@dataclass(frozen=True)
class PsiBundle:
    phi00: sympy.Poly
    phi11: sympy.Poly
    phi01: sympy.Poly
    phi10: sympy.Poly
    psi: sympy.Poly
    phi02: sympy.Poly
    phi12: sympy.Poly
    phi02p: sympy.Poly
    phi12p: sympy.Poly
    psi1: sympy.Poly
    psi2: sympy.Poly

    def as_dict(self) -> Dict[str, List[str]]:
        # ascending coefficients
        return {
            name: [str(c) for c in reversed(getattr(self, name).all_coeffs())]
            for name in self.__dataclass_fields__
        }


@dataclass(frozen=True)
class Spectrum:
    values: FrozenSet[Fraction]
    irrational_factors: int = 0

    def as_dict(self) -> Dict[str, Any]:
        return {
            "values": [str(v) for v in sorted(self.values)],
            "irrational_factors": self.irrational_factors,
        }


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    spectrum: FrozenSet[Fraction]
    rule: Rule
    index: Optional[int] = None
    decided_by_theorem: bool = True
    details: Mapping[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        has_index = self.kind in (VerdictKind.DRAZIN_ONLY, VerdictKind.NILPOTENT)
        if has_index != (self.index is not None):
            needs = "need an" if has_index else "take no"
            raise WrongUsage(f"{self.kind.value} verdicts {needs} index.")
        object.__setattr__(self, "spectrum", frozenset(to_fraction(v) for v in self.spectrum))

    @property
    def group_invertible(self) -> bool:
        return self.kind.group_invertible

    def as_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "kind": self.kind.value,
            "rule": self.rule.value,
            "spectrum": [str(v) for v in sorted(self.spectrum)],
            "decided_by_theorem": self.decided_by_theorem,
        }
        if self.index is not None:
            data["index"] = self.index
        if self.details:
            data["details"] = dict(self.details)
        return data
