from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Mapping, Sequence, Tuple, Union

from idemalg.core.exceptions import (
    InputError,
    ParameterError,
    PresentationMismatch,
    WrongUsage,
)
from idemalg.core.types_ import Family, Letter
from idemalg.core.utils import to_fraction


@dataclass(frozen=True)
class Word:
    """The alternating product ``pqpq...`` (or ``qpqp...``) with ``order`` factors."""

    start: Letter
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ParameterError(f"A word has at least one factor, got order {self.order}.")
        object.__setattr__(self, "start", Letter(self.start))

    @property
    def end(self) -> Letter:
        return self.start if self.order % 2 else self.start.other

    @property
    def sort_key(self) -> Tuple[int, int]:
        return self.order, 0 if self.start is Letter.P else 1

    def letters(self) -> Iterator[Letter]:
        letter = self.start
        for _ in range(self.order):
            yield letter
            letter = letter.other

    def __str__(self) -> str:
        return "".join(str(x) for x in self.letters())

    @classmethod
    def parse(cls, text: str) -> "Word":
        text = text.strip().lower()
        if not text or any(c not in "pq" for c in text):
            raise InputError(f"{text!r} is not a word in p and q.")
        for a, b in zip(text, text[1:]):
            if a == b:
                raise InputError(f"{text!r} is not alternating, reduce repeated letters first.")
        return cls(Letter(text[0].upper()), len(text))

    # (pq)^k, (pq)^k p, (qp)^k, (qp)^k q

    @classmethod
    def pq_power(cls, k: int) -> "Word":
        return cls(Letter.P, 2 * k)

    @classmethod
    def pq_power_p(cls, k: int) -> "Word":
        return cls(Letter.P, 2 * k + 1)

    @classmethod
    def qp_power(cls, k: int) -> "Word":
        return cls(Letter.Q, 2 * k)

    @classmethod
    def qp_power_q(cls, k: int) -> "Word":
        return cls(Letter.Q, 2 * k + 1)

    def as_dict(self) -> Dict[str, Any]:
        return {"start": self.start.value, "order": self.order}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Word":
        try:
            return cls(Letter(data["start"]), int(data["order"]))
        except (KeyError, ValueError, TypeError) as exc:
            raise InputError(f"Malformed word {data!r}.") from exc


P = Word(Letter.P, 1)
Q = Word(Letter.Q, 1)


@dataclass(frozen=True)
class Presentation:
    """One of the supported relation families.

    ``parameter`` is n for Zn and m for F1..F4. ``vanishing`` is the start letter of the
    order-k word that vanishes in Zn for odd n; it is normalized to ``Q`` everywhere it has no
    meaning so that equal algebras compare equal.
    """

    family: Family
    parameter: int
    vanishing: Letter = Letter.Q

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "vanishing", Letter(self.vanishing))
        if self.family is Family.ZN:
            if self.parameter < 1:
                raise ParameterError(f"Zn needs n >= 1, got {self.parameter}.")
            if self.parameter % 2 == 0:
                object.__setattr__(self, "vanishing", Letter.Q)
        else:
            if self.parameter < 2:
                raise ParameterError(f"{self.family.value} needs m >= 2, got {self.parameter}.")
            object.__setattr__(self, "vanishing", Letter.Q)

    @classmethod
    def zn(cls, n: int, vanishing: Letter = Letter.Q) -> "Presentation":
        return cls(Family.ZN, n, vanishing)

    @classmethod
    def f(cls, family: Union[Family, str], m: int) -> "Presentation":
        family = Family(family)
        if family is Family.ZN:
            raise WrongUsage("Use Presentation.zn for Zn.")
        return cls(family, m)

    @property
    def n(self) -> int:
        if self.family is not Family.ZN:
            raise WrongUsage(f"{self.family.value} is parametrized by m.")
        return self.parameter

    @property
    def m(self) -> int:
        if self.family is Family.ZN:
            raise WrongUsage("Zn is parametrized by n.")
        return self.parameter

    def __str__(self) -> str:
        if self.family is Family.ZN:
            suffix = f", {self.vanishing.value.lower()}-word vanishes" if self.parameter % 2 else ""
            return f"Zn({self.parameter}{suffix})"
        return f"{self.family.value}({self.parameter})"

    def as_dict(self) -> Dict[str, Any]:
        if self.family is Family.ZN:
            return {"family": "Zn", "n": self.parameter, "vanishing": self.vanishing.value}
        return {"family": self.family.value, "m": self.parameter}

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Presentation":
        try:
            family = Family(data["family"])
            if family is Family.ZN:
                return cls.zn(int(data["n"]), Letter(data.get("vanishing", "Q")))
            return cls.f(family, int(data["m"]))
        except (KeyError, ValueError, TypeError) as exc:
            raise InputError(f"Malformed presentation {data!r}.") from exc


@dataclass(frozen=True)
class Basis:
    presentation: Presentation
    words: Tuple[Word, ...]
    _index: Dict[Word, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {w: i for i, w in enumerate(self.words)})

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, word: object) -> bool:
        return word in self._index

    def index(self, word: Word) -> int:
        return self._index[word]

    def words_starting_with(self, letter: Letter) -> List[Word]:
        return [w for w in self.words if w.start is letter]


@dataclass(frozen=True)
class Element:
    """A linear combination of basis words with exact rational coefficients."""

    presentation: Presentation
    coeffs: Mapping[Word, Fraction]

    def __post_init__(self):
        from idemalg.wordalg.rewriting import basis_of

        basis = basis_of(self.presentation)
        canonical: Dict[Word, Fraction] = {}
        for word, value in self.coeffs.items():
            if word not in basis:
                raise WrongUsage(f"{word} is not a basis word of {self.presentation}.")
            value = to_fraction(value)
            if value:
                canonical[word] = value
        ordered = dict(sorted(canonical.items(), key=lambda kv: basis.index(kv[0])))
        object.__setattr__(self, "coeffs", ordered)

    # constructors

    @classmethod
    def zero(cls, presentation: Presentation) -> "Element":
        return cls(presentation, {})

    @classmethod
    def word(cls, presentation: Presentation, word: Word) -> "Element":
        from idemalg.wordalg.rewriting import normal_form

        return normal_form(word, presentation)

    @classmethod
    def generator(cls, presentation: Presentation, letter: Letter) -> "Element":
        return cls.word(presentation, Word(letter, 1))

    @classmethod
    def combination(
        cls, presentation: Presentation, terms: Sequence[Tuple[Any, Word]]
    ) -> "Element":
        """Sum of ``coefficient * word`` where words need not be basis words."""
        total = cls.zero(presentation)
        for coefficient, word in terms:
            total = total + to_fraction(coefficient) * cls.word(presentation, word)
        return total

    @classmethod
    def from_vector(cls, presentation: Presentation, vector: Sequence[Any]) -> "Element":
        from idemalg.wordalg.rewriting import basis_of

        basis = basis_of(presentation)
        if len(vector) != len(basis):
            raise WrongUsage(f"Expected {len(basis)} coordinates, got {len(vector)}.")
        return cls(presentation, dict(zip(basis.words, vector)))

    # queries

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, word: Word) -> Fraction:
        return self.coeffs.get(word, Fraction(0))

    def vector(self) -> List[Fraction]:
        from idemalg.wordalg.rewriting import basis_of

        return [self.coefficient(w) for w in basis_of(self.presentation)]

    # arithmetic

    def _check(self, other: "Element"):
        if other.presentation != self.presentation:
            raise PresentationMismatch(
                f"Algebra error: {self.presentation} and {other.presentation} differ."
            )

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        out = dict(self.coeffs)
        for word, value in other.coeffs.items():
            out[word] = out.get(word, Fraction(0)) + value
        return Element(self.presentation, out)

    def __neg__(self) -> "Element":
        return Element(self.presentation, {w: -v for w, v in self.coeffs.items()})

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def scale(self, scalar: Any) -> "Element":
        scalar = to_fraction(scalar)
        return Element(self.presentation, {w: scalar * v for w, v in self.coeffs.items()})

    def __mul__(self, other: Union["Element", int, Fraction]) -> "Element":
        if isinstance(other, Element):
            from idemalg.wordalg.table import multiply

            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other: Union[int, Fraction]) -> "Element":
        return self.scale(other)

    def __pow__(self, k: int) -> "Element":
        if k < 1:
            raise WrongUsage("alg(p,q) has no unit in general, powers start at 1.")
        result = self
        for _ in range(k - 1):
            result = result * self
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for word, value in self.coeffs.items():
            if value == 1:
                term = str(word)
            elif value == -1:
                term = f"-{word}"
            else:
                term = f"{value}*{word}"
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")

    # serialization

    def as_dict(self) -> Dict[str, Any]:
        data = self.presentation.as_dict()
        data["coeffs"] = [
            {
                "start": w.start.value,
                "order": w.order,
                "num": str(v.numerator),
                "den": str(v.denominator),
            }
            for w, v in self.coeffs.items()
        ]
        return data

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Element":
        presentation = Presentation.from_dict(data)
        coeffs: Dict[Word, Fraction] = {}
        entries = data.get("coeffs", [])
        if not isinstance(entries, list):
            raise InputError(f"Malformed coefficient list {entries!r}.")
        for entry in entries:
            word = Word.from_dict(entry)
            value = to_fraction(f"{entry.get('num', '0')}/{entry.get('den', '1')}")
            coeffs[word] = coeffs.get(word, Fraction(0)) + value
        return cls.combination(presentation, [(v, w) for w, v in coeffs.items()])
