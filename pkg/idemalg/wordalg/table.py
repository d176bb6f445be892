from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import itertools
import logging
from typing import Dict, List, Mapping, Optional, Tuple

from idemalg.core.exceptions import AssociativityViolation, PresentationMismatch, WrongUsage
from idemalg.core.utils import to_fraction
from idemalg.linalg import RationalMatrix
from idemalg.wordalg.rewriting import basis_of, concat, normal_terms
from idemalg.wordalg.types_ import Basis, Element, Presentation, Word

log = logging.getLogger(__name__)

Terms = Dict[Word, Fraction]


def _accumulate(out: Terms, terms: Mapping[Word, Fraction], scale: Fraction) -> None:
    for word, value in terms.items():
        total = out.get(word, Fraction(0)) + scale * value
        if total:
            out[word] = total
        else:
            out.pop(word, None)


@dataclass(frozen=True)
class StructureTable:
    """``products[(w1, w2)]`` is the basis expansion of ``w1 * w2``."""

    presentation: Presentation
    basis: Basis
    products: Mapping[Tuple[Word, Word], Mapping[Word, Fraction]]

    def product(self, w1: Word, w2: Word) -> Element:
        return Element(self.presentation, dict(self.products[(w1, w2)]))

    def multiply_terms(self, a: Mapping[Word, Fraction], b: Mapping[Word, Fraction]) -> Terms:
        out: Terms = {}
        for u, x in a.items():
            for v, y in b.items():
                _accumulate(out, self.products[(u, v)], x * y)
        return out

    def row(self, word: Word) -> List[Element]:
        """Products ``word * b`` for every basis word ``b``."""
        return [self.product(word, b) for b in self.basis]

    def as_dict(self) -> Dict[str, object]:
        return {
            **self.presentation.as_dict(),
            "basis": [str(w) for w in self.basis],
            "products": [
                [str(self.product(u, v)) for v in self.basis] for u in self.basis
            ],
        }


def _check_associativity(table: StructureTable) -> None:
    words = table.basis.words
    one = Fraction(1)
    for u, v, w in itertools.product(words, repeat=3):
        left = table.multiply_terms(table.products[(u, v)], {w: one})
        right = table.multiply_terms({u: one}, table.products[(v, w)])
        if left != right:
            raise AssociativityViolation((u, v, w))


def build_structure_table(pres: Presentation, check: bool = True) -> StructureTable:
    """Tabulate all basis products of ``pres``.

    With ``check`` every basis triple is tested for associativity, which is what certifies the
    rewriting rules of a presentation.
    """
    basis = basis_of(pres)
    products = {
        (u, v): normal_terms(concat(u, v), pres) for u in basis.words for v in basis.words
    }
    table = StructureTable(pres, basis, products)
    if check:
        _check_associativity(table)
    log.debug("Built structure table for %s (dimension %d).", pres, len(basis))
    return table


@lru_cache(maxsize=64)
def structure_table(pres: Presentation) -> StructureTable:
    return build_structure_table(pres)


def multiply(a: Element, b: Element) -> Element:
    if a.presentation != b.presentation:
        raise PresentationMismatch(
            f"Algebra error: cannot multiply {a.presentation} by {b.presentation}."
        )
    table = structure_table(a.presentation)
    return Element(a.presentation, table.multiply_terms(a.coeffs, b.coeffs))


def power(a: Element, k: int) -> Element:
    return a**k


def left_regular_matrix(a: Element) -> RationalMatrix:
    """Matrix of ``x -> a * x`` in the basis of ``a.presentation``."""
    basis = basis_of(a.presentation)
    columns = [(a * Element(a.presentation, {b: 1})).vector() for b in basis]
    return RationalMatrix.from_columns(columns, len(basis))


def right_regular_matrix(a: Element) -> RationalMatrix:
    basis = basis_of(a.presentation)
    columns = [(Element(a.presentation, {b: 1}) * a).vector() for b in basis]
    return RationalMatrix.from_columns(columns, len(basis))


@dataclass(frozen=True)
class UnitalAlgebra:
    """``alg(p,q)`` with a formal unit ``e`` adjoined as coordinate 0."""

    presentation: Presentation

    @property
    def basis(self) -> Basis:
        return basis_of(self.presentation)

    @property
    def dimension(self) -> int:
        return len(self.basis) + 1

    @property
    def labels(self) -> List[str]:
        return ["e"] + [str(w) for w in self.basis]

    def vector(self, a: Element, scalar=0) -> List[Fraction]:
        self._own(a)
        return [to_fraction(scalar)] + a.vector()

    def split(self, vector: List[Fraction]) -> Tuple[Fraction, Element]:
        """Inverse of :meth:`vector`."""
        if len(vector) != self.dimension:
            raise WrongUsage(f"Expected {self.dimension} coordinates, got {len(vector)}.")
        return to_fraction(vector[0]), Element.from_vector(self.presentation, vector[1:])

    def left_regular_matrix(self, a: Element, scalar=0) -> RationalMatrix:
        """Matrix of ``x -> (scalar*e + a) * x`` on the unitalization."""
        return self._regular(a, scalar, left=True)

    def right_regular_matrix(self, a: Element, scalar=0) -> RationalMatrix:
        return self._regular(a, scalar, left=False)

    def _regular(self, a: Element, scalar, left: bool) -> RationalMatrix:
        self._own(a)
        s = to_fraction(scalar)
        columns = [[s] + a.vector()]
        for b in self.basis:
            unit = Element(self.presentation, {b: 1})
            product = a * unit if left else unit * a
            columns.append([Fraction(0)] + (product + unit.scale(s)).vector())
        return RationalMatrix.from_columns(columns, self.dimension)

    def _own(self, a: Element):
        if a.presentation != self.presentation:
            raise PresentationMismatch()


@lru_cache(maxsize=64)
def unitalize(pres: Presentation) -> UnitalAlgebra:
    return UnitalAlgebra(pres)


def unit_candidate(pres: Presentation) -> Element:
    """``p + q - pq - qp + pqp + qpq - ...`` truncated to the basis."""
    return Element(pres, {w: (-1) ** (w.order - 1) for w in basis_of(pres)})


def internal_unit(pres: Presentation) -> Optional[Element]:
    """The alternating sum if it is a two-sided unit of ``alg(p,q)``, otherwise ``None``."""
    candidate = unit_candidate(pres)
    for word in basis_of(pres):
        b = Element(pres, {word: 1})
        if candidate * b != b or b * candidate != b:
            log.debug("%s has no internal unit, it fails on %s.", pres, word)
            return None
    return candidate
