"""Exact rational matrices.

A thin immutable wrapper around :class:`sympy.ImmutableMatrix` that only ever holds rationals,
accepts :class:`fractions.Fraction` scalars and serializes entries as ``"num/den"`` strings.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import sympy

from idemalg.core.exceptions import InputError, WrongUsage
from idemalg.core.utils import to_fraction, to_sympy

ScalarLike = Union[int, Fraction]


class RationalMatrix:
    __slots__ = ("_m",)

    def __init__(self, matrix: sympy.MatrixBase):
        self._m = sympy.ImmutableMatrix(matrix)

    # construction

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls.zeros(0, 0)
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise InputError("Matrix rows have different lengths.")
        entries = [to_sympy(to_fraction(x)) for r in rows for x in r]
        return cls(sympy.ImmutableMatrix(len(rows), width, entries))

    @classmethod
    def zeros(cls, rows: int, cols: Optional[int] = None) -> "RationalMatrix":
        return cls(sympy.zeros(rows, rows if cols is None else cols))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(sympy.eye(n))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]], rows: int) -> "RationalMatrix":
        if not columns:
            return cls.zeros(rows, 0)
        return cls.from_rows([[col[i] for col in columns] for i in range(rows)])

    @classmethod
    def block_diagonal(cls, *blocks: "RationalMatrix") -> "RationalMatrix":
        size = sum(b.rows for b in blocks)
        out = sympy.zeros(size, sum(b.cols for b in blocks))
        r = c = 0
        for b in blocks:
            if b.rows and b.cols:
                out[r : r + b.rows, c : c + b.cols] = b._m
            r += b.rows
            c += b.cols
        return cls(out)

    # shape and access

    @property
    def as_sympy(self) -> sympy.ImmutableMatrix:
        return self._m

    @property
    def shape(self) -> Tuple[int, int]:
        return self._m.shape

    @property
    def rows(self) -> int:
        return self._m.rows

    @property
    def cols(self) -> int:
        return self._m.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        return to_fraction(self._m[index])

    def column(self, j: int) -> List[Fraction]:
        return [self[i, j] for i in range(self.rows)]

    def entries(self) -> List[List[Fraction]]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def flat(self) -> List[sympy.Rational]:
        return list(self._m)

    # arithmetic

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(self._m + other._m)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(self._m - other._m)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(-self._m)

    def __mul__(self, other: Union["RationalMatrix", ScalarLike]) -> "RationalMatrix":
        if isinstance(other, RationalMatrix):
            return RationalMatrix(self._m * other._m)
        return RationalMatrix(self._m * to_sympy(to_fraction(other)))

    def __rmul__(self, other: ScalarLike) -> "RationalMatrix":
        return RationalMatrix(self._m * to_sympy(to_fraction(other)))

    def __pow__(self, k: int) -> "RationalMatrix":
        if k < 0:
            raise WrongUsage("Use inverse() for negative powers.")
        if k == 0:
            return RationalMatrix.identity(self.rows)
        return RationalMatrix(self._m**k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._m == other._m

    def __hash__(self) -> int:
        return hash(self._m)

    def __repr__(self) -> str:
        return f"RationalMatrix({self.as_json()})"

    # linear algebra

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for x in self._m)

    def rank(self) -> int:
        if 0 in self.shape:
            return 0
        return self._m.rank()

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.rows

    def inverse(self) -> "RationalMatrix":
        if self.rows == 0:
            return self
        return RationalMatrix(self._m.inv())

    def rank_factorization(self) -> Tuple["RationalMatrix", "RationalMatrix"]:
        """Return ``(B, C)`` with ``self == B * C`` and both of full rank.

        ``C`` is made of the nonzero rows of the reduced row echelon form and ``B`` of the pivot
        columns of ``self``.
        """
        reduced, pivots = self._m.rref()
        r = len(pivots)
        left = self._m.extract(list(range(self.rows)), list(pivots))
        right = reduced[:r, :]
        return RationalMatrix(left), RationalMatrix(right)

    def charpoly(self, symbol: sympy.Symbol) -> sympy.Poly:
        return self._m.charpoly(symbol)

    def apply(self, vector: Sequence[Fraction]) -> List[Fraction]:
        column = sympy.ImmutableMatrix(len(vector), 1, [to_sympy(v) for v in vector])
        return [to_fraction(x) for x in self._m * column]

    # serialization

    def as_json(self) -> List[List[str]]:
        return [[str(x) for x in row] for row in self.entries()]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[str]]) -> "RationalMatrix":
        return cls.from_rows([list(row) for row in data])


def span_rank(matrices: Iterable[RationalMatrix]) -> int:
    """Dimension of the linear span of ``matrices`` inside the space of matrices."""
    rows = [m.flat() for m in matrices]
    if not rows or not rows[0]:
        return 0
    return sympy.Matrix(rows).rank()


def as_dict(matrix: RationalMatrix) -> Dict[str, Any]:
    return {"rows": matrix.rows, "cols": matrix.cols, "entries": matrix.as_json()}
