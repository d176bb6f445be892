from fractions import Fraction
from numbers import Rational as RationalNumber
from typing import Any, Iterable, List, Union

import sympy

from idemalg.core.exceptions import InputError

Scalar = Union[int, Fraction, str]


def to_fraction(value: Any) -> Fraction:
    """Parse ints, ``"num/den"`` strings, Fractions and sympy rationals exactly.

    Floats are refused so that nothing inexact leaks into the kernel.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"Expected a rational, got {value!r}.")
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, (int, RationalNumber)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip().replace("−", "-"))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"Could not parse {value!r} as a rational.") from exc
    raise InputError(f"Expected a rational, got {value!r}.")


def to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def parse_rationals(values: Iterable[Any]) -> List[Fraction]:
    return [to_fraction(v) for v in values]


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)
