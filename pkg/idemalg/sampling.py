"""Seeded random scalars, profiles and elements for the verification sweeps."""
from fractions import Fraction
import random
from typing import List

from idemalg.classify.types_ import CoefficientProfile
from idemalg.wordalg.rewriting import basis_of
from idemalg.wordalg.types_ import Element, Presentation

#: profile shapes cycled by the sweeps: dense, y1 = 0, x1 = 0, x1 = y1 = 0
SHAPES = ("dense", "y1-zero", "x1-zero", "nilpotent")


def random_scalar(rng: random.Random, bound: int, nonzero: bool = False) -> Fraction:
    """``n / d`` with ``n`` in ``[-bound, bound]`` and ``d`` in ``{1, 2}``."""
    while True:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, 2))
        if value or not nonzero:
            return value


def _coefficients(rng: random.Random, length: int, bound: int, density: float) -> List[Fraction]:
    return [
        random_scalar(rng, bound) if rng.random() < density else Fraction(0) for _ in range(length)
    ]


def random_profile(
    rng: random.Random, length: int, bound: int, shape: str = "dense"
) -> CoefficientProfile:
    """A profile of the given ``shape``; every shape except ``dense`` is sparse."""
    density = 1.0 if shape == "dense" else 0.35
    x = _coefficients(rng, length, bound, density)
    y = _coefficients(rng, length, bound, density)
    if shape == "y1-zero":
        x[0], y[0] = random_scalar(rng, bound, nonzero=True), Fraction(0)
    elif shape == "x1-zero":
        x[0], y[0] = Fraction(0), random_scalar(rng, bound, nonzero=True)
    elif shape == "nilpotent":
        x[0] = y[0] = Fraction(0)
    return CoefficientProfile(tuple(x), tuple(y))


def random_element(rng: random.Random, pres: Presentation, bound: int) -> Element:
    words = basis_of(pres).words
    return Element.combination(pres, [(random_scalar(rng, bound), w) for w in words])
