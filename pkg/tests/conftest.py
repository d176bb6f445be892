import dataclasses
from contextlib import contextmanager
from fractions import Fraction
from typing import Any, Iterator, Tuple

import faker
import pytest
from faker.providers import BaseProvider
from typer.testing import CliRunner

from idemalg.classify import CoefficientProfile
from idemalg.settings import idemalg_settings
from idemalg.settings_type import IdemAlgSettings
from idemalg.wordalg import Element, Presentation, basis_of

fake = faker.Faker()
faker.Faker.seed(2023)


class AlgebraFakeProvider(BaseProvider):
    """Random exact scalars, coefficient profiles and algebra elements."""

    def rational(self, bound: int = 3, nonzero: bool = False) -> Fraction:
        while True:
            value = Fraction(self.random_int(-bound, bound), self.random_int(1, 2))
            if value or not nonzero:
                return value

    def rationals(self, length: int, bound: int = 3) -> Tuple[Fraction, ...]:
        return tuple(self.rational(bound) for _ in range(length))

    def profile(self, length: int, shape: str = "dense") -> CoefficientProfile:
        x, y = list(self.rationals(length)), list(self.rationals(length))
        if shape == "y1-zero":
            x[0], y[0] = self.rational(nonzero=True), Fraction(0)
        elif shape == "x1-zero":
            x[0], y[0] = Fraction(0), self.rational(nonzero=True)
        elif shape == "nilpotent":
            x[0] = y[0] = Fraction(0)
        return CoefficientProfile(tuple(x), tuple(y))

    def element(self, pres: Presentation) -> Element:
        words = basis_of(pres).words
        return Element.combination(pres, list(zip(self.rationals(len(words)), words)))


fake.add_provider(AlgebraFakeProvider)


@pytest.fixture()
def small_settings() -> IdemAlgSettings:
    """Sweeps small enough for a unit test run."""
    return IdemAlgSettings(
        SEED=11,
        SAMPLES=6,
        ORACLE_SAMPLES=3,
        COUNTZERO_SAMPLES=60,
        ZN_RANGE=(3, 6),
        FAMILY_RANGE=(2, 3),
        MODEL_RANGE=(2, 3),
    )


@pytest.fixture()
def app_settings() -> IdemAlgSettings:
    return idemalg_settings


@pytest.fixture
def override_idemalg(app_settings):
    @contextmanager
    def inner(name: str, replace: Any) -> Iterator[None]:
        if name not in {f.name for f in dataclasses.fields(app_settings)}:
            raise ValueError(f"{name} is not an idemalg setting")
        previous = getattr(app_settings, name)
        setattr(app_settings, name, replace)
        try:
            yield
        finally:
            setattr(app_settings, name, previous)

    return inner


@pytest.fixture()
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture(params=["F1", "F2", "F3", "F4"])
def family(request) -> str:
    return request.param
