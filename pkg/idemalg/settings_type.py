import os
from dataclasses import dataclass, field
from typing import Generic, Optional, Tuple, TypeVar

from idemalg.core.constants import REPORT_DIR_ENV
from idemalg.core.exceptions import ParameterError
from idemalg.core.types_ import Letter

T = TypeVar("T")


class EnvSetting(Generic[T]):
    __slots__ = ("variable", "cached")

    def __init__(self, variable: str, value: Optional[T] = None):
        self.variable = variable
        self.cached: Optional[T] = value

    @property
    def value(self) -> Optional[T]:
        if self.cached:  # slotted classes can't use cached property (without __dict__)
            return self.cached
        return os.environ.get(self.variable)  # type: ignore

    @classmethod
    def override(cls, value: T) -> "EnvSetting":
        return EnvSetting(variable="", value=value)


@dataclass
class IdemAlgSettings:
    SEED: int = 0
    """Seed of every randomized sweep, reports are reproducible for a fixed seed."""
    SAMPLES: int = 500
    """Random coefficient profiles per setting in the classifier and index sweeps."""
    ORACLE_SAMPLES: int = 200
    """Random elements per presentation when comparing the two Drazin oracles."""
    COUNTZERO_SAMPLES: int = 10_000
    COEFFICIENT_RANGE: int = 3
    """Random coefficients are ``n / d`` with ``|n| <= COEFFICIENT_RANGE`` and ``d`` in {1, 2}."""
    ZN_ODD_VANISHING: Letter = Letter.Q
    """Start letter of the order-k word that vanishes in Z_n for odd n.

    The default matches the 3x3 example where ``qp = 0``.
    """
    ZN_RANGE: Tuple[int, int] = (3, 12)
    """Inclusive range of n for the Z_n classifier and index sweeps."""
    FAMILY_RANGE: Tuple[int, int] = (2, 8)
    """Inclusive range of m for dimension and associativity checks of F1..F4."""
    MODEL_RANGE: Tuple[int, int] = (2, 6)
    """Inclusive range of m for matrix model and radical checks."""
    REPORT_DIR: EnvSetting[str] = field(default_factory=lambda: EnvSetting(REPORT_DIR_ENV))
    """Directory receiving ``<command>.json`` reports, unset means stdout only."""

    def __post_init__(self):
        for name in ("SAMPLES", "ORACLE_SAMPLES", "COUNTZERO_SAMPLES", "COEFFICIENT_RANGE"):
            if getattr(self, name) < 1:
                raise ParameterError(f"{name} must be positive.")
        for name in ("ZN_RANGE", "FAMILY_RANGE", "MODEL_RANGE"):
            low, high = getattr(self, name)
            if low > high:
                raise ParameterError(f"{name} is empty: {low} > {high}.")
        if self.FAMILY_RANGE[0] < 2 or self.MODEL_RANGE[0] < 2:
            raise ParameterError("F-families need m >= 2.")
