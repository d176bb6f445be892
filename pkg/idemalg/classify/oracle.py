"""Rank based verdicts and spectra, independent of the coefficient theorems."""
from functools import lru_cache
import logging
from typing import Union

from idemalg.classify.types_ import CoefficientProfile, Spectrum, Verdict, t
from idemalg.core.types_ import Letter, Rule, Summand, VerdictKind
from idemalg.core.utils import to_fraction
from idemalg.drazin.oracle import matrix_drazin
from idemalg.linalg import RationalMatrix
from idemalg.models.builders import build_zn_pair, w3_pair, w4_pair
from idemalg.models.types_ import ModelPair
from idemalg.models.verification import word_image
from idemalg.wordalg.table import unitalize
from idemalg.wordalg.types_ import Element, Word

log = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def zn_model(m: int, ambient_unit_in_algebra: bool, vanishing: Letter = Letter.Q) -> ModelPair:
    return build_zn_pair(m, ambient_unit_in_algebra, vanishing)


@lru_cache(maxsize=None)
def summand_model(summand: Summand) -> ModelPair:
    return w3_pair() if summand is Summand.W3 else w4_pair()


@lru_cache(maxsize=4096)
def _image(word: Word, pair: ModelPair) -> RationalMatrix:
    return word_image(word, pair)


def profile_matrix(profile: CoefficientProfile, pair: ModelPair) -> RationalMatrix:
    """``x1 P + y1 Q + x2 PQ + ...`` without reducing the profile first."""
    result = RationalMatrix.zeros(pair.size)
    for value, word in profile.terms():
        if value:
            result = result + _image(word, pair) * value
    return result


def direct_sum_matrix(
    profile: CoefficientProfile, m: int, summand: Summand, vanishing: Letter = Letter.Q
) -> RationalMatrix:
    """The profile evaluated in ``Z_m + W3`` or ``Z_m + W4``."""
    return RationalMatrix.block_diagonal(
        profile_matrix(profile, zn_model(m, True, vanishing)),
        profile_matrix(profile, summand_model(summand)),
    )


def spectrum_oracle(target: Union[Element, RationalMatrix]) -> Spectrum:
    """Rational roots of the characteristic polynomial of ``target``.

    Elements are sent to their left multiplication on the unitalization. Irreducible factors of
    degree above one are counted, not solved.
    """
    if isinstance(target, Element):
        target = unitalize(target.presentation).left_regular_matrix(target)
    if target.rows == 0:
        return Spectrum(frozenset())
    _, factors = target.charpoly(t).factor_list()
    values = set()
    irrational = 0
    for factor, _ in factors:
        if factor.degree() == 1:
            c1, c0 = factor.all_coeffs()
            values.add(to_fraction(-c0 / c1))
        else:
            irrational += 1
    if irrational:
        log.debug("Characteristic polynomial has %d nonlinear factors.", irrational)
    return Spectrum(frozenset(values), irrational)


def oracle_verdict(M: RationalMatrix, with_spectrum: bool = True) -> Verdict:
    """Classify a represented element by ranks and by its Drazin inverse.

    Invertibility is taken in the full matrix algebra, so an element of a model without the
    identity is never reported invertible.
    """
    spectrum = spectrum_oracle(M).values if with_spectrum else frozenset()
    if M.is_zero:
        return Verdict(VerdictKind.ZERO, spectrum, Rule.ORACLE, decided_by_theorem=False)
    if M.is_invertible():
        return Verdict(VerdictKind.INVERTIBLE, spectrum, Rule.ORACLE, decided_by_theorem=False)
    if M.rank() == (M * M).rank():
        return Verdict(
            VerdictKind.PROPERLY_GROUP_INVERTIBLE, spectrum, Rule.ORACLE, decided_by_theorem=False
        )
    result = matrix_drazin(M)
    kind = VerdictKind.NILPOTENT if result.inverse.is_zero else VerdictKind.DRAZIN_ONLY
    return Verdict(kind, spectrum, Rule.ORACLE, result.index, decided_by_theorem=False)


def measured_index(M: RationalMatrix) -> int:
    return matrix_drazin(M).index
