"""Group invertibility in ``Z_m``, ``Z_m + W3`` and ``Z_m + W4`` read off the coefficients.

The Drazin index of an element that is not group invertible is not given by the coefficient
tests, it is measured on the matrix model.
"""
from fractions import Fraction
import logging
from typing import Any, Dict, Optional, Tuple

from idemalg.classify.oracle import (
    direct_sum_matrix,
    measured_index,
    oracle_verdict,
    profile_matrix,
    zn_model,
)
from idemalg.classify.psi import root_zero_multiplicity, psi_bundle
from idemalg.classify.types_ import CoefficientProfile, Verdict
from idemalg.core.constants import INFINITE
from idemalg.core.exceptions import ParameterError, WrongUsage
from idemalg.core.types_ import Letter, Rule, Summand, VerdictKind
from idemalg.core.utils import ceil_div
from idemalg.linalg import RationalMatrix
from idemalg.wordalg.rewriting import basis_of
from idemalg.wordalg.types_ import Presentation

log = logging.getLogger(__name__)

PGI = VerdictKind.PROPERLY_GROUP_INVERTIBLE


def quarter_bound(m: int, y1) -> int:
    """Closed form ``ceil(m/4)`` threshold, one less when ``m = 1 mod 4`` and ``y1 = 0``.

    Agrees with :func:`psi_threshold` only for some m.
    """
    if m % 4 == 1 and y1 == 0:
        return ceil_div(m, 4) - 1
    return ceil_div(m, 4)


def psi_threshold(m: int, x1, y1, vanishing: Letter = Letter.Q) -> int:
    """Nilpotency degree of ``C1 B1`` (``y1 = 0``) or ``B1 C1`` (``x1 = 0``) in the Z_m model.

    ``C1 B1`` moves a Q-word two orders up, so its degree is half the number of Q-words rounded
    up, and likewise for ``B1 C1`` on P-words.
    """
    if (x1 == 0) == (y1 == 0):
        raise WrongUsage("The psi threshold needs exactly one of x1, y1 to vanish.")
    basis = basis_of(Presentation.zn(m, vanishing))
    letter = Letter.Q if y1 == 0 else Letter.P
    return ceil_div(len(basis.words_starting_with(letter)), 2)


def index_bound(m: int, nilpotent: bool) -> int:
    if m < 1:
        raise ParameterError(f"The index bound needs m >= 1, got {m}.")
    if not nilpotent:
        return ceil_div(m, 4)
    extra = {0: 0, 1: 1, 2: 1, 3: 2}[m % 4]
    return 2 * (m // 4) + extra


def _multiplicity_dict(value) -> Any:
    return "infinite" if value == INFINITE else value


def _z_part(
    profile: CoefficientProfile, m: int, vanishing: Letter
) -> Tuple[Optional[str], Dict[str, Any]]:
    """Why the Z_m component is group invertible (``zero``, ``unit`` or ``psi``), or None."""
    if profile.is_zero:
        return "zero", {}
    x1, y1 = profile.x1, profile.y1
    if x1 * y1 != 0:
        return "unit", {}
    if x1 == 0 and y1 == 0:
        return None, {}
    multiplicity = root_zero_multiplicity(psi_bundle(profile).psi)
    threshold = psi_threshold(m, x1, y1, vanishing)
    details = {"psi_multiplicity": _multiplicity_dict(multiplicity), "threshold": threshold}
    return ("psi" if multiplicity >= threshold else None), details


def _failed(M: RationalMatrix, spectrum, rule: Rule, details: Dict[str, Any]) -> Verdict:
    index = measured_index(M)
    nilpotent = all(v == 0 for v in spectrum)
    kind = VerdictKind.NILPOTENT if nilpotent else VerdictKind.DRAZIN_ONLY
    return Verdict(kind, spectrum, rule, index, details=details)


def classify_zm(
    profile: CoefficientProfile,
    m: int,
    ambient_unit_in_algebra: bool,
    vanishing: Letter = Letter.Q,
) -> Verdict:
    """Classify an element of ``Z_m``.

    With the ambient unit inside the algebra an element with ``x1 y1 != 0`` is invertible, the
    spectrum is ``{x1, y1}``. Without it the same element is properly group invertible and 0
    joins the spectrum.
    """
    profile = profile.truncated(Presentation.zn(m, vanishing))
    x1, y1 = profile.x1, profile.y1
    spectrum = {x1, y1} if ambient_unit_in_algebra else {x1, y1, Fraction(0)}
    reason, details = _z_part(profile, m, vanishing)

    if reason == "zero":
        return Verdict(VerdictKind.ZERO, spectrum, Rule.ZERO)
    if reason == "unit":
        if ambient_unit_in_algebra:
            return Verdict(VerdictKind.INVERTIBLE, spectrum, Rule.UNIT_SPECTRUM)
        return Verdict(PGI, spectrum, Rule.NO_UNIT_INVERTIBLE_PART)

    psi_rule = Rule.UNIT_PSI if ambient_unit_in_algebra else Rule.NO_UNIT_PSI
    if reason == "psi":
        return Verdict(PGI, spectrum, psi_rule, details=details)

    M = profile_matrix(profile, zn_model(m, ambient_unit_in_algebra, vanishing))
    rule = psi_rule if details else Rule.NILPOTENT
    verdict = _failed(M, spectrum, rule, details)
    log.debug("%s in Z_%d has index %d.", profile.as_dict(), m, verdict.index)
    return verdict


def _check_direct_sum(m: int):
    if m < 2:
        raise ParameterError(f"Z_m + W needs m >= 2, got {m}.")


def _direct_sum_spectrum(profile: CoefficientProfile):
    return {Fraction(0), profile.x1, profile.y1, profile.total}


def classify_zm_w3(profile: CoefficientProfile, m: int, vanishing: Letter = Letter.Q) -> Verdict:
    """Classify an element of ``Z_m + W3``.

    In W3 the element reduces to ``a p + b pq + c q`` and is group invertible iff it is zero or
    ``x + y != 0``; the Z_m component is handled as in :func:`classify_zm`.
    """
    _check_direct_sum(m)
    z_profile = profile.truncated(Presentation.zn(m, vanishing))
    spectrum = _direct_sum_spectrum(profile)

    x_odd, x_even = profile.odd_sum(profile.x), profile.even_sum(profile.x)
    y_odd, y_even = profile.odd_sum(profile.y), profile.even_sum(profile.y)
    w_coefficients = (x_odd + y_even, x_even - y_even, y_odd + y_even)
    w_zero = not any(w_coefficients)
    chi = profile.total

    reason, details = _z_part(z_profile, m, vanishing)
    details = {**details, "w_part": [str(c) for c in w_coefficients], "chi": str(chi)}

    if reason == "zero" and w_zero:
        return Verdict(VerdictKind.ZERO, spectrum, Rule.ZERO, details=details)
    if reason is not None:
        if w_zero:
            return Verdict(PGI, spectrum, Rule.W3_ZERO_SUMMAND, details=details)
        if chi != 0:
            return Verdict(PGI, spectrum, Rule.W3_NONZERO_TRACE, details=details)
    M = direct_sum_matrix(profile, m, Summand.W3, vanishing)
    return _failed(M, spectrum, Rule.W3_FAILS, details)


def classify_zm_w4(profile: CoefficientProfile, m: int, vanishing: Letter = Letter.Q) -> Verdict:
    """Classify an element of ``Z_m + W4``.

    The coefficient conditions are sufficient. When none of them applies the verdict comes from
    the matrix model and is marked as not decided by the theorem.
    """
    _check_direct_sum(m)
    z_profile = profile.truncated(Presentation.zn(m, vanishing))
    spectrum = _direct_sum_spectrum(profile)

    x_odd, x_even = profile.odd_sum(profile.x), profile.even_sum(profile.x)
    y_odd, y_even = profile.odd_sum(profile.y), profile.even_sum(profile.y)
    w_zero = not any((x_odd, x_even, y_odd, y_even))
    chi = profile.total

    reason, details = _z_part(z_profile, m, vanishing)
    details = {
        **details,
        "w_part": [str(c) for c in (x_odd, x_even, y_odd, y_even)],
        "chi": str(chi),
    }

    if reason == "zero" and w_zero:
        return Verdict(VerdictKind.ZERO, spectrum, Rule.ZERO, details=details)
    if reason is not None:
        if w_zero:
            return Verdict(PGI, spectrum, Rule.W4_ZERO_SUMMAND, details=details)
        if chi != 0 and x_odd * y_odd == x_even * y_even:
            return Verdict(PGI, spectrum, Rule.W4_NONZERO_TRACE, details=details)

    log.debug("No W4 branch applies to %s, asking the matrix model.", profile.as_dict())
    verdict = oracle_verdict(direct_sum_matrix(profile, m, Summand.W4, vanishing))
    return Verdict(
        verdict.kind,
        verdict.spectrum,
        Rule.ORACLE,
        verdict.index,
        decided_by_theorem=False,
        details=details,
    )
