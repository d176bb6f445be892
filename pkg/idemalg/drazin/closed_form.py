"""Closed forms for the Drazin and group inverse of ``alpha p + q``.

Every formula is kept as a list of ``(coefficient, word)`` terms and realized either in
``alg(p,q)`` through normal forms or in a matrix model through word images.
"""
from fractions import Fraction
import logging
from typing import List, Optional, Tuple, Union

from idemalg.core.exceptions import HypothesisViolation, ParameterError, PresentationMismatch
from idemalg.core.types_ import Family, Letter
from idemalg.drazin.oracle import certify, drazin_via_left_right, measure_index
from idemalg.drazin.types_ import ClosedFormCoefficients, DrazinResult, Operand, phi
from idemalg.linalg import RationalMatrix
from idemalg.models.types_ import LambdaSpec, ModelPair
from idemalg.models.verification import word_image
from idemalg.wordalg.rewriting import normal_form
from idemalg.wordalg.types_ import Element, Presentation, Word

log = logging.getLogger(__name__)

Terms = List[Tuple[Fraction, Word]]
Target = Union[Presentation, ModelPair]


def _alternating_sum(alpha: Fraction, m: int) -> Terms:
    """Shared head of the ``alpha != -1`` formulas, summed over orders 1 .. 2m-3."""
    terms: Terms = []
    for i in range(1, 2 * m - 2):
        h, f = i // 2, phi(i)
        sign = (-1) ** (i - 1)
        terms.append((sign * (h + (h + f) / alpha), Word(Letter.P, i)))
        terms.append((sign * (h + f + h / alpha), Word(Letter.Q, i)))
    return terms


def _odd_difference(m: int) -> Terms:
    """``sum over odd i <= 2m-3`` of ``(qp)^(i//2) q - (pq)^(i//2) p``."""
    terms: Terms = []
    for i in range(1, 2 * m - 2, 2):
        terms.append((Fraction(1), Word(Letter.Q, i)))
        terms.append((Fraction(-1), Word(Letter.P, i)))
    return terms


def left_witness_terms(c: ClosedFormCoefficients) -> Terms:
    """``A`` with ``A (alpha p + q)^3 = (alpha p + q)^2`` under ``(pq)^(m-1) = (pq)^m``."""
    alpha, m = c.alpha, c.m
    return _alternating_sum(alpha, m) + [
        (-(m - 1 + (m - 1) / alpha), Word.qp_power(m - 1)),
        (-((m - 1) / alpha - alpha / (1 + alpha) ** 2), Word.pq_power(m - 1)),
        ((m - 1) / alpha + 1 / (1 + alpha) ** 2, Word.qp_power_q(m - 1)),
    ]


def right_witness_terms(c: ClosedFormCoefficients) -> Terms:
    """``A'`` with ``(alpha p + q)^3 A' = (alpha p + q)^2``.

    The ``(qp)^(m-1)`` coefficient carries the same sign as in ``A``; with a plus sign the
    identity already fails for ``m = 2``.
    """
    alpha, m = c.alpha, c.m
    return _alternating_sum(alpha, m) + [
        (-(m - 1 + (m - 1) / alpha), Word.qp_power(m - 1)),
        (1 / (alpha + 1) ** 2 + 1 - m, Word.pq_power(m - 1)),
        (m - 1 + alpha / (1 + alpha) ** 2, Word.pq_power_p(m - 1)),
    ]


def minus_one_terms(m: int) -> Terms:
    """``B`` for ``q - p``."""
    return _odd_difference(m)


def lambda_witness_terms(c: ClosedFormCoefficients) -> Terms:
    """``A`` with ``A (alpha p + q)^2 = alpha p + q`` under ``lam (pq)^(m-1) = (pq)^m``."""
    alpha, m = c.alpha, c.m
    return _alternating_sum(alpha, m) + [
        (-(m - 1 + (m - 1) / alpha), Word.qp_power(m - 1)),
        (c.a1, Word.pq_power(m - 1)),
        (c.a2, Word.pq_power_p(m - 1)),
        (c.b1, Word.qp_power_q(m - 1)),
        (c.b2, Word.qp_power(m)),
    ]


def lambda_minus_one_terms(lam: Fraction, m: int) -> Terms:
    scale = 1 / (1 - lam)
    return _odd_difference(m) + [
        (scale, Word.qp_power_q(m - 1)),
        (-scale, Word.pq_power_p(m - 1)),
    ]


def realize(terms: Terms, target: Target) -> Operand:
    if isinstance(target, Presentation):
        return Element.combination(target, terms)
    result = RationalMatrix.zeros(target.size)
    for coefficient, word in terms:
        result = result + word_image(word, target) * coefficient
    return result


def alpha_p_plus_q(alpha: Fraction, target: Target) -> Operand:
    return realize([(alpha, Word(Letter.P, 1)), (Fraction(1), Word(Letter.Q, 1))], target)


def _hypothesis_holds(target: Target, m: int) -> bool:
    if isinstance(target, Presentation):
        return normal_form(Word.pq_power(m - 1), target) == normal_form(Word.pq_power(m), target)
    return word_image(Word.pq_power(m - 1), target) == word_image(Word.pq_power(m), target)


def _resolve_m(target: Target, m: Optional[int]) -> int:
    """The given m, the parameter of an F family, or the least m that works in Zn."""
    if m is not None:
        return m
    pres = target if isinstance(target, Presentation) else target.intended
    if not isinstance(pres, Presentation):
        raise ParameterError(f"m must be given for {target}.")
    if pres.family is not Family.ZN:
        return pres.m
    # (pq)^j vanishes in Zn once 2j exceeds n
    m = 2
    while not _hypothesis_holds(target, m):
        m += 1
    log.debug("Using m = %d for %s.", m, target)
    return m


def check_power_hypothesis(target: Target, m: int) -> None:
    """Raise unless ``(pq)^(m-1) = (pq)^m`` holds in ``target``."""
    if not _hypothesis_holds(target, m):
        raise HypothesisViolation(f"Algebra error: (pq)^{m - 1} != (pq)^{m} in {target}.")


def closed_form_drazin_alpha_pq(alpha, target: Target, m: Optional[int] = None) -> DrazinResult:
    """``A^3 (alpha p + q)^2`` for ``alpha != -1`` and ``B^4 (q - p)^3`` for ``alpha = -1``."""
    m = _resolve_m(target, m)
    c = ClosedFormCoefficients.for_alpha(alpha, m)
    check_power_hypothesis(target, m)
    a = alpha_p_plus_q(c.alpha, target)
    if c.alpha != -1:
        A = realize(left_witness_terms(c), target)
        inverse, bound = A**3 * a**2, 2
    else:
        B = realize(minus_one_terms(m), target)
        inverse, bound = B**4 * a**3, 3
    return certify(a, inverse, measure_index(a, inverse, bound), "closed-form")


def alpha_pq_witnesses(alpha, target: Target, m: Optional[int] = None) -> Tuple[Operand, Operand]:
    """One sided witnesses ``(A, A')`` for ``alpha != -1``.

    ``A`` works from the left, ``A (alpha p + q)^3 = (alpha p + q)^2``, and ``A'`` from the right.
    """
    m = _resolve_m(target, m)
    c = ClosedFormCoefficients.for_alpha(alpha, m)
    if c.alpha == -1:
        raise ParameterError("The one sided witnesses need alpha != -1.")
    check_power_hypothesis(target, m)
    return realize(left_witness_terms(c), target), realize(right_witness_terms(c), target)


def closed_form_via_witnesses(alpha, target: Target, m: Optional[int] = None) -> DrazinResult:
    """Rebuild the Drazin inverse of ``alpha p + q`` from ``A'`` and ``A`` with ``k = 2``."""
    m = _resolve_m(target, m)
    c = ClosedFormCoefficients.for_alpha(alpha, m)
    y, x = alpha_pq_witnesses(c.alpha, target, m)
    return drazin_via_left_right(alpha_p_plus_q(c.alpha, target), x, y, 2, 2)


def closed_form_group_lambda(alpha, spec: LambdaSpec, pair: ModelPair) -> DrazinResult:
    """``A^2 (alpha p + q)`` or ``B^2 (q - p)`` evaluated in a model of ``spec``."""
    c = ClosedFormCoefficients.for_lambda(alpha, spec.lam, spec.m)
    if pair.intended != spec:
        raise PresentationMismatch(f"Algebra error: {pair} does not realize {spec}.")
    m = spec.m
    lhs = word_image(Word.pq_power(m - 1), pair) * spec.lam
    if lhs != word_image(Word.pq_power(m), pair):
        raise HypothesisViolation(f"Algebra error: lambda (PQ)^{m - 1} != (PQ)^{m} in {pair}.")
    if spec.degenerate:
        log.info("lambda = 0, evaluating the group inverse formula on a degenerate pair.")
    a = alpha_p_plus_q(c.alpha, pair)
    if c.alpha != -1:
        A = realize(lambda_witness_terms(c), pair)
        inverse = A**2 * a
    else:
        B = realize(lambda_minus_one_terms(spec.lam, m), pair)
        inverse = B**2 * a
    return certify(a, inverse, measure_index(a, inverse, 1), "closed-form")
