"""Coefficient polynomials of an element of Z_m.

Writing ``A = x1 p + y1 q + x2 pq + y2 qp + ...`` in the block form of a Z_m pair, every block of
``A`` is a polynomial in ``B1 C1`` or ``C1 B1``. The ``phi`` polynomials collect those coefficients
and ``psi`` is the polynomial whose vanishing at ``C1 B1`` decides group invertibility.
"""
import logging
from typing import List, Optional, Sequence, Union

import sympy

from idemalg.classify.types_ import CoefficientProfile, PsiBundle, t
from idemalg.core.constants import INFINITE
from idemalg.core.exceptions import PreconditionViolation
from idemalg.core.utils import to_sympy

log = logging.getLogger(__name__)

Multiplicity = Union[int, float]

T = sympy.Poly(t, t, domain=sympy.QQ)


def _poly(ascending: Sequence) -> sympy.Poly:
    coeffs = [to_sympy(c) for c in ascending] or [sympy.Integer(0)]
    return sympy.Poly.from_list(coeffs[::-1], t, domain=sympy.QQ)


def _grouped(values, first: int, second: Optional[int], count: int) -> sympy.Poly:
    """``sum_j (v[2j + first] + v[2j + second]) t^j`` with 1-based ``v`` and ``v[0] = 0``."""
    coeffs: List = []
    for j in range(count):
        c = values(2 * j + first)
        if second is not None:
            c += values(2 * j + second)
        coeffs.append(c)
    return _poly(coeffs)


def psi_bundle(profile: CoefficientProfile) -> PsiBundle:
    count = len(profile) // 2 + 1
    x, y = profile.xi, profile.yi

    phi00 = _grouped(x, 0, 1, count)
    phi11 = _grouped(y, 0, 1, count)
    phi01 = _grouped(x, 1, 2, count)
    phi10 = _grouped(y, 1, 2, count)
    phi02 = _grouped(x, 1, None, count)
    phi12 = _grouped(y, 1, None, count)
    phi02p = _grouped(x, 2, None, count)
    phi12p = _grouped(y, 2, None, count)

    return PsiBundle(
        phi00=phi00,
        phi11=phi11,
        phi01=phi01,
        phi10=phi10,
        psi=phi00 * phi11 - T * phi01 * phi10,
        phi02=phi02,
        phi12=phi12,
        phi02p=phi02p,
        phi12p=phi12p,
        psi1=phi00 * phi12 - T * phi10 * phi02p,
        psi2=phi00 * phi12p - phi10 * phi02,
    )


def root_zero_multiplicity(poly: Union[sympy.Poly, sympy.Expr]) -> Multiplicity:
    """Multiplicity of 0 as a root; the zero polynomial gets ``INFINITE``."""
    if not isinstance(poly, sympy.Poly):
        poly = sympy.Poly(poly, t, domain=sympy.QQ)
    if poly.is_zero:
        return INFINITE
    count = 0
    for c in reversed(poly.all_coeffs()):
        if c != 0:
            break
        count += 1
    return count


def countzero_check(profile: CoefficientProfile, n: Optional[int] = None) -> bool:
    """With ``y1 = 0``, a root of multiplicity ``n`` of psi is one of psi1 and psi2 as well.

    ``n`` defaults to the multiplicity of 0 in psi. When psi vanishes identically the statement
    holds vacuously.
    """
    if profile.y1 != 0:
        raise PreconditionViolation(f"Algebra error: countzero needs y1 = 0, got {profile.y1}.")
    bundle = psi_bundle(profile)
    order = root_zero_multiplicity(bundle.psi)
    if n is None:
        if order == INFINITE:
            log.debug("psi vanishes identically for %s.", profile.as_dict())
            return True
        n = int(order)
    if order < n:
        return True
    return root_zero_multiplicity(bundle.psi1) >= n and root_zero_multiplicity(bundle.psi2) >= n
