"""Drazin inverses by exact linear algebra.

Matrices use Cline's iterated rank factorization: with ``A = B1 C1`` and ``Ci Bi = B(i+1) C(i+1)``
the first nonsingular ``Ck Bk`` gives index k and
``A^D = B1 ... Bk (Ck Bk)^-(k+1) Ck ... C1``. Algebra elements are sent to the left regular
representation on the unitalization and read back from the image of the adjoined unit.
"""
from functools import reduce
import logging
from typing import Dict, List

from idemalg.core.exceptions import WitnessInvalid, WrongUsage
from idemalg.drazin.types_ import DrazinResult, Operand
from idemalg.linalg import RationalMatrix
from idemalg.wordalg.table import unitalize
from idemalg.wordalg.types_ import Element

log = logging.getLogger(__name__)


def _power(a: Operand, k: int) -> Operand:
    if isinstance(a, RationalMatrix):
        return a**k
    if k == 0:
        raise WrongUsage("alg(p,q) has no unit to take a zeroth power.")
    return a**k


def _smallest_power(a: Operand) -> int:
    # matrices have an identity, algebra elements start at the first power
    return 0 if isinstance(a, RationalMatrix) else 1


def residuals(a: Operand, b: Operand, k: int) -> Dict[str, Operand]:
    return {
        "ab = ba": a * b - b * a,
        "ab^2 = b": a * b * b - b,
        "a^(k+1)b = a^k": _power(a, k + 1) * b - _power(a, k),
    }


def absorbs(a: Operand, b: Operand, k: int) -> bool:
    """``a^(k+1) b == a^k``."""
    return (_power(a, k + 1) * b - _power(a, k)).is_zero


def measure_index(a: Operand, b: Operand, limit: int) -> int:
    """Smallest k up to ``limit`` with ``a^(k+1) b = a^k``, or ``limit`` if none works."""
    for k in range(_smallest_power(a), limit + 1):
        if absorbs(a, b, k):
            return k
    return limit


def certify(a: Operand, b: Operand, index: int, method: str = "oracle") -> DrazinResult:
    """Attach the three identities at ``index`` and the minimality check at ``index - 1``."""
    minimal = True
    if index - 1 >= _smallest_power(a):
        minimal = not absorbs(a, b, index - 1)
    result = DrazinResult(b, index, residuals(a, b, index), minimal, method)
    if not result.verified:
        log.warning("%s result with index %d fails its checks.", method, index)
    return result


def _chain(matrices: List[RationalMatrix]) -> RationalMatrix:
    return reduce(lambda x, y: x * y, matrices)


def matrix_drazin(M: RationalMatrix) -> DrazinResult:
    if not M.is_square:
        raise WrongUsage(f"Drazin inverse needs a square matrix, got {M.shape}.")
    n = M.rows
    if n == 0:
        return DrazinResult(M, 0, {}, True)
    if M.is_invertible():
        return certify(M, M.inverse(), 0)

    lefts: List[RationalMatrix] = []
    rights: List[RationalMatrix] = []
    current = M
    step = 0
    while True:
        step += 1
        if current.is_zero:
            return certify(M, RationalMatrix.zeros(n), step)
        B, C = current.rank_factorization()
        lefts.append(B)
        rights.append(C)
        current = C * B
        if current.is_invertible():
            core = current.inverse() ** (step + 1)
            inverse = _chain(lefts) * core * _chain(rights[::-1])
            return certify(M, inverse, step)


def algebra_drazin(a: Element) -> DrazinResult:
    unital = unitalize(a.presentation)
    L = unital.left_regular_matrix(a)
    result = matrix_drazin(L)
    scalar, inverse = unital.split(result.inverse.column(0))
    if scalar != 0:
        raise WrongUsage(f"Drazin inverse of {a} left alg(p,q), unit coefficient {scalar}.")
    log.debug("Drazin index of %s is %d.", a, max(result.index, 1))
    return certify(a, inverse, max(result.index, 1))


def drazin_via_left_right(
    a: Operand, x: Operand, y: Operand, k1: int, k2: int, method: str = "left-right"
) -> DrazinResult:
    """Assemble ``a^D = a^k x^(k+1) = y^(k+1) a^k`` from one-sided witnesses.

    ``x`` must satisfy ``a^(k1+1) x = a^k1`` and ``y`` must satisfy ``y a^(k2+1) = a^k2``.
    """
    if k1 < 1 or k2 < 1:
        raise WrongUsage("One sided witnesses need k1, k2 >= 1.")
    if not (_power(a, k1 + 1) * x - _power(a, k1)).is_zero:
        raise WitnessInvalid(f"Algebra error: a^{k1 + 1} x != a^{k1}.")
    if not (y * _power(a, k2 + 1) - _power(a, k2)).is_zero:
        raise WitnessInvalid(f"Algebra error: y a^{k2 + 1} != a^{k2}.")
    k = max(k1, k2)
    from_right = _power(a, k) * _power(x, k + 1)
    from_left = _power(y, k + 1) * _power(a, k)
    if not (from_right - from_left).is_zero:
        raise WitnessInvalid("Algebra error: a^k x^(k+1) and y^(k+1) a^k differ.")
    return certify(a, from_right, measure_index(a, from_right, k), method)
