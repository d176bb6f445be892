"""Concrete idempotent matrix pairs.

Zn pairs are the regular representation of Zn on its own basis, ordered P-words first, which
gives the block shape ``P = [[I, B1], [0, 0]]``, ``Q = [[0, 0], [C1, I]]``. Without the ambient
unit a third block is appended on which ``P`` and ``Q`` send a new vector to the sums of the
P-words and Q-words. The F families are direct sums of a Zn pair with a W3 or W4 pair.
"""
from fractions import Fraction
from functools import lru_cache
import logging
from typing import Tuple, Union

from idemalg.core.exceptions import ConstructionFailure
from idemalg.core.types_ import Family, Letter, Summand
from idemalg.core.utils import to_fraction
from idemalg.linalg import RationalMatrix
from idemalg.models.types_ import Intended, LambdaSpec, ModelPair
from idemalg.models.verification import contains_identity, verify_relations
from idemalg.wordalg.rewriting import basis_of, concat, normal_terms
from idemalg.wordalg.types_ import Presentation, Word

log = logging.getLogger(__name__)


def _certified(pair: ModelPair) -> ModelPair:
    report = verify_relations(pair)
    if not report.passed:
        raise ConstructionFailure(report.failures)
    return pair


def _zn_blocks(pres: Presentation, with_ambient_unit: bool):
    basis = basis_of(pres)
    p_words = basis.words_starting_with(Letter.P)
    q_words = basis.words_starting_with(Letter.Q)
    a, b = len(p_words), len(q_words)
    size = a + b + (0 if with_ambient_unit else 1)
    P = [[Fraction(0)] * size for _ in range(size)]
    Q = [[Fraction(0)] * size for _ in range(size)]
    generator = {Letter.P: Word(Letter.P, 1), Letter.Q: Word(Letter.Q, 1)}

    for i in range(a):
        P[i][i] = Fraction(1)
    for i in range(b):
        Q[a + i][a + i] = Fraction(1)
    # B1 and C1: p and q applied to words of the other block
    for j, word in enumerate(q_words):
        for target in normal_terms(concat(generator[Letter.P], word), pres):
            P[p_words.index(target)][a + j] = Fraction(1)
    for j, word in enumerate(p_words):
        for target in normal_terms(concat(generator[Letter.Q], word), pres):
            Q[a + q_words.index(target)][j] = Fraction(1)
    if not with_ambient_unit:
        # B2 and C2 are all-ones columns
        for i in range(a):
            P[i][size - 1] = Fraction(1)
        for i in range(b):
            Q[a + i][size - 1] = Fraction(1)
    return RationalMatrix.from_rows(P), RationalMatrix.from_rows(Q)


def build_zn_pair(
    n: int, with_ambient_unit: bool = True, vanishing: Union[Letter, str] = Letter.Q
) -> ModelPair:
    pres = Presentation.zn(n, Letter(vanishing))
    P, Q = _zn_blocks(pres, with_ambient_unit)
    shape = "with unit" if with_ambient_unit else "without unit"
    return _certified(ModelPair(P, Q, pres, with_ambient_unit, f"{pres} {shape}"))


def build_example_z3() -> ModelPair:
    """3x3 pair with ``QP = 0`` whose algebra does not contain the identity."""
    P = RationalMatrix.from_rows([[1, 1, 0], [0, 0, 0], [0, 0, 0]])
    Q = RationalMatrix.from_rows([[0, 0, 0], [0, 1, 0], [0, 0, 0]])
    return _certified(ModelPair(P, Q, Presentation.zn(3), False, "example Z3"))


def _w3_matrices():
    # left multiplication on (p, q, pq, e), with qp = p + q - pq
    P = RationalMatrix.from_rows(
        [[1, 0, 0, 1], [0, 0, 0, 0], [0, 1, 1, 0], [0, 0, 0, 0]]
    )
    Q = RationalMatrix.from_rows(
        [[1, 0, 0, 0], [1, 1, 1, 1], [-1, 0, 0, 0], [0, 0, 0, 0]]
    )
    return P, Q


def _w4_matrices():
    # left multiplication on (p, q, pq, qp, e)
    P = RationalMatrix.from_rows(
        [[1, 0, 0, 1, 1], [0, 0, 0, 0, 0], [0, 1, 1, 0, 0], [0, 0, 0, 0, 0], [0, 0, 0, 0, 0]]
    )
    Q = RationalMatrix.from_rows(
        [[0, 0, 0, 0, 0], [0, 1, 1, 0, 1], [0, 0, 0, 0, 0], [1, 0, 0, 1, 0], [0, 0, 0, 0, 0]]
    )
    return P, Q


def _summand_pair(summand: Summand) -> ModelPair:
    P, Q = _w3_matrices() if summand is Summand.W3 else _w4_matrices()
    pair = ModelPair(P, Q, summand, False, summand.value)
    pair = ModelPair(P, Q, summand, contains_identity(pair), summand.value)
    return _certified(pair)


def w3_pair() -> ModelPair:
    return _summand_pair(Summand.W3)


def w4_pair() -> ModelPair:
    return _summand_pair(Summand.W4)


def direct_sum(
    first: ModelPair, second: ModelPair, intended: Intended, label: str = ""
) -> ModelPair:
    """Block diagonal ``P1 + P2`` and ``Q1 + Q2``, checked against ``intended``."""
    P = RationalMatrix.block_diagonal(first.P, second.P)
    Q = RationalMatrix.block_diagonal(first.Q, second.Q)
    label = label or f"{first} + {second}"
    probe = ModelPair(P, Q, intended, False, label)
    return _certified(ModelPair(P, Q, intended, contains_identity(probe), label))


_FAMILY_PARTS = {
    Family.F1: (6, Letter.Q, Summand.W3),
    Family.F2: (5, Letter.P, Summand.W3),
    Family.F3: (6, Letter.Q, Summand.W4),
    Family.F4: (5, Letter.P, Summand.W4),
}


def family_decomposition(family: Union[Family, str], m: int) -> Tuple[int, Letter, Summand]:
    """``(n, vanishing, summand)`` with ``F(m) = Z_n + summand``.

    ``Z_(4m-6) + W3`` for F1, ``Z_(4m-5) + W3`` for F2 and likewise with W4 for F3 and F4. For F2
    and F4 the odd Zn factor keeps ``(qp)^(m-1)`` and kills ``(pq)^(m-1)``.
    """
    pres = Presentation.f(family, m)
    offset, vanishing, summand = _FAMILY_PARTS[pres.family]
    return 4 * m - offset, vanishing, summand


@lru_cache(maxsize=64)
def build_family_pair(family: Union[Family, str], m: int) -> ModelPair:
    pres = Presentation.f(family, m)
    n, vanishing, summand = family_decomposition(pres.family, m)
    z_part = build_zn_pair(n, True, vanishing)
    w_part = _summand_pair(summand)
    pair = direct_sum(z_part, w_part, pres, f"{pres} model")
    log.debug("Built %s of size %d.", pair, pair.size)
    return pair


def lambda_cell(lam) -> ModelPair:
    """2x2 pair with ``PQP = lam P``."""
    lam = to_fraction(lam)
    P = RationalMatrix.from_rows([[1, 0], [0, 0]])
    Q = RationalMatrix.from_rows([[lam, 1], [lam * (1 - lam), 1 - lam]])
    spec = LambdaSpec(2, lam)
    probe = ModelPair(P, Q, spec, False, f"lambda cell {lam}")
    return _certified(ModelPair(P, Q, spec, contains_identity(probe), probe.label))


def build_lambda_pair(spec: LambdaSpec) -> ModelPair:
    """The 2x2 lambda cell plus a Zn pair without unit whose ``(pq)^(m-1)`` vanishes.

    The Zn part keeps ``(pq)^(m-2)`` alive so the relation cannot hold with a smaller power.
    """
    cell = lambda_cell(spec.lam)
    if spec.degenerate:
        log.info("lambda = 0 gives (PQ)^(m-1) = 0, a Zn type degenerate pair.")
    tail = build_zn_pair(4 * spec.m - 5, False, Letter.P)
    return direct_sum(cell, tail, spec, f"{spec} model")
