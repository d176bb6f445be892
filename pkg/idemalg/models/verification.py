import logging
from typing import List

from idemalg.core.exceptions import PresentationMismatch
from idemalg.core.types_ import Family, Letter, Summand
from idemalg.linalg import RationalMatrix, span_rank
from idemalg.models.types_ import LambdaSpec, ModelPair, RelationCheck, VerificationReport
from idemalg.wordalg.rewriting import basis_of, zn_threshold
from idemalg.wordalg.types_ import Element, Presentation, Word

log = logging.getLogger(__name__)


def word_image(word: Word, pair: ModelPair) -> RationalMatrix:
    image = pair.P if word.start is Letter.P else pair.Q
    for letter in list(word.letters())[1:]:
        image = image * (pair.P if letter is Letter.P else pair.Q)
    return image


def represent(elem: Element, pair: ModelPair) -> RationalMatrix:
    """Evaluate ``elem`` at ``p -> P``, ``q -> Q``."""
    if pair.intended != elem.presentation:
        raise PresentationMismatch(
            f"Algebra error: {pair} does not realize {elem.presentation}."
        )
    result = RationalMatrix.zeros(pair.size)
    for word, value in elem.coeffs.items():
        result = result + word_image(word, pair) * value
    return result


def word_images(pair: ModelPair) -> List[RationalMatrix]:
    """Images of all words up to the order where their span stops growing.

    Once every word of order ``o + 1`` lies in the span of the shorter ones, so does every longer
    word, since it is a generator times a word of order ``o + 1``.
    """
    images: List[RationalMatrix] = []
    rank = 0
    order = 0
    while True:
        order += 1
        images.extend(word_image(Word(s, order), pair) for s in (Letter.P, Letter.Q))
        new_rank = span_rank(images)
        if new_rank == rank:
            return images
        rank = new_rank


def contains_identity(pair: ModelPair) -> bool:
    images = word_images(pair)
    identity = RationalMatrix.identity(pair.size)
    return span_rank(images + [identity]) == span_rank(images)


def basis_rank(pair: ModelPair) -> int:
    """Rank of the images of the intended presentation's basis words."""
    if not isinstance(pair.intended, Presentation):
        return span_rank(word_images(pair))
    return span_rank(word_image(w, pair) for w in basis_of(pair.intended))


class _Checks:
    def __init__(self):
        self.items: List[RelationCheck] = []

    def equal(self, name: str, a: RationalMatrix, b: RationalMatrix):
        self.items.append(RelationCheck(name, "equality", a == b))

    def differ(self, name: str, a: RationalMatrix, b: RationalMatrix):
        self.items.append(RelationCheck(name, "inequality", a != b))

    def rank(self, name: str, actual: int, expected: int):
        self.items.append(RelationCheck(name, "rank", actual == expected))


def _zn_checks(pair: ModelPair, pres: Presentation, checks: _Checks):
    zero = RationalMatrix.zeros(pair.size)
    k = zn_threshold(pres)
    letters = (Letter.P, Letter.Q) if pres.n % 2 == 0 else (pres.vanishing,)
    for letter in letters:
        word = Word(letter, k)
        checks.equal(f"{word} = 0", word_image(word, pair), zero)
    if pres.n % 2:
        survivor = Word(pres.vanishing.other, k)
        checks.differ(f"{survivor} != 0", word_image(survivor, pair), zero)


def _family_checks(pair: ModelPair, pres: Presentation, checks: _Checks):
    m = pres.m

    def w(letter: Letter, order: int) -> RationalMatrix:
        return word_image(Word(letter, order), pair)

    pq_m, pq_m1, pq_m1p = w(Letter.P, 2 * m), w(Letter.P, 2 * m - 2), w(Letter.P, 2 * m - 1)
    qp_m, qp_m1, qp_m1q = w(Letter.Q, 2 * m), w(Letter.Q, 2 * m - 2), w(Letter.Q, 2 * m - 1)
    checks.equal("(PQ)^m = (PQ)^(m-1)", pq_m, pq_m1)
    checks.differ("(PQ)^(m-2)P != (PQ)^(m-1)P", w(Letter.P, 2 * m - 3), pq_m1p)

    sum_name = "(QP)^(m-1) + (PQ)^(m-1) = (QP)^(m-1)Q + (PQ)^(m-1)P"
    shifted_name = "(QP)^m + (PQ)^(m-1) = (QP)^(m-1)Q + (PQ)^(m-1)P"
    sum_lhs, shifted_lhs, rhs = qp_m1 + pq_m1, qp_m + pq_m1, qp_m1q + pq_m1p
    if pres.family is Family.F1:
        checks.equal("(QP)^m = (QP)^(m-1)", qp_m, qp_m1)
        checks.equal(sum_name, sum_lhs, rhs)
    elif pres.family is Family.F2:
        checks.differ("(QP)^m != (QP)^(m-1)", qp_m, qp_m1)
        checks.equal(shifted_name, shifted_lhs, rhs)
    elif pres.family is Family.F3:
        checks.equal("(QP)^m = (QP)^(m-1)", qp_m, qp_m1)
        checks.differ(sum_name.replace(" = ", " != "), sum_lhs, rhs)
    else:
        checks.differ("(QP)^m != (QP)^(m-1)", qp_m, qp_m1)
        checks.differ(sum_name.replace(" = ", " != "), sum_lhs, rhs)
        checks.differ(shifted_name.replace(" = ", " != "), shifted_lhs, rhs)


def _lambda_checks(pair: ModelPair, spec: LambdaSpec, checks: _Checks):
    m = spec.m
    pq_m1 = word_image(Word.pq_power(m - 1), pair)
    checks.equal("lambda (PQ)^(m-1) = (PQ)^m", pq_m1 * spec.lam, word_image(Word.pq_power(m), pair))
    if m > 2 and not spec.degenerate:
        pq_m2 = word_image(Word.pq_power(m - 2), pair)
        checks.rank("(PQ)^(m-2) and (PQ)^(m-1) are independent", span_rank([pq_m2, pq_m1]), 2)


def _summand_checks(pair: ModelPair, summand: Summand, checks: _Checks):
    P, Q = pair.P, pair.Q
    checks.equal("PQP = P", P * Q * P, P)
    checks.equal("QPQ = Q", Q * P * Q, Q)
    if summand is Summand.W3:
        checks.equal("P + Q = PQ + QP", P + Q, P * Q + Q * P)
    else:
        checks.differ("P + Q != PQ + QP", P + Q, P * Q + Q * P)
    rank = span_rank(word_images(pair))
    checks.rank(f"{summand.value} has dimension {summand.dimension}", rank, summand.dimension)


def verify_relations(pair: ModelPair) -> VerificationReport:
    """Check idempotency, the intended relations and the strictness conditions of ``pair``."""
    checks = _Checks()
    checks.equal("P^2 = P", pair.P * pair.P, pair.P)
    checks.equal("Q^2 = Q", pair.Q * pair.Q, pair.Q)
    intended = pair.intended
    if isinstance(intended, Summand):
        _summand_checks(pair, intended, checks)
    elif isinstance(intended, LambdaSpec):
        _lambda_checks(pair, intended, checks)
    else:
        if intended.family is Family.ZN:
            _zn_checks(pair, intended, checks)
        else:
            _family_checks(pair, intended, checks)
        dim = len(basis_of(intended))
        checks.rank(f"images of the {dim} basis words are independent", basis_rank(pair), dim)
    where = "in" if pair.contains_ambient_unit else "outside"
    holds = contains_identity(pair) == pair.contains_ambient_unit
    checks.items.append(RelationCheck(f"identity lies {where} alg(P,Q)", "membership", holds))
    report = VerificationReport(str(pair), tuple(checks.items))
    if not report.passed:
        log.warning("Model %s fails %s.", pair, ", ".join(report.failures))
    return report
