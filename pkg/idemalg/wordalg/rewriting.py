"""Normal forms of alternating words.

A word is first shortened by collapsing ``(pq)^m`` (and ``(qp)^m`` where that collapse holds)
until it fits the basis horizon. F1 and F2 then replace their single non-basis boundary word
using the linear relation. In Zn every word that contains a vanishing word maps to zero.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from idemalg.core.types_ import Family, Letter
from idemalg.wordalg.types_ import Basis, Element, Presentation, Word

Terms = Dict[Word, Fraction]


def concat(w1: Word, w2: Word) -> Word:
    """Product in the free idempotent monoid on two letters.

    ``pp = p`` and ``qq = q``, so the junction either merges into one letter or the orders add.
    """
    if w1.end is w2.start:
        return Word(w1.start, w1.order + w2.order - 1)
    return Word(w1.start, w1.order + w2.order)


def zn_threshold(pres: Presentation) -> int:
    """Smallest order k at which some Zn word vanishes."""
    n = pres.n
    return n // 2 + 1 if n % 2 == 0 else (n + 1) // 2


def basis_words(pres: Presentation) -> List[Word]:
    """Basis words ordered by increasing order, the P-word first at equal order."""
    if pres.family is Family.ZN:
        n = pres.n
        k = zn_threshold(pres)
        words = [Word(s, o) for o in range(1, k) for s in (Letter.P, Letter.Q)]
        if n % 2:
            words.append(Word(pres.vanishing.other, k))
        return words

    m = pres.m
    words = [Word(s, o) for o in range(1, 2 * m) for s in (Letter.P, Letter.Q)]
    if pres.family is Family.F1:
        words.remove(Word(Letter.P, 2 * m - 1))
    elif pres.family is Family.F4:
        words.append(Word(Letter.Q, 2 * m))
    return words


@lru_cache(maxsize=None)
def basis_of(pres: Presentation) -> Basis:
    return Basis(pres, tuple(basis_words(pres)))


def dimension(pres: Presentation) -> int:
    return len(basis_of(pres))


def _collapse(word: Word, pres: Presentation) -> Word:
    """Apply ``(pq)^m -> (pq)^(m-1)`` and the family's Q-side collapse until neither fits."""
    m = pres.m
    q_floor = 2 * m if pres.family in (Family.F1, Family.F3) else 2 * m + 1
    order = word.order
    if word.start is Letter.P:
        while order >= 2 * m:
            order -= 2
    else:
        while order >= q_floor:
            order -= 2
    return Word(word.start, order)


def _substitution(pres: Presentation) -> Tuple[Word, List[Tuple[int, Word]]]:
    m = pres.m
    if pres.family is Family.F1:
        # (pq)^(m-1) p = (qp)^(m-1) + (pq)^(m-1) - (qp)^(m-1) q
        return Word(Letter.P, 2 * m - 1), [
            (1, Word(Letter.Q, 2 * m - 2)),
            (1, Word(Letter.P, 2 * m - 2)),
            (-1, Word(Letter.Q, 2 * m - 1)),
        ]
    # (qp)^m = (qp)^(m-1) q + (pq)^(m-1) p - (pq)^(m-1)
    return Word(Letter.Q, 2 * m), [
        (1, Word(Letter.Q, 2 * m - 1)),
        (1, Word(Letter.P, 2 * m - 1)),
        (-1, Word(Letter.P, 2 * m - 2)),
    ]


def normal_terms(word: Word, pres: Presentation) -> Terms:
    if pres.family is Family.ZN:
        k = zn_threshold(pres)
        if word.order < k:
            return {word: Fraction(1)}
        if pres.n % 2 and word.order == k and word.start is not pres.vanishing:
            return {word: Fraction(1)}
        return {}

    word = _collapse(word, pres)
    if pres.family in (Family.F1, Family.F2):
        target, replacement = _substitution(pres)
        if word == target:
            return {w: Fraction(c) for c, w in replacement}
    return {word: Fraction(1)}


def normal_form(word: Word, pres: Presentation) -> Element:
    """Expand ``word`` in the basis of ``pres``."""
    return Element(pres, normal_terms(word, pres))
