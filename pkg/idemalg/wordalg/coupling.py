"""Relations of the form ``word = (pq)^m`` that force neighbouring words to coincide.

Each hypothesis is multiplied by a single generator on one side. Since ``(pq)^m`` absorbs that
generator while the shorter word grows by one factor, the shorter word and its successor
become equal. The derivation is replayed in the free idempotent monoid on ``p, q`` by a small
congruence closure.
"""
from dataclasses import dataclass
import logging
from typing import Dict, Iterable, List, Tuple

from idemalg.core.exceptions import ParameterError, WrongUsage
from idemalg.core.types_ import CouplingCase, Letter
from idemalg.wordalg.rewriting import concat
from idemalg.wordalg.types_ import Word

log = logging.getLogger(__name__)


class MonomialCongruence:
    """Smallest two-sided congruence on words of bounded order containing given pairs.

    Products leaving the horizon are skipped, so every recorded equality is a true consequence
    of the relations, though not every consequence is recorded.
    """

    def __init__(self, horizon: int, relations: Iterable[Tuple[Word, Word]] = ()):
        self.horizon = horizon
        self.words: List[Word] = [
            Word(s, o) for o in range(1, horizon + 1) for s in (Letter.P, Letter.Q)
        ]
        self._parent: Dict[Word, Word] = {w: w for w in self.words}
        for lhs, rhs in relations:
            self.union(lhs, rhs)
        self.close()

    def find(self, word: Word) -> Word:
        root = word
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[word] != root:
            self._parent[word], word = root, self._parent[word]
        return root

    def union(self, a: Word, b: Word) -> bool:
        for w in (a, b):
            if w not in self._parent:
                raise WrongUsage(f"{w} lies beyond the horizon {self.horizon}.")
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb.sort_key < ra.sort_key:
            ra, rb = rb, ra
        self._parent[rb] = ra
        return True

    def close(self) -> None:
        generators = (Word(Letter.P, 1), Word(Letter.Q, 1))
        changed = True
        while changed:
            changed = False
            for word in self.words:
                rep = self.find(word)
                if rep == word:
                    continue
                for x in generators:
                    left = (concat(x, word), concat(x, rep))
                    right = (concat(word, x), concat(rep, x))
                    for a, b in (left, right):
                        if a.order <= self.horizon and b.order <= self.horizon:
                            changed |= self.union(a, b)

    def equal(self, a: Word, b: Word) -> bool:
        return self.find(a) == self.find(b)


@dataclass(frozen=True)
class CouplingWitness:
    case: CouplingCase
    m: int
    k: int
    hypothesis: Tuple[Word, Word]
    multiplier: Word
    on_left: bool
    derived: Tuple[Word, Word]

    def verify(self) -> bool:
        congruence = MonomialCongruence(2 * self.m + 2, [self.hypothesis])
        return congruence.equal(*self.derived)

    def describe(self) -> str:
        lhs, rhs = self.hypothesis
        side = "on the left" if self.on_left else "on the right"
        return (
            f"{lhs} = {rhs}, multiplied by {self.multiplier} {side}, gives "
            f"{self.derived[0]} = {self.derived[1]}"
        )

    def as_dict(self) -> Dict[str, object]:
        return {
            "case": self.case.value,
            "m": self.m,
            "k": self.k,
            "hypothesis": [w.as_dict() for w in self.hypothesis],
            "derived": [w.as_dict() for w in self.derived],
            "text": self.describe(),
        }


def tightly_coupled_witness(case: CouplingCase, m: int, k: int) -> CouplingWitness:
    case = CouplingCase(case)
    if not 1 <= k < m:
        raise ParameterError(f"Tight coupling needs 1 <= k < m, got m={m}, k={k}.")
    j = m - k
    top = Word.pq_power(m)
    if case is CouplingCase.P_WORD:
        # (pq)^j p = (pq)^m, then times q on the right
        witness = CouplingWitness(
            case, m, k, (Word.pq_power_p(j), top), Word(Letter.Q, 1), False,
            (Word.pq_power_p(j), Word.pq_power(j + 1)),
        )
    elif case is CouplingCase.Q_WORD:
        # (qp)^j q = (pq)^m, then p on the left
        witness = CouplingWitness(
            case, m, k, (Word.qp_power_q(j), top), Word(Letter.P, 1), True,
            (Word.qp_power_q(j), Word.pq_power(j + 1)),
        )
    else:
        # (qp)^j = (pq)^m, then p on the left
        witness = CouplingWitness(
            case, m, k, (Word.qp_power(j), top), Word(Letter.P, 1), True,
            (Word.qp_power(j), Word.pq_power_p(j)),
        )
    if not witness.verify():
        raise WrongUsage(f"Could not replay {witness.describe()}.")
    log.debug("Coupling witness: %s", witness.describe())
    return witness
