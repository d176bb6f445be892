from fractions import Fraction
import logging
from typing import Dict, List

from idemalg.linalg import RationalMatrix
from idemalg.wordalg.rewriting import basis_of
from idemalg.wordalg.table import structure_table
from idemalg.wordalg.types_ import Presentation, Word

log = logging.getLogger(__name__)


def _word_traces(pres: Presentation) -> Dict[Word, Fraction]:
    """Trace of left multiplication by each basis word on the unitalization."""
    table = structure_table(pres)
    return {
        u: sum((table.products[(u, b)].get(b, Fraction(0)) for b in table.basis), Fraction(0))
        for u in table.basis
    }


def trace_form(pres: Presentation) -> RationalMatrix:
    """Gram matrix of ``(x, y) -> tr(L_xy)`` on the basis ``e, w_1, ..., w_d``."""
    table = structure_table(pres)
    traces = _word_traces(pres)
    words = list(table.basis)
    size = len(words) + 1
    rows: List[List[Fraction]] = [[Fraction(size)] + [traces[w] for w in words]]
    for u in words:
        row = [traces[u]]
        for v in words:
            row.append(
                sum((c * traces[w] for w, c in table.products[(u, v)].items()), Fraction(0))
            )
        rows.append(row)
    return RationalMatrix.from_rows(rows)


def radical_dimension(pres: Presentation) -> int:
    """Dimension of the Jacobson radical of ``alg(p,q)``.

    Over the rationals the radical of a finite dimensional algebra is the kernel of its trace
    form. The radical of the unitalization coincides with the radical of ``alg(p,q)``.
    """
    gram = trace_form(pres)
    dim = gram.rows - gram.rank()
    log.debug("Radical of %s has dimension %d of %d.", pres, dim, len(basis_of(pres)))
    return dim
