from idemalg.drazin.closed_form import (
    alpha_p_plus_q,
    alpha_pq_witnesses,
    closed_form_drazin_alpha_pq,
    closed_form_group_lambda,
    closed_form_via_witnesses,
    realize,
)
from idemalg.drazin.oracle import (
    algebra_drazin,
    certify,
    drazin_via_left_right,
    matrix_drazin,
    measure_index,
)
from idemalg.drazin.types_ import ClosedFormCoefficients, DrazinResult, phi

__all__ = [
    "ClosedFormCoefficients",
    "DrazinResult",
    "algebra_drazin",
    "alpha_p_plus_q",
    "alpha_pq_witnesses",
    "certify",
    "closed_form_drazin_alpha_pq",
    "closed_form_group_lambda",
    "closed_form_via_witnesses",
    "drazin_via_left_right",
    "matrix_drazin",
    "measure_index",
    "phi",
    "realize",
]
