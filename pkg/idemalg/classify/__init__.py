from idemalg.classify.oracle import (
    direct_sum_matrix,
    oracle_verdict,
    profile_matrix,
    spectrum_oracle,
    zn_model,
)
from idemalg.classify.psi import countzero_check, psi_bundle, root_zero_multiplicity
from idemalg.classify.theorems import (
    classify_zm,
    classify_zm_w3,
    classify_zm_w4,
    index_bound,
    quarter_bound,
    psi_threshold,
)
from idemalg.classify.types_ import CoefficientProfile, PsiBundle, Spectrum, Verdict

__all__ = [
    "CoefficientProfile",
    "PsiBundle",
    "Spectrum",
    "Verdict",
    "classify_zm",
    "classify_zm_w3",
    "classify_zm_w4",
    "countzero_check",
    "direct_sum_matrix",
    "index_bound",
    "oracle_verdict",
    "quarter_bound",
    "profile_matrix",
    "psi_bundle",
    "psi_threshold",
    "root_zero_multiplicity",
    "spectrum_oracle",
    "zn_model",
]
