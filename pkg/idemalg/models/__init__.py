from idemalg.models.builders import (
    build_example_z3,
    build_family_pair,
    build_lambda_pair,
    build_zn_pair,
    direct_sum,
    family_decomposition,
    lambda_cell,
    w3_pair,
    w4_pair,
)
from idemalg.models.types_ import LambdaSpec, ModelPair, RelationCheck, VerificationReport
from idemalg.models.verification import (
    basis_rank,
    contains_identity,
    represent,
    verify_relations,
    word_image,
    word_images,
)

__all__ = [
    "LambdaSpec",
    "ModelPair",
    "RelationCheck",
    "VerificationReport",
    "basis_rank",
    "build_example_z3",
    "build_family_pair",
    "build_lambda_pair",
    "build_zn_pair",
    "contains_identity",
    "direct_sum",
    "family_decomposition",
    "lambda_cell",
    "represent",
    "verify_relations",
    "w3_pair",
    "w4_pair",
    "word_image",
    "word_images",
]
