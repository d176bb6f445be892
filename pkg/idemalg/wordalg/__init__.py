from idemalg.wordalg.coupling import CouplingWitness, MonomialCongruence, tightly_coupled_witness
from idemalg.wordalg.radical import radical_dimension, trace_form
from idemalg.wordalg.rewriting import basis_of, basis_words, concat, dimension, normal_form
from idemalg.wordalg.table import (
    StructureTable,
    UnitalAlgebra,
    build_structure_table,
    internal_unit,
    left_regular_matrix,
    multiply,
    power,
    right_regular_matrix,
    structure_table,
    unitalize,
)
from idemalg.wordalg.types_ import P, Q, Basis, Element, Presentation, Word

__all__ = [
    "Basis",
    "CouplingWitness",
    "Element",
    "MonomialCongruence",
    "P",
    "Presentation",
    "Q",
    "StructureTable",
    "UnitalAlgebra",
    "Word",
    "basis_of",
    "basis_words",
    "build_structure_table",
    "concat",
    "dimension",
    "internal_unit",
    "left_regular_matrix",
    "multiply",
    "normal_form",
    "power",
    "radical_dimension",
    "right_regular_matrix",
    "structure_table",
    "tightly_coupled_witness",
    "trace_form",
    "unitalize",
]
