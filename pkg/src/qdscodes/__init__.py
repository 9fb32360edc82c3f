"""Quantum data-syndrome codes.

Constructions, verification, bounds, and syndrome-measurement-error
simulation for stabilizer and subsystem codes whose syndromes are
protected by classical syndrome-measurement (SM) codes.
"""

from .bounds import (
    CodeParams,
    conjectured_bound,
    impure_bound,
    pure_only_families,
    qds_hamming,
    qds_hamming_d3,
    quantum_hamming,
    region_table,
)
from .codes import (
    AdditiveCode,
    StabilizerCode,
    SubsystemCode,
    catalog,
    catalog_names,
    is_impure,
    make_stabilizer,
    make_subsystem,
    min_distance,
    min_distance_stabilizer,
    min_distance_subsystem,
    read_code_file,
    write_code_file,
)
from .gf4 import (
    BitVector,
    F4Vector,
    f2_rank,
    pauli_string_parse,
    pauli_string_render,
    star_inner_product,
    syndrome,
    trace_inner_product,
)
from .noise import (
    MeasurementScheme,
    RepetitionPart,
    SMPart,
    SimResult,
    build_scheme,
    figure1_schemes,
    figure2_schemes,
    p_err,
    pse_exact,
    pse_monte_carlo,
    repetition_scheme,
    sm_scheme,
    sweep,
    sweep_csv,
    write_sweep_csv,
)
from .qds import (
    QDSCode,
    QDSParams,
    augment_parity,
    build_qds,
    equivalence_apply,
    extended_syndrome,
    identity_qds,
    impure_zero_redundancy,
    qds_min_distance,
    qds_params,
)
from .smcodes import (
    BinaryLinearCode,
    DecodeOutcome,
    coset_leader_decode,
    majority_decode,
    read_binary_code_file,
    sm_catalog,
    systematize,
    weighted_ml_decode,
    write_binary_code_file,
)

__version__ = "0.1.0"

__all__ = [
    "AdditiveCode",
    "BinaryLinearCode",
    "BitVector",
    "CodeParams",
    "DecodeOutcome",
    "F4Vector",
    "MeasurementScheme",
    "QDSCode",
    "QDSParams",
    "RepetitionPart",
    "SMPart",
    "SimResult",
    "StabilizerCode",
    "SubsystemCode",
    "augment_parity",
    "build_qds",
    "build_scheme",
    "catalog",
    "catalog_names",
    "conjectured_bound",
    "coset_leader_decode",
    "equivalence_apply",
    "extended_syndrome",
    "f2_rank",
    "figure1_schemes",
    "figure2_schemes",
    "identity_qds",
    "impure_bound",
    "impure_zero_redundancy",
    "is_impure",
    "majority_decode",
    "make_stabilizer",
    "make_subsystem",
    "min_distance",
    "min_distance_stabilizer",
    "min_distance_subsystem",
    "p_err",
    "pauli_string_parse",
    "pauli_string_render",
    "pse_exact",
    "pse_monte_carlo",
    "pure_only_families",
    "qds_hamming",
    "qds_hamming_d3",
    "qds_min_distance",
    "qds_params",
    "quantum_hamming",
    "read_binary_code_file",
    "read_code_file",
    "region_table",
    "repetition_scheme",
    "sm_catalog",
    "sm_scheme",
    "star_inner_product",
    "sweep",
    "sweep_csv",
    "syndrome",
    "systematize",
    "trace_inner_product",
    "weighted_ml_decode",
    "write_binary_code_file",
    "write_code_file",
    "write_sweep_csv",
]
