"""Exact measure-once quantum finite automata for modular promise
problems, their minimal classical counterparts, and the verification
harness that pins the quantum-vs-classical state-count separation."""

from .dfa import (
    Dfa,
    EnumerationBudgetError,
    MinimalityCertificate,
    build_binary_min_dfa,
    build_unary_min_dfa,
    certify_minimality_binary,
    certify_minimality_unary,
    run_dfa,
    smallest_modulus,
    smallest_modulus_alt,
    smallest_nondivisor,
)
from .moqfa import AngleSpec, Moqfa
from .promise import (
    BinaryPromiseSpec,
    Classification,
    UnaryPromiseSpec,
    classify_binary,
    classify_unary,
    enumerate_instances,
    spec_from_dict,
    spec_to_dict,
)
from .synth import (
    AngleSelection,
    LiftParameters,
    build_binary_Nl,
    build_binary_l,
    build_unary,
    build_unary_general,
    lift_parameters,
    select_angle,
)
from .verify import (
    ExactnessReport,
    SeparationRow,
    cross_check,
    separation_row,
    separation_table,
    verify_exactness,
    write_separation_csv,
)

__version__ = "0.1.0"

__all__ = [
    "AngleSelection",
    "AngleSpec",
    "BinaryPromiseSpec",
    "Classification",
    "Dfa",
    "EnumerationBudgetError",
    "ExactnessReport",
    "LiftParameters",
    "MinimalityCertificate",
    "Moqfa",
    "SeparationRow",
    "UnaryPromiseSpec",
    "build_binary_Nl",
    "build_binary_l",
    "build_binary_min_dfa",
    "build_unary",
    "build_unary_general",
    "build_unary_min_dfa",
    "certify_minimality_binary",
    "certify_minimality_unary",
    "classify_binary",
    "classify_unary",
    "cross_check",
    "enumerate_instances",
    "lift_parameters",
    "run_dfa",
    "select_angle",
    "separation_row",
    "separation_table",
    "smallest_modulus",
    "smallest_modulus_alt",
    "smallest_nondivisor",
    "spec_from_dict",
    "spec_to_dict",
    "verify_exactness",
    "write_separation_csv",
]
