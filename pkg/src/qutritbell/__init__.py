"""Exact Bell / entangled-qutrit state spectra, correlation operators and
their 2*sqrt2 and sqrt2 bounds, with a Monte Carlo measurement sampler."""

from .correlations import (
    BoundClass,
    BoundEntry,
    BoundReport,
    CorrelationOperator,
    DetectorSetting,
    ProjectorDecomposition,
    chsh_operator,
    classify_bounds,
    default_detector_setting,
    expectation,
    generator_decomposition,
    qutrit_operator,
    reference_chsh_matrix,
    reference_qutrit_matrix,
    solve_projector_coefficients,
)
from .density import DensityMatrix, density_of, entropy, purity, reduce
from .errata import Erratum, build_errata
from .exactnum import ExactComplex, ExactScalar, Rational
from .generators import (
    GeneratorSet,
    Group,
    StructureConstants,
    gellmann,
    generator_set,
    hs_project,
    hs_reconstruct,
    pauli,
    product_expand,
    structure_constants,
)
from .linalg import (
    Matrix,
    Mode,
    StateVector,
    eig_hermitian,
    gram_matrix,
    kron,
    outer,
    partial_trace,
    verify_eigenpair,
)
from .sampler import (
    MeasurementPlan,
    MeasurementTerm,
    SampleResult,
    estimate,
    estimate_sharded,
    merge_results,
    plan_from_operator,
)
from .states import (
    AmplitudeBasis,
    AmplitudeSet,
    LabeledState,
    SwapSymmetry,
    bell_state,
    bell_states,
    from_su3_basis,
    purity_check,
    qutrit_state,
    qutrit_states,
    swap_class,
    to_su3_basis,
    vectorize,
)

__version__ = "0.1.0"

__all__ = [
    "AmplitudeBasis",
    "AmplitudeSet",
    "BoundClass",
    "BoundEntry",
    "BoundReport",
    "CorrelationOperator",
    "DensityMatrix",
    "DetectorSetting",
    "Erratum",
    "ExactComplex",
    "ExactScalar",
    "GeneratorSet",
    "Group",
    "LabeledState",
    "Matrix",
    "MeasurementPlan",
    "MeasurementTerm",
    "Mode",
    "ProjectorDecomposition",
    "Rational",
    "SampleResult",
    "StateVector",
    "StructureConstants",
    "SwapSymmetry",
    "bell_state",
    "bell_states",
    "build_errata",
    "chsh_operator",
    "classify_bounds",
    "default_detector_setting",
    "density_of",
    "eig_hermitian",
    "entropy",
    "estimate",
    "estimate_sharded",
    "expectation",
    "from_su3_basis",
    "gellmann",
    "generator_decomposition",
    "generator_set",
    "gram_matrix",
    "hs_project",
    "hs_reconstruct",
    "kron",
    "merge_results",
    "outer",
    "partial_trace",
    "pauli",
    "plan_from_operator",
    "product_expand",
    "purity",
    "purity_check",
    "qutrit_operator",
    "qutrit_state",
    "qutrit_states",
    "reduce",
    "reference_chsh_matrix",
    "reference_qutrit_matrix",
    "solve_projector_coefficients",
    "structure_constants",
    "swap_class",
    "to_su3_basis",
    "vectorize",
    "verify_eigenpair",
]
