"""Real Clifford algebra of spacetime, spinor bilinears, and the Lounesto classes.

The package builds Cl(1,3) over the reals, evaluates the sixteen real bilinear
densities of a Dirac column spinor in either the chiral or the standard gamma
representation, sorts spinors into the six Lounesto classes, constructs ELKO,
Majorana, Weyl, and flag-dipole families, checks the mapping conditions that
relate regular spinors to ELKOs, and exposes the quaternionic Hopf fibration
hiding inside the even subalgebra.
"""

from .algebra import (
    BLADE_NAMES,
    E0,
    E1,
    E2,
    E3,
    GRADE_2_PAIRS,
    METRIC_SIGNS,
    PSEUDOSCALAR,
    QUAT_I,
    QUAT_J,
    QUAT_K,
    Multivector,
    Quaternion,
    basis_vectors,
    geometric,
    lcontract,
    scalar_product,
    wedge,
)
from .bilinears import (
    BilinearSet,
    DegenerateProbeError,
    GammaDictionaryError,
    SpinorC4,
    aggregate,
    aggregate_matrix_residual,
    bilinears,
    dirac_adjoint_mv,
    fierz_residuals,
    generalized_fierz_residuals,
    is_boomerang,
    minkowski_square,
    pq_operators,
    reconstruct,
)
from .classify import (
    BilinearInconsistencyError,
    LounestoClass,
    NullSpinorError,
    classify,
    is_singular,
    verify_class_relations,
)
from .elko import (
    ElkoSpinor,
    WeylC2,
    charge_conjugation,
    dirac_from_left,
    dirac_with_phase,
    elko_boost,
    elko_dual,
    elko_quartet,
    elko_rest,
    helicity_eigenspinor,
    majorana_from_weyl,
    penrose_flag,
    penrose_pole,
    weyl_spinor,
)
from .flagdipole import (
    FlagDipoleFrame,
    annihilator_residuals,
    class_limit,
    direction_class,
    direction_element,
    doran_h,
    elko_mixture_direction,
    frame_from_bilinears,
    is_admissible_flag_dipole_direction,
    projection_spinor,
    projector_idempotency_residual,
    sigma_projector,
    sigma_projector_matrix,
    synthetic_frame,
    type4_boomerang,
    validate_direction,
)
from .gamma import (
    SIMILARITY,
    GammaRep,
    chiral_to_standard,
    gamma_rep,
    standard_to_chiral,
)
from .hopf import (
    HopfPoint,
    QuaternionPair,
    column_fiber_action,
    column_to_even,
    column_to_quaternions,
    even_to_column,
    even_to_ideal,
    even_to_quaternions,
    hopf_from_components,
    hopf_map,
    hopf_map_unnormalized,
    hopf_routes_report,
    ideal_projector,
    ideal_to_column,
    instanton_obstruction,
    quaternions_to_column,
)
from .mapping import (
    ConditionReport,
    SingularSpinorError,
    elko_map_conditions,
    mappability,
)

__version__ = "0.1.0"

__all__ = [
    "BLADE_NAMES",
    "BilinearInconsistencyError",
    "BilinearSet",
    "ConditionReport",
    "DegenerateProbeError",
    "E0",
    "E1",
    "E2",
    "E3",
    "ElkoSpinor",
    "FlagDipoleFrame",
    "GRADE_2_PAIRS",
    "GammaDictionaryError",
    "GammaRep",
    "HopfPoint",
    "LounestoClass",
    "METRIC_SIGNS",
    "Multivector",
    "NullSpinorError",
    "PSEUDOSCALAR",
    "QUAT_I",
    "QUAT_J",
    "QUAT_K",
    "Quaternion",
    "QuaternionPair",
    "SIMILARITY",
    "SingularSpinorError",
    "SpinorC4",
    "WeylC2",
    "aggregate",
    "aggregate_matrix_residual",
    "annihilator_residuals",
    "basis_vectors",
    "bilinears",
    "charge_conjugation",
    "chiral_to_standard",
    "class_limit",
    "classify",
    "column_fiber_action",
    "column_to_even",
    "column_to_quaternions",
    "dirac_adjoint_mv",
    "dirac_from_left",
    "dirac_with_phase",
    "direction_class",
    "direction_element",
    "doran_h",
    "elko_boost",
    "elko_dual",
    "elko_map_conditions",
    "elko_mixture_direction",
    "elko_quartet",
    "elko_rest",
    "even_to_column",
    "even_to_ideal",
    "even_to_quaternions",
    "fierz_residuals",
    "frame_from_bilinears",
    "gamma_rep",
    "generalized_fierz_residuals",
    "geometric",
    "helicity_eigenspinor",
    "hopf_from_components",
    "hopf_map",
    "hopf_map_unnormalized",
    "hopf_routes_report",
    "ideal_projector",
    "ideal_to_column",
    "instanton_obstruction",
    "is_admissible_flag_dipole_direction",
    "is_boomerang",
    "is_singular",
    "lcontract",
    "majorana_from_weyl",
    "mappability",
    "minkowski_square",
    "penrose_flag",
    "penrose_pole",
    "pq_operators",
    "projection_spinor",
    "projector_idempotency_residual",
    "quaternions_to_column",
    "reconstruct",
    "scalar_product",
    "sigma_projector",
    "sigma_projector_matrix",
    "standard_to_chiral",
    "synthetic_frame",
    "type4_boomerang",
    "validate_direction",
    "verify_class_relations",
    "wedge",
    "weyl_spinor",
]
