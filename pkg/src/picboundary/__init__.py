"""picboundary: exact invariants of unibranch curve singularities.

Computes numerical-semigroup invariants and partial normalizations,
enumerates value sets of finite-colength torsion-free modules, takes
flat limits of one-parameter deformation families by exact arithmetic,
and classifies the boundary structure of the compactified Jacobian.
"""

from .errors import (
    AlreadyNormal,
    ClosureDiagnostic,
    ConductorTooLarge,
    DOutOfRange,
    EmptyGenerators,
    HypothesisError,
    HypothesisFails,
    HypothesisNotApplicable,
    NonTermination,
    NotAUnit,
    NotContainingConductor,
    NotCoprime,
    ParseError,
    PicBoundaryError,
    PreconditionFailed,
    RankDrop,
    VerificationMismatch,
    WrongColength,
)
from .betapoly import BetaScalar
from .classify import (
    all_modules_filtration_bounded,
    boundary_necessary_conditions,
    boundary_report,
    chain_structure,
    counterexample_probes,
    equivalence_report,
    filtration_equality_conditions,
    normalization_gorenstein_check,
    survey_row,
)
from .deformations import FamilyElement, LimitResult, family_module, flat_limit
from .semigroups import MAX_CONDUCTOR, NumericalSemigroup, iterate_semigroups
from .valuesets import (
    ValueSet,
    dual,
    dualizing_value_set,
    endomorphism_semigroup,
    enumerate_modules,
    enumerate_modules_bounded,
    filtration,
    in_filtration,
    is_module_over,
    iso_classes,
)
from .witnesses import (
    ExhaustedReport,
    SearchBudget,
    WitnessResult,
    certified_non_limit,
    descent_family,
    maximal_join_family,
    normalization_family,
    search_family,
    staircase_family,
)

__version__ = "0.1.0"

__all__ = [
    "AlreadyNormal",
    "BetaScalar",
    "ClosureDiagnostic",
    "FamilyElement",
    "LimitResult",
    "ConductorTooLarge",
    "DOutOfRange",
    "EmptyGenerators",
    "HypothesisError",
    "HypothesisFails",
    "HypothesisNotApplicable",
    "MAX_CONDUCTOR",
    "NonTermination",
    "NotAUnit",
    "NotContainingConductor",
    "NotCoprime",
    "NumericalSemigroup",
    "ParseError",
    "PicBoundaryError",
    "PreconditionFailed",
    "RankDrop",
    "VerificationMismatch",
    "ValueSet",
    "WrongColength",
    "__version__",
    "ExhaustedReport",
    "SearchBudget",
    "WitnessResult",
    "all_modules_filtration_bounded",
    "boundary_necessary_conditions",
    "boundary_report",
    "certified_non_limit",
    "chain_structure",
    "counterexample_probes",
    "descent_family",
    "dual",
    "dualizing_value_set",
    "endomorphism_semigroup",
    "equivalence_report",
    "enumerate_modules",
    "enumerate_modules_bounded",
    "family_module",
    "filtration",
    "filtration_equality_conditions",
    "flat_limit",
    "in_filtration",
    "is_module_over",
    "iso_classes",
    "iterate_semigroups",
    "maximal_join_family",
    "normalization_family",
    "normalization_gorenstein_check",
    "search_family",
    "staircase_family",
    "survey_row",
]
