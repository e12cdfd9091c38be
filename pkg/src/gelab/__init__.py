"""Graph entropy with certificates: solvers, exact LPs, and decision procedures."""

__version__ = "0.1.0"

from .characterize import (
    MaximizerVerdict,
    SymmetryVerdict,
    entropy_equals_log_chi_f,
    is_entropy_maximizer,
    is_symmetric,
)
from .constructions import (
    BlowupSpec,
    GadgetSpec,
    Substitution,
    blow_up,
    hardness_gadget,
    substitute,
    substitute_distribution,
    union,
)
from .entropy import (
    EntropyResult,
    PolytopePoint,
    entropy,
    linear_minimization_oracle,
    objective,
)
from .errors import (
    CapExceeded,
    DomainError,
    GelabError,
    InvalidK,
    NotRational,
    NotUniform,
    ParseError,
    VertexNotFound,
    VertexSetMismatch,
    ZeroWeightVertex,
)
from .exactlp import (
    CoverMultiset,
    FractionalColoring,
    Rational,
    b_fold_realization,
    fractional_chromatic_dual,
    fractional_chromatic_number,
    integralize_cover,
    uniform_cover_feasible,
)
from .graphs import (
    Distribution,
    Graph,
    IndependentSet,
    WeightedAlpha,
    alpha,
    complete_graph,
    cycle_graph,
    empty_graph,
    enumerate_maximal_independent_sets,
    enumerate_maximum_weighted_independent_sets,
    max_weighted_independent_set,
    path_graph,
)
from .oracle import brute_alpha, brute_entropy, verify_certificate

__all__ = [
    "__version__",
    "BlowupSpec",
    "CapExceeded",
    "CoverMultiset",
    "Distribution",
    "DomainError",
    "EntropyResult",
    "FractionalColoring",
    "GadgetSpec",
    "GelabError",
    "Graph",
    "IndependentSet",
    "InvalidK",
    "MaximizerVerdict",
    "NotRational",
    "NotUniform",
    "ParseError",
    "PolytopePoint",
    "Rational",
    "Substitution",
    "SymmetryVerdict",
    "VertexNotFound",
    "VertexSetMismatch",
    "WeightedAlpha",
    "ZeroWeightVertex",
    "alpha",
    "b_fold_realization",
    "blow_up",
    "brute_alpha",
    "brute_entropy",
    "complete_graph",
    "cycle_graph",
    "empty_graph",
    "entropy",
    "entropy_equals_log_chi_f",
    "enumerate_maximal_independent_sets",
    "enumerate_maximum_weighted_independent_sets",
    "fractional_chromatic_dual",
    "fractional_chromatic_number",
    "hardness_gadget",
    "integralize_cover",
    "is_entropy_maximizer",
    "is_symmetric",
    "linear_minimization_oracle",
    "max_weighted_independent_set",
    "objective",
    "path_graph",
    "substitute",
    "substitute_distribution",
    "union",
    "uniform_cover_feasible",
    "verify_certificate",
]
