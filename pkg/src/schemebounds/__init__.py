"""Exact eigenvalue bounds on independent sets in association-scheme graphs."""

from .bounds import (
    BoundsReport,
    InnerDistribution,
    RelationSet,
    UnionSpectrum,
    bounds_report,
    delsarte_feasibility,
    delsarte_lp,
    delsarte_lp_bound,
    inertia_bound,
    ratio_bound,
    union_spectrum,
)
from .builders import cameron_seidel, complete_graph, cs_closed_form, gq_point_graph, hamming
from .exactmath import RationalMatrix, mat_inverse, mat_mul, rat_cmp
from .lp import LPOutcome, LPProblem, LPStatus, solve_lp_simplex
from .scheme import (
    SchemeParameters,
    ValidationReport,
    derive_q_from_p,
    intersection_numbers,
    krein_parameters,
    validate_parameters,
)

__version__ = "0.1.0"
