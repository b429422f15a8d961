"""Exact Hurwitz, Tanaka and dual complex continued fractions over Q(i) and Q(i, sqrt(D))."""

from .cfengine import (
    Algorithm,
    DomainError,
    Expansion,
    Status,
    VerificationError,
    evaluate_finite,
    expand,
    expand_value,
    normalize_input,
    periodic_fixpoint_check,
    step,
    step_D,
    step_H,
    step_T,
)
from .classify import (
    InconclusiveOrbit,
    classify,
    in_N1,
    in_N2,
    purely_periodic_oracle,
    sqrt_reduced,
    verify_dual_reversal,
)
from .exactnum import INF, QuadraticElement, QuadraticField, galois_conjugate, make_field, sqrt_element
from .gaussian import GaussianInt, GaussianRational, gaussian_int
from .natext import ExtPoint, density_identity_check, ext_step, in_Xhat, in_Xtilde, injectivity_sample
from .regions import RegionId, floor_dual, floor_H, floor_T, in_Q_w, in_region, in_S_w
from .textio import ExprError, format_expansion, parse_expansion, parse_expr

__version__ = "0.1.0"
