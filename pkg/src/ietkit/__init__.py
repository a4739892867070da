"""Exact three-interval exchange transformations, the ternary words coding
their orbits, morphisms acting on those words, and the matrix monoid
E(3,N) of their incidence matrices."""

from ._backend import BACKEND
from .e3n import (
    E,
    IDENTITY,
    P,
    FactorPair,
    Membership,
    canonical_pairs,
    det,
    enumerate_E3N,
    factor_pairs,
    format_matrix,
    inverse_unimodular,
    is_in_E3N,
    is_nondecomposable,
    is_unit,
    left_eigvec_check,
    m1_tilde,
    mat_mul,
    membership,
    mk,
    mk_tilde,
    parse_matrix,
)
from .iet3 import (
    Closure,
    IetParams,
    code_orbit,
    conjugate_reflect,
    derive_phik_params,
    iet_apply,
    iet_apply_inverse,
    interval_of,
    is_aperiodic,
)
from .qfield import QuadExt, qx, qx_format, qx_linearly_independent_over_Q, qx_parse, qx_sign
from .wordmorph import (
    Morphism,
    Window,
    apply_morphism,
    apply_morphism_window,
    compose,
    incidence_matrix,
    parikh,
    phi_k,
    xi,
)

__version__ = "0.1.0"
