"""Octonion algebra, its complex matrix groups, and constructive
compact * slice * subgroup factorizations with visibility diagnostics."""

from .cayley import (
    DIM,
    MultTable,
    bilinear_form,
    build_mult_table,
    imaginary_part,
    left_mult_matrix,
    oct_conj,
    oct_mul,
    real_part,
    right_mult_matrix,
    structure_tensor,
)
from .linalg import (
    DEFAULT_RESIDUAL_TOL,
    DEFAULT_TOL,
    as_cmatrix,
    expm,
    mat_apply,
    nullspace,
    sym_signature,
)
from .groups import (
    GROUP_TAGS,
    LiftError,
    MembershipReport,
    TrialityError,
    TrialityPair,
    cartan_theta,
    classify,
    lift,
    random_element,
    triality_companion,
)
from .pairs import (
    BASIS_TAGS,
    KIND_A0,
    KIND_A0TILDE,
    KIND_A1,
    OneParamElement,
    SubalgebraBasis,
    basis,
    derivation_residual,
    one_param,
    orthogonal_complement,
    so7_algebra_residual,
    spin7_algebra_residual,
    trace_form,
)
from .cartan import (
    DecompositionError,
    KAHFactors,
    PAIR_TAGS,
    decompose,
    decompose_r1,
    decompose_r1p,
    decompose_r2,
    g2_frame,
    reconstruct,
    sphere_normal_form,
    spin7_move,
)
from .visible import (
    RealFormReport,
    check_s1,
    check_s2,
    fixed_subalgebra,
    real_form_report,
    sigma0,
)

__version__ = "0.1.0"
