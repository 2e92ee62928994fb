"""Constructive compact * slice * subgroup factorizations.

Every element of the three complex groups factors as g = k @ a @ h with k in
the compact real form, a = one_param(kind, theta) on the one-dimensional
slice group, and h in the reductive subgroup of the pair:

===========  =====================  ==================  =================
pair         ambient group          subgroup            slice kind
===========  =====================  ==================  =================
``r2``       automorphisms (cplx)   stabilizer of e1    ``a1``
``r1p``      spin group (8-dim)     automorphisms       ``a0tilde``
``r1``       rotations fixing e0    automorphisms       ``a0``
===========  =====================  ==================  =================

The algorithm reads the image of the base point (e1, resp. e0) off the
matrix, normalizes it on the complex unit sphere to cosh(theta) x + i
sinh(theta) y with x, y real orthonormal, and moves the standard frame onto
(x, y) with an explicitly constructed compact element.  The ``r1`` case is
routed through the spin double cover: lift, factor there, push the compact
factor down through the covering map, and scale theta by 2/3.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from . import cayley, groups, linalg, pairs

PAIR_TAGS = ("r1", "r1p", "r2")
PAIR_KIND = {"r2": pairs.KIND_A1, "r1p": pairs.KIND_A0TILDE, "r1": pairs.KIND_A0}
PAIR_GROUP = {"r2": "g2c", "r1p": "spin7c", "r1": "so7c"}
PAIR_COMPACT = {"r2": "g2", "r1p": "spin7", "r1": "so7"}
PAIR_SUBGROUP = {"r2": "sl3c", "r1p": "g2c", "r1": "g2c"}


class DecompositionError(RuntimeError):
    """Membership precondition failed or the residual exceeded tolerance."""


@dataclass(frozen=True)
class KAHFactors:
    pair: str
    k: np.ndarray
    theta: float
    h: np.ndarray
    residual: float


def _completion(span, lo, tol):
    """First standard basis vector with index >= lo, made orthonormal to span.

    Index-ordered Gram-Schmidt; span entries must already be orthonormal.
    Cannot run out of candidates for exact inputs (span has at most 3
    vectors in 7 ambient dimensions), checked defensively anyway.
    """
    for i in range(lo, 8):
        v = np.zeros(8)
        v[i] = 1.0
        for u in span:
            v = v - np.dot(u, v) * u
        n = np.linalg.norm(v)
        if n > tol:
            return v / n
    raise DecompositionError("orthonormal completion degenerated")


def _as_real_unit(v, tol, what):
    v = np.asarray(v)
    if np.iscomplexobj(v):
        if np.abs(v.imag).max() > tol:
            raise DecompositionError(f"{what} is not a real vector")
        v = v.real
    v = v.astype(float)
    if abs(np.linalg.norm(v) - 1.0) > tol:
        raise DecompositionError(f"{what} is not a unit vector")
    return v


def sphere_normal_form(v, mode, tol=linalg.DEFAULT_TOL):
    """Split a complex unit-sphere point as cosh(theta) x + i sinh(theta) y.

    ``mode`` is "imaginary7" (v must lie in the span of e1..e7) or "full8".
    Writing v = x + i y with x, y real, the unit-form constraint forces
    |x|^2 - |y|^2 = 1 and x.y = 0; theta = arcsinh|y| >= 0.  When |y| <= tol
    the direction y-hat is the lowest-index standard vector of the allowed
    range orthonormalized against x-hat, so the output is deterministic.
    The sphere check is scale-aware: the allowed defect grows with |v|^2.
    """
    v = np.asarray(v, dtype=complex)
    if mode == "imaginary7":
        lo = 1
    elif mode == "full8":
        lo = 0
    else:
        raise ValueError(f"unknown mode {mode!r}")
    x = v.real.copy()
    y = v.imag.copy()
    scale = max(1.0, float(np.dot(x, x) + np.dot(y, y)))
    if lo == 1 and abs(v[0]) > tol * np.sqrt(scale):
        raise DecompositionError("vector has an e0 component in imaginary7 mode")
    if abs(cayley.bilinear_form(v, v) - 1.0) > tol * scale:
        raise DecompositionError("vector is not on the complex unit sphere")
    ny = float(np.linalg.norm(y))
    theta = float(np.arcsinh(ny))
    xhat = x / np.linalg.norm(x)
    if ny > tol:
        yhat = y - np.dot(xhat, y) * xhat  # re-orthogonalize against rounding
        yhat = yhat / np.linalg.norm(yhat)
    else:
        yhat = _completion([xhat], lo, tol)
    return xhat, yhat, theta


def g2_frame(u1, u2, tol=linalg.DEFAULT_TOL):
    """Compact automorphism sending e1 -> u1 and e2 -> u2.

    u1, u2 must be real orthonormal imaginary octonions.  The remaining
    frame vectors are generated multiplicatively: u3 = u1 u2, u4 = first
    standard imaginary vector orthonormal to {u1, u2, u3}, then u5 = u1 u4,
    u6 = u4 u2, u7 = u1 u6.  On the standard pair (e1, e2) this reproduces
    the identity.
    """
    u1 = _as_real_unit(u1, tol, "u1")
    u2 = _as_real_unit(u2, tol, "u2")
    if max(abs(u1[0]), abs(u2[0])) > tol:
        raise DecompositionError("frame inputs must be imaginary octonions")
    if abs(np.dot(u1, u2)) > tol:
        raise DecompositionError("frame inputs must be orthogonal")
    u3 = cayley.oct_mul(u1, u2)
    u4 = _completion([u1, u2, u3], 1, tol)
    u5 = cayley.oct_mul(u1, u4)
    u6 = cayley.oct_mul(u4, u2)
    u7 = cayley.oct_mul(u1, u6)
    k = np.zeros((8, 8))
    k[0, 0] = 1.0
    for col, u in enumerate((u1, u2, u3, u4, u5, u6, u7), start=1):
        k[:, col] = u
    return k.astype(complex)


def _rot2(t):
    c, s = np.cos(t), np.sin(t)
    return np.array([[c, -s], [s, c]])


def _spin_rotation(t):
    """Compact spin element rotating e0 toward e1 by angle t.

    This is the hyperbolic slice element at imaginary parameter: the block
    pattern diag(r_t, r_{-t/3}, r_{-t/3}, r_{-t/3}) satisfies the triality
    law with companion diag(I2, r_{2t/3}, r_{2t/3}, r_{2t/3}) for every t,
    by analytic continuation of the real-parameter identity.
    """
    r = _rot2(-t / 3.0)
    return scipy.linalg.block_diag(_rot2(t), r, r, r).astype(complex)


def spin7_move(a, tol=linalg.DEFAULT_TOL):
    """Real spin element carrying e0 to the real unit octonion a.

    Left multiplication by a satisfies the triality law exactly when a is
    real or imaginary (its forced companion is x -> (a x) conj(a)), and is
    used whenever it verifies.  For mixed a = cos(t) e0 + sin(t) m the left
    multiplication is *not* a spin element; instead the compact rotation
    carrying e0 toward e1 is conjugated into the (e0, m) plane by an
    automorphism frame.  Either way the law is verified over all 64 basis
    pairs before returning.
    """
    a = _as_real_unit(a, tol, "a")
    g = cayley.left_mult_matrix(a).astype(complex)
    g0 = cayley.right_mult_matrix(cayley.oct_conj(a)) @ g
    res = groups._law_residual(g0, g)
    if res <= tol:
        return groups.TrialityPair(g=g, g0=g0, residual=res)
    m = a.copy()
    m[0] = 0.0
    mhat = m / np.linalg.norm(m)
    t = float(np.arctan2(np.linalg.norm(m), a[0]))
    frame = g2_frame(mhat, _completion([mhat], 1, tol), tol)
    g = (frame @ _spin_rotation(t) @ frame.T).real.astype(complex)
    g0 = cayley.right_mult_matrix(cayley.oct_conj(g[:, 0])) @ g
    res = groups._law_residual(g0, g)
    if res > tol:
        raise DecompositionError(
            f"sphere move lost the triality law (residual {res:.3g})")
    return groups.TrialityPair(g=g, g0=g0, residual=res)


def _finish(pair, g, k, theta, h, tol):
    a = pairs.one_param(PAIR_KIND[pair], theta).matrix
    residual = float(np.linalg.norm(g - k @ a @ h))
    if residual > tol:
        raise DecompositionError(
            f"reconstruction residual {residual:.3g} exceeds {tol:.3g}")
    return KAHFactors(pair=pair, k=k, theta=theta, h=h, residual=residual)


def decompose_r2(g, tol=linalg.DEFAULT_RESIDUAL_TOL, membership_tol=linalg.DEFAULT_TOL):
    """Factor an automorphism as compact * t_theta * (stabilizer of e1)."""
    g = np.asarray(g, dtype=complex)
    rep = groups.classify(g, membership_tol)
    if not (rep.orthogonal and rep.is_automorphism):
        raise DecompositionError(
            f"not an automorphism (residual {rep.residual_for('g2c'):.3g})")
    xhat, yhat, theta = sphere_normal_form(g[:, 1], "imaginary7", membership_tol)
    k = g2_frame(xhat, yhat, membership_tol)
    h = pairs.one_param(pairs.KIND_A1, -theta).matrix @ k.T @ g
    return _finish("r2", g, k, theta, h, tol)


def decompose_r1p(g, tol=linalg.DEFAULT_RESIDUAL_TOL, membership_tol=linalg.DEFAULT_TOL):
    """Factor a spin element as compact * at_theta * automorphism."""
    g = np.asarray(g, dtype=complex)
    rep = groups.classify(g, membership_tol)
    if not (rep.orthogonal and rep.has_triality_companion):
        raise DecompositionError(
            f"not a spin element (residual {rep.residual_for('spin7c'):.3g})")
    xhat, yhat, theta = sphere_normal_form(g[:, 0], "full8", membership_tol)
    k1 = spin7_move(xhat, membership_tol).g
    w = (k1.T @ yhat.astype(complex)).real
    w2 = _completion([w], 1, membership_tol)
    k = (k1 @ g2_frame(w, w2, membership_tol)).real.astype(complex)
    h = pairs.one_param(pairs.KIND_A0TILDE, -theta).matrix @ k.T @ g
    return _finish("r1p", g, k, theta, h, tol)


def decompose_r1(g, tol=linalg.DEFAULT_RESIDUAL_TOL, membership_tol=linalg.DEFAULT_TOL):
    """Factor a rotation fixing e0, through the spin double cover.

    The compact factor is the companion of the lifted compact factor, theta
    scales by 2/3 (the covering map sends at_theta to a_{2 theta/3}), and h
    is unchanged (the covering map fixes automorphisms).
    """
    g = np.asarray(g, dtype=complex)
    rep = groups.classify(g, membership_tol)
    if not (rep.orthogonal and rep.special and rep.fixes_e0):
        raise DecompositionError(
            f"not a rotation fixing e0 (residual {rep.residual_for('so7c'):.3g})")
    gt = groups.lift(g, membership_tol)
    up = decompose_r1p(gt, tol, membership_tol)
    k = groups.triality_companion(up.k, membership_tol).g0
    return _finish("r1", g, k, 2.0 * up.theta / 3.0, up.h, tol)


_DECOMPOSERS = {"r2": decompose_r2, "r1p": decompose_r1p, "r1": decompose_r1}


def decompose(pair, g, tol=linalg.DEFAULT_RESIDUAL_TOL,
              membership_tol=linalg.DEFAULT_TOL):
    """Dispatch to the pair-specific factorization."""
    key = str(pair).lower()
    if key not in _DECOMPOSERS:
        raise ValueError(f"unknown pair {pair!r}")
    return _DECOMPOSERS[key](g, tol, membership_tol)


def reconstruct(factors):
    """Product k @ a_theta @ h of the stored factors."""
    a = pairs.one_param(PAIR_KIND[factors.pair], factors.theta).matrix
    return factors.k @ a @ factors.h
