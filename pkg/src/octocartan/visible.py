"""Anti-holomorphic involution, slice conditions, and real-form diagnostics.

sigma0(g) = I_pm conj(g) I_pm with I_pm = diag(1,-1,...,-1) is an
anti-holomorphic involution stabilizing every group in the library.  It
fixes the slice groups entrywise-exactly (conjugation and the sign flips
cancel), which is the identity-on-slice condition; the orbit condition is
witnessed per element through the factorization g = k a h, whose compact
factor produces sigma0(k) k^{-1} moving sigma0(g) back into g's orbit.

The fixed-point sets of sigma0 inside the complex algebras are split real
forms; their dimension, trace-form signature, and a seeded numerical real
rank estimate are reported (the isomorphism type itself is not certified).
"""

from dataclasses import dataclass

import numpy as np

from . import groups, linalg, pairs
from .cartan import PAIR_KIND, PAIR_SUBGROUP, decompose as _decompose

S1_GRID = (-3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0)
S2_TOL = 1e-6

I_PM = np.diag([1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0])

REAL_FORM_TAGS = ("g2c", "spin7c", "so7c", "so8c")


@dataclass(frozen=True)
class RealFormReport:
    algebra: str
    dim_fixed: int
    dim_compact: int
    dim_noncompact: int
    signature: tuple
    real_rank_estimate: int
    rank_trials: tuple
    inconclusive: bool


def sigma0(g):
    """I_pm conj(g) I_pm; an involution, and multiplicative on products."""
    return I_PM @ np.conj(np.asarray(g)) @ I_PM


def check_s1(pair):
    """Max distance of sigma0 from the identity on the pair's slice group.

    Exactly zero in floating point: slice entries are real cosh on
    even-parity positions and purely imaginary sinh on odd-parity ones, so
    conjugation and the two sign flips cancel entrywise.
    """
    kind = PAIR_KIND[str(pair).lower()]
    worst = 0.0
    for theta in S1_GRID:
        a = pairs.one_param(kind, theta).matrix
        worst = max(worst, float(np.linalg.norm(sigma0(a) - a)))
    return worst


def check_s2(pair, g, tol=linalg.DEFAULT_RESIDUAL_TOL,
             membership_tol=linalg.DEFAULT_TOL):
    """Witness residual that sigma0(g) stays in the compact orbit of g.

    Factors g = k a h and checks that m = (sigma0(k) k^{-1} g)^{-1} sigma0(g)
    belongs to the pair's subgroup; returns that membership residual.
    """
    key = str(pair).lower()
    f = _decompose(key, g, tol, membership_tol)
    moved = sigma0(f.k) @ f.k.T @ np.asarray(g, dtype=complex)
    m = np.linalg.solve(moved, sigma0(g))
    return groups.classify(m, membership_tol).residual_for(PAIR_SUBGROUP[key])


def _sigma0_alg(x):
    return I_PM @ np.conj(x) @ I_PM


def _realify(x):
    return np.concatenate([x.real.ravel(), x.imag.ravel()])


def fixed_subalgebra(tag, tol=linalg.DEFAULT_TOL):
    """Real basis of the sigma0-fixed points inside a complex subalgebra.

    Solved as a real-linear nullspace over the 2 * dim real coordinates of
    the complex basis (coefficients on B_k and on i B_k).
    """
    b = pairs.basis(str(tag).lower())
    gens = list(b.elements) + [1j * m for m in b.elements]
    cols = [_realify(_sigma0_alg(m) - m) for m in gens]
    ns = linalg.nullspace(np.column_stack(cols), tol)
    if ns.shape[1] != b.dim:
        raise RuntimeError(
            f"fixed subalgebra of {b.tag} has dimension {ns.shape[1]}, "
            f"expected {b.dim}")
    stacked = np.stack(gens)
    elements = tuple(np.tensordot(ns[:, m].real, stacked, axes=1)
                     for m in range(ns.shape[1]))
    return pairs.SubalgebraBasis(tag=f"{b.tag}_sigma0_fixed",
                                 elements=elements, span_field="real")


def _independent_reduce(candidates, tol=1e-9):
    picked, onb = [], []
    for m in candidates:
        v = _realify(m)
        n0 = np.linalg.norm(v)
        if n0 < 1e-12:
            continue
        for u in onb:
            v = v - np.dot(u, v) * u
        if np.linalg.norm(v) > tol * n0:
            onb.append(v / np.linalg.norm(v))
            picked.append(m)
    return picked


def real_form_report(tag, tol=linalg.DEFAULT_TOL, seeds=(0, 1, 2, 3, 4)):
    """Dimension, trace-form signature, and real rank estimate of a real form.

    The fixed subalgebra splits into theta-fixed (compact) and theta-antifixed
    parts since conjugation commutes with sigma0.  The real rank is estimated
    as the dimension of the centralizer, inside the antifixed part, of a
    generic seeded element; the minimum over the seeds is reported and the
    report is flagged inconclusive when the trials disagree.
    """
    fixed = fixed_subalgebra(tag, tol)
    k_part = _independent_reduce([(m + np.conj(m)) / 2 for m in fixed.elements], tol)
    p_part = _independent_reduce([(m - np.conj(m)) / 2 for m in fixed.elements], tol)
    if len(k_part) + len(p_part) != fixed.dim:
        raise RuntimeError("compact/noncompact split does not add up")

    ordered = k_part + p_part
    gram = np.empty((fixed.dim, fixed.dim))
    for i, bi in enumerate(ordered):
        for j, bj in enumerate(ordered):
            val = pairs.trace_form(bi, bj)
            gram[i, j] = val.real
    signature = linalg.sym_signature(gram, tol)

    p_stack = np.stack(p_part)
    trials = []
    for seed in seeds:
        rng = np.random.default_rng(seed)
        x = np.tensordot(rng.uniform(-1.0, 1.0, len(p_part)), p_stack, axes=1)
        cols = [_realify(x @ y - y @ x) for y in p_part]
        trials.append(linalg.nullspace(np.column_stack(cols), tol).shape[1])
    return RealFormReport(
        algebra=str(tag).lower(),
        dim_fixed=fixed.dim,
        dim_compact=len(k_part),
        dim_noncompact=len(p_part),
        signature=tuple(signature),
        real_rank_estimate=min(trials),
        rank_trials=tuple(trials),
        inconclusive=len(set(trials)) > 1,
    )
