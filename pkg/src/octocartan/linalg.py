"""Dense complex 8x8 numerics: matrix exponential, nullspaces, signatures.

Matrices are plain numpy arrays of shape (8, 8) acting on octonion
coefficient vectors by ``g @ x`` (column convention).  The exponential is
scipy's scaling-and-squaring Pade implementation behind a hard input-size
gate; rank decisions use relative singular-value thresholds.
"""

import numpy as np
import scipy.linalg

# Membership / rank decisions default to 1e-9; end-to-end decomposition
# residuals to 1e-7.  Both are overridable per call (and per CLI flag).
DEFAULT_TOL = 1e-9
DEFAULT_RESIDUAL_TOL = 1e-7

EXPM_MAX_NORM = 50.0


def as_cmatrix(a):
    """Coerce to a finite complex (8, 8) array; raise ValueError otherwise."""
    g = np.asarray(a, dtype=complex)
    if g.shape != (8, 8):
        raise ValueError(f"expected an 8x8 matrix, got shape {g.shape}")
    if not np.isfinite(g).all():
        raise ValueError("matrix has non-finite entries")
    return g


def mat_apply(g, x):
    """Apply a matrix to an octonion coefficient vector."""
    return np.asarray(g) @ np.asarray(x)


def expm(x):
    """Matrix exponential; rejects Frobenius norms above EXPM_MAX_NORM."""
    x = np.asarray(x, dtype=complex)
    nrm = np.linalg.norm(x)
    if not np.isfinite(nrm):
        raise ValueError("expm input has non-finite entries")
    if nrm > EXPM_MAX_NORM:
        raise ValueError(f"expm input norm {nrm:.3g} exceeds {EXPM_MAX_NORM}")
    return scipy.linalg.expm(x)


def nullspace(rows, tol=DEFAULT_TOL):
    """Orthonormal basis of the right nullspace, columns of the result.

    Singular values below tol * sigma_max count as zero, so the rank
    decision is scale-invariant.  An empty nullspace returns shape (n, 0).
    """
    a = np.atleast_2d(np.asarray(rows))
    _, s, vh = np.linalg.svd(a)
    rank = int(np.count_nonzero(s > tol * s[0])) if s.size else 0
    return vh[rank:].conj().T


def sym_signature(m, tol=DEFAULT_TOL):
    """Eigenvalue sign counts (n_pos, n_neg, n_zero) of a real symmetric matrix.

    Eigenvalues with |lam| <= tol * max|lam| count as zero.  Raises
    ValueError when the input is asymmetric beyond tol.
    """
    m = np.asarray(m, dtype=float)
    scale = max(1.0, float(np.linalg.norm(m)))
    if np.linalg.norm(m - m.T) > tol * scale:
        raise ValueError("matrix is not symmetric within tolerance")
    w = np.linalg.eigvalsh((m + m.T) / 2.0)
    cut = tol * (np.abs(w).max() if w.size else 0.0)
    n_zero = int(np.count_nonzero(np.abs(w) <= cut))
    n_pos = int(np.count_nonzero(w > cut))
    n_neg = int(np.count_nonzero(w < -cut))
    return n_pos, n_neg, n_zero
