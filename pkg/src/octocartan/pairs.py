"""One-parameter slice groups and the subalgebra bases they sit inside.

Three abelian one-parameter groups drive the Cartan factorizations:

* kind ``a1``      -- t_theta, inside the octonion automorphism group,
  moving e1 along the complex 6-sphere;
* kind ``a0tilde`` -- at_theta, inside the spin group (8-dim action),
  moving e0 along the complex 7-sphere;
* kind ``a0``      -- a_theta, inside the complex rotation group of the
  imaginary units; the image of at under the covering map.

All three have closed-form cosh/sinh block matrices, assembled here without
calling the generic exponential (tests cross-check against it).

The subalgebra bases follow the explicit X_ij = E_ij - E_ji combinations for
sl(3,C) and its complement inside the derivation algebra; the spin algebra
basis comes from the nullspace of the linearized triality constraint, and
compact real forms are extracted as maximal real spans.
"""

from dataclasses import dataclass
from functools import cache

import numpy as np
import scipy.linalg

from . import cayley, linalg

KIND_A1 = "a1"
KIND_A0TILDE = "a0tilde"
KIND_A0 = "a0"

BASIS_TAGS = (
    "sl3c", "qg2", "g2c", "spin7c", "so7c", "so8c",
    "su3", "g2compact", "spin7compact", "so7compact",
)


@dataclass(frozen=True)
class OneParamElement:
    kind: str
    theta: float
    matrix: np.ndarray
    algebra_matrix: np.ndarray


@dataclass(frozen=True)
class SubalgebraBasis:
    tag: str
    elements: tuple
    span_field: str  # "real" or "complex"

    @property
    def dim(self):
        return len(self.elements)


def _dblock(theta):
    c, s = np.cosh(theta), np.sinh(theta)
    return np.array([[c, -1j * s], [1j * s, c]])


def _delta2(theta):
    return np.array([[0.0, -1j * theta], [1j * theta, 0.0]])


def _delta4(x, y):
    m = np.zeros((4, 4), dtype=complex)
    m[0, 3] = -1j * x
    m[3, 0] = 1j * x
    m[1, 2] = -1j * y
    m[2, 1] = 1j * y
    return m


def _exp_delta4(x, y):
    cx, sx = np.cosh(x), np.sinh(x)
    cy, sy = np.cosh(y), np.sinh(y)
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = m[3, 3] = cx
    m[0, 3] = -1j * sx
    m[3, 0] = 1j * sx
    m[1, 1] = m[2, 2] = cy
    m[1, 2] = -1j * sy
    m[2, 1] = 1j * sy
    return m


def one_param(kind, theta):
    """Closed-form slice element and its Lie-algebra generator.

    The group law element(a) @ element(b) == element(a + b) holds for each
    kind, and matrix == expm(algebra_matrix) (verified in the test suite).
    """
    theta = float(theta)
    if not np.isfinite(theta):
        raise ValueError("theta must be finite")
    if kind == KIND_A1:
        mat = scipy.linalg.block_diag(
            _exp_delta4(0.0, theta), _exp_delta4(-theta / 2, -theta / 2))
        alg = scipy.linalg.block_diag(
            _delta4(0.0, theta), _delta4(-theta / 2, -theta / 2))
    elif kind == KIND_A0TILDE:
        d = _dblock(-theta / 3)
        mat = scipy.linalg.block_diag(_dblock(theta), d, d, d)
        a = _delta2(-theta / 3)
        alg = scipy.linalg.block_diag(_delta2(theta), a, a, a)
    elif kind == KIND_A0:
        d = _dblock(theta)
        mat = scipy.linalg.block_diag(np.eye(2), d, d, d)
        a = _delta2(theta)
        alg = scipy.linalg.block_diag(np.zeros((2, 2)), a, a, a)
    else:
        raise ValueError(f"unknown one-parameter kind {kind!r}")
    mat.setflags(write=False)
    alg.setflags(write=False)
    return OneParamElement(kind=kind, theta=theta, matrix=mat, algebra_matrix=alg)


def _x(i, j):
    m = np.zeros((8, 8), dtype=complex)
    m[i, j] = 1.0
    m[j, i] = -1.0
    return m


def _combo(terms):
    m = np.zeros((8, 8), dtype=complex)
    for c, i, j in terms:
        m += c * _x(i, j)
    return m


# Basis of the isotropy algebra at e1 (complex special-linear of rank 2)
# and of its trace-form complement inside the derivation algebra.
_SL3_TERMS = (
    ((-1, 2, 3), (1, 4, 5)),
    ((-1, 4, 5), (1, 6, 7)),
    ((1, 2, 4), (1, 3, 5)),
    ((-1, 2, 5), (1, 3, 4)),
    ((1, 2, 6), (1, 3, 7)),
    ((-1, 2, 7), (1, 3, 6)),
    ((1, 4, 6), (1, 5, 7)),
    ((-1, 4, 7), (1, 5, 6)),
)
_QG2_TERMS = (
    ((2, 1, 2), (-1, 4, 7), (-1, 5, 6)),
    ((2, 1, 3), (-1, 4, 6), (1, 5, 7)),
    ((2, 1, 4), (1, 2, 7), (1, 3, 6)),
    ((2, 1, 5), (1, 2, 6), (-1, 3, 7)),
    ((2, 1, 6), (-1, 2, 5), (-1, 3, 4)),
    ((2, 1, 7), (-1, 2, 4), (1, 3, 5)),
)


def _algebra_law_defect(x0, x):
    """Tensor of (x0 e_i) e_j + e_i (x e_j) - x(e_i e_j) over all basis pairs."""
    t = cayley.structure_tensor()
    d1 = np.einsum("pi,pjk->ijk", x0, t)
    d2 = np.einsum("qj,iqk->ijk", x, t)
    d3 = np.einsum("ijm,km->ijk", t, x)
    return d1 + d2 - d3


def derivation_residual(x):
    """Max defect of the derivation law; ~0 iff x generates automorphisms."""
    x = np.asarray(x, dtype=complex)
    d = _algebra_law_defect(x, x)
    return float(np.sqrt((np.abs(d) ** 2).sum(axis=2)).max())


def spin7_algebra_residual(x):
    """Max defect of the linearized triality law with the induced companion.

    The companion of x is forced to x - R_{x e0} (right multiplication), the
    differential of the group-level right-division formula.
    """
    x = np.asarray(x, dtype=complex)
    x0 = x - cayley.right_mult_matrix(x[:, 0])
    d = _algebra_law_defect(x0, x)
    law = float(np.sqrt((np.abs(d) ** 2).sum(axis=2)).max())
    return max(law, float(np.linalg.norm(x + x.T)))


def so7_algebra_residual(x):
    """Antisymmetry plus e0-annihilation defect."""
    x = np.asarray(x, dtype=complex)
    return max(float(np.linalg.norm(x + x.T)), float(np.linalg.norm(x[:, 0])))


def _spin7_elements():
    """Solve the joint linear system for (x, x0) pairs obeying the law.

    Unknowns: 28 antisymmetric coordinates for the 8-dim action plus 21 for
    the companion fixing e0.  The solution space projects injectively onto
    its x part, which is re-orthonormalized for determinism.
    """
    zero = np.zeros((8, 8), dtype=complex)
    so8_pairs = [(i, j) for i in range(8) for j in range(i + 1, 8)]
    so7_pairs = [(i, j) for i in range(1, 8) for j in range(i + 1, 8)]
    cols = []
    for p, q in so8_pairs:
        cols.append(_algebra_law_defect(zero, _x(p, q)).ravel())
    for p, q in so7_pairs:
        cols.append(_algebra_law_defect(_x(p, q), zero).ravel())
    ns = linalg.nullspace(np.column_stack(cols))
    if ns.shape[1] != 21:
        raise RuntimeError(f"spin algebra nullspace has dimension {ns.shape[1]}")
    coeff, _ = np.linalg.qr(ns[:28, :])
    gens = np.stack([_x(p, q) for p, q in so8_pairs])
    return [np.tensordot(coeff[:, m], gens, axes=1) for m in range(21)]


def _max_real_span(elements, expected):
    """Greedy maximal independent set of real matrices spanning the
    conjugation-fixed part of the complex span."""
    picked = []
    onb = []
    for b in elements:
        for cand in (b.real, b.imag):
            v = cand.ravel().astype(float)
            n0 = np.linalg.norm(v)
            if n0 < 1e-12:
                continue
            for u in onb:
                v = v - np.dot(u, v) * u
            if np.linalg.norm(v) > 1e-9 * n0:
                onb.append(v / np.linalg.norm(v))
                picked.append(cand.astype(complex))
    if len(picked) != expected:
        raise RuntimeError(
            f"compact real span has dimension {len(picked)}, expected {expected}")
    return picked


@cache
def basis(tag):
    """Cached ordered basis for one of the BASIS_TAGS subalgebras."""
    key = tag.lower()
    if key == "sl3c":
        elements, field = [_combo(t) for t in _SL3_TERMS], "complex"
    elif key == "qg2":
        elements, field = [_combo(t) for t in _QG2_TERMS], "complex"
    elif key == "g2c":
        elements = [_combo(t) for t in _SL3_TERMS + _QG2_TERMS]
        field = "complex"
    elif key == "so7c":
        elements = [_x(i, j) for i in range(1, 8) for j in range(i + 1, 8)]
        field = "complex"
    elif key == "so8c":
        elements = [_x(i, j) for i in range(8) for j in range(i + 1, 8)]
        field = "complex"
    elif key == "spin7c":
        elements, field = _spin7_elements(), "complex"
    elif key in ("su3", "g2compact", "spin7compact", "so7compact"):
        parent = {"su3": "sl3c", "g2compact": "g2c",
                  "spin7compact": "spin7c", "so7compact": "so7c"}[key]
        cb = basis(parent)
        elements, field = _max_real_span(cb.elements, cb.dim), "real"
    else:
        raise ValueError(f"unknown basis tag {tag!r}")
    for m in elements:
        m.setflags(write=False)
    return SubalgebraBasis(tag=key, elements=tuple(elements), span_field=field)


def trace_form(x, y):
    """Trace of the product in the 8-dim representation.

    Proportional to the Killing form on each simple subalgebra, so all
    orthogonality statements transfer (the proportionality itself is
    checked in the test suite).
    """
    return complex(np.trace(np.asarray(x) @ np.asarray(y)))


def orthogonal_complement(ambient, sub, tol=linalg.DEFAULT_TOL):
    """Basis of the trace-form complement of ``sub`` inside ``ambient``."""
    amb = np.stack(ambient.elements)
    gram = np.einsum("sij,aji->sa", np.stack(sub.elements), amb)
    ns = linalg.nullspace(gram, tol)
    expected = ambient.dim - sub.dim
    if ns.shape[1] != expected:
        raise ValueError(
            f"complement rank {ns.shape[1]} inconsistent with "
            f"dim({ambient.tag}) - dim({sub.tag}) = {expected}")
    elements = tuple(np.tensordot(ns[:, m], amb, axes=1)
                     for m in range(ns.shape[1]))
    return SubalgebraBasis(tag=f"{ambient.tag}_minus_{sub.tag}",
                           elements=elements, span_field=ambient.span_field)
