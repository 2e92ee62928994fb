"""Membership predicates, the Cartan involution, and the spin covering map.

Every group here is realized inside the 8x8 complex matrices acting on
octonion coefficient vectors:

* complex orthogonal matrices preserve the bilinear form (transpose, not
  conjugate transpose);
* automorphisms additionally preserve the product, and automatically fix e0;
* spin elements are those admitting a *triality companion* g0 fixing e0 with
  (g0 x)(g y) = g(xy); the map g -> g0 is a 2:1 covering homomorphism onto
  the rotation group of the imaginary units.

The companion has a closed form by right division, because g e0 has unit
norm and right multiplication by its conjugate inverts left factors.  The
inverse direction (lifting a rotation to a spin element) has no closed form
and is computed from the nullspace of the 512x64 linear system the law
imposes on the unknown matrix.
"""

from dataclasses import dataclass

import numpy as np

from . import cayley, linalg, pairs

DEFAULT_TOL = linalg.DEFAULT_TOL

GROUP_TAGS = ("so8c", "so7c", "spin7c", "g2c", "sl3c",
              "so8", "so7", "spin7", "g2", "su3")

RANDOM_GROUP_TAGS = ("so7c", "spin7c", "g2c", "sl3c", "so7", "spin7", "g2", "su3")


class TrialityError(RuntimeError):
    """No companion within tolerance: the matrix is not a spin element."""


class LiftError(RuntimeError):
    """The lift system is degenerate or the input is not a rotation of e0^perp."""


@dataclass(frozen=True)
class TrialityPair:
    """A spin element with its companion, law verified over all 64 pairs."""

    g: np.ndarray
    g0: np.ndarray
    residual: float


@dataclass(frozen=True)
class MembershipReport:
    orthogonal: bool
    special: bool
    fixes_e0: bool
    fixes_e1: bool
    is_automorphism: bool
    has_triality_companion: bool
    is_real: bool
    residual_orthogonal: float
    residual_special: float
    residual_e0: float
    residual_e1: float
    residual_automorphism: float
    residual_triality: float
    residual_real: float

    _RESIDUAL_KEYS = {
        "so8c": ("residual_orthogonal", "residual_special"),
        "so7c": ("residual_orthogonal", "residual_special", "residual_e0"),
        "g2c": ("residual_orthogonal", "residual_special", "residual_automorphism"),
        "spin7c": ("residual_orthogonal", "residual_special", "residual_triality"),
        "sl3c": ("residual_orthogonal", "residual_special",
                 "residual_automorphism", "residual_e1"),
    }

    def residual_for(self, tag):
        """Scalar membership residual for a group tag (max of constituents)."""
        key = tag.lower()
        if key in self._RESIDUAL_KEYS:
            keys = self._RESIDUAL_KEYS[key]
        else:
            complex_of = {"so8": "so8c", "so7": "so7c", "spin7": "spin7c",
                          "g2": "g2c", "su3": "sl3c"}
            if key not in complex_of:
                raise ValueError(f"unknown group tag {tag!r}")
            keys = self._RESIDUAL_KEYS[complex_of[key]] + ("residual_real",)
        return max(getattr(self, k) for k in keys)

    def member_of(self, tag, tol=DEFAULT_TOL):
        return self.residual_for(tag) <= tol


def cartan_theta(g):
    """Cartan involution: entrywise complex conjugation."""
    return np.conj(np.asarray(g))


def _pair_products(g0, g):
    """Tensor P[i, j, :] = (g0 e_i)(g e_j)."""
    return np.einsum("pi,qj,pqk->ijk", g0, g, cayley.structure_tensor())


def _image_products(g):
    """Tensor Q[i, j, :] = g(e_i e_j)."""
    return np.einsum("ijm,km->ijk", cayley.structure_tensor(), g)


def _companion_candidate(g):
    """Right division of g by g e0 (the closed-form covering map)."""
    return cayley.right_mult_matrix(cayley.oct_conj(g[:, 0])) @ g


def _law_residual(g0, g):
    d = _pair_products(g0, g) - _image_products(g)
    return float(np.sqrt((np.abs(d) ** 2).sum(axis=2)).max())


def classify(g, tol=DEFAULT_TOL):
    """Evaluate every membership flag with its residual; never raises."""
    g = np.asarray(g, dtype=complex)
    eye = np.eye(8)
    res_orth = float(np.linalg.norm(g.T @ g - eye))
    res_special = float(abs(np.linalg.det(g) - 1.0))
    res_e0 = float(np.linalg.norm(g[:, 0] - eye[0]))
    res_e1 = float(np.linalg.norm(g[:, 1] - eye[1]))
    res_real = float(np.linalg.norm(g.imag))

    diff = _pair_products(g, g) - _image_products(g)
    norms = np.sqrt((np.abs(diff) ** 2).sum(axis=2))
    iu = np.triu_indices(8)  # the 36 unordered basis pairs
    res_auto = float(norms[iu].max())

    res_triality = _law_residual(_companion_candidate(g), g)

    return MembershipReport(
        orthogonal=res_orth <= tol,
        special=res_special <= tol,
        fixes_e0=res_e0 <= tol,
        fixes_e1=res_e1 <= tol,
        is_automorphism=res_auto <= tol,
        has_triality_companion=res_triality <= tol,
        is_real=res_real <= tol,
        residual_orthogonal=res_orth,
        residual_special=res_special,
        residual_e0=res_e0,
        residual_e1=res_e1,
        residual_automorphism=res_auto,
        residual_triality=res_triality,
        residual_real=res_real,
    )


def triality_companion(g, tol=DEFAULT_TOL):
    """Companion g0 with (g0 x)(g y) = g(xy); this map is the double cover.

    Raises TrialityError when the input is not complex-orthogonal or the
    verified law residual exceeds tol.
    """
    g = np.asarray(g, dtype=complex)
    res_orth = float(np.linalg.norm(g.T @ g - np.eye(8)))
    if res_orth > tol:
        raise TrialityError(f"input not complex-orthogonal (residual {res_orth:.3g})")
    g0 = _companion_candidate(g)
    res = _law_residual(g0, g)
    if res > tol:
        raise TrialityError(f"no triality companion (max residual {res:.3g})")
    return TrialityPair(g=g, g0=g0, residual=res)


def lift(g0, tol=DEFAULT_TOL):
    """Spin element g with companion g0, fixed by a deterministic sign rule.

    Assembles the homogeneous system the law imposes on the 64 unknowns of
    g, extracts its (expected 1-dimensional) nullspace, scales the spanning
    vector to unit form value on g e0, and picks the sign so that the first
    significant coordinate of g e0 has argument in (-pi/2, pi/2].
    """
    g0 = np.asarray(g0, dtype=complex)
    rep = classify(g0, tol)
    if not (rep.orthogonal and rep.fixes_e0):
        raise LiftError("input is not an orthogonal map fixing e0")
    t = cayley.structure_tensor()
    eye = np.eye(8)
    blocks = []
    for i in range(8):
        left = cayley.left_mult_matrix(g0[:, i])
        for j in range(8):
            blocks.append(np.kron(left, eye[j][None, :])
                          - np.kron(eye, t[i, j][None, :]))
    ns = linalg.nullspace(np.concatenate(blocks, axis=0), tol)
    if ns.shape[1] != 1:
        raise LiftError(f"lift nullspace has dimension {ns.shape[1]}, expected 1")
    g = ns[:, 0].reshape(8, 8)
    c = cayley.bilinear_form(g[:, 0], g[:, 0])
    if abs(c) < tol:
        raise LiftError("cannot normalize: form value of g e0 is ~0")
    g = g / np.sqrt(c)
    u = g[:, 0]
    idx = np.flatnonzero(np.abs(u) > tol)
    if idx.size == 0:
        raise LiftError("cannot fix sign: g e0 vanishes")
    z = u[idx[0]]
    if z.real < -1e-12 * abs(z) or (abs(z.real) <= 1e-12 * abs(z) and z.imag < 0):
        g = -g
    return g


_RANDOM_BASIS = {
    "so7c": ("so7c", True),
    "spin7c": ("spin7c", True),
    "g2c": ("g2c", True),
    "sl3c": ("sl3c", True),
    "so7": ("so7compact", False),
    "spin7": ("spin7compact", False),
    "g2": ("g2compact", False),
    "su3": ("su3", False),
}


def random_element(group, seed=0, scale=1.0):
    """Seeded pseudo-random group element: exp of a random algebra vector.

    Coefficients are i.i.d. uniform on [-scale, scale] drawn from numpy's
    PCG64 generator (``default_rng(seed)``); complex groups draw an
    independent coefficient for the real and imaginary direction of every
    basis element, compact groups draw real coefficients only.  Same seed,
    same matrix, on any platform running the same numpy/LAPACK build.
    """
    key = str(group).lower()
    if key not in _RANDOM_BASIS:
        raise ValueError(f"unknown group tag {group!r}")
    if not 0.0 <= scale <= 3.0:
        raise ValueError("scale must lie in [0, 3]")
    tag, is_complex = _RANDOM_BASIS[key]
    b = pairs.basis(tag)
    rng = np.random.default_rng(seed)
    if is_complex:
        raw = rng.uniform(-scale, scale, 2 * b.dim)
        coeff = raw[:b.dim] + 1j * raw[b.dim:]
    else:
        coeff = rng.uniform(-scale, scale, b.dim)
    x = np.tensordot(coeff, np.stack(b.elements), axes=1)
    return linalg.expm(x)
