"""Complexified Cayley (octonion) arithmetic over the fixed basis e0..e7.

An octonion is a length-8 coefficient vector; index i holds the coefficient
of the basis unit e_i, with e0 the multiplicative unit.  Coefficients may be
complex: the bilinear form is the complex-symmetric extension of the
Euclidean inner product (no conjugation), so null vectors and zero divisors
appear after complexification.

The multiplication table is generated from seven quaternionic index triples
(Fano lines); the diagonal follows e0*e0 = e0 and e_i*e_i = -e0 for i >= 1.
"""

from dataclasses import dataclass
from functools import cache

import numpy as np

DIM = 8

# Quaternionic triples (i, j, k): e_i e_j = e_k cyclically, reversals flip sign.
FANO_TRIPLES = (
    (1, 2, 3),
    (1, 4, 5),
    (1, 6, 7),
    (2, 5, 7),
    (2, 6, 4),
    (3, 5, 6),
    (3, 4, 7),
)

# The seven off-diagonal generating products e_i e_j = sign * e_k.  Together
# with the two diagonal rules these are the nine defining relations.
GENERATING_PRODUCTS = (
    (1, 2, 1, 3),
    (1, 4, 1, 5),
    (1, 6, 1, 7),
    (2, 5, 1, 7),
    (2, 6, 1, 4),
    (3, 5, 1, 6),
    (3, 4, 1, 7),
)


@dataclass(frozen=True)
class MultTable:
    """Structure constants: e_i e_j = sign[i, j] * e_{index[i, j]}."""

    sign: np.ndarray
    index: np.ndarray


@cache
def build_mult_table() -> MultTable:
    """Complete the 8x8 table from the Fano triples and the unit/diagonal laws.

    Raises RuntimeError if a derived entry conflicts with another entry or
    with one of the generating relations (that would be an implementation
    bug, never a data problem).
    """
    sign = np.zeros((DIM, DIM), dtype=np.int64)
    index = np.full((DIM, DIM), -1, dtype=np.int64)

    def put(i, j, s, k):
        if index[i, j] != -1 and (sign[i, j], index[i, j]) != (s, k):
            raise RuntimeError(f"multiplication table conflict at ({i},{j})")
        sign[i, j] = s
        index[i, j] = k

    put(0, 0, 1, 0)
    for i in range(1, DIM):
        put(0, i, 1, i)
        put(i, 0, 1, i)
        put(i, i, -1, 0)
    for i, j, k in FANO_TRIPLES:
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            put(a, b, 1, c)
            put(b, a, -1, c)
    if (index < 0).any():
        raise RuntimeError("multiplication table incomplete")
    for i, j, s, k in GENERATING_PRODUCTS:
        ok = (sign[i, j], index[i, j]) == (s, k)
        ok = ok and (sign[j, i], index[j, i]) == (-s, k)
        if not ok:
            raise RuntimeError(f"derived table contradicts relation e{i}e{j}")
    sign.setflags(write=False)
    index.setflags(write=False)
    return MultTable(sign=sign, index=index)


@cache
def structure_tensor() -> np.ndarray:
    """Dense tensor T with (e_i e_j)_k = T[i, j, k]; entries in {-1, 0, 1}."""
    table = build_mult_table()
    t = np.zeros((DIM, DIM, DIM))
    for i in range(DIM):
        for j in range(DIM):
            t[i, j, table.index[i, j]] = table.sign[i, j]
    t.setflags(write=False)
    return t


def oct_mul(a, b):
    """Product of two coefficient vectors (bilinear extension of the table)."""
    a = np.asarray(a)
    b = np.asarray(b)
    return np.einsum("i,j,ijk->k", a, b, structure_tensor())


def bilinear_form(a, b):
    """Complex-symmetric form sum_i a_i b_i (not Hermitian)."""
    return np.multiply(np.asarray(a), np.asarray(b)).sum()


def oct_conj(a):
    """Conjugate: keep the e0 coefficient, negate coefficients 1..7."""
    out = -np.asarray(a).copy()
    out[0] = -out[0]
    return out


def real_part(a):
    """Projection onto the span of e0 (coefficient 0 kept, rest zeroed)."""
    out = np.zeros_like(np.asarray(a))
    out[0] = np.asarray(a)[0]
    return out


def imaginary_part(a):
    """Projection onto the span of e1..e7 (coefficient 0 zeroed)."""
    out = np.asarray(a).copy()
    out[0] = 0
    return out


def left_mult_matrix(a):
    """Matrix L with L @ x == oct_mul(a, x)."""
    return np.einsum("i,ijk->kj", np.asarray(a), structure_tensor())


def right_mult_matrix(b):
    """Matrix R with R @ x == oct_mul(x, b)."""
    return np.einsum("j,ijk->ki", np.asarray(b), structure_tensor())
