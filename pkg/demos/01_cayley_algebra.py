"""Tour of the complexified Cayley algebra: table, axioms, zero divisors."""

import numpy as np

from octocartan import bilinear_form, build_mult_table, oct_conj, oct_mul

e = np.eye(8, dtype=complex)

table = build_mult_table()
print("multiplication table (sign * index), rows = left factor:")
for i in range(8):
    print("  ", " ".join(f"{table.sign[i, j] * table.index[i, j]:+d}"
                         for j in range(8)))

print("\ne1 * e2 =", oct_mul(e[1], e[2]).real.astype(int), "(= e3)")
print("e6 * e2 =", oct_mul(e[6], e[2]).real.astype(int), "(= -e4)")

# The product preserves the bilinear form even with complex coefficients.
rng = np.random.default_rng(0)
x = rng.normal(size=8) + 1j * rng.normal(size=8)
y = rng.normal(size=8) + 1j * rng.normal(size=8)
xy = oct_mul(x, y)
print("\ncomposition identity on a random pair:",
      abs(bilinear_form(xy, xy) - bilinear_form(x, x) * bilinear_form(y, y)))

# Conjugation recovers the form value: x * conj(x) = (x, x) e0.
print("norm recovery:", oct_mul(x, oct_conj(x))[0], "vs", bilinear_form(x, x))

# Complexification introduces zero divisors: (e1 + i e2) squares to zero.
v = e[1] + 1j * e[2]
print("\n(e1 + i e2)^2 =", oct_mul(v, v), " -- a null vector:",
      bilinear_form(v, v))
