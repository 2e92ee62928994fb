"""Membership reports and the 2:1 covering map between matrix groups."""

import numpy as np

from octocartan import (
    classify,
    lift,
    one_param,
    random_element,
    triality_companion,
)


def show(name, g):
    rep = classify(g, 1e-8)
    flags = [n for n in ("orthogonal", "special", "fixes_e0", "fixes_e1",
                         "is_automorphism", "has_triality_companion", "is_real")
             if getattr(rep, n)]
    print(f"{name:<24} {', '.join(flags)}")


show("identity", np.eye(8))
show("slice t_theta (r2)", one_param("a1", 1.0).matrix)
show("slice at_theta (r1p)", one_param("a0tilde", 1.0).matrix)
show("slice a_theta (r1)", one_param("a0", 1.0).matrix)
show("random automorphism", random_element("g2c", seed=1))
show("random spin element", random_element("spin7c", seed=1))
show("random compact su3", random_element("su3", seed=1))

# The covering map: the slice upstairs maps onto the slice downstairs with
# the parameter scaled by 2/3.
at = one_param("a0tilde", 1.0).matrix
a = triality_companion(at).g0
print("\ncompanion of at_1 equals a_{2/3}:",
      np.linalg.norm(a - one_param("a0", 2.0 / 3.0).matrix))

# Lifting goes the other way and is two-valued; the library fixes the sign.
g = random_element("spin7c", seed=5)
downstairs = triality_companion(g, 1e-6).g0
back = lift(downstairs, 1e-6)
print("lift(companion(g)) is +/- g:",
      min(np.linalg.norm(back - g), np.linalg.norm(back + g)))

# Kernel of the cover: g and -g have the same companion.
print("companion(-g) == companion(g):",
      np.linalg.norm(triality_companion(-g, 1e-6).g0 - downstairs))
