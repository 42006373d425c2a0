# Even degree d = 2n: a 2 x 2 matrix of forms of degree 2n - 2 gives a
# balanced surface, and the determinant of a 2(n-1) square matrix of
# quadrics gives its curve directly.

from ruled_locus.birational import (random_extension, extension_is_trivializable,
                                    extension_to_surface, calcexp_curve)
from ruled_locus.lines import splitting_type, dual_surface
from ruled_locus.locus import psi_biform

for n in (2, 3, 4):
    E = random_extension(n, seed=1)
    print("n =", n, "trivializable:", extension_is_trivializable(E))
    psi = extension_to_surface(E)
    print("  degree", psi.d, splitting_type(psi), splitting_type(dual_surface(psi)))
    C = calcexp_curve(E)
    G = psi_biform(psi)
    print("  same curve:", C.is_proportional(G))

# Changing bases of the two 2-dimensional spaces does not move the curve
E = random_extension(3, seed=2)
E2 = E.change_basis([[1, 2], [0, 1]], [[3, 0], [1, 1]])
print(calcexp_curve(E).is_proportional(calcexp_curve(E2)))
