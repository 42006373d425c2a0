# The smallest interesting case: a ruled cubic surface given by six
# binary cubics, its quadratic form on S_3 and its curve of meeting pairs.

from ruled_locus.lines import validate, splitting_type, stability
from ruled_locus.locus import phi, phi_rank, psi_biform, psi_determinantal, pinch_points
from ruled_locus.selftest import worked_example

psi = worked_example()
print(psi.forms)

# Plucker forms of lines, no base points, so it really is a ruled surface
print(validate(psi))
print(splitting_type(psi), stability(psi).kind)

# The symmetric 4 x 4 matrix and its rank
for row in phi(psi):
    print([str(x) for x in row])
print("rank", phi_rank(psi))

# Two independent routes to the curve of pairs {p, q} whose lines meet
G1 = psi_biform(psi)
G2 = psi_determinantal(psi)
print(G1, G2, G1.is_proportional(G2))

# where the curve touches the conic of double points: the pinch points
print(pinch_points(psi))
