# Degree five: the curve attached to a quintic is a plane cubic, and the
# fibre is read off the Poncelet triangles of that cubic.

from ruled_locus import GF
from ruled_locus.lines import gen_type_a, gen_rank5, gen_cone
from ruled_locus.locus import psi_biform
from ruled_locus.poncelet import (count_triangles_exact, find_triangles_bruteforce,
                                  quintic_fiber_probe, rational_triangles)
from ruled_locus.selftest import calibrate_triangles

# First make sure the elimination counter agrees with enumeration mod 101
print("calibration (compared, agreed, skipped):", calibrate_triangles(n=20, p=101))

for name, psi in [("generic", gen_type_a(5, 2, seed=0)),
                  ("rank 5", gen_rank5(5, seed=0)),
                  ("cone", gen_cone(5, 2, seed=0))]:
    r = quintic_fiber_probe(psi)
    t = r.triangles
    print(name, "phi rank", r.phi_rank, t.status, t.count, t.reduced_count, t.multiplicity)

# Over a small field some triangles are visible directly
F = GF(101)
X = psi_biform(gen_type_a(5, 2, seed=14, field=F))
c = count_triangles_exact(X)
print(c.count, rational_triangles(X, c))
print(find_triangles_bruteforce(X))
