# Degrees of the images of the rank strata, next to the symmetric
# determinantal degrees they should match.

from ruled_locus.degrees import (paper_degrees, harris_tu_symmetric, poncelet_degree,
                                 m_degree, boundary_degree)

print(" d     i      j       k        p")
for d in range(3, 13):
    t = paper_degrees(d)
    print(d, t.i, t.j, t.k, t.p)
    assert t.p == harris_tu_symmetric(d + 1, 3)

print([poncelet_degree(n) for n in range(10)])

# the three loci of quintics with infinitely many triangles
print(poncelet_degree(3), m_degree(2, 5), boundary_degree(5))
