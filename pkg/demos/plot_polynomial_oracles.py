"""
Polynomial rings as independent checks
======================================

"""

from rankone import models, rootsys
from rankone.rootsys import root_system

# the multiplication matrix of degree-1 forms on the plane
plane = models.projective_space(2)
mat = models.multiplication_matrix(plane, 1, 1)
print(mat.shape)
print(models.oracle_check(plane, 1, 1))

# the three-dimensional quadric, with x0^2 rewritten as a sum of squares
quadric = models.quadric(4)
print(models.oracle_check(quadric, 1, 1).to_dict())

# its graded pieces have the dimensions of B2 modules of weight d*w1
b2 = root_system("B", 2)
print([quadric.dim(d) for d in range(6)])
print([rootsys.weyl_dim(b2, (d, 0)) for d in range(6)])

# the product of two projective lines, bidegree by bidegree
square = models.p1xp1_model()
for d in models.degree_grid(square, 2):
    print(d, models.oracle_surjective(square, d, (1, 1)))
