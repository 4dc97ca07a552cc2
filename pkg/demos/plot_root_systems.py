"""
Root systems and the dual weight
================================

"""

# Cartan matrices are stored column by column: column j is the j-th simple
# root written in fundamental-weight coordinates
from rankone import rootsys
from rankone.rootsys import root_system

g2 = root_system("G", 2)
print(g2.name)
print(g2.cartan)
print(rootsys.positive_roots(g2))

# the dual of an irreducible module: its highest weight is minus the lowest one
a4 = root_system("A", 4)
weight = (2, 0, 1, 0)
print(weight, "->", rootsys.weight_star(a4, weight))

# dimensions are exact integers even in E8
e8 = root_system("E", 8)
print(rootsys.weyl_dim(e8, (0, 0, 0, 0, 0, 0, 0, 1)))
print(rootsys.weyl_dim(e8, (1, 1, 1, 1, 1, 1, 1, 1)))
