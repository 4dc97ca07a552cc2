"""
Splitting a section module into irreducibles
============================================

"""

from rankone import catalog, decompose, m_bound
from rankone.wonderful import irreducible, variety_from_config
from rankone.sweep import INDUCED_FIXTURES

# the B3 family member: sections of the line bundle of weight 2*w1
odd_quadric = irreducible(catalog.case_9b(3))
sections = decompose(odd_quadric, (2, 0, 0))
for s in sections.summands:
    print(s.m, s.head, s.dim)
print("total", sections.total_dim)

# the G2 member has a spherical root with a negative entry
g2_variety = irreducible(catalog.case_15())
print(g2_variety.gamma, decompose(g2_variety, (0, 1)).dims)

# an induced variety: only the part of the dual weight on the Levi nodes
# constrains how many summands appear
induced = variety_from_config(INDUCED_FIXTURES[0])
print(induced.label, induced.gamma)
for weight in [(0, 2, 0, 0), (5, 2, 0, 0), (5, 0, 0, 0)]:
    print(weight, m_bound(induced, weight))
