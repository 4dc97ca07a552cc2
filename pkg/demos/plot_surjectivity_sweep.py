"""
Certifying multiplication maps in bulk
======================================

"""

import json

from rankone import check_surjectivity, catalog
from rankone.wonderful import irreducible
from rankone import sweep

# one pair: each admissible index for the sum splits into admissible indices
# for the factors, and the certificate lists those splits
g2_variety = irreducible(catalog.case_15())
cert = check_surjectivity(g2_variety, (1, 1), (2, 1))
print(cert.verdict.value, cert.bounds)
print(cert.witnesses)

# the standard sweep, kept small here
config = sweep.SweepConfig(varieties=sweep.standard_varieties(), max_coeff=2, with_oracle=True)
report = sweep.run_sweep(config)
print(json.dumps(report["summary"], indent=1))
