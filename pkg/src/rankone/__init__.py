"""Combinatorial checks of section-ring surjectivity on rank-one wonderful varieties."""

__version__ = "0.1.0"

from .rootsys import RootSystem, root_system, weight_star, weyl_dim  # noqa: E402
from .catalog import CatalogEntry, Treatment, get_entry  # noqa: E402
from .wonderful import WonderfulVariety, irreducible, make_induced, variety_from_config  # noqa: E402
from .sections import SectionDecomposition, decompose, m_bound  # noqa: E402
from .multiply import SurjectivityCertificate, Verdict, check_reduction, check_surjectivity, split  # noqa: E402

__all__ = [
    "RootSystem", "root_system", "weight_star", "weyl_dim",
    "CatalogEntry", "Treatment", "get_entry",
    "WonderfulVariety", "irreducible", "make_induced", "variety_from_config",
    "SectionDecomposition", "decompose", "m_bound",
    "SurjectivityCertificate", "Verdict", "check_reduction", "check_surjectivity", "split",
]
