"""Irreducible decomposition of the section module of ``L_lam``.

For ``lam`` in pic+ the global sections split as a direct sum over the
integers ``m >= 0`` with ``lam* - m gamma`` dominant, one irreducible summand
of highest weight ``lam* - m gamma`` for each.  Each coordinate of
``lam* - m gamma`` is affine in ``m``, so the admissible ``m`` form an initial
interval ``0..M`` and ``M`` has a closed form.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from . import rootsys
from .catalog import Treatment
from .errors import DomainError, UnsupportedPathError
from .rootsys import RootSystem, Weight
from .wonderful import WonderfulVariety, pic_plus_contains


@dataclass(frozen=True)
class Summand:
    m: int
    head: Weight
    dim: int


@dataclass(frozen=True)
class SectionDecomposition:
    lam: Weight
    summands: tuple[Summand, ...]

    @property
    def total_dim(self) -> int:
        return sum(s.dim for s in self.summands)

    @property
    def heads(self) -> list[Weight]:
        return [s.head for s in self.summands]

    @property
    def dims(self) -> list[int]:
        return [s.dim for s in self.summands]

    def to_dict(self) -> dict:
        # dims as decimal strings: arbitrary precision survives any JSON reader
        return {
            "lambda": list(self.lam),
            "summands": [{"m": s.m, "head": list(s.head), "dim": str(s.dim)} for s in self.summands],
            "total_dim": str(self.total_dim),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, doc: dict) -> "SectionDecomposition":
        return cls(
            tuple(doc["lambda"]),
            tuple(Summand(int(s["m"]), tuple(s["head"]), int(s["dim"])) for s in doc["summands"]),
        )


def _require_splitting_path(X: WonderfulVariety) -> None:
    if X.treatment is Treatment.P1XP1:
        raise UnsupportedPathError(
            f"{X.label}: the fiber is P1xP1, where the section decomposition does not apply"
        )
    if X.gamma is None:
        raise UnsupportedPathError(f"{X.label} has no spherical root in the catalog")


def bound_from_dual(gamma: Sequence[int], dual: Sequence[int]) -> int:
    """Largest ``m`` with ``dual - m gamma`` dominant, given ``dual`` dominant.

    ``min(floor(dual_d / gamma_d))`` over the coordinates where ``gamma`` is
    positive; coordinates with ``gamma_d <= 0`` never bind.
    """
    ratios = [dual[d] // g for d, g in enumerate(gamma) if g > 0]
    if not ratios:
        raise DomainError("spherical root has no positive pairing; the interval is unbounded")
    return min(ratios)


def m_bound(X: WonderfulVariety, lam: Sequence[int]) -> int:
    _require_splitting_path(X)
    lam = tuple(int(x) for x in lam)
    if not pic_plus_contains(X, lam):
        raise DomainError(f"{lam} is not in pic+ of {X.label}")
    dual = rootsys.weight_star(X.ambient, lam)
    return bound_from_dual(X.gamma, dual)


def head(X: WonderfulVariety, lam: Sequence[int], m: int) -> Weight:
    """``lam* - m gamma``."""
    dual = rootsys.weight_star(X.ambient, lam)
    return tuple(a - m * g for a, g in zip(dual, X.gamma))


def decompose(X: WonderfulVariety, lam: Sequence[int]) -> SectionDecomposition:
    M = m_bound(X, lam)
    summands = []
    for m in range(M + 1):
        h = head(X, lam, m)
        summands.append(Summand(m, h, rootsys.weyl_dim(X.ambient, h)))
    return SectionDecomposition(tuple(int(x) for x in lam), tuple(summands))


def dim_sections_p1xp1(rs: RootSystem, lam: Sequence[int], k1: int, k2: int) -> int:
    """``dim V_{lam*} * (k1 + 1) * (k2 + 1)`` for bundles on P1xP1 inductions."""
    if k1 < 0 or k2 < 0:
        raise DomainError(f"bidegree ({k1}, {k2}) has a negative entry")
    if not rootsys.is_dominant(rs, lam):
        raise DomainError(f"{tuple(lam)} is not dominant")
    return rootsys.weyl_dim(rs, rootsys.weight_star(rs, lam)) * (k1 + 1) * (k2 + 1)
