"""Surjectivity checks for the multiplication of sections.

For ``lam, mu`` in pic+ the product ``Gamma(L_lam) x Gamma(L_mu) -> Gamma(L_{lam+mu})``
sends ``y^m1 s_lam (x) y^m2 s_mu`` to ``y^(m1+m2) s_{lam+mu}``.  Every summand of the
target is therefore hit as soon as each admissible ``m`` for ``lam + mu``
splits as ``m1 + m2`` with ``m1`` admissible for ``lam`` and ``m2`` for ``mu``.
The checker produces those splits explicitly and reports ``failed`` with the
offending ``m`` if one is missing, so the claim can be falsified.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from . import rootsys
from .catalog import Treatment
from .errors import DomainError, UnsupportedPathError
from .rootsys import Weight
from .sections import bound_from_dual, dim_sections_p1xp1, m_bound
from .wonderful import WonderfulVariety, fiber_weight, irreducible, pic_plus_contains, split_dual


class Verdict(str, Enum):
    SPLITTING = "surjective-by-splitting"
    BOREL_WEIL = "surjective-by-borel-weil"
    P1XP1 = "surjective-p1xp1"
    FAILED = "failed"

    @property
    def surjective(self) -> bool:
        return self is not Verdict.FAILED


@dataclass(frozen=True)
class SurjectivityCertificate:
    variety: str
    lam: Weight
    mu: Weight
    verdict: Verdict
    witnesses: tuple[tuple[int, int, int], ...] = ()
    bounds: tuple[int, int, int] | None = None
    failed_m: int | None = None
    # M_{lam+mu} <= M_lam + M_mu, computed separately from the witnesses
    inequality: bool | None = None
    degrees: tuple[tuple[int, int], tuple[int, int]] | None = None
    factor_witnesses: tuple[tuple[tuple[int, int, int], ...], ...] = ()
    dims: tuple[int, int, int] | None = None
    extra: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        doc = {
            "variety": self.variety,
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "verdict": self.verdict.value,
            "bounds": list(self.bounds) if self.bounds is not None else None,
            "witnesses": [list(w) for w in self.witnesses],
        }
        if self.failed_m is not None:
            doc["failed_m"] = self.failed_m
        if self.inequality is not None:
            doc["inequality"] = self.inequality
        if self.degrees is not None:
            doc["degrees"] = [list(d) for d in self.degrees]
            doc["factor_witnesses"] = [[list(w) for w in f] for f in self.factor_witnesses]
        if self.dims is not None:
            doc["dims"] = [str(d) for d in self.dims]
        doc.update(self.extra)
        return doc

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def split(m_lam: int, m_mu: int, m: int) -> tuple[int, int] | None:
    """Greedy split ``m1 = max(m - m_mu, 0)``, ``m2 = m - m1``; ``None`` if it overshoots."""
    if m < 0:
        return None
    m1 = max(m - m_mu, 0)
    m2 = m - m1
    if m1 <= m_lam and m2 <= m_mu:
        return m1, m2
    return None


def _witness_interval(m_lam, m_mu, top):
    out = []
    for m in range(top + 1):
        s = split(m_lam, m_mu, m)
        if s is None:
            return tuple(out), m
        out.append((m, *s))
    return tuple(out), None


def _as_weight(X: WonderfulVariety, w) -> Weight:
    if w is None:
        return (0,) * X.ambient.rank
    return tuple(int(x) for x in w)


def check_surjectivity(X: WonderfulVariety, lam=None, mu=None, *,
                       degrees: Sequence[Sequence[int]] | None = None) -> SurjectivityCertificate:
    """Certify surjectivity of the multiplication map for ``L_lam`` and ``L_mu``.

    Dispatches on the fiber treatment.  For ``P1xP1`` inductions the bundle is
    determined by a character ``lam`` of the parabolic together with a
    bidegree, so pass ``degrees=((k1, k2), (l1, l2))``.
    """
    lam, mu = _as_weight(X, lam), _as_weight(X, mu)
    t = X.treatment
    if t is Treatment.P1XP1:
        return _check_p1xp1(X, lam, mu, degrees)
    for name, w in (("lambda", lam), ("mu", mu)):
        if not pic_plus_contains(X, w):
            raise DomainError(f"{name} = {w} is not in pic+ of {X.label}")
    if t is Treatment.BOREL_WEIL:
        return SurjectivityCertificate(X.label, lam, mu, Verdict.BOREL_WEIL)

    gamma = X.gamma
    total = tuple(a + b for a, b in zip(lam, mu))
    m_lam = bound_from_dual(gamma, split_dual(X, lam)[0])
    m_mu = bound_from_dual(gamma, split_dual(X, mu)[0])
    m_tot = bound_from_dual(gamma, split_dual(X, total)[0])
    witnesses, failed = _witness_interval(m_lam, m_mu, m_tot)
    verdict = Verdict.SPLITTING if failed is None else Verdict.FAILED
    return SurjectivityCertificate(
        X.label, lam, mu, verdict, witnesses, (m_lam, m_mu, m_tot), failed,
        inequality=m_tot <= m_lam + m_mu,
    )


def _character_of_parabolic(X: WonderfulVariety, w: Weight) -> bool:
    return rootsys.is_dominant(X.ambient, w) and all(w[i - 1] == 0 for i in X.levi)


def _check_p1xp1(X, lam, mu, degrees) -> SurjectivityCertificate:
    if degrees is None:
        degrees = ((0, 0), (0, 0))
    (k1, k2), (l1, l2) = (tuple(int(x) for x in d) for d in degrees)
    for name, w in (("lambda", lam), ("mu", mu)):
        if not _character_of_parabolic(X, w):
            raise DomainError(
                f"{name} = {w} must be a dominant character of the parabolic "
                f"(zero on the Levi nodes {list(X.levi)})"
            )
    if min(k1, k2, l1, l2) < 0:
        raise DomainError("bidegrees of a globally generated bundle are nonnegative")
    # The Cartan product V_lam* x V_mu* -> V_(lam+mu)* is onto; what is left is
    # binary forms k[X,Y]_k x k[X,Y]_l -> k[X,Y]_(k+l), monomial by monomial.
    factors = []
    failed = None
    for k, l in ((k1, l1), (k2, l2)):
        w, bad = _witness_interval(k, l, k + l)
        factors.append(w)
        if bad is not None and failed is None:
            failed = bad
    rs = X.ambient
    total = tuple(a + b for a, b in zip(lam, mu))
    dims = (
        dim_sections_p1xp1(rs, lam, k1, k2),
        dim_sections_p1xp1(rs, mu, l1, l2),
        dim_sections_p1xp1(rs, total, k1 + l1, k2 + l2),
    )
    return SurjectivityCertificate(
        X.label, lam, mu, Verdict.P1XP1 if failed is None else Verdict.FAILED,
        failed_m=failed, degrees=((k1, k2), (l1, l2)), factor_witnesses=tuple(factors), dims=dims,
    )


def exhaustive_splits(m_lam: int, m_mu: int, m: int) -> list[tuple[int, int]]:
    """All ``(m1, m2)`` with ``m1 + m2 == m`` inside the two intervals."""
    return [(a, m - a) for a in range(0, m + 1) if a <= m_lam and m - a <= m_mu]


@dataclass(frozen=True)
class ReductionReport:
    lam: Weight
    dual: Weight
    levi_part: Weight
    outer_part: Weight
    fiber_weight: Weight
    ambient_bound: int
    fiber_bound: int
    parts_dominant: bool
    monotone: bool
    checked_outer: tuple[Weight, ...]

    @property
    def bounds_equal(self) -> bool:
        return self.ambient_bound == self.fiber_bound

    @property
    def ok(self) -> bool:
        return self.parts_dominant and self.bounds_equal and self.monotone

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "levi_part": list(self.levi_part),
            "outer_part": list(self.outer_part),
            "fiber_weight": list(self.fiber_weight),
            "ambient_bound": self.ambient_bound,
            "fiber_bound": self.fiber_bound,
            "parts_dominant": self.parts_dominant,
            "monotone": self.monotone,
            "ok": self.ok,
        }


def _dominant_after(dual, gamma, m):
    return all(a - m * g >= 0 for a, g in zip(dual, gamma))


def check_reduction(X: WonderfulVariety, lam: Sequence[int],
                    outer_weights: Iterable[Sequence[int]] | None = None) -> ReductionReport:
    """Weight-level identities behind the reduction to the fiber.

    Checks that ``lam*`` splits into dominant levi and outer parts, that the
    admissible interval of ``lam`` matches the one of its fiber weight, and
    that adding any dominant weight supported off the Levi nodes never admits
    an ``m`` that ``lam`` alone rejects.  The monotonicity scan tests
    dominance directly rather than through the closed-form bound.
    """
    if X.treatment is not Treatment.INTERVAL_SPLITTING:
        raise UnsupportedPathError(f"reduction check needs an interval-splitting variety, not {X.treatment.value}")
    lam = tuple(int(x) for x in lam)
    ambient_bound = m_bound(X, lam)
    rs = X.ambient
    dual = rootsys.weight_star(rs, lam)
    levi_part, outer_part = split_dual(X, lam)
    parts_dominant = (
        rootsys.is_dominant(rs, levi_part)
        and rootsys.is_dominant(rs, outer_part)
        and all(outer_part[i - 1] == 0 for i in X.levi)
        and tuple(a + b for a, b in zip(levi_part, outer_part)) == dual
    )
    fw = fiber_weight(X, lam)
    fiber_bound = m_bound(irreducible(X.fiber), fw)

    if outer_weights is None:
        outer_weights = [rootsys.fundamental_weight(rs, d) for d in X.outer]
        outer_weights.append(outer_part)
        outer_weights.append(tuple(sum(c) for c in zip(outer_part, *outer_weights)))
    checked = []
    monotone = True
    gamma = X.gamma
    for mu2 in outer_weights:
        mu2 = tuple(int(x) for x in mu2)
        if any(mu2[i - 1] != 0 for i in X.levi) or not rootsys.is_dominant(rs, mu2):
            raise DomainError(f"{mu2} is not a dominant weight supported off the Levi nodes")
        checked.append(mu2)
        shifted = tuple(a + b for a, b in zip(dual, mu2))
        m = 0
        while _dominant_after(shifted, gamma, m):
            if not _dominant_after(dual, gamma, m):
                monotone = False
                break
            m += 1
    return ReductionReport(
        lam, dual, levi_part, outer_part, fw, ambient_bound, fiber_bound,
        parts_dominant, monotone, tuple(checked),
    )
