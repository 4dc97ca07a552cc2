"""Rank-one wonderful varieties assembled by parabolic induction.

A variety is an irreducible catalog entry (the *fiber*) placed over a Levi
subset ``levi`` of the simple roots of an *ambient* root system, together with
an explicit correspondence ``fiber index -> ambient index``.  The irreducible
case is the identity correspondence onto all simple roots.

Weights are written in ambient fundamental coordinates.  A weight ``lam``
splits through its dual ``lam* = -w0 lam`` into a part on ``levi`` and a part
on the remaining (outer) simple roots; only the levi part carries fiber
information.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import catalog, rootsys
from .catalog import CatalogEntry, Treatment
from .errors import ConfigError, DimensionError, StructuralError
from .rootsys import RootSystem, Weight


@dataclass(frozen=True)
class WonderfulVariety:
    ambient: RootSystem
    levi: tuple[int, ...]
    fiber: CatalogEntry
    correspondence: tuple[int, ...]  # correspondence[k-1] = ambient index of fiber node k
    gamma: Weight | None = field(init=False)
    pic_basis: tuple[Weight, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "gamma", _push_gamma(self))
        object.__setattr__(self, "pic_basis", _pic_basis(self))

    @property
    def treatment(self) -> Treatment:
        return self.fiber.treatment

    @property
    def is_induced(self) -> bool:
        return len(self.levi) < self.ambient.rank

    @property
    def outer(self) -> tuple[int, ...]:
        """Simple roots outside the Levi subset (1-based)."""
        return tuple(i for i in range(1, self.ambient.rank + 1) if i not in self.levi)

    @property
    def label(self) -> str:
        if not self.is_induced:
            return self.fiber.label
        levi = ",".join(map(str, self.levi))
        return f"{self.ambient.name}/{{{levi}}}/{self.fiber.label}"

    def to_config(self) -> dict:
        if not self.is_induced:
            return self.fiber.to_config()
        return {
            "induction": {
                "ambient": self.ambient.to_config(),
                "levi": list(self.levi),
                "fiber": self.fiber.to_config(),
                "map": {str(k + 1): a for k, a in enumerate(self.correspondence)},
            }
        }


def _push_gamma(X: WonderfulVariety) -> Weight | None:
    fib = X.fiber
    if fib.gamma is None:
        return None
    coeffs = rootsys.to_simple_root_coords(fib.group, fib.gamma)
    r = [0] * X.ambient.rank
    for k, a in enumerate(X.correspondence):
        r[a - 1] = coeffs[k]
    gamma = rootsys.from_simple_root_coords(X.ambient, r)
    for d in X.outer:
        if gamma[d - 1] > 0:
            raise StructuralError(
                f"spherical root {gamma} pairs positively with the outer coroot {d}"
            )
    return gamma


def _embed(X: WonderfulVariety, fiber_w: Sequence[int]) -> Weight:
    out = [0] * X.ambient.rank
    for k, a in enumerate(X.correspondence):
        out[a - 1] = fiber_w[k]
    return tuple(out)


def _pic_basis(X: WonderfulVariety) -> tuple[Weight, ...]:
    rs = X.ambient
    duals = [rootsys.fundamental_weight(rs, d) for d in X.outer]
    duals += [_embed(X, rootsys.weight_star(X.fiber.group, g)) for g in X.fiber.pic_generators]
    # stored as lam with lam* equal to the listed dual weight
    return tuple(rootsys.weight_star(rs, w) for w in duals)


def _normalise_map(correspondence, fiber_rank: int) -> tuple[int, ...]:
    if isinstance(correspondence, Mapping):
        try:
            pairs = {int(k): int(v) for k, v in correspondence.items()}
        except (TypeError, ValueError):
            raise StructuralError("correspondence keys and values must be integers") from None
        if sorted(pairs) != list(range(1, fiber_rank + 1)):
            raise StructuralError(
                f"correspondence must be defined on fiber nodes 1..{fiber_rank}, got {sorted(pairs)}"
            )
        return tuple(pairs[k] for k in range(1, fiber_rank + 1))
    out = tuple(int(v) for v in correspondence)
    if len(out) != fiber_rank:
        raise StructuralError(f"correspondence has {len(out)} entries for a rank-{fiber_rank} fiber")
    return out


def make_induced(ambient: RootSystem, levi: Sequence[int], fiber: CatalogEntry,
                 correspondence) -> WonderfulVariety:
    """Parabolically induce ``fiber`` over the Levi subset ``levi`` of ``ambient``.

    ``correspondence`` maps fiber simple-root indices to ambient ones, as a
    dict ``{1: 2, 2: 3, ...}`` or a sequence indexed by fiber node.  It must
    be a bijection onto ``levi`` preserving Cartan integers.
    """
    levi_t = tuple(sorted(set(int(i) for i in levi)))
    if len(levi_t) != len(levi):
        raise StructuralError("Levi subset has repeated indices")
    if any(not 1 <= i <= ambient.rank for i in levi_t):
        raise StructuralError(f"Levi subset {levi_t} not inside 1..{ambient.rank}")
    corr = _normalise_map(correspondence, fiber.group.rank)
    if tuple(sorted(corr)) != levi_t:
        raise StructuralError(f"correspondence image {sorted(corr)} differs from Levi subset {list(levi_t)}")
    fc, ac = fiber.group.cartan, ambient.cartan
    for a in range(fiber.group.rank):
        for b in range(fiber.group.rank):
            if fc[a][b] != ac[corr[a] - 1][corr[b] - 1]:
                raise StructuralError(
                    f"sub-diagram on {list(levi_t)} of {ambient.name} is not {fiber.group.name} "
                    f"under this correspondence (Cartan entry ({a + 1},{b + 1}))"
                )
    if fiber.treatment is Treatment.BOREL_WEIL and len(levi_t) < ambient.rank:
        raise StructuralError("flag-type fibers carry no spherical root and cannot be induced")
    return WonderfulVariety(ambient, levi_t, fiber, corr)


def irreducible(entry: CatalogEntry) -> WonderfulVariety:
    n = entry.group.rank
    return WonderfulVariety(entry.group, tuple(range(1, n + 1)), entry, tuple(range(1, n + 1)))


def variety_from_config(doc: dict) -> WonderfulVariety:
    """Build a variety from its description document.

    ``{"family": "15"}`` for an irreducible entry, or
    ``{"induction": {"ambient": {...}, "levi": [...], "fiber": {...}, "map": {...}}}``.
    """
    if not isinstance(doc, Mapping):
        raise ConfigError(f"variety description must be an object, got {doc!r}")
    if "induction" in doc:
        ind = doc["induction"]
        try:
            ambient = RootSystem.from_config(ind["ambient"])
            fiber = catalog.entry_from_config(ind["fiber"])
            levi = ind["levi"]
            corr = ind["map"]
        except KeyError as exc:
            raise ConfigError(f"induction description is missing {exc}") from None
        return make_induced(ambient, levi, fiber, corr)
    return irreducible(catalog.entry_from_config(doc))


def split_dual(X: WonderfulVariety, lam: Sequence[int]) -> tuple[Weight, Weight]:
    """``lam*`` as (levi part, outer part), both in ambient coordinates."""
    ls = rootsys.weight_star(X.ambient, lam)
    levi = tuple(x if i + 1 in X.levi else 0 for i, x in enumerate(ls))
    outer = tuple(x - y for x, y in zip(ls, levi))
    return levi, outer


def fiber_weight(X: WonderfulVariety, lam: Sequence[int]) -> Weight:
    """The fiber weight indexing the restriction of ``L_lam`` to the fiber.

    The levi part of ``lam*`` is read through the correspondence and dualised
    in the fiber group (a no-op for fibers of type B, C, G2 and A1).
    """
    ls = rootsys.weight_star(X.ambient, lam)
    restricted = tuple(ls[a - 1] for a in X.correspondence)
    return rootsys.weight_star(X.fiber.group, restricted)


def pic_plus_contains(X: WonderfulVariety, lam: Sequence[int]) -> bool:
    if len(lam) != X.ambient.rank:
        return False
    if not rootsys.is_dominant(X.ambient, lam):
        return False
    return catalog.pic_plus_contains(X.fiber, fiber_weight(X, lam))


def pic_rank(X: WonderfulVariety) -> int:
    return len(X.outer) + X.fiber.pic_rank


def _check_class(X: WonderfulVariety, coeffs: Sequence[int]) -> tuple[int, ...]:
    if len(coeffs) != len(X.pic_basis):
        raise DimensionError(f"Picard class needs {len(X.pic_basis)} coefficients, got {len(coeffs)}")
    return tuple(int(c) for c in coeffs)


def is_globally_generated(X: WonderfulVariety, coeffs: Sequence[int]) -> bool:
    """Globally generated iff every coefficient over the divisor basis is >= 0."""
    return all(c >= 0 for c in _check_class(X, coeffs))


def class_to_weight(X: WonderfulVariety, coeffs: Sequence[int]) -> Weight:
    c = _check_class(X, coeffs)
    return tuple(
        sum(ci * b[j] for ci, b in zip(c, X.pic_basis)) for j in range(X.ambient.rank)
    )


def pic_restriction_injective(X: WonderfulVariety) -> bool:
    """Whether restriction of line bundles to the closed orbit is injective."""
    return X.fiber.treatment is not Treatment.P1XP1
