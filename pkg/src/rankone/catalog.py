"""Irreducible rank-one wonderful varieties, as data.

Only the families whose spherical root is known explicitly are hard-coded:

=========  ========  ==================  ===========================
family     group     spherical root      Picard generators
=========  ========  ==================  ===========================
9B(n)      B_n       omega_1             omega_1
9C(n)      C_n       omega_2             omega_2
15         G_2       omega_2 - omega_1   omega_1, omega_2
P1xP1      A_1       (none)              omega_1, omega_1
=========  ========  ==================  ===========================

``P1xP1`` is ``SL_2`` acting diagonally on the product of two lines.  Its two
Picard generators ``O(1,0)`` and ``O(0,1)`` restrict to the same weight on the
closed orbit, so the list is deliberately dependent.

Homogeneous irreducible cases (projective spaces, quadrics, ...) are entered
by the caller as ``family="flag"`` with their own group and Picard data.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from . import rootsys
from .errors import CatalogLookupError, DomainError, StructuralError
from .linalg import bareiss_rank, solve_rational
from .rootsys import RootSystem, Weight


class Treatment(str, Enum):
    INTERVAL_SPLITTING = "interval-splitting"
    BOREL_WEIL = "borel-weil"
    P1XP1 = "p1xp1-special"


FAMILIES = ("9B", "9C", "15", "P1xP1")


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    n: int | None
    group: RootSystem
    gamma: Weight | None
    pic_generators: tuple[Weight, ...]
    treatment: Treatment
    name: str = ""
    model: tuple | None = None  # (kind, n) of a polynomial model, flag entries only

    @property
    def label(self) -> str:
        if self.family == "flag":
            return f"flag:{self.name or self.group.name}"
        return f"{self.family}({self.n})" if self.n is not None else self.family

    @property
    def pic_rank(self) -> int:
        return len(self.pic_generators)

    def to_config(self) -> dict:
        doc: dict = {"family": self.family}
        if self.family in ("9B", "9C"):
            doc["n"] = self.n
        if self.family == "flag":
            doc["group"] = self.group.to_config()
            doc["pic"] = [list(g) for g in self.pic_generators]
            if self.name:
                doc["name"] = self.name
            if self.model is not None:
                doc["model"] = {"kind": self.model[0], "n": self.model[1]}
        return doc


def _validate(entry: CatalogEntry) -> CatalogEntry:
    rs = entry.group
    for g in entry.pic_generators:
        if len(g) != rs.rank or not rootsys.is_dominant(rs, g) or not any(g):
            raise StructuralError(f"{entry.label}: Picard generator {g} is not a nonzero dominant weight")
    if entry.treatment is not Treatment.P1XP1 and bareiss_rank(entry.pic_generators) < entry.pic_rank:
        raise StructuralError(f"{entry.label}: Picard generators are linearly dependent")
    if entry.treatment is Treatment.INTERVAL_SPLITTING:
        if entry.gamma is None:
            raise StructuralError(f"{entry.label}: interval-splitting needs a spherical root")
        # integral by construction (tuple of ints); rational gammas are not representable
        positive = [x for x in entry.gamma if x > 0]
        if positive != [1]:
            raise StructuralError(
                f"{entry.label}: spherical root must pair positively with exactly one "
                f"simple coroot, with value 1; pairings are {entry.gamma}"
            )
    return entry


def _omega(rs: RootSystem, i: int) -> Weight:
    return rootsys.fundamental_weight(rs, i)


def case_9b(n: int) -> CatalogEntry:
    if n < 2:
        raise DomainError(f"family 9B needs n >= 2, got {n}")
    rs = rootsys.root_system("B", n)
    w1 = _omega(rs, 1)
    return _validate(CatalogEntry("9B", n, rs, w1, (w1,), Treatment.INTERVAL_SPLITTING))


def case_9c(n: int) -> CatalogEntry:
    if n < 2:
        raise DomainError(f"family 9C needs n >= 2, got {n}")
    rs = rootsys.root_system("C", n)
    w2 = _omega(rs, 2)
    return _validate(CatalogEntry("9C", n, rs, w2, (w2,), Treatment.INTERVAL_SPLITTING))


def case_15() -> CatalogEntry:
    rs = rootsys.root_system("G", 2)
    w1, w2 = _omega(rs, 1), _omega(rs, 2)
    gamma = tuple(b - a for a, b in zip(w1, w2))
    return _validate(CatalogEntry("15", None, rs, gamma, (w1, w2), Treatment.INTERVAL_SPLITTING))


def p1xp1() -> CatalogEntry:
    rs = rootsys.root_system("A", 1)
    w = _omega(rs, 1)
    return _validate(CatalogEntry("P1xP1", None, rs, None, (w, w), Treatment.P1XP1))


def flag_entry(group: RootSystem, pic: Sequence[Sequence[int]], name: str = "",
               model: tuple | None = None) -> CatalogEntry:
    gens = tuple(tuple(int(x) for x in g) for g in pic)
    if not gens:
        raise DomainError("flag entry needs at least one Picard generator")
    if model is not None:
        model = (str(model[0]), int(model[1]))
    return _validate(CatalogEntry("flag", None, group, None, gens, Treatment.BOREL_WEIL, name, model))


def get_entry(family, n: int | None = None, **data) -> CatalogEntry:
    """Look up a catalog family by name (``"9B"``, ``"9C"``, ``"15"``, ``"P1xP1"``, ``"flag"``)."""
    fam = str(family)
    key = fam.upper()
    if key in ("9B", "9C"):
        if n is None:
            raise DomainError(f"family {fam} needs n")
        return case_9b(int(n)) if key == "9B" else case_9c(int(n))
    if key == "15":
        return case_15()
    if key == "P1XP1":
        return p1xp1()
    if key == "FLAG":
        try:
            group = RootSystem.from_config(data["group"])
            pic = data["pic"]
        except KeyError as exc:
            raise DomainError(f"flag entry is missing {exc}") from None
        model = data.get("model")
        if isinstance(model, dict):
            model = (model["kind"], model["n"])
        return flag_entry(group, pic, data.get("name", ""), model)
    raise CatalogLookupError(f"unknown family {fam!r}; known: {', '.join(FAMILIES)}, flag")


def entry_from_config(doc: dict) -> CatalogEntry:
    doc = dict(doc)
    family = doc.pop("family", None)
    if family is None:
        raise CatalogLookupError("variety description has no 'family'")
    return get_entry(family, **doc)


def builtin_entries(n: int = 3) -> list[CatalogEntry]:
    return [case_9b(n), case_9c(n), case_15(), p1xp1()]


def nonnegative_coefficients(gens: Sequence[Weight], w: Sequence[int]) -> tuple[int, ...] | None:
    """Nonnegative integers ``c`` with ``sum c_i gens_i == w``, or ``None``.

    Independent generators are handled by an exact solve; dependent ones
    (the ``P1xP1`` pair) by bounded search, which terminates because every
    generator is a nonzero dominant weight.
    """
    w = tuple(int(x) for x in w)
    if not gens:
        return () if not any(w) else None
    if bareiss_rank(gens) == len(gens):
        cols = [[g[i] for g in gens] for i in range(len(w))]
        x = solve_rational(cols, w)
        if x is None or any(c.denominator != 1 or c < 0 for c in x):
            return None
        return tuple(int(c) for c in x)
    if any(c < 0 for c in w):
        return None
    bounds = [min(w[i] // g[i] for i in range(len(w)) if g[i] > 0) for g in gens]
    for coeffs in itertools.product(*(range(b + 1) for b in bounds)):
        if all(sum(c * g[i] for c, g in zip(coeffs, gens)) == w[i] for i in range(len(w))):
            return coeffs
    return None


def pic_plus_contains(entry: CatalogEntry, w: Sequence[int]) -> bool:
    """Is ``w`` in the monoid generated by the entry's Picard generators?"""
    if len(w) != entry.group.rank:
        return False
    return nonnegative_coefficients(entry.pic_generators, w) is not None
