"""Explicit graded coordinate rings used as brute-force oracles.

Three models, all with monomial bases written as exponent tuples so that
multiplication is exponent addition:

* ``projective-space(n)``: ``k[x_0..x_n]``, degree ``d``.
* ``p1xp1``: ``k[X,Y] (x) k[X',Y']``, bidegree ``(d1, d2)``; exponents are
  ``(a, d1 - a, b, d2 - b)``.
* ``quadric(n)``: ``k[x_0..x_n] / (x_0^2 - x_1^2 - ... - x_n^2)``, with the
  normal form keeping the exponent of ``x_0`` at most 1.

Surjectivity of ``R_d (x) R_e -> R_{d+e}`` is decided by the exact rank of the
multiplication matrix.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from .errors import DomainError
from .linalg import sparse_rank

KINDS = ("projective-space", "p1xp1", "quadric")


@dataclass(frozen=True)
class GradedModel:
    kind: str
    n: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown model kind {self.kind!r}")
        if self.kind == "p1xp1":
            object.__setattr__(self, "n", 1)
        elif self.n < 1:
            raise DomainError(f"{self.kind} needs n >= 1")

    @property
    def label(self) -> str:
        return "P1xP1" if self.kind == "p1xp1" else f"{self.kind}({self.n})"

    def basis(self, d) -> list[tuple[int, ...]]:
        return list(_basis(self, _degree(self, d)))

    def dim(self, d) -> int:
        """Closed-form dimension of the degree-``d`` piece."""
        d = _degree(self, d)
        if self.kind == "p1xp1":
            return (d[0] + 1) * (d[1] + 1)
        n = self.n
        if self.kind == "projective-space":
            return comb(n + d, d)
        return comb(n + d, d) - (comb(n + d - 2, d - 2) if d >= 2 else 0)

    def add_degrees(self, d, e):
        d, e = _degree(self, d), _degree(self, e)
        if self.kind == "p1xp1":
            return (d[0] + e[0], d[1] + e[1])
        return d + e


def projective_space(n: int) -> GradedModel:
    return GradedModel("projective-space", n)


def p1xp1_model() -> GradedModel:
    return GradedModel("p1xp1")


def quadric(n: int) -> GradedModel:
    return GradedModel("quadric", n)


def _degree(model: GradedModel, d):
    if model.kind == "p1xp1":
        d1, d2 = (int(x) for x in d)
        if d1 < 0 or d2 < 0:
            raise DomainError(f"negative bidegree {d}")
        return (d1, d2)
    d = int(d)
    if d < 0:
        raise DomainError(f"negative degree {d}")
    return d


def _compositions(total: int, parts: int):
    # exponent vectors of length `parts` summing to `total`, lex-descending
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


@lru_cache(maxsize=None)
def _basis(model: GradedModel, d) -> tuple[tuple[int, ...], ...]:
    if model.kind == "p1xp1":
        d1, d2 = d
        return tuple((a, d1 - a, b, d2 - b) for a in range(d1, -1, -1) for b in range(d2, -1, -1))
    monos = _compositions(d, model.n + 1)
    if model.kind == "quadric":
        return tuple(m for m in monos if m[0] <= 1)
    return tuple(monos)


def normal_form(model: GradedModel, poly: dict) -> dict:
    """Rewrite ``x_0^2 -> x_1^2 + ... + x_n^2`` until every ``x_0`` exponent is <= 1.

    ``poly`` maps exponent tuples to integer coefficients; zero terms are dropped.
    Identity on models other than the quadric.
    """
    if model.kind != "quadric":
        return {m: c for m, c in poly.items() if c}
    out: dict = {}
    todo = list(poly.items())
    while todo:
        mono, c = todo.pop()
        if not c:
            continue
        if mono[0] <= 1:
            out[mono] = out.get(mono, 0) + c
            continue
        for i in range(1, model.n + 1):
            new = list(mono)
            new[0] -= 2
            new[i] += 2
            todo.append((tuple(new), c))
    return {m: c for m, c in out.items() if c}


def multiplication_matrix(model: GradedModel, d, e) -> np.ndarray:
    """Matrix of ``R_d (x) R_e -> R_{d+e}``.

    Column ``i * dim(e) + j`` is the normal form of ``basis(d)[i] * basis(e)[j]``
    in the basis of degree ``d + e``.
    """
    left, right = model.basis(d), model.basis(e)
    target = model.basis(model.add_degrees(d, e))
    index = {m: k for k, m in enumerate(target)}
    mat = np.zeros((len(target), len(left) * len(right)), dtype=np.int64)
    for i, a in enumerate(left):
        for j, b in enumerate(right):
            prod = tuple(x + y for x, y in zip(a, b))
            for mono, c in normal_form(model, {prod: 1}).items():
                mat[index[mono], i * len(right) + j] += c
    return mat


@dataclass(frozen=True)
class OracleResult:
    model: str
    d: object
    e: object
    rows: int
    cols: int
    rank: int

    @property
    def target_dim(self) -> int:
        return self.rows

    @property
    def surjective(self) -> bool:
        return self.rank == self.rows

    def to_dict(self) -> dict:
        deg = lambda x: list(x) if isinstance(x, tuple) else x
        return {
            "model": self.model,
            "d": deg(self.d),
            "e": deg(self.e),
            "rows": self.rows,
            "cols": self.cols,
            "rank": self.rank,
            "target_dim": self.target_dim,
            "surjective": self.surjective,
        }


def oracle_check(model: GradedModel, d, e) -> OracleResult:
    d, e = _degree(model, d), _degree(model, e)
    mat = multiplication_matrix(model, d, e)
    return OracleResult(model.label, d, e, mat.shape[0], mat.shape[1], sparse_rank(mat))


def oracle_surjective(model: GradedModel, d, e) -> bool:
    return oracle_check(model, d, e).surjective


def model_from_config(doc: dict) -> GradedModel:
    kind = doc["kind"]
    return p1xp1_model() if kind == "p1xp1" else GradedModel(kind, int(doc.get("n", 1)))


def degree_grid(model: GradedModel, top: int):
    """All degrees (or bidegrees) with entries in ``0..top``."""
    if model.kind == "p1xp1":
        return list(itertools.product(range(top + 1), repeat=2))
    return list(range(top + 1))
