"""Root systems and integral weights in fundamental-weight coordinates.

Simple roots follow Bourbaki's numbering:

* ``A_n``: chain 1 - 2 - ... - n.
* ``B_n``: chain, ``alpha_n`` short.
* ``C_n``: chain, ``alpha_n`` long.
* ``D_n``: chain 1 - ... - (n-1), plus an edge (n-2) - n.
* ``E_n``: chain 1 - 3 - 4 - ... - n, node 2 attached to node 4.
* ``F_4``: ``alpha_1, alpha_2`` long, ``alpha_3, alpha_4`` short.
* ``G_2``: ``alpha_1`` short, ``alpha_2`` long.

The Cartan matrix is stored with ``cartan[i][j] = <alpha_j, alpha_i^vee>``,
so column ``j`` is ``alpha_j`` written in fundamental weights.  A weight is a
tuple of ints whose ``i``-th entry is ``<lambda, alpha_i^vee>``.  Public
functions take 1-based simple-root indices, matching the usual notation.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DimensionError, DomainError
from .linalg import inverse_rational

Weight = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_E_POSITIVE = {6: 36, 7: 63, 8: 120}


def classical_positive_root_count(kind: str, rank: int) -> int:
    n = rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E": _E_POSITIVE.get(n, -1),
        "F": 24,
        "G": 6,
    }[kind]


def cartan_matrix(kind: str, rank: int) -> np.ndarray:
    """Bourbaki Cartan matrix ``C[i, j] = <alpha_j, alpha_i^vee>``."""
    _check_type(kind, rank)
    n = rank
    a = 2 * np.eye(n, dtype=int)

    def bond(i, j, a_ij=-1, a_ji=-1):
        # 1-based node labels
        a[i - 1, j - 1] = a_ij
        a[j - 1, i - 1] = a_ji

    if kind in "ABC":
        for i in range(1, n):
            bond(i, i + 1)
        if kind == "B":
            bond(n - 1, n, -1, -2)
        elif kind == "C":
            bond(n - 1, n, -2, -1)
    elif kind == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif kind == "E":
        bond(1, 3)
        bond(2, 4)
        for i in range(3, n):
            bond(i, i + 1)
    elif kind == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)
        bond(3, 4)
    elif kind == "G":
        bond(1, 2, -3, -1)
    return a


def _check_type(kind: str, rank: int) -> None:
    if kind in _EXCEPTIONAL_RANKS:
        if rank not in _EXCEPTIONAL_RANKS[kind]:
            raise DomainError(f"no root system of type {kind}{rank}")
    elif kind in _MIN_RANK:
        if rank < _MIN_RANK[kind]:
            raise DomainError(f"type {kind} needs rank >= {_MIN_RANK[kind]}, got {rank}")
    else:
        raise DomainError(f"unknown Cartan type {kind!r}")


def _positive_roots_in_simple_coords(cartan: Sequence[Sequence[int]]) -> list[Weight]:
    # Grow by height; beta + alpha_i is a root iff the alpha_i-string through
    # beta extends upward (p = q - <beta, alpha_i^vee> > 0).
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    ordered = list(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pairing = sum(cartan[i][j] * beta[j] for j in range(n))
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) not in found:
                        break
                    q += 1
                if q - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        nxt.sort(key=lambda r: tuple(-x for x in r))
        ordered.extend(nxt)
        layer = nxt
    return ordered


@dataclass(frozen=True)
class RootSystem:
    """Cartan datum of a simple root system.

    Build one with ``RootSystem("B", 3)`` or :func:`root_system`.
    """

    kind: str
    rank: int
    cartan: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        c = cartan_matrix(self.kind, self.rank)
        object.__setattr__(self, "cartan", tuple(tuple(int(x) for x in row) for row in c))
        n_pos = len(self.positive_roots_simple)
        if n_pos != classical_positive_root_count(self.kind, self.rank):
            raise AssertionError(f"{self.name}: generated {n_pos} positive roots")

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"

    @classmethod
    def from_config(cls, doc: dict) -> "RootSystem":
        """From ``{"type": "B", "rank": 3}``."""
        return root_system(str(doc["type"]).upper(), int(doc["rank"]))

    def to_config(self) -> dict:
        return {"type": self.kind, "rank": self.rank}

    @functools.cached_property
    def positive_roots_simple(self) -> list[Weight]:
        """Positive roots as coefficient vectors over the simple roots."""
        return _positive_roots_in_simple_coords(self.cartan)

    @functools.cached_property
    def positive_coroots_simple(self) -> list[Weight]:
        """Positive coroots over the simple coroots (roots of the dual system)."""
        transpose = [list(col) for col in zip(*self.cartan)]
        return _positive_roots_in_simple_coords(transpose)

    @functools.cached_property
    def inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(row) for row in inverse_rational(self.cartan))

    @functools.cached_property
    def root_lengths(self) -> tuple[Fraction, ...]:
        """``(alpha_i, alpha_i) / 2``, normalised so the shortest root has 1."""
        n = self.rank
        d: list[Fraction | None] = [None] * n
        d[0] = Fraction(1)
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and self.cartan[i][j] != 0 and d[j] is None:
                    # d_i C[i][j] = d_j C[j][i]
                    d[j] = d[i] * self.cartan[i][j] / self.cartan[j][i]
                    stack.append(j)
        low = min(d)
        return tuple(x / low for x in d)


@functools.lru_cache(maxsize=None)
def root_system(kind: str, rank: int) -> RootSystem:
    return RootSystem(kind, rank)


def _check_len(rs: RootSystem, w: Sequence[int]) -> Weight:
    if len(w) != rs.rank:
        raise DimensionError(f"weight of length {len(w)} for rank-{rs.rank} system {rs.name}")
    return tuple(int(x) for x in w)


def _check_index(rs: RootSystem, i: int) -> int:
    if not 1 <= i <= rs.rank:
        raise IndexError(f"simple root index {i} out of range 1..{rs.rank}")
    return i - 1


def fundamental_weight(rs: RootSystem, i: int) -> Weight:
    k = _check_index(rs, i)
    return tuple(int(j == k) for j in range(rs.rank))


def simple_root(rs: RootSystem, i: int) -> Weight:
    """``alpha_i`` in fundamental-weight coordinates (column ``i`` of the Cartan matrix)."""
    k = _check_index(rs, i)
    return tuple(rs.cartan[j][k] for j in range(rs.rank))


def is_dominant(rs: RootSystem, w: Sequence[int]) -> bool:
    return all(x >= 0 for x in _check_len(rs, w))


def simple_reflection(rs: RootSystem, i: int, w: Sequence[int]) -> Weight:
    """``s_i(w) = w - <w, alpha_i^vee> alpha_i``."""
    w = _check_len(rs, w)
    k = _check_index(rs, i)
    return _reflect(rs, k, w)


def _reflect(rs: RootSystem, k: int, w: Weight) -> Weight:
    c = w[k]
    if c == 0:
        return w
    return tuple(w[j] - c * rs.cartan[j][k] for j in range(rs.rank))


def dominant_conjugate(rs: RootSystem, w: Sequence[int]) -> Weight:
    """The unique dominant weight in the Weyl orbit of ``w``."""
    w = _check_len(rs, w)
    while True:
        k = next((j for j, x in enumerate(w) if x < 0), None)
        if k is None:
            return w
        w = _reflect(rs, k, w)


def weight_star(rs: RootSystem, w: Sequence[int]) -> Weight:
    """``-w0(w)``, the highest weight of the dual module when ``w`` is dominant.

    ``w0`` is realised as the word of simple reflections that raises ``-rho``
    to dominance; applying that word to ``-w`` gives ``-w0(w)`` for every
    integral ``w``, so the map is additive and involutive on the whole lattice.
    On dominant input this coincides with raising ``-w`` directly.
    """
    w = _check_len(rs, w)
    images = _star_images(rs)
    return tuple(sum(c * img[j] for c, img in zip(w, images) if c) for j in range(rs.rank))


@functools.lru_cache(maxsize=None)
def _star_images(rs: RootSystem) -> tuple[Weight, ...]:
    # the map is linear, so the images of the fundamental weights determine it
    return tuple(_apply_w0_negated(rs, fundamental_weight(rs, i)) for i in range(1, rs.rank + 1))


def _apply_w0_negated(rs: RootSystem, w: Weight) -> Weight:
    word = _w0_word(rs)
    v = tuple(-x for x in w)
    for k in word:
        v = _reflect(rs, k, v)
    return v


@functools.lru_cache(maxsize=None)
def _w0_word(rs: RootSystem) -> tuple[int, ...]:
    word = []
    v = tuple(-1 for _ in range(rs.rank))
    while True:
        k = next((j for j, x in enumerate(v) if x < 0), None)
        if k is None:
            break
        word.append(k)
        v = _reflect(rs, k, v)
    if len(word) != len(rs.positive_roots_simple):
        raise AssertionError("raising word from -rho is not reduced")
    # word maps -rho to rho, hence equals w0
    return tuple(word)


def positive_roots(rs: RootSystem) -> list[Weight]:
    """All positive roots in fundamental-weight coordinates, ordered by height."""
    n = rs.rank
    return [
        tuple(sum(rs.cartan[i][j] * r[j] for j in range(n)) for i in range(n))
        for r in rs.positive_roots_simple
    ]


def to_simple_root_coords(rs: RootSystem, w: Sequence[int]) -> tuple[Fraction, ...]:
    """Express ``w`` as a rational combination of simple roots."""
    w = _check_len(rs, w)
    inv = rs.inverse_cartan
    return tuple(sum(inv[i][j] * w[j] for j in range(rs.rank)) for i in range(rs.rank))


def from_simple_root_coords(rs: RootSystem, r: Sequence) -> Weight:
    """Fundamental-weight coordinates of ``sum_j r_j alpha_j`` (must be integral)."""
    if len(r) != rs.rank:
        raise DimensionError(f"expected {rs.rank} coefficients, got {len(r)}")
    out = []
    for i in range(rs.rank):
        x = sum(Fraction(rs.cartan[i][j]) * r[j] for j in range(rs.rank))
        if Fraction(x).denominator != 1:
            raise DomainError("combination of simple roots is not an integral weight")
        out.append(int(x))
    return tuple(out)


def inner_product(rs: RootSystem, u: Sequence[int], v: Sequence[int]) -> Fraction:
    """W-invariant form with ``(alpha_i, alpha_i) = 2 d_i``, shortest root length 2."""
    u = _check_len(rs, u)
    r = to_simple_root_coords(rs, v)
    d = rs.root_lengths
    # (u, alpha_j) = d_j <u, alpha_j^vee>
    return sum(r[j] * d[j] * u[j] for j in range(rs.rank))


def weyl_dim(rs: RootSystem, w: Sequence[int]) -> int:
    """Dimension of the irreducible module of highest weight ``w``.

    Weyl's product over positive coroots, in exact integer arithmetic.
    """
    w = _check_len(rs, w)
    if any(x < 0 for x in w):
        raise DomainError(f"weyl_dim needs a dominant weight, got {w}")
    num = 1
    den = 1
    for c in rs.positive_coroots_simple:
        num *= sum((x + 1) * ci for x, ci in zip(w, c))
        den *= sum(c)
    q, r = divmod(num, den)
    assert r == 0
    return q
