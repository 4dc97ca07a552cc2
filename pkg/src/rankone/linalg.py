"""Exact linear algebra over the integers and rationals.

Everything here works on plain Python ints / Fractions so results are exact
regardless of entry size.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np


def _as_int_rows(matrix) -> list[list[int]]:
    if isinstance(matrix, np.ndarray):
        if matrix.ndim != 2:
            raise ValueError("expected a 2-d array")
        return [[int(x) for x in row] for row in matrix.tolist()]
    return [[int(x) for x in row] for row in matrix]


def bareiss_rank(matrix) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Every intermediate entry is a minor of the input, so the divisions by the
    previous pivot are exact and no rationals are ever formed.
    """
    rows = _as_int_rows(matrix)
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    prev = 1
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        prow = rows[rank]
        for r in range(rank + 1, n_rows):
            row = rows[r]
            f = row[col]
            for c in range(col + 1, n_cols):
                q, rem = divmod(p * row[c] - f * prow[c], prev)
                assert rem == 0, "Bareiss division must be exact"
                row[c] = q
            row[col] = 0
        prev = p
        rank += 1
    return rank


def sparse_rank(matrix) -> int:
    """Rank of an integer matrix by fraction-free elimination on sparse columns.

    Columns are reduced one at a time against an echelon set of pivots using
    only integer cross-multiplication, each result divided by the gcd of its
    entries.  Duplicate columns are dropped first and the scan stops as soon
    as the rank reaches the number of rows.  Suited to the very sparse
    multiplication matrices, where dense Bareiss spends its time on zeros.
    """
    if isinstance(matrix, np.ndarray):
        if matrix.ndim != 2:
            raise ValueError("expected a 2-d array")
        n_rows = matrix.shape[0]
        cols = matrix.T.tolist()
    else:
        rows = _as_int_rows(matrix)
        n_rows = len(rows)
        cols = [list(c) for c in zip(*rows)]
    seen = set()
    pivots: dict[int, dict[int, int]] = {}
    for col in cols:
        vec = {i: int(x) for i, x in enumerate(col) if x}
        key = tuple(sorted(vec.items()))
        if not vec or key in seen:
            continue
        seen.add(key)
        while vec:
            lead = min(vec)
            prow = pivots.get(lead)
            if prow is None:
                g = 0
                for x in vec.values():
                    g = gcd(g, x)
                pivots[lead] = {i: x // g for i, x in vec.items()}
                break
            p, f = prow[lead], vec[lead]
            out = {i: p * x for i, x in vec.items()}
            for i, y in prow.items():
                v = out.get(i, 0) - f * y
                if v:
                    out[i] = v
                else:
                    out.pop(i, None)
            g = 0
            for x in out.values():
                g = gcd(g, x)
            vec = {i: x // g for i, x in out.items()} if g > 1 else out
        if len(pivots) == n_rows:
            break
    return len(pivots)


def solve_rational(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Solve ``a x = b`` exactly; ``None`` if inconsistent.

    For underdetermined systems the free variables are set to zero.
    """
    n_rows = len(a)
    n_cols = len(a[0]) if n_rows else 0
    if len(b) != n_rows:
        raise ValueError("right-hand side has the wrong length")
    m = [[Fraction(x) for x in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    if any(m[i][n_cols] != 0 for i in range(r, n_rows)):
        return None
    x = [Fraction(0)] * n_cols
    for i, c in enumerate(pivots):
        x[c] = m[i][n_cols]
    return x


def inverse_rational(a: Sequence[Sequence]) -> list[list[Fraction]]:
    """Inverse of a square integer matrix, as Fractions."""
    n = len(a)
    if bareiss_rank(a) < n:
        raise ZeroDivisionError("matrix is singular")
    cols = [solve_rational(a, [int(i == j) for i in range(n)]) for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]
