"""Exact Gaussian elimination over Q.

Matrices are lists of rows of Fractions. Nothing here mutates its input.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vector = tuple
Matrix = Sequence[Sequence[Fraction]]


def rref(rows: Matrix, ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    m = [[Fraction(c) for c in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        row = [x * inv for x in m[r]]
        m[r] = row
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], row)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Matrix) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Matrix, ncols: int) -> list[list[Fraction]]:
    """Basis of {v : rows @ v = 0}, in reduced echelon form."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return rref(basis, ncols)[0] if basis else []


def left_nullspace(rows: Matrix) -> list[list[Fraction]]:
    """Basis of {y : y @ rows = 0}."""
    if not rows:
        return []
    ncols = len(rows[0])
    cols = [[rows[i][j] for i in range(len(rows))] for j in range(ncols)]
    return nullspace(cols, len(rows))


def det(rows: Matrix) -> Fraction:
    m = [[Fraction(c) for c in r] for r in rows]
    n = len(m)
    sign = 1
    acc = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        p = m[c][c]
        acc *= p
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / p
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return sign * acc


def solve(rows: Matrix, rhs: Sequence[Fraction]) -> list[Fraction] | None:
    """One solution of rows @ v = rhs (free variables set to 0), or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [Fraction(b)] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    v = [Fraction(0)] * ncols
    for row, pc in zip(red, pivots):
        v[pc] = row[ncols]
    return v


def span_contains(basis_rref: Matrix, v: Sequence[Fraction]) -> bool:
    """Membership test against a basis already in reduced echelon form."""
    w = list(v)
    for row in basis_rref:
        pc = next(i for i, c in enumerate(row) if c != 0)
        if w[pc] != 0:
            f = w[pc]
            w = [a - f * b for a, b in zip(w, row)]
    return all(c == 0 for c in w)


def intersect(a: Matrix, b: Matrix, ncols: int) -> list[list[Fraction]]:
    """rref basis of span(a) ∩ span(b)."""
    if not a or not b:
        return []
    stacked = [list(r) for r in a] + [[-c for c in r] for r in b]
    ys = left_nullspace(stacked)
    vecs = []
    for y in ys:
        vecs.append([sum((y[i] * a[i][j] for i in range(len(a))), Fraction(0)) for j in range(ncols)])
    return rref(vecs, ncols)[0] if vecs else []
