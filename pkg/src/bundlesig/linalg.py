"""Exact rational linear algebra.

Matrices are tuples of row tuples whose entries are ``int`` or
``fractions.Fraction``.  Nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple, ...]


class LinAlgError(ValueError):
    pass


class DimensionMismatch(LinAlgError):
    pass


class Singular(LinAlgError):
    pass


class NonSymmetric(LinAlgError):
    pass


@dataclass(frozen=True)
class Inertia:
    positive: int
    negative: int
    zero: int

    @property
    def signature(self) -> int:
        return self.positive - self.negative

    @property
    def rank(self) -> int:
        return self.positive + self.negative


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    m = tuple(tuple(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise DimensionMismatch("ragged rows")
    return m


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def mul(a: Matrix, b: Matrix) -> Matrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise DimensionMismatch(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(m: Matrix, v: Sequence) -> tuple:
    if m and len(m[0]) != len(v):
        raise DimensionMismatch("matrix/vector size mismatch")
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def add(a: Matrix, b: Matrix) -> Matrix:
    if shape(a) != shape(b):
        raise DimensionMismatch("shapes differ")
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    if shape(a) != shape(b):
        raise DimensionMismatch("shapes differ")
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in r) for r in a)


def hstack(a: Matrix, b: Matrix) -> Matrix:
    if len(a) != len(b):
        raise DimensionMismatch("row counts differ")
    return tuple(r + s for r, s in zip(a, b))


def _canon(x):
    # Fractions with unit denominator collapse back to int.
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def canonical(m: Matrix) -> Matrix:
    return tuple(tuple(_canon(x) for x in r) for r in m)


def rref(m: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rows, pivot columns)."""
    rows = [[Fraction(x) for x in r] for r in m]
    nrows, ncols = shape(m)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix, cols: int | None = None) -> list[tuple]:
    """Basis of the right kernel ``{v : m v = 0}``.

    One vector per free column, normalized so that its first nonzero entry
    is 1.  ``cols`` gives the width when ``m`` has no rows.
    """
    ncols = shape(m)[1] if m else (cols or 0)
    reduced, pivots = rref(m) if m else ([], [])
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[free]
        lead = next(x for x in v if x != 0)
        basis.append(tuple(_canon(x / lead) for x in v))
    return basis


def inverse(m: Matrix) -> Matrix:
    n, c = shape(m)
    if n != c:
        raise DimensionMismatch("inverse of a non-square matrix")
    aug = hstack(m, identity(n))
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise Singular("matrix is singular")
    return canonical(tuple(tuple(r[n:]) for r in reduced))


def det(m: Matrix) -> Fraction:
    n, c = shape(m)
    if n != c:
        raise DimensionMismatch("determinant of a non-square matrix")
    rows = [[Fraction(x) for x in r] for r in m]
    d = Fraction(1)
    for col in range(n):
        p = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if p is None:
            return Fraction(0)
        if p != col:
            rows[col], rows[p] = rows[p], rows[col]
            d = -d
        d *= rows[col][col]
        for i in range(col + 1, n):
            f = rows[i][col] / rows[col][col]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return d


def is_symmetric(m: Matrix) -> bool:
    return all(m[i][j] == m[j][i] for i in range(len(m)) for j in range(i))


def inertia(g: Matrix) -> Inertia:
    """Inertia of a symmetric form by exact congruence (symmetric) elimination.

    Pivot on the first nonzero diagonal entry of the remaining block; when the
    whole remaining diagonal vanishes, split off a hyperbolic plane at the
    first nonzero off-diagonal entry.
    """
    n, c = shape(g)
    if n != c:
        raise DimensionMismatch("inertia of a non-square matrix")
    if not is_symmetric(g):
        raise NonSymmetric("form is not symmetric")
    a = [[Fraction(x) for x in r] for r in g]
    active = list(range(n))
    pos = negs = 0
    while active:
        k = next((i for i in active if a[i][i] != 0), None)
        if k is not None:
            pivot = a[k][k]
            if pivot > 0:
                pos += 1
            else:
                negs += 1
            active.remove(k)
            row_k = a[k]
            for i in active:
                f = row_k[i] / pivot
                if f:
                    ai = a[i]
                    for j in active:
                        ai[j] -= f * row_k[j]
            continue
        pair = next(((i, j) for i in active for j in active if j > i and a[i][j] != 0), None)
        if pair is None:
            break
        i, j = pair
        # Hyperbolic block [[0, b], [b, 0]]; Schur complement with its inverse.
        b = a[i][j]
        pos += 1
        negs += 1
        active.remove(i)
        active.remove(j)
        for s in active:
            for t in active:
                a[s][t] -= (a[s][i] * a[t][j] + a[s][j] * a[t][i]) / b
    return Inertia(pos, negs, n - pos - negs)


def signature(g: Matrix) -> int:
    return inertia(g).signature
