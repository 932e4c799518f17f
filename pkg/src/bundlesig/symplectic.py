"""The symplectic representation of the mapping class group.

Homology basis (e_1..e_g, f_1..f_g); the form is ``omega(x, y) = x^T J y``
with ``J = [[0, -I], [I, 0]]`` (J e_k = f_k, J f_k = -e_k).
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Sequence

from . import linalg
from .linalg import Matrix
from .words import Curve, Letter, Mapping, Word, WordError

# Handedness switch.  psi(t_c) = transvection(c, TWIST_SIGN).  With -1 a right
# handed twist acts as x -> x - omega(x, c) c, the orientation for which two
# parallel nonseparating singular fibers have signature -1 and E(1) has -8.
TWIST_SIGN = -1


class SymplecticError(ValueError):
    pass


class GenusMismatch(SymplecticError):
    pass


class OddDimension(SymplecticError):
    pass


class NotSymplectic(SymplecticError):
    pass


@lru_cache(maxsize=None)
def form(g: int) -> Matrix:
    """The matrix J of the symplectic form in genus ``g``."""
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for k in range(g):
        rows[k][g + k] = -1
        rows[g + k][k] = 1
    return linalg.as_matrix(rows)


def omega(x: Sequence[int], y: Sequence[int]) -> int:
    """Intersection pairing x^T J y."""
    g = len(x) // 2
    return sum(y[g + k] * x[k] * -1 + y[k] * x[g + k] for k in range(g))


def j_apply(v: Sequence[int]) -> tuple:
    g = len(v) // 2
    return tuple(-v[g + k] for k in range(g)) + tuple(v[k] for k in range(g))


def transvection_vec(v: Sequence[int], e: int) -> Matrix:
    """Matrix of x -> x + e * omega(x, v) * v."""
    n = len(v)
    jv = j_apply(v)  # omega(x, v) = <x, Jv>
    return tuple(
        tuple((1 if i == j else 0) + e * v[i] * jv[j] for j in range(n)) for i in range(n)
    )


def transvection(c: Curve, e: int = 1, g: int | None = None) -> Matrix:
    if g is not None and c.genus != g:
        raise GenusMismatch(f"curve {c.name} lives in genus {c.genus}, not {g}")
    return transvection_vec(c.homology, e)


def matrix_power(m: Matrix, e: int) -> Matrix:
    n = len(m)
    base = m if e >= 0 else linalg.inverse(m)
    result = linalg.identity(n)
    for _ in range(abs(e)):
        result = linalg.mul(result, base)
    return result


def symplectic_inverse(m: Matrix) -> Matrix:
    """Inverse of a symplectic matrix: -J M^T J."""
    g = len(m) // 2
    J = form(g)
    return linalg.neg(linalg.mul(linalg.mul(J, linalg.transpose(m)), J))


def letter_matrix(let: Letter) -> Matrix:
    gen = let.generator
    if isinstance(gen, Curve):
        return transvection_vec(gen.homology, TWIST_SIGN * let.exponent)
    if isinstance(gen, Mapping):
        if let.exponent == 1:
            return gen.matrix
        if let.exponent == -1:
            return symplectic_inverse(gen.matrix)
        return matrix_power(gen.matrix, let.exponent)
    raise WordError(f"unknown generator {gen!r}")


def evaluate(w: Word, g: int | None = None) -> Matrix:
    """psi(w), multiplying letter matrices left to right."""
    wg = w.genus
    if g is None:
        if wg is None:
            raise GenusMismatch("genus of the empty word is ambiguous; pass g")
        g = wg
    elif wg is not None and wg != g:
        raise GenusMismatch(f"word lives in genus {wg}, not {g}")
    result = linalg.identity(2 * g)
    for let in w:
        result = linalg.mul(result, letter_matrix(let))
    return result


def is_symplectic(m: Matrix) -> bool:
    n = len(m)
    if n % 2:
        raise OddDimension("symplectic matrices have even size")
    J = form(n // 2)
    return linalg.mul(linalg.mul(linalg.transpose(m), J), m) == J


def check_symplectic(m: Matrix, name: str = "matrix") -> Matrix:
    if not is_symplectic(m):
        raise NotSymplectic(f"{name} does not preserve the symplectic form")
    if linalg.det(m) != 1:
        raise NotSymplectic(f"{name} has determinant {linalg.det(m)}")
    return m


def is_identity(m: Matrix) -> bool:
    return m == linalg.identity(len(m))


def apply(m: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(int(x) for x in linalg.mat_vec(m, v))


def content(v: Sequence[int]) -> int:
    c = 0
    for x in v:
        c = gcd(c, int(x))
    return c


def same_curve_class(u: Sequence[int], v: Sequence[int]) -> bool:
    """Unoriented equality of homology classes (twists ignore orientation)."""
    return tuple(u) == tuple(v) or tuple(u) == tuple(-x for x in v)


# ---------------------------------------------------------------------------
# Integral symplectic bases.  Used to realize a homeomorphism that is known
# only through the curves it must carry to other curves.


def solve_integer(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> tuple[int, ...] | None:
    """One integer solution x of ``rows @ x = rhs``, or None."""
    m = [list(map(int, r)) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    # Column operations on m, mirrored on u, bring m to lower echelon form.
    u = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def col_op(dst, src, f):
        for r in m:
            r[dst] += f * r[src]
        for r in u:
            r[dst] += f * r[src]

    def col_swap(a, b):
        for r in m:
            r[a], r[b] = r[b], r[a]
        for r in u:
            r[a], r[b] = r[b], r[a]

    pivot_cols = []
    col = 0
    for i in range(nrows):
        if col == ncols:
            break
        while True:
            nz = [j for j in range(col, ncols) if m[i][j] != 0]
            if not nz:
                break
            j = min(nz, key=lambda k: abs(m[i][k]))
            col_swap(col, j)
            done = True
            for k in range(col + 1, ncols):
                if m[i][k]:
                    col_op(k, col, -(m[i][k] // m[i][col]))
                    if m[i][k]:
                        done = False
            if done:
                break
        if any(m[i][j] for j in range(col, ncols)):
            pivot_cols.append((i, col))
            col += 1
        else:
            pivot_cols.append((i, None))
    # Forward substitution for y with m @ y = rhs.
    y = [0] * ncols
    for i in range(nrows):
        acc = sum(m[i][j] * y[j] for j in range(ncols))
        c = pivot_cols[i][1] if i < len(pivot_cols) else None
        if c is None or c >= ncols:
            if acc != rhs[i]:
                return None
            continue
        diff = rhs[i] - acc
        if diff % m[i][c]:
            return None
        y[c] = diff // m[i][c]
    return tuple(sum(u[r][j] * y[j] for j in range(ncols)) for r in range(ncols))


def complete_symplectic_basis(es: Sequence[Sequence[int]], fs: Sequence[Sequence[int]], g: int) -> Matrix:
    """Extend a partial symplectic basis to a full one.

    ``es`` and ``fs`` (with ``len(fs) <= len(es)``) must satisfy
    omega(e_i, e_j) = omega(f_i, f_j) = 0 and omega(e_i, f_j) = -delta_ij,
    the relations of the standard basis, and span a primitive sublattice.
    Returns the matrix whose columns are (e'_1..e'_g, f'_1..f'_g), a
    symplectic matrix with e'_i = es[i] and f'_j = fs[j].
    """
    es = [tuple(map(int, v)) for v in es]
    fs = [tuple(map(int, v)) for v in fs]
    n = 2 * g
    for i, a in enumerate(es + fs):
        if len(a) != n:
            raise GenusMismatch("basis vector of the wrong length")
    for i in range(len(es)):
        for j in range(len(es)):
            if omega(es[i], es[j]) != 0:
                raise SymplecticError("e vectors must be isotropic")
        for j in range(len(fs)):
            if omega(es[i], fs[j]) != (-1 if i == j else 0):
                raise SymplecticError("e/f vectors are not a partial symplectic basis")
    for i in range(len(fs)):
        for j in range(len(fs)):
            if omega(fs[i], fs[j]) != 0:
                raise SymplecticError("f vectors must be isotropic")
    if len(es) > g:
        raise SymplecticError("too many isotropic vectors")

    def constraints(target_index):
        rows, rhs = [], []
        for i, e in enumerate(es):
            rows.append(tuple(-x for x in j_apply(e)))  # omega(e, x) = -<Je, x>
            rhs.append(-1 if i == target_index else 0)
        for f in fs:
            rows.append(tuple(-x for x in j_apply(f)))
            rhs.append(0)
        return rows, rhs

    while len(fs) < g:
        if len(fs) == len(es):
            # Pick a fresh primitive vector orthogonal to everything so far.
            fresh = None
            for k in range(n):
                x = [1 if i == k else 0 for i in range(n)]
                for e, f in zip(es, fs):
                    a, b = omega(x, f), omega(x, e)
                    # x <- x + omega(x,f) e - omega(x,e) f kills both pairings.
                    x = [xi + a * ei - b * fi for xi, ei, fi in zip(x, e, f)]
                c = content(x)
                if c:
                    fresh = tuple(xi // c for xi in x)
                    break
            if fresh is None:
                raise SymplecticError("no room left for a new basis vector")
            es.append(fresh)
        rows, rhs = constraints(len(fs))
        sol = solve_integer(rows, rhs)
        if sol is None:
            raise SymplecticError("partial basis does not span a primitive sublattice")
        fs.append(sol)
    basis = linalg.transpose(tuple(es + fs))
    if not is_symplectic(basis):
        raise SymplecticError("completed basis is not symplectic")
    return basis


def map_with_constraints(
    pairs_src: Sequence[tuple[Sequence[int], Sequence[int] | None]],
    pairs_dst: Sequence[tuple[Sequence[int], Sequence[int] | None]],
    g: int,
) -> Matrix:
    """A symplectic matrix sending each source (e, f) role to its target.

    Each entry is ``(e, f)`` or ``(e, None)``; sources and targets must have
    the same shape.  Pairs with an ``f`` come first.
    """
    es_s = [p[0] for p in pairs_src]
    fs_s = [p[1] for p in pairs_src if p[1] is not None]
    es_t = [p[0] for p in pairs_dst]
    fs_t = [p[1] for p in pairs_dst if p[1] is not None]
    bs = complete_symplectic_basis(es_s, fs_s, g)
    bt = complete_symplectic_basis(es_t, fs_t, g)
    return linalg.mul(bt, symplectic_inverse(bs))
