"""Meyer's signature cocycle and the 1-cochain it cobounds on free words."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm

from . import linalg
from .linalg import Matrix
from .symplectic import GenusMismatch, form, letter_matrix, symplectic_inverse
from .words import Word


class AsymmetricGram(ArithmeticError):
    """The restricted Meyer form came out non-symmetric (a convention bug)."""


def _integral(v) -> tuple[int, ...]:
    d = lcm(*(Fraction(x).denominator for x in v))
    return tuple(int(Fraction(x) * d) for x in v)


def meyer_space(A: Matrix, B: Matrix) -> list[tuple[int, ...]]:
    """Integral basis of V_{A,B} = {(x, y) : (A^-1 - I) x + (B - I) y = 0}."""
    n = len(A)
    I = linalg.identity(n)
    constraint = linalg.hstack(linalg.sub(symplectic_inverse(A), I), linalg.sub(B, I))
    return [_integral(v) for v in linalg.kernel_basis(constraint)]


def meyer_gram(A: Matrix, B: Matrix) -> Matrix:
    n = len(A)
    J = form(n // 2)
    JIB = linalg.mul(J, linalg.sub(linalg.identity(n), B))
    basis = meyer_space(A, B)
    sums = [tuple(v[i] + v[n + i] for i in range(n)) for v in basis]
    images = [linalg.mat_vec(JIB, v[n:]) for v in basis]
    gram = tuple(tuple(sum(a * b for a, b in zip(s, im)) for im in images) for s in sums)
    if not linalg.is_symmetric(gram):
        raise AsymmetricGram("Meyer form is not symmetric on V_{A,B}")
    return gram


@lru_cache(maxsize=1 << 16)
def tau(A: Matrix, B: Matrix) -> int:
    """Meyer's cocycle tau_g(A, B): the signature of <,>_{A,B} on V_{A,B}."""
    if len(A) != len(B) or len(A) % 2:
        raise GenusMismatch("tau needs two matrices of the same even size")
    return linalg.signature(meyer_gram(A, B))


def cochain_c(w: Word, g: int | None = None) -> int:
    """c(w) = sum_j tau(psi(x_1 ... x_{j-1}), psi(x_j)) over single letters."""
    wg = w.genus
    if g is None:
        g = wg
    elif wg is not None and wg != g:
        raise GenusMismatch(f"word lives in genus {wg}, not {g}")
    if g is None:
        return 0
    prefix = linalg.identity(2 * g)
    total = 0
    for let in w.expanded():
        m = letter_matrix(let)
        total += tau(prefix, m)
        prefix = linalg.mul(prefix, m)
    return total
