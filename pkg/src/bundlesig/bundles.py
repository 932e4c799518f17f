"""Signatures of surface bundles and Lefschetz fibrations.

A bundle over a genus-h surface with r boundary circles is described by
words a_i, b_i (the images of the standard generators) and c_j (the
boundary loops) whose product ``prod [a_i, b_i] prod c_j`` is trivial.  Its
signature is evaluated with the three-sum formula in Meyer's cocycle on
kappa_i = [alpha_i, beta_i].
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .linalg import Matrix
from .meyer import cochain_c, tau
from .symplectic import GenusMismatch, evaluate, is_identity, symplectic_inverse
from .words import Curve, Word, commutator, conjugate, product, twist


class BundleError(ValueError):
    pass


class IdentityCheckFailed(BundleError):
    """The monodromy relator is not trivial under the symplectic representation."""


class NotARelator(BundleError):
    pass


class SeparatingVanishingCycle(BundleError):
    pass


class TwistMismatch(BundleError):
    pass


class NonpositiveDegree(BundleError):
    pass


class InvalidGenus(BundleError):
    pass


class ZeroSignature(BundleError):
    pass


class SubtractionInconsistent(ArithmeticError):
    """Novikov additivity and the direct evaluation disagree."""


def _comm(A: Matrix, B: Matrix) -> Matrix:
    return linalg.mul(linalg.mul(A, B), linalg.mul(symplectic_inverse(A), symplectic_inverse(B)))


def _genus_of(words: Sequence[Word], g: int | None) -> int:
    gs = {w.genus for w in words} - {None}
    if g is not None:
        gs.add(g)
    if len(gs) > 1:
        raise GenusMismatch(f"words live in genera {sorted(gs)}")
    if not gs:
        raise GenusMismatch("cannot infer the fiber genus; pass it explicitly")
    return gs.pop()


@dataclass(frozen=True)
class Term:
    """One summand ``sign * tau(left, right)`` of the signature formula."""

    sign: int
    left: str
    right: str
    value: int

    @property
    def contribution(self) -> int:
        return self.sign * self.value

    def __str__(self):
        op = "+" if self.sign > 0 else "-"
        return f"{op}tau({self.left}, {self.right}) = {self.contribution}"


@dataclass(frozen=True)
class MonodromyData:
    genus: int
    handles: tuple[tuple[Word, Word], ...] = ()
    boundary: tuple[Word, ...] = ()
    check: bool = field(default=True, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "handles", tuple((a, b) for a, b in self.handles))
        object.__setattr__(self, "boundary", tuple(self.boundary))
        words = [w for pair in self.handles for w in pair] + list(self.boundary)
        _genus_of(words, self.genus)
        if self.check and not is_identity(evaluate(self.relator(), self.genus)):
            raise IdentityCheckFailed("prod [a_i, b_i] prod c_j does not act trivially on homology")

    @property
    def base_genus(self) -> int:
        return len(self.handles)

    def relator(self) -> Word:
        return product([commutator(a, b) for a, b in self.handles] + list(self.boundary))

    def matrices(self):
        g = self.genus
        alphas = [evaluate(a, g) for a, _ in self.handles]
        betas = [evaluate(b, g) for _, b in self.handles]
        gammas = [evaluate(c, g) for c in self.boundary]
        return alphas, betas, gammas


@dataclass(frozen=True)
class LefschetzFibration:
    """Handles, right-handed vanishing twists, and their grouping into disks."""

    genus: int
    handles: tuple[tuple[Word, Word], ...]
    twists: tuple[Curve, ...]
    groups: tuple[int, ...] = ()
    check: bool = field(default=True, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "handles", tuple((a, b) for a, b in self.handles))
        object.__setattr__(self, "twists", tuple(self.twists))
        groups = tuple(self.groups) if self.groups else ((len(self.twists),) if self.twists else ())
        object.__setattr__(self, "groups", groups)
        if any(k <= 0 for k in groups) or sum(groups) != len(self.twists):
            raise BundleError(f"groups {list(groups)} do not partition {len(self.twists)} twists")
        for c in self.twists:
            if c.genus != self.genus:
                raise GenusMismatch(f"vanishing cycle {c.name} lives in genus {c.genus}")
        words = [w for pair in self.handles for w in pair]
        _genus_of(words, self.genus)
        if self.check and not is_identity(evaluate(self.relator(), self.genus)):
            raise IdentityCheckFailed("monodromy factorization does not act trivially on homology")

    @property
    def base_genus(self) -> int:
        return len(self.handles)

    def group_twists(self) -> list[tuple[Curve, ...]]:
        out, start = [], 0
        for k in self.groups:
            out.append(self.twists[start:start + k])
            start += k
        return out

    def group_words(self) -> list[Word]:
        return [product([twist(c) for c in grp]) for grp in self.group_twists()]

    def relator(self) -> Word:
        return product([commutator(a, b) for a, b in self.handles] + self.group_words())

    def complement(self) -> MonodromyData:
        """The bundle left after removing one disk around each group."""
        return MonodromyData(self.genus, self.handles, tuple(self.group_words()), check=False)


def pants_signature(A: Matrix, B: Matrix) -> int:
    if len(A) != len(B):
        raise GenusMismatch("matrices of different size")
    return -tau(A, B)


def signature_terms(m: MonodromyData) -> list[Term]:
    """The summands of the three-sum formula, in order."""
    alphas, betas, gammas = m.matrices()
    kappas = [_comm(a, b) for a, b in zip(alphas, betas)]
    h, r = len(kappas), len(gammas)
    terms = [Term(1, f"k{i}", f"b{i}", tau(k, b)) for i, (k, b) in enumerate(zip(kappas, betas), start=1)]
    if not kappas:
        acc, label = linalg.identity(2 * m.genus), ""
    else:
        acc, label = kappas[0], "k1"
    for i in range(1, h):
        terms.append(Term(-1, label, f"k{i + 1}", tau(acc, kappas[i])))
        acc, label = linalg.mul(acc, kappas[i]), f"{label}k{i + 1}"
    for j in range(r - 1):
        terms.append(Term(-1, label or "1", f"g{j + 1}", tau(acc, gammas[j])))
        acc, label = linalg.mul(acc, gammas[j]), f"{label}g{j + 1}"
    return terms


def bundle_signature(m: MonodromyData) -> int:
    return sum(t.contribution for t in signature_terms(m))


def signature_via_cochain(w: Word, g: int | None = None) -> int:
    """-c(w) for a word that is trivial under the symplectic representation."""
    if not w and g is None:
        return 0
    g = _genus_of([w], g)
    if not is_identity(evaluate(w, g)):
        raise NotARelator("word is not trivial under the symplectic representation")
    return -cochain_c(w, g)


def lf_complement_signature(lf: LefschetzFibration) -> int:
    return bundle_signature(lf.complement())


def neighborhood_signature(twists: Sequence[Curve], g: int) -> int:
    """Signature of a fibered disk containing the given nonseparating singular fibers.

    Each single singular fiber contributes nothing; what is left is the pants
    decomposition of the disk, i.e. -sum_j tau(T_1..T_{j-1}, T_j).
    """
    for c in twists:
        if c.separating:
            raise SeparatingVanishingCycle(f"vanishing cycle {c.name} is separating")
    acc = linalg.identity(2 * g)
    total = 0
    for c in twists:
        m = evaluate(twist(c), g)
        total -= tau(acc, m)
        acc = linalg.mul(acc, m)
    return total


def lf_signature(lf: LefschetzFibration) -> int:
    for c in lf.twists:
        if c.separating:
            raise SeparatingVanishingCycle(f"vanishing cycle {c.name} is separating")
    total = lf_complement_signature(lf)
    for grp in lf.group_twists():
        total += neighborhood_signature(grp, lf.genus)
    return total


def euler_characteristic(lf: LefschetzFibration) -> int:
    return (2 - 2 * lf.genus) * (2 - 2 * lf.base_genus) + len(lf.twists)


@dataclass(frozen=True)
class Piece:
    """A fibration to be cut out of group ``group`` (0-based), glued by ``gluing``."""

    group: int
    fibration: LefschetzFibration
    gluing: Word = Word()


@dataclass(frozen=True)
class Subtraction:
    bundle: MonodromyData
    signature: int
    complement_signature: int
    piece_signatures: tuple[int, ...]

    @property
    def fiber_genus(self) -> int:
        return self.bundle.genus

    @property
    def base_genus(self) -> int:
        return self.bundle.base_genus


def _transport(w: Word, gluing: Word) -> Word:
    return conjugate(w, gluing) if gluing else w


def subtract(x: LefschetzFibration, pieces: Sequence[Piece | tuple]) -> Subtraction:
    """Cut every group of ``x`` against a matching fibration and glue the complements.

    Each group's twist block is replaced by the inverse of the piece's
    commutator product, transported by the gluing word.
    """
    pieces = [p if isinstance(p, Piece) else Piece(*p) for p in pieces]
    g = x.genus
    by_group: dict[int, Piece] = {}
    for p in pieces:
        if p.fibration.genus != g:
            raise GenusMismatch(f"piece has fiber genus {p.fibration.genus}, expected {g}")
        if not 0 <= p.group < len(x.groups):
            raise TwistMismatch(f"no group {p.group} in a fibration with {len(x.groups)} groups")
        if p.group in by_group:
            raise TwistMismatch(f"group {p.group} is used twice")
        by_group[p.group] = p
    if len(by_group) != len(x.groups):
        missing = sorted(set(range(len(x.groups))) - set(by_group))
        raise TwistMismatch(f"groups {missing} are not matched by any piece")

    handles = list(x.handles)
    blocks = x.group_twists()
    for j in range(len(x.groups)):
        p = by_group[j]
        G = evaluate(p.gluing, g) if p.gluing else linalg.identity(2 * g)
        Ginv = symplectic_inverse(G)
        moved = Counter(tuple(linalg.mat_vec(Ginv, c.homology)) for c in p.fibration.twists)
        wanted = Counter(c.homology for c in blocks[j])
        if moved != wanted:
            raise TwistMismatch(f"piece for group {j} has different vanishing cycles")
        # [f, g]^-1 = [g, f], taken in reverse order
        for f_, g_ in reversed(p.fibration.handles):
            handles.append((_transport(g_, p.gluing), _transport(f_, p.gluing)))

    try:
        closed = MonodromyData(g, tuple(handles))
    except IdentityCheckFailed:
        raise TwistMismatch("spliced monodromy is not trivial; twist blocks do not agree") from None
    comp = lf_complement_signature(x)
    parts = tuple(-lf_complement_signature(by_group[j].fibration) for j in range(len(x.groups)))
    sigma = comp + sum(parts)
    direct = bundle_signature(closed)
    if direct != sigma:
        raise SubtractionInconsistent(f"additivity gives {sigma}, direct evaluation gives {direct}")
    return Subtraction(closed, sigma, comp, parts)


def pullback_cover(sigma: int, base_genus: int, degree: int) -> tuple[int, int]:
    """(signature, base genus) of the pullback to an unramified cover of the base."""
    if degree < 1:
        raise NonpositiveDegree("covering degree must be at least 1")
    return degree * sigma, degree * (base_genus - 1) + 1


@dataclass(frozen=True)
class BoundsReport:
    f: int
    n: int
    upper: int | None
    lower: Fraction
    asymptotic_upper: Fraction | None

    def __str__(self):
        up = "?" if self.upper is None else str(self.upper)
        return f"{self.lower} ≤ b({self.f},{self.n}) ≤ {up}"


def genus_bounds(f: int, n: int) -> BoundsReport:
    """Bounds on the least base genus of a genus-f bundle with signature 4n."""
    if f < 3:
        raise InvalidGenus("fiber genus must be at least 3")
    if n == 0:
        raise ZeroSignature("n must be nonzero")
    k = abs(n)
    slope = 5 if f >= 6 else 6 if f >= 5 else 7
    lower = Fraction(3 * k, f - 1) + 1
    asym = Fraction(14, f - 1) if f % 2 else Fraction(6, f - 2)
    if f % 3 == 0 and f >= 6:
        asym = min(asym, Fraction(9, f - 2))
    return BoundsReport(f, n, slope * k + 1, lower, asym)
