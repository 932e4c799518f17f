import random
from fractions import Fraction

import pytest

from bundlesig import linalg
from bundlesig.bundles import (
    IdentityCheckFailed,
    InvalidGenus,
    LefschetzFibration,
    MonodromyData,
    NonpositiveDegree,
    NotARelator,
    Piece,
    SeparatingVanishingCycle,
    TwistMismatch,
    ZeroSignature,
    bundle_signature,
    euler_characteristic,
    genus_bounds,
    lf_complement_signature,
    lf_signature,
    pants_signature,
    pullback_cover,
    signature_terms,
    signature_via_cochain,
    subtract,
)
from bundlesig.meyer import tau
from bundlesig.relations import load_construction
from bundlesig.symplectic import GenusMismatch, evaluate, symplectic_inverse
from bundlesig.words import IDENTITY, Curve, Word, commutator, inverse, mapping, twist

T = ((1, 1), (0, 1))
a1 = Curve("a", 1, (1, 0))


def _curves(g, rng, k=5):
    out = []
    while len(out) < k:
        v = tuple(rng.randint(-1, 1) for _ in range(2 * g))
        if any(v):
            out.append(Curve(f"c{len(out)}", g, v))
    return out


def _word(rng, curves, n):
    return Word.of(*[(rng.choice(curves), rng.choice((1, -1))) for _ in range(n)])


def test_pants_signature():
    assert pants_signature(linalg.identity(2), T) == 0
    assert pants_signature(T, symplectic_inverse(T)) == 0
    assert pants_signature(T, T) == 1


def test_empty_bundle():
    assert bundle_signature(MonodromyData(2)) == 0


def test_pants_as_bundle():
    rng = random.Random(1)
    cs = _curves(2, rng)
    for _ in range(10):
        x, y = _word(rng, cs, 3), _word(rng, cs, 3)
        m = MonodromyData(2, (), (x, y, inverse(x * y)))
        assert bundle_signature(m) == pants_signature(evaluate(x, 2), evaluate(y, 2))


def test_identity_check():
    with pytest.raises(IdentityCheckFailed):
        MonodromyData(1, (), (twist(a1),))
    with pytest.raises(IdentityCheckFailed):
        LefschetzFibration(1, (), (a1,))


def test_doubled_commutator_signature_is_zero():
    rng = random.Random(2)
    cs = _curves(2, rng)
    for _ in range(10):
        x, y = _word(rng, cs, 4), _word(rng, cs, 4)
        m = MonodromyData(2, ((x, y), (y, x)))
        assert bundle_signature(m) == 0
        assert signature_via_cochain(m.relator(), 2) == 0


def test_commuting_base_torus_has_zero_signature():
    x, y = twist(a1, 2), twist(Curve("a'", 1, (1, 0)), -3)
    m = MonodromyData(1, ((x, y),))
    terms = signature_terms(m)
    assert [t.value for t in terms] == [tau(linalg.identity(2), evaluate(y))] == [0]


def test_identity_boundary_words_do_not_contribute():
    rng = random.Random(4)
    cs = _curves(2, rng)
    x, y = _word(rng, cs, 3), _word(rng, cs, 3)
    base = MonodromyData(2, ((x, y),), (inverse(commutator(x, y)),))
    padded = MonodromyData(2, ((x, y),), (IDENTITY, inverse(commutator(x, y))))
    assert bundle_signature(base) == bundle_signature(padded)


def test_cochain_requires_relator():
    with pytest.raises(NotARelator):
        signature_via_cochain(twist(a1))
    assert signature_via_cochain(IDENTITY) == 0


def test_lefschetz_basics():
    trivial = LefschetzFibration(2, (), ())
    assert lf_signature(trivial) == 0
    assert euler_characteristic(trivial) == (2 - 4) * 2
    assert euler_characteristic(LefschetzFibration(3, tuple((IDENTITY, IDENTITY) for _ in range(8)), ())) == 56
    assert euler_characteristic(LefschetzFibration(1, (), ())) == 0


def test_euler_characteristic_formula():
    class Fake:
        genus, base_genus, twists = 1, 0, (None,) * 12

    assert euler_characteristic(Fake) == 12
    Fake.genus, Fake.twists = 0, ()
    assert euler_characteristic(Fake) == 4


def test_separating_vanishing_cycle_rejected():
    s = Curve.separating_curve("s", 1)
    lf = LefschetzFibration(1, (), (s,))
    with pytest.raises(SeparatingVanishingCycle):
        lf_signature(lf)


def test_shipped_small_fibrations():
    y1 = load_construction("P31a").fibration
    y2 = load_construction("P31b").fibration
    assert lf_complement_signature(y1) == -1
    assert lf_complement_signature(y2) == -1
    assert lf_signature(y1) == -2
    assert lf_signature(y2) == -4


def test_subtract_trivial():
    x = LefschetzFibration(2, ((twist(Curve("u", 2, (1, 0, 0, 0))), IDENTITY),), ())
    res = subtract(x, [])
    assert res.signature == bundle_signature(x.complement())
    assert res.base_genus == 1


def test_subtract_checks_pieces():
    x = load_construction("P35").fibration
    y1 = load_construction("P31a").fibration
    y2 = load_construction("P31b").fibration
    with pytest.raises(TwistMismatch):
        subtract(x, [Piece(0, y1), Piece(1, y2)])
    with pytest.raises(TwistMismatch):
        subtract(x, [Piece(0, y2)])
    y3 = load_construction("P33").fibration
    with pytest.raises(GenusMismatch):
        subtract(x, [Piece(0, y3), Piece(1, y1)])


def test_subtraction_results_and_euler_characteristic():
    x = load_construction("P35").fibration
    res = subtract(x, [Piece(0, load_construction("P31b").fibration), Piece(1, load_construction("P31a").fibration)])
    assert (res.fiber_genus, res.base_genus, res.signature) == (3, 8, 4)
    assert res.piece_signatures == (1, 1)
    closed = LefschetzFibration(3, res.bundle.handles, ())
    assert euler_characteristic(closed) == (2 - 6) * (2 - 16)


def test_gluing_word_is_required_when_classes_differ():
    z = load_construction("P36").fibration
    y3 = load_construction("P33")
    with pytest.raises(TwistMismatch):
        subtract(z, [Piece(0, y3.fibration)])
    res = subtract(z, [Piece(0, y3.fibration, mapping(y3.document.mappings["glue"]))])
    assert (res.fiber_genus, res.base_genus, res.signature) == (5, 7, 4)


def test_pullback_cover():
    assert pullback_cover(4, 8, 1) == (4, 8)
    for n in range(1, 6):
        assert pullback_cover(4, 8, n) == (4 * n, 7 * n + 1)
    assert pullback_cover(4, 6, 2) == (8, 11)
    with pytest.raises(NonpositiveDegree):
        pullback_cover(4, 8, 0)


def test_genus_bounds_examples():
    r = genus_bounds(3, 1)
    assert (r.upper, r.lower) == (8, Fraction(5, 2))
    assert str(r) == "5/2 ≤ b(3,1) ≤ 8"
    assert genus_bounds(5, 1).upper == 7
    assert genus_bounds(5, 1).lower <= 2
    assert genus_bounds(6, 1).upper == 6
    assert genus_bounds(3, -2).upper == 15
    assert genus_bounds(9, 1).asymptotic_upper == Fraction(9, 7)
    with pytest.raises(InvalidGenus):
        genus_bounds(2, 1)
    with pytest.raises(ZeroSignature):
        genus_bounds(4, 0)


def test_bounds_are_ordered():
    for f in range(3, 20):
        for n in (-3, -1, 1, 2, 7):
            r = genus_bounds(f, n)
            assert r.lower <= r.upper
