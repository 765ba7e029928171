import random

import pytest

from isoclass.curve import (
    CapacityError,
    Curve,
    GroupStructure,
    SingularCurveError,
    curve_from_ints,
)
from isoclass.enumeration import count_all_curves, group_structure, lpower_torsion
from isoclass.field import ExtField, PrimeField
from isoclass.quadorder import frobenius_from_trace


def test_rejects_singular_and_small_char():
    with pytest.raises(SingularCurveError):
        Curve(PrimeField(5), 0, 0)
    with pytest.raises(SingularCurveError):
        Curve(PrimeField(7), -3, 2)  # 4*27 + 27*4 = 0 mod 7? discriminant zero: x^3-3x+2=(x-1)^2(x+2)
    with pytest.raises(ValueError):
        Curve(PrimeField(3), 1, 1)
    with pytest.raises(ValueError):
        Curve(PrimeField(2), 1, 1)


def test_group_law_known_doubling():
    e = Curve(PrimeField(5), 1, 1)
    # 2*(0,1): lambda = 1/2 = 3, x3 = 9 - 0 = 4, y3 = 3*(0-4) - 1 = -13 = 2
    assert e.add((0, 1), (0, 1)) == (4, 2)
    assert e.scalar_mul(2, (0, 1)) == (4, 2)


def test_group_law_axioms_random():
    rng = random.Random(7)
    e = Curve(PrimeField(13), 2, 3)
    pts = [None] + list(e.points())
    for _ in range(200):
        p1, p2, p3 = (rng.choice(pts) for _ in range(3))
        assert e.add(p1, p2) == e.add(p2, p1)
        assert e.add(e.add(p1, p2), p3) == e.add(p1, e.add(p2, p3))
        assert e.add(p1, None) == p1
        assert e.add(p1, e.neg(p1)) is None


def test_scalar_mul_matches_repeated_add():
    e = Curve(PrimeField(11), 3, 5)
    for pt in list(e.points())[:5]:
        acc = None
        for n in range(12):
            assert e.scalar_mul(n, pt) == acc
            acc = e.add(acc, pt)
        assert e.scalar_mul(-3, pt) == e.neg(e.scalar_mul(3, pt))


def test_contains_and_add_validation():
    e = Curve(PrimeField(5), 1, 1)
    assert e.contains((0, 1))
    assert not e.contains((0, 2))
    with pytest.raises(ValueError):
        e.add((0, 2), None)


def test_count_points_small_fields():
    # brute force against the definition for every curve over tiny fields
    for p in (5, 7, 11, 13):
        f = PrimeField(p)
        table = count_all_curves(p)
        for a in range(p):
            for b in range(p):
                if (4 * a**3 + 27 * b**2) % p == 0:
                    continue
                e = Curve(f, a, b)
                n = 1 + sum(
                    1
                    for x in range(p)
                    for y in range(p)
                    if (y * y - x**3 - a * x - b) % p == 0
                )
                assert e.count_points() == n == table[a, b]


def test_count_points_examples():
    assert Curve(PrimeField(3329), 49, 0).count_points() == 3280
    assert Curve(PrimeField(3329), 99, 0).count_points() == 3226
    assert Curve(PrimeField(1031), 982, 824).count_points() == 1052
    assert Curve(PrimeField(5), 1, 1).count_points() == 9


def test_hasse_bound_scan():
    for p in (17, 19, 23):
        for a in range(p):
            for b in range(p):
                if (4 * a**3 + 27 * b**2) % p == 0:
                    continue
                t = Curve(PrimeField(p), a, b).trace()
                assert t * t <= 4 * p


def test_trace_and_ordinary():
    e = Curve(PrimeField(5), 1, 1)
    assert e.trace() == -3
    assert e.is_ordinary()
    assert not Curve(PrimeField(5), 0, 1).is_ordinary()  # supersingular, t = 0


def test_group_structure_known():
    assert Curve(PrimeField(3329), 49, 0).group_structure_bruteforce() == GroupStructure(4, 820)
    assert Curve(PrimeField(5), 1, 1).group_structure_bruteforce() == GroupStructure(1, 9)


def test_group_structure_invariants_scan():
    for p in (11, 13, 17):
        f = PrimeField(p)
        for a in range(p):
            for b in range(1, p, 3):
                if (4 * a**3 + 27 * b**2) % p == 0:
                    continue
                e = Curve(f, a, b)
                s = e.group_structure_bruteforce()
                assert s.order == e.count_points()
                assert s.n2 % s.n1 == 0
                assert (p - 1) % s.n1 == 0  # n1 | q - 1 by the Weil pairing


def test_group_structure_extension_field():
    base = PrimeField(5)
    e = Curve(base, 1, 1)
    f2 = ExtField(base, 2)
    lifted = e.lift(f2)
    s = lifted.group_structure_bruteforce()
    assert s == GroupStructure(3, 9)
    assert s.order == 27
    # exponent check: n2 kills every point
    for pt in lifted.points():
        assert lifted.scalar_mul(s.n2, pt) is None
    assert (f2.size - 1) % s.n1 == 0


def test_structure_matches_exhaustive_exponent():
    # n1*n2 decomposition implies number of l-torsion points is correct
    base = PrimeField(13)
    e = Curve(base, 2, 3)
    s = e.group_structure_bruteforce()
    for l in (2, 3, 5, 7):
        tor = sum(1 for pt in e.points() if e.scalar_mul(l, pt) is None) + 1
        from isoclass.quadorder import vp

        want = l ** (min(vp(s.n1, l), 1) + min(vp(s.n2, l), 1)) if s.order % l == 0 else 1
        assert tor == want


def test_lpower_torsion():
    base = PrimeField(13)
    e = Curve(base, 2, 3)
    s = e.group_structure_bruteforce()
    for l in (2, 3):
        tor = lpower_torsion(e, l, 2)
        for j in (1, 2):
            for pt in tor[j]:
                assert e.contains(pt)
                assert e.scalar_mul(l**j, pt) is None
        exact = [pt for pt in tor[1] if pt is not None]
        naive = [pt for pt in e.points() if e.scalar_mul(l, pt) is None]
        assert sorted(exact) == sorted(naive)


def test_capacity_error():
    e = Curve(PrimeField(3329), 49, 0)
    with pytest.raises(CapacityError):
        e.group_structure_bruteforce(bound=100)


def test_count_points_rejects_extension():
    f2 = ExtField(PrimeField(5), 2)
    e = Curve(PrimeField(5), 1, 1).lift(f2)
    with pytest.raises(TypeError):
        e.count_points()


def test_curve_from_ints():
    e = curve_from_ints(5, 6, -4)
    assert (e.a, e.b) == (1, 1)


def test_predicted_vs_enumerated_structures():
    # tau-based prediction against enumeration for a couple of classes
    from isoclass.isomorphy import predicted_group_structure
    from isoclass.endoring import conductor

    for q, coeffs in [(37, (1, 4)), (41, (2, 5)), (43, (3, 7))]:
        e = Curve(PrimeField(q), *coeffs)
        t = e.trace()
        if t % q == 0:
            continue
        frob = frobenius_from_trace(q, t)
        g = conductor(e, frob)
        for k in (1, 2, 3):
            if q**k > 10**5:
                break
            ctx = PrimeField(q) if k == 1 else ExtField(PrimeField(q), k)
            ek = e if k == 1 else e.lift(ctx)
            assert ek.group_structure_bruteforce(bound=10**5 + 1) == predicted_group_structure(frob, g, k)
