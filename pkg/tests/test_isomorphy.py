import itertools
import math
import random

import pytest

from isoclass.isomorphy import (
    EVEN_GENERIC,
    EVEN_NASTY,
    ODD_P,
    ComparisonInput,
    gcd_criterion,
    iso_pattern,
    nasty_reduce,
    not_iso_at_prime,
    pattern_eval,
    predicted_group_structure,
    prime_set,
    valuation_criterion,
)
from isoclass.quadorder import frobenius_from_trace, vp

from conftest import EXAMPLE1, EXAMPLE2, EXAMPLE3


def test_comparison_input_validation():
    frob = EXAMPLE1.frob
    with pytest.raises(ValueError):
        ComparisonInput(frob, 0, 1)
    with pytest.raises(ValueError):
        ComparisonInput(frob, 3, 1)  # 3 does not divide b = 52
    ComparisonInput(frob, 52, 26)


def test_gcd_criterion_direct():
    # g = g' always isomorphic; and k=1 groups match iff gcd's agree
    frob = EXAMPLE1.frob
    inp = ComparisonInput(frob, 13, 13)
    assert all(gcd_criterion(inp, k) for k in range(1, 30))
    inp = ComparisonInput(frob, 1, 13)
    assert gcd_criterion(inp, 1)       # gcd(24,52)=4 = gcd(24,4)
    assert not gcd_criterion(inp, 2)


def test_prime_set_example1():
    frob = EXAMPLE1.frob
    # g=1 vs g'=13: P = {13}, s = 1, e = ord(25 mod 13) = 2, strict
    (pa,) = prime_set(ComparisonInput(frob, 1, 13))
    assert (pa.p, pa.s, pa.e, pa.case) == (13, 1, 2, ODD_P)
    assert pa.strict  # v_13(25^2 - 1) = 1 > v_13(52) - 1 = 0
    # g=1 vs g'=4: P = {2}, s = 2, e = ord(25 mod 4) = 1, v_2(24)=3 > v_2(52)-2=0
    (pa,) = prime_set(ComparisonInput(frob, 1, 4))
    assert (pa.p, pa.s, pa.e, pa.case) == (2, 2, 1, EVEN_GENERIC)
    assert pa.strict
    # g=2 vs g'=4 also only p=2 with s=2
    (pa,) = prime_set(ComparisonInput(frob, 2, 4))
    assert (pa.p, pa.s) == (2, 2)
    # equal valuations drop out: g=2 vs g'=26 leaves only p=13
    (pa,) = prime_set(ComparisonInput(frob, 2, 26))
    assert pa.p == 13


def test_prime_set_example2():
    frob = EXAMPLE2.frob
    (pa,) = prime_set(ComparisonInput(frob, 1, 25))
    assert (pa.p, pa.s, pa.e, pa.case) == (5, 2, 4, ODD_P)
    assert pa.strict  # v_5(52^4 - 1) = 1 > v_5(25) - 2 = 0
    (pa,) = prime_set(ComparisonInput(frob, 1, 5))
    assert (pa.p, pa.s, pa.e) == (5, 1, 4)
    assert not pa.strict  # v_5(52^4 - 1) = 1 <= v_5(25) - 1 = 1


def test_prime_set_example3_nasty():
    frob = EXAMPLE3.frob  # b = 14, v_2(b) = 1
    pas = prime_set(ComparisonInput(frob, 1, 14))
    assert [pa.p for pa in pas] == [2, 7]
    p2, p7 = pas
    assert p2.case == EVEN_NASTY and p2.s == 1
    assert (p7.case, p7.s, p7.e) == (ODD_P, 1, 3)
    assert p7.strict  # v_7((-17)^3 - 1) = 1 > v_7(14) - 1 = 0
    # g=7 vs g'=14: only p = 2 remains
    (pa,) = prime_set(ComparisonInput(frob, 7, 14))
    assert pa.case == EVEN_NASTY


def test_nasty_reduce():
    red = nasty_reduce(EXAMPLE3.frob)
    assert (red.a, red.b) == (-691, -280)
    assert red.q == 1031**2
    assert red.t == EXAMPLE3.frob.elem.trace() ** 2 - 2 * 1031
    assert vp(red.b, 2) >= 2
    assert red.a % 2 == 1


def test_not_iso_at_prime_nasty():
    frob = EXAMPLE3.frob
    (pa,) = prime_set(ComparisonInput(frob, 7, 14))
    # v_2(b) = 1 = s: every odd k blocks
    for k in (1, 3, 5, 7, 9):
        assert not_iso_at_prime(frob, pa, k)
    # even k: reduced data has v_2(B) - s = 2 >= v_2(A - 1); never blocks
    for k in (2, 4, 6, 8, 10, 12):
        assert not not_iso_at_prime(frob, pa, k)


def test_iso_pattern_example1():
    frob = EXAMPLE1.frob
    gs = EXAMPLE1.conductors
    odd_pairs = {(0, 2), (1, 5), (3, 4)}
    for i, j in itertools.combinations(range(6), 2):
        pat = iso_pattern(ComparisonInput(frob, gs[i], gs[j]))
        if (i, j) in odd_pairs:
            assert pat.modulus == 2 and pat.allowed == frozenset({1})
        else:
            assert pat.allowed == frozenset()


def test_iso_pattern_example2():
    frob = EXAMPLE2.frob
    pat = iso_pattern(ComparisonInput(frob, 1, 25))
    assert pat.modulus == 4 and pat.allowed == frozenset({1, 2, 3})
    pat = iso_pattern(ComparisonInput(frob, 25, 5))
    assert pat.modulus == 4 and pat.allowed == frozenset({1, 2, 3})
    pat = iso_pattern(ComparisonInput(frob, 1, 5))
    assert pat.allowed == frozenset(range(pat.modulus))


def test_iso_pattern_example3():
    frob = EXAMPLE3.frob
    want = {
        (7, 1): (6, {1, 2, 4, 5}),
        (7, 14): (2, {0}),
        (7, 2): (6, {2, 4}),
        (1, 14): (6, {2, 4}),
        (1, 2): (2, {0}),
        (14, 2): (6, {1, 2, 4, 5}),
    }
    for (g, g2), (mod, allowed) in want.items():
        pat = iso_pattern(ComparisonInput(frob, g, g2))
        assert (pat.modulus, pat.allowed) == (mod, frozenset(allowed)), (g, g2)


def test_iso_pattern_symmetric():
    for fx in (EXAMPLE1, EXAMPLE2, EXAMPLE3):
        for g, g2 in itertools.combinations(fx.conductors, 2):
            a = iso_pattern(ComparisonInput(fx.frob, g, g2))
            b = iso_pattern(ComparisonInput(fx.frob, g2, g))
            assert a == b


def test_iso_pattern_equal_conductors():
    pat = iso_pattern(ComparisonInput(EXAMPLE1.frob, 26, 26))
    assert pat.modulus == 1 and pat.allowed == frozenset({0})
    assert all(pattern_eval(pat, k) for k in range(1, 20))


def test_pattern_eval_periodicity():
    for fx in (EXAMPLE1, EXAMPLE2, EXAMPLE3):
        for g, g2 in itertools.permutations(fx.conductors, 2):
            pat = iso_pattern(ComparisonInput(fx.frob, g, g2))
            for k in range(1, 40):
                assert pattern_eval(pat, k) == pattern_eval(pat, k + pat.modulus)


def test_three_criteria_agree_on_examples():
    for fx in (EXAMPLE1, EXAMPLE2, EXAMPLE3):
        for g, g2 in itertools.permutations(fx.conductors, 2):
            inp = ComparisonInput(fx.frob, g, g2)
            pat = iso_pattern(inp)
            for k in range(1, 80):
                a = gcd_criterion(inp, k)
                b = valuation_criterion(inp, k)
                c = pattern_eval(pat, k)
                assert a == b == c, (fx.q, fx.t, g, g2, k)


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def test_three_criteria_agree_random_classes():
    rng = random.Random(8)
    primes = [q for q in range(5, 4000) if all(q % d for d in range(2, int(q**0.5) + 1))]
    classes = 0
    while classes < 60:
        q = rng.choice(primes)
        bound = int(2 * math.isqrt(q))
        t = rng.randrange(-bound, bound + 1)
        if t % q == 0 or t * t >= 4 * q:
            continue
        frob = frobenius_from_trace(q, t)
        if frob.b == 1:
            continue  # no nontrivial divisor pairs
        divs = _divisors(frob.b)
        for _ in range(4):
            g, g2 = rng.choice(divs), rng.choice(divs)
            inp = ComparisonInput(frob, g, g2)
            pat = iso_pattern(inp)
            for k in range(1, 61):
                a = gcd_criterion(inp, k)
                b = valuation_criterion(inp, k)
                c = pattern_eval(pat, k)
                assert a == b == c, (q, t, g, g2, k)
        classes += 1


def test_nasty_classes_randomized():
    # classes with v_2(b) = 1 stress the halving step
    rng = random.Random(9)
    primes = [q for q in range(5, 2000) if all(q % d for d in range(2, int(q**0.5) + 1))]
    found = 0
    while found < 25:
        q = rng.choice(primes)
        bound = int(2 * math.isqrt(q))
        t = rng.randrange(-bound, bound + 1)
        if t % q == 0 or t * t >= 4 * q:
            continue
        frob = frobenius_from_trace(q, t)
        if vp(frob.b, 2) != 1:
            continue
        red = nasty_reduce(frob)
        assert vp(red.b, 2) >= 2 and red.a % 2 == 1
        divs = _divisors(frob.b)
        g, g2 = rng.choice(divs), rng.choice(divs)
        inp = ComparisonInput(frob, g, g2)
        pat = iso_pattern(inp)
        for k in range(1, 50):
            assert gcd_criterion(inp, k) == pattern_eval(pat, k), (q, t, g, g2, k)
        found += 1


def test_predicted_group_structure_example1():
    frob = EXAMPLE1.frob
    want_n1 = {1: 4, 52: 1, 13: 4, 26: 2, 2: 2, 4: 1}
    for g, n1 in want_n1.items():
        s = predicted_group_structure(frob, g, 1)
        assert s.n1 == n1
        assert s.order == 3280


def test_pattern_eval_rejects_nonpositive_k():
    pat = iso_pattern(ComparisonInput(EXAMPLE1.frob, 1, 13))
    with pytest.raises(ValueError):
        pattern_eval(pat, 0)
