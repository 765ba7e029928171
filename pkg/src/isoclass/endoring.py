"""Endomorphism ring conductor of an ordinary curve over F_p.

The Frobenius tau = a + b*delta sits in an order of conductor g inside the
maximal order, g | b.  For a prime power c | b, the map (tau - a)/c is an
endomorphism exactly when tau acts as the scalar a mod c on the c-torsion,
and that holds exactly when g | b/c.  Testing it for growing prime powers
pins down every v_p(g).

The scalar test runs symbolically in F_p[x]/(psi~_c) with division
polynomials, Schoof style; an independent pointwise check over explicit
torsion points in extension fields backs it as an oracle.
"""

from __future__ import annotations

from .curve import DEFAULT_BOUND, CapacityError, Curve
from .field import (
    ExtField,
    NotInvertibleError,
    PrimeField,
    Poly,
    poly_deg,
    poly_divmod,
    poly_invmod,
    poly_mod,
    poly_mul,
    poly_neg,
    poly_powmod,
    poly_sub,
    poly_trim,
)
from .quadorder import FrobeniusData, factorize


class DivisionPolySet:
    """Division polynomials psi~_n of a curve, as polynomials in x alone.

    psi~_n is the standard psi_n for odd n and psi_n/(2y) for even n (so
    psi~_2 = 1); the generic degrees are (n^2-1)/2 and (n^2-4)/2.  Roots of
    psi~_n are the x-coordinates of the nonzero n-torsion for odd n, and of
    the n-torsion off E[2] for even n.
    """

    def __init__(self, curve: Curve, n_max: int = 4):
        if not isinstance(curve.ctx, PrimeField):
            raise TypeError("division polynomials are built over the prime field")
        self.curve = curve
        self.p = curve.ctx.p
        p, a, b = self.p, curve.a, curve.b
        self.f: Poly = poly_trim([b, a, 0, 1])  # x^3 + ax + b
        self.f2: Poly = poly_mul(self.f, self.f, p)
        self._psi: list[Poly] = [
            [],
            [1],
            [1],
            poly_trim([-a * a % p, 12 * b % p, 6 * a % p, 0, 3]),
            poly_trim(
                [
                    2 * (-8 * b * b - a * a * a) % p,
                    2 * (-4 * a * b) % p,
                    2 * (-5 * a * a) % p,
                    2 * (20 * b) % p,
                    2 * (5 * a) % p,
                    0,
                    2,
                ]
            ),
        ]
        self.extend(n_max)

    def extend(self, n_max: int) -> None:
        p = self.p
        psi = self._psi
        while len(psi) <= n_max:
            n = len(psi)
            m = n // 2
            if n % 2 == 0:
                inner = poly_sub(
                    poly_mul(psi[m + 2], poly_mul(psi[m - 1], psi[m - 1], p), p),
                    poly_mul(psi[m - 2], poly_mul(psi[m + 1], psi[m + 1], p), p),
                    p,
                )
                psi.append(poly_mul(psi[m], inner, p))
            else:
                cube_m = poly_mul(psi[m], poly_mul(psi[m], psi[m], p), p)
                cube_m1 = poly_mul(psi[m + 1], poly_mul(psi[m + 1], psi[m + 1], p), p)
                t1 = poly_mul(psi[m + 2], cube_m, p)
                t2 = poly_mul(psi[m - 1], cube_m1, p)
                scale = poly_mul([16 % p], self.f2, p)
                if m % 2 == 0:
                    psi.append(poly_sub(poly_mul(scale, t1, p), t2, p))
                else:
                    psi.append(poly_sub(t1, poly_mul(scale, t2, p), p))

    def __getitem__(self, n: int) -> Poly:
        if n < 0:
            raise IndexError("division polynomial index must be >= 0")
        self.extend(n)
        return self._psi[n]


def division_polys(curve: Curve, n_max: int) -> DivisionPolySet:
    """psi~_0 .. psi~_n_max for the curve (extendable afterwards)."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return DivisionPolySet(curve, n_max)


def _scalar_maps(psit: DivisionPolySet, n: int, modulus: Poly) -> tuple[Poly, Poly]:
    """(X, Omega) with [n](x, y) = (X(x), y*Omega(x)) in F_p[x]/(modulus).

    Raises NotInvertibleError (with a factor of the modulus) when a needed
    denominator is not invertible there.
    """
    p = psit.p
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return poly_mod([0, 1], modulus, p), poly_mod([1], modulus, p)

    def red(q: Poly) -> Poly:
        return poly_mod(q, modulus, p)

    pm2 = red(psit[n - 2])
    pm1 = red(psit[n - 1])
    pn = red(psit[n])
    pp1 = red(psit[n + 1])
    pp2 = red(psit[n + 2])
    f = red(psit.f)
    pn2 = red(poly_mul(pn, pn, p))
    pn3 = red(poly_mul(pn2, pn, p))
    cross = red(poly_mul(pm1, pp1, p))
    disc = poly_sub(
        red(poly_mul(pp2, red(poly_mul(pm1, pm1, p)), p)),
        red(poly_mul(pm2, red(poly_mul(pp1, pp1, p)), p)),
        p,
    )
    if n % 2 == 1:
        xshift = red(poly_mul(poly_mul([4], f, p), cross, p))
        xmap = poly_sub(red([0, 1]), red(poly_mul(xshift, poly_invmod(pn2, modulus, p), p)), p)
        omega = red(poly_mul(disc, poly_invmod(pn3, modulus, p), p))
    else:
        den_x = red(poly_mul(poly_mul([4], f, p), pn2, p))
        xmap = poly_sub(red([0, 1]), red(poly_mul(cross, poly_invmod(den_x, modulus, p), p)), p)
        den_y = red(poly_mul(poly_mul([16], psit.f2, p), pn3, p))
        omega = red(poly_mul(disc, poly_invmod(den_y, modulus, p), p))
    return xmap, omega


def _is_prime_power(c: int) -> tuple[int, int]:
    fac = factorize(c)
    if len(fac) != 1:
        raise ValueError(f"{c} is not a prime power")
    ((p, e),) = fac.items()
    return p, e


def scalar_action_test(curve: Curve, frob: FrobeniusData, c: int) -> bool:
    """Whether tau acts as the scalar a mod c on E[c] (c a prime power
    dividing b), i.e. whether the order of conductor b/c contains tau scaled
    accordingly.  Equivalent to g | b/c for the true conductor g.

    Runs in F_p[x]/(psi~_c); when an inversion fails the modulus splits along
    the discovered factor and both pieces are tested.
    """
    if c < 1:
        raise ValueError("c must be >= 1")
    if c == 1:
        return True
    if not isinstance(curve.ctx, PrimeField):
        raise TypeError("the action test runs over the prime base field")
    q = curve.ctx.p
    if frob.q != q:
        raise ValueError("Frobenius data does not match the curve's field")
    if frob.b % c != 0:
        raise ValueError(f"c = {c} must divide b = {frob.b}")
    if c % q == 0:
        raise ValueError("c must be coprime to the characteristic")
    _is_prime_power(c)

    a_mod = frob.a % c
    if a_mod <= c - a_mod:
        n, sign = a_mod, 1
    else:
        n, sign = c - a_mod, -1
    psit = division_polys(curve, max(c, n + 2))
    p = psit.p

    def component_ok(modulus: Poly, compare_y: bool) -> bool:
        if poly_deg(modulus) < 1:
            return True
        try:
            xmap, omega = _scalar_maps(psit, n, modulus)
        except NotInvertibleError as err:
            factor = err.factor
            if poly_deg(factor) == poly_deg(modulus):
                raise AssertionError("torsion denominator vanished on a full component")
            quot, rem = poly_divmod(modulus, factor, p)
            if rem:
                raise AssertionError("split factor does not divide the modulus")
            return component_ok(factor, compare_y) and component_ok(quot, compare_y)
        if poly_powmod([0, 1], q, modulus, p) != xmap:
            return False
        if compare_y:
            half = poly_powmod(psit.f, (q - 1) // 2, modulus, p)
            target = omega if sign == 1 else poly_mod(poly_neg(omega, p), modulus, p)
            if half != target:
                return False
        return True

    # x-coordinates of E[c] \ {O} are the roots of psi~_c (times f for even
    # c, which adds the 2-torsion).  On the f part both y's are zero, so only
    # the x comparison is meaningful there.
    if not component_ok(psit[c], True):
        return False
    if c % 2 == 0 and not component_ok(psit.f, False):
        return False
    return True


def conductor(curve: Curve, frob: FrobeniusData) -> int:
    """Conductor g of End(E) inside the maximal order, via the scalar action
    test at growing prime powers: v_p(g) = v_p(b) - (largest i passing)."""
    if curve.count_points() != frob.q + 1 - frob.t:
        raise ValueError("curve's point count does not match the Frobenius data")
    g = 1
    for p, vb in sorted(factorize(frob.b).items()):
        i = 0
        # passes are downward closed in i, so stop at the first failure
        while i < vb and scalar_action_test(curve, frob, p ** (i + 1)):
            i += 1
        g *= p ** (vb - i)
    return g


def _full_torsion_action(
    curve: Curve, frob: FrobeniusData, lp: int, j: int, bound: int
) -> bool:
    """Pointwise oracle for one prime power c = lp^j: find the smallest
    extension containing all of E[c], then compare tau with [a mod c] on
    every torsion point."""
    from . import enumeration

    c = lp**j
    q = frob.q
    base = curve.ctx
    m = 0
    size = 1
    while True:
        m += 1
        size *= q
        if size > bound:
            raise CapacityError(
                f"E[{c}] does not appear within the enumeration bound {bound}"
            )
        ctx = base if m == 1 else ExtField(base, m)
        lifted = curve if m == 1 else curve.lift(ctx)
        tors = enumeration.lpower_torsion(lifted, lp, j)[j]
        if len(tors) + 1 != c * c:
            continue
        n = frob.a % c
        for pt in tors:
            x, y = pt
            image = (ctx.pow(x, q), ctx.pow(y, q))
            if image != lifted.scalar_mul(n, pt):
                return False
        return True


def conductor_bruteforce(
    curve: Curve, frob: FrobeniusData, bound: int = DEFAULT_BOUND
) -> int:
    """Conductor computed from explicit torsion points in extension fields.

    Independent of the division-polynomial route; meant as its oracle on
    small inputs.  Raises CapacityError when a needed torsion field exceeds
    the enumeration bound.
    """
    if curve.count_points() != frob.q + 1 - frob.t:
        raise ValueError("curve's point count does not match the Frobenius data")
    g = 1
    for p, vb in sorted(factorize(frob.b).items()):
        passes = [_full_torsion_action(curve, frob, p, j, bound) for j in range(1, vb + 1)]
        i = 0
        while i < vb and passes[i]:
            i += 1
        if any(passes[i:]):
            raise AssertionError("action passes must be downward closed in the exponent")
        g *= p ** (vb - i)
    return g
