"""Imaginary quadratic order arithmetic for the Frobenius of an ordinary
elliptic curve, plus the integer valuation toolkit used by the isomorphism
criteria.

The Frobenius t^2 - 4q = c^2 * m with m < 0 squarefree lives in Z[delta]
where delta = sqrt(m) when m = 2, 3 (mod 4) and delta = (1 + sqrt(m))/2 when
m = 1 (mod 4).  Elements x + y*delta are stored as integer pairs and all
arithmetic is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .field import is_prime

_TRIAL_BOUND = 10**6


class SupersingularError(ValueError):
    """The (q, t) pair fails the ordinarity condition gcd(t, q) = 1."""


def vp(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer (taken on |n|)."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    if p < 2:
        raise ValueError("p must be >= 2")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _pollard_rho(n: int) -> int:
    # Brent's cycle variant; n odd composite with no factor below _TRIAL_BOUND.
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"failed to factor {n}")


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1: trial division to 1e6, then Pollard rho."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    # wheel over residues coprime to 30
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n and d < _TRIAL_BOUND:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += steps[i]
        i = (i + 1) % 8
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if is_prime(m):
                out[m] = out.get(m, 0) + 1
                continue
            f = _pollard_rho(m)
            stack.append(f)
            stack.append(m // f)
    return out


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write a negative integer n as c^2 * m with m < 0 squarefree, c >= 1.

    Returns (m, c).
    """
    if n >= 0:
        raise ValueError("expected a negative integer")
    c = 1
    m = 1
    for p, e in factorize(-n).items():
        c *= p ** (e // 2)
        if e % 2:
            m *= p
    return -m, c


def lte(p: int, a: int, b: int, k: int) -> int:
    """v_p(a^k - b^k) by lifting the exponent: equals v_p(a - b) + v_p(k).

    Requires a = b (mod p), neither divisible by p, a != b, k >= 1, and for
    p = 2 additionally a = b (mod 4).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if a % p != b % p:
        raise ValueError("a and b must be congruent mod p")
    if a % p == 0:
        raise ValueError("a and b must be coprime to p")
    if a == b:
        raise ValueError("a = b makes the valuation infinite")
    if p == 2 and (a - b) % 4 != 0:
        raise ValueError("p = 2 requires a = b (mod 4)")
    return vp(a - b, p) + vp(k, p)


def binom_valuation(p: int, l: int, m: int, r: int) -> int:
    """v_p of binomial(p^l * m, r) for p coprime to m and 0 < r <= p^l:
    equals l - v_p(r)."""
    if l < 0:
        raise ValueError("l must be >= 0")
    if m % p == 0:
        raise ValueError("m must be coprime to p")
    if not 0 < r <= p**l:
        raise ValueError("need 0 < r <= p^l")
    return l - vp(r, p)


def mult_order(a: int, n: int) -> int:
    """Multiplicative order of a modulo n >= 2."""
    if n < 2:
        raise ValueError("modulus must be >= 2")
    a %= n
    if math.gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    e = 1
    x = a
    while x != 1:
        x = x * a % n
        e += 1
    return e


# ---------------------------------------------------------------------------
# elements x + y*delta of the maximal order containing the Frobenius

SQRT = "sqrt"  # delta = sqrt(m),       delta^2 = m            (m = 2, 3 mod 4)
HALF = "half"  # delta = (1+sqrt(m))/2, delta^2 = delta + (m-1)/4  (m = 1 mod 4)


def delta_kind(m: int) -> str:
    if m >= 0:
        raise ValueError("m must be negative")
    return HALF if m % 4 == 1 else SQRT


@dataclass(frozen=True)
class OrderElem:
    """x + y*delta with exact integer components."""

    x: int
    y: int
    m: int

    def __post_init__(self):
        if self.m >= 0:
            raise ValueError("m must be negative")
        mm = abs(self.m)
        for p in (2, 3, 5, 7, 11, 13):
            if mm % (p * p) == 0:
                raise ValueError("m must be squarefree")

    @property
    def kind(self) -> str:
        return delta_kind(self.m)

    def __add__(self, other: "OrderElem") -> "OrderElem":
        self._check(other)
        return OrderElem(self.x + other.x, self.y + other.y, self.m)

    def __sub__(self, other: "OrderElem") -> "OrderElem":
        self._check(other)
        return OrderElem(self.x - other.x, self.y - other.y, self.m)

    def __mul__(self, other: "OrderElem") -> "OrderElem":
        self._check(other)
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        if self.kind == SQRT:
            return OrderElem(x1 * x2 + self.m * y1 * y2, x1 * y2 + x2 * y1, self.m)
        # delta^2 = delta + (m-1)/4
        c = (self.m - 1) // 4
        return OrderElem(x1 * x2 + c * y1 * y2, x1 * y2 + x2 * y1 + y1 * y2, self.m)

    def __pow__(self, k: int) -> "OrderElem":
        if k < 0:
            raise ValueError("negative powers leave the order")
        result = OrderElem(1, 0, self.m)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def norm(self) -> int:
        x, y = self.x, self.y
        if self.kind == SQRT:
            return x * x - self.m * y * y
        return x * x + x * y + y * y * (1 - self.m) // 4

    def trace(self) -> int:
        if self.kind == SQRT:
            return 2 * self.x
        return 2 * self.x + self.y

    def _check(self, other: "OrderElem"):
        if other.m != self.m:
            raise ValueError("elements live in different orders")

    def __repr__(self) -> str:
        return f"({self.x} + {self.y}*delta[m={self.m}])"


def order_pow(e: OrderElem, k: int) -> OrderElem:
    """k-th power in the order, exact integer arithmetic."""
    return e**k


@dataclass(frozen=True)
class FrobeniusData:
    """A Frobenius element tau = a + b*delta of norm q and trace t.

    Built by frobenius_from_trace (which normalizes b > 0) or by squaring an
    existing Frobenius (nasty_reduce keeps the raw components, so b may be
    negative there).  gcd(a, b) = 1 holds for every ordinary (q, t).
    """

    q: int
    t: int
    elem: OrderElem

    def __post_init__(self):
        if math.gcd(self.t, self.q) != 1:
            raise SupersingularError(f"gcd(t, q) > 1 for q={self.q}, t={self.t}")
        if self.elem.norm() != self.q:
            raise ValueError("norm does not equal q")
        if self.elem.trace() != self.t:
            raise ValueError("trace does not equal t")
        if self.t * self.t >= 4 * self.q:
            raise ValueError("t^2 must be < 4q")
        if math.gcd(self.a, self.b) != 1:
            raise ValueError("gcd(a, b) != 1 should be impossible for ordinary input")

    @property
    def a(self) -> int:
        return self.elem.x

    @property
    def b(self) -> int:
        return self.elem.y

    @property
    def m(self) -> int:
        return self.elem.m

    @property
    def kind(self) -> str:
        return self.elem.kind

    def power(self, k: int) -> tuple[int, int]:
        """Components (a_k, b_k) of tau^k."""
        e = self.elem**k
        return e.x, e.y

    def point_count(self, k: int = 1) -> int:
        """|E(F_{q^k})| = norm(tau^k - 1)."""
        one = OrderElem(1, 0, self.m)
        return (self.elem**k - one).norm()


def frobenius_from_trace(q: int, t: int) -> FrobeniusData:
    """Frobenius data for an ordinary curve over F_q with trace t.

    q may be any prime power (as an opaque integer): ordinarity is exactly
    gcd(t, q) = 1.  Rejects supersingular traces distinctly and rejects
    t^2 >= 4q.  The returned b is positive.
    """
    if q < 2:
        raise ValueError("q must be >= 2")
    if math.gcd(t, q) != 1:
        raise SupersingularError(f"supersingular: gcd(t, q) > 1 for q={q}, t={t}")
    disc = t * t - 4 * q
    if disc >= 0:
        raise ValueError(f"t^2 - 4q = {disc} is not negative")
    m, c = squarefree_decompose(disc)
    if delta_kind(m) == SQRT:
        # t and c are both even here: t^2 = c^2 m (mod 4) forces it
        a, b = t // 2, c // 2
    else:
        a, b = (t - c) // 2, c
    return FrobeniusData(q=q, t=t, elem=OrderElem(a, b, m))
