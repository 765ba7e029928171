"""Prime fields F_p, dense univariate polynomials over them, and extension
fields F_{p^k} built from a deterministically chosen irreducible modulus.

Polynomials are plain lists of ints with ascending coefficients and no
trailing zeros ([] is the zero polynomial).  Extension field elements are
fixed-width tuples of length k, so they hash and compare structurally.
"""

from __future__ import annotations

import itertools

Poly = list[int]

# Miller-Rabin with this base set is deterministic below 3.317e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_PROVEN_BOUND = 3317044064679887385961981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int) -> bool:
    """Deterministic primality for n < 3.317e24, fixed-base Miller-Rabin above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    bases = _MR_BASES if n < _MR_PROVEN_BOUND else _MR_BASES + tuple(range(41, 102, 2))
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} for an odd prime p."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"legendre requires an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    s = pow(a, (p - 1) // 2, p)
    return 1 if s == 1 else -1


class PrimeField:
    """Arithmetic context for F_p.  Elements are canonical ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    @property
    def char(self) -> int:
        return self.p

    @property
    def degree(self) -> int:
        return 1

    @property
    def size(self) -> int:
        return self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 is not invertible in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def elements(self):
        return iter(range(self.p))

    def encode(self, a: int) -> int:
        return a

    def decode(self, code: int) -> int:
        return code

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


# ---------------------------------------------------------------------------
# dense polynomial arithmetic over F_p


class NotInvertibleError(ArithmeticError):
    """Inversion failed in F_p[x]/(modulus); .factor is a nontrivial monic
    divisor of the modulus witnessing the failure."""

    def __init__(self, factor: Poly):
        super().__init__(f"inversion failed, modulus has factor of degree {len(factor) - 1}")
        self.factor = factor


def poly_trim(a: Poly) -> Poly:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_deg(a: Poly) -> int:
    return len(a) - 1


def poly_add(a: Poly, b: Poly, p: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return poly_trim(out)


def poly_neg(a: Poly, p: int) -> Poly:
    return [-c % p for c in a]


def poly_sub(a: Poly, b: Poly, p: int) -> Poly:
    return poly_add(a, poly_neg(b, p), p)


def poly_scale(a: Poly, c: int, p: int) -> Poly:
    c %= p
    if c == 0:
        return []
    return poly_trim([ai * c % p for ai in a])


def poly_mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return []
    if len(a) >= 32 and len(b) >= 32:
        return _poly_mul_packed(a, b, p)
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return poly_trim([c % p for c in out])


def _poly_mul_packed(a: Poly, b: Poly, p: int) -> Poly:
    # Kronecker substitution: pack coefficients into one big integer per
    # operand so the convolution becomes a single bignum multiply.  Slot
    # width must hold min(len) * (p-1)^2 without carries.
    slot_bytes = ((min(len(a), len(b)) * (p - 1) * (p - 1)).bit_length() + 7) // 8
    pa = int.from_bytes(
        b"".join(c.to_bytes(slot_bytes, "little") for c in a), "little"
    )
    pb = int.from_bytes(
        b"".join(c.to_bytes(slot_bytes, "little") for c in b), "little"
    )
    prod = pa * pb
    n = len(a) + len(b) - 1
    raw = prod.to_bytes(n * slot_bytes + 16, "little")
    out = [
        int.from_bytes(raw[i * slot_bytes : (i + 1) * slot_bytes], "little") % p
        for i in range(n)
    ]
    return poly_trim(out)


def poly_divmod(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [c % p for c in a]
    poly_trim(a)
    db, da = len(b) - 1, len(a) - 1
    if da < db:
        return [], a
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * (da - db + 1)
    r = a[:]
    for i in range(da - db, -1, -1):
        c = r[db + i] * inv_lead % p
        if c == 0:
            continue
        q[i] = c
        for j, bj in enumerate(b):
            r[i + j] = (r[i + j] - c * bj) % p
    return poly_trim(q), poly_trim(r)


def poly_mod(a: Poly, m: Poly, p: int) -> Poly:
    return poly_divmod(a, m, p)[1]


def poly_monic(a: Poly, p: int) -> Poly:
    if not a:
        return []
    return poly_scale(a, pow(a[-1], p - 2, p), p)


def poly_gcd(a: Poly, b: Poly, p: int) -> Poly:
    """Monic gcd; rejects the pair (0, 0)."""
    a = poly_trim([c % p for c in a])
    b = poly_trim([c % p for c in b])
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    while b:
        a, b = b, poly_mod(a, b, p)
    return poly_monic(a, p)


def poly_extgcd(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly, Poly]:
    """Returns (g, u, v) with u*a + v*b = g, g the monic gcd."""
    r0, r1 = [c % p for c in a], [c % p for c in b]
    poly_trim(r0), poly_trim(r1)
    u0, u1 = [1], []
    v0, v1 = [], [1]
    while r1:
        q, r = poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        u0, u1 = u1, poly_sub(u0, poly_mul(q, u1, p), p)
        v0, v1 = v1, poly_sub(v0, poly_mul(q, v1, p), p)
    if not r0:
        raise ValueError("gcd(0, 0) is undefined")
    c = pow(r0[-1], p - 2, p)
    return poly_scale(r0, c, p), poly_scale(u0, c, p), poly_scale(v0, c, p)


def poly_invmod(a: Poly, m: Poly, p: int) -> Poly:
    """Inverse of a in F_p[x]/(m); raises NotInvertibleError carrying the
    offending monic factor of m when gcd(a, m) != 1."""
    a = poly_mod(a, m, p)
    if not a:
        raise NotInvertibleError(poly_monic(m, p))
    g, u, _ = poly_extgcd(a, m, p)
    if poly_deg(g) != 0:
        raise NotInvertibleError(g)
    return poly_mod(u, m, p)


def poly_powmod(base: Poly, e: int, m: Poly, p: int) -> Poly:
    """base^e mod m by square-and-multiply; modulus degree must be >= 1."""
    if not m or poly_deg(m) < 1:
        raise ValueError("modulus must have degree >= 1")
    if e < 0:
        raise ValueError("negative exponent")
    result = [1]
    base = poly_mod(base, m, p)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, p), m, p)
        base = poly_mod(poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def poly_eval(a: Poly, x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def _is_irreducible(f: Poly, p: int) -> bool:
    # f of degree k has no factor of degree d iff gcd(x^(p^d) - x, f) = 1;
    # checking d <= k/2 suffices.
    k = poly_deg(f)
    if k < 1:
        return False
    if k == 1:
        return True
    xq = [0, 1]
    for _ in range(k // 2):
        xq = poly_powmod(xq, p, f, p)
        g = poly_gcd(poly_sub(xq, [0, 1], p), f, p)
        if poly_deg(g) != 0:
            return False
    return True


def find_irreducible(p: int, k: int) -> Poly:
    """First monic irreducible of degree k over F_p, candidates enumerated in
    lexicographic order of the low-coefficient vector (c0 varies fastest)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("degree must be >= 1")
    for idx in range(p**k):
        coeffs = []
        n = idx
        for _ in range(k):
            coeffs.append(n % p)
            n //= p
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return poly_trim(f)
    raise AssertionError("unreachable: irreducibles of every degree exist")


class ExtField:
    """Arithmetic context for F_{p^k} = F_p[x]/(modulus).

    Elements are tuples of k ints in [0, p), low coefficient first.  Codes
    are the base-p packed integers sum(c_i * p^i), giving a bijection with
    range(p^k) that matches the iteration order of elements().
    """

    __slots__ = ("base", "k", "modulus", "p")

    def __init__(self, base: PrimeField, k: int, modulus: Poly | None = None):
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        self.base = base
        self.p = base.p
        self.k = k
        if modulus is None:
            modulus = find_irreducible(self.p, k)
        else:
            modulus = poly_trim([c % self.p for c in modulus])
            if poly_deg(modulus) != k or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree k")
            if not _is_irreducible(modulus, self.p):
                raise ValueError("modulus is not irreducible")
        self.modulus = modulus

    @property
    def char(self) -> int:
        return self.p

    @property
    def degree(self) -> int:
        return self.k

    @property
    def size(self) -> int:
        return self.p**self.k

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.k

    @property
    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.k - 1)

    def from_int(self, n: int) -> tuple[int, ...]:
        return (n % self.p,) + (0,) * (self.k - 1)

    def from_poly(self, a: Poly) -> tuple[int, ...]:
        a = poly_mod(a, self.modulus, self.p)
        return tuple(a) + (0,) * (self.k - len(a))

    def to_poly(self, a: tuple[int, ...]) -> Poly:
        return poly_trim(list(a))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        return self.from_poly(poly_mul(self.to_poly(a), self.to_poly(b), self.p))

    def inv(self, a):
        if all(c == 0 for c in a):
            raise ZeroDivisionError(f"0 is not invertible in F_{self.p}^{self.k}")
        return self.from_poly(poly_invmod(self.to_poly(a), self.modulus, self.p))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        return self.from_poly(poly_powmod(self.to_poly(a), e, self.modulus, self.p))

    def elements(self):
        for digits in itertools.product(range(self.p), repeat=self.k):
            # itertools varies the last slot fastest; codes want c0 fastest
            yield tuple(reversed(digits))

    def encode(self, a) -> int:
        code = 0
        for c in reversed(a):
            code = code * self.p + c
        return code

    def decode(self, code: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            out.append(code % self.p)
            code //= self.p
        return tuple(out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtField)
            and other.p == self.p
            and other.k == self.k
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash(("ExtField", self.p, self.k, tuple(self.modulus)))

    def __repr__(self) -> str:
        return f"ExtField({self.p}, {self.k})"
