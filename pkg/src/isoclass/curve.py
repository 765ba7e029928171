"""Short Weierstrass curves y^2 = x^3 + a*x + b over prime fields and their
extensions.  Points are None (infinity) or (x, y) pairs of field elements.

Characteristic > 3 is required: the short model does not cover char 2 and 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import PrimeField

DEFAULT_BOUND = 10**6


class SingularCurveError(ValueError):
    """4a^3 + 27b^2 = 0: the cubic has a repeated root."""


class CapacityError(RuntimeError):
    """An exhaustive enumeration would exceed the configured bound."""


@dataclass(frozen=True)
class GroupStructure:
    """E(F) as Z/n1 x Z/n2 with n1 | n2 (n1 = 1 means cyclic)."""

    n1: int
    n2: int

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError("invariant factors must be positive")
        if self.n2 % self.n1 != 0:
            raise ValueError("n1 must divide n2")

    @property
    def order(self) -> int:
        return self.n1 * self.n2


class Curve:
    """y^2 = x^3 + a*x + b over the field context ctx."""

    __slots__ = ("ctx", "a", "b")

    def __init__(self, ctx, a, b):
        if ctx.char <= 3:
            raise ValueError("short Weierstrass model needs characteristic > 3")
        if isinstance(a, int):
            a = ctx.from_int(a)
        if isinstance(b, int):
            b = ctx.from_int(b)
        self.ctx = ctx
        self.a = a
        self.b = b
        F = ctx
        disc = F.add(
            F.mul(F.from_int(4), F.mul(a, F.mul(a, a))),
            F.mul(F.from_int(27), F.mul(b, b)),
        )
        if disc == F.zero:
            raise SingularCurveError(f"curve {self} is singular")

    def __repr__(self) -> str:
        return f"y^2 = x^3 + {self.a}*x + {self.b} over {self.ctx!r}"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Curve)
            and other.ctx == self.ctx
            and other.a == self.a
            and other.b == self.b
        )

    def __hash__(self) -> int:
        return hash((self.ctx, self.a, self.b))

    def rhs(self, x):
        F = self.ctx
        return F.add(F.mul(x, F.mul(x, x)), F.add(F.mul(self.a, x), self.b))

    def contains(self, P) -> bool:
        if P is None:
            return True
        x, y = P
        return self.ctx.mul(y, y) == self.rhs(x)

    def _require(self, P):
        if not self.contains(P):
            raise ValueError(f"point {P} is not on {self}")

    def neg(self, P):
        if P is None:
            return None
        x, y = P
        return (x, self.ctx.neg(y))

    def add(self, P, Q):
        self._require(P)
        self._require(Q)
        return self._add(P, Q)

    def _add(self, P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        F = self.ctx
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if y1 == F.neg(y2):
                return None  # covers y1 = y2 = 0 as well
            # tangent slope (3*x1^2 + a) / (2*y1)
            num = F.add(F.mul(F.from_int(3), F.mul(x1, x1)), self.a)
            den = F.mul(F.from_int(2), y1)
        else:
            num = F.sub(y2, y1)
            den = F.sub(x2, x1)
        lam = F.mul(num, F.inv(den))
        x3 = F.sub(F.sub(F.mul(lam, lam), x1), x2)
        y3 = F.sub(F.mul(lam, F.sub(x1, x3)), y1)
        return (x3, y3)

    def scalar_mul(self, n: int, P):
        self._require(P)
        if n < 0:
            n, P = -n, self.neg(P)
        result = None
        addend = P
        while n:
            if n & 1:
                result = self._add(result, addend)
            addend = self._add(addend, addend)
            n >>= 1
        return result

    # -- point counting and group structure (prime fields / small fields) --

    def count_points(self) -> int:
        """|E(F_p)| by a full x-sweep against a table of squares."""
        if not isinstance(self.ctx, PrimeField):
            raise TypeError("count_points runs over the prime base field")
        p = self.ctx.p
        sq = bytearray(p)
        for z in range(p // 2 + 1):
            sq[z * z % p] = 1
        a, b = self.a, self.b
        count = 1
        for x in range(p):
            r = (x * x * x + a * x + b) % p
            if r == 0:
                count += 1
            elif sq[r]:
                count += 2
        return count

    def trace(self) -> int:
        return self.ctx.p + 1 - self.count_points()

    def is_ordinary(self) -> bool:
        return self.trace() % self.ctx.char != 0

    def lift(self, ctx) -> "Curve":
        """The same equation read over an extension of the base field."""
        if ctx.char != self.ctx.char:
            raise ValueError("extension must have the same characteristic")
        if not isinstance(self.ctx, PrimeField):
            raise TypeError("lift starts from the prime field")
        return Curve(ctx, ctx.from_int(self.a), ctx.from_int(self.b))

    def group_structure_bruteforce(self, bound: int = DEFAULT_BOUND) -> GroupStructure:
        """Z/n1 x Z/n2 shape of E(F) by exhaustive enumeration.

        Raises CapacityError when the field size exceeds bound.
        """
        from . import enumeration

        if self.ctx.size > bound:
            raise CapacityError(
                f"field size {self.ctx.size} exceeds enumeration bound {bound}"
            )
        return enumeration.group_structure(self)

    def points(self):
        """All affine points by exhaustive sweep (tests and tiny fields)."""
        F = self.ctx
        roots: dict = {}
        for y in F.elements():
            roots.setdefault(F.mul(y, y), []).append(y)
        for x in F.elements():
            for y in roots.get(self.rhs(x), ()):
                yield (x, y)


def curve_from_ints(p: int, a: int, b: int) -> Curve:
    return Curve(PrimeField(p), a, b)


__all__ = [
    "Curve",
    "GroupStructure",
    "SingularCurveError",
    "CapacityError",
    "DEFAULT_BOUND",
    "curve_from_ints",
]
