"""Decide for which k two ordinary curves over F_q with the same point count
have isomorphic groups over F_{q^k}.

Both curves share the Frobenius tau = a + b*delta; only the conductors g and
g' of their endomorphism rings differ.  The ground truth for each k is the
gcd test gcd(a_k - 1, b_k/g) = gcd(a_k - 1, b_k/g'), with tau^k = a_k + b_k
delta.  The per-prime valuation form of that test depends on k only through
k mod e_p and the parity of k, which is what makes the closed-form periodic
pattern possible; no a_k or b_k are ever computed for the pattern.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .curve import GroupStructure
from .quadorder import FrobeniusData, factorize, mult_order, vp

ODD_P = "odd_p"
EVEN_GENERIC = "even_generic"
EVEN_NASTY = "even_nasty"


@dataclass(frozen=True)
class ComparisonInput:
    """A Frobenius together with the two conductors to compare."""

    frob: FrobeniusData
    g: int
    g2: int

    def __post_init__(self):
        b = self.frob.b
        for g in (self.g, self.g2):
            if g < 1:
                raise ValueError("conductors must be >= 1")
            if b % g != 0:
                raise ValueError(f"conductor {g} does not divide b = {b}")


@dataclass(frozen=True)
class PrimeAnalysis:
    """Data at one prime p where v_p(g) != v_p(g'):

    s is max(v_p(g), v_p(g')), e the multiplicative order of a mod p (mod 4
    when p = 2), strict whether v_p(a^e - 1) - v_p(e) > v_p(b) - s.
    """

    p: int
    s: int
    e: int
    strict: bool
    case: str


def _strict_flag(a: int, b: int, p: int, e: int, s: int) -> bool:
    w = a**e - 1
    if w == 0:
        return True  # valuation infinite, inequality holds for any bound
    return vp(w, p) - vp(e, p) > vp(b, p) - s


def gcd_criterion(inp: ComparisonInput, k: int) -> bool:
    """Ground-truth isomorphism test over F_{q^k} via tau^k directly."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ak, bk = inp.frob.power(k)
    if bk % inp.g or bk % inp.g2:
        raise AssertionError("b_k lost divisibility by the conductors")
    return math.gcd(ak - 1, bk // inp.g) == math.gcd(ak - 1, bk // inp.g2)


def prime_set(inp: ComparisonInput) -> tuple[PrimeAnalysis, ...]:
    """Analyses at the primes where the two conductor valuations differ.

    Empty exactly when g = g'; those are the only primes that can ever make
    the two gcds disagree.
    """
    frob = inp.frob
    a, b = frob.a, abs(frob.b)
    out = []
    for p in sorted(factorize(b)):
        vg, vg2 = vp(inp.g, p), vp(inp.g2, p)
        if vg == vg2:
            continue
        s = max(vg, vg2)
        if p == 2:
            e = mult_order(a % 4, 4)
            case = EVEN_NASTY if vp(b, 2) == 1 else EVEN_GENERIC
        else:
            e = mult_order(a % p, p)
            case = ODD_P
        out.append(PrimeAnalysis(p=p, s=s, e=e, strict=_strict_flag(a, b, p, e, s), case=case))
    return tuple(out)


def valuation_criterion(inp: ComparisonInput, k: int) -> bool:
    """The gcd test restated per prime: isomorphic over F_{q^k} iff
    v_p(a_k - 1) <= v_p(b_k) - s_p at every analyzed prime."""
    if k < 1:
        raise ValueError("k must be >= 1")
    analyses = prime_set(inp)
    if not analyses:
        return True
    ak, bk = inp.frob.power(k)
    for pa in analyses:
        if ak == 1:
            return False  # v_p(a_k - 1) infinite, b_k finite
        if vp(ak - 1, pa.p) > vp(bk, pa.p) - pa.s:
            return False
    return True


@lru_cache(maxsize=128)
def nasty_reduce(frob: FrobeniusData) -> FrobeniusData:
    """Frobenius data of tau^2 over F_{q^2}, with raw components (no sign
    normalization).  Used when p = 2, v_2(b) = 1, where the closed form only
    applies after one squaring; the squared data always has v_2(b) >= 2."""
    sq = frob.elem**2
    red = FrobeniusData(q=frob.q**2, t=sq.trace(), elem=sq)
    if vp(red.b, 2) < 2:
        raise AssertionError("squared Frobenius must have v_2(b) >= 2")
    return red


def not_iso_at_prime(frob: FrobeniusData, pa: PrimeAnalysis, k: int) -> bool:
    """Whether prime pa blocks the isomorphism over F_{q^k}.

    Everything is decided from (a, b, s, e) alone; k enters only through
    divisibility and parity, never through a_k or b_k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if pa.case == EVEN_NASTY:
        if k % 2 == 1:
            return True  # v_2(b) = s = 1 forces failure at every odd k
        red = nasty_reduce(frob)
        e2 = mult_order(red.a % 4, 4)
        strict2 = _strict_flag(red.a, abs(red.b), 2, e2, pa.s)
        return strict2 and (k // 2) % e2 == 0
    blocked = pa.strict and k % pa.e == 0
    if pa.case == EVEN_GENERIC and k % 2 == 1 and vp(frob.b, 2) == pa.s:
        blocked = True
    return blocked


@dataclass(frozen=True, eq=False)
class IsoPattern:
    """Periodic answer: isomorphic over F_{q^k} iff k mod modulus is in
    allowed.  Equality is on the residue-set form only; per_prime carries
    the provenance."""

    modulus: int
    allowed: frozenset
    per_prime: tuple

    def __eq__(self, other) -> bool:
        if not isinstance(other, IsoPattern):
            return NotImplemented
        return self.modulus == other.modulus and self.allowed == other.allowed

    def __hash__(self) -> int:
        return hash((self.modulus, self.allowed))


def iso_pattern(inp: ComparisonInput) -> IsoPattern:
    """Closed-form periodic pattern for the whole comparison.

    The per-prime period is lcm(2, e) (lcm(2, 2e') after the nasty
    reduction); the overall modulus is their lcm and a residue is allowed
    when no analyzed prime blocks it.
    """
    if inp.g == inp.g2:
        return IsoPattern(1, frozenset({0}), ())
    analyses = prime_set(inp)
    modulus = 1
    for pa in analyses:
        if pa.case == EVEN_NASTY:
            e2 = mult_order(nasty_reduce(inp.frob).a % 4, 4)
            period = 2 * e2
        else:
            period = math.lcm(2, pa.e)
        modulus = math.lcm(modulus, period)
    allowed = frozenset(
        r
        for r in range(modulus)
        if not any(not_iso_at_prime(inp.frob, pa, r or modulus) for pa in analyses)
    )
    return IsoPattern(modulus, allowed, analyses)


def pattern_eval(pattern: IsoPattern, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be >= 1")
    return (k % pattern.modulus) in pattern.allowed


def predicted_group_structure(frob: FrobeniusData, g: int, k: int = 1) -> GroupStructure:
    """E(F_{q^k}) as Z/n1 x Z/n2 predicted from the Frobenius and conductor:
    n1 = gcd(a_k - 1, b_k / g).  Cross-checked against enumeration in the
    test suite, never the other way around."""
    if k < 1:
        raise ValueError("k must be >= 1")
    ak, bk = frob.power(k)
    if bk % g:
        raise ValueError(f"conductor {g} does not divide b_k = {bk}")
    n1 = math.gcd(ak - 1, bk // g)
    order = frob.point_count(k)
    if order % n1:
        raise AssertionError("n1 must divide the group order")
    return GroupStructure(n1, order // n1)
