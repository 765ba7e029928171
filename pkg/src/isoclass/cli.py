"""Command line front end.

Subcommands: analyze one curve, compare two curves in the same isogeny
class, derive a pattern from raw (q, t, g, g') data, and cross-check a
comparison against the brute-force enumeration oracle.

Exit codes: 0 ok, 2 invalid input, 3 supersingular curve, 4 point-count
mismatch, 5 enumeration capacity exceeded.  JSON reports render every big
integer as a decimal string.
"""

from __future__ import annotations

import argparse
import itertools
import json
import re
import sys

from .curve import DEFAULT_BOUND, CapacityError, Curve
from .endoring import conductor
from .field import ExtField, PrimeField
from .isomorphy import (
    ComparisonInput,
    IsoPattern,
    gcd_criterion,
    iso_pattern,
    pattern_eval,
    predicted_group_structure,
)
from .quadorder import FrobeniusData, SupersingularError, frobenius_from_trace

_SPEC_RE = re.compile(r"^(\d+):(-?\d+),(-?\d+)$")


class CountMismatchError(ValueError):
    """The two curves do not have the same number of points."""


def parse_curve_spec(spec: str) -> Curve:
    """'<q>:<A>,<B>' with q a prime and A, B reduced mod q."""
    m = _SPEC_RE.match(spec)
    if not m:
        raise ValueError(f"bad curve spec {spec!r}, expected '<q>:<A>,<B>'")
    q, a, b = (int(g) for g in m.groups())
    return Curve(PrimeField(q), a, b)


# ---------------------------------------------------------------------------
# pattern text


def _atoms(modulus: int):
    divisors = [d for d in range(2, modulus + 1) if modulus % d == 0]
    pos = [(f"{d} | k", frozenset(r for r in range(modulus) if r % d == 0)) for d in divisors]
    neg = [
        ("k odd" if d == 2 else f"{d} ∤ k", frozenset(r for r in range(modulus) if r % d))
        for d in divisors
    ]
    return pos + neg


def pattern_text(pattern: IsoPattern) -> str:
    """Human form of a pattern: 'all k', 'none', divisibility conditions
    joined with ' and ', else explicit residues."""
    modulus, allowed = pattern.modulus, pattern.allowed
    if modulus == 1:
        return "all k" if allowed else "none"
    if not allowed:
        return "none"
    if allowed == frozenset(range(modulus)):
        return "all k"
    atoms = _atoms(modulus)
    for size in (1, 2, 3):
        for combo in itertools.combinations(atoms, size):
            inter = frozenset(range(modulus))
            for _, residues in combo:
                inter &= residues
            if inter == allowed:
                return " and ".join(name for name, _ in combo)
    residues = ", ".join(str(r) for r in sorted(allowed))
    return f"k ≡ {{{residues}}} (mod {modulus})"


def render_pairwise_table(labels: list[str], cells: dict) -> str:
    """Symmetric table of pattern texts; cells maps (i, j) with i < j."""
    n = len(labels)
    grid = [["" for _ in range(n + 1)] for _ in range(n + 1)]
    grid[0][0] = "iso"
    for i, lab in enumerate(labels):
        grid[0][i + 1] = lab
        grid[i + 1][0] = lab
    for i in range(n):
        for j in range(n):
            grid[i + 1][j + 1] = "-" if i == j else cells[(min(i, j), max(i, j))]
    widths = [max(len(row[c]) for row in grid) for c in range(n + 1)]
    lines = [
        "  ".join(row[c].ljust(widths[c]) for c in range(n + 1)).rstrip()
        for row in grid
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# report pieces


def _frob_report(frob: FrobeniusData) -> dict:
    return {
        "q": str(frob.q),
        "t": str(frob.t),
        "a": str(frob.a),
        "b": str(frob.b),
        "m": str(frob.m),
        "delta": frob.kind,
    }


def _primes_report(pattern: IsoPattern) -> list:
    return [
        {
            "p": str(pa.p),
            "s": str(pa.s),
            "e": str(pa.e),
            "strict": pa.strict,
            "case": pa.case,
        }
        for pa in pattern.per_prime
    ]


def _pattern_report(pattern: IsoPattern) -> dict:
    return {
        "modulus": str(pattern.modulus),
        "allowed": [str(r) for r in sorted(pattern.allowed)],
        "text": pattern_text(pattern),
    }


def _curve_text(curve: Curve) -> str:
    return f"y^2 = x^3 + {curve.a}*x + {curve.b} over F_{curve.ctx.p}"


def _frob_text(frob: FrobeniusData) -> str:
    delta = "sqrt(m)" if frob.kind == "sqrt" else "(1+sqrt(m))/2"
    return f"tau = {frob.a} + {frob.b}*delta,  m = {frob.m},  delta = {delta}"


# ---------------------------------------------------------------------------
# subcommands


def cmd_analyze(args) -> tuple[dict, str]:
    curve = parse_curve_spec(args.curve)
    count = curve.count_points()
    q = curve.ctx.p
    frob = frobenius_from_trace(q, q + 1 - count)
    g = conductor(curve, frob)
    struct = predicted_group_structure(frob, g, 1)
    report = {
        "input": {
            "curve": args.curve,
            "count": str(count),
            "structure": [str(struct.n1), str(struct.n2)],
        },
        "frobenius": _frob_report(frob),
        "conductors": [str(g)],
        "primes": [],
        "pattern": None,
    }
    text = "\n".join(
        [
            _curve_text(curve),
            f"|E(F_q)| = {count}  (trace t = {frob.t})",
            _frob_text(frob),
            f"conductor g = {g}",
            f"E(F_q) = Z/{struct.n1} x Z/{struct.n2}",
        ]
    )
    return report, text


def _comparison_setup(spec_a: str, spec_b: str):
    ea, eb = parse_curve_spec(spec_a), parse_curve_spec(spec_b)
    if ea.ctx.p != eb.ctx.p:
        raise ValueError("curves must be defined over the same field")
    na, nb = ea.count_points(), eb.count_points()
    if na != nb:
        raise CountMismatchError(f"point counts differ: {na} != {nb}")
    q = ea.ctx.p
    frob = frobenius_from_trace(q, q + 1 - na)
    ga, gb = conductor(ea, frob), conductor(eb, frob)
    inp = ComparisonInput(frob, ga, gb)
    return ea, eb, na, frob, inp


def _comparison_report(args, inp: ComparisonInput, count: int, pattern: IsoPattern) -> tuple[dict, list[str]]:
    report = {
        "input": {
            "curve_a": args.curve_a,
            "curve_b": args.curve_b,
            "count": str(count),
        },
        "frobenius": _frob_report(inp.frob),
        "conductors": [str(inp.g), str(inp.g2)],
        "primes": _primes_report(pattern),
        "pattern": _pattern_report(pattern),
    }
    lines = [
        f"comparing over F_{inp.frob.q}, common count {count}",
        f"  E : {args.curve_a}",
        f"  E': {args.curve_b}",
        _frob_text(inp.frob),
        f"conductors g = {inp.g}, g' = {inp.g2}",
    ]
    for pa in pattern.per_prime:
        strict = "yes" if pa.strict else "no"
        lines.append(f"p = {pa.p}: s = {pa.s}, e = {pa.e}, strict = {strict}, case = {pa.case}")
    lines.append(f"isomorphic over F_(q^k) iff: {pattern_text(pattern)}")
    return report, lines


def cmd_compare(args) -> tuple[dict, str]:
    _, _, count, frob, inp = _comparison_setup(args.curve_a, args.curve_b)
    pattern = iso_pattern(inp)
    report, lines = _comparison_report(args, inp, count, pattern)
    if args.kmax:
        per_k = []
        for k in range(1, args.kmax + 1):
            iso = gcd_criterion(inp, k)
            per_k.append({"k": str(k), "iso": iso})
        report["per_k"] = per_k
        lines.append("per-k cross-check (gcd test):")
        for row in per_k:
            lines.append(f"  k = {row['k']}: {'isomorphic' if row['iso'] else 'not isomorphic'}")
    return report, "\n".join(lines)


def cmd_pattern(args) -> tuple[dict, str]:
    frob = frobenius_from_trace(args.q, args.trace)
    inp = ComparisonInput(frob, args.g, args.g2)
    pattern = iso_pattern(inp)
    report = {
        "input": {
            "q": str(args.q),
            "trace": str(args.trace),
            "g": str(args.g),
            "g2": str(args.g2),
        },
        "frobenius": _frob_report(frob),
        "conductors": [str(args.g), str(args.g2)],
        "primes": _primes_report(pattern),
        "pattern": _pattern_report(pattern),
    }
    lines = [
        _frob_text(frob),
        f"conductors g = {args.g}, g' = {args.g2}",
    ]
    for pa in pattern.per_prime:
        strict = "yes" if pa.strict else "no"
        lines.append(f"p = {pa.p}: s = {pa.s}, e = {pa.e}, strict = {strict}, case = {pa.case}")
    lines.append(f"isomorphic over F_(q^k) iff: {pattern_text(pattern)}")
    return report, "\n".join(lines)


def cmd_oracle(args) -> tuple[dict, str]:
    ea, eb, count, frob, inp = _comparison_setup(args.curve_a, args.curve_b)
    pattern = iso_pattern(inp)
    bound = args.bound
    q = frob.q
    if q**args.kmax > bound:
        raise CapacityError(
            f"field size q^{args.kmax} = {q**args.kmax} exceeds enumeration bound {bound}"
        )
    report, lines = _comparison_report(args, inp, count, pattern)
    rows = []
    base = ea.ctx
    all_agree = True
    for k in range(1, args.kmax + 1):
        ctx = base if k == 1 else ExtField(base, k)
        ca = ea if k == 1 else ea.lift(ctx)
        cb = eb if k == 1 else eb.lift(ctx)
        sa = ca.group_structure_bruteforce(bound)
        sb = cb.group_structure_bruteforce(bound)
        iso = sa == sb
        predicted = pattern_eval(pattern, k)
        agree = iso == predicted
        all_agree &= agree
        rows.append(
            {
                "k": str(k),
                "a": [str(sa.n1), str(sa.n2)],
                "b": [str(sb.n1), str(sb.n2)],
                "isomorphic": iso,
                "predicted": predicted,
                "agree": agree,
            }
        )
    report["oracle"] = rows
    lines.append("oracle (enumerated group structures vs pattern):")
    for row in rows:
        lines.append(
            f"  k = {row['k']}: E = Z/{row['a'][0]} x Z/{row['a'][1]}, "
            f"E' = Z/{row['b'][0]} x Z/{row['b'][1]}, "
            f"iso = {'yes' if row['isomorphic'] else 'no'}, "
            f"predicted = {'yes' if row['predicted'] else 'no'}"
            + ("" if row["agree"] else "  << DISAGREEMENT")
        )
    lines.append(
        "oracle and pattern agree for every k" if all_agree else "DISAGREEMENT FOUND"
    )
    return report, "\n".join(lines)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isoclass",
        description="Group isomorphism of ordinary elliptic curves over F_q "
        "and all its extensions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="count, Frobenius, conductor of one curve")
    p.add_argument("curve", help="curve spec <q>:<A>,<B>")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("compare", help="isomorphism pattern for two curves")
    p.add_argument("curve_a", help="curve spec <q>:<A>,<B>")
    p.add_argument("curve_b", help="curve spec <q>:<A>,<B>")
    p.add_argument("--kmax", type=int, default=0, help="tabulate k = 1..kmax")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("pattern", help="pattern from raw (q, t, g, g') data")
    p.add_argument("--q", type=int, required=True, help="prime power q")
    p.add_argument("--trace", type=int, required=True, help="Frobenius trace t")
    p.add_argument("--g", type=int, required=True, help="first conductor")
    p.add_argument("--g2", type=int, required=True, help="second conductor")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("oracle", help="brute-force cross-check of a comparison")
    p.add_argument("curve_a", help="curve spec <q>:<A>,<B>")
    p.add_argument("curve_b", help="curve spec <q>:<A>,<B>")
    p.add_argument("--kmax", type=int, required=True, help="check k = 1..kmax")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="enumeration bound")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, text = args.func(args)
    except SupersingularError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CountMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
