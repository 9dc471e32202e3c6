"""Command-line front end.

One subcommand per library operation; reports are JSON envelopes with
certificates, and text output is a rendering of the same payload (never a
separate code path).  Exit codes: 0 success, 1 usage error, 2 unsupported
ideal class / input, 3 resource guard exceeded, 4 internal verification
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .errors import (
    ExponentOverflowError,
    NonArtinianError,
    NotFSplitError,
    ParseError,
    ResourceGuardError,
    RingMismatchError,
    UnsupportedIdealClassError,
    VerificationError,
)
from .ideals import CIIdeal, MonomialIdeal, build_ideal, parse_ideal_spec
from .koszul import (
    betti_power_formula,
    brute_betti,
    codepth,
    strand_check,
)
from .levels import f_level_bounds, generation_exponent
from .polyring import PolyRing, parse_polynomial
from .pushforward import (
    alpha,
    ci_filtration_check,
    cyclic_decompose,
    pn_pushforward,
    pushforward_module,
    veronese_decompose,
)
from .splitting import graded_summand_test, is_f_split, twist_spectrum, witness_from_proof

JSON_INT_LIMIT = 2**53

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNSUPPORTED = 2
EXIT_GUARD = 3
EXIT_VERIFICATION = 4


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1 (argparse default is 2, reserved here)
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _jsonable(value):
    """Stable-field-order payload normalization: Fractions become
    {num, den}, integers beyond 2^53 become decimal strings."""
    if isinstance(value, Fraction):
        return {"num": _jsonable(value.numerator), "den": _jsonable(value.denominator)}
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value if -JSON_INT_LIMIT < value < JSON_INT_LIMIT else str(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def emit_json(envelope):
    """Serialize the report envelope; field order is insertion order."""
    return json.dumps(_jsonable(envelope), indent=2) + "\n"


def collect_certificates(result):
    """Pull every certificate object out of a result payload (recognized by
    the verdict/kind field pair), in document order."""
    found = []

    def walk(node):
        if isinstance(node, dict):
            if "verdict" in node and "kind" in node:
                found.append(node)
            for value in node.values():
                walk(value)
        elif isinstance(node, list):
            for value in node:
                walk(value)

    walk(result)
    return found


def render_text(value, indent=0):
    """Human-readable rendering of the JSON payload (same data source)."""
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(render_text(v, indent + 1))
            else:
                shown = v if not isinstance(v, (dict, list)) else "(none)"
                lines.append(f"{pad}{k}: {shown}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {item}")
    else:
        lines.append(f"{pad}{value}")
    return lines if indent else "\n".join(lines) + "\n"


def _add_ring_args(sub, require_ideal=True):
    sub.add_argument("--char", type=int, help="prime characteristic")
    sub.add_argument("--vars", help="comma-separated variable names")
    sub.add_argument("--ideal", help="comma-separated generators")
    sub.add_argument("--class", dest="ideal_class", choices=["monomial", "ci"])
    sub.add_argument(
        "--spec",
        help="alternative input: `char <p>; vars <x,..>; ideal <f>, ..; [class ..;]`",
    )
    sub.require_ideal = require_ideal


def _parse_ideal_args(args):
    if args.spec:
        if args.char or args.vars or args.ideal:
            raise ParseError("--spec replaces --char/--vars/--ideal")
        ring, ideal, warnings = parse_ideal_spec(args.spec)
        return ring, ideal, warnings
    if not (args.char and args.vars and args.ideal):
        raise ParseError("need --char, --vars and --ideal (or --spec)")
    ring = PolyRing(args.char, [v.strip() for v in args.vars.split(",")])
    polys = [parse_polynomial(ring, chunk) for chunk in args.ideal.split(",")]
    ideal, warnings = build_ideal(ring, polys, args.ideal_class)
    return ring, ideal, warnings


def _need_monomial(ideal):
    if not isinstance(ideal, MonomialIdeal):
        raise UnsupportedIdealClassError("this subcommand needs a monomial ideal")
    return ideal


def build_parser():
    parser = _Parser(prog="frobcalc", description=__doc__)
    parser.add_argument("--version", action="version", version=f"frobcalc {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the JSON envelope")
    common.add_argument("--threads", type=int, default=1, help="worker threads for searches")
    common.add_argument(
        "--max-monomials", type=int, default=None, help="resource guard for enumerations"
    )
    subs = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    ring_subs = {}
    for name, helptext in [
        ("fsplit", "Frobenius splitting test"),
        ("summand", "graded summand test for one twist"),
        ("twists", "summand tests across a twist range"),
        ("witness", "maximal escape monomial and its twist factors"),
        ("codepth", "top nonvanishing Koszul homology degree"),
        ("genexp", "least e with p^e above the codepth"),
        ("decompose", "cyclic decomposition of a pushforward module"),
        ("filtration", "p^c-step filtration check for a regular sequence"),
        ("flevel", "bound report for the pushforward level"),
        ("loewy", "Loewy length of an artinian monomial quotient"),
    ]:
        sub = subs.add_parser(name, help=helptext, parents=[common])
        _add_ring_args(sub)
        ring_subs[name] = sub
    for name in ("fsplit", "summand", "twists", "witness", "decompose"):
        ring_subs[name].add_argument("-e", type=int, default=1, help="pushforward exponent")
    ring_subs["summand"].add_argument("--j", type=int, required=True, help="twist to test")
    ring_subs["twists"].add_argument("--jmax", type=int, default=None)
    ring_subs["codepth"].add_argument("--degree-bound", type=int, default=None)
    ring_subs["genexp"].add_argument("--degree-bound", type=int, default=None)
    ring_subs["flevel"].add_argument("--emax", type=int, default=4)

    betti = subs.add_parser("betti", help="graded Betti table, or the power formula", parents=[common])
    _add_ring_args(betti, require_ideal=False)
    betti.add_argument("--degree-bound", type=int, default=None)
    betti.add_argument("--formula-nvars", type=int, help="closed form: number of variables")
    betti.add_argument("--formula-power", type=int, help="closed form: power of the maximal ideal")

    strand = subs.add_parser("strand", help="strand exact-sequence verification", parents=[common])
    strand.add_argument("--ell", type=int, required=True)
    strand.add_argument("--j", type=int, required=True)
    strand.add_argument("--steps", type=int, default=6)
    strand.add_argument("--char", type=int, default=2)

    alpha_sub = subs.add_parser("alpha", help="twist multiplicities on projective space", parents=[common])
    alpha_sub.add_argument("--n", type=int, required=True)
    alpha_sub.add_argument("--p", type=int, required=True)
    alpha_sub.add_argument("--l", type=int, default=0)

    pn = subs.add_parser("pn", help="iterated pushforward of a line bundle on P^n", parents=[common])
    pn.add_argument("--n", type=int, required=True)
    pn.add_argument("--p", type=int, required=True)
    pn.add_argument("-e", type=int, default=1)
    pn.add_argument("--l", type=int, default=0)

    veronese = subs.add_parser("veronese", help="strand decomposition of a Veronese pushforward", parents=[common])
    veronese.add_argument("--ell", type=int, required=True)
    veronese.add_argument("--p", type=int, required=True)
    veronese.add_argument("-e", type=int, default=1)
    veronese.add_argument("--degree-bound", type=int, default=12)

    return parser


def _dispatch(args):
    """Returns (input echo, result payload, warnings)."""
    threads = args.threads
    guard = {}
    if args.max_monomials is not None:
        guard["max_monomials"] = args.max_monomials

    name = args.subcommand
    if name in (
        "fsplit",
        "summand",
        "twists",
        "witness",
        "codepth",
        "genexp",
        "decompose",
        "filtration",
        "flevel",
        "loewy",
    ):
        ring, ideal, warnings = _parse_ideal_args(args)
        if isinstance(ideal, CIIdeal):
            shown = [str(g) for g in ideal.gens]
        else:
            from .polyring import mono_str

            shown = [mono_str(ring, g) for g in ideal.gens]
        echo = {
            "char": ring.p,
            "vars": list(ring.variables),
            "ideal": shown,
            "class": "ci" if isinstance(ideal, CIIdeal) else "monomial",
        }
        if name == "fsplit":
            cert = is_f_split(ideal, args.e, threads=threads)
            return echo | {"e": args.e}, {"certificate": cert.payload(ring)}, warnings
        if name == "summand":
            cert = graded_summand_test(ideal, args.j, args.e, threads=threads, **guard)
            return echo | {"e": args.e, "j": args.j}, {"certificate": cert.payload(ring)}, warnings
        if name == "twists":
            spectrum = twist_spectrum(ideal, args.e, args.jmax, threads=threads)
            return echo | {"e": args.e, "jmax": args.jmax}, spectrum.payload(ring), warnings
        if name == "witness":
            chain = witness_from_proof(ideal, args.e)
            return echo | {"e": args.e}, chain.payload(ring), warnings
        if name == "codepth":
            value = codepth(_need_monomial(ideal), args.degree_bound, **guard)
            return echo, {"codepth": value, "depth": ring.nvars - value}, warnings
        if name == "genexp":
            value = generation_exponent(_need_monomial(ideal), args.degree_bound, **guard)
            return echo, {"generation_exponent": value}, warnings
        if name == "decompose":
            module = pushforward_module(_need_monomial(ideal), args.e, **guard)
            decomposition = cyclic_decompose(module)
            return echo | {"e": args.e}, decomposition.payload(ring), warnings
        if name == "filtration":
            monomial = _need_monomial(ideal)
            report = ci_filtration_check(ring, list(monomial.gens), **guard)
            return echo, report.payload(ring), warnings
        if name == "flevel":
            report = f_level_bounds(ideal, e_max=args.emax, threads=threads, **guard)
            return echo | {"emax": args.emax}, report.payload(ring), warnings
        if name == "loewy":
            value = _need_monomial(ideal).loewy_length(**guard)
            return echo, {"loewy_length": value}, warnings

    if name == "betti":
        if args.formula_nvars is not None or args.formula_power is not None:
            if args.formula_nvars is None or args.formula_power is None:
                raise ParseError("formula mode needs both --formula-nvars and --formula-power")
            if args.char or args.vars or args.ideal or args.spec:
                raise ParseError("formula mode takes no ideal")
            d, j = args.formula_nvars, args.formula_power
            row = {str(i): betti_power_formula(d, j, i) for i in range(d + 1)}
            degrees = {"0": 0} | {str(i): j + i - 1 for i in range(1, d + 1)}
            echo = {"formula_nvars": d, "formula_power": j}
            return echo, {"betti": row, "generator_degrees": degrees}, []
        ring, ideal, warnings = _parse_ideal_args(args)
        from .polyring import mono_str

        table = brute_betti(_need_monomial(ideal), args.degree_bound, **guard)
        echo = {
            "char": ring.p,
            "vars": list(ring.variables),
            "ideal": [mono_str(ring, g) for g in ideal.gens],
        }
        payload = {
            "betti": [
                {"i": i, "degree": d, "value": v} for (i, d), v in sorted(table.items())
            ]
        }
        return echo, payload, warnings

    if name == "strand":
        report = strand_check(args.ell, args.j, steps=args.steps, char=args.char)
        echo = {"ell": args.ell, "j": args.j, "steps": args.steps, "char": args.char}
        return echo, report.payload(), []

    if name == "alpha":
        if not (1 <= args.n):
            raise ParseError("need n >= 1")
        table = {}
        i = -(args.l // args.p)
        while args.l + i * args.p <= (args.n + 1) * (args.p - 1):
            value = alpha(args.n, args.p, i, args.l)
            if value:
                table[str(i)] = value
            i += 1
        echo = {"n": args.n, "p": args.p, "l": args.l}
        return echo, {"alpha": table, "sum": sum(table.values())}, []

    if name == "pn":
        report = pn_pushforward(args.n, args.p, args.e, args.l)
        echo = {"n": args.n, "p": args.p, "e": args.e, "l": args.l}
        return echo, report.payload(), []

    if name == "veronese":
        report = veronese_decompose(args.ell, args.p, args.e, degree_bound=args.degree_bound)
        echo = {"ell": args.ell, "p": args.p, "e": args.e}
        return echo, report.payload(), []

    raise AssertionError(f"unhandled subcommand {name}")


def run(argv):
    """Parse, dispatch, and print a report; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    start = time.perf_counter()
    try:
        echo, result, warnings = _dispatch(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, RingMismatchError, ExponentOverflowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedIdealClassError, NonArtinianError, NotFSplitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    elapsed = time.perf_counter() - start
    envelope = {
        "tool": {"name": "frobcalc", "version": __version__},
        "subcommand": args.subcommand,
        "input": echo,
        "result": result,
        "certificates": collect_certificates(result),
        "notes": warnings,
        "timing_seconds": round(elapsed, 6),
    }
    if args.json:
        sys.stdout.write(emit_json(envelope))
    else:
        sys.stdout.write(render_text(_jsonable(envelope)))
    return EXIT_OK


def main(argv=None):
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
