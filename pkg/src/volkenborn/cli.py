"""Command line front end: series, tables, sequences, polynomials, integrals, verify."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .arith import INFINITY, format_rational, ord_p, parse_rational
from .families.sequences import SequenceFamily, egf_oracle, sequence
from .integrate import alternating_sum, fermionic, riemann_sum, volkenborn
from .poly import Basis
from .polytext import PolyParseError, format_poly, parse_poly
from .series import SeriesKind, std_series


def _series_kinds() -> list[str]:
    return [k.value for k in SeriesKind] + [f.value.lower() for f in SequenceFamily
                                            if f not in (SequenceFamily.Y_OF_B, SequenceFamily.Y_OF_E)]


def cmd_series(args) -> int:
    kind = args.kind.lower()
    if kind in {k.value for k in SeriesKind}:
        s = std_series(kind, args.order)
    else:
        s = egf_oracle(kind.upper(), args.order)
    for n, c in enumerate(s.coeffs):
        print(f"{n}\t{format_rational(c)}")
    return 0


def cmd_table(args) -> int:
    from .catalog.tables import emit_tables

    param = parse_rational(args.param) if args.param is not None else None
    sys.stdout.write(emit_tables([args.family], args.max, args.format, param=param))
    return 0


def cmd_seq(args) -> int:
    fam = SequenceFamily(args.family.upper())
    values = [sequence(fam, n) for n in range(args.max + 1)]
    if args.format == "json":
        print(json.dumps({"family": fam.value, "values": [format_rational(v) for v in values]}))
    else:
        for n, v in enumerate(values):
            print(f"{n}\t{format_rational(v)}")
    return 0


def cmd_poly(args) -> int:
    text = args.text if args.text is not None else sys.stdin.read()
    p = parse_poly(text)
    if args.to:
        p = p.convert(Basis(args.to.upper()))
    print(format_poly(p))
    return 0


def cmd_integrate(args) -> int:
    p = parse_poly(args.poly)
    res = volkenborn(p) if args.measure == "volkenborn" else fermionic(p)
    print(f"exact\t{format_rational(res.value)}")
    if args.approx:
        try:
            prime_s, level_s = args.approx.split(",")
            prime, level = int(prime_s), int(level_s)
        except ValueError:
            raise SystemExit("--approx expects p,N such as 3,4") from None
        approx = riemann_sum(p, prime, level) if args.measure == "volkenborn" else alternating_sum(p, prime, level)
        v = ord_p(approx - res.value, prime)
        print(f"approx\t{format_rational(approx)}")
        print(f"ord_{prime}\t{'inf' if v is INFINITY else v}")
    return 0


def cmd_verify(args) -> int:
    from .catalog import has_failure, report_json, report_tsv, run

    results = run(args.id or None, args.max_n, workers=args.jobs)
    out = report_json(results, args.errata) if args.format == "json" else report_tsv(results, args.errata)
    sys.stdout.write(out)
    return 1 if has_failure(results) else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="volkenborn", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("series", help="coefficients of a standard or generating series")
    s.add_argument("kind", choices=_series_kinds(), metavar="kind", help=", ".join(_series_kinds()))
    s.add_argument("--order", type=int, default=16)
    s.set_defaults(func=cmd_series)

    t = sub.add_parser("table", help="a number triangle, row-major")
    t.add_argument("family", help="stirling1, stirling2, lah, central_T_even, central_t_even or a triangle family tag")
    t.add_argument("--max", type=int, default=None, help="last row index")
    t.add_argument("--param", default=None, help="lambda for LAMBDA_S2")
    t.add_argument("--format", choices=("tsv", "json"), default="tsv")
    t.set_defaults(func=cmd_table)

    q = sub.add_parser("seq", help="values of a number sequence")
    q.add_argument("family", help=", ".join(f.value.lower() for f in SequenceFamily))
    q.add_argument("--max", type=int, required=True)
    q.add_argument("--format", choices=("tsv", "json"), default="tsv")
    q.set_defaults(func=cmd_seq)

    p = sub.add_parser("poly", help="polynomial text tools")
    psub = p.add_subparsers(dest="action", required=True)
    pp = psub.add_parser("parse", help="parse and print in canonical form")
    pp.add_argument("text", nargs="?", help="polynomial text; read from stdin when omitted")
    pp.add_argument("--to", choices=[b.value.lower() for b in Basis], help="convert to this basis first")
    pp.set_defaults(func=cmd_poly)

    i = sub.add_parser("integrate", help="exact p-adic integral of a polynomial")
    i.add_argument("--measure", choices=("volkenborn", "fermionic"), required=True)
    i.add_argument("--poly", required=True)
    i.add_argument("--approx", default=None, metavar="p,N", help="also print the level-N finite sum and its distance")
    i.set_defaults(func=cmd_integrate)

    v = sub.add_parser("verify", help="run the identity catalog")
    v.add_argument("--id", action="append", help="entry id, repeatable; GROUP.ID or a unique bare ID")
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--format", choices=("tsv", "json"), default="tsv")
    v.add_argument("--errata", action="store_true", help="append the erratum report section")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, PolyParseError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
