"""Command line entry point.

Exit codes: 0 ok, 1 input error, 2 infinite dimensional algebra, 3 internal failure.
"""

from __future__ import annotations

import argparse
import sys

from .analysis import analyze, bracket_text, criteria_text
from .crowns import CrownSpec, group_algebra
from .errors import BadSpec, HochError, InfiniteDimensional, InputError, InternalError
from .oracle import ORACLE_CAP
from .parser import read_input
from .quiver import DEFAULT_CAP

EXIT_OK, EXIT_INPUT, EXIT_INFINITE, EXIT_INTERNAL = 0, 1, 2, 3


def _crowns(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise BadSpec(f"bad crown list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hochlie", description="H^1 of monomial algebras as a Lie algebra")
    ap.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum size of the path basis")
    sub = ap.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", help="full report")
    a.add_argument("file")
    a.add_argument("--json", action="store_true")
    a.add_argument("--oracle", action="store_true", help="cross-check against Der/Ad")
    for name, text in (("verify", "brute-force cross-check"), ("criteria", "classification verdicts"),
                       ("bracket", "structure constants")):
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        p.add_argument("--json", action="store_true")
    g = sub.add_parser("group-algebra", help="crown algebras over F_p")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--a", type=int, default=1)
    g.add_argument("--crowns", type=str, required=True, help="comma-separated crown lengths")
    g.add_argument("--json", action="store_true")
    return ap


def _group_text(report) -> str:
    ga = report.data["group_algebra"]
    lines = [f"group algebra: p = {ga['p']}, a = {ga['a']}, crowns = {ga['crowns']}, "
             f"truncation length {ga['truncation_length']}"]
    for c in ga["crown_reports"]:
        o = c["oracle"]
        check = "" if o is None else f"; oracle dim {o['dim_direct']}"
        lines.append(f"  crown {c['length']}: dim H1 = {c['dim']}; {c['summary']}{check}")
    lines.append(f"sum of crown dims = {ga['sum_of_crown_dims']}; block diagonal: "
                 f"{'yes' if ga['block_diagonal'] else 'no'}")
    th, comp = ga["theorem"], ga["computed"]
    lines.append(f"theorem: semisimple {th['semisimple']}, simple {th['simple']}; "
                 f"computed: semisimple {comp['semisimple']}, simple {comp['simple']}; "
                 f"{'agree' if ga['agree'] else 'DISAGREE'}")
    return "\n".join(lines) + "\n" + report.render("text").decode("utf-8")


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    err = sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        if args.command == "group-algebra":
            spec = CrownSpec(args.p, args.a, _crowns(args.crowns))
            report = group_algebra(spec)
            text = report.to_json() if args.json else _group_text(report)
        else:
            doc = read_input(args.file)
            oracle = args.command == "verify" or getattr(args, "oracle", False)
            report = analyze(doc, oracle=oracle, cap=args.cap, oracle_cap=ORACLE_CAP)
            if args.json:
                text = report.to_json()
            elif args.command == "verify":
                o = report["oracle"]
                text = (f"oracle: passed\ndim H1 = {o['dim_minimal']} (parallel paths) = "
                        f"{o['dim_direct']} (Der/Ad)\nDer = {o['der_dim']}, Ad = {o['ad_dim']}, "
                        f"Z(A) = {o['center_dim']}, Der_E = {o['der_e_dim']} = Ker psi1\n"
                        f"bracket transport checked on {o['pairs_checked']} pairs\n")
            elif args.command == "criteria":
                text = criteria_text(report)
            elif args.command == "bracket":
                text = bracket_text(report)
            else:
                text = report.render("text").decode("utf-8")
    except OSError as e:
        print(f"error: {e}", file=err)
        return EXIT_INPUT
    except InputError as e:
        print(f"error: {e}", file=err)
        return EXIT_INPUT
    except InfiniteDimensional as e:
        print(f"error: {e}", file=err)
        return EXIT_INFINITE
    except (InternalError, HochError) as e:
        print(f"internal error: {type(e).__name__}: {e}", file=err)
        return EXIT_INTERNAL
    out.write(text)
    return EXIT_OK


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
