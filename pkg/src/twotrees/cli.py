"""Command-line front end.

Subcommands: construct, check-seq, params, tables, audit, iso.  Shared
flags (given after the subcommand): --format {text,json,csv}, --out PATH,
--threads N.  Exit codes: 0 success or pass, 1 semantic negative (audit
failure, non-isomorphic), 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .census import MAX_ENUM_N, audit_theorems, emit_table, table_csv, table_rows
from .classify import CentralClassification, classify_central
from .degseq import DegreeSequence, bose_two_tree_sequence, delta_range, erdos_gallai_graphic, tail_params
from .families import (
    bicentral_sigma3,
    bicentral_standard,
    book,
    fan,
    tricentral_extremal,
    tricentral_gpq,
)
from .graph import Graph
from .canon import is_isomorphic

_FAMILIES = {
    "fan": (fan, 1, "N"),
    "book": (book, 1, "M (pages; n = M + 2)"),
    "bicentral": (bicentral_standard, 2, "N DELTA"),
    "bicentral-sigma3": (bicentral_sigma3, 2, "N K"),
    "tricentral-extremal": (tricentral_extremal, 1, "N (divisible by 3)"),
    "gpq": (tricentral_gpq, 3, "K P Q"),
}


def _common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub.add_argument("--out", metavar="PATH", default=None)
    sub.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twotrees",
        description="Construct, check, classify and exhaustively count "
        "2-trees with a small maximum-degree core and tail degrees in {2, 3}.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("construct", help="build a named family graph")
    p.add_argument("family", choices=sorted(_FAMILIES))
    p.add_argument("params", nargs="*", type=int, metavar="PARAM")
    _common_flags(p)
    p.set_defaults(func=cmd_construct)

    p = subs.add_parser("check-seq", help="test a degree sequence")
    p.add_argument("sequence", help='comma- or space-separated degrees, e.g. "5,5,2,2,2,2"')
    _common_flags(p)
    p.set_defaults(func=cmd_check_seq)

    p = subs.add_parser("params", help="feasible core degrees and tail counts")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int, choices=(1, 2, 3))
    p.add_argument("delta", type=int, nargs="?", default=None)
    _common_flags(p)
    p.set_defaults(func=cmd_params)

    p = subs.add_parser("tables", help="enumerated table rows for a core size")
    p.add_argument("--r", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--n", required=True, metavar="A..B", help="inclusive range, or a single n")
    _common_flags(p)
    p.set_defaults(func=cmd_tables)

    p = subs.add_parser("audit", help="run the structural audits")
    p.add_argument("n_max", type=int)
    p.add_argument("--json", action="store_true", help="shorthand for --format json")
    p.add_argument("--inject-failure", action="store_true", help=argparse.SUPPRESS)
    _common_flags(p)
    p.set_defaults(func=cmd_audit)

    p = subs.add_parser("iso", help="compare two graph JSON files")
    p.add_argument("file_a")
    p.add_argument("file_b")
    _common_flags(p)
    p.set_defaults(func=cmd_iso)

    return parser


def _deliver(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _parse_span(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_s, _, hi_s = text.partition("..")
        lo, hi = int(lo_s), int(hi_s)
    else:
        lo = hi = int(text)
    if lo > hi:
        raise ValueError(f"empty range {text!r}")
    return lo, hi


def _summary_line(c: CentralClassification) -> str:
    parts = [f"r={c.r}", f"Δ={c.delta}", f"x={c.x}", f"y={c.y}"]
    if c.sigma is not None:
        parts.append(f"σ={c.sigma}")
    if not c.strong:
        parts.append("strong=no")
    return " ".join(parts)


def cmd_construct(args: argparse.Namespace) -> int:
    builder, arity, usage = _FAMILIES[args.family]
    if len(args.params) != arity:
        print(f"error: {args.family} takes parameters {usage}", file=sys.stderr)
        return 2
    g = builder(*args.params)
    c = classify_central(g)
    if args.format == "json":
        payload: dict = {"graph": g.to_dict()}
        if isinstance(c, CentralClassification):
            payload["classification"] = {
                "r": c.r,
                "delta": c.delta,
                "x": c.x,
                "y": c.y,
                "strong": c.strong,
                "sigma": c.sigma,
            }
        else:
            payload["classification"] = None
        _deliver(_json_text(payload), args.out)
    elif args.format == "text":
        line = _summary_line(c) if isinstance(c, CentralClassification) else f"not classifiable: {c.reason}"
        _deliver(g.to_json() + "\n" + line + "\n", args.out)
    else:
        print("error: construct has no csv format", file=sys.stderr)
        return 2
    return 0


def _central_match(d: DegreeSequence, r: int) -> int | None:
    if d.n < 3:
        return None
    prof = tail_params(d.n, r, d[0])
    if prof.feasible and d.degrees == prof.degree_sequence().degrees:
        return prof.delta
    return None


def cmd_check_seq(args: argparse.Namespace) -> int:
    d = DegreeSequence.parse(args.sequence)
    graphic = erdos_gallai_graphic(d)
    two_tree = d.n >= 3 and bose_two_tree_sequence(d)
    central = {r: _central_match(d, r) for r in (1, 2, 3)}
    if args.format == "json":
        payload = {
            "sequence": list(d),
            "graphic": graphic,
            "two_tree": two_tree,
            "central": {f"r{r}": central[r] for r in (1, 2, 3)},
        }
        _deliver(_json_text(payload), args.out)
    elif args.format == "text":
        lines = [
            f"graphic={'yes' if graphic else 'no'}",
            f"two-tree={'yes' if two_tree else 'no'}",
        ]
        for r in (1, 2, 3):
            hit = central[r]
            lines.append(
                f"central r={r}: " + (f"yes Δ={hit}" if hit is not None else "no")
            )
        _deliver("\n".join(lines) + "\n", args.out)
    else:
        print("error: check-seq has no csv format", file=sys.stderr)
        return 2
    return 0


def cmd_params(args: argparse.Namespace) -> int:
    span = delta_range(args.n, args.r)
    deltas = [args.delta] if args.delta is not None else list(span)
    profiles = [tail_params(args.n, args.r, delta) for delta in deltas]
    if args.format == "json":
        payload = {
            "n": args.n,
            "r": args.r,
            "delta_range": [span.start, span.stop - 1] if len(span) else None,
            "profiles": [
                {
                    "delta": p.delta,
                    "x": p.x,
                    "y": p.y,
                    "feasible": p.feasible,
                    "degree_sequence": list(p.degree_sequence()) if p.feasible else None,
                }
                for p in profiles
            ],
        }
        _deliver(_json_text(payload), args.out)
    elif args.format == "text":
        lines = [f"n={args.n} r={args.r}"]
        lines.append(
            f"delta range: {span.start}..{span.stop - 1}" if len(span) else "delta range: empty"
        )
        for p in profiles:
            if p.feasible:
                seq = " ".join(str(v) for v in p.degree_sequence())
                lines.append(f'delta={p.delta}: x={p.x} y={p.y} sequence="{seq}"')
            else:
                lines.append(f"delta={p.delta}: x={p.x} y={p.y} infeasible")
        _deliver("\n".join(lines) + "\n", args.out)
    else:
        print("error: params has no csv format", file=sys.stderr)
        return 2
    return 0


def cmd_tables(args: argparse.Namespace) -> int:
    n_min, n_max = _parse_span(args.n)
    records = emit_table(n_min, n_max, args.r, threads=args.threads)
    if args.format == "csv":
        _deliver(table_csv(records), args.out)
    elif args.format == "json":
        _deliver(_json_text(table_rows(records)), args.out)
    else:
        lines = [f"{'n':>3} {'delta':>5} {'x':>3} {'y':>3} {'count':>5}  degree_sequence"]
        for rec in records:
            seq = " ".join(str(v) for v in rec.degree_sequence)
            lines.append(
                f"{rec.n:>3} {rec.delta:>5} {rec.x:>3} {rec.y:>3} {rec.count:>5}  {seq}"
            )
        _deliver("\n".join(lines) + "\n", args.out)
    return 0


def cmd_audit(args: argparse.Namespace) -> int:
    report = audit_theorems(args.n_max, threads=args.threads)
    entries = list(report.entries)
    if args.inject_failure:
        from .census import AuditEntry
        from .graph import new_triangle

        entries.append(
            AuditEntry(
                check="z-injected",
                description="synthetic failure for exit-code testing",
                passed=False,
                counterexample={"witness": new_triangle().to_dict()},
            )
        )
    ok = all(e.passed for e in entries if not e.observation)
    fmt = "json" if args.json else args.format
    if fmt == "json":
        payload = {
            "n_max": report.n_max,
            "all_passed": ok,
            "entries": [asdict(e) for e in entries],
        }
        _deliver(_json_text(payload), args.out)
    elif fmt == "text":
        lines = [f"audit up to n={report.n_max}"]
        for e in entries:
            tag = "PASS" if e.passed else "FAIL"
            if e.observation:
                tag += " (observation)"
            lines.append(f"{e.check}: {tag} - {e.description}")
            if not e.passed and e.counterexample is not None:
                lines.append(f"  counterexample: {json.dumps(e.counterexample)}")
        lines.append("result: " + ("all checks passed" if ok else "FAILURES FOUND"))
        _deliver("\n".join(lines) + "\n", args.out)
    else:
        print("error: audit has no csv format", file=sys.stderr)
        return 2
    return 0 if ok else 1


def cmd_iso(args: argparse.Namespace) -> int:
    graphs = []
    for path in (args.file_a, args.file_b):
        with open(path, "r", encoding="utf-8") as fh:
            graphs.append(Graph.from_json(fh.read()))
    same = is_isomorphic(graphs[0], graphs[1])
    if args.format == "json":
        _deliver(_json_text({"isomorphic": same}), args.out)
    elif args.format == "text":
        _deliver(("isomorphic" if same else "non-isomorphic") + "\n", args.out)
    else:
        print("error: iso has no csv format", file=sys.stderr)
        return 2
    return 0 if same else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
