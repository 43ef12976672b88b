"""Command-line entry point: evaluate formulas, run suites, list rings and merge reports."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace
from pathlib import Path
from typing import Any, Sequence

from .core import DEFAULT_BUDGET, BadBound, Budget, DefpowError, TruthValue, Verdict
from .formulas import FORMULAS
from .logic import ParseError, eval_term, evaluate, parse, parse_term, pretty
from .rings import CATALOG, build
from .suites import CITES, SUITES, jsonable, run_suite

EXIT_CODES = {Verdict.TRUE: 0, Verdict.FALSE: 1, Verdict.UNKNOWN: 2}
EXIT_ERROR = 3


def _int_range(text: str) -> tuple[int, int]:
    """Parse ``LO..HI`` (or ``LO,HI``) into a pair."""
    sep = ".." if ".." in text else ","
    try:
        lo, hi = (int(v) for v in text.strip("[]").split(sep))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None
    return lo, hi


def _divisor_box(text: str) -> int:
    key, _, value = text.partition("=")
    if key != "deg" or not value.lstrip("-").isdigit():
        raise argparse.ArgumentTypeError(f"expected deg=N, got {text!r}")
    return int(value)


def load_config(path: str | None) -> dict[str, Any]:
    if not path:
        return {}
    with open(path) as fh:
        return json.load(fh)


def make_budget(args: argparse.Namespace, config: dict[str, Any]) -> Budget:
    fields: dict[str, Any] = {}
    for key, value in config.get("budget", {}).items():
        fields[key] = tuple(value) if isinstance(value, list) else value
    for key in ("deg_box", "coeff_box", "exp_cap", "int_box"):
        value = getattr(args, key, None)
        if value is not None:
            fields[key] = value
    if getattr(args, "divisor_box", None) is not None:
        fields["deg_box"] = args.divisor_box
    return replace(DEFAULT_BUDGET, **fields)


def resolve_seed(args: argparse.Namespace, config: dict[str, Any]) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    if os.environ.get("DEFPOW_SEED"):
        return int(os.environ["DEFPOW_SEED"])
    return int(config.get("seed", 0))


def resolve_ring(spec: str, config: dict[str, Any]):
    return build(config.get("rings", {}).get(spec, spec))


def _verdict_json(tv: TruthValue) -> dict[str, Any]:
    return {"verdict": str(tv.verdict), "evidence": jsonable(tv.evidence), "cite": tv.cite, "note": tv.note}


# subcommands

def cmd_eval(args: argparse.Namespace, config: dict[str, Any]) -> int:
    ring = resolve_ring(args.ring, config)
    budget = make_budget(args, config)
    if args.formula in FORMULAS:
        builder, _ = FORMULAS[args.formula]
        phi = builder(ring, budget.exp_cap)
    else:
        phi = parse(args.formula)
    env = {}
    for item in args.let or []:
        name, _, text = item.partition("=")
        env[name] = eval_term(parse_term(text), {}, ring)
    tv = evaluate(phi, ring, env, budget)
    if args.json:
        out = {"ring": ring.spec, "formula": pretty(phi), **_verdict_json(tv)}
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print(tv.verdict)
        if tv.evidence is not None or tv.cite or tv.note:
            print(json.dumps({"evidence": jsonable(tv.evidence), "cite": tv.cite, "note": tv.note}, sort_keys=True))
    return EXIT_CODES[tv.verdict]


def cmd_suite(args: argparse.Namespace, config: dict[str, Any]) -> int:
    budget = make_budget(args, config)
    seed = resolve_seed(args, config)
    names = list(SUITES) if args.name == "all" else [args.name]
    failed = False
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
        report = run_suite(name, budget, seed, args.jobs)
        failed = failed or not report.passed
        text = report.to_json(timing=not args.no_timing)
        if args.out:
            out = Path(args.out)
            target = out / f"{name}.json" if (out.is_dir() or len(names) > 1) else out
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(text + "\n")
        if args.json:
            print(text)
        else:
            s = report.summary
            print(f"{name}: {s['confirmed']} confirmed, {s['refuted-as-expected']} refuted-as-expected, "
                  f"{s['unknown']} unknown, {s['failed']} failed")
            for c in report.cases:
                if args.verbose or str(c.outcome) in ("failed", "unknown"):
                    print(f"  [{c.outcome}] {c.id}: {c.claim} ({c.verdict}; cite {c.cite})")
    return 1 if failed else 0


def cmd_suites(args: argparse.Namespace, config: dict[str, Any]) -> int:
    for name, (_, description) in SUITES.items():
        print(f"{name:14s} {description}")
    return 0


def cmd_rings(args: argparse.Namespace, config: dict[str, Any]) -> int:
    for family, example, description in CATALOG:
        print(f"{family:22s} e.g. {example:22s} {description}")
    for alias, spec in config.get("rings", {}).items():
        print(f"{alias:22s} = {spec}")
    return 0


def cmd_formulas(args: argparse.Namespace, config: dict[str, Any]) -> int:
    for name, (_, free) in FORMULAS.items():
        print(f"{name:10s} free variables: {', '.join(free)}")
    return 0


def cmd_cites(args: argparse.Namespace, config: dict[str, Any]) -> int:
    for tag, text in CITES.items():
        print(f"{tag}: {text}")
    return 0


def merge_reports(reports: Sequence[dict[str, Any]]) -> str:
    lines = ["| suite | case | claim | cite | verdict | outcome |", "|---|---|---|---|---|---|"]
    for rep in reports:
        for c in rep["cases"]:
            claim = c["claim"].replace("|", "\\|")
            lines.append(f"| {rep['suite']} | {c['id']} | {claim} | {c['cite']} | {c['verdict']} | {c.get('outcome', '')} |")
    totals: dict[str, int] = {}
    for rep in reports:
        for key, value in rep["summary"].items():
            totals[key] = totals.get(key, 0) + value
    lines.append("")
    lines.append("Totals: " + ", ".join(f"{k} {v}" for k, v in totals.items()))
    return "\n".join(lines)


def cmd_report(args: argparse.Namespace, config: dict[str, Any]) -> int:
    reports = []
    for path in args.files:
        with open(path) as fh:
            reports.append(json.load(fh))
    print(merge_reports(reports))
    return 0


def _budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--deg-box", dest="deg_box", type=int, help="degree bound for polynomial witness boxes")
    p.add_argument("--coeff-box", dest="coeff_box", type=_int_range, help="coefficient range LO..HI")
    p.add_argument("--exp-cap", dest="exp_cap", type=int, help="exponent cap for power searches")
    p.add_argument("--int-box", dest="int_box", type=_int_range, help="integer sample range LO..HI")
    p.add_argument("--divisor-box", dest="divisor_box", type=_divisor_box, help="divisor box, e.g. deg=3")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="defpow", description=__doc__)
    parser.add_argument("--config", help="JSON file with budget, ring aliases and seed")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a formula over a ring")
    p.add_argument("-r", "--ring", required=True, help="ring spec, e.g. poly:parity2")
    p.add_argument("-f", "--formula", required=True, help="formula text or a registered formula name")
    p.add_argument("--let", action="append", metavar="VAR=TERM", help="bind a free variable")
    p.add_argument("--json", action="store_true")
    _budget_flags(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("suite", help="run a verification suite (or 'all')")
    p.add_argument("name")
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write the JSON report to this file or directory")
    p.add_argument("--no-timing", action="store_true", help="omit runtimes for byte-identical reports")
    p.add_argument("-v", "--verbose", action="store_true")
    _budget_flags(p)
    p.set_defaults(func=cmd_suite)

    for name, func, text in (("suites", cmd_suites, "list suites"), ("rings", cmd_rings, "list ring families"),
                             ("formulas", cmd_formulas, "list named formulas"),
                             ("cites", cmd_cites, "list citation tags")):
        sub.add_parser(name, help=text).set_defaults(func=func)

    p = sub.add_parser("report", help="merge JSON suite reports into a markdown table")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        return args.func(args, config)
    except (DefpowError, ParseError, KeyError, OSError, json.JSONDecodeError, BadBound, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
