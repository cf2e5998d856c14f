"""Command-line front end.

Subcommands: validate, card, entropy, sim, sub, depth, rank, algebra, check.
Numbers are computed by the library only; this module formats them. Human
output shows measures with two decimals, JSON output carries raw floats.

Exit codes: 0 success, 1 an identity failed under --strict (or the known-false
claim under --strict-paper-claims), 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import ROUND_DOWN, ROUND_HALF_UP, Decimal
from pathlib import Path

from . import core, measures
from .dataset import Workspace, fixture_path, load_workspace, serialize_workspace
from .errors import SoftSetError
from .identities import check_on_sets, get_identity, identity_names, sweep
from .measures import EvaluationDomain

_ROUNDING = {"down": ROUND_DOWN, "half-up": ROUND_HALF_UP}

_ALGEBRA = {
    "complement": (1, core.complement),
    "union": (2, core.union),
    "intersection": (2, core.intersection),
    "and": (2, core.and_product),
    "or": (2, core.or_product),
    "reduce-left": (2, core.reduce_left),
    "reduce-right": (2, core.reduce_right),
}


class UsageError(Exception):
    pass


# -- formatting -------------------------------------------------------------------


def fmt_measure(x: float, rounding: str = "down") -> str:
    """Two-decimal display of a measure component.

    The default truncates, which is how the published tables print (0.9/2.1
    shows as 0.42, 2/3 as 0.66). Float noise is removed before cutting so that
    0.6000000000000001 and 0.5999999999999999 both show as 0.60.
    """
    return str(Decimal(repr(round(x, 9))).quantize(Decimal("0.01"), _ROUNDING[rounding]))


def fmt_count(x: float) -> str:
    """Sigma counts print in shortest form: 3 -> "3", 1.9 -> "1.9"."""
    text = repr(round(x, 9))
    return text[:-2] if text.endswith(".0") else text


def _pair(values, fmt) -> str:
    return "(" + ", ".join(fmt(v) for v in values) + ")"


# -- argument handling ----------------------------------------------------------------


def _selected(args) -> list[str]:
    names: list[str] = []
    for item in args.set or []:
        names.append(item)
    for group in args.sets or []:
        names.extend(n.strip() for n in group.split(",") if n.strip())
    return names


def _load(args) -> Workspace:
    if not args.dataset:
        raise UsageError("-d/--dataset is required")
    path = Path(args.dataset)
    if not path.exists() and path.name == args.dataset and fixture_path(args.dataset).exists():
        path = fixture_path(args.dataset)  # bundled fixture by bare name, e.g. -d paper.json
    try:
        return load_workspace(path, check_support=not args.no_support_check)
    except OSError as exc:
        raise UsageError(f"cannot read {args.dataset}: {exc.strerror or exc}") from None


def _pick(ws: Workspace, args, count: int | None = None, *, default_all: bool = True) -> list[tuple[str, core.SoftHybridSet]]:
    names = _selected(args)
    if not names:
        if not default_all:
            raise UsageError(f"--set/--sets: expected {count} set name(s)")
        names = list(ws.sets)
    if count is not None and len(names) != count:
        raise UsageError(f"--set/--sets: expected {count} set name(s), got {len(names)}")
    return [(n, ws[n]) for n in names]


def _emit_json(args, results: list[dict], **extra) -> None:
    doc = {"command": args.argv, "results": results, **extra}
    print(json.dumps(doc, indent=2))


def _measure_record(kind, names, pair, rounding, **extra) -> dict:
    return {"kind": kind, "sets": names, "raw": list(pair), "display": [fmt_measure(v, rounding) for v in pair], **extra}


# -- subcommands ------------------------------------------------------------------------


def cmd_validate(args) -> int:
    ws = _load(args)
    if args.format == "json":
        _emit_json(args, [{"set": n, "variant": s.variant.value, "shape": list(s.shape)} for n, s in ws.sets.items()])
    else:
        print(f"ok: {len(ws.sets)} set(s) over |U|={len(ws.universe)}, |E|={len(ws.pspace)}")
        for n, s in ws.sets.items():
            print(f"  {n}: {s.variant.value}")
    return 0


def cmd_card(args) -> int:
    ws = _load(args)
    rows = [(n, measures.cardinality(s)) for n, s in _pick(ws, args)]
    if args.format == "json":
        _emit_json(args, [{"kind": "card", "sets": [n], "raw": list(p), "display": [fmt_count(v) for v in p]} for n, p in rows])
    else:
        for n, p in rows:
            print(f"card({n}) = {_pair(p, fmt_count)}")
    return 0


def cmd_entropy(args) -> int:
    ws = _load(args)
    domain = EvaluationDomain(args.domain)
    rows = [(n, measures.entropy(s, domain)) for n, s in _pick(ws, args)]
    if args.format == "json":
        _emit_json(args, [_measure_record("entropy", [n], p, args.rounding, domain=domain.value) for n, p in rows])
    else:
        for n, p in rows:
            print(f"entropy({n}) [{domain}] = {_pair(p, lambda v: fmt_measure(v, args.rounding))}")
    return 0


def _binary_measure(args, kind, func) -> int:
    ws = _load(args)
    (a, s), (b, t) = _pick(ws, args, 2, default_all=False)
    p = func(s, t)
    if args.format == "json":
        _emit_json(args, [_measure_record(kind, [a, b], p, args.rounding)])
    else:
        print(f"{kind}({a}, {b}) = {_pair(p, lambda v: fmt_measure(v, args.rounding))}")
    return 0


def cmd_sim(args) -> int:
    return _binary_measure(args, "sim", measures.similarity)


def cmd_sub(args) -> int:
    return _binary_measure(args, "sub", measures.subsethood)


def cmd_depth(args) -> int:
    ws = _load(args)
    rows = []
    for n, s in _pick(ws, args):
        d = measures.depth(s)
        rows.append((n, d, measures.depth_norm(d)))
    if args.format == "json":
        _emit_json(args, [{"kind": "depth", "sets": [n], "raw": list(d), "norm": norm} for n, d, norm in rows])
    else:
        for n, d, norm in rows:
            print(f"depth({n}) = {_pair(d, fmt_count)}  norm {fmt_measure(norm, args.rounding)}")
    return 0


def cmd_rank(args) -> int:
    ws = _load(args)
    ranked = measures.rank_representatives(_pick(ws, args))
    if args.format == "json":
        _emit_json(
            args,
            [
                {"rank": r.rank, "set": r.name, "depth": list(r.depth), "norm": r.norm, "tie_group": r.tie_group}
                for r in ranked
            ],
        )
        return 0
    width = max(len(r.name) for r in ranked)
    print(f"{'rank':<5} {'set':<{width}}  {'depth':<16} norm")
    for r in ranked:
        print(f"{r.rank:<5} {r.name:<{width}}  {_pair(r.depth, fmt_count):<16} {fmt_measure(r.norm, args.rounding)}")
    print("ranking: " + ", ".join(f"{r.name}({fmt_measure(r.norm, args.rounding)})" for r in ranked))
    return 0


def cmd_algebra(args) -> int:
    arity, func = _ALGEBRA[args.op]
    ws = _load(args)
    picked = _pick(ws, args, arity, default_all=False)
    result = func(*(s for _, s in picked))
    name = args.name or f"{args.op}(" + ",".join(n for n, _ in picked) + ")"
    sys.stdout.write(serialize_workspace(Workspace(result.universe, result.pspace, {name: result})))
    return 0


def _sweep_record(res) -> dict:
    rec = {
        "cases": res.cases,
        "vacuous": res.vacuous,
        "failures": res.failures,
        "max_residual": res.max_residual,
        "domain": res.domain.value,
    }
    if res.first_failure is not None:
        rec["first_failure"] = res.first_failure.inputs
    return rec


def cmd_check(args) -> int:
    if args.identity and args.all:
        raise UsageError("--identity and --all are mutually exclusive")
    names = args.identity or identity_names()
    for n in names:
        get_identity(n)
    domain = EvaluationDomain(args.domain)
    ws = _load(args) if args.dataset else None
    picked = _pick(ws, args) if ws is not None else []

    records = []
    failed = claim_failed = False
    for n in names:
        ident = get_identity(n)
        rec: dict = {"identity": n, "paper_claim": ident.paper_claim, "description": ident.description}
        ok = True
        if picked:
            reports = check_on_sets(n, picked, domain)
            bad = [r for r in reports if not r.holds]
            rec["fixtures"] = {"cases": len(reports), "failures": len(bad)}
            if bad:
                rec["fixtures"]["first_failure"] = {"inputs": bad[0].inputs, "residual": bad[0].residual}
            ok = ok and not bad
        if args.cases > 0:
            res = sweep(n, args.cases, args.seed, domain)
            rec["sweep"] = _sweep_record(res)
            ok = ok and res.holds
        rec["verdict"] = "holds" if ok else "fails"
        if not ok:
            if ident.paper_claim:
                claim_failed = True
            else:
                failed = True
        records.append(rec)

    if args.format == "json":
        _emit_json(args, records)
    else:
        for rec in records:
            if rec["paper_claim"]:
                tag = "INFO" if rec["verdict"] == "fails" else "PASS"
            else:
                tag = "PASS" if rec["verdict"] == "holds" else "FAIL"
            parts = []
            if "fixtures" in rec:
                f = rec["fixtures"]
                parts.append(f"fixtures {f['cases'] - f['failures']}/{f['cases']}")
            if "sweep" in rec:
                s = rec["sweep"]
                parts.append(f"sweep {s['cases'] - s['failures']}/{s['cases']} ({s['vacuous']} vacuous)")
            line = f"{tag} {rec['identity']}: " + ", ".join(parts)
            if rec["paper_claim"] and rec["verdict"] == "fails":
                line += " -- known-false claim, reported for information"
            print(line)
            example = rec.get("fixtures", {}).get("first_failure", {}).get("inputs") or rec.get("sweep", {}).get(
                "first_failure"
            )
            if rec["verdict"] == "fails" and example:
                print(f"    e.g. {example}")
    if failed and args.strict:
        return 1
    if claim_failed and args.strict_paper_claims:
        return 1
    return 0


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-d", "--dataset", metavar="FILE", help="workspace JSON file")
    common.add_argument("--set", action="append", metavar="NAME", help="select a set (repeatable)")
    common.add_argument("--sets", action="append", metavar="A,B,...", help="select sets by comma-separated names")
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--rounding", choices=tuple(_ROUNDING), default="down", help="two-decimal display rule")
    common.add_argument(
        "--no-support-check",
        action="store_true",
        help="accept value grades under parameters of grade 0 (e.g. reloading complements)",
    )
    domain = argparse.ArgumentParser(add_help=False)
    domain.add_argument("--domain", choices=[d.value for d in EvaluationDomain], default="support")

    parser = argparse.ArgumentParser(prog="softhybrid", description="Soft hybrid set measures and identities.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    sub.add_parser("validate", parents=[common], help="parse and validate a workspace").set_defaults(func=cmd_validate)
    sub.add_parser("card", parents=[common], help="cardinality pairs").set_defaults(func=cmd_card)
    sub.add_parser("entropy", parents=[common, domain], help="entropy pairs").set_defaults(func=cmd_entropy)
    sub.add_parser("sim", parents=[common], help="similarity of two sets").set_defaults(func=cmd_sim)
    sub.add_parser("sub", parents=[common], help="subsethood of the first set in the second").set_defaults(func=cmd_sub)
    sub.add_parser("depth", parents=[common], help="depth pairs and norms").set_defaults(func=cmd_depth)
    sub.add_parser("rank", parents=[common], help="rank sets by depth norm").set_defaults(func=cmd_rank)

    p = sub.add_parser("algebra", parents=[common], help="apply an operation and emit the result as a workspace")
    p.add_argument("op", choices=tuple(_ALGEBRA))
    p.add_argument("--name", help="name of the result set")
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("check", parents=[common, domain], help="check theorem identities")
    p.add_argument("--identity", action="append", metavar="NAME", help="identity to check (repeatable)")
    p.add_argument("--all", action="store_true", help="check every registered identity (the default)")
    p.add_argument("--list", action="store_true", help="list registered identities and exit")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
    p.add_argument("--cases", type=int, default=1000, help="random cases per identity (0 disables sweeps)")
    p.add_argument("--strict", action="store_true", help="exit 1 if any identity fails")
    p.add_argument("--strict-paper-claims", action="store_true", help="also exit 1 if the known-false claim fails")
    p.set_defaults(func=cmd_check)
    return parser


def _list_identities() -> int:
    for n in identity_names():
        ident = get_identity(n)
        flag = " [known-false claim]" if ident.paper_claim else ""
        print(f"{n}{flag}: {ident.description}")
    return 0


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.argv = argv
    if args.command == "check" and args.list:
        return _list_identities()
    if args.command == "check" and args.cases < 0:
        print("error: --cases must be >= 0", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"softhybrid {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except SoftSetError as exc:
        print(f"softhybrid {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
