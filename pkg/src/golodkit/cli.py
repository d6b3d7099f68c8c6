"""Command-line interface: every engine as a subcommand.

Exit codes: 0 for a successful computation (verdicts live in the output,
not the exit status), 2 for usage or input errors, 1 for internal errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import traceback
from typing import Any

from . import corpus as corpus_mod
from .criteria import verdict
from .ideals import (
    colon_ideal,
    eliminate_variable_generators,
    ideal_product,
    ideal_sum,
    integral_closure,
    intersect,
    strongly_golod,
)
from .koszul import KoszulEngine, h1_constructive_basis, socle_basis
from .linalg import QQ, FieldSpec
from .parsing import ParseError, format_ideal, format_monomial, parse_ideal
from .poincare import poincare_coefficients, resolve_residue_field, serre_compare
from .rings import RingContext
from .schema import verdict_to_dict
from .searches import SearchConfig, report_to_dict, run_search


class UsageError(ValueError):
    pass


def _context(spec: str) -> RingContext:
    names = tuple(n.strip() for n in spec.split(","))
    if any(not n for n in names):
        raise UsageError(f"bad variable list {spec!r}")
    return RingContext(names)


def _field(label: str) -> FieldSpec:
    try:
        return FieldSpec.from_label(label)
    except ValueError as e:
        raise UsageError(str(e)) from e


def _ideal_arg(parser: argparse.ArgumentParser, name: str = "--ideal") -> None:
    parser.add_argument(name, required=True, help="ideal expression, e.g. \"(x^2, y*z)\"")


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--vars", default="x,y,z", help="comma-separated variable names")
    parser.add_argument("--format", choices=("json", "text"), default="text")


def build_parser() -> argparse.ArgumentParser:
    root = argparse.ArgumentParser(prog="golodkit")
    sub = root.add_subparsers(dest="command", required=True)

    def cmd(name: str, **kw) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kw)
        _common(p)
        return p

    p = cmd("golod", help="full Golodness verdict with certificates")
    _ideal_arg(p)
    p.add_argument("--engines", default="nec,koszul,serre")
    p.add_argument("--field", default="q")
    p.add_argument("--depth", type=int, default=6, help="series comparison order")

    p = cmd("nec", help="scan the colon necessary conditions")
    _ideal_arg(p)

    p = cmd("koszul-betti", help="multigraded homology dimensions")
    _ideal_arg(p)
    p.add_argument("--field", default="q")
    p.add_argument("--lcm-closure", action="store_true")

    p = cmd("koszul-products", help="test triviality of the homology product")
    _ideal_arg(p)
    p.add_argument("--field", default="q")

    p = cmd("monomial-basis", help="search a monomial cycle basis in one strand level")
    _ideal_arg(p)
    p.add_argument("--field", default="q")
    p.add_argument("--p", type=int, required=True, help="exterior level")

    p = cmd("h1-basis", help="constructive basis of the first homology")
    _ideal_arg(p)

    p = cmd("socle-basis", help="constructive basis of the top homology")
    _ideal_arg(p)

    p = cmd("poincare", help="series of the residue field from its resolution")
    _ideal_arg(p)
    p.add_argument("--field", default="q")
    p.add_argument("--depth", type=int, default=5)

    p = cmd("serre-compare", help="resolution series against the series bound")
    _ideal_arg(p)
    p.add_argument("--field", default="q")
    p.add_argument("--depth", type=int, default=5)

    for name, flag in (("colon", "--by"), ("product", "--with"), ("intersect", "--with"), ("sum", "--with")):
        p = cmd(name, help=f"{name} of two ideals")
        _ideal_arg(p)
        p.add_argument(flag, dest="other", required=True, help="second ideal expression")

    p = cmd("closure", help="integral closure")
    _ideal_arg(p)

    p = cmd("strongly-golod", help="test the squared-radical sufficient condition")
    _ideal_arg(p)

    p = cmd("reduce", help="eliminate linear generators")
    _ideal_arg(p)

    p = cmd("search", help="seeded random search")
    p.add_argument("--mode", required=True, choices=("product3", "product4", "closure3", "raw"))
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--gens", default="2:5", help="generator count range LO:HI")
    p.add_argument("--max-exp", type=int, default=4)
    p.add_argument("--field", default="q")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--inject", action="store_true", help="place the known interesting pair at trial 0")

    p = cmd("corpus", help="run or refresh the bundled examples")
    p.add_argument("action", choices=("run", "list", "bless"))
    p.add_argument("names", nargs="*")
    p.add_argument("--all", action="store_true")

    return root


def _emit(payload: dict[str, Any], text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _verdict_text(payload: dict[str, Any]) -> str:
    lines = [f"status: {payload['status']}"]
    lines.append(f"engines: {', '.join(payload['engines']) or '-'}")
    rc = payload["reduced_context"]
    lines.append(f"reduced: {rc['ideal']} in k[{', '.join(rc['variables'])}]")
    for note in payload.get("notes", ()):
        lines.append(f"note: {note}")
    for cert in payload["certificates"]:
        if cert["kind"] == "cond1":
            lines.append(
                "certificate cond1: f={f} in I:({s}), g={g} in I:({t}), "
                "f*g={prod} not in I".format(
                    f=cert["f"]["text"], g=cert["g"]["text"], prod=cert["product"]["text"],
                    s=",".join(cert["subset_s"]), t=",".join(cert["subset_t"]),
                )
            )
        elif cert["kind"] == "cond2":
            lines.append(
                "certificate cond2: f={f} in I:({s}), g={g} in I:({t}), "
                "f*g={prod} not in {v}*[I:({s},{t})]+I".format(
                    f=cert["f"]["text"], g=cert["g"]["text"], prod=cert["product"]["text"],
                    s=",".join(cert["subset_s"]), t=",".join(cert["subset_t"]), v=cert["pivot"],
                )
            )
        elif cert["kind"] == "koszul_product":
            lines.append(
                "certificate koszul_product: nonzero class product at "
                f"{tuple(cert['a']['multidegree'])} p={cert['a']['p']} times "
                f"{tuple(cert['b']['multidegree'])} p={cert['b']['p']} over {cert['field']}"
            )
        elif cert["kind"] == "serre_gap":
            lines.append(
                f"certificate serre_gap: coefficient {cert['index']} is "
                f"{cert['left']} < bound {cert['right']} over {cert['field']}"
            )
    return "\n".join(lines)


def _betti_payload(engine: KoszulEngine, lcm_closure: bool) -> dict[str, Any]:
    table = engine.betti_table(lcm_closure=lcm_closure)
    return {
        "totals": list(table.totals),
        "entries": [
            {"p": p, "multidegree": list(a), "dimension": d}
            for p, a, d in table.entries
        ],
    }


def _terms_payload(terms, context: RingContext) -> list[dict[str, Any]]:
    return [
        {
            "coefficient": format_monomial(t.coefficient, context),
            "subset": [context.names[i] for i in t.subset],
            "multidegree": list(t.multidegree()),
        }
        for t in terms
    ]


def _run(args: argparse.Namespace) -> int:
    fmt = getattr(args, "format", "text")
    if args.command == "corpus":
        return _run_corpus(args, fmt)
    if args.command == "search":
        lo, _, hi = args.gens.partition(":")
        try:
            config = SearchConfig(
                mode=args.mode, trials=args.trials, seed=args.seed,
                gens_lo=int(lo), gens_hi=int(hi or lo), max_exp=args.max_exp,
                field=args.field, depth=args.depth, inject=args.inject,
            )
        except ValueError as e:
            raise UsageError(str(e)) from e
        report = report_to_dict(run_search(config))
        counts = ", ".join(f"{k}={v}" for k, v in sorted(report["counts"].items()))
        text = (
            f"mode {report['mode']}: {report['trials']} trials, {counts}; "
            f"{len(report['archived'])} archived"
        )
        _emit(report, text, fmt)
        return 0

    context = _context(args.vars)
    ideal = parse_ideal(args.ideal, context)

    if args.command == "golod":
        engines = tuple(e.strip() for e in args.engines.split(",") if e.strip())
        start = time.monotonic()
        v = verdict(ideal, engines=engines, field=_field(args.field), serre_order=args.depth)
        payload = verdict_to_dict(v, timing_ms=int(1000 * (time.monotonic() - start)))
        _emit(payload, _verdict_text(payload), fmt)
        return 0

    if args.command == "nec":
        from .criteria import nec_all
        from .schema import certificate_to_dict
        certs = [certificate_to_dict(c, context) for c in nec_all(ideal)]
        payload = {"violations": certs, "count": len(certs)}
        if certs:
            text = "\n".join(
                f"{c['kind']}: {c['f']['text']} * {c['g']['text']} = {c['product']['text']}"
                + (f" (pivot {c['pivot']})" if c["kind"] == "cond2" else "")
                for c in certs
            )
        else:
            text = "no violations"
        _emit(payload, text, fmt)
        return 0

    if args.command == "koszul-betti":
        engine = KoszulEngine(ideal, _field(args.field))
        payload = _betti_payload(engine, args.lcm_closure)
        text = "totals: " + ", ".join(
            f"b{p}={d}" for p, d in enumerate(payload["totals"])
        )
        _emit(payload, text, fmt)
        return 0

    if args.command == "koszul-products":
        engine = KoszulEngine(ideal, _field(args.field))
        report = engine.products_trivial()
        payload: dict[str, Any] = {
            "trivial": report.trivial,
            "pairs_checked": report.pairs_checked,
            "field": report.field_label,
        }
        if report.witness is not None:
            from .schema import certificate_to_dict
            payload["witness"] = certificate_to_dict(report.witness, context)
        text = (
            f"products trivial over {report.field_label}: {report.trivial} "
            f"({report.pairs_checked} pairs)"
        )
        _emit(payload, text, fmt)
        return 0

    if args.command == "monomial-basis":
        engine = KoszulEngine(ideal, _field(args.field))
        report = engine.monomial_cycle_report(args.p)
        payload = {
            "p": report.p,
            "success": report.success,
            "basis": [
                {"multidegree": list(a), "terms": _terms_payload(terms, context)}
                for a, terms in report.basis
            ],
            "failures": [
                {"multidegree": list(f.multidegree), "unspanned_dimension": len(f.unspanned)}
                for f in report.failures
            ],
        }
        if report.success:
            text = f"monomial cycle basis found at level {report.p}"
        else:
            degs = ", ".join(str(tuple(f.multidegree)) for f in report.failures)
            text = f"no monomial cycle basis at level {report.p}; failing degrees: {degs}"
        _emit(payload, text, fmt)
        return 0

    if args.command in ("h1-basis", "socle-basis"):
        terms = h1_constructive_basis(ideal) if args.command == "h1-basis" else socle_basis(ideal)
        payload = {"terms": _terms_payload(terms, context)}
        text = "\n".join(
            f"{t['coefficient']} e_({','.join(t['subset'])})" for t in payload["terms"]
        ) or "empty"
        _emit(payload, text, fmt)
        return 0

    if args.command == "poincare":
        steps = resolve_residue_field(ideal, args.depth, field=_field(args.field))
        coeffs = poincare_coefficients(steps)
        payload = {
            "coefficients": list(coeffs),
            "complete": [s.complete for s in steps],
        }
        _emit(payload, "coefficients: " + ", ".join(map(str, coeffs)), fmt)
        return 0

    if args.command == "serre-compare":
        report = serre_compare(ideal, args.depth, field=_field(args.field))
        payload = {
            "order": report.order,
            "left": list(report.left),
            "right": list(report.right),
            "left_complete": list(report.left_complete),
            "koszul_totals": list(report.koszul_totals),
            "gap_index": report.gap_index,
            "equal_up_to": report.equal_up_to,
        }
        if report.gap_index is None:
            text = f"series agree through order {report.equal_up_to}"
        else:
            i = report.gap_index
            text = f"gap at index {i}: {report.left[i]} < {report.right[i]}"
        _emit(payload, text, fmt)
        return 0

    if args.command in ("colon", "product", "intersect", "sum"):
        other = parse_ideal(args.other, context)
        op = {
            "colon": colon_ideal,
            "product": ideal_product,
            "intersect": intersect,
            "sum": ideal_sum,
        }[args.command]
        result = op(ideal, other)
        text = format_ideal(result, context)
        _emit({"ideal": text}, text, fmt)
        return 0

    if args.command == "closure":
        result = integral_closure(ideal)
        text = format_ideal(result, context)
        _emit({"ideal": text}, text, fmt)
        return 0

    if args.command == "strongly-golod":
        value = strongly_golod(ideal)
        _emit({"strongly_golod": value}, f"strongly golod: {value}", fmt)
        return 0

    if args.command == "reduce":
        reduced, ctx = eliminate_variable_generators(ideal)
        payload = {
            "variables": list(ctx.names),
            "ideal": format_ideal(reduced, ctx),
        }
        text = f"{payload['ideal']} in k[{', '.join(ctx.names)}]"
        _emit(payload, text, fmt)
        return 0

    raise UsageError(f"unknown command {args.command!r}")


def _run_corpus(args: argparse.Namespace, fmt: str) -> int:
    names = None if (args.all or not args.names) else list(args.names)
    if args.action == "list":
        entries = corpus_mod.list_entries()
        payload = {
            "entries": [
                {"name": e.name, "vars": list(e.context.names), "ideal": e.source}
                for e in entries
            ]
        }
        _emit(payload, "\n".join(e.name for e in entries), fmt)
        return 0
    if args.action == "bless":
        written = corpus_mod.bless(names)
        _emit({"written": written}, "\n".join(written), fmt)
        return 0
    ok, results = corpus_mod.run_entries(names)
    payload = {"ok": ok, "results": results}
    lines = []
    for r in results:
        mark = "ok" if r["ok"] else "MISMATCH"
        lines.append(f"{r['name']}: {mark}")
    _emit(payload, "\n".join(lines), fmt)
    return 0 if ok else 1


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _run(args)
    except (UsageError, ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception:
        traceback.print_exc()
        return 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
