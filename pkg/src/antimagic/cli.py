"""Command-line front end: construct, verify, solve, predict, sweep, export-dot.

Exit codes are stable contracts: 0 success/valid, 2 parse or malformed input,
3 construction failure, 4 invalid labeling, 1 sweep disagreement.  The env
var ANTIMAGIC_SOLVER_CAP overrides the default edge-count cap for the solver.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations_with_replacement, product

from .bounds import lower_bound
from .constructions import UnsupportedConstruction, construct
from .graphs import (
    FamilyDomainError,
    FamilySpec,
    FamilySyntaxError,
    Graph,
    build_graph,
    parse_family_spec,
    read_edge_list,
    to_dot,
)
from .labeling import Certificate, EdgeLabeling, induced_colors, verify_local_antimagic
from .oracle import predicted
from .rectangles import NonexistentRectangle
from .solver import (
    DEFAULT_EXACT_Q_CAP,
    DEFAULT_TARGET_Q_CAP,
    SearchBudget,
    exact_chi_la,
    find_labeling_with_color_budget,
)

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_PARSE = 2
EXIT_CONSTRUCT = 3
EXIT_INVALID = 4


def _solver_cap(default: int) -> int:
    raw = os.environ.get("ANTIMAGIC_SOLVER_CAP")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def _write_out(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_spec_or_exit(text: str) -> FamilySpec:
    try:
        return parse_family_spec(text)
    except (FamilySyntaxError, FamilyDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _cmd_construct(args) -> int:
    spec = _parse_spec_or_exit(args.spec)
    try:
        cert = construct(spec)
    except (UnsupportedConstruction, NonexistentRectangle, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCT
    _write_out(cert.to_json(), args.out)
    return EXIT_OK if cert.valid else EXIT_INVALID


def _load_graph_arg(path: str) -> Graph:
    with open(path) as fh:
        return read_edge_list(fh.read())


def _parse_labels_arg(raw: str, q: int) -> EdgeLabeling:
    if raw.startswith("@"):
        with open(raw[1:]) as fh:
            raw = fh.read()
    values = [int(tok) for tok in raw.replace("\n", ",").split(",") if tok.strip()]
    if len(values) != q:
        raise ValueError(f"expected {q} labels, got {len(values)}")
    return EdgeLabeling(tuple(values))


def _cmd_verify(args) -> int:
    try:
        if args.cert:
            with open(args.cert) as fh:
                cert = Certificate.from_json(fh.read())
            if cert.spec is None:
                print("error: certificate has no family spec to rebuild the graph from",
                      file=sys.stderr)
                return EXIT_PARSE
            g = build_graph(parse_family_spec(cert.spec))
            labeling = EdgeLabeling(cert.labels)
        else:
            g = _load_graph_arg(args.graph)
            labeling = _parse_labels_arg(args.labels, g.size)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    profile = induced_colors(g, labeling)
    verdict = verify_local_antimagic(g, labeling)
    doc = {
        "valid": verdict.valid,
        "c": profile.count,
        "colors": {g.names[v]: profile.sums[v] for v in range(g.order)},
        "violations": [[u, v] for u, v in verdict.violations],
    }
    _write_out(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK if verdict.valid else EXIT_INVALID


def _budget_from_args(args) -> SearchBudget:
    return SearchBudget(
        node_limit=args.max_nodes, time_limit=args.max_seconds, width=args.width
    )


def _cmd_solve(args) -> int:
    if args.spec:
        spec = _parse_spec_or_exit(args.spec)
        g = build_graph(spec)
    else:
        try:
            g = _load_graph_arg(args.graph)
        except (OSError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        spec = None
    budget = _budget_from_args(args)
    if args.target is not None:
        cap = _solver_cap(DEFAULT_TARGET_Q_CAP)
        out = find_labeling_with_color_budget(g, args.target, budget, q_cap=cap)
        doc = {
            "target": args.target,
            "status": out.status,
            "labels": list(out.labeling.labels) if out.labeling else None,
            "nodes": out.nodes,
        }
    else:
        cap = _solver_cap(DEFAULT_EXACT_Q_CAP)
        result = exact_chi_la(g, budget, spec=spec, q_cap=cap)
        doc = {
            "status": result.status,
            "lo": result.lo,
            "hi": result.hi,
            "value": result.lo if result.status == "exact" else None,
            "lower_bound_source": result.lower_bound_source,
            "nodes": result.nodes,
            "witness": json.loads(result.witness.to_json()) if result.witness else None,
        }
    _write_out(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def _cmd_predict(args) -> int:
    spec = _parse_spec_or_exit(args.spec)
    doc = {"spec": spec.serialize(), **predicted(spec).as_dict()}
    _write_out(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def _cmd_export_dot(args) -> int:
    spec = _parse_spec_or_exit(args.spec)
    _write_out(to_dot(build_graph(spec)), args.out)
    return EXIT_OK


def _parse_ranges(raw: str) -> dict[str, tuple[int, int]]:
    ranges: dict[str, tuple[int, int]] = {}
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        name, _, span = part.partition("=")
        lo, colon, hi = span.partition(":")
        ranges[name.strip()] = (int(lo), int(hi) if colon else int(lo))
    return ranges


def _grid_specs(family: str, ranges: dict[str, tuple[int, int]]) -> list[FamilySpec]:
    """Enumerate the parameter grid for a family, in deterministic order."""

    def span(name: str, default: tuple[int, int] | None = None) -> range:
        if name not in ranges:
            if default is None:
                raise ValueError(f"sweep over {family} needs a range for {name!r}")
            lo, hi = default
        else:
            lo, hi = ranges[name]
        return range(lo, hi + 1)

    specs: list[FamilySpec] = []
    if family in ("C", "GB"):
        for r in span("r"):
            for tup in combinations_with_replacement(reversed(span("a")), r):
                specs.append(FamilySpec(family, tuple(sorted(tup, reverse=True))))
    elif family == "H":
        for r in span("r"):
            for tup in combinations_with_replacement(reversed(span("a")), r):
                for k in span("k"):
                    specs.append(FamilySpec("H", tuple(sorted(tup, reverse=True)), (k,)))
    elif family == "GP":
        for r in span("r"):
            for m in span("m"):
                specs.append(FamilySpec("GP", (r,), (m,)))
    elif family in ("T", "Corona"):
        for m in span("m"):
            for n in span("n"):
                specs.append(FamilySpec(family, (m, n)))
    elif family == "K":
        for m in span("m"):
            for tup in combinations_with_replacement(reversed(span("n")), m):
                ns = tuple(sorted(tup, reverse=True))
                if sum(ns) >= 1 and m + sum(ns) >= 3:
                    specs.append(FamilySpec("K", (m,), ns))
    elif family == "Ct":
        for n1 in span("n1"):
            for n2 in span("n2"):
                for n3 in span("n3"):
                    if n1 + n2 + n3 >= 2:
                        specs.append(FamilySpec("Ct", (3,), (n1, n2, n3)))
    elif family in ("Path", "Cycle", "Star"):
        for n in span("n"):
            specs.append(FamilySpec(family, (n,)))
    else:
        raise ValueError(f"unknown family {family!r}")
    # drop parameterizations that fail domain validation (e.g. duplicates)
    out = []
    seen = set()
    for spec in specs:
        key = spec.serialize()
        if key in seen:
            continue
        seen.add(key)
        try:
            build_graph(spec)
        except (FamilyDomainError, ValueError):
            continue
        out.append(spec)
    return out


def _sweep_row(payload: tuple[str, int, SearchBudget]) -> dict:
    spec_text, solve_cap, budget = payload
    spec = parse_family_spec(spec_text)
    g = build_graph(spec)
    lb, _ = lower_bound(g, spec)
    row: dict = {
        "spec": spec_text,
        "q": g.size,
        "n": g.order,
        "lower": lb,
        "constructed_c": "",
        "predicted": "",
        "solver": "",
        "agree": "yes",
    }
    problems: list[str] = []
    cert = None
    try:
        cert = construct(spec)
        row["constructed_c"] = cert.c
        if not cert.valid:
            problems.append("construction invalid")
    except (UnsupportedConstruction, NonexistentRectangle):
        pass
    pred = predicted(spec)
    row["predicted"] = pred.render()
    flagged = bool(pred.caveats) or spec.kind == "H"
    if cert is not None and cert.valid:
        if cert.c < lb:
            problems.append("construction beats the lower bound")
        if not flagged and pred.hi is not None and cert.c > pred.hi:
            problems.append("construction exceeds predicted upper end")
        if not flagged and pred.kind == "exact" and cert.provenance != "search-fallback" \
                and cert.c != pred.value:
            problems.append("construction misses exact prediction")
    solver_value = None
    if 0 < solve_cap and g.size <= solve_cap:
        result = exact_chi_la(g, budget, spec=spec, q_cap=solve_cap)
        if result.status == "exact":
            solver_value = result.lo
            row["solver"] = result.lo
        else:
            row["solver"] = f"[{result.lo},{result.hi}]"
    if solver_value is not None:
        if solver_value < lb:
            problems.append("solver beats the lower bound")
        if cert is not None and cert.valid and solver_value > cert.c:
            problems.append("solver exceeds construction")
        if not flagged and not pred.contains(solver_value):
            problems.append("solver outside prediction")
    row["agree"] = "yes" if not problems else "no: " + "; ".join(problems)
    return row


def _cmd_sweep(args) -> int:
    try:
        ranges = _parse_ranges(args.range or "")
        specs = _grid_specs(args.family, ranges)
    except (ValueError, FamilyDomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    budget = _budget_from_args(args)
    cap = args.solve_cap if args.solve_cap is not None else _solver_cap(0)
    payloads = [(spec.serialize(), cap, budget) for spec in specs]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_row, payloads))
    else:
        rows = [_sweep_row(p) for p in payloads]
    fields = ["spec", "q", "n", "lower", "constructed_c", "predicted", "solver", "agree"]
    if args.human:
        widths = {f: max(len(f), *(len(str(r[f])) for r in rows)) if rows else len(f)
                  for f in fields}
        lines = ["  ".join(f.ljust(widths[f]) for f in fields)]
        for r in rows:
            lines.append("  ".join(str(r[f]).ljust(widths[f]) for f in fields))
        _write_out("\n".join(lines) + "\n", args.out)
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields)
        writer.writeheader()
        writer.writerows(rows)
        _write_out(buf.getvalue(), args.out)
    disagreements = [r for r in rows if str(r["agree"]).startswith("no")]
    return EXIT_DISAGREE if disagreements else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antimagic",
        description="Construct, verify, and search local antimagic edge labelings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build and certify a labeling for a family spec")
    p.add_argument("--spec", required=True, help='family spec, e.g. "C(10,10,4)"')
    p.add_argument("--out", help="write the certificate JSON here instead of stdout")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="verify a certificate or an explicit labeling")
    p.add_argument("--cert", help="certificate JSON file")
    p.add_argument("--graph", help="edge-list file (header 'p <n> <q>', lines 'u v')")
    p.add_argument("--labels", help="comma-separated labels, or @file")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("solve", help="exact chi_la, or a targeted color-budget search")
    p.add_argument("--spec")
    p.add_argument("--graph")
    p.add_argument("--target", type=int, help="search for a labeling with <= C colors")
    p.add_argument("--max-nodes", type=int, default=2_000_000)
    p.add_argument("--max-seconds", type=float, default=60.0)
    p.add_argument("--width", type=int, default=1, help="parallel branch width")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("predict", help="the claimed chi_la value or interval for a spec")
    p.add_argument("--spec", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("sweep", help="construct+verify+predict (and solve) over a grid")
    p.add_argument("--family", required=True, help="family kind, e.g. C, T, Corona, K")
    p.add_argument("--range", help='parameter ranges, e.g. "m=2:6,n=3:6" or "r=2:4,a=3:8"')
    p.add_argument("--solve-cap", type=int, default=None,
                   help="run the exact solver on rows with q <= CAP (0 disables)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-nodes", type=int, default=500_000)
    p.add_argument("--max-seconds", type=float, default=10.0)
    p.add_argument("--width", type=int, default=1)
    p.add_argument("--human", action="store_true", help="aligned text instead of CSV")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("export-dot", help="write the graph in DOT format")
    p.add_argument("--spec", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.cert and not (args.graph and args.labels):
        parser.error("verify needs --cert or both --graph and --labels")
    if args.command == "solve" and bool(args.spec) == bool(args.graph):
        parser.error("solve needs exactly one of --spec or --graph")
    try:
        return args.func(args)
    except SystemExit as exc:  # argparse or helpers may raise with a code
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
