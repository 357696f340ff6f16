"""Command-line front end: check, convert, enumerate, cross-validate.

Exit codes: 0 when the run passes (or a count/enumeration succeeds),
1 when a checked property fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .correspondence import ValidationError, phi, psi
from .enumeration import (
    DEFAULT_ORACLE_LIMIT,
    FILTERS,
    OracleLimitError,
    cross_validate,
    enumerate_systems,
)
from .graphs import GraphFormatError, parse_graph
from .groupoids import (
    DEFAULT_WITNESS_LIMIT,
    AxiomReport,
    OpTable,
    TableFormatError,
    check_simple,
    check_smooth,
    check_semismooth,
    check_t1,
    check_t2,
    is_on_graph,
    parse_table,
    render_table,
)
from .systems import (
    SystemFormatError,
    check_R3,
    check_R4,
    check_R5,
    parse_system,
    partition_reports,
    render_system,
)

_CLASS_LABELS = {"t3": "simple", "t4": "smooth", "t5": "semi-smooth",
                 "R3": "simple", "R4": "smooth", "R5": "semi-smooth"}


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _report_dict(report: AxiomReport) -> dict:
    return {"holds": report.holds, "witnesses": [list(w) for w in report.witnesses]}


def _axiom_line(report: AxiomReport) -> str:
    label = _CLASS_LABELS.get(report.axiom)
    name = f"{report.axiom} ({label})" if label else report.axiom
    if report.holds:
        return f"{name}: pass"
    shown = ", ".join(str(w) for w in report.witnesses)
    return f"{name}: FAIL  witnesses: {shown}"


def _classification(simple: bool, smooth: bool, semismooth: bool) -> list[str]:
    return [
        "simple" if simple else "not simple",
        "smooth" if smooth else "not smooth",
        "semi-smooth" if semismooth else "not semi-smooth",
    ]


def _routing_lines(table: OpTable) -> list[str]:
    lines = ["next-hop table (row u: next hop from u toward each v):"]
    for u in range(table.n):
        hops = " ".join(str(x) for x in table.rows()[u])
        lines.append(f"  from {u}: {hops}")
    return lines


def _cmd_check_groupoid(args) -> dict:
    table = parse_table(_read(args.table))
    graph = parse_graph(_read(args.graph)) if args.graph else None
    wl = args.witness_limit
    reports = [
        check_t1(table, wl),
        check_t2(table, wl),
        check_simple(table, wl),
        check_smooth(table, wl),
        check_semismooth(table, wl),
    ]
    on_graph = is_on_graph(table, graph) if graph is not None else None
    travel = reports[0].holds and reports[1].holds
    outcome = "pass" if travel and on_graph is not False else "fail"

    lines = [_axiom_line(r) for r in reports]
    if on_graph is not None:
        lines.append(f"on-graph: {'pass' if on_graph else 'FAIL'}")
    lines.append(f"travel groupoid: {'yes' if travel else 'no'}")
    classification = None
    if travel:
        classification = _classification(
            reports[2].holds, reports[3].holds, reports[4].holds
        )
        lines.append("classification: " + ", ".join(classification))
    if args.as_routing:
        lines.extend(_routing_lines(table))

    details = {
        "axioms": {r.axiom: _report_dict(r) for r in reports},
        "on_graph": on_graph,
        "travel_groupoid": travel,
        "classification": classification,
    }
    inputs = {"table": args.table}
    if args.graph:
        inputs["graph"] = args.graph
    return {
        "command": "check-groupoid",
        "inputs": inputs,
        "outcome": outcome,
        "details": details,
        "lines": lines,
    }


def _cmd_check_tps(args) -> dict:
    system = parse_system(_read(args.system))
    graph = parse_graph(_read(args.graph))
    wl = args.witness_limit
    p_reports = partition_reports(system, graph, wl)
    r_reports = [
        check_R3(system, graph, wl),
        check_R4(system, graph, wl),
        check_R5(system, graph, wl),
    ]
    valid = all(r.holds for r in p_reports)
    outcome = "pass" if valid else "fail"

    lines = [_axiom_line(r) for r in p_reports + r_reports]
    lines.append(f"T-partition system: {'yes' if valid else 'no'}")
    classification = None
    if valid:
        classification = _classification(*(r.holds for r in r_reports))
        lines.append("classification: " + ", ".join(classification))

    details = {
        "axioms": {r.axiom: _report_dict(r) for r in p_reports + r_reports},
        "tpartition_system": valid,
        "classification": classification,
    }
    return {
        "command": "check-tps",
        "inputs": {"system": args.system, "graph": args.graph},
        "outcome": outcome,
        "details": details,
        "lines": lines,
    }


def _cmd_convert(args) -> dict:
    graph = parse_graph(_read(args.graph))
    inputs = {"input": args.input, "graph": args.graph, "output": args.output}
    try:
        if args.direction == "to-tps":
            table = parse_table(_read(args.input))
            out_text = render_system(psi(table, graph)) + "\n"
            written = "T-partition system"
        else:
            system = parse_system(_read(args.input))
            out_text = render_table(phi(system, graph))
            written = "operation table"
    except ValidationError as exc:
        return {
            "command": "convert",
            "inputs": inputs,
            "outcome": "fail",
            "details": {"error": str(exc), "axiom": exc.axiom},
            "lines": [f"conversion failed: {exc}"],
        }
    Path(args.output).write_text(out_text, encoding="utf-8")
    return {
        "command": "convert",
        "inputs": inputs,
        "outcome": "pass",
        "details": {"written": written},
        "lines": [f"wrote {written} to {args.output}"],
    }


def _cmd_enumerate(args) -> dict:
    graph = parse_graph(_read(args.graph))
    result = enumerate_systems(
        graph,
        filter=args.filter,
        count_only=args.count_only,
        jobs=args.jobs,
    )
    lines = [
        f"graph: {graph.n} vertices, {len(graph.edges)} edges",
        f"total: {result.total}",
        f"simple: {result.simple_count}",
        f"smooth: {result.smooth_count}",
        f"semi-smooth: {result.semismooth_count}",
    ]
    details = {
        "total": result.total,
        "simple": result.simple_count,
        "smooth": result.smooth_count,
        "semi-smooth": result.semismooth_count,
        "filter": args.filter,
    }
    if args.out:
        assert result.items is not None
        Path(args.out).write_text(
            "".join(render_system(s) + "\n" for s in result.items),
            encoding="utf-8",
        )
        details["written"] = len(result.items)
        lines.append(
            f"wrote {len(result.items)} systems (filter: {args.filter}) to {args.out}"
        )
    return {
        "command": "enumerate",
        "inputs": {"graph": args.graph},
        "outcome": "count",
        "details": details,
        "lines": lines,
    }


def _cmd_oracle(args) -> dict:
    graph = parse_graph(_read(args.graph))
    report = cross_validate(graph, limit=args.oracle_limit)
    outcome = "pass" if report.ok else "fail"
    lines = [
        f"oracle count: {report.oracle_count}",
        f"search count: {report.csp_count}",
        f"systems match: {'yes' if report.sets_match else 'NO'}",
        f"tallies match: {'yes' if report.oracle_tallies == report.csp_tallies else 'NO'}",
        f"cross-validation: {outcome}",
    ]
    details = {
        "oracle_count": report.oracle_count,
        "csp_count": report.csp_count,
        "sets_match": report.sets_match,
        "oracle_tallies": report.oracle_tallies,
        "csp_tallies": report.csp_tallies,
    }
    return {
        "command": "oracle",
        "inputs": {"graph": args.graph},
        "outcome": outcome,
        "details": details,
        "lines": lines,
    }


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output style (default: text)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="travelg",
        description="Check, convert and enumerate travel groupoids and "
        "T-partition systems on finite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-groupoid", help="run the table axioms on a file")
    p.add_argument("table", help="operation-table file")
    p.add_argument("graph", nargs="?", help="optional graph file for the on-graph test")
    p.add_argument("--witness-limit", type=int, default=DEFAULT_WITNESS_LIMIT)
    p.add_argument(
        "--as-routing",
        action="store_true",
        help="also print the table as next-hop routing rows",
    )
    _add_common(p)
    p.set_defaults(handler=_cmd_check_groupoid)

    p = sub.add_parser("check-tps", help="run the system conditions on a file")
    p.add_argument("system", help="T-partition-system file (JSON)")
    p.add_argument("graph", help="graph file")
    p.add_argument("--witness-limit", type=int, default=DEFAULT_WITNESS_LIMIT)
    _add_common(p)
    p.set_defaults(handler=_cmd_check_tps)

    p = sub.add_parser("convert", help="convert between the two representations")
    p.add_argument("direction", choices=("to-tps", "to-groupoid"))
    p.add_argument("input", help="input file (table or system)")
    p.add_argument("graph", help="graph file")
    p.add_argument("output", help="output file")
    _add_common(p)
    p.set_defaults(handler=_cmd_convert)

    p = sub.add_parser("enumerate", help="generate all systems on a graph")
    p.add_argument("graph", help="graph file")
    p.add_argument("--filter", choices=FILTERS, default="all")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--count-only", action="store_true")
    group.add_argument("--out", help="write the item stream here (one JSON object per line)")
    p.add_argument("--jobs", type=int, default=1, help="parallel top-level branches")
    _add_common(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("oracle", help="cross-validate the search against the oracle")
    p.add_argument("graph", help="graph file")
    p.add_argument("--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT)
    _add_common(p)
    p.set_defaults(handler=_cmd_oracle)

    return parser


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        payload = {k: report[k] for k in ("command", "inputs", "outcome", "details")}
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(report["lines"]))


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.handler(args)
    except (
        OSError,
        GraphFormatError,
        TableFormatError,
        SystemFormatError,
        OracleLimitError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.format)
    return 0 if report["outcome"] in ("pass", "count") else 1


if __name__ == "__main__":
    sys.exit(main())
