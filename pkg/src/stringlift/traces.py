"""Line-delimited trace records for offline inspection and plotting.

Every exporter returns a list of plain dicts, one per output line; callers
serialize with dumps_jsonl/write_jsonl. Rationals use the same int-or-"p/q"
encoding as network files.
"""

from __future__ import annotations

import json
from pathlib import Path

from .continuous import LiftoffSchedule, PullApartResult
from .formulas import ComplexityReport
from .lift import LiftResult
from .netio import format_rational
from .search import BfsRun, DijkstraRun
from .verify import BatchReport


def lift_trace_records(result: LiftResult) -> list[dict]:
    records = []
    for step in result.trace.steps:
        records.append({
            "record": "lift_step",
            "iteration": step.iteration,
            "newly_lifted": sorted(step.newly_lifted),
            "nodes_raised": sorted(step.nodes_raised),
            "dwork_node": format_rational(step.dwork_node_model),
            "dwork_string": format_rational(step.dwork_string_model),
        })
    records.append({
        "record": "lift_summary",
        "n": result.n,
        "work_node": format_rational(result.work_node_model),
        "work_string": format_rational(result.work_string_model),
        "path": list(result.path),
    })
    return records


def bfs_run_records(run: BfsRun, variant: str) -> list[dict]:
    records = [
        {"record": "bfs_step", "algorithm": variant, "iteration": i, "charge": charge}
        for i, charge in enumerate(run.per_iteration)
    ]
    summary = {
        "record": "bfs_summary",
        "algorithm": variant,
        "n": run.n,
        "time_units": format_rational(run.time_units),
    }
    if run.path is not None:
        summary["path"] = list(run.path)
    records.append(summary)
    return records


def dijkstra_records(run: DijkstraRun) -> list[dict]:
    records = [
        {"record": "settle", "node": node, "distance": format_rational(run.dist_map[node])}
        for node in run.settle_order
    ]
    records.append({
        "record": "dijkstra_summary",
        "distance": format_rational(run.distance),
        "path": list(run.path),
    })
    return records


def liftoff_records(schedule: LiftoffSchedule) -> list[dict]:
    records = [
        {"record": "liftoff_event", "node": event.node, "height": format_rational(event.height)}
        for event in schedule.events
    ]
    if schedule.unreachable:
        records.append({"record": "liftoff_unreachable", "nodes": list(schedule.unreachable)})
    return records


def pull_apart_records(result: PullApartResult) -> list[dict]:
    records = [
        {"record": "taut_edge", "u": e.u, "v": e.v, "length": format_rational(e.length)}
        for e in sorted(result.taut_edges)
    ]
    records.append({
        "record": "pull_apart_summary",
        "separation": format_rational(result.separation),
        "path": list(result.path),
    })
    return records


def complexity_report_record(report: ComplexityReport) -> dict:
    return {
        "record": "correspondence",
        "n": report.n,
        "work_node_formula": format_rational(report.work_node_formula),
        "work_node_counter": format_rational(report.work_node_counter),
        "time_set_formula": format_rational(report.time_set_formula),
        "time_set_counter": format_rational(report.time_set_counter),
        "time_enumeration_formula": format_rational(report.time_enumeration_formula),
        "time_enumeration_counter": format_rational(report.time_enumeration_counter),
        "work_string_formula": format_rational(report.work_string_formula),
        "work_string_counter": format_rational(report.work_string_counter),
        "ratio_node": format_rational(report.ratio_node),
        "ratio_string": format_rational(report.ratio_string),
        "correspondence_ok": report.correspondence_ok,
    }


def batch_report_records(report: BatchReport) -> list[dict]:
    records = [
        {"record": "batch_failure", "seed": f.seed, "spec": f.spec, "property": f.failed_property}
        for f in report.failures
    ]
    records.append({"record": "batch_summary", "total": report.total, "passed": report.passed})
    return records


def dumps_jsonl(records: list[dict]) -> str:
    return "".join(json.dumps(r) + "\n" for r in records)


def write_jsonl(records: list[dict], path: str | Path) -> None:
    Path(path).write_text(dumps_jsonl(records))
