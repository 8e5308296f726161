"""Batch verification: generate networks and check every cross-model
property on each one.

A network passes when all applicable checks hold; the first failing check
is recorded by name. Uniform networks get the full set (work and time
counters against their closed forms, structural lift/search equivalence);
weighted networks get the distance-agreement and continuous checks; small
networks additionally get the exhaustive-enumeration oracles.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from . import bruteforce
from .continuous import liftoff_schedule, pull_apart
from .errors import GenerationFailed, StringliftError
from .formulas import enumeration_bfs_time, node_model_work, set_bfs_time, string_model_work
from .generators import GeneratorSpec, generate
from .lift import run_lift
from .network import CostParams, StringNetwork, all_degrees, detect_uniform_length, hop_layers, validate
from .search import dijkstra, enumerating_bfs, marked_bfs, naive_set_bfs

SMALL_LIMIT = 10


@dataclass(frozen=True)
class BatchFailure:
    seed: int
    spec: str
    failed_property: str


@dataclass(frozen=True)
class BatchReport:
    total: int
    passed: int
    failures: tuple[BatchFailure, ...]


def verify_network(net: StringNetwork, params: CostParams | None = None) -> str | None:
    """Run every applicable property check; return the first failing check's
    name, or None when the network passes. The lift step d is taken from the
    network's own uniform string length, so only w and t of params matter."""
    base = params if params is not None else CostParams()
    for name, check in _checks_for(net, base):
        try:
            if not check():
                return name
        except StringliftError:
            return name
    return None


def verify_batch(
    specs: Sequence[GeneratorSpec],
    params: CostParams | None = None,
    workers: int = 1,
) -> BatchReport:
    """Generate and verify each spec. Results are merged in spec order, so
    the report is identical for any worker count."""

    def run_one(spec: GeneratorSpec) -> BatchFailure | None:
        try:
            net = generate(spec)
        except (GenerationFailed, ValueError):
            return BatchFailure(spec.seed, spec.label(), "generation_failed")
        failed = verify_network(net, params)
        if failed is None:
            return None
        return BatchFailure(spec.seed, spec.label(), failed)

    if workers <= 1:
        outcomes = [run_one(spec) for spec in specs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run_one, specs))
    failures = tuple(o for o in outcomes if o is not None)
    return BatchReport(total=len(specs), passed=len(specs) - len(failures), failures=failures)


def _checks_for(net: StringNetwork, base: CostParams) -> list[tuple[str, Callable[[], bool]]]:
    uniform = detect_uniform_length(net)
    if uniform is not None and uniform <= 0:
        uniform = None
    params = CostParams(w=base.w, d=uniform, t=base.t) if uniform is not None else base
    checks: list[tuple[str, Callable[[], bool]]] = [
        ("valid_network", lambda: validate(net).ok),
    ]

    if uniform is not None:
        def work_node_matches() -> bool:
            return run_lift(net, params).work_node_model == node_model_work(hop_layers(net), params)

        def time_set_matches() -> bool:
            return naive_set_bfs(net, params).time_units == set_bfs_time(hop_layers(net), params)

        def time_enumeration_matches() -> bool:
            return enumerating_bfs(net, params).time_units == enumeration_bfs_time(
                hop_layers(net), all_degrees(net), params)

        def work_string_matches() -> bool:
            return run_lift(net, params).work_string_model == string_model_work(
                hop_layers(net), all_degrees(net), params)

        def lift_set_equivalence() -> bool:
            lift_run = run_lift(net, params)
            bfs_run = naive_set_bfs(net, params)
            if len(lift_run.trace.steps) != len(bfs_run.lift_sets):
                return False
            off: set[int] = set()
            for step, lift_set in zip(lift_run.trace.steps, bfs_run.lift_sets):
                off |= step.newly_lifted
                if off != lift_set:
                    return False
            return True

        checks += [
            ("work_node_matches_formula", work_node_matches),
            ("time_set_matches_formula", time_set_matches),
            ("time_enumeration_matches_formula", time_enumeration_matches),
            ("work_string_matches_formula", work_string_matches),
            ("lift_set_equivalence", lift_set_equivalence),
        ]

    def hop_distance_agreement() -> bool:
        n = marked_bfs(net).n
        if naive_set_bfs(net, params).n != n or enumerating_bfs(net, params).n != n:
            return False
        if uniform is not None:
            if run_lift(net, params).n != n:
                return False
            if dijkstra(net).distance != n * uniform:
                return False
        return True

    def liftoff_matches_dijkstra() -> bool:
        schedule = liftoff_schedule(net)
        run = dijkstra(net)
        return (schedule.heights() == dict(run.dist_map)
                and tuple(e.node for e in schedule.events) == run.settle_order)

    checks += [
        ("hop_distance_agreement", hop_distance_agreement),
        ("liftoff_matches_dijkstra", liftoff_matches_dijkstra),
    ]

    if net.node_count <= SMALL_LIMIT:
        def taut_edges_match() -> bool:
            result = pull_apart(net)
            if result.separation != bruteforce.shortest_separation(net):
                return False
            return frozenset(e.key for e in result.taut_edges) == bruteforce.shortest_path_edge_union(net)

        checks.append(("taut_edges_match_enumeration", taut_edges_match))

        if uniform is not None:
            def shortest_path_valid() -> bool:
                best = bruteforce.min_hops(net)
                lift_path = run_lift(net, params).path
                marked_path = marked_bfs(net).path
                assert marked_path is not None
                edge_keys = {e.key for e in net.edges}
                for path in (lift_path, marked_path):
                    if len(path) - 1 != best:
                        return False
                    if path[0] != net.source or path[-1] != net.target:
                        return False
                    if any((min(a, b), max(a, b)) not in edge_keys for a, b in zip(path, path[1:])):
                        return False
                return True

            checks.append(("shortest_path_valid", shortest_path_valid))

    return checks
