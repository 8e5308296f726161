"""Acceptance suite: every criterion runs at its stated corpus size with
exact rational equality (zero tolerance) and prints one PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
come; the shared corpora are built once per module.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

import pytest

import oracles
from stringlift import (
    BfsRun,
    CostParams,
    DijkstraRun,
    GeneratorSpec,
    LayerDecomposition,
    LiftResult,
    StringNetwork,
    all_degrees,
    dijkstra,
    enumerating_bfs,
    enumeration_bfs_time,
    generate,
    hop_layers,
    liftoff_schedule,
    marked_bfs,
    naive_set_bfs,
    node_model_work,
    pull_apart,
    run_lift,
    set_bfs_time,
    string_model_work,
    verify_batch,
)
from stringlift.traces import batch_report_records, dumps_jsonl

_MODULE_START = time.monotonic()

SMALL_RATIONALS = [Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2),
                   Fraction(3, 2), Fraction(2, 3), Fraction(5, 4), Fraction(5)]


def _report(cid: str, label: str, failures: list) -> None:
    status = "PASS" if not failures else "FAIL"
    print(f"[acceptance] {cid} {label}: {status}")
    assert not failures, f"{cid}: {len(failures)} failing case(s), first: {failures[0]!r}"


@dataclass(frozen=True)
class CorpusEntry:
    spec: GeneratorSpec
    net: StringNetwork
    params: CostParams
    layers: LayerDecomposition
    degrees: dict[int, int]
    lift: LiftResult
    naive: BfsRun
    enum_run: BfsRun
    marked: BfsRun
    dij: DijkstraRun


def _uniform_specs(count: int) -> list[GeneratorSpec]:
    rng = random.Random(20260808)
    kinds = ["path", "cycle", "star", "complete", "grid", "erdos_renyi", "geometric"]
    specs = []
    for i in range(count):
        kind = kinds[i % len(kinds)]
        d = rng.choice(SMALL_RATIONALS)
        seed = 1000 + i
        if kind == "path":
            spec = GeneratorSpec(kind=kind, size=rng.randint(3, 140), uniform_length=d, seed=seed)
        elif kind == "cycle":
            spec = GeneratorSpec(kind=kind, size=rng.randint(4, 140), uniform_length=d, seed=seed)
        elif kind == "star":
            spec = GeneratorSpec(kind=kind, size=rng.randint(3, 80), uniform_length=d, seed=seed)
        elif kind == "complete":
            spec = GeneratorSpec(kind=kind, size=rng.randint(3, 30), uniform_length=d, seed=seed)
        elif kind == "grid":
            spec = GeneratorSpec(kind=kind, size=rng.randint(2, 12), size2=rng.randint(2, 12),
                                 uniform_length=d, seed=seed)
        elif kind == "erdos_renyi":
            n = rng.randint(8, 200)
            spec = GeneratorSpec(kind=kind, size=n, edge_probability=Fraction(rng.randint(3, 6), n),
                                 uniform_length=d, seed=seed)
        else:
            spec = GeneratorSpec(kind=kind, size=rng.randint(8, 60),
                                 radius=Fraction(rng.randint(30, 55), 100),
                                 uniform_length=d, seed=seed)
        specs.append(spec)
    return specs


@pytest.fixture(scope="module")
def uniform_corpus() -> list[CorpusEntry]:
    """500 seeded connected uniform networks, |V| <= 200, mixed generators,
    with every simulator and formula input computed once."""
    rng = random.Random(991)
    entries = []
    for spec in _uniform_specs(500):
        net = generate(spec)
        assert net.node_count <= 200
        params = CostParams(w=rng.choice(SMALL_RATIONALS), d=net.uniform_length,
                            t=rng.choice(SMALL_RATIONALS))
        entries.append(CorpusEntry(
            spec=spec,
            net=net,
            params=params,
            layers=hop_layers(net),
            degrees=all_degrees(net),
            lift=run_lift(net, params),
            naive=naive_set_bfs(net, params),
            enum_run=enumerating_bfs(net, params),
            marked=marked_bfs(net),
            dij=dijkstra(net),
        ))
    return entries


@pytest.fixture(scope="module")
def weighted_corpus() -> list[StringNetwork]:
    """200 weighted networks: taxicab geometric plus random-rational-length
    variants of the structured kinds."""
    rng = random.Random(7702)
    nets = []
    for i in range(200):
        seed = 5000 + i
        which = i % 4
        if which in (0, 1):
            spec = GeneratorSpec(kind="geometric", size=rng.randint(8, 60),
                                 radius=Fraction(rng.randint(30, 55), 100),
                                 uniform_length=None, seed=seed)
        elif which == 2:
            n = rng.randint(8, 120)
            spec = GeneratorSpec(kind="erdos_renyi", size=n,
                                 edge_probability=Fraction(rng.randint(3, 6), n),
                                 uniform_length=None, seed=seed)
        else:
            spec = GeneratorSpec(kind="grid", size=rng.randint(2, 10), size2=rng.randint(2, 10),
                                 uniform_length=None, seed=seed)
        nets.append(generate(spec))
    return nets


def test_c01_node_model_work_matches_formula(uniform_corpus):
    # Spot checks first: P3 gives 6, and a path with hop distance n gives
    # w*d*(n+1)(n+2)/2.
    p3 = generate(GeneratorSpec(kind="path", size=3))
    assert run_lift(p3, CostParams()).work_node_model == 6
    for nodes in (2, 4, 9, 30):
        path = generate(GeneratorSpec(kind="path", size=nodes))
        n = nodes - 1
        assert run_lift(path, CostParams()).work_node_model == Fraction((n + 1) * (n + 2), 2)

    failures = [e.spec.label() for e in uniform_corpus
                if e.lift.work_node_model != node_model_work(e.layers, e.params)]
    _report("C01", "lift work (node model) equals closed form on 500 networks", failures)


def test_c02_set_bfs_time_matches_formula(uniform_corpus):
    p3 = generate(GeneratorSpec(kind="path", size=3))
    assert naive_set_bfs(p3, CostParams()).time_units == 6

    failures = [e.spec.label() for e in uniform_corpus
                if e.naive.time_units != set_bfs_time(e.layers, e.params)]
    _report("C02", "set-BFS time equals closed form on 500 networks", failures)


def test_c03_enumeration_bfs_time_matches_formula(uniform_corpus):
    p3 = generate(GeneratorSpec(kind="path", size=3))
    star3 = StringNetwork.from_triples(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1)], 0, 1, uniform_length=1)
    assert enumerating_bfs(p3, CostParams()).time_units == 4
    assert enumerating_bfs(star3, CostParams()).time_units == 3

    failures = [e.spec.label() for e in uniform_corpus
                if e.enum_run.time_units != enumeration_bfs_time(e.layers, e.degrees, e.params)]
    _report("C03", "enumeration-BFS time equals closed form on 500 networks", failures)


def test_c04_string_model_work_matches_formula(uniform_corpus):
    p3 = generate(GeneratorSpec(kind="path", size=3))
    assert run_lift(p3, CostParams()).work_string_model == 4

    failures = [e.spec.label() for e in uniform_corpus
                if e.lift.work_string_model != string_model_work(e.layers, e.degrees, e.params)]
    _report("C04", "lift work (string model) equals closed form on 500 networks", failures)


def test_c05_work_time_correspondence_for_random_params(uniform_corpus):
    rng = random.Random(424242)
    failures = []
    for case in range(500):
        entry = uniform_corpus[case % len(uniform_corpus)]
        params = CostParams(w=rng.choice(SMALL_RATIONALS), d=rng.choice(SMALL_RATIONALS),
                            t=rng.choice(SMALL_RATIONALS))
        work_node = node_model_work(entry.layers, params)
        time_set = set_bfs_time(entry.layers, params)
        time_enum = enumeration_bfs_time(entry.layers, entry.degrees, params)
        work_string = string_model_work(entry.layers, entry.degrees, params)
        if work_node * params.t != time_set * params.w * params.d:
            failures.append((case, "node model"))
        if work_string * params.t != time_enum * params.w * params.d:
            failures.append((case, "string model"))
    _report("C05", "work*t equals time*w*d under 500 random parameter draws", failures)


def test_c06_lift_set_equals_bfs_lift_set_each_iteration(uniform_corpus):
    random_entries = [e for e in uniform_corpus if e.spec.kind in ("erdos_renyi", "geometric")][:100]
    assert len(random_entries) == 100
    failures = []
    for entry in random_entries:
        off: set[int] = set()
        if len(entry.lift.trace.steps) != len(entry.naive.lift_sets):
            failures.append(entry.spec.label())
            continue
        for step, lift_set in zip(entry.lift.trace.steps, entry.naive.lift_sets):
            off |= step.newly_lifted
            if off != lift_set:
                failures.append(entry.spec.label())
                break
    _report("C06", "off-surface set equals BFS lift set after every iteration (100 networks)", failures)


def test_c07_distance_agreement_across_all_algorithms(uniform_corpus):
    failures = []
    for entry in uniform_corpus:
        n = entry.layers.n
        if not (entry.lift.n == entry.naive.n == entry.enum_run.n == entry.marked.n == n):
            failures.append((entry.spec.label(), "n"))
        if entry.dij.distance != n * entry.params.d:
            failures.append((entry.spec.label(), "dijkstra"))
    _report("C07", "hop distance agrees across lift, all BFS variants, and Dijkstra (500 networks)", failures)


def test_c08_liftoff_heights_equal_dijkstra_distances(weighted_corpus):
    failures = []
    for i, net in enumerate(weighted_corpus):
        schedule = liftoff_schedule(net)
        run = dijkstra(net)
        if schedule.heights() != dict(run.dist_map):
            failures.append((i, "heights"))
        order = tuple(event.node for event in schedule.events)
        if order != run.settle_order:
            failures.append((i, "order"))
    _report("C08", "lift-off heights and order equal Dijkstra on 200 weighted networks", failures)


def test_c09_pull_apart_matches_exhaustive_enumeration():
    rng = random.Random(31415)
    failures = []
    for case in range(200):
        n = rng.randint(4, 8)
        spec = GeneratorSpec(kind="erdos_renyi", size=n,
                             edge_probability=Fraction(rng.randint(2, 4), 5),
                             uniform_length=None, seed=9000 + case)
        net = generate(spec)
        result = pull_apart(net)
        best, _winners = oracles.min_length_paths(net)
        if result.separation != best:
            failures.append((case, "separation"))
        if {e.key for e in result.taut_edges} != oracles.shortest_edge_union(net):
            failures.append((case, "taut edges"))
    _report("C09", "pull-apart separation and taut edges match enumeration (200 graphs, |V| <= 8)", failures)


def test_c10_paths_are_shortest_by_enumeration():
    rng = random.Random(27182)
    failures = []
    for case in range(100):
        n = rng.randint(5, 10)
        spec = GeneratorSpec(kind="erdos_renyi", size=n,
                             edge_probability=Fraction(rng.randint(2, 4), 6),
                             seed=12000 + case)
        net = generate(spec)
        best = oracles.min_hop_count(net)
        edge_keys = {e.key for e in net.edges}
        lift_path = run_lift(net, CostParams()).path
        marked_path = marked_bfs(net).path
        for source_name, path in (("lift", lift_path), ("marked", marked_path)):
            ok = (len(path) - 1 == best
                  and path[0] == net.source and path[-1] == net.target
                  and all((min(a, b), max(a, b)) in edge_keys for a, b in zip(path, path[1:])))
            if not ok:
                failures.append((case, source_name))
    _report("C10", "hanging and marked-BFS paths are valid shortest paths (100 graphs, |V| <= 10)", failures)


def test_c11_determinism_and_runtime():
    rng = random.Random(5551)
    specs = []
    for i in range(40):
        which = i % 4
        if which == 0:
            specs.append(GeneratorSpec(kind="path", size=rng.randint(3, 30), seed=i))
        elif which == 1:
            n = rng.randint(8, 60)
            specs.append(GeneratorSpec(kind="erdos_renyi", size=n,
                                       edge_probability=Fraction(4, n), seed=i))
        elif which == 2:
            specs.append(GeneratorSpec(kind="geometric", size=rng.randint(8, 30),
                                       radius=Fraction(2, 5), uniform_length=None, seed=i))
        else:
            specs.append(GeneratorSpec(kind="grid", size=rng.randint(2, 7),
                                       size2=rng.randint(2, 7), seed=i))

    reports = [
        verify_batch(specs, workers=1),
        verify_batch(specs, workers=1),
        verify_batch(specs, workers=3),
        verify_batch(specs, workers=8),
    ]
    serialized = {dumps_jsonl(batch_report_records(r)) for r in reports}
    failures = []
    if len(serialized) != 1:
        failures.append("reports differ across runs or worker counts")
    if reports[0].passed != reports[0].total:
        failures.append(f"batch failures: {reports[0].failures}")

    elapsed = time.monotonic() - _MODULE_START
    print(f"[acceptance] module wall time: {elapsed:.1f}s")
    if elapsed >= 60:
        failures.append(f"acceptance module took {elapsed:.1f}s (budget 60s)")
    _report("C11", "deterministic verify_batch under varied parallelism, within time budget", failures)
