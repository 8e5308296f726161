"""Symbolic counterparts of the lift, with exact cost counters.

Three breadth-first variants over the same growing "lift" set, differing
only in what they charge for, plus Dijkstra for arbitrary string lengths:

- naive_set_bfs: every iteration re-expands the whole lift set (no marking
  of already-expanded nodes); set semantics, so duplicates are not stored.
  Charges t per member of the lift set after each iteration, plus t for the
  initialization.
- enumerating_bfs: same set evolution, but charges t per adjacency
  enumeration over the snapshot of the lift set taken before the iteration,
  counting duplicate additions.
- marked_bfs: the standard frontier BFS that expands only nodes added in
  the previous iteration. No cost model corresponds to it on the physical
  side; its counter is simply the number of set insertions.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import Unreachable
from .network import CostParams, StringNetwork, adjacency


@dataclass(frozen=True)
class BfsRun:
    """Result of one search variant.

    n is the number of loop iterations until the target entered the lift
    set. per_iteration holds the charge counts in order (for naive_set_bfs
    the first entry is the init charge and the rest are post-iteration set
    sizes; for enumerating_bfs each entry is the number of addition attempts
    in that iteration; for marked_bfs each entry is the number of
    insertions, init included). lift_sets snapshots the lift set after init
    and after every iteration, for structural comparison against the
    physical lift. path is filled by marked_bfs only.
    """

    n: int
    time_units: Fraction
    per_iteration: tuple[int, ...]
    lift_sets: tuple[frozenset[int], ...]
    path: tuple[int, ...] | None = None


@dataclass(frozen=True)
class DijkstraRun:
    """Exact-rational Dijkstra from the source: settle order is deterministic
    (distance first, then node id), dist_map covers every reachable node."""

    distance: Fraction
    settle_order: tuple[int, ...]
    dist_map: Mapping[int, Fraction]
    path: tuple[int, ...]


def naive_set_bfs(net: StringNetwork, params: CostParams) -> BfsRun:
    """Repeatedly add, for each element of the lift set, all its adjacent
    nodes, until the target is in the set.

    Iteration k costs t times the set size after iteration k; the
    initialization costs t. The whole set is re-expanded every iteration on
    purpose: the closed-form time formula depends on it.
    """
    adj = adjacency(net)
    lift: set[int] = {net.source}
    charges = [1]
    snapshots = [frozenset(lift)]
    n = None
    for iteration in range(1, net.node_count + 1):
        added: set[int] = set()
        for x in sorted(lift):
            for nb, _length in adj[x]:
                added.add(nb)
        lift |= added
        charges.append(len(lift))
        snapshots.append(frozenset(lift))
        if net.target in lift:
            n = iteration
            break
    if n is None:
        raise Unreachable(
            f"target {net.target} not added to the lift set within {net.node_count} iterations")
    return BfsRun(
        n=n,
        time_units=params.t * sum(charges),
        per_iteration=tuple(charges),
        lift_sets=tuple(snapshots),
    )


def enumerating_bfs(net: StringNetwork, params: CostParams) -> BfsRun:
    """Like naive_set_bfs, but each iteration walks the adjacency of every
    node in the pre-iteration snapshot and charges t per enumerated
    addition, duplicates included."""
    adj = adjacency(net)
    lift: set[int] = {net.source}
    charges: list[int] = []
    snapshots = [frozenset(lift)]
    n = None
    for iteration in range(1, net.node_count + 1):
        snapshot = sorted(lift)
        additions = 0
        added: set[int] = set()
        for x in snapshot:
            for nb, _length in adj[x]:
                additions += 1
                added.add(nb)
        lift |= added
        charges.append(additions)
        snapshots.append(frozenset(lift))
        if net.target in lift:
            n = iteration
            break
    if n is None:
        raise Unreachable(
            f"target {net.target} not added to the lift set within {net.node_count} iterations")
    return BfsRun(
        n=n,
        time_units=params.t * sum(charges),
        per_iteration=tuple(charges),
        lift_sets=tuple(snapshots),
    )


def marked_bfs(net: StringNetwork) -> BfsRun:
    """Frontier BFS: expand only nodes newly added in the previous
    iteration. Returns the hop distance and a shortest path; parents are
    assigned by the smallest-id frontier node that discovers each node.
    time_units counts set insertions (init included) and carries no time
    constant."""
    adj = adjacency(net)
    visited = {net.source}
    parent: dict[int, int] = {}
    frontier = [net.source]
    charges = [1]
    snapshots = [frozenset(visited)]
    n = None
    iteration = 0
    while frontier:
        iteration += 1
        discovered: list[int] = []
        for x in sorted(frontier):
            for nb, _length in adj[x]:
                if nb not in visited:
                    visited.add(nb)
                    parent[nb] = x
                    discovered.append(nb)
        charges.append(len(discovered))
        snapshots.append(frozenset(visited))
        frontier = discovered
        if net.target in visited:
            n = iteration
            break
    if n is None:
        raise Unreachable(f"target {net.target} is not hop-reachable from source {net.source}")
    reverse = [net.target]
    while reverse[-1] != net.source:
        reverse.append(parent[reverse[-1]])
    return BfsRun(
        n=n,
        time_units=Fraction(sum(charges)),
        per_iteration=tuple(charges),
        lift_sets=tuple(snapshots),
        path=tuple(reversed(reverse)),
    )


def dijkstra(net: StringNetwork) -> DijkstraRun:
    """Length-weighted shortest paths from the source, exact rationals
    throughout. Nodes settle in nondecreasing distance, ties broken by node
    id; with strictly positive lengths every equal-distance entry is already
    queued when the first one pops, so the tie-break is total."""
    adj = adjacency(net)
    dist: dict[int, Fraction] = {}
    order: list[int] = []
    heap: list[tuple[Fraction, int]] = [(Fraction(0), net.source)]
    while heap:
        d, x = heapq.heappop(heap)
        if x in dist:
            continue
        dist[x] = d
        order.append(x)
        for nb, length in adj[x]:
            if nb not in dist:
                heapq.heappush(heap, (d + length, nb))
    if net.target not in dist:
        raise Unreachable(f"target {net.target} is not reachable from source {net.source}")
    return DijkstraRun(
        distance=dist[net.target],
        settle_order=tuple(order),
        dist_map=dist,
        path=retrace_shortest_path(adj, dist, net.source, net.target),
    )


def retrace_shortest_path(
    adj: list[list[tuple[int, Fraction]]],
    dist: Mapping[int, Fraction],
    source: int,
    target: int,
) -> tuple[int, ...]:
    """Walk a distance map backward from the target, choosing at each knot
    the smallest-id neighbor that lies on a shortest path."""
    reverse = [target]
    current = target
    while current != source:
        current = min(
            nb for nb, length in adj[current]
            if nb in dist and dist[nb] + length == dist[current]
        )
        reverse.append(current)
    return tuple(reversed(reverse))
