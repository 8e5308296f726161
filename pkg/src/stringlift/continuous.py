"""Continuous lift and pull-apart for arbitrary string lengths.

Physical idealization: frictionless surface, inextensible weightless-to-
hold strings, purely vertical lift. A knot then leaves the surface at the
exact moment the grabbed knot's height exceeds the taut-chain distance to
it, which is the length-weighted shortest-path distance. The schedule is
computed event-driven: always process the unlifted knot with the smallest
candidate lift-off height and relax its neighbors.

pull_apart is the original two-handed solution: grip source and target and
pull until taut. The separation is the shortest-path distance, and the
strings pulled straight are exactly the edges lying on at least one
shortest source-target path.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import Unreachable
from .network import StringEdge, StringNetwork, adjacency
from .search import retrace_shortest_path


class LiftoffEvent(NamedTuple):
    node: int
    height: Fraction


@dataclass(frozen=True)
class LiftoffSchedule:
    """Lift-off events ordered by height then node id; knots the source
    cannot reach never lift and are listed separately."""

    events: tuple[LiftoffEvent, ...]
    unreachable: tuple[int, ...]

    def heights(self) -> dict[int, Fraction]:
        return {event.node: event.height for event in self.events}


@dataclass(frozen=True)
class PullApartResult:
    separation: Fraction
    taut_edges: frozenset[StringEdge]
    path: tuple[int, ...]


def _liftoff_heights(
    adj: list[list[tuple[int, Fraction]]], start: int
) -> tuple[dict[int, Fraction], list[int]]:
    """Event-driven expansion of lift-off heights from a gripped knot.
    Returns the height map and the lift-off order."""
    heights: dict[int, Fraction] = {}
    order: list[int] = []
    queue: list[tuple[Fraction, int]] = [(Fraction(0), start)]
    while queue:
        h, x = heapq.heappop(queue)
        if x in heights:
            continue
        heights[x] = h
        order.append(x)
        for nb, length in adj[x]:
            if nb not in heights:
                heapq.heappush(queue, (h + length, nb))
    return heights, order


def liftoff_schedule(net: StringNetwork) -> LiftoffSchedule:
    """Lift-off height of every knot when the source is raised vertically.

    Heights are exact rationals equal to the taut-chain distance from the
    source. Never raises: knots in other components simply get no event.
    """
    adj = adjacency(net)
    heights, order = _liftoff_heights(adj, net.source)
    events = tuple(LiftoffEvent(x, heights[x]) for x in order)
    unreachable = tuple(x for x in range(net.node_count) if x not in heights)
    return LiftoffSchedule(events=events, unreachable=unreachable)


def pull_apart(net: StringNetwork) -> PullApartResult:
    """Pull the network taut at source and target.

    separation is the shortest-path distance between them. An edge is taut
    when it can be traversed by some shortest source-target path, i.e. when
    the best distance through it (in either direction) equals the
    separation. path is one shortest path, smallest-id tie-break.
    """
    adj = adjacency(net)
    from_source, _ = _liftoff_heights(adj, net.source)
    if net.target not in from_source:
        raise Unreachable(f"target {net.target} is not reachable from source {net.source}")
    from_target, _ = _liftoff_heights(adj, net.target)
    separation = from_source[net.target]

    taut: list[StringEdge] = []
    for e in net.edges:
        through: list[Fraction] = []
        for near, far in ((e.u, e.v), (e.v, e.u)):
            d_near = from_source.get(near)
            d_far = from_target.get(far)
            if d_near is not None and d_far is not None:
                through.append(d_near + e.length + d_far)
        if through and min(through) == separation:
            taut.append(e)

    return PullApartResult(
        separation=separation,
        taut_edges=frozenset(taut),
        path=retrace_shortest_path(adj, from_source, net.source, net.target),
    )
