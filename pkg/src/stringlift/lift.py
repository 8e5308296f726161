"""Discrete single-point lift simulation.

The procedure: grab the source knot, then repeatedly raise it by the fixed
step d until the target knot leaves the surface. A knot at hop distance i
leaves the surface during step i (the grab counts as step 0 for the source
itself), and from then on rises by d every step. Two work models are
accounted side by side:

- node-weight model: every knot weighs w, strings are weightless. Each step
  charges w*d per hanging knot, newly lifted knots included; the grab itself
  charges w*d.
- string-weight model: strings weigh, knots do not, so raising a hanging
  knot x by d costs w*d*degree(x). A knot's strings start charging the step
  after it leaves the surface (the charge set is the off-surface set taken
  before the step), and the grab is free. This indexing convention is what
  makes the counter close exactly against the string-model formula, whose
  last layer contributes nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import NonUniform, Unreachable
from .network import CostParams, StringNetwork, adjacency


@dataclass(frozen=True)
class LiftState:
    """Snapshot between steps: height of the grabbed knot, which knots are
    off the surface (with the step index at which each left), and the running
    work totals under both models."""

    height: Fraction
    off_surface: Mapping[int, int]
    work_node_model: Fraction
    work_string_model: Fraction
    iteration: int


@dataclass(frozen=True)
class LiftStep:
    iteration: int
    newly_lifted: frozenset[int]
    nodes_raised: frozenset[int]
    dwork_node_model: Fraction
    dwork_string_model: Fraction


@dataclass(frozen=True)
class LiftTrace:
    """Per-step record of the staged lift, grab included as step 0."""

    steps: tuple[LiftStep, ...]


@dataclass(frozen=True)
class LiftResult:
    """Outcome of a full lift: n is the number of raise steps after the grab
    (equal to the hop distance), path is the taut chain the target hangs by."""

    n: int
    trace: LiftTrace
    work_node_model: Fraction
    work_string_model: Fraction
    path: tuple[int, ...]


def grab(net: StringNetwork, params: CostParams) -> LiftState:
    """Grab the source knot and raise it to height d.

    Requires a uniform network whose string length equals the lift step;
    raises NonUniform otherwise. Charges w*d in the node-weight model and
    nothing in the string-weight model.
    """
    for e in net.edges:
        if e.length != params.d:
            raise NonUniform(f"edge ({e.u}, {e.v}) has length {e.length}, lift step is {params.d}")
    return LiftState(
        height=params.d,
        off_surface={net.source: 0},
        work_node_model=params.w * params.d,
        work_string_model=Fraction(0),
        iteration=0,
    )


def _step(state: LiftState, adj: list[list[tuple[int, Fraction]]], params: CostParams) -> LiftState:
    off = state.off_surface
    newly: set[int] = set()
    for x in off:
        for nb, _length in adj[x]:
            if nb not in off:
                newly.add(nb)
    iteration = state.iteration + 1
    new_off = dict(off)
    for x in sorted(newly):
        new_off[x] = iteration
    # String charge uses the pre-step off-surface set; node charge the post-step one.
    hanging_degree_sum = sum(len(adj[x]) for x in off)
    return LiftState(
        height=state.height + params.d,
        off_surface=new_off,
        work_node_model=state.work_node_model + params.w * params.d * len(new_off),
        work_string_model=state.work_string_model + params.w * params.d * hanging_degree_sum,
        iteration=iteration,
    )


def lift_step(state: LiftState, net: StringNetwork, params: CostParams) -> LiftState:
    """One raise of the grabbed knot by d. Every knot on the surface adjacent
    to a hanging knot leaves the surface simultaneously."""
    return _step(state, adjacency(net), params)


def run_lift(net: StringNetwork, params: CostParams) -> LiftResult:
    """Grab the source, then raise until the target hangs.

    Raises Unreachable if the target is still on the surface after
    node_count raises (a productive step lifts at least one new knot, so a
    reachable target is always found within that bound).
    """
    adj = adjacency(net)
    state = grab(net, params)
    steps = [LiftStep(
        iteration=0,
        newly_lifted=frozenset({net.source}),
        nodes_raised=frozenset({net.source}),
        dwork_node_model=state.work_node_model,
        dwork_string_model=Fraction(0),
    )]
    n = None
    for _ in range(net.node_count):
        previous = state
        state = _step(state, adj, params)
        steps.append(LiftStep(
            iteration=state.iteration,
            newly_lifted=frozenset(state.off_surface) - frozenset(previous.off_surface),
            nodes_raised=frozenset(state.off_surface),
            dwork_node_model=state.work_node_model - previous.work_node_model,
            dwork_string_model=state.work_string_model - previous.work_string_model,
        ))
        if net.target in state.off_surface:
            n = state.iteration
            break
    if n is None:
        raise Unreachable(
            f"target {net.target} never left the surface within {net.node_count} raises")
    return LiftResult(
        n=n,
        trace=LiftTrace(tuple(steps)),
        work_node_model=state.work_node_model,
        work_string_model=state.work_string_model,
        path=hanging_path(state, net),
    )


def hanging_path(state: LiftState, net: StringNetwork) -> tuple[int, ...]:
    """The chain of strings by which the target hangs from the source.

    Walks from the target upward, picking at each knot the smallest-id
    neighbor that left the surface in an earlier step. The result is a
    shortest hop path with n edges.
    """
    off = state.off_surface
    if net.target not in off:
        raise Unreachable(f"target {net.target} is still on the surface")
    adj = adjacency(net)
    reverse = [net.target]
    current = net.target
    while current != net.source:
        current = min(nb for nb, _length in adj[current] if nb in off and off[nb] < off[current])
        reverse.append(current)
    return tuple(reversed(reverse))
