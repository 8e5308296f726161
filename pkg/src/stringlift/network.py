"""Core data model for string networks.

A string network is an undirected graph whose edges carry exact rational
lengths, with two marked knots: the source (the knot that gets grabbed or
pulled) and the target (the knot we want the shortest route to). Every
quantity is a fractions.Fraction so that the work and time accounting
downstream holds exactly, never up to a floating-point tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import Unreachable

RationalLike = Fraction | int | str

# Violation kinds reported by validate().
SELF_LOOP = "self_loop"
NON_POSITIVE_LENGTH = "non_positive_length"
DUPLICATE_EDGE = "duplicate_edge"
ENDPOINT_OUT_OF_RANGE = "endpoint_out_of_range"
SOURCE_EQUALS_TARGET = "source_equals_target"
UNIFORM_LENGTH_MISMATCH = "uniform_length_mismatch"


def to_fraction(value: RationalLike, what: str = "value") -> Fraction:
    """Coerce an int, string, or Fraction to Fraction. Floats are rejected:
    they would silently break the exactness guarantee."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"{what} must be an exact rational (int, 'p/q' string, or Fraction), got {value!r}")
    return Fraction(value)


@dataclass(frozen=True, order=True)
class StringEdge:
    """One string joining two knots. Stored with u <= v so that (u, v) and
    (v, u) denote the same edge."""

    u: int
    v: int
    length: Fraction

    def __post_init__(self):
        object.__setattr__(self, "length", to_fraction(self.length, "edge length"))
        if self.v < self.u:
            u, v = self.u, self.v
            object.__setattr__(self, "u", v)
            object.__setattr__(self, "v", u)

    @property
    def key(self) -> tuple[int, int]:
        return (self.u, self.v)

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u


@dataclass(frozen=True)
class StringNetwork:
    """Immutable network of knots (0..node_count-1) and strings, with marked
    source and target knots.

    uniform_length, when set, asserts that every string has that length; the
    claim is checked by validate(), not at construction time, so that invalid
    inputs can be loaded and reported rather than rejected mid-parse.
    """

    node_count: int
    edges: tuple[StringEdge, ...]
    source: int
    target: int
    uniform_length: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        if self.uniform_length is not None:
            object.__setattr__(self, "uniform_length", to_fraction(self.uniform_length, "uniform_length"))

    @classmethod
    def from_triples(
        cls,
        node_count: int,
        triples: Iterable[tuple[int, int, RationalLike]],
        source: int,
        target: int,
        uniform_length: RationalLike | None = None,
    ) -> "StringNetwork":
        edges = tuple(StringEdge(u, v, to_fraction(length, "edge length")) for u, v, length in triples)
        return cls(node_count, edges, source, target,
                   to_fraction(uniform_length, "uniform_length") if uniform_length is not None else None)


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> tuple[str, ...]:
        return tuple(v.kind for v in self.violations)


@dataclass(frozen=True)
class LayerDecomposition:
    """Hop-distance layers around the source knot.

    layers[i] is the set of knots exactly i hops from the source; counts[i]
    is its size; n is the target's layer. Layers cover every knot reachable
    from the source, including knots farther away than the target.
    parent_choice maps each knot at layer i >= 1 to its smallest-id neighbor
    in layer i-1, the deterministic tie-break used for path extraction.
    """

    layers: tuple[frozenset[int], ...]
    counts: tuple[int, ...]
    n: int
    parent_choice: Mapping[int, int]

    def hop_index(self) -> dict[int, int]:
        """Map each reachable knot to its layer index."""
        return {x: i for i, layer in enumerate(self.layers) for x in layer}


@dataclass(frozen=True)
class CostParams:
    """Cost constants: knot weight w, lift step (and uniform string length) d,
    and time per node addition t. All strictly positive exact rationals."""

    w: Fraction = Fraction(1)
    d: Fraction = Fraction(1)
    t: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("w", "d", "t"):
            value = to_fraction(getattr(self, name), name)
            if value <= 0:
                raise ValueError(f"{name} must be strictly positive, got {value}")
            object.__setattr__(self, name, value)


def adjacency(net: StringNetwork) -> list[list[tuple[int, Fraction]]]:
    """Neighbor lists (neighbor, length), sorted by neighbor id. Assumes a
    valid network (endpoints in range)."""
    adj: list[list[tuple[int, Fraction]]] = [[] for _ in range(net.node_count)]
    for e in net.edges:
        adj[e.u].append((e.v, e.length))
        adj[e.v].append((e.u, e.length))
    for lst in adj:
        lst.sort()
    return adj


def validate(net: StringNetwork) -> ValidationReport:
    """Check every structural invariant and report all violations found.

    Report-style by design: an invalid network is described, not raised, so
    callers can surface every problem at once.
    """
    violations: list[Violation] = []

    def add(kind: str, detail: str) -> None:
        violations.append(Violation(kind, detail))

    for role, node in (("source", net.source), ("target", net.target)):
        if not (0 <= node < net.node_count):
            add(ENDPOINT_OUT_OF_RANGE, f"{role} {node} outside [0, {net.node_count})")
    if net.source == net.target:
        add(SOURCE_EQUALS_TARGET, f"source and target are both {net.source}")

    seen_pairs: set[tuple[int, int]] = set()
    for e in net.edges:
        label = f"edge ({e.u}, {e.v}, {e.length})"
        if e.u == e.v:
            add(SELF_LOOP, label)
        if e.length <= 0:
            add(NON_POSITIVE_LENGTH, label)
        for endpoint in (e.u, e.v):
            if not (0 <= endpoint < net.node_count):
                add(ENDPOINT_OUT_OF_RANGE, f"{label} endpoint {endpoint} outside [0, {net.node_count})")
                break
        if e.key in seen_pairs:
            add(DUPLICATE_EDGE, f"pair ({e.u}, {e.v}) appears more than once")
        seen_pairs.add(e.key)
        if net.uniform_length is not None and e.length != net.uniform_length:
            add(UNIFORM_LENGTH_MISMATCH, f"{label} differs from declared uniform length {net.uniform_length}")

    return ValidationReport(tuple(violations))


def detect_uniform_length(net: StringNetwork) -> Fraction | None:
    """The common string length if all edges agree (and there is at least
    one edge), else None."""
    lengths = {e.length for e in net.edges}
    if len(lengths) == 1:
        return next(iter(lengths))
    return None


def hop_layers(net: StringNetwork) -> LayerDecomposition:
    """Decompose the reachable part of the network into hop-distance layers
    around the source.

    Raises Unreachable when the target is not hop-reachable. Knots that the
    source cannot reach are omitted entirely.
    """
    adj = adjacency(net)
    seen = {net.source}
    layers: list[frozenset[int]] = [frozenset({net.source})]
    parent_choice: dict[int, int] = {}
    current = [net.source]
    while current:
        previous = set(current)
        discovered: set[int] = set()
        for x in current:
            for nb, _length in adj[x]:
                if nb not in seen:
                    discovered.add(nb)
        if not discovered:
            break
        seen.update(discovered)
        for x in sorted(discovered):
            parent_choice[x] = min(nb for nb, _length in adj[x] if nb in previous)
        layers.append(frozenset(discovered))
        current = sorted(discovered)

    n = None
    for i, layer in enumerate(layers):
        if net.target in layer:
            n = i
            break
    if n is None:
        raise Unreachable(f"target {net.target} is not hop-reachable from source {net.source}")
    return LayerDecomposition(
        layers=tuple(layers),
        counts=tuple(len(layer) for layer in layers),
        n=n,
        parent_choice=parent_choice,
    )


def degree(net: StringNetwork, x: int) -> int:
    """Number of strings incident to knot x (valid networks have no
    self-loops or parallel strings, so this equals the neighbor count)."""
    return len(adjacency(net)[x])


def all_degrees(net: StringNetwork) -> dict[int, int]:
    adj = adjacency(net)
    return {x: len(adj[x]) for x in range(net.node_count)}
