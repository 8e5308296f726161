"""Seeded network generators.

Every generator is a pure function of its spec: the same (kind, sizes,
seed) always yields the same network. The source defaults to knot 0 and
the target to the highest id. Random kinds redraw until the target is
hop-reachable from the source, up to a fixed retry bound.

Geometric networks place knots on a rational grid and join pairs within a
taxicab radius; taxicab keeps every string length an exact rational, which
Euclidean distances would not.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import GenerationFailed
from .network import StringNetwork, adjacency, to_fraction

KINDS = ("path", "cycle", "star", "complete", "grid", "erdos_renyi", "geometric")

_RETRY_BOUND = 64
_GEO_SCALE = 256
# Weighted mode draws lengths num/den from these bounds; kept small so exact
# sums stay cheap.
_WEIGHT_NUM_MAX = 12
_WEIGHT_DEN_MAX = 4


@dataclass(frozen=True)
class GeneratorSpec:
    """Recipe for one network. size2 is the grid column count (defaults to
    size). uniform_length None means weighted: random rational lengths, or
    taxicab distances for geometric networks."""

    kind: str
    size: int
    size2: int | None = None
    edge_probability: Fraction | None = None
    radius: Fraction | None = None
    uniform_length: Fraction | None = Fraction(1)
    seed: int = 0
    source: int | None = None
    target: int | None = None

    def __post_init__(self):
        for name in ("edge_probability", "radius", "uniform_length"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, to_fraction(value, name))

    def label(self) -> str:
        parts = [f"size={self.size}"]
        if self.size2 is not None:
            parts.append(f"size2={self.size2}")
        if self.edge_probability is not None:
            parts.append(f"p={self.edge_probability}")
        if self.radius is not None:
            parts.append(f"r={self.radius}")
        parts.append("uniform" if self.uniform_length is not None else "weighted")
        parts.append(f"seed={self.seed}")
        return f"{self.kind}({', '.join(parts)})"


def generate(spec: GeneratorSpec) -> StringNetwork:
    """Build the network described by spec.

    Raises ValueError for a malformed spec and GenerationFailed when a
    random kind cannot connect source to target within the retry bound.
    """
    _check_spec(spec)
    rng = random.Random(spec.seed)
    for _attempt in range(_RETRY_BOUND):
        net = _build(spec, rng)
        if _endpoints_connected(net):
            return net
    raise GenerationFailed(f"{spec.label()}: endpoints stayed disconnected after {_RETRY_BOUND} attempts")


def spec_from_obj(obj: dict) -> GeneratorSpec:
    """Build a GeneratorSpec from a plain dict (parsed file or request body)."""
    known = {"kind", "size", "size2", "edge_probability", "radius",
             "uniform_length", "seed", "source", "target"}
    unknown = set(obj) - known
    if unknown:
        raise ValueError(f"unknown generator spec fields: {sorted(unknown)}")
    if "kind" not in obj or "size" not in obj:
        raise ValueError("generator spec requires 'kind' and 'size'")
    kwargs = dict(obj)
    if "uniform_length" not in kwargs:
        kwargs["uniform_length"] = Fraction(1)
    return GeneratorSpec(**kwargs)


def spec_to_obj(spec: GeneratorSpec) -> dict:
    from .netio import format_rational

    obj: dict = {"kind": spec.kind, "size": spec.size, "seed": spec.seed}
    if spec.size2 is not None:
        obj["size2"] = spec.size2
    if spec.edge_probability is not None:
        obj["edge_probability"] = format_rational(spec.edge_probability)
    if spec.radius is not None:
        obj["radius"] = format_rational(spec.radius)
    obj["uniform_length"] = None if spec.uniform_length is None else format_rational(spec.uniform_length)
    if spec.source is not None:
        obj["source"] = spec.source
    if spec.target is not None:
        obj["target"] = spec.target
    return obj


def _check_spec(spec: GeneratorSpec) -> None:
    if spec.kind not in KINDS:
        raise ValueError(f"unknown generator kind {spec.kind!r}, expected one of {KINDS}")
    if spec.size < 2:
        raise ValueError("size must be at least 2 (source and target must differ)")
    if spec.kind == "grid" and spec.size2 is not None and spec.size2 < 1:
        raise ValueError("grid size2 must be at least 1")
    if spec.kind == "erdos_renyi":
        if spec.edge_probability is None or not (0 < spec.edge_probability <= 1):
            raise ValueError("erdos_renyi requires edge_probability in (0, 1]")
    if spec.kind == "geometric" and (spec.radius is None or spec.radius <= 0):
        raise ValueError("geometric requires a positive radius")
    if spec.uniform_length is not None and spec.uniform_length <= 0:
        raise ValueError("uniform_length must be positive")
    node_count = _node_count(spec)
    source = spec.source if spec.source is not None else 0
    target = spec.target if spec.target is not None else node_count - 1
    if not (0 <= source < node_count and 0 <= target < node_count):
        raise ValueError("source/target override outside the node range")
    if source == target:
        raise ValueError("source and target must differ")


def _node_count(spec: GeneratorSpec) -> int:
    if spec.kind == "grid":
        return spec.size * (spec.size2 if spec.size2 is not None else spec.size)
    return spec.size


def _edge_length(spec: GeneratorSpec, rng: random.Random) -> Fraction:
    if spec.uniform_length is not None:
        return spec.uniform_length
    return Fraction(rng.randint(1, _WEIGHT_NUM_MAX), rng.randint(1, _WEIGHT_DEN_MAX))


def _structured_pairs(spec: GeneratorSpec) -> Iterator[tuple[int, int]]:
    n = spec.size
    if spec.kind == "path":
        yield from ((i, i + 1) for i in range(n - 1))
    elif spec.kind == "cycle":
        yield from ((i, i + 1) for i in range(n - 1))
        yield (0, n - 1)
    elif spec.kind == "star":
        yield from ((0, i) for i in range(1, n))
    elif spec.kind == "complete":
        yield from ((u, v) for u in range(n) for v in range(u + 1, n))
    elif spec.kind == "grid":
        cols = spec.size2 if spec.size2 is not None else spec.size
        for r in range(spec.size):
            for c in range(cols):
                node = r * cols + c
                if c + 1 < cols:
                    yield (node, node + 1)
                if r + 1 < spec.size:
                    yield (node, node + cols)
    else:
        raise AssertionError(spec.kind)


def _build(spec: GeneratorSpec, rng: random.Random) -> StringNetwork:
    node_count = _node_count(spec)
    triples: list[tuple[int, int, Fraction]] = []
    if spec.kind == "erdos_renyi":
        p = float(spec.edge_probability)
        for u in range(node_count):
            for v in range(u + 1, node_count):
                if rng.random() < p:
                    triples.append((u, v, _edge_length(spec, rng)))
    elif spec.kind == "geometric":
        points = _distinct_points(node_count, rng)
        limit = spec.radius * _GEO_SCALE
        for u in range(node_count):
            for v in range(u + 1, node_count):
                l1 = abs(points[u][0] - points[v][0]) + abs(points[u][1] - points[v][1])
                if l1 <= limit:
                    length = spec.uniform_length if spec.uniform_length is not None else Fraction(l1, _GEO_SCALE)
                    triples.append((u, v, length))
    else:
        triples = [(u, v, _edge_length(spec, rng)) for u, v in _structured_pairs(spec)]

    source = spec.source if spec.source is not None else 0
    target = spec.target if spec.target is not None else node_count - 1
    return StringNetwork.from_triples(node_count, triples, source, target,
                                      uniform_length=spec.uniform_length)


def _distinct_points(count: int, rng: random.Random) -> list[tuple[int, int]]:
    used: set[tuple[int, int]] = set()
    points = []
    while len(points) < count:
        pt = (rng.randint(0, _GEO_SCALE), rng.randint(0, _GEO_SCALE))
        if pt not in used:
            used.add(pt)
            points.append(pt)
    return points


def _endpoints_connected(net: StringNetwork) -> bool:
    adj = adjacency(net)
    seen = {net.source}
    stack = [net.source]
    while stack:
        x = stack.pop()
        if x == net.target:
            return True
        for nb, _length in adj[x]:
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return False
