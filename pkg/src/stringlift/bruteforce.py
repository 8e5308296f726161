"""Exhaustive small-instance oracles: every check here enumerates all simple
source-target paths, so results are ground truth by construction. Gated to
small networks; callers are expected to stay at or below a dozen knots."""

from __future__ import annotations

from fractions import Fraction

from .network import StringNetwork, adjacency

MAX_NODES = 12


def simple_paths(net: StringNetwork) -> list[tuple[int, ...]]:
    """All simple paths from source to target, depth-first."""
    if net.node_count > MAX_NODES:
        raise ValueError(f"exhaustive enumeration is limited to {MAX_NODES} nodes, got {net.node_count}")
    adj = adjacency(net)
    paths: list[tuple[int, ...]] = []
    stack = [net.source]
    on_path = {net.source}

    def walk(x: int) -> None:
        if x == net.target:
            paths.append(tuple(stack))
            return
        for nb, _length in adj[x]:
            if nb not in on_path:
                stack.append(nb)
                on_path.add(nb)
                walk(nb)
                stack.pop()
                on_path.remove(nb)

    walk(net.source)
    return paths


def path_length(net: StringNetwork, path: tuple[int, ...]) -> Fraction:
    lengths = {e.key: e.length for e in net.edges}
    total = Fraction(0)
    for a, b in zip(path, path[1:]):
        total += lengths[(min(a, b), max(a, b))]
    return total


def shortest_separation(net: StringNetwork) -> Fraction | None:
    """Minimum length-weighted path distance, or None when disconnected."""
    paths = simple_paths(net)
    if not paths:
        return None
    return min(path_length(net, p) for p in paths)


def min_hops(net: StringNetwork) -> int | None:
    """Minimum edge count over all simple paths, or None when disconnected."""
    paths = simple_paths(net)
    if not paths:
        return None
    return min(len(p) - 1 for p in paths)


def shortest_path_edge_union(net: StringNetwork) -> frozenset[tuple[int, int]]:
    """Normalized (u, v) pairs of every edge used by some minimum-length
    source-target path."""
    paths = simple_paths(net)
    if not paths:
        return frozenset()
    best = min(path_length(net, p) for p in paths)
    union: set[tuple[int, int]] = set()
    for p in paths:
        if path_length(net, p) == best:
            for a, b in zip(p, p[1:]):
                union.add((min(a, b), max(a, b)))
    return frozenset(union)
