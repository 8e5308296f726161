"""Network file format and the exact-rational text codec.

A network file is a JSON object:

    {"nodes": 3, "edges": [[0, 1, 1], [1, 2, "3/2"]],
     "source": 0, "target": 2, "uniform_length": null}

Lengths (and every other rational in this package's formats) are integers
or "p/q" strings; floats are rejected so exactness survives round-trips.
write_network followed by read_network reproduces the network identically.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .generators import GeneratorSpec, spec_from_obj
from .network import StringNetwork

_NETWORK_KEYS = {"nodes", "edges", "source", "target", "uniform_length"}


def parse_rational(value, where: str = "value") -> Fraction:
    """Parse an int or 'p/q' string into a Fraction, raising ParseError on
    anything else (zero denominators included)."""
    if isinstance(value, bool):
        raise ParseError(f"expected rational, got boolean {value!r}", field=where)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except ZeroDivisionError:
            raise ParseError("rational has zero denominator", field=where) from None
        except ValueError:
            raise ParseError(f"malformed rational {value!r}", field=where) from None
    raise ParseError(f"expected int or 'p/q' string, got {type(value).__name__}", field=where)


def format_rational(q: Fraction) -> int | str:
    """Inverse of parse_rational: whole values as ints, others as 'p/q'."""
    if q.denominator == 1:
        return int(q)
    return f"{q.numerator}/{q.denominator}"


def _as_int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected integer, got {value!r}", field=where)
    return value


def parse_network(obj) -> StringNetwork:
    """Build a StringNetwork from a parsed file object or request body."""
    if not isinstance(obj, dict):
        raise ParseError("network must be a JSON object")
    unknown = set(obj) - _NETWORK_KEYS
    if unknown:
        raise ParseError(f"unknown network fields: {sorted(unknown)}")
    for key in ("nodes", "edges", "source", "target"):
        if key not in obj:
            raise ParseError(f"missing required field {key!r}", field=key)
    nodes = _as_int(obj["nodes"], "nodes")
    source = _as_int(obj["source"], "source")
    target = _as_int(obj["target"], "target")
    raw_edges = obj["edges"]
    if not isinstance(raw_edges, list):
        raise ParseError("edges must be a list", field="edges")
    triples = []
    for i, item in enumerate(raw_edges):
        where = f"edges[{i}]"
        if not isinstance(item, (list, tuple)) or len(item) != 3:
            raise ParseError("edge must be [u, v, length]", field=where)
        u = _as_int(item[0], f"{where}[0]")
        v = _as_int(item[1], f"{where}[1]")
        length = parse_rational(item[2], f"{where}[2]")
        triples.append((u, v, length))
    uniform = obj.get("uniform_length")
    uniform_length = None if uniform is None else parse_rational(uniform, "uniform_length")
    return StringNetwork.from_triples(nodes, triples, source, target, uniform_length=uniform_length)


def network_to_obj(net: StringNetwork) -> dict:
    obj = {
        "nodes": net.node_count,
        "edges": [[e.u, e.v, format_rational(e.length)] for e in net.edges],
        "source": net.source,
        "target": net.target,
    }
    if net.uniform_length is not None:
        obj["uniform_length"] = format_rational(net.uniform_length)
    return obj


def read_network(path: str | Path) -> StringNetwork:
    text = Path(path).read_text()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc.msg}", line=exc.lineno) from None
    return parse_network(obj)


def write_network(net: StringNetwork, path: str | Path) -> None:
    Path(path).write_text(json.dumps(network_to_obj(net), indent=2) + "\n")


def read_batch_specs(path: str | Path) -> list[GeneratorSpec]:
    """Batch spec file: one generator spec JSON object per line; blank lines
    are skipped."""
    specs = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(f"not valid JSON: {exc.msg}", line=lineno) from None
        if not isinstance(obj, dict):
            raise ParseError("spec line must be a JSON object", line=lineno)
        try:
            specs.append(spec_from_obj(obj))
        except (ValueError, TypeError) as exc:
            raise ParseError(str(exc), line=lineno) from None
    return specs
