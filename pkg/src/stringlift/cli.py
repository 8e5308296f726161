"""Command-line client for the stringlift service.

The CLI does argument parsing, file IO, and output formatting only; every
computation happens behind the service endpoints. By default requests run
against an in-process instance of the app, so no server is needed; pass
--server (or set STRINGLIFT_SERVER) to talk to a running one.

Exit codes: 0 success, 1 property/correspondence failure, 2 input error.
"""

from __future__ import annotations

import asyncio
import json
import sys
from pathlib import Path

import click
import httpx

PROPERTY_FAILURE = 1
INPUT_ERROR = 2


class ServiceClient:
    def __init__(self, server: str | None):
        self.server = server

    def post(self, path: str, payload: dict) -> tuple[int, dict]:
        if self.server:
            with httpx.Client(base_url=self.server, timeout=300.0) as client:
                response = client.post(path, json=payload)
                return response.status_code, response.json()
        return asyncio.run(self._post_local(path, payload))

    async def _post_local(self, path: str, payload: dict) -> tuple[int, dict]:
        from .service.app import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(transport=transport, base_url="http://stringlift.local") as client:
            response = await client.post(path, json=payload)
            return response.status_code, response.json()


def _call(client: ServiceClient, path: str, payload: dict) -> dict:
    try:
        status, body = client.post(path, payload)
    except httpx.HTTPError as exc:
        click.echo(f"error: service unreachable: {exc}", err=True)
        sys.exit(INPUT_ERROR)
    if status != 200:
        detail = body.get("detail", body) if isinstance(body, dict) else body
        click.echo(f"error: {json.dumps(detail)}", err=True)
        sys.exit(INPUT_ERROR)
    return body


def _load_json_file(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        sys.exit(INPUT_ERROR)
    except json.JSONDecodeError as exc:
        click.echo(f"error: {path} is not valid JSON (line {exc.lineno})", err=True)
        sys.exit(INPUT_ERROR)


def _load_spec_lines(path: str) -> list[dict]:
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        sys.exit(INPUT_ERROR)
    specs = []
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            specs.append(json.loads(line))
        except json.JSONDecodeError:
            click.echo(f"error: {path}:{lineno} is not a valid JSON object", err=True)
            sys.exit(INPUT_ERROR)
    return specs


def _write_jsonl(records: list[dict], path: str) -> None:
    Path(path).write_text("".join(json.dumps(r) + "\n" for r in records))


def _fmt_path(path: list[int]) -> str:
    return " -> ".join(str(x) for x in path)


net_option = click.option("--net", "net_path", required=True, type=click.Path(exists=True, dir_okay=False),
                          help="Network file (JSON).")


@click.group()
@click.option("--server", envvar="STRINGLIFT_SERVER", default=None,
              help="Base URL of a running service; default runs in-process.")
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """String-network shortest paths with exact cost accounting."""
    ctx.obj = ServiceClient(server)


@main.command()
@click.option("--kind", required=True,
              type=click.Choice(["path", "cycle", "star", "complete", "grid", "erdos_renyi", "geometric"]))
@click.option("--size", required=True, type=int)
@click.option("--size2", type=int, default=None, help="Grid columns (defaults to --size).")
@click.option("--p", "edge_probability", default=None, help="Edge probability for erdos_renyi ('p/q' or int).")
@click.option("--radius", default=None, help="Taxicab radius for geometric ('p/q' or int).")
@click.option("--length", default="1", help="Uniform string length ('p/q' or int).")
@click.option("--weighted", is_flag=True, help="Random rational lengths instead of a uniform one.")
@click.option("--seed", type=int, default=0, envvar="STRINGLIFT_SEED", show_envvar=True)
@click.option("--source", type=int, default=None)
@click.option("--target", type=int, default=None)
@click.option("--out", required=True, type=click.Path(dir_okay=False))
@click.pass_obj
def generate(client: ServiceClient, kind: str, size: int, size2: int | None, edge_probability: str | None,
             radius: str | None, length: str, weighted: bool, seed: int,
             source: int | None, target: int | None, out: str) -> None:
    """Generate a seeded network and write it to a file."""
    spec: dict = {"kind": kind, "size": size, "seed": seed,
                  "uniform_length": None if weighted else length}
    if size2 is not None:
        spec["size2"] = size2
    if edge_probability is not None:
        spec["edge_probability"] = edge_probability
    if radius is not None:
        spec["radius"] = radius
    if source is not None:
        spec["source"] = source
    if target is not None:
        spec["target"] = target
    body = _call(client, "/networks/generate", {"spec": spec})
    network = body["network"]
    if network.get("uniform_length") is None:
        network.pop("uniform_length", None)
    Path(out).write_text(json.dumps(network, indent=2) + "\n")
    click.echo(f"wrote {out} (nodes={network['nodes']}, edges={len(network['edges'])})")


@main.command()
@net_option
@click.option("--w", default="1", help="Knot weight ('p/q' or int).")
@click.option("--d", default="1", help="Lift step / string length ('p/q' or int).")
@click.option("--trace", "trace_path", type=click.Path(dir_okay=False), default=None,
              help="Write the per-step trace as JSON lines.")
@click.pass_obj
def lift(client: ServiceClient, net_path: str, w: str, d: str, trace_path: str | None) -> None:
    """Simulate the discrete lift and report work under both weight models."""
    payload = {"network": _load_json_file(net_path), "w": w, "d": d,
               "include_trace": trace_path is not None}
    body = _call(client, "/lift", payload)
    click.echo(f"n = {body['n']}")
    click.echo(f"work (node-weight model) = {body['work_node_model']}")
    click.echo(f"work (string-weight model) = {body['work_string_model']}")
    click.echo(f"path: {_fmt_path(body['path'])}")
    if trace_path is not None:
        _write_jsonl(body["trace"], trace_path)
        click.echo(f"trace written to {trace_path}")


@main.command()
@net_option
@click.option("--variant", required=True, type=click.Choice(["naive-set", "enumerating", "marked"]))
@click.option("--t", default="1", help="Time per addition ('p/q' or int).")
@click.option("--trace", "trace_path", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def bfs(client: ServiceClient, net_path: str, variant: str, t: str, trace_path: str | None) -> None:
    """Run one of the instrumented search variants."""
    payload = {"network": _load_json_file(net_path), "variant": variant, "t": t,
               "include_trace": trace_path is not None}
    body = _call(client, "/bfs", payload)
    click.echo(f"variant = {variant}")
    click.echo(f"n = {body['n']}")
    click.echo(f"time_units = {body['time_units']}")
    click.echo(f"per-iteration charges: {body['per_iteration']}")
    if body.get("path") is not None:
        click.echo(f"path: {_fmt_path(body['path'])}")
    if trace_path is not None:
        _write_jsonl(body["trace"], trace_path)
        click.echo(f"trace written to {trace_path}")


@main.command()
@net_option
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None,
              help="Write settle records as JSON lines.")
@click.pass_obj
def dijkstra(client: ServiceClient, net_path: str, out_path: str | None) -> None:
    """Length-weighted shortest path with deterministic settle order."""
    payload = {"network": _load_json_file(net_path), "include_trace": out_path is not None}
    body = _call(client, "/dijkstra", payload)
    click.echo(f"distance = {body['distance']}")
    click.echo(f"path: {_fmt_path(body['path'])}")
    click.echo(f"settle order: {body['settle_order']}")
    if out_path is not None:
        _write_jsonl(body["trace"], out_path)
        click.echo(f"records written to {out_path}")


@main.command()
@net_option
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def liftoff(client: ServiceClient, net_path: str, out_path: str | None) -> None:
    """Lift-off height of every knot under a vertical lift at the source."""
    payload = {"network": _load_json_file(net_path), "include_trace": out_path is not None}
    body = _call(client, "/liftoff", payload)
    for node, height in body["events"]:
        click.echo(f"node {node} lifts off at height {height}")
    if body["unreachable"]:
        click.echo(f"never lifted (unreachable): {body['unreachable']}")
    if out_path is not None:
        _write_jsonl(body["trace"], out_path)
        click.echo(f"records written to {out_path}")


@main.command(name="pull-apart")
@net_option
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None)
@click.pass_obj
def pull_apart(client: ServiceClient, net_path: str, out_path: str | None) -> None:
    """Pull the network taut at source and target."""
    payload = {"network": _load_json_file(net_path), "include_trace": out_path is not None}
    body = _call(client, "/pull-apart", payload)
    click.echo(f"separation = {body['separation']}")
    click.echo(f"path: {_fmt_path(body['path'])}")
    click.echo("taut edges:")
    for u, v, length in body["taut_edges"]:
        click.echo(f"  ({u}, {v}) length {length}")
    if out_path is not None:
        _write_jsonl(body["trace"], out_path)
        click.echo(f"records written to {out_path}")


@main.command()
@click.option("--batch", "batch_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Batch spec file: one generator spec JSON object per line.")
@click.option("--net", "net_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Single network: print the formula-vs-counter table.")
@click.option("--w", default="1")
@click.option("--d", default=None, help="Lift step; defaults to the network's uniform length.")
@click.option("--t", default="1")
@click.option("--workers", type=int, default=1)
@click.pass_obj
def verify(client: ServiceClient, batch_path: str | None, net_path: str | None,
           w: str, d: str | None, t: str, workers: int) -> None:
    """Check simulation counters against the closed-form cost formulas."""
    if (batch_path is None) == (net_path is None):
        click.echo("error: pass exactly one of --batch or --net", err=True)
        sys.exit(INPUT_ERROR)

    if net_path is not None:
        payload: dict = {"network": _load_json_file(net_path), "w": w, "t": t}
        if d is not None:
            payload["d"] = d
        body = _call(client, "/correspondence", payload)
        rows = [
            ("node-model work", body["work_node_formula"], body["work_node_counter"]),
            ("set-BFS time", body["time_set_formula"], body["time_set_counter"]),
            ("enumeration-BFS time", body["time_enumeration_formula"], body["time_enumeration_counter"]),
            ("string-model work", body["work_string_formula"], body["work_string_counter"]),
        ]
        click.echo(f"n = {body['n']}")
        click.echo(f"{'quantity':<22} {'formula':>10} {'counter':>10} match")
        for name, formula, counter in rows:
            match = "yes" if formula == counter else "NO"
            click.echo(f"{name:<22} {formula!s:>10} {counter!s:>10} {match}")
        click.echo(f"work/time ratio (node model) = {body['ratio_node']}")
        click.echo(f"work/time ratio (string model) = {body['ratio_string']}")
        click.echo(f"correspondence: {'OK' if body['correspondence_ok'] else 'FAILED'}")
        if not body["correspondence_ok"]:
            sys.exit(PROPERTY_FAILURE)
        return

    specs = _load_spec_lines(batch_path)
    body = _call(client, "/verify", {"specs": specs, "w": w, "t": t, "workers": workers})
    for failure in body["failures"]:
        click.echo(f"FAIL seed={failure['seed']} {failure['spec']}: {failure['property']}")
    click.echo(f"passed {body['passed']}/{body['total']}")
    if body["passed"] != body["total"]:
        sys.exit(PROPERTY_FAILURE)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("stringlift.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
