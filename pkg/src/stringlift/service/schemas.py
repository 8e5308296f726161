"""Pydantic request/response models for the HTTP service.

The wire encoding of a network is identical to the network file format, so
clients can post a file's contents verbatim. Rationals travel as ints or
"p/q" strings, never floats.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel

from ..continuous import LiftoffSchedule, PullApartResult
from ..formulas import ComplexityReport
from ..generators import GeneratorSpec, spec_from_obj
from ..lift import LiftResult
from ..netio import format_rational, parse_network, parse_rational
from ..network import CostParams, StringNetwork, ValidationReport
from ..search import BfsRun, DijkstraRun
from ..verify import BatchReport

Rational = int | str


class NetworkModel(BaseModel):
    nodes: int
    edges: list[tuple[int, int, Rational]]
    source: int
    target: int
    uniform_length: Rational | None = None

    def to_network(self) -> StringNetwork:
        obj = self.model_dump()
        if obj["uniform_length"] is None:
            del obj["uniform_length"]
        obj["edges"] = [list(e) for e in obj["edges"]]
        return parse_network(obj)

    @classmethod
    def from_network(cls, net: StringNetwork) -> "NetworkModel":
        return cls(
            nodes=net.node_count,
            edges=[(e.u, e.v, format_rational(e.length)) for e in net.edges],
            source=net.source,
            target=net.target,
            uniform_length=None if net.uniform_length is None else format_rational(net.uniform_length),
        )


class GeneratorSpecModel(BaseModel):
    kind: str
    size: int
    size2: int | None = None
    edge_probability: Rational | None = None
    radius: Rational | None = None
    uniform_length: Rational | None = 1
    seed: int = 0
    source: int | None = None
    target: int | None = None

    def to_spec(self) -> GeneratorSpec:
        obj = {k: v for k, v in self.model_dump().items() if v is not None}
        obj["uniform_length"] = self.uniform_length
        return spec_from_obj(obj)


def cost_params(w: Rational = 1, d: Rational = 1, t: Rational = 1) -> CostParams:
    return CostParams(
        w=parse_rational(w, "w"),
        d=parse_rational(d, "d"),
        t=parse_rational(t, "t"),
    )


class GenerateRequest(BaseModel):
    spec: GeneratorSpecModel


class GenerateResponse(BaseModel):
    network: NetworkModel


class ValidateRequest(BaseModel):
    network: NetworkModel


class ViolationModel(BaseModel):
    kind: str
    detail: str


class ValidateResponse(BaseModel):
    ok: bool
    violations: list[ViolationModel]

    @classmethod
    def from_report(cls, report: ValidationReport) -> "ValidateResponse":
        return cls(ok=report.ok,
                   violations=[ViolationModel(kind=v.kind, detail=v.detail) for v in report.violations])


class LiftRequest(BaseModel):
    network: NetworkModel
    w: Rational = 1
    d: Rational = 1
    include_trace: bool = False


class LiftResponse(BaseModel):
    n: int
    work_node_model: Rational
    work_string_model: Rational
    path: list[int]
    trace: list[dict] | None = None

    @classmethod
    def from_result(cls, result: LiftResult, trace: list[dict] | None) -> "LiftResponse":
        return cls(
            n=result.n,
            work_node_model=format_rational(result.work_node_model),
            work_string_model=format_rational(result.work_string_model),
            path=list(result.path),
            trace=trace,
        )


BfsVariant = Literal["naive-set", "enumerating", "marked"]


class BfsRequest(BaseModel):
    network: NetworkModel
    variant: BfsVariant
    t: Rational = 1
    include_trace: bool = False


class BfsResponse(BaseModel):
    variant: BfsVariant
    n: int
    time_units: Rational
    per_iteration: list[int]
    path: list[int] | None = None
    trace: list[dict] | None = None

    @classmethod
    def from_run(cls, run: BfsRun, variant: BfsVariant, trace: list[dict] | None = None) -> "BfsResponse":
        return cls(
            variant=variant,
            n=run.n,
            time_units=format_rational(run.time_units),
            per_iteration=list(run.per_iteration),
            path=None if run.path is None else list(run.path),
            trace=trace,
        )


class DijkstraRequest(BaseModel):
    network: NetworkModel
    include_trace: bool = False


class DijkstraResponse(BaseModel):
    distance: Rational
    settle_order: list[int]
    dist: list[tuple[int, Rational]]
    path: list[int]
    trace: list[dict] | None = None

    @classmethod
    def from_run(cls, run: DijkstraRun, trace: list[dict] | None = None) -> "DijkstraResponse":
        return cls(
            distance=format_rational(run.distance),
            settle_order=list(run.settle_order),
            dist=[(node, format_rational(run.dist_map[node])) for node in sorted(run.dist_map)],
            path=list(run.path),
            trace=trace,
        )


class LiftoffRequest(BaseModel):
    network: NetworkModel
    include_trace: bool = False


class LiftoffResponse(BaseModel):
    events: list[tuple[int, Rational]]
    unreachable: list[int]
    trace: list[dict] | None = None

    @classmethod
    def from_schedule(cls, schedule: LiftoffSchedule, trace: list[dict] | None = None) -> "LiftoffResponse":
        return cls(
            events=[(e.node, format_rational(e.height)) for e in schedule.events],
            unreachable=list(schedule.unreachable),
            trace=trace,
        )


class PullApartRequest(BaseModel):
    network: NetworkModel
    include_trace: bool = False


class PullApartResponse(BaseModel):
    separation: Rational
    taut_edges: list[tuple[int, int, Rational]]
    path: list[int]
    trace: list[dict] | None = None

    @classmethod
    def from_result(cls, result: PullApartResult, trace: list[dict] | None = None) -> "PullApartResponse":
        return cls(
            separation=format_rational(result.separation),
            taut_edges=[(e.u, e.v, format_rational(e.length)) for e in sorted(result.taut_edges)],
            path=list(result.path),
            trace=trace,
        )


class CorrespondenceRequest(BaseModel):
    network: NetworkModel
    w: Rational = 1
    d: Rational | None = None
    t: Rational = 1


class CorrespondenceResponse(BaseModel):
    n: int
    work_node_formula: Rational
    work_node_counter: Rational
    time_set_formula: Rational
    time_set_counter: Rational
    time_enumeration_formula: Rational
    time_enumeration_counter: Rational
    work_string_formula: Rational
    work_string_counter: Rational
    ratio_node: Rational
    ratio_string: Rational
    correspondence_ok: bool

    @classmethod
    def from_report(cls, report: ComplexityReport) -> "CorrespondenceResponse":
        return cls(
            n=report.n,
            work_node_formula=format_rational(report.work_node_formula),
            work_node_counter=format_rational(report.work_node_counter),
            time_set_formula=format_rational(report.time_set_formula),
            time_set_counter=format_rational(report.time_set_counter),
            time_enumeration_formula=format_rational(report.time_enumeration_formula),
            time_enumeration_counter=format_rational(report.time_enumeration_counter),
            work_string_formula=format_rational(report.work_string_formula),
            work_string_counter=format_rational(report.work_string_counter),
            ratio_node=format_rational(report.ratio_node),
            ratio_string=format_rational(report.ratio_string),
            correspondence_ok=report.correspondence_ok,
        )


class VerifyRequest(BaseModel):
    specs: list[GeneratorSpecModel]
    w: Rational = 1
    t: Rational = 1
    workers: int = 1


class BatchFailureModel(BaseModel):
    seed: int
    spec: str
    property: str


class VerifyResponse(BaseModel):
    total: int
    passed: int
    failures: list[BatchFailureModel]

    @classmethod
    def from_report(cls, report: BatchReport) -> "VerifyResponse":
        return cls(
            total=report.total,
            passed=report.passed,
            failures=[BatchFailureModel(seed=f.seed, spec=f.spec, property=f.failed_property)
                      for f in report.failures],
        )
