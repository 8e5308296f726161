"""FastAPI service exposing the simulator.

Every endpoint is stateless: the network travels in the request body and
the result in the response. Domain errors map to 422 with a machine-usable
error code; proper validation problems are reported through
/networks/validate (or rejected with the violation list when an algorithm
endpoint receives an invalid network).
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..continuous import liftoff_schedule, pull_apart
from ..errors import NonUniform, StringliftError
from ..formulas import check_correspondence
from ..generators import generate
from ..lift import run_lift
from ..netio import parse_rational
from ..network import CostParams, StringNetwork, detect_uniform_length, validate
from ..search import dijkstra, enumerating_bfs, marked_bfs, naive_set_bfs
from ..traces import (
    bfs_run_records,
    dijkstra_records,
    lift_trace_records,
    liftoff_records,
    pull_apart_records,
)
from ..verify import verify_batch
from . import schemas


def create_app() -> FastAPI:
    app = FastAPI(
        title="stringlift",
        description="String-network shortest paths with exact work and time accounting",
    )

    @app.exception_handler(StringliftError)
    async def domain_error(_request: Request, exc: StringliftError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": {"error": exc.code, "message": str(exc)}})

    @app.exception_handler(ValueError)
    async def value_error(_request: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": {"error": "invalid_input", "message": str(exc)}})

    def required_valid(model: schemas.NetworkModel) -> StringNetwork:
        net = model.to_network()
        report = validate(net)
        if not report.ok:
            raise ValueError("invalid network: " + "; ".join(f"{v.kind}: {v.detail}" for v in report.violations))
        return net

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/networks/generate", response_model=schemas.GenerateResponse)
    def generate_network(request: schemas.GenerateRequest) -> schemas.GenerateResponse:
        net = generate(request.spec.to_spec())
        return schemas.GenerateResponse(network=schemas.NetworkModel.from_network(net))

    @app.post("/networks/validate", response_model=schemas.ValidateResponse)
    def validate_network(request: schemas.ValidateRequest) -> schemas.ValidateResponse:
        return schemas.ValidateResponse.from_report(validate(request.network.to_network()))

    @app.post("/lift", response_model=schemas.LiftResponse, response_model_exclude_none=True)
    def lift(request: schemas.LiftRequest) -> schemas.LiftResponse:
        net = required_valid(request.network)
        params = schemas.cost_params(w=request.w, d=request.d)
        result = run_lift(net, params)
        trace = lift_trace_records(result) if request.include_trace else None
        return schemas.LiftResponse.from_result(result, trace)

    @app.post("/bfs", response_model=schemas.BfsResponse, response_model_exclude_none=True)
    def bfs(request: schemas.BfsRequest) -> schemas.BfsResponse:
        net = required_valid(request.network)
        if request.variant == "naive-set":
            run = naive_set_bfs(net, schemas.cost_params(t=request.t))
        elif request.variant == "enumerating":
            run = enumerating_bfs(net, schemas.cost_params(t=request.t))
        else:
            run = marked_bfs(net)
        trace = bfs_run_records(run, request.variant) if request.include_trace else None
        return schemas.BfsResponse.from_run(run, request.variant, trace)

    @app.post("/dijkstra", response_model=schemas.DijkstraResponse, response_model_exclude_none=True)
    def dijkstra_endpoint(request: schemas.DijkstraRequest) -> schemas.DijkstraResponse:
        run = dijkstra(required_valid(request.network))
        trace = dijkstra_records(run) if request.include_trace else None
        return schemas.DijkstraResponse.from_run(run, trace)

    @app.post("/liftoff", response_model=schemas.LiftoffResponse, response_model_exclude_none=True)
    def liftoff(request: schemas.LiftoffRequest) -> schemas.LiftoffResponse:
        schedule = liftoff_schedule(required_valid(request.network))
        trace = liftoff_records(schedule) if request.include_trace else None
        return schemas.LiftoffResponse.from_schedule(schedule, trace)

    @app.post("/pull-apart", response_model=schemas.PullApartResponse, response_model_exclude_none=True)
    def pull_apart_endpoint(request: schemas.PullApartRequest) -> schemas.PullApartResponse:
        result = pull_apart(required_valid(request.network))
        trace = pull_apart_records(result) if request.include_trace else None
        return schemas.PullApartResponse.from_result(result, trace)

    @app.post("/correspondence", response_model=schemas.CorrespondenceResponse)
    def correspondence(request: schemas.CorrespondenceRequest) -> schemas.CorrespondenceResponse:
        net = required_valid(request.network)
        if request.d is not None:
            d = parse_rational(request.d, "d")
        else:
            d = detect_uniform_length(net)
            if d is None:
                raise NonUniform("network has no single string length; pass d explicitly")
        params = CostParams(w=parse_rational(request.w, "w"), d=d, t=parse_rational(request.t, "t"))
        return schemas.CorrespondenceResponse.from_report(check_correspondence(net, params))

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(request: schemas.VerifyRequest) -> schemas.VerifyResponse:
        specs = [model.to_spec() for model in request.specs]
        params = CostParams(w=parse_rational(request.w, "w"), t=parse_rational(request.t, "t"))
        report = verify_batch(specs, params=params, workers=request.workers)
        return schemas.VerifyResponse.from_report(report)

    return app


app = create_app()
