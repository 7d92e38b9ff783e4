"""FastAPI application exposing the toolkit over HTTP.

Thin handlers: parse the request strings, call the library, shape the
response.  Library errors map to 422 (bad input) except budget refusals,
which map to 400 and carry the computed requirement so callers can
resubmit with a larger budget.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from .. import __version__
from ..confluence import certify_local_confluence
from ..congruence import (
    build_table,
    check_sym_identity,
    growth,
    rho_class_count,
    stabilizer_reduction,
    table_to_csv,
)
from ..counting import series_report, series_to_csv
from ..errors import BudgetExceededError, PermrelError
from ..free_group import group_element_to_dict, phi, render_group_element
from ..presentation import presentation_from_spec, resolve_permutation_set
from ..rewriting import decompose, is_in_P, rewrite_steps
from ..words import format_word, parse_word
from . import schemas


def _normal_form_response(n: int, word, request_text: str) -> schemas.NormalFormResponse:
    nf, steps = rewrite_steps(word, n)
    parts = decompose(nf, n)
    return schemas.NormalFormResponse(
        n=n,
        input=request_text,
        normal_form=format_word(nf),
        steps=steps,
        ones=parts.ones,
        central=parts.central,
        ascents=parts.ascents,
        tail=format_word(parts.tail),
        in_p=is_in_P(word, n),
    )


def create_app() -> FastAPI:
    app = FastAPI(title="permrel", version=__version__)

    @app.exception_handler(BudgetExceededError)
    async def budget_handler(request: Request, exc: BudgetExceededError):
        return JSONResponse(
            status_code=400,
            content={
                "error": "budget-exceeded",
                "required": exc.required,
                "budget": exc.budget,
            },
        )

    @app.exception_handler(PermrelError)
    async def library_error_handler(request: Request, exc: PermrelError):
        return JSONResponse(
            status_code=422,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.exception_handler(ValueError)
    async def value_error_handler(request: Request, exc: ValueError):
        return JSONResponse(
            status_code=422,
            content={"error": "ValueError", "detail": str(exc)},
        )

    @app.get("/health", response_model=schemas.HealthResponse)
    async def health() -> schemas.HealthResponse:
        return schemas.HealthResponse(status="ok", version=__version__)

    @app.post("/nf", response_model=schemas.NormalFormResponse)
    async def normal_form_endpoint(body: schemas.WordRequest):
        word = parse_word(body.word, body.n)
        return _normal_form_response(body.n, word, format_word(word))

    @app.post("/eq", response_model=schemas.EqualResponse)
    async def equality_endpoint(body: schemas.PairRequest):
        left = parse_word(body.left, body.n)
        right = parse_word(body.right, body.n)
        left_nf, _ = rewrite_steps(left, body.n)
        right_nf, _ = rewrite_steps(right, body.n)
        return schemas.EqualResponse(
            n=body.n,
            equal=left_nf == right_nf,
            left_normal=format_word(left_nf),
            right_normal=format_word(right_nf),
        )

    @app.post("/mul", response_model=schemas.NormalFormResponse)
    async def product_endpoint(body: schemas.PairRequest):
        left = parse_word(body.left, body.n)
        right = parse_word(body.right, body.n)
        product = left + right
        return _normal_form_response(body.n, product, format_word(product))

    @app.post("/phi", response_model=schemas.GroupElementResponse)
    async def embedding_endpoint(body: schemas.WordRequest):
        word = parse_word(body.word, body.n)
        image = phi(word, body.n)
        data = group_element_to_dict(image)
        return schemas.GroupElementResponse(
            n=body.n,
            input=format_word(word),
            syllables=data["syllables"],
            c=data["c"],
            rendered=render_group_element(image),
        )

    @app.post("/growth", response_model=schemas.GrowthResponse)
    async def growth_endpoint(body: schemas.GrowthRequest):
        pres = presentation_from_spec(body.n, body.h)
        counts = growth(pres, body.max_length, budget=body.budget)
        return schemas.GrowthResponse(n=body.n, h=body.h, counts=counts)

    @app.post("/series", response_model=schemas.SeriesResponse)
    async def series_endpoint(body: schemas.SeriesRequest):
        report = series_report(body.n, body.max_length, budget=body.budget)
        return schemas.SeriesResponse(**report.to_dict())

    @app.post("/series/csv", response_class=PlainTextResponse)
    async def series_csv_endpoint(body: schemas.SeriesRequest):
        report = series_report(body.n, body.max_length, budget=body.budget)
        return PlainTextResponse(series_to_csv(report), media_type="text/csv")

    @app.post("/confluence", response_model=schemas.ConfluenceResponse)
    async def confluence_endpoint(body: schemas.ConfluenceRequest):
        summary = certify_local_confluence(
            body.n, body.max_m, include_illegal=body.include_illegal
        )
        return schemas.ConfluenceResponse(**summary.to_dict())

    @app.post("/explore", response_model=schemas.ExploreResponse)
    async def explore_endpoint(body: schemas.ExploreRequest):
        pres = presentation_from_spec(body.n, body.h)
        table = build_table(pres, body.length, budget=body.budget)
        samples = []
        if body.sample:
            sizes = table.class_sizes()
            chosen = sorted(
                (table.representatives[root], count) for root, count in sizes.items()
            )[: body.sample]
            samples = [
                schemas.ClassSample(representative=format_word(rep), size=count)
                for rep, count in chosen
            ]
        return schemas.ExploreResponse(
            n=body.n,
            h=body.h,
            length=body.length,
            class_count=table.class_count,
            singleton_count=table.singleton_count(),
            classes=samples,
        )

    @app.post("/explore/csv", response_class=PlainTextResponse)
    async def explore_csv_endpoint(body: schemas.ExploreRequest):
        pres = presentation_from_spec(body.n, body.h)
        table = build_table(pres, body.length, budget=body.budget)
        return PlainTextResponse(table_to_csv(table), media_type="text/csv")

    @app.post("/reduce", response_model=schemas.ReduceResponse)
    async def reduce_endpoint(body: schemas.ReduceRequest):
        h = resolve_permutation_set(body.n, body.h)
        reduction = stabilizer_reduction(h)
        relations = [
            f"{format_word(lhs)} = {format_word(rhs)}"
            for lhs, rhs in reduction.induced_relations
        ]
        return schemas.ReduceResponse(
            n=body.n,
            h=body.h,
            group_order=len(h.members),
            stabilizer_order=len(reduction.h1.members),
            free=reduction.is_free,
            relation_count=len(relations),
            relations=relations,
            reduced_degree=body.n - 1,
        )

    @app.post("/rho", response_model=schemas.RhoResponse)
    async def rho_endpoint(body: schemas.RhoRequest):
        pres = presentation_from_spec(body.n, body.h)
        count = rho_class_count(pres, body.length, body.power, budget=body.budget)
        plain = build_table(pres, body.length, budget=body.budget).class_count
        return schemas.RhoResponse(
            n=body.n,
            h=body.h,
            length=body.length,
            power=body.power,
            class_count=count,
            plain_class_count=plain,
        )

    @app.post("/sym-identity", response_model=schemas.SymIdentityResponse)
    async def sym_identity_endpoint(body: schemas.SymIdentityRequest):
        h = None if body.h is None else resolve_permutation_set(body.n, body.h)
        holds = check_sym_identity(body.n, body.i, body.j, h=h, budget=body.budget)
        return schemas.SymIdentityResponse(
            n=body.n, i=body.i, j=body.j, h=body.h or "sym", holds=holds
        )

    return app


app = create_app()
