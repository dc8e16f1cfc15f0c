"""FastAPI service wrapping the core package.

Error contract: malformed input maps to 400 with code "bad-argument",
hypothesis violations map to 409 with code "hypothesis".  Both carry a
human-readable message under detail.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..classify import enumerate_matrices, report_csv, verify_classification
from ..doubling import build_double
from ..errors import BadArgumentError, HypothesisError
from ..groups import build_group, center_index, is_abelian, is_elementary_abelian_2
from ..identities import check_identity, get_builtin, parse_identity
from ..morphisms import are_anti_isomorphic, are_isomorphic
from ..pairops import OpMatrix
from ..tables import format_table_text, parse_table_text
from .schemas import (
    CheckRequest,
    CheckResponse,
    ConstructRequest,
    ConstructResponse,
    CounterexampleModel,
    EnumerateRequest,
    EnumerateResponse,
    GroupInfoRequest,
    GroupInfoResponse,
    IsoRequest,
    IsoResponse,
    VerifyRequest,
    VerifyResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(title="cheinloops", version=__version__)

    @app.exception_handler(BadArgumentError)
    async def _bad_argument(request: Request, exc: BadArgumentError) -> JSONResponse:
        return JSONResponse(
            status_code=400,
            content={"detail": {"code": "bad-argument", "message": str(exc)}},
        )

    @app.exception_handler(HypothesisError)
    async def _hypothesis(request: Request, exc: HypothesisError) -> JSONResponse:
        return JSONResponse(
            status_code=409,
            content={"detail": {"code": "hypothesis", "message": str(exc)}},
        )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/group-info", response_model=GroupInfoResponse)
    def group_info(req: GroupInfoRequest) -> GroupInfoResponse:
        g = build_group(req.group)
        return GroupInfoResponse(
            group=str(g.spec),
            order=g.n,
            abelian=is_abelian(g),
            elementary_abelian_2=is_elementary_abelian_2(g),
            center_index=center_index(g),
        )

    @app.post("/construct", response_model=ConstructResponse)
    def construct(req: ConstructRequest) -> ConstructResponse:
        g = build_group(req.group)
        m = OpMatrix.parse(req.matrix)
        d = build_double(g, m)
        return ConstructResponse(
            group=str(g.spec),
            matrix=str(m),
            order=d.n,
            table_text=format_table_text(d.table),
            sidecar=d.sidecar(),
        )

    @app.post("/check", response_model=CheckResponse)
    def check(req: CheckRequest) -> CheckResponse:
        if (req.law is None) == (req.identity is None):
            raise BadArgumentError("provide exactly one of 'law' or 'identity'")
        table = parse_table_text(req.table_text)
        identity = get_builtin(req.law) if req.law is not None else parse_identity(req.identity)
        cx = check_identity(table, identity)
        model = None
        if cx is not None:
            model = CounterexampleModel(
                assignment=list(cx.assignment), lhs=cx.lhs, rhs=cx.rhs
            )
        return CheckResponse(holds=cx is None, identity=str(identity), counterexample=model)

    @app.post("/enumerate", response_model=EnumerateResponse)
    def enumerate_all(req: EnumerateRequest) -> EnumerateResponse:
        g = build_group(req.group)
        report = enumerate_matrices(g, jobs=req.jobs)
        return EnumerateResponse(
            report=report.as_dict(),
            csv=report_csv(report) if req.include_csv else None,
            all_checks_pass=report.all_checks_pass,
        )

    @app.post("/verify-theorem", response_model=VerifyResponse)
    def verify_theorem(req: VerifyRequest) -> VerifyResponse:
        g = build_group(req.group)
        verdict = verify_classification(g, jobs=req.jobs)
        return VerifyResponse(passed=bool(verdict["passed"]), verdict=verdict)

    @app.post("/iso", response_model=IsoResponse)
    def iso(req: IsoRequest) -> IsoResponse:
        a = parse_table_text(req.table_a_text)
        b = parse_table_text(req.table_b_text)
        witness = are_anti_isomorphic(a, b) if req.anti else are_isomorphic(a, b)
        return IsoResponse(found=witness is not None, map=witness)

    return app


app = create_app()
