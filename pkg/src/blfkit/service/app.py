"""FastAPI application exposing every operation over JSON.

The service is stateless: documents travel as .blf text in request
bodies, results come back as text or structured fields. Library errors
surface as HTTP 422 with a `kind` the CLI maps onto exit codes.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..blffile import parse_document, serialize_document
from ..errors import BlfError, ParseError
from ..fibration import PARITY_DISPLAY, global_monodromy, resolve_parity, validate
from ..invariants import build_record, h1_text, homeo_report
from ..surface import CurveWord
from ..surgery import (
    BrokenFiberSumSpec,
    blow_down,
    broken_fiber_sum,
    connected_sum_model,
    example42_family,
    push_to_higher_side,
    step_fibration,
    trade_negative_node,
)
from ..sw import (
    ChamberData,
    adjunction_check,
    section_constraint,
    simple_type_check,
    sphere_torus_vanishing,
    sw_symmetry,
    wall_crossing,
)
from . import schemas


def _invariants_payload(record) -> schemas.InvariantsOut:
    chi = None
    if record.chi_h is not None:
        chi = (
            str(record.chi_h.numerator)
            if record.chi_h.denominator == 1
            else f"{record.chi_h.numerator}/{record.chi_h.denominator}"
        )
    return schemas.InvariantsOut(
        e=record.e,
        sigma=record.sigma,
        chi_h=chi,
        b_plus=record.b_plus,
        b_minus=record.b_minus,
        pi1=record.pi1_summary,
        h1=h1_text(record.h1),
        label=record.label,
        text=record.to_text(),
    )


def create_app() -> FastAPI:
    app = FastAPI(title="blfkit", version="0.1.0")

    @app.exception_handler(BlfError)
    async def _blf_error(request: Request, exc: BlfError):
        payload = schemas.ErrorOut(
            kind=exc.kind,
            message=str(exc),
            line=exc.line if isinstance(exc, ParseError) else None,
            col=exc.col if isinstance(exc, ParseError) else None,
        )
        return JSONResponse(status_code=422, content=payload.model_dump())

    @app.post("/validate", response_model=schemas.ValidateOut)
    def do_validate(body: schemas.TextIn):
        report = validate(parse_document(body.text))
        return schemas.ValidateOut(
            ok=not report,
            violations=[
                schemas.ViolationOut(code=v.code, where=v.where, message=v.message)
                for v in report
            ],
        )

    @app.post("/invariants", response_model=schemas.InvariantsOut)
    def do_invariants(body: schemas.TextIn):
        f = parse_document(body.text)
        return _invariants_payload(build_record(f, assume_section=body.assume_section))

    @app.post("/monodromy", response_model=schemas.MonodromyOut)
    def do_monodromy(body: schemas.TextIn):
        f = parse_document(body.text)
        m = global_monodromy(f.higher)
        return schemas.MonodromyOut(
            genus=m.genus,
            matrix=[list(row) for row in m.matrix.rows],
            identity=m.matrix.is_identity(),
        )

    @app.post("/parity", response_model=schemas.ParityOut)
    def do_parity(body: schemas.TextIn):
        f = parse_document(body.text)
        return schemas.ParityOut(
            parities=[
                PARITY_DISPLAY[resolve_parity(f, i)] for i in range(len(f.cobordisms))
            ]
        )

    @app.post("/report", response_model=schemas.ReportOut)
    def do_report(body: schemas.TextIn):
        f = parse_document(body.text)
        record = build_record(f, assume_section=body.assume_section)
        return schemas.ReportOut(report=homeo_report(record, f.declared.parity))

    @app.post("/sum", response_model=schemas.DocumentOut)
    def do_sum(body: schemas.SumIn):
        spec = BrokenFiberSumSpec(
            left=parse_document(body.left_text),
            right=parse_document(body.right_text),
            gammas=tuple(CurveWord.parse(g) for g in body.gammas),
            phi1=body.phi1,
            phi2=body.phi2,
        )
        return schemas.DocumentOut(document=serialize_document(broken_fiber_sum(spec)))

    @app.post("/csum", response_model=schemas.DocumentOut)
    def do_csum(body: schemas.CsumIn):
        out = connected_sum_model(
            parse_document(body.left_text), parse_document(body.right_text)
        )
        return schemas.DocumentOut(document=serialize_document(out))

    @app.post("/push", response_model=schemas.DocumentOut)
    def do_push(body: schemas.TextIn):
        out = push_to_higher_side(parse_document(body.text))
        return schemas.DocumentOut(document=serialize_document(out))

    @app.post("/trade", response_model=schemas.DocumentOut)
    def do_trade(body: schemas.TradeIn):
        out = trade_negative_node(parse_document(body.text), body.index)
        return schemas.DocumentOut(document=serialize_document(out))

    @app.post("/blowdown", response_model=schemas.DocumentOut)
    def do_blowdown(body: schemas.BlowdownIn):
        out = blow_down(parse_document(body.text), body.section_index)
        return schemas.DocumentOut(document=serialize_document(out))

    @app.post("/step", response_model=schemas.DocumentOut)
    def do_step(body: schemas.StepIn):
        return schemas.DocumentOut(
            document=serialize_document(step_fibration(body.genus, body.framing))
        )

    @app.post("/example42", response_model=schemas.DocumentOut)
    def do_example42(body: schemas.Example42In):
        return schemas.DocumentOut(
            document=serialize_document(example42_family(body.framing))
        )

    @app.post("/sw/wall", response_model=schemas.ValueOut)
    def do_wall(body: schemas.WallIn):
        chamber = ChamberData(body.sign_h, body.sign_h_prime)
        return schemas.ValueOut(value=wall_crossing(body.value, body.d, chamber))

    @app.post("/sw/adjunction", response_model=schemas.BoolOut)
    def do_adjunction(body: schemas.AdjunctionIn):
        return schemas.BoolOut(ok=adjunction_check(body.genus, body.square, body.pairing))

    @app.post("/sw/simple-type", response_model=schemas.BoolOut)
    def do_simple_type(body: schemas.SimpleTypeIn):
        return schemas.BoolOut(ok=simple_type_check(body.square, body.e, body.sigma))

    @app.post("/sw/symmetry", response_model=schemas.ValueOut)
    def do_symmetry(body: schemas.SymmetryIn):
        return schemas.ValueOut(value=sw_symmetry(body.value, body.e, body.sigma))

    @app.post("/sw/section", response_model=schemas.VerdictOut)
    def do_section(body: schemas.SectionIn):
        verdict = section_constraint(body.b_plus, body.nontrivial, body.k)
        return schemas.VerdictOut(verdict=verdict.value)

    @app.post("/sw/vanishing", response_model=schemas.VanishingOut)
    def do_vanishing(body: schemas.VanishingIn):
        report = sphere_torus_vanishing(body.torus_square, body.sphere_square)
        return schemas.VanishingOut(
            lines=list(report.lines), vanishes=report.vanishes, text=report.text()
        )

    return app
