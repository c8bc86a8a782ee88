"""HTTP service exposing field evaluation, extraction and verification.

Stateless request/response endpoints over the core package; the CLI is a
thin client of this service.  Complex numbers travel as [re, im] pairs.
"""

from typing import Dict, List, Literal, Optional

import numpy as np
from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field, model_validator

from . import __version__
from .extraction import DegenerateFieldError, GridSpec
from .diagnostics import extract_diagnostic, requires_monochromatic
from .fields import MonochromaticField, eval_EB, eval_F
from .helicity import split_by_helicity
from .scalars import rs_polarization_scalar
from .specfile import FieldSpecError, field_from_dict, field_to_dict
from .transforms import BoostSpec, boost_field, boost_point
from .verify import run_verification

app = FastAPI(
    title="rsvortex",
    version=__version__,
    description="Plane-wave electromagnetic fields: helicity, polarization scalars, singular curves",
)


class ModeEntry(BaseModel):
    k: List[float] = Field(..., min_length=3, max_length=3)
    helicity: Optional[Literal[1, -1]] = None
    amplitude: Optional[List[float]] = Field(None, min_length=2, max_length=2)
    omega: Optional[float] = None
    f: Optional[List[List[float]]] = None

    @model_validator(mode="after")
    def one_form_only(self):
        circular = self.helicity is not None or self.amplitude is not None
        raw = self.omega is not None or self.f is not None
        if circular and raw:
            raise ValueError("give either (helicity, amplitude) or (omega, f), not both")
        if not circular and not raw:
            raise ValueError("mode needs (helicity, amplitude) or (omega, f)")
        return self


class FieldSpecModel(BaseModel):
    label: Optional[str] = None
    units: Optional[str] = None
    modes: List[ModeEntry] = Field(..., min_length=1)


class GridModel(BaseModel):
    lo: List[float] = Field(..., min_length=3, max_length=3)
    hi: List[float] = Field(..., min_length=3, max_length=3)
    n: List[int] = Field(..., min_length=3, max_length=3)


def _to_field(model: FieldSpecModel):
    try:
        return field_from_dict(model.model_dump(exclude_none=True))
    except FieldSpecError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None


def _to_model(field, meta=None) -> FieldSpecModel:
    meta = meta or {}
    return FieldSpecModel(**field_to_dict(field, label=meta.get("label"), units=meta.get("units")))


def _to_grid(model: GridModel) -> GridSpec:
    try:
        return GridSpec(model.lo, model.hi, model.n)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=f"grid: {exc}") from None


def _cpx(z) -> List[float]:
    return [float(np.real(z)), float(np.imag(z))]


def _cvec(v) -> List[List[float]]:
    return [_cpx(z) for z in v]


class EvalRequest(BaseModel):
    field: FieldSpecModel
    r: List[float] = Field(..., min_length=3, max_length=3)
    t: float = 0.0


class EvalResponse(BaseModel):
    F: List[List[float]]
    E: List[float]
    B: List[float]
    psi: List[float]


@app.post("/eval", response_model=EvalResponse)
def eval_point(req: EvalRequest):
    field, _ = _to_field(req.field)
    r = np.asarray(req.r, float)
    F = eval_F(field, r, req.t)
    E, B = eval_EB(field, r, req.t)
    psi = rs_polarization_scalar(field, r, req.t)
    return EvalResponse(F=_cvec(F), E=[float(x) for x in E], B=[float(x) for x in B], psi=_cpx(psi))


class CurveModel(BaseModel):
    id: int
    closed: bool
    points: List[List[float]]


class ExtractTolerances(BaseModel):
    value_rel: Optional[float] = None       # degeneracy value threshold
    fraction: Optional[float] = None        # degeneracy fraction threshold
    link_rel: Optional[float] = None        # endpoint linking tolerance
    validation_rel: Optional[float] = None  # l-line third-component bound


class ExtractRequest(BaseModel):
    field: FieldSpecModel
    diagnostic: Literal["vortex", "c-electric", "c-magnetic", "l-line", "time-avg"]
    grid: GridModel
    t: float = 0.0
    tolerances: Optional[ExtractTolerances] = None


class ExtractResponse(BaseModel):
    status: Literal["ok", "degenerate"]
    diagnostic: str
    curves: List[CurveModel]
    notes: Dict[str, float] = {}
    message: str = ""


@app.post("/extract", response_model=ExtractResponse)
def extract(req: ExtractRequest):
    field, _ = _to_field(req.field)
    spec = _to_grid(req.grid)
    if requires_monochromatic(req.diagnostic):
        try:
            field = MonochromaticField.from_field(field)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
    overrides = req.tolerances.model_dump(exclude_none=True) if req.tolerances else {}
    try:
        curves = extract_diagnostic(field, req.diagnostic, spec, req.t, **overrides)
    except DegenerateFieldError as exc:
        return ExtractResponse(
            status="degenerate",
            diagnostic=req.diagnostic,
            curves=[],
            notes={"zero_fraction": exc.fraction, "threshold": exc.threshold},
            message=str(exc),
        )
    return ExtractResponse(
        status="ok",
        diagnostic=req.diagnostic,
        curves=[
            CurveModel(id=c.id, closed=c.closed, points=[[float(x) for x in p] for p in c.points])
            for c in curves
        ],
        notes={k: float(v) for k, v in curves.notes.items() if np.isscalar(v)},
    )


class SplitRequest(BaseModel):
    field: FieldSpecModel


class SplitResponse(BaseModel):
    # a side is None when the field has no modes of that helicity
    positive: Optional[FieldSpecModel]
    negative: Optional[FieldSpecModel]
    positive_mode_count: int
    negative_mode_count: int


@app.post("/split", response_model=SplitResponse, response_model_exclude_none=True)
def split(req: SplitRequest):
    field, meta = _to_field(req.field)
    pair = split_by_helicity(field)

    def part_model(part, suffix):
        if len(part) == 0:
            return None
        label = meta.get("label")
        part_meta = {"label": f"{label} ({suffix})" if label else None, "units": meta.get("units")}
        return _to_model(part, part_meta)

    return SplitResponse(
        positive=part_model(pair.positive, "positive helicity"),
        negative=part_model(pair.negative, "negative helicity"),
        positive_mode_count=len(pair.positive),
        negative_mode_count=len(pair.negative),
    )


class BoostRequest(BaseModel):
    field: FieldSpecModel
    beta: List[float] = Field(..., min_length=3, max_length=3)


class SpotCheck(BaseModel):
    r: List[float]
    t: float
    r_boosted: List[float]
    t_boosted: float
    psi_original: List[float]
    psi_boosted: List[float]
    relative_error: float


class BoostResponse(BaseModel):
    field: FieldSpecModel
    spot_check: SpotCheck


@app.post("/boost", response_model=BoostResponse, response_model_exclude_none=True)
def boost(req: BoostRequest):
    field, meta = _to_field(req.field)
    try:
        spec = BoostSpec(np.asarray(req.beta, float))
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None
    boosted = boost_field(field, spec)

    rng = np.random.default_rng(7)
    r = rng.uniform(-1, 1, size=3)
    t = float(rng.uniform(-1, 1))
    rp, tp = boost_point(r, t, spec)
    psi = complex(rs_polarization_scalar(field, r, t))
    psi_p = complex(rs_polarization_scalar(boosted, rp, tp))
    scale = max(field.amplitude_scale() ** 2, 1e-300)

    return BoostResponse(
        field=_to_model(boosted, meta),
        spot_check=SpotCheck(
            r=[float(x) for x in r],
            t=t,
            r_boosted=[float(x) for x in rp],
            t_boosted=float(tp),
            psi_original=_cpx(psi),
            psi_boosted=_cpx(psi_p),
            relative_error=abs(psi_p - psi) / scale,
        ),
    )


class VerifyRequest(BaseModel):
    field: FieldSpecModel
    grid: Optional[GridModel] = None
    tolerances: Optional[Dict[str, float]] = None


class CheckModel(BaseModel):
    name: str
    status: Literal["pass", "fail", "skipped", "degenerate"]
    residuals: Dict[str, float]
    tolerances: Dict[str, float]
    detail: str
    wall_time_s: float


class VerifyResponse(BaseModel):
    label: str
    overall_status: Literal["pass", "fail", "degenerate"]
    exit_code: int
    grid: Dict[str, List[float]]
    tolerances: Dict[str, float]
    wall_time_s: float
    checks: List[CheckModel]


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest):
    field, meta = _to_field(req.field)
    grid_spec = _to_grid(req.grid) if req.grid is not None else None
    try:
        report = run_verification(
            field,
            label=meta.get("label", ""),
            grid_spec=grid_spec,
            tolerances=req.tolerances,
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None
    data = report.as_dict()
    return VerifyResponse(exit_code=report.exit_code, **data)


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}
