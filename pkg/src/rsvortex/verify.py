"""Field verification suite: the checks behind the `verify` command.

Each check inspects the field for the property it certifies and reports
pass/fail with its residuals and tolerances; checks that do not apply to
the input (e.g. phasor identities on non-monochromatic fields) report
skipped, and extractions over non-generic zero sets report degenerate.
All tolerances live in DEFAULT_TOLERANCES and every report records the
values in force.
"""

import time

import numpy as np
from dataclasses import dataclass, field as dc_field

from .extraction import DegenerateFieldError, GridSpec, curve_set_distance
from .diagnostics import extract_diagnostic
from .fields import (
    MonochromaticField,
    check_maxwell,
    eval_EB,
    finite_difference_curl,
    spatial_phasor,
)
from .scalars import (
    cdot,
    coincidence_phase_relation,
    rs_polarization_scalar,
)
from .transforms import BoostSpec, boost_field, boost_point, duality_rotate

__all__ = ["DEFAULT_TOLERANCES", "CheckResult", "VerificationReport", "run_verification"]

DEFAULT_TOLERANCES = {
    "maxwell_algebraic_rel": 1e-12,   # mode invariant residuals
    "maxwell_order_min": 1.8,         # finite-difference convergence order
    "beltrami_order_min": 1.8,
    "phase_relation_rel": 1e-10,
    "quarter_period_rel": 1e-10,
    "fourier_rel": 1e-8,
    "time_average_rel": 1e-10,
    "duality_rel": 1e-12,
    "duality_curve_hausdorff": 1e-9,
    "boost_psi_rel": 1e-10,
    "coincidence_hausdorff_h": 2.0,   # multiples of the grid spacing
    "degeneracy_value_rel": 1e-10,
    "degeneracy_fraction": 0.5,
}

_FD_STEPS = (1e-2, 5e-3)


@dataclass
class CheckResult:
    name: str
    status: str  # pass | fail | skipped | degenerate
    residuals: dict = dc_field(default_factory=dict)
    tolerances: dict = dc_field(default_factory=dict)
    detail: str = ""
    wall_time_s: float = 0.0

    def as_dict(self):
        return {
            "name": self.name,
            "status": self.status,
            "residuals": {k: float(v) for k, v in self.residuals.items()},
            "tolerances": {k: float(v) for k, v in self.tolerances.items()},
            "detail": self.detail,
            "wall_time_s": self.wall_time_s,
        }


@dataclass
class VerificationReport:
    checks: list
    grid: dict
    tolerances: dict
    label: str = ""
    wall_time_s: float = 0.0

    @property
    def overall_status(self):
        statuses = {c.status for c in self.checks}
        if "fail" in statuses:
            return "fail"
        if "degenerate" in statuses:
            return "degenerate"
        return "pass"

    @property
    def exit_code(self):
        return {"pass": 0, "fail": 1, "degenerate": 2}[self.overall_status]

    def as_dict(self):
        return {
            "label": self.label,
            "overall_status": self.overall_status,
            "grid": self.grid,
            "tolerances": {k: float(v) for k, v in self.tolerances.items()},
            "wall_time_s": self.wall_time_s,
            "checks": [c.as_dict() for c in self.checks],
        }


def _order(res_big, res_small):
    # orders are capped so every reported residual is finite (and JSON-safe)
    if res_small <= 0:
        return 99.0
    return float(min(np.log2(res_big / res_small), 99.0))


def _sample_points(rng, n, radius):
    return rng.uniform(-radius, radius, size=(n, 3))


def _check_maxwell(field, tol, rng):
    scale = max(field.amplitude_scale(), 1e-300)
    residuals = {"mode_invariant_rel": field.max_residual()}
    floor = 1e-12 * scale
    orders = []
    for r in _sample_points(rng, 4, 1.5):
        pair = [check_maxwell(field, r, 0.21, h) for h in _FD_STEPS]
        for attr in ("div_residual", "faraday_residual"):
            big, small = (getattr(p, attr) for p in pair)
            if big <= floor and small <= floor:
                continue  # error coefficient vanishes here; nothing to measure
            orders.append(_order(big, small))
        residuals["div_residual_h1"] = max(residuals.get("div_residual_h1", 0.0), pair[0].div_residual)
        residuals["faraday_residual_h1"] = max(
            residuals.get("faraday_residual_h1", 0.0), pair[0].faraday_residual
        )
    residuals["fd_order_min"] = min(orders) if orders else 99.0
    good = (
        residuals["mode_invariant_rel"] <= tol["maxwell_algebraic_rel"]
        and residuals["fd_order_min"] >= tol["maxwell_order_min"]
    )
    return CheckResult(
        name="maxwell_residuals",
        status="pass" if good else "fail",
        residuals=residuals,
        tolerances={k: tol[k] for k in ("maxwell_algebraic_rel", "maxwell_order_min")},
        detail="div F = 0 and i dF/dt = curl F, central differences plus mode invariants",
    )


def _check_beltrami(field, tol, rng):
    # curl F_w = w F_w for every distinct frequency component.
    omegas = sorted({m.omega for m in field.modes})
    scale = max(field.amplitude_scale(), 1e-300)
    orders = []
    worst = 0.0
    for w in omegas:
        part = [m for m in field.modes if m.omega == w]

        def phasor(x, _part=tuple(part)):
            return spatial_phasor(_part, x)

        for r in _sample_points(rng, 2, 1.5):
            errs = [
                float(np.linalg.norm(finite_difference_curl(phasor, r, h) - w * phasor(r)))
                for h in _FD_STEPS
            ]
            worst = max(worst, errs[0])
            if errs[0] <= 1e-12 * scale and errs[1] <= 1e-12 * scale:
                continue
            orders.append(_order(*errs))
    order_min = min(orders) if orders else 99.0
    return CheckResult(
        name="beltrami",
        status="pass" if order_min >= tol["beltrami_order_min"] else "fail",
        residuals={"residual_h1": worst, "fd_order_min": order_min},
        tolerances={"beltrami_order_min": tol["beltrami_order_min"]},
        detail=f"curl F_w = w F_w checked for {len(omegas)} frequency component(s)",
    )


def _check_phase_relation(field, mono, tol, rng):
    if mono is None or mono.definite_helicity() is None:
        return CheckResult(
            name="phase_relation",
            status="skipped",
            detail="requires a definite-helicity monochromatic field",
        )
    worst = 0.0
    for _ in range(20):
        rep = coincidence_phase_relation(mono, rng.uniform(-3, 3, size=3), rng.uniform(-5, 5))
        worst = max(worst, rep.relative_e, rep.relative_b)
    return CheckResult(
        name="phase_relation",
        status="pass" if worst <= tol["phase_relation_rel"] else "fail",
        residuals={"max_rel_residual": worst},
        tolerances={"phase_relation_rel": tol["phase_relation_rel"]},
        detail="psi ties to the electric and magnetic polarization scalars",
    )


def _check_quarter_period(field, mono, tol, rng):
    if mono is None or mono.definite_helicity() is None:
        return CheckResult(
            name="quarter_period_lag",
            status="skipped",
            detail="requires a definite-helicity monochromatic field",
        )
    h = mono.definite_helicity()
    period = 2 * np.pi / mono.omega_abs
    f = mono.as_field()
    r = _sample_points(rng, 100, 3.0)
    t = 0.37
    if h > 0:
        now, _ = eval_EB(f, r, t)           # E(t)
        _, lagged = eval_EB(f, r, t - period / 4)  # B(t - p/4)
    else:
        _, now = eval_EB(f, r, t)           # B(t)
        lagged, _ = eval_EB(f, r, t - period / 4)  # E(t - p/4)
    scale = max(float(np.abs(now).max()), 1e-300)
    worst = float(np.abs(now - lagged).max()) / scale
    return CheckResult(
        name="quarter_period_lag",
        status="pass" if worst <= tol["quarter_period_rel"] else "fail",
        residuals={"max_rel_residual": worst},
        tolerances={"quarter_period_rel": tol["quarter_period_rel"]},
        detail="one field reproduces the other a quarter period away",
    )


def _check_fourier(field, mono, tol, rng):
    if mono is None:
        return CheckResult(
            name="fourier_2omega",
            status="skipped",
            detail="requires a monochromatic field",
        )
    w = mono.omega_abs
    n = 1024
    t = (np.arange(n) / n) * (2 * np.pi / w)
    power = max(field.amplitude_scale() ** 2, 1e-300)
    worst_c = 0.0
    worst_avg = 0.0
    for _ in range(5):
        r = rng.uniform(-3, 3, size=3)
        fw = spatial_phasor(mono._positive_field, r)
        fmw = spatial_phasor(mono._negative_field, r)
        expected = {-2 * w: cdot(fmw, fmw), 0.0: 2 * cdot(fw, fmw), 2 * w: cdot(fw, fw)}
        scale = max(abs(v) for v in expected.values())
        if scale <= 1e-13 * power:
            # all coefficients are numerically zero (e.g. a single plane
            # wave); there is no structure to compare against
            continue
        psi = rs_polarization_scalar(field, np.broadcast_to(r, (n, 3)), t)
        for nu, want in expected.items():
            got = np.mean(psi * np.exp(1j * nu * t))
            worst_c = max(worst_c, abs(got - want) / scale)
        worst_avg = max(worst_avg, abs(np.mean(psi) - expected[0.0]) / scale)
    good = worst_c <= tol["fourier_rel"] and worst_avg <= tol["time_average_rel"]
    return CheckResult(
        name="fourier_2omega",
        status="pass" if good else "fail",
        residuals={"max_coefficient_rel": worst_c, "period_average_rel": worst_avg},
        tolerances={k: tol[k] for k in ("fourier_rel", "time_average_rel")},
        detail="psi oscillates at 2w with mode-sum coefficients",
    )


def _check_duality(field, tol, rng, curves=None, spec=None, scale=None):
    worst = 0.0
    fscale = max(field.amplitude_scale() ** 2, 1e-300)
    for chi in (np.pi / 2, 0.7312):
        rotated = duality_rotate(field, chi)
        for _ in range(10):
            r = rng.uniform(-3, 3, size=3)
            t = rng.uniform(-3, 3)
            psi = rs_polarization_scalar(field, r, t)
            psi_rot = rs_polarization_scalar(rotated, r, t)
            worst = max(worst, abs(psi_rot - np.exp(2j * chi) * psi) / fscale)
    residuals = {"psi_scaling_rel": worst}
    good = worst <= tol["duality_rel"]
    detail = "psi picks up exp(2 i chi)"
    if curves is not None and spec is not None and len(curves) > 0:
        try:
            rotated_curves = extract_diagnostic(duality_rotate(field, 0.7312), "vortex", spec, 0.0)
            d, _ = curve_set_distance(curves, rotated_curves)
            residuals["curve_hausdorff"] = d
            good = good and d <= tol["duality_curve_hausdorff"]
            detail += "; vortex curves setwise fixed under rotation"
        except DegenerateFieldError:
            pass
    return CheckResult(
        name="duality_invariance",
        status="pass" if good else "fail",
        residuals=residuals,
        tolerances={k: tol[k] for k in ("duality_rel", "duality_curve_hausdorff")},
        detail=detail,
    )


def _check_boost(field, tol, rng):
    fscale = max(field.amplitude_scale() ** 2, 1e-300)
    worst_psi = 0.0
    worst_roundtrip = 0.0
    signs_ok = True
    for beta_mag in (0.3, 0.6, 0.9):
        direction = rng.normal(size=3)
        direction /= np.linalg.norm(direction)
        boost = BoostSpec(beta_mag * direction)
        boosted = boost_field(field, boost)
        signs_ok = signs_ok and all(
            np.sign(a.omega) == np.sign(b.omega) for a, b in zip(boosted.modes, field.modes)
        )
        for _ in range(10):
            r = rng.uniform(-2, 2, size=3)
            t = rng.uniform(-2, 2)
            rp, tp = boost_point(r, t, boost)
            psi = rs_polarization_scalar(field, r, t)
            psi_p = rs_polarization_scalar(boosted, rp, tp)
            worst_psi = max(worst_psi, abs(psi_p - psi) / fscale)
        for m, back in zip(field.modes, boost_field(boosted, boost.inverse()).modes):
            num = np.linalg.norm(back.f - m.f) + abs(back.omega - m.omega) + np.linalg.norm(back.k - m.k)
            worst_roundtrip = max(worst_roundtrip, num / max(np.linalg.norm(m.f) + abs(m.omega), 1e-300))
    good = worst_psi <= tol["boost_psi_rel"] and signs_ok and worst_roundtrip <= 1e-10
    return CheckResult(
        name="boost_invariance",
        status="pass" if good else "fail",
        residuals={
            "psi_invariance_rel": worst_psi,
            "double_boost_rel": worst_roundtrip,
            "helicity_sign_flips": 0.0 if signs_ok else 1.0,
        },
        tolerances={"boost_psi_rel": tol["boost_psi_rel"]},
        detail="|beta| in {0.3, 0.6, 0.9}; psi frame independent, sgn omega preserved",
    )


def _default_grid(field):
    # A two-wavelength box for the slowest mode, modest resolution.
    kmin = min(abs(m.omega) for m in field.modes)
    half = 2 * np.pi / kmin
    return GridSpec((-half, -half, -half), (half, half, half), (49, 49, 49))


def _check_coincidence(field, mono, tol, spec):
    if mono is None or mono.definite_helicity() is None:
        return CheckResult(
            name="coincidence_distances",
            status="skipped",
            detail="requires a definite-helicity monochromatic field",
        )
    names = ("vortex", "c-electric", "c-magnetic")
    sets = {}
    try:
        for name in names:
            sets[name] = extract_diagnostic(
                field,
                name,
                spec,
                0.0,
                value_rel=tol["degeneracy_value_rel"],
                fraction=tol["degeneracy_fraction"],
            )
    except DegenerateFieldError as exc:
        return CheckResult(
            name="coincidence_distances",
            status="degenerate",
            residuals={"zero_fraction": exc.fraction},
            tolerances={"degeneracy_fraction": tol["degeneracy_fraction"]},
            detail=str(exc),
        )
    if any(len(s) == 0 for s in sets.values()):
        return CheckResult(
            name="coincidence_distances",
            status="skipped",
            detail="no singular curves inside the requested box",
        )
    budget = tol["coincidence_hausdorff_h"] * spec.max_spacing
    residuals = {}
    worst = 0.0
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            d, _ = curve_set_distance(sets[a], sets[b])
            residuals[f"hausdorff_{a}_{b}"] = d
            worst = max(worst, d)
    return CheckResult(
        name="coincidence_distances",
        status="pass" if worst <= budget else "fail",
        residuals=residuals,
        tolerances={"hausdorff_budget": budget},
        detail="vortex lines, electric C-lines and magnetic C-lines coincide",
    ), sets.get("vortex")


def run_verification(field, label="", grid_spec=None, tolerances=None, seed=20240811):
    """Run every applicable check on the field and collect a report."""
    tol = dict(DEFAULT_TOLERANCES)
    if tolerances:
        unknown = set(tolerances) - set(tol)
        if unknown:
            raise ValueError(f"unknown tolerance name(s): {', '.join(sorted(unknown))}")
        tol.update(tolerances)

    try:
        mono = MonochromaticField.from_field(field)
    except ValueError:
        mono = None

    spec = grid_spec if grid_spec is not None else _default_grid(field)
    rng = np.random.default_rng(seed)

    t_start = time.perf_counter()
    checks = []
    vortex_curves = None

    def run(fn, *args, **kwargs):
        t0 = time.perf_counter()
        result = fn(*args, **kwargs)
        extra = None
        if isinstance(result, tuple):
            result, extra = result
        result.wall_time_s = time.perf_counter() - t0
        checks.append(result)
        return extra

    run(_check_maxwell, field, tol, rng)
    run(_check_beltrami, field, tol, rng)
    run(_check_phase_relation, field, mono, tol, rng)
    vortex_curves = run(_check_coincidence, field, mono, tol, spec)
    run(_check_quarter_period, field, mono, tol, rng)
    run(_check_duality, field, tol, rng, curves=vortex_curves, spec=spec)
    run(_check_boost, field, tol, rng)
    run(_check_fourier, field, mono, tol, rng)

    return VerificationReport(
        checks=checks,
        grid={
            "lo": [float(v) for v in spec.lo],
            "hi": [float(v) for v in spec.hi],
            "n": [int(v) for v in spec.n],
        },
        tolerances=tol,
        label=label,
        wall_time_s=time.perf_counter() - t_start,
    )
