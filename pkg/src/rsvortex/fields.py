"""Plane-wave model of the complex electromagnetic field F = E + iB.

A field is a finite superposition of transverse plane-wave modes
f * exp(i(k.r - w t)) with the massless dispersion |w| = |k| and the
circular-polarization condition i k x f = w f.  The sign of w is the
helicity of the mode.  All evaluation routines are pure functions,
vectorized over point arrays of shape (..., 3), and safe to call
concurrently.

Units: c = 1, so k and w share units (rad/length == rad/time).
"""

import numpy as np
from dataclasses import dataclass
from functools import cached_property

__all__ = [
    "INVARIANT_TOL",
    "cdot",
    "PlaneWaveMode",
    "FieldSuperposition",
    "MonochromaticField",
    "make_helicity_mode",
    "transverse_triad",
    "eval_F",
    "eval_EB",
    "spatial_phasor",
    "phasor_from_time_samples",
    "check_maxwell",
    "MaxwellResiduals",
    "finite_difference_div",
    "finite_difference_curl",
]

# Relative tolerance for the algebraic mode invariants (dispersion,
# transversality, eigenmode condition).
INVARIANT_TOL = 1e-12


def _vec3(x, dtype=float):
    v = np.asarray(x, dtype=dtype)
    if v.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {v.shape}")
    return v


def cdot(a, b):
    """Unconjugated bilinear product a.b = ax*bx + ay*by + az*bz.

    This is the product entering every polarization scalar; conjugation
    is never applied here.  Broadcasts over leading axes of (..., 3)
    arrays.
    """
    return np.sum(np.asarray(a) * np.asarray(b), axis=-1)


@dataclass(frozen=True, eq=False)
class PlaneWaveMode:
    """One plane-wave mode: wavevector k, signed frequency omega, amplitude f.

    Valid modes satisfy |omega| = |k|, k.f = 0 and i k x f = omega f.
    Construction only rejects omega == 0 and k == 0; the physics
    invariants are *reported* by residuals() rather than enforced, so
    that corrupted modes can be represented and flagged by downstream
    residual checks.

    circular_amplitude is bookkeeping set by make_helicity_mode: the
    scalar amplitude on the circular basis, kept so that serialization
    can reproduce the (k, helicity, amplitude) form byte for byte.  It
    is never used in any computation.
    """

    k: np.ndarray
    omega: float
    f: np.ndarray
    circular_amplitude: complex = None

    def __post_init__(self):
        object.__setattr__(self, "k", _vec3(self.k))
        object.__setattr__(self, "omega", float(self.omega))
        object.__setattr__(self, "f", _vec3(self.f, dtype=complex))
        if self.omega == 0.0:
            raise ValueError("omega = 0 modes are excluded (only propagating waves are represented)")
        if not np.any(self.k):
            raise ValueError("zero wavevector")

    @property
    def helicity(self):
        """Sign of the frequency: +1 or -1."""
        return 1 if self.omega > 0 else -1

    def residuals(self):
        """Relative residuals of the three mode invariants."""
        knorm = float(np.linalg.norm(self.k))
        fnorm = float(np.linalg.norm(self.f))
        disp = abs(abs(self.omega) - knorm) / abs(self.omega)
        if fnorm == 0.0:
            return {"dispersion": disp, "transversality": 0.0, "helicity_eigenmode": 0.0}
        trans = abs(cdot(self.k, self.f)) / (knorm * fnorm)
        eig = np.linalg.norm(1j * np.cross(self.k, self.f) - self.omega * self.f)
        return {
            "dispersion": float(disp),
            "transversality": float(trans),
            "helicity_eigenmode": float(eig / (abs(self.omega) * fnorm)),
        }

    def is_valid(self, tol=INVARIANT_TOL):
        return max(self.residuals().values()) <= tol


@dataclass(frozen=True, eq=False)
class FieldSuperposition:
    """A finite list of plane-wave modes; immutable after construction."""

    modes: tuple

    def __post_init__(self):
        object.__setattr__(self, "modes", tuple(self.modes))

    def __len__(self):
        return len(self.modes)

    def __iter__(self):
        return iter(self.modes)

    @cached_property
    def _arrays(self):
        """Stacked (M,3) k, (M,) omega, (M,3) f for vectorized evaluation."""
        if not self.modes:
            return (np.zeros((0, 3)), np.zeros(0), np.zeros((0, 3), complex))
        K = np.stack([m.k for m in self.modes])
        W = np.array([m.omega for m in self.modes])
        F = np.stack([m.f for m in self.modes])
        return K, W, F

    def max_residual(self):
        """Worst algebraic invariant residual over all modes (0 for empty)."""
        if not self.modes:
            return 0.0
        return max(max(m.residuals().values()) for m in self.modes)

    def amplitude_scale(self):
        """Sum of |f| over modes; an upper bound for |F(r,t)| everywhere."""
        return float(sum(np.linalg.norm(m.f) for m in self.modes))

    def positive_part(self):
        return FieldSuperposition(tuple(m for m in self.modes if m.omega > 0))

    def negative_part(self):
        return FieldSuperposition(tuple(m for m in self.modes if m.omega < 0))


@dataclass(frozen=True, eq=False)
class MonochromaticField:
    """Modes sharing a single |omega|, kept split by helicity.

    May mix both helicities.  definite_helicity() is +1/-1 when only one
    side is populated, else None.
    """

    omega_abs: float
    pos_modes: tuple
    neg_modes: tuple

    _REL_TOL = 1e-9

    def __post_init__(self):
        object.__setattr__(self, "omega_abs", float(self.omega_abs))
        object.__setattr__(self, "pos_modes", tuple(self.pos_modes))
        object.__setattr__(self, "neg_modes", tuple(self.neg_modes))
        if self.omega_abs <= 0:
            raise ValueError("omega_abs must be positive")
        for m in self.pos_modes:
            if not (m.omega > 0 and abs(m.omega - self.omega_abs) <= self._REL_TOL * self.omega_abs):
                raise ValueError(f"positive-side mode has omega={m.omega}, expected +{self.omega_abs}")
        for m in self.neg_modes:
            if not (m.omega < 0 and abs(m.omega + self.omega_abs) <= self._REL_TOL * self.omega_abs):
                raise ValueError(f"negative-side mode has omega={m.omega}, expected -{self.omega_abs}")

    @classmethod
    def from_field(cls, field, rel_tol=_REL_TOL):
        """Interpret a superposition as monochromatic; ValueError if |omega| varies."""
        if not field.modes:
            raise ValueError("empty field has no frequency")
        omegas = np.array([abs(m.omega) for m in field.modes])
        omega_abs = float(omegas[0])
        if np.any(np.abs(omegas - omega_abs) > rel_tol * omega_abs):
            raise ValueError(
                f"field is not monochromatic: |omega| spans [{omegas.min()}, {omegas.max()}]"
            )
        return cls(
            omega_abs=omega_abs,
            pos_modes=tuple(m for m in field.modes if m.omega > 0),
            neg_modes=tuple(m for m in field.modes if m.omega < 0),
        )

    def definite_helicity(self):
        if self.pos_modes and not self.neg_modes:
            return 1
        if self.neg_modes and not self.pos_modes:
            return -1
        return None

    def as_field(self):
        return FieldSuperposition(self.pos_modes + self.neg_modes)

    @cached_property
    def _positive_field(self):
        return FieldSuperposition(self.pos_modes)

    @cached_property
    def _negative_field(self):
        return FieldSuperposition(self.neg_modes)


def transverse_triad(k):
    """Deterministic right-handed orthonormal triad (e1, e2, khat).

    e1 is the unit projection, orthogonal to khat, of the coordinate axis
    least aligned with khat (ties broken x, then y, then z); e2 = khat x e1.
    With this choice k = z gives (x, y, z) and k = x gives (y, z, x).
    """
    k = _vec3(k)
    knorm = np.linalg.norm(k)
    if knorm == 0.0:
        raise ValueError("zero wavevector")
    khat = k / knorm
    a = np.zeros(3)
    a[int(np.argmin(np.abs(khat)))] = 1.0
    e1 = a - np.dot(a, khat) * khat
    e1 = e1 / np.linalg.norm(e1)
    e2 = np.cross(khat, e1)
    return e1, e2, khat


def make_helicity_mode(k, helicity, amplitude):
    """Build a circularly polarized plane-wave mode of the given helicity.

    f = amplitude * (e1 + i*helicity*e2)/sqrt(2) on the deterministic
    transverse triad, omega = helicity * |k|.  The polarization vector has
    unit conjugate norm, so |f| = |amplitude|.
    """
    if helicity not in (1, -1):
        raise ValueError("helicity must be +1 or -1")
    e1, e2, _ = transverse_triad(k)
    f = complex(amplitude) * (e1 + 1j * helicity * e2) / np.sqrt(2.0)
    return PlaneWaveMode(
        k=np.asarray(k, float),
        omega=helicity * float(np.linalg.norm(k)),
        f=f,
        circular_amplitude=complex(amplitude),
    )


def _eval_shape(field, r, t):
    r = np.asarray(r, float)
    if r.shape[-1] != 3:
        raise ValueError(f"points must have trailing dimension 3, got shape {r.shape}")
    t = np.asarray(t, float)
    out_shape = np.broadcast_shapes(r.shape[:-1], t.shape)
    return r, t, out_shape


def eval_F(field, r, t):
    """Evaluate F(r,t) = sum_m f_m exp(i(k_m.r - w_m t)).

    r: (..., 3) points; t: scalar or array broadcastable against the
    leading shape of r.  Returns (..., 3) complex.  An empty field
    evaluates to zero.
    """
    r, t, out_shape = _eval_shape(field, r, t)
    K, W, F = field._arrays
    if K.shape[0] == 0:
        return np.zeros(out_shape + (3,), complex)
    phase = r @ K.T - t[..., None] * W  # (..., M)
    return np.exp(1j * phase) @ F


def eval_EB(field, r, t):
    """Real fields (E, B) with F = E + iB, via the helicity decomposition.

    E+ = F+ + conj(F-) and iB+ = F+ - conj(F-) are the positive-frequency
    parts of E and B; the real fields are their real parts.
    """
    fp = eval_F(field.positive_part(), r, t)
    fm = eval_F(field.negative_part(), r, t)
    e_plus = fp + np.conj(fm)
    b_plus = -1j * (fp - np.conj(fm))
    return e_plus.real.copy(), b_plus.real.copy()


def spatial_phasor(modes, r):
    """Spatial mode sum at fixed time zero: sum_m f_m exp(i k_m.r).

    Accepts a FieldSuperposition or any iterable of modes.  For modes
    sharing the frequency w this is the frequency component F_w(r).
    """
    field = modes if isinstance(modes, FieldSuperposition) else FieldSuperposition(tuple(modes))
    return eval_F(field, r, 0.0)


def phasor_from_time_samples(sampler, omega, r):
    """Recover the complex phasor of a time-harmonic real field from two samples.

    For E(r,t) = Re{exp(-i w t) E_w(r)} the phasor is
    E_w(r) = E(r, 0) + i E(r, pi/(2 w)).  `sampler(r, t)` must return the
    real field at time t.
    """
    omega = float(omega)
    if omega <= 0:
        raise ValueError("omega must be positive")
    quarter = np.pi / (2.0 * omega)
    return np.asarray(sampler(r, 0.0), float) + 1j * np.asarray(sampler(r, quarter), float)


def finite_difference_div(fn, r, h):
    """Central-difference divergence of a 3-vector function of a 3-point."""
    r = _vec3(r)
    acc = 0.0
    for j in range(3):
        dr = np.zeros(3)
        dr[j] = h
        acc = acc + (fn(r + dr)[j] - fn(r - dr)[j]) / (2.0 * h)
    return acc


def finite_difference_curl(fn, r, h):
    """Central-difference curl of a 3-vector function of a 3-point."""
    r = _vec3(r)
    jac = np.empty((3, 3), complex)  # jac[i, j] = d f_i / d x_j
    for j in range(3):
        dr = np.zeros(3)
        dr[j] = h
        jac[:, j] = (np.asarray(fn(r + dr)) - np.asarray(fn(r - dr))) / (2.0 * h)
    return np.array([
        jac[2, 1] - jac[1, 2],
        jac[0, 2] - jac[2, 0],
        jac[1, 0] - jac[0, 1],
    ])


@dataclass(frozen=True)
class MaxwellResiduals:
    """Finite-difference residual magnitudes of div F = 0 and i dF/dt = curl F."""

    div_residual: float
    faraday_residual: float
    h: float
    field_scale: float

    def as_dict(self):
        return {
            "div_residual": self.div_residual,
            "faraday_residual": self.faraday_residual,
            "h": self.h,
            "field_scale": self.field_scale,
        }


def check_maxwell(field, r, t, h):
    """Central-difference residuals of the complex Maxwell system at (r, t).

    Exact superpositions of valid modes leave only the O(h^2)
    discretization error; a mode violating k.f = 0 produces a div
    residual that does not vanish as h -> 0.
    """
    if h <= 0:
        raise ValueError("step h must be positive")
    r = _vec3(r)
    t = float(t)

    div = finite_difference_div(lambda x: eval_F(field, x, t), r, h)
    curl = finite_difference_curl(lambda x: eval_F(field, x, t), r, h)
    dFdt = (eval_F(field, r, t + h) - eval_F(field, r, t - h)) / (2.0 * h)
    faraday = 1j * dFdt - curl

    return MaxwellResiduals(
        div_residual=float(abs(div)),
        faraday_residual=float(np.linalg.norm(faraday)),
        h=float(h),
        field_scale=field.amplitude_scale(),
    )
