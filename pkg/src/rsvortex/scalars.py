"""Polarization scalars and the vector diagnostic whose zeros are L-lines.

All squares are unconjugated bilinear products (cdot); conjugation only
enters the phasor reconstruction E_w = F_w + conj(F_-w) and the real
split P = Re E_w, Q = Im E_w.
"""

import numpy as np
from dataclasses import dataclass

from .fields import cdot, eval_F, spatial_phasor

__all__ = [
    "rs_polarization_scalar",
    "electric_phasor",
    "magnetic_phasor",
    "c_scalar",
    "l_field",
    "time_averaged_scalar",
    "coincidence_phase_relation",
    "PhaseRelationReport",
]


def rs_polarization_scalar(field, r, t):
    """psi(r,t) = F(r,t).F(r,t), the complex scalar whose zeros are vortex lines.

    Vectorized: r of shape (..., 3) gives a (...) complex array.
    """
    F = eval_F(field, r, t)
    return cdot(F, F)


def electric_phasor(mono, r, t=0.0):
    """Spatial phasor of E for a monochromatic field: E_w = F_w + conj(F_-w).

    The real and imaginary parts are the ellipse axes P and Q.  With a
    nonzero reference time the phasor picks up the phase exp(-i w t),
    which leaves every zero set unchanged.
    """
    fw = spatial_phasor(mono._positive_field, r)
    fmw = spatial_phasor(mono._negative_field, r)
    phasor = fw + np.conj(fmw)
    if t != 0.0:
        phasor = np.exp(-1j * mono.omega_abs * t) * phasor
    return phasor


def magnetic_phasor(mono, r, t=0.0):
    """Spatial phasor of B: i B_w = F_w - conj(F_-w), i.e. B_w = -i(F_w - conj(F_-w))."""
    fw = spatial_phasor(mono._positive_field, r)
    fmw = spatial_phasor(mono._negative_field, r)
    phasor = -1j * (fw - np.conj(fmw))
    if t != 0.0:
        phasor = np.exp(-1j * mono.omega_abs * t) * phasor
    return phasor


def c_scalar(phasor, r):
    """Unconjugated square of a phasor function at r; zeros are C-lines.

    `phasor` is a callable r -> complex 3-vector, e.g. a partial of
    electric_phasor or magnetic_phasor.  For a phasor P + iQ the value is
    (|P|^2 - |Q|^2) + 2i P.Q, so vanishing means |P| = |Q| and P . Q = 0:
    circular polarization.
    """
    v = phasor(r)
    return cdot(v, v)


def l_field(mono, r):
    """P x Q for the electric phasor; zeros are L-lines (linear polarization)."""
    e = electric_phasor(mono, r)
    return np.cross(e.real, e.imag)


def time_averaged_scalar(mono, r):
    """Period average of psi for a monochromatic field: 2 F_w(r).F_-w(r).

    Zero for definite-helicity fields; its zeros in the mixed case are the
    'fuzzy' vortex lines of the averaged field.
    """
    fw = spatial_phasor(mono._positive_field, r)
    fmw = spatial_phasor(mono._negative_field, r)
    return 2.0 * cdot(fw, fmw)


@dataclass(frozen=True)
class PhaseRelationReport:
    """Residuals tying psi to the electric and magnetic polarization scalars.

    For helicity +1: psi * exp(+2 i w t) should equal Psi_E and -Psi_B.
    For helicity -1 the relation holds with the opposite phase and the
    phasor scalars conjugated (derived mirror convention).
    """

    helicity: int
    psi: complex
    psi_e: complex
    psi_b: complex
    residual_e: float
    residual_b: float
    scale: float

    @property
    def relative_e(self):
        return self.residual_e / self.scale if self.scale > 0 else 0.0

    @property
    def relative_b(self):
        return self.residual_b / self.scale if self.scale > 0 else 0.0


def coincidence_phase_relation(mono, r, t):
    """Check psi = exp(-2 i w t) Psi_E = -exp(-2 i w t) Psi_B at one point.

    Requires a definite-helicity monochromatic field (the relation fails
    for mixed helicity, where psi oscillates through three Fourier
    components).
    """
    helicity = mono.definite_helicity()
    if helicity is None:
        raise ValueError("phase relation requires a definite-helicity monochromatic field")

    r = np.asarray(r, float)
    psi = complex(rs_polarization_scalar(mono.as_field(), r, t))
    psi_e = complex(c_scalar(lambda x: electric_phasor(mono, x), r))
    psi_b = complex(c_scalar(lambda x: magnetic_phasor(mono, x), r))

    omega_signed = helicity * mono.omega_abs
    dephased = psi * np.exp(2j * omega_signed * t)
    if helicity > 0:
        residual_e = abs(dephased - psi_e)
        residual_b = abs(dephased + psi_b)
    else:
        residual_e = abs(dephased - np.conj(psi_e))
        residual_b = abs(dephased + np.conj(psi_b))

    # Residuals are reported relative to the squared field amplitude, not
    # the local |psi|, which vanishes on the vortex lines themselves.
    scale = max(mono.as_field().amplitude_scale() ** 2, 1e-300)
    return PhaseRelationReport(
        helicity=helicity,
        psi=psi,
        psi_e=psi_e,
        psi_b=psi_b,
        residual_e=float(residual_e),
        residual_b=float(residual_b),
        scale=float(scale),
    )
