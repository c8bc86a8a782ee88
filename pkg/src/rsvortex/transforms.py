"""Duality rotations and Lorentz boosts acting on modes and spacetime points.

A boost acts on the complex field amplitude by the complex-orthogonal
3x3 matrix

    f' = gamma (f - i beta x f) - gamma^2/(gamma+1) beta (beta . f),

obtained by combining the standard transformation laws of E and B.  It
preserves the unconjugated square f.f, which is what makes the scalar
psi = F.F frame independent.  Modes transform actively (the returned
mode is the field seen in the primed frame) while points transform with
boost_point, so phases k.r - w t are invariant.
"""

import numpy as np
from dataclasses import dataclass

from .fields import FieldSuperposition, PlaneWaveMode, _vec3

__all__ = ["BoostSpec", "duality_rotate", "boost_mode", "boost_field", "boost_point"]


@dataclass(frozen=True, eq=False)
class BoostSpec:
    """Boost velocity beta (|beta| < 1, c = 1) with derived Lorentz factor."""

    beta: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "beta", _vec3(self.beta))
        if np.linalg.norm(self.beta) >= 1.0:
            raise ValueError("|beta| must be < 1")

    @property
    def gamma(self):
        return 1.0 / np.sqrt(1.0 - float(self.beta @ self.beta))

    def inverse(self):
        return BoostSpec(-self.beta)


def duality_rotate(field, chi):
    """F -> exp(i chi) F: multiply every mode amplitude by the phase.

    chi = pi/2 realizes the discrete duality map (E, B) -> (-B, E).  The
    scalar psi picks up exp(2 i chi), so its zero set is untouched.
    """
    phase = np.exp(1j * float(chi))
    return FieldSuperposition(
        tuple(PlaneWaveMode(k=m.k, omega=m.omega, f=phase * m.f) for m in field.modes)
    )


def _boost_spatial(v, t_component, boost):
    # Spatial part of the boost of a four-vector (t_component, v); the
    # gamma^2/(gamma+1) form of (gamma-1)/|beta|^2 is finite at beta = 0.
    beta = boost.beta
    gamma = boost.gamma
    coef = gamma * gamma / (gamma + 1.0)
    return v + coef * (beta @ v) * beta - gamma * t_component * beta


def boost_mode(mode, boost):
    """Boost one plane-wave mode; helicity (sign of omega) is preserved.

    w' = gamma (w - beta.k); k' transforms as the spatial part of the
    wave four-vector; f' by the complex-orthogonal matrix above.  A valid
    mode stays valid to rounding.
    """
    beta = boost.beta
    gamma = boost.gamma
    omega_p = gamma * (mode.omega - float(beta @ mode.k))
    k_p = _boost_spatial(mode.k, mode.omega, boost)
    f_p = (
        gamma * (mode.f - 1j * np.cross(beta, mode.f))
        - (gamma * gamma / (gamma + 1.0)) * (beta @ mode.f) * beta
    )
    return PlaneWaveMode(k=k_p, omega=omega_p, f=f_p)


def boost_field(field, boost):
    """Boost every mode of a superposition."""
    return FieldSuperposition(tuple(boost_mode(m, boost) for m in field.modes))


def boost_point(r, t, boost):
    """Boost a spacetime point; (r', t') such that k'.r' - w't' = k.r - w t."""
    r = _vec3(r)
    t = float(t)
    t_p = boost.gamma * (t - float(boost.beta @ r))
    r_p = _boost_spatial(r, t, boost)
    return r_p, t_p
