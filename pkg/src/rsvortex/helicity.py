"""Helicity decomposition F = F+ + F- and the sign-of-frequency operator.

The operator S multiplies each frequency component by sgn(omega); on the
time axis it acts as i times the Hilbert transform, which numeric_hilbert
approximates by a truncated principal-value quadrature.
"""

import numpy as np
from dataclasses import dataclass, replace

from .fields import FieldSuperposition, eval_F

__all__ = ["HelicityPair", "split_by_helicity", "apply_helicity_operator", "numeric_hilbert"]


@dataclass(frozen=True)
class HelicityPair:
    """Positive- and negative-helicity parts of a field."""

    positive: FieldSuperposition
    negative: FieldSuperposition


def split_by_helicity(field):
    """Partition the mode list by the sign of omega, preserving order."""
    return HelicityPair(positive=field.positive_part(), negative=field.negative_part())


def apply_helicity_operator(field):
    """S F: multiply every mode amplitude by sgn(omega).

    S is an involution; eigenstates are the definite-helicity fields.
    """
    def scaled(m):
        sign = 1.0 if m.omega > 0 else -1.0
        amp = None if m.circular_amplitude is None else sign * m.circular_amplitude
        return replace(m, f=sign * m.f, circular_amplitude=amp)

    return FieldSuperposition(tuple(scaled(m) for m in field.modes))


def numeric_hilbert(field, r, t, window, n_samples):
    """Principal-value estimate of (S F)(r, t) from time samples of F.

    Computes (i/pi) PV int dt' F(r,t')/(t'-t) by trapezoid quadrature on a
    uniform grid over [t - window/2, t + window/2], dropping the singular
    centre sample; the symmetric truncation cancels the odd part of the
    kernel.  n_samples must be even so the centre falls on a node.

    Converges to eval_F(apply_helicity_operator(field), r, t) as the
    window and the sample density grow; the leading error is ~2/(samples
    per period) plus an O(1/window) truncation tail.
    """
    window = float(window)
    n_samples = int(n_samples)
    if window <= 0:
        raise ValueError("window must be positive")
    if n_samples < 4 or n_samples % 2 != 0:
        raise ValueError("n_samples must be an even integer >= 4")

    dt = window / n_samples
    m = np.arange(n_samples + 1)
    t_prime = (t - window / 2.0) + m * dt
    weights = np.full(n_samples + 1, dt)
    weights[0] = weights[-1] = dt / 2.0
    keep = m != n_samples // 2

    samples = eval_F(field, np.asarray(r, float), t_prime[keep])  # (n, 3)
    kernel = weights[keep] / (t_prime[keep] - t)
    return (1j / np.pi) * (kernel @ samples)
