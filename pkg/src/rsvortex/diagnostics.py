"""Named singular-curve diagnostics over a field, shared by service and checks.

Maps each diagnostic name to the scalar (or vector) field whose zero set
is extracted:

    vortex      F.F at the requested time           any field
    c-electric  square of the electric phasor       monochromatic only
    c-magnetic  square of the magnetic phasor       monochromatic only
    time-avg    period-averaged F.F                 monochromatic only
    l-line      P x Q of the electric phasor        monochromatic only
"""

import numpy as np

from .extraction import extract_l_lines, extract_zero_curves, sample_grid
from .fields import MonochromaticField, eval_F, spatial_phasor
from .scalars import (
    cdot,
    electric_phasor,
    magnetic_phasor,
    rs_polarization_scalar,
    time_averaged_scalar,
)

__all__ = ["DIAGNOSTICS", "extract_diagnostic", "requires_monochromatic"]

DIAGNOSTICS = ("vortex", "c-electric", "c-magnetic", "l-line", "time-avg")
_MONO_ONLY = ("c-electric", "c-magnetic", "l-line", "time-avg")


def requires_monochromatic(name):
    return name in _MONO_ONLY


def _grid_scale(values):
    return float(np.max(np.abs(values)))


def extract_diagnostic(field, name, spec, t=0.0, value_rel=None, fraction=None,
                       link_rel=None, validation_rel=None):
    """Extract the curve set of one named diagnostic on a grid.

    The tolerance arguments override the extraction defaults (degeneracy
    value/fraction, endpoint linking, and - for l-line only - the
    third-component validation).  Raises ValueError for unknown names or
    non-monochromatic input where a phasor is needed, and
    DegenerateFieldError when the zero set is not a generic curve.
    """
    if name not in DIAGNOSTICS:
        raise ValueError(f"unknown diagnostic {name!r}; choose one of {', '.join(DIAGNOSTICS)}")
    kwargs = {
        key: val
        for key, val in (("value_rel", value_rel), ("fraction", fraction), ("link_rel", link_rel))
        if val is not None
    }

    if name == "vortex":
        grid = sample_grid(lambda p, tt: rs_polarization_scalar(field, p, tt), spec, t)
        # |F.F| <= |F|^2; scale from the sampled field power
        power = sample_grid(lambda p, tt: cdot(eval_F(field, p, tt), np.conj(eval_F(field, p, tt))), spec, t)
        return extract_zero_curves(grid, scale=_grid_scale(power.values), **kwargs)

    mono = field if isinstance(field, MonochromaticField) else MonochromaticField.from_field(field)

    if name == "l-line":
        if validation_rel is not None:
            kwargs["validation_rel"] = validation_rel
        return extract_l_lines(mono, spec, **kwargs)

    if name == "c-electric":
        phasor = lambda p: electric_phasor(mono, p, t)
    elif name == "c-magnetic":
        phasor = lambda p: magnetic_phasor(mono, p, t)
    else:  # time-avg; stationary, the reference time is irrelevant
        grid = sample_grid(lambda p, _t: time_averaged_scalar(mono, p), spec, 0.0)
        fw = sample_grid(lambda p, _t: np.linalg.norm(spatial_phasor(mono._positive_field, p), axis=-1), spec, 0.0)
        fmw = sample_grid(lambda p, _t: np.linalg.norm(spatial_phasor(mono._negative_field, p), axis=-1), spec, 0.0)
        scale = 2.0 * float(np.max(fw.values.real)) * float(np.max(fmw.values.real))
        return extract_zero_curves(grid, scale=scale, **kwargs)

    grid = sample_grid(lambda p, _t: cdot(phasor(p), phasor(p)), spec, 0.0)
    power = sample_grid(lambda p, _t: cdot(phasor(p), np.conj(phasor(p))), spec, 0.0)
    return extract_zero_curves(grid, scale=_grid_scale(power.values), **kwargs)
