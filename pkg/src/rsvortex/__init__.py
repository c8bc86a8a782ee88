"""Singular curves of free electromagnetic fields.

Represents fields as superpositions of circularly polarized plane waves
of the complex combination F = E + iB, splits them by helicity, computes
the polarization scalars whose zero sets are vortex lines, C-lines and
L-lines, and extracts those curves from 3D grids.
"""

from .fields import (
    cdot,
    PlaneWaveMode,
    FieldSuperposition,
    MonochromaticField,
    make_helicity_mode,
    eval_F,
    eval_EB,
    spatial_phasor,
    phasor_from_time_samples,
    check_maxwell,
)
from .helicity import HelicityPair, split_by_helicity, apply_helicity_operator, numeric_hilbert
from .scalars import (
    rs_polarization_scalar,
    electric_phasor,
    magnetic_phasor,
    c_scalar,
    l_field,
    time_averaged_scalar,
    coincidence_phase_relation,
)
from .transforms import BoostSpec, duality_rotate, boost_mode, boost_field, boost_point
from .extraction import (
    GridSpec,
    ScalarGrid,
    Curve,
    CurveSet,
    DegenerateFieldError,
    sample_grid,
    extract_zero_curves,
    extract_l_lines,
    curve_set_distance,
)

__version__ = "0.1.0"
