import numpy as np
import pytest

from rsvortex.fields import FieldSuperposition, make_helicity_mode


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def random_direction(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_helicity_field(rng, n_modes, omega_abs=1.0, helicity=None):
    """Random superposition with |omega| = omega_abs for every mode.

    helicity: +1/-1 for a definite-helicity field, None to alternate signs.
    """
    modes = []
    for i in range(n_modes):
        h = helicity if helicity is not None else (1 if i % 2 == 0 else -1)
        k = omega_abs * random_direction(rng)
        amp = rng.normal() + 1j * rng.normal()
        modes.append(make_helicity_mode(k, h, amp))
    return FieldSuperposition(tuple(modes))


def random_points(rng, n, box=4.0):
    return rng.uniform(-box, box, size=(n, 3))
