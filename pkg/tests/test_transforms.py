import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rsvortex.fields import cdot, eval_EB, make_helicity_mode
from rsvortex.scalars import rs_polarization_scalar
from rsvortex.transforms import BoostSpec, boost_field, boost_mode, boost_point, duality_rotate

from conftest import random_direction, random_helicity_field, random_points


class TestDualityRotate:
    def test_quarter_turn_swaps_E_and_B(self, rng):
        field = random_helicity_field(rng, 4, helicity=None)
        rotated = duality_rotate(field, np.pi / 2)
        r = random_points(rng, 30)
        t = 0.8
        E, B = eval_EB(field, r, t)
        E2, B2 = eval_EB(rotated, r, t)
        scale = np.abs(E).max()
        np.testing.assert_allclose(E2, -B, atol=1e-13 * scale)
        np.testing.assert_allclose(B2, E, atol=1e-13 * scale)

    def test_zero_angle_is_identity(self, rng):
        field = random_helicity_field(rng, 2)
        rotated = duality_rotate(field, 0.0)
        for a, b in zip(rotated.modes, field.modes):
            np.testing.assert_allclose(a.f, b.f, rtol=0, atol=0)

    def test_psi_scales_by_double_phase(self, rng):
        field = random_helicity_field(rng, 3, helicity=None)
        chi = 0.7312
        rotated = duality_rotate(field, chi)
        r = random_points(rng, 40)
        t = -1.1
        psi = rs_polarization_scalar(field, r, t)
        psi_rot = rs_polarization_scalar(rotated, r, t)
        np.testing.assert_allclose(psi_rot, np.exp(2j * chi) * psi, rtol=1e-12, atol=1e-14)


class TestBoostMode:
    def test_zero_boost_is_identity(self, rng):
        m = make_helicity_mode(random_direction(rng), 1, 1.2 - 0.7j)
        out = boost_mode(m, BoostSpec((0.0, 0.0, 0.0)))
        np.testing.assert_allclose(out.k, m.k, atol=1e-16)
        assert out.omega == pytest.approx(m.omega, abs=1e-16)
        np.testing.assert_allclose(out.f, m.f, atol=1e-16)

    def test_longitudinal_doppler(self):
        m = make_helicity_mode((0, 0, 1.0), 1, 1.0)
        out = boost_mode(m, BoostSpec((0, 0, 0.5)))
        # w' = gamma (1 - 0.5) = sqrt(1/3)
        assert out.omega == pytest.approx(np.sqrt(1.0 / 3.0), rel=1e-12)
        assert abs(out.omega) == pytest.approx(np.linalg.norm(out.k), rel=1e-12)

    def test_mode_invariants_preserved(self, rng):
        for _ in range(10):
            m = make_helicity_mode(
                rng.uniform(0.5, 2) * random_direction(rng),
                int(rng.choice([1, -1])),
                rng.normal() + 1j * rng.normal(),
            )
            boost = BoostSpec(rng.uniform(0.1, 0.9) * random_direction(rng))
            out = boost_mode(m, boost)
            assert out.is_valid(tol=1e-11)
            assert np.sign(out.omega) == np.sign(m.omega)

    def test_complex_square_invariant(self, rng):
        # The bilinear square f.f is preserved by the complex-orthogonal action.
        for _ in range(20):
            m = make_helicity_mode(
                rng.uniform(0.2, 3) * random_direction(rng),
                int(rng.choice([1, -1])),
                rng.normal() + 1j * rng.normal(),
            )
            boost = BoostSpec(rng.uniform(0, 0.9) * random_direction(rng))
            out = boost_mode(m, boost)
            assert cdot(out.f, out.f) == pytest.approx(cdot(m.f, m.f), abs=1e-12)

    def test_group_property_inverse(self, rng):
        m = make_helicity_mode((0.3, -0.4, 1.1), -1, 0.9 + 0.2j)
        beta = 0.6
        there = boost_mode(m, BoostSpec((0, 0, beta)))
        back = boost_mode(there, BoostSpec((0, 0, -beta)))
        np.testing.assert_allclose(back.k, m.k, atol=1e-12)
        assert back.omega == pytest.approx(m.omega, rel=1e-12)
        np.testing.assert_allclose(back.f, m.f, atol=1e-12)

    def test_superluminal_rejected(self):
        with pytest.raises(ValueError):
            BoostSpec((0, 0, 1.0))


class TestBoostPoint:
    def test_zero_boost_identity(self):
        r, t = boost_point((1.0, 2.0, 3.0), 4.0, BoostSpec((0, 0, 0)))
        np.testing.assert_allclose(r, [1, 2, 3])
        assert t == 4.0

    def test_time_axis_textbook_case(self):
        beta = 0.8
        gamma = 1.0 / np.sqrt(1 - beta**2)
        r, t = boost_point((0, 0, 0), 2.0, BoostSpec((beta, 0, 0)))
        np.testing.assert_allclose(r, [-gamma * beta * 2.0, 0, 0], rtol=1e-14)
        assert t == pytest.approx(gamma * 2.0, rel=1e-14)

    def test_phase_invariance(self, rng):
        for _ in range(20):
            m = make_helicity_mode(
                rng.uniform(0.3, 2) * random_direction(rng),
                int(rng.choice([1, -1])),
                1.0,
            )
            boost = BoostSpec(rng.uniform(0, 0.9) * random_direction(rng))
            r = rng.uniform(-3, 3, size=3)
            t = rng.uniform(-3, 3)
            out = boost_mode(m, boost)
            rp, tp = boost_point(r, t, boost)
            phase = m.k @ r - m.omega * t
            phase_p = out.k @ rp - out.omega * tp
            assert phase_p == pytest.approx(phase, abs=1e-11)

    @given(
        bx=st.floats(-0.55, 0.55), by=st.floats(-0.55, 0.55), bz=st.floats(-0.55, 0.55),
        x=st.floats(-2, 2), y=st.floats(-2, 2), z=st.floats(-2, 2), t=st.floats(-2, 2),
    )
    @settings(max_examples=100, deadline=None)
    def test_interval_invariance(self, bx, by, bz, x, y, z, t):
        boost = BoostSpec((bx, by, bz))
        rp, tp = boost_point((x, y, z), t, boost)
        interval = t * t - (x * x + y * y + z * z)
        interval_p = tp * tp - float(rp @ rp)
        assert interval_p == pytest.approx(interval, abs=1e-9)


class TestPsiInvariance:
    def test_psi_is_frame_independent(self, rng):
        field = random_helicity_field(rng, 4, helicity=None)
        scale = field.amplitude_scale() ** 2
        for beta_mag in (0.3, 0.6, 0.9):
            boost = BoostSpec(beta_mag * random_direction(rng))
            boosted = boost_field(field, boost)
            for _ in range(10):
                r = rng.uniform(-2, 2, size=3)
                t = rng.uniform(-2, 2)
                rp, tp = boost_point(r, t, boost)
                psi = rs_polarization_scalar(field, r, t)
                psi_p = rs_polarization_scalar(boosted, rp, tp)
                assert abs(psi_p - psi) <= 1e-10 * scale

    def test_split_commutes_with_boost(self, rng):
        field = random_helicity_field(rng, 6, helicity=None)
        boost = BoostSpec(0.85 * random_direction(rng))
        boosted = boost_field(field, boost)
        signs_before = [np.sign(m.omega) for m in field.modes]
        signs_after = [np.sign(m.omega) for m in boosted.modes]
        assert signs_before == signs_after

    def test_boosted_field_still_solves_maxwell(self, rng):
        from rsvortex.fields import check_maxwell

        field = random_helicity_field(rng, 3, helicity=None)
        boosted = boost_field(field, BoostSpec((0.2, -0.5, 0.6)))
        r = rng.uniform(-1, 1, size=3)
        res1 = check_maxwell(boosted, r, 0.1, 1e-2)
        res2 = check_maxwell(boosted, r, 0.1, 5e-3)
        for big, small in ((res1.div_residual, res2.div_residual),
                           (res1.faraday_residual, res2.faraday_residual)):
            if big < 1e-12 * res1.field_scale:
                continue
            assert np.log2(big / small) > 1.5
