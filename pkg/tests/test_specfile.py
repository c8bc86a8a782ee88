import json

import numpy as np
import pytest

from rsvortex.fields import FieldSuperposition, PlaneWaveMode, eval_F
from rsvortex.specfile import (
    FieldSpecError,
    field_from_dict,
    field_to_dict,
    load_field,
    save_field,
)
from rsvortex.transforms import BoostSpec, boost_field

from conftest import random_helicity_field


def write_json(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return path


class TestParsing:
    def test_basic_helicity_entry(self):
        field, meta = field_from_dict(
            {"label": "x", "modes": [{"k": [0, 0, 2], "helicity": -1, "amplitude": [1.5, -0.5]}]}
        )
        assert len(field) == 1
        m = field.modes[0]
        assert m.omega == -2.0
        assert m.circular_amplitude == 1.5 - 0.5j
        assert meta == {"label": "x"}

    def test_raw_entry(self):
        field, _ = field_from_dict(
            {"modes": [{"k": [0, 0, 1], "omega": 1.0, "f": [[1, 0], [0, 1], [0.5, 0]]}]}
        )
        np.testing.assert_allclose(field.modes[0].f, [1, 1j, 0.5])
        assert not field.modes[0].is_valid()  # deliberately corrupted is representable

    def test_missing_k_names_the_field(self):
        with pytest.raises(FieldSpecError, match=r"modes\[0\]: missing required field 'k'"):
            field_from_dict({"modes": [{"helicity": 1, "amplitude": [1, 0]}]})

    def test_bad_helicity_named(self):
        with pytest.raises(FieldSpecError, match=r"modes\[1\]\.helicity"):
            field_from_dict(
                {
                    "modes": [
                        {"k": [0, 0, 1], "helicity": 1, "amplitude": [1, 0]},
                        {"k": [0, 0, 1], "helicity": 3, "amplitude": [1, 0]},
                    ]
                }
            )

    def test_wrong_k_arity(self):
        with pytest.raises(FieldSpecError, match=r"modes\[0\]\.k"):
            field_from_dict({"modes": [{"k": [0, 0], "helicity": 1, "amplitude": [1, 0]}]})

    def test_empty_modes_rejected(self):
        with pytest.raises(FieldSpecError, match="non-empty"):
            field_from_dict({"modes": []})

    def test_json_syntax_error_reports_line(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{\n  "modes": [\n')
        with pytest.raises(FieldSpecError, match="line 3"):
            load_field(path)


class TestRoundTrip:
    def test_helicity_form_idempotent_bytes(self, tmp_path, rng):
        field = random_helicity_field(rng, 4, helicity=None)
        p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
        save_field(p1, field, label="roundtrip")
        f2, meta = load_field(p1)
        save_field(p2, f2, **meta)
        assert p1.read_bytes() == p2.read_bytes()

    def test_boosted_field_idempotent_bytes(self, tmp_path, rng):
        field = boost_field(random_helicity_field(rng, 3), BoostSpec((0.2, 0.3, -0.4)))
        p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
        save_field(p1, field)
        f2, meta = load_field(p1)
        save_field(p2, f2, **meta)
        assert p1.read_bytes() == p2.read_bytes()

    def test_semantics_preserved(self, tmp_path, rng):
        field = random_helicity_field(rng, 3, helicity=None)
        path = tmp_path / "f.json"
        save_field(path, field)
        loaded, _ = load_field(path)
        r = rng.uniform(-2, 2, size=(10, 3))
        np.testing.assert_allclose(
            eval_F(loaded, r, 0.3), eval_F(field, r, 0.3), rtol=0, atol=0
        )

    def test_corrupted_mode_round_trips_raw(self, tmp_path):
        bad = FieldSuperposition((PlaneWaveMode(k=(0, 0, 1.0), omega=1.0, f=(1, 1j, 0.5)),))
        path = tmp_path / "bad.json"
        save_field(path, bad)
        entry = json.loads(path.read_text())["modes"][0]
        assert "f" in entry and "helicity" not in entry
        loaded, _ = load_field(path)
        np.testing.assert_array_equal(loaded.modes[0].f, bad.modes[0].f)

    def test_normalized_form_prefers_helicity(self, rng):
        field = random_helicity_field(rng, 2, helicity=1)
        entries = field_to_dict(field)["modes"]
        assert all("helicity" in e and "amplitude" in e for e in entries)
