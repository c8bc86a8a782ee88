"""JSON field descriptions: parsing with path-aware diagnostics, normalizing writes.

A field file holds a list of mode entries plus optional metadata:

    {
      "label": "three waves",
      "units": "c = 1, k in rad/length",
      "modes": [
        {"k": [0, 0, 1], "helicity": 1, "amplitude": [1.0, 0.0]},
        {"k": [0, 0, 1], "omega": 1.0,
         "f": [[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]]}
      ]
    }

The first form is the normal one: a circularly polarized mode on the
deterministic transverse triad.  The raw (omega, f) form exists so that
arbitrary - including deliberately corrupted - mode data can be written
down and fed to the residual checks.  Writing prefers the helicity form
whenever the mode data supports it and stabilizes the amplitude so a
parse/write cycle is idempotent.
"""

import json

import numpy as np

from .fields import FieldSuperposition, PlaneWaveMode, make_helicity_mode, transverse_triad

__all__ = ["FieldSpecError", "field_from_dict", "field_to_dict", "load_field", "save_field"]

# A mode reconstructs from (k, helicity, amplitude) when its amplitude
# vector is this close (relative) to the circular basis vector.
_RECONSTRUCT_TOL = 1e-9


class FieldSpecError(ValueError):
    """Malformed field description; the message names the offending entry."""


def _want(entry, where, key, length=None):
    if key not in entry:
        raise FieldSpecError(f"{where}: missing required field '{key}'")
    value = entry[key]
    if length is not None:
        try:
            arr = np.asarray(value, float)
        except (TypeError, ValueError):
            raise FieldSpecError(f"{where}.{key}: expected {length} numbers") from None
        if arr.shape != (length,):
            raise FieldSpecError(f"{where}.{key}: expected {length} numbers, got {value!r}")
        return arr
    return value


def _mode_from_entry(entry, where):
    if not isinstance(entry, dict):
        raise FieldSpecError(f"{where}: mode entry must be an object")
    k = _want(entry, where, "k", length=3)
    raw = "f" in entry or "omega" in entry
    if raw:
        omega = entry.get("omega")
        if not isinstance(omega, (int, float)):
            raise FieldSpecError(f"{where}.omega: expected a number")
        fpairs = _want(entry, where, "f", None)
        try:
            farr = np.asarray(fpairs, float)
        except (TypeError, ValueError):
            raise FieldSpecError(f"{where}.f: expected three [re, im] pairs") from None
        if farr.shape != (3, 2):
            raise FieldSpecError(f"{where}.f: expected three [re, im] pairs, got shape {farr.shape}")
        f = farr[:, 0] + 1j * farr[:, 1]
        try:
            return PlaneWaveMode(k=k, omega=float(omega), f=f)
        except ValueError as exc:
            raise FieldSpecError(f"{where}: {exc}") from None
    helicity = entry.get("helicity")
    if helicity not in (1, -1):
        raise FieldSpecError(f"{where}.helicity: expected +1 or -1, got {helicity!r}")
    amp = _want(entry, where, "amplitude", length=2)
    try:
        return make_helicity_mode(k, int(helicity), complex(amp[0], amp[1]))
    except ValueError as exc:
        raise FieldSpecError(f"{where}: {exc}") from None


def field_from_dict(data):
    """Build (FieldSuperposition, metadata) from a parsed field description."""
    if not isinstance(data, dict):
        raise FieldSpecError("top level: expected an object with a 'modes' list")
    modes_raw = data.get("modes")
    if not isinstance(modes_raw, list) or not modes_raw:
        raise FieldSpecError("modes: expected a non-empty list of mode entries")
    modes = tuple(
        _mode_from_entry(entry, f"modes[{i}]") for i, entry in enumerate(modes_raw)
    )
    meta = {key: data[key] for key in ("label", "units") if key in data}
    return FieldSuperposition(modes), meta


def _candidate_amplitudes(mode):
    if mode.circular_amplitude is not None:
        yield complex(mode.circular_amplitude)
    if mode.is_valid(tol=_RECONSTRUCT_TOL):
        # Projection onto the circular basis vector (unit conjugate norm).
        h = mode.helicity
        e1, e2, _ = transverse_triad(mode.k)
        u = (e1 + 1j * h * e2) / np.sqrt(2.0)
        yield complex(np.conj(u) @ mode.f)


def _mode_to_entry(mode):
    # Prefer the helicity/amplitude form, but only when re-parsing the
    # entry reproduces the mode byte for byte; anything else (boosted,
    # rotated or corrupted data) is written raw, which is trivially
    # stable under parse/write cycles.
    for amp in _candidate_amplitudes(mode):
        rebuilt = make_helicity_mode(mode.k, mode.helicity, amp)
        if np.array_equal(rebuilt.f, mode.f) and rebuilt.omega == mode.omega:
            return {
                "k": [float(v) for v in mode.k],
                "helicity": mode.helicity,
                "amplitude": [amp.real, amp.imag],
            }
    return {
        "k": [float(v) for v in mode.k],
        "omega": float(mode.omega),
        "f": [[float(c.real), float(c.imag)] for c in mode.f],
    }


def field_to_dict(field, label=None, units=None):
    out = {}
    if label is not None:
        out["label"] = label
    if units is not None:
        out["units"] = units
    out["modes"] = [_mode_to_entry(m) for m in field.modes]
    return out


def load_field(path):
    """Parse a field file; FieldSpecError carries line/field diagnostics."""
    with open(path) as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FieldSpecError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    try:
        return field_from_dict(data)
    except FieldSpecError as exc:
        raise FieldSpecError(f"{path}: {exc}") from None


def save_field(path, field, label=None, units=None):
    with open(path, "w") as fh:
        json.dump(field_to_dict(field, label=label, units=units), fh, indent=2)
        fh.write("\n")
