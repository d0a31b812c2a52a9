"""Generation parameter defaults, validation, and JSON overrides."""

import json
from fractions import Fraction

import pytest

from hexatone.music.params import GenParams, params_from_json


def test_defaults_are_sane():
    params = GenParams()
    assert params.tempo == 72
    assert params.pitch_classes() == frozenset({2, 4, 6, 9, 11})
    assert params.loop_length == Fraction(8)
    assert params.notes_per_loop == 8
    assert params.direction_bias[9] == 0.7
    assert params.direction_bias[6] == 0.3


def test_pentatonic_must_have_five_distinct_classes():
    with pytest.raises(ValueError):
        GenParams(pentatonic_degrees=(0, 2, 4, 7))
    with pytest.raises(ValueError):
        GenParams(pentatonic_degrees=(0, 2, 4, 7, 7))


def test_bias_must_be_probability():
    with pytest.raises(ValueError):
        GenParams(direction_bias={9: 1.2, 7: 0.6, 8: 0.4, 6: 0.3})


def test_overrides_from_file(tmp_path):
    path = tmp_path / "params.json"
    path.write_text(json.dumps({
        "tempo": 96,
        "scale_root": 0,
        "loop_length": "6",
        "notes_per_loop": 12,
        "direction_bias": {"9": 0.8, "7": 0.6, "8": 0.4, "6": 0.2},
        "duration_weights": {
            "9": [["2", 1.0]],
            "7": [["1", 1.0]],
            "8": [["1", 1.0]],
            "6": [["1/2", 1.0]],
        },
        "step_weights": [[1, 1.0]],
    }))
    params = params_from_json(path)
    assert params.tempo == 96
    assert params.pitch_classes() == frozenset({0, 2, 4, 7, 9})
    assert params.loop_length == Fraction(6)
    assert params.notes_per_loop == 12
    assert params.direction_bias[9] == 0.8
    assert params.duration_weights[6] == ((Fraction(1, 2), 1.0),)
    assert params.step_weights == ((1, 1.0),)


def test_partial_override_keeps_defaults(tmp_path):
    path = tmp_path / "params.json"
    path.write_text(json.dumps({"tempo": 60}))
    params = params_from_json(path)
    assert params.tempo == 60
    assert params.notes_per_loop == GenParams().notes_per_loop


def test_fractional_loop_length_accepted(tmp_path):
    path = tmp_path / "params.json"
    path.write_text(json.dumps({"loop_length": 6.5}))
    assert params_from_json(path).loop_length == Fraction(13, 2)


def test_json_serialization_round_trips_through_overrides(tmp_path):
    base = GenParams(tempo=84, scale_root=7)
    path = tmp_path / "params.json"
    path.write_text(json.dumps(base.to_jsonable()))
    loaded = params_from_json(path)
    assert loaded == base
