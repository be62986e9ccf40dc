import json

import numpy as np
import pytest
from numpy.testing import assert_allclose

from chebspline import (DescriptorError, Spline, SplineSpace, descriptor_for,
                        load_descriptor, load_object, object_from_descriptor,
                        sample_spline, save_descriptor)
from chebspline.basis import TensorSurface
from chebspline.extensions import MultiOrderSpace

from conftest import DESCRIPTORS

ALL_NAMES = sorted(p.stem for p in DESCRIPTORS.glob("*.json"))


def test_corpus_is_present():
    assert len(ALL_NAMES) >= 12


@pytest.mark.parametrize("name", ALL_NAMES)
def test_round_trip(tmp_path, name):
    path = DESCRIPTORS / f"{name}.json"
    obj = load_object(path)
    d1 = descriptor_for(obj)
    out = tmp_path / "again.json"
    save_descriptor(out, d1)
    d2 = descriptor_for(object_from_descriptor(load_descriptor(out)))
    assert json.dumps(d1, sort_keys=True) == json.dumps(d2, sort_keys=True)


def test_spline_descriptor_preserves_curve(tmp_path):
    path = DESCRIPTORS / "trig_m4_open_curve.json"
    spline = load_object(path)
    assert isinstance(spline, Spline)
    out = tmp_path / "copy.json"
    save_descriptor(out, descriptor_for(spline))
    again = load_object(out)
    xs = np.linspace(spline.space.a, spline.space.b, 300)
    assert_allclose(sample_spline(again, xs), sample_spline(spline, xs),
                    atol=1e-14)


def test_object_types():
    seen = set()
    for name in ALL_NAMES:
        obj = load_object(DESCRIPTORS / f"{name}.json")
        seen.add(type(obj).__name__)
    assert {"SplineSpace", "Spline"} <= seen
    assert isinstance(load_object(DESCRIPTORS / "rounded_square_surface.json"),
                      TensorSurface)
    assert isinstance(
        load_object(DESCRIPTORS / "multiorder_line_circle_cardioid.json"),
        MultiOrderSpace)


def test_missing_key_has_context(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"type": "space",
                               "partition": {"order": 3, "breakpoints": [0, 1]},
                               "sections": [{"family": "polynomial"}]}))
    with pytest.raises(DescriptorError) as err:
        load_object(bad)
    assert "partition" in str(err.value)


def test_unknown_family_is_descriptor_error(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "type": "space",
        "partition": {"order": 3, "breakpoints": [0.0, 1.0],
                      "multiplicities": []},
        "sections": [{"family": "warp"}]}))
    with pytest.raises(DescriptorError) as err:
        load_object(bad)
    assert "warp" in str(err.value)


def test_malformed_json_reports_position(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"type": "space",,}')
    with pytest.raises(DescriptorError) as err:
        load_descriptor(bad)
    assert "line" in str(err.value)


def test_bad_connection_matrix_rejected(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "type": "space",
        "partition": {"order": 3, "breakpoints": [0.0, 0.5, 1.0],
                      "multiplicities": [1]},
        "sections": [{"family": "polynomial"}, {"family": "polynomial"}],
        "connections": [{"at": 0.5, "matrix": [[1.0, 0.0], [0.0, -2.0]]}]}))
    with pytest.raises(DescriptorError):
        load_object(bad)


def test_periodic_requires_knots_form(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "type": "space",
        "periodic": {"period": 1.0},
        "partition": {"order": 3, "breakpoints": [0.0, 1.0],
                      "multiplicities": []},
        "sections": [{"family": "polynomial"}]}))
    with pytest.raises(DescriptorError):
        load_object(bad)
