import json

import pytest

from scenes import classroom_camera, four_speaker_scene

from tabletalk.geometry import (
    AnnotationFormatError,
    annotation_from_jsonable,
    annotation_to_jsonable,
    geometry_from_jsonable,
    geometry_json_str,
    geometry_to_jsonable,
    TableModel,
    baseline_geometry,
)


@pytest.fixture()
def doc():
    scene = four_speaker_scene()
    return annotation_to_jsonable(scene.annotate(classroom_camera()))


class TestAnnotationSchema:
    def test_round_trip(self, doc):
        annotation = annotation_from_jsonable(doc)
        again = annotation_to_jsonable(annotation)
        assert again == doc

    def test_missing_field(self, doc):
        del doc["keyboard_width_in"]
        with pytest.raises(AnnotationFormatError) as excinfo:
            annotation_from_jsonable(doc)
        assert "keyboard_width_in" in str(excinfo.value)

    def test_duplicate_label(self, doc):
        doc["points"].append(dict(doc["points"][0]))
        with pytest.raises(AnnotationFormatError):
            annotation_from_jsonable(doc)

    def test_negative_coordinates_rejected(self, doc):
        doc["points"][0]["x"] = -3.0
        with pytest.raises(AnnotationFormatError):
            annotation_from_jsonable(doc)

    def test_non_numeric_width(self, doc):
        doc["keyboard_width_in"] = "wide"
        with pytest.raises(AnnotationFormatError):
            annotation_from_jsonable(doc)

    def test_monitor_width_optional(self, doc):
        doc.pop("monitor_width_in", None)
        annotation = annotation_from_jsonable(doc)
        assert annotation.monitor_width_in is None


class TestGeometryJson:
    def test_schema_keys(self):
        geometry = baseline_geometry(TableModel(48.0, 36.0), 2)
        doc = geometry_to_jsonable(geometry)
        assert set(doc) == {"table", "mic", "mouths_in", "distances_in"}
        assert set(doc["table"]) == {"width_in", "depth_in"}
        assert doc["mic"] == [0, 0, 0]

    def test_round_trip_preserves_distances(self):
        geometry = baseline_geometry(TableModel(48.0, 36.0), 3)
        doc = geometry_to_jsonable(geometry)
        loaded = geometry_from_jsonable(doc)
        for speaker, d in geometry.distances_in.items():
            assert loaded.distances_in[speaker] == pytest.approx(d, abs=1e-5)

    def test_canonical_string_is_stable(self):
        geometry = baseline_geometry(TableModel(48.0, 36.0), 2)
        assert geometry_json_str(geometry) == geometry_json_str(geometry)
        parsed = json.loads(geometry_json_str(geometry))
        assert parsed == geometry_to_jsonable(geometry)
