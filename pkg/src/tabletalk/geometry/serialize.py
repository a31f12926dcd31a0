"""Annotation and geometry JSON (de)serialization.

Annotation document:
    { "frame_id": str, "keyboard_width_in": number,
      "speakers": [str], "scales_ppi": {speaker: number},
      "points": [{"label": str, "x": number, "y": number}],
      "monitor_width_in": number (optional) }

Geometry document:
    { "table": {"width_in": n, "depth_in": n}, "mic": [0, 0, 0],
      "mouths_in": {speaker: [x, y, z]}, "distances_in": {speaker: n} }

Both the CLI and the HTTP service serialize geometry through
geometry_json_str so their outputs compare byte-for-byte.
"""

from __future__ import annotations

import json

from .types import Annotation, PixelPoint, SpeakerGeometry


class AnnotationFormatError(ValueError):
    """Annotation JSON is malformed or violates the schema."""


def _require(doc: dict, key: str, kind):
    if key not in doc:
        raise AnnotationFormatError(f"annotation missing field {key!r}")
    value = doc[key]
    if kind is float:
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise AnnotationFormatError(f"field {key!r} must be a number")
        return float(value)
    if not isinstance(value, kind):
        raise AnnotationFormatError(f"field {key!r} must be {kind.__name__}")
    return value


def annotation_from_jsonable(doc) -> Annotation:
    if not isinstance(doc, dict):
        raise AnnotationFormatError("annotation document must be a JSON object")
    frame_id = _require(doc, "frame_id", str)
    keyboard_width = _require(doc, "keyboard_width_in", float)
    speakers = _require(doc, "speakers", list)
    scales = _require(doc, "scales_ppi", dict)
    raw_points = _require(doc, "points", list)

    points: dict[str, PixelPoint] = {}
    for entry in raw_points:
        if not isinstance(entry, dict) or not {"label", "x", "y"} <= set(entry):
            raise AnnotationFormatError(f"bad point entry: {entry!r}")
        label = entry["label"]
        if label in points:
            raise AnnotationFormatError(f"duplicate point label {label!r}")
        points[label] = PixelPoint(float(entry["x"]), float(entry["y"]), label)

    monitor_width = doc.get("monitor_width_in")
    try:
        return Annotation(
            frame_id=frame_id,
            points=points,
            keyboard_width_in=keyboard_width,
            scales_ppi={str(k): float(v) for k, v in scales.items()},
            speaker_ids=[str(s) for s in speakers],
            monitor_width_in=None if monitor_width is None else float(monitor_width),
        )
    except ValueError as exc:
        raise AnnotationFormatError(str(exc)) from exc


def annotation_to_jsonable(annotation: Annotation) -> dict:
    doc = {
        "frame_id": annotation.frame_id,
        "keyboard_width_in": annotation.keyboard_width_in,
        "speakers": list(annotation.speaker_ids),
        "scales_ppi": dict(annotation.scales_ppi),
        "points": [
            {"label": p.label, "x": p.x, "y": p.y}
            for p in annotation.points.values()
        ],
    }
    if annotation.monitor_width_in is not None:
        doc["monitor_width_in"] = annotation.monitor_width_in
    return doc


def load_annotation(path) -> Annotation:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise AnnotationFormatError(f"cannot read annotation {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise AnnotationFormatError(f"invalid JSON in {path}: {exc}") from exc
    return annotation_from_jsonable(doc)


def geometry_to_jsonable(geometry: SpeakerGeometry) -> dict:
    rounded = lambda v: round(float(v), 6)
    return {
        "table": {
            "width_in": rounded(geometry.table.width_in),
            "depth_in": rounded(geometry.table.depth_in),
        },
        "mic": [0, 0, 0],
        "mouths_in": {
            s: [rounded(c) for c in xyz]
            for s, xyz in sorted(geometry.mouths_in.items())
        },
        "distances_in": {
            s: rounded(d) for s, d in sorted(geometry.distances_in.items())
        },
    }


def geometry_json_str(geometry: SpeakerGeometry) -> str:
    """Canonical geometry JSON; shared by the CLI and the HTTP service."""
    return json.dumps(geometry_to_jsonable(geometry), sort_keys=True, indent=2) + "\n"


def geometry_from_jsonable(doc: dict) -> SpeakerGeometry:
    from .types import TableModel

    table = TableModel(
        width_in=float(doc["table"]["width_in"]),
        depth_in=float(doc["table"]["depth_in"]),
        depth_extension_applied=True,
    )
    mouths = {s: tuple(float(c) for c in xyz) for s, xyz in doc["mouths_in"].items()}
    return SpeakerGeometry(table=table, mouths_in=mouths)


def load_geometry(path) -> SpeakerGeometry:
    with open(path, "r", encoding="utf-8") as fh:
        return geometry_from_jsonable(json.load(fh))
