"""Speaker geometry recovery from annotated video frames."""

from .cross_ratio import cross_ratio, estimate_cd
from .estimate import (
    baseline_geometry,
    estimate_speakers,
    estimate_table,
    estimate_table_detailed,
    geometry_error,
)
from .serialize import (
    AnnotationFormatError,
    annotation_from_jsonable,
    annotation_to_jsonable,
    geometry_from_jsonable,
    geometry_json_str,
    geometry_to_jsonable,
    load_annotation,
    load_geometry,
)
from .types import (
    Annotation,
    CollinearityViolation,
    CollinearQuad,
    DegenerateQuad,
    GeometryError,
    InversionSingularity,
    MissingPoints,
    MissingScale,
    NearParallelLines,
    NegativeDistance,
    PixelPoint,
    SpeakerGeometry,
    SpeakerSetMismatch,
    SpeakerUnassignedEdge,
    TableModel,
)

__all__ = [
    "Annotation",
    "AnnotationFormatError",
    "CollinearQuad",
    "CollinearityViolation",
    "DegenerateQuad",
    "GeometryError",
    "InversionSingularity",
    "MissingPoints",
    "MissingScale",
    "NearParallelLines",
    "NegativeDistance",
    "PixelPoint",
    "SpeakerGeometry",
    "SpeakerSetMismatch",
    "SpeakerUnassignedEdge",
    "TableModel",
    "annotation_from_jsonable",
    "annotation_to_jsonable",
    "baseline_geometry",
    "cross_ratio",
    "estimate_cd",
    "estimate_speakers",
    "estimate_table",
    "estimate_table_detailed",
    "geometry_error",
    "geometry_from_jsonable",
    "geometry_json_str",
    "geometry_to_jsonable",
    "load_annotation",
    "load_geometry",
]

def estimate_geometry(annotation, **kwargs):
    """Annotation -> SpeakerGeometry, the full per-frame pipeline."""
    table = estimate_table(annotation)
    return estimate_speakers(annotation, table, **kwargs)
