"""Domain types for speaker geometry recovery from annotated frames.

Coordinate conventions
----------------------
Image space: x = column, y = row, both in (sub)pixels, origin top-left.
Table space: origin at the table center on the tabletop plane, x along the
table width, y along the table depth, z up.  All table-space values are in
inches.  The microphone sits at the origin.

Point labels follow the annotation layout: the four table corners are
numbered counterclockwise seen from the camera side (1 = near-left,
2 = far-left, 3 = far-right, 4 = near-right), so the edge 1-2 runs along
the depth direction.  Keyboard corners 5-8 use the same rotational order
(5 = near-left, 6 = far-left, 7 = far-right, 8 = near-right); the long
keyboard edge 5-8 is parallel to the width edges of the table.  Monitor
points: 9 and 10 are the monitor-base contact points on the tabletop
(9 = near end, 10 = far end, running along the depth direction), 11 and 12
the screen top corners, 13 the base midpoint (stand center) on the table.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field


TABLE_CORNERS = tuple(f"table_corner_{i}" for i in range(1, 5))
KEYBOARD_POINTS = tuple(f"keyboard_{i}" for i in range(5, 9))
MONITOR_POINTS = tuple(f"monitor_{i}" for i in range(9, 14))

_SPEAKER_LABEL = re.compile(r"^(hand|head)_(\w+)$")

DEFAULT_SPEAKER_OFFSET_IN = 4.0
DEFAULT_MOUTH_HEIGHT_IN = 12.0
DEFAULT_COLLINEARITY_TOL = 0.02
DEPTH_EXTENSION = 1.05


class GeometryError(Exception):
    """Base class for geometry estimation failures."""


class CollinearityViolation(GeometryError):
    """Quad points deviate from a common line beyond tolerance."""


class DegenerateQuad(GeometryError):
    """Two projected quad coordinates coincide."""


class InversionSingularity(GeometryError):
    """Cross-ratio inversion denominator vanishes (point at infinity)."""


class NegativeDistance(GeometryError):
    """Recovered distance is non-positive; points are likely mislabeled."""


class MissingPoints(GeometryError):
    """Required labeled points are absent from the annotation."""

    def __init__(self, labels):
        self.labels = sorted(labels)
        super().__init__("missing annotation points: " + ", ".join(self.labels))


class MissingScale(GeometryError):
    """No pixels-per-inch scale registered for a speaker."""

    def __init__(self, speaker_id):
        self.speaker_id = speaker_id
        super().__init__(f"no pixels-per-inch scale for speaker {speaker_id!r}")


class SpeakerUnassignedEdge(GeometryError):
    """A speaker point cannot be assigned to a unique table edge."""


class SpeakerSetMismatch(GeometryError):
    """Estimated and reference geometries cover different speakers."""


class NearParallelLines(GeometryError):
    """Grid lines are too close to parallel to intersect reliably."""


def parse_speaker_label(label: str):
    """Split a 'hand_S0' / 'head_S0' label into (kind, speaker_id), else None."""
    m = _SPEAKER_LABEL.match(label)
    if m is None:
        return None
    return m.group(1), m.group(2)


@dataclass(frozen=True)
class PixelPoint:
    """A labeled sub-pixel image location.

    Annotated points must lie inside the image (x, y >= 0); points that the
    grid construction derives internally may fall outside it, so the
    non-negativity check lives in the Annotation validator.
    """

    x: float
    y: float
    label: str

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite pixel coordinates for {self.label!r}")

    @property
    def xy(self):
        return (self.x, self.y)


@dataclass
class Annotation:
    """Labeled points of one video frame plus the known physical dimensions.

    keyboard_width_in is the physical length of the long keyboard edge
    (points 5 to 8).  monitor_width_in, when known, is the physical length
    of the monitor base between points 9 and 10; without it the table depth
    falls back to a pixel-scale estimate that is exact only for
    fronto-parallel views.
    """

    frame_id: str
    points: dict[str, PixelPoint]
    keyboard_width_in: float
    scales_ppi: dict[str, float] = field(default_factory=dict)
    speaker_ids: list[str] = field(default_factory=list)
    monitor_width_in: float | None = None

    def __post_init__(self):
        if self.keyboard_width_in <= 0:
            raise ValueError("keyboard_width_in must be > 0")
        if self.monitor_width_in is not None and self.monitor_width_in <= 0:
            raise ValueError("monitor_width_in must be > 0")
        for speaker, scale in self.scales_ppi.items():
            if scale <= 0:
                raise ValueError(f"scale for speaker {speaker!r} must be > 0")
        for label, point in self.points.items():
            if point.label != label:
                raise ValueError(f"point label {point.label!r} filed under {label!r}")
            if point.x < 0 or point.y < 0:
                raise ValueError(f"annotated point {label!r} has negative pixel coordinates")

    def require(self, labels):
        missing = [lab for lab in labels if lab not in self.points]
        if missing:
            raise MissingPoints(missing)
        return [self.points[lab] for lab in labels]

    def get(self, label):
        return self.points.get(label)


@dataclass(frozen=True)
class CollinearQuad:
    """Four image points a,b,c,d along one line with known physical AB, BC.

    The points are the projections of collinear 3D points A, B, C, D in
    that order along the line; ab and bc are the physical distances in
    inches.  CD is the unknown the cross-ratio inversion recovers.
    """

    a: PixelPoint
    b: PixelPoint
    c: PixelPoint
    d: PixelPoint
    ab: float
    bc: float
    collinearity_tol: float = DEFAULT_COLLINEARITY_TOL

    def __post_init__(self):
        if self.ab <= 0 or self.bc <= 0:
            raise ValueError("physical distances ab and bc must be > 0")

    @property
    def pixel_points(self):
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class TableModel:
    """Estimated tabletop rectangle; the microphone sits at its center."""

    width_in: float
    depth_in: float
    depth_extension_applied: bool = False

    def __post_init__(self):
        if self.width_in <= 0 or self.depth_in <= 0:
            raise ValueError("table dimensions must be > 0")

    @property
    def mic(self):
        return (0.0, 0.0, 0.0)


@dataclass
class SpeakerGeometry:
    """3D mouth positions (inches, table frame) and mouth-to-mic distances."""

    table: TableModel
    mouths_in: dict[str, tuple[float, float, float]]
    distances_in: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        recomputed = {
            s: math.sqrt(x * x + y * y + z * z)
            for s, (x, y, z) in self.mouths_in.items()
        }
        if self.distances_in:
            for s, d in self.distances_in.items():
                if abs(d - recomputed[s]) > 1e-9:
                    raise ValueError(f"distance for {s!r} inconsistent with mouth position")
        self.distances_in = recomputed
