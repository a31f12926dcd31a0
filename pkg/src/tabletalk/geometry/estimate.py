"""Table grid construction, speaker placement, and the equidistant baseline.

The table estimate builds the 2D grid from two line families parallel to
the table edges.  The width family runs along the keyboard's long edge
(points 5-8, known physical width); the depth family runs along the
monitor base (points 9-10) when its physical width is known.  Each family
yields collinear quads whose cross-ratios recover the gaps between the
known segment and the table edges.  Without monitor metric data the depth
falls back to the keyboard pixel scale, which is exact only when the image
plane is parallel to the tabletop.
"""

from __future__ import annotations

import math

import numpy as np

from .cross_ratio import cross_ratio, estimate_cd
from .lines import (
    apply_homography,
    homography_from_points,
    hpoint,
    join,
    meet,
    meet_checked,
    midpoint_from_vanishing,
    point_to_segment_distance,
    segment_midpoint_projective,
)
from .types import (
    Annotation,
    CollinearQuad,
    DEFAULT_MOUTH_HEIGHT_IN,
    DEFAULT_SPEAKER_OFFSET_IN,
    DEPTH_EXTENSION,
    GeometryError,
    KEYBOARD_POINTS,
    MissingPoints,
    MissingScale,
    MONITOR_POINTS,
    PixelPoint,
    SpeakerGeometry,
    SpeakerSetMismatch,
    SpeakerUnassignedEdge,
    TABLE_CORNERS,
    TableModel,
)

EDGE_TIE_TOL_PX = 1e-9


def _named_cd(quad: CollinearQuad, line_name: str, diagnostics: dict) -> float:
    """estimate_cd with the offending grid line named on failure."""
    try:
        diagnostics["cross_ratios"][line_name] = cross_ratio(quad)
        return estimate_cd(quad)
    except GeometryError as exc:
        raise type(exc)(f"{line_name}: {exc}") from exc


def _derived(xy, label: str) -> PixelPoint:
    return PixelPoint(float(xy[0]), float(xy[1]), label)


def _line_entry(p_from, p_to):
    return {"from": [float(p_from[0]), float(p_from[1])],
            "to": [float(p_to[0]), float(p_to[1])]}


def estimate_table_detailed(annotation: Annotation):
    """Estimate the table rectangle; returns (TableModel, diagnostics).

    Diagnostics carry the fitted grid lines, intermediate cross-ratios and
    warnings so an interactive client can overlay them.
    """
    corners = annotation.require(TABLE_CORNERS)
    keyboard = annotation.require(KEYBOARD_POINTS)
    c1, c2, c3, c4 = corners
    p5, p6, p7, p8 = keyboard

    diagnostics = {"lines": {}, "cross_ratios": {}, "warnings": [],
                   "depth_method": None}
    diagnostics["lines"]["table_edge_left"] = _line_entry(c1.xy, c2.xy)
    diagnostics["lines"]["table_edge_right"] = _line_entry(c4.xy, c3.xy)
    diagnostics["lines"]["table_edge_near"] = _line_entry(c1.xy, c4.xy)
    diagnostics["lines"]["table_edge_far"] = _line_entry(c2.xy, c3.xy)

    h1, h2, h3, h4 = (hpoint(*p.xy) for p in corners)
    edge_left = join(h1, h2)
    edge_right = join(h4, h3)
    edge_near = join(h1, h4)
    edge_far = join(h2, h3)

    # --- width: keyboard long edge 5-8, physical length known ---
    kb_half = annotation.keyboard_width_in / 2.0
    kb_mid_xy = segment_midpoint_projective(p5.xy, p8.xy, p6.xy, p7.xy)
    kb_mid = _derived(kb_mid_xy, "keyboard_mid")
    kb_line = join(hpoint(*p5.xy), hpoint(*p8.xy))
    d_right = _derived(
        meet_checked(kb_line, edge_right, "keyboard line vs right table edge"),
        "keyboard_line_x_right_edge",
    )
    d_left = _derived(
        meet_checked(kb_line, edge_left, "keyboard line vs left table edge"),
        "keyboard_line_x_left_edge",
    )
    diagnostics["lines"]["keyboard_line"] = _line_entry(d_left.xy, d_right.xy)

    gap_right = _named_cd(
        CollinearQuad(p5, kb_mid, p8, d_right, ab=kb_half, bc=kb_half),
        "keyboard_to_right_edge", diagnostics)
    gap_left = _named_cd(
        CollinearQuad(p8, kb_mid, p5, d_left, ab=kb_half, bc=kb_half),
        "keyboard_to_left_edge", diagnostics)
    width = gap_left + annotation.keyboard_width_in + gap_right

    # --- depth: monitor base 9-10 when its physical width is known ---
    p9 = annotation.get(MONITOR_POINTS[0])
    p10 = annotation.get(MONITOR_POINTS[1])
    p13 = annotation.get(MONITOR_POINTS[4])
    if annotation.monitor_width_in is not None and p9 is not None and p10 is not None:
        mon_half = annotation.monitor_width_in / 2.0
        if p13 is not None:
            mon_mid = p13
        else:
            depth_vp = meet(edge_left, edge_right)
            mon_mid = _derived(
                midpoint_from_vanishing(p9.xy, p10.xy, depth_vp), "monitor_mid")
        mon_line = join(hpoint(*p9.xy), hpoint(*p10.xy))
        d_far = _derived(
            meet_checked(mon_line, edge_far, "monitor line vs far table edge"),
            "monitor_line_x_far_edge",
        )
        d_near = _derived(
            meet_checked(mon_line, edge_near, "monitor line vs near table edge"),
            "monitor_line_x_near_edge",
        )
        diagnostics["lines"]["monitor_line"] = _line_entry(d_near.xy, d_far.xy)
        gap_far = _named_cd(
            CollinearQuad(p9, mon_mid, p10, d_far, ab=mon_half, bc=mon_half),
            "monitor_to_far_edge", diagnostics)
        gap_near = _named_cd(
            CollinearQuad(p10, mon_mid, p9, d_near, ab=mon_half, bc=mon_half),
            "monitor_to_near_edge", diagnostics)
        depth = gap_near + annotation.monitor_width_in + gap_far
        diagnostics["depth_method"] = "cross_ratio"
    else:
        # pixel-scale fallback: exact only for a fronto-parallel camera
        ppi = math.dist(p5.xy, p8.xy) / annotation.keyboard_width_in
        depth_px = 0.5 * (math.dist(c1.xy, c2.xy) + math.dist(c4.xy, c3.xy))
        depth = depth_px / ppi
        diagnostics["depth_method"] = "pixel_scale"
        diagnostics["warnings"].append(
            "table depth estimated from the keyboard pixel scale (no monitor "
            "base with known width); exact only for fronto-parallel views"
        )

    table = TableModel(
        width_in=width,
        depth_in=depth * DEPTH_EXTENSION,
        depth_extension_applied=True,
    )
    return table, diagnostics


def estimate_table(annotation: Annotation) -> TableModel:
    """Table width/depth in inches from the annotated frame."""
    table, _ = estimate_table_detailed(annotation)
    return table


# image-edge key -> (corner pair, axis, sign); axis 0 places the speaker on
# a depth edge (fixed x), axis 1 on a width edge (fixed y)
_EDGES = {
    "near": ((0, 3), 1, -1.0),
    "far": ((1, 2), 1, +1.0),
    "left": ((0, 1), 0, -1.0),
    "right": ((3, 2), 0, +1.0),
}


def _assign_edge(anchor: PixelPoint, corners, speaker_id: str) -> str:
    dists = {
        name: point_to_segment_distance(anchor.xy, corners[i].xy, corners[j].xy)
        for name, ((i, j), _, _) in _EDGES.items()
    }
    ordered = sorted(dists.items(), key=lambda kv: kv[1])
    if ordered[1][1] - ordered[0][1] < EDGE_TIE_TOL_PX:
        raise SpeakerUnassignedEdge(
            f"speaker {speaker_id!r} is equidistant from edges "
            f"{ordered[0][0]} and {ordered[1][0]}"
        )
    return ordered[0][0]


def _vertical_offset_px(point: PixelPoint, ea, eb) -> float:
    """Pixel distance from the edge line up to the point.

    Measured vertically (image rows) when the edge is more horizontal than
    vertical, perpendicular otherwise.  Positive means above the edge.
    """
    ax, ay = ea.xy
    bx, by = eb.xy
    dx, dy = bx - ax, by - ay
    if abs(dx) >= abs(dy):
        y_on_edge = ay + dy * (point.x - ax) / dx
        return y_on_edge - point.y
    norm = math.hypot(dx, dy)
    return abs((point.x - ax) * dy - (point.y - ay) * dx) / norm


def estimate_speakers(
    annotation: Annotation,
    table: TableModel,
    speaker_offset_in: float = DEFAULT_SPEAKER_OFFSET_IN,
    default_mouth_height_in: float = DEFAULT_MOUTH_HEIGHT_IN,
) -> SpeakerGeometry:
    """Place each speaker's mouth on the vertical plane 4 in off their edge.

    Hands rest on the tabletop plane, so when a hand point exists the
    lateral position comes from mapping it through the table homography
    (image corners onto the physical rectangle), which needs no scale.
    Without a hand the head point's pixel offset along the edge is
    converted through the speaker's pixels-per-inch scale instead.  Mouth
    height is the head point's vertical pixel offset above the hand (the
    two share the speaker plane) or above the edge line, over the same
    scale; with no head point the default height applies.
    """
    corners = annotation.require(TABLE_CORNERS)
    half = {0: table.width_in / 2.0, 1: table.depth_in / 2.0}
    table_rect = [(-half[0], -half[1]), (-half[0], +half[1]),
                  (+half[0], +half[1]), (+half[0], -half[1])]
    to_table = homography_from_points([c.xy for c in corners], table_rect)
    mouths: dict[str, tuple[float, float, float]] = {}

    for speaker in annotation.speaker_ids:
        head = annotation.get(f"head_{speaker}")
        hand = annotation.get(f"hand_{speaker}")
        anchor = hand if hand is not None else head
        if anchor is None:
            raise MissingPoints([f"head_{speaker}", f"hand_{speaker}"])
        if speaker not in annotation.scales_ppi:
            raise MissingScale(speaker)
        scale = annotation.scales_ppi[speaker]

        edge = _assign_edge(anchor, corners, speaker)
        (i, j), axis, sign = _EDGES[edge]
        ea, eb = corners[i], corners[j]

        if hand is not None:
            on_table = apply_homography(to_table, hand.xy)
            lateral_in = float(on_table[1 - axis])
        else:
            # pixel offset from the edge midpoint, along the edge direction
            mid = np.array([(ea.x + eb.x) / 2.0, (ea.y + eb.y) / 2.0])
            direction = np.array([eb.x - ea.x, eb.y - ea.y])
            direction = direction / np.linalg.norm(direction)
            lateral_in = float((np.array(anchor.xy) - mid) @ direction) / scale

        if head is not None:
            if hand is not None:
                # head and hand share the speaker plane, so their image
                # offset measures height without edge parallax
                height_px = hand.y - head.y
            else:
                height_px = _vertical_offset_px(head, ea, eb)
            height_in = max(0.0, height_px) / scale
        else:
            height_in = default_mouth_height_in

        normal_coord = sign * (half[axis] + speaker_offset_in)
        if axis == 0:
            mouth = (normal_coord, lateral_in, height_in)
        else:
            mouth = (lateral_in, normal_coord, height_in)
        mouths[speaker] = mouth

    return SpeakerGeometry(table=table, mouths_in=mouths)


def baseline_geometry(
    table: TableModel,
    n_speakers: int,
    mouth_height_in: float = DEFAULT_MOUTH_HEIGHT_IN,
    speaker_offset_in: float = DEFAULT_SPEAKER_OFFSET_IN,
) -> SpeakerGeometry:
    """Equidistant baseline: speakers evenly spaced around the table rim.

    Walks the rectangle offset outward by the speaker offset, starting at
    the midpoint of the near edge and moving toward corner 4, placing the
    n speakers at equal arc-length steps.  Purely deterministic.
    """
    if n_speakers < 1:
        raise ValueError("n_speakers must be >= 1")
    hx = table.width_in / 2.0 + speaker_offset_in
    hy = table.depth_in / 2.0 + speaker_offset_in
    path = [
        (0.0, -hy), (hx, -hy), (hx, hy), (-hx, hy), (-hx, -hy), (0.0, -hy),
    ]
    seg_lengths = [
        math.dist(path[k], path[k + 1]) for k in range(len(path) - 1)
    ]
    perimeter = sum(seg_lengths)

    def walk(arc: float):
        remaining = arc
        for (p, q), seg_len in zip(zip(path, path[1:]), seg_lengths):
            if remaining <= seg_len:
                t = remaining / seg_len
                return (p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1]))
            remaining -= seg_len
        return path[-1]

    mouths = {
        f"S{k}": (*walk(perimeter * k / n_speakers), mouth_height_in)
        for k in range(n_speakers)
    }
    return SpeakerGeometry(table=table, mouths_in=mouths)


def geometry_error(estimated, truth_in: dict[str, float]):
    """Per-speaker absolute error as a percentage of the true distance.

    estimated may be a SpeakerGeometry or a plain speaker -> inches mapping.
    Returns (per_speaker_percent, mean_percent).
    """
    distances = getattr(estimated, "distances_in", estimated)
    if set(distances) != set(truth_in):
        raise SpeakerSetMismatch(
            f"estimated speakers {sorted(distances)} vs truth {sorted(truth_in)}"
        )
    errors = {
        s: abs(distances[s] - truth_in[s]) / truth_in[s] * 100.0
        for s in distances
    }
    mean = sum(errors.values()) / len(errors)
    return errors, mean
