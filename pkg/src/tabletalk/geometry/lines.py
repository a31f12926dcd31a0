"""2D line fitting and projective constructions in homogeneous coordinates.

Points are (x, y, w) homogeneous triples; lines are (a, b, c) with
ax + by + c = 0.  Joins and meets are plain cross products, which keeps
points at infinity (vanishing points of image-parallel lines) well defined
without special casing.
"""

from __future__ import annotations

import math

import numpy as np

from .types import NearParallelLines

MIN_INTERSECTION_ANGLE_DEG = 0.5


def hpoint(x, y):
    return np.array([float(x), float(y), 1.0])


def join(p, q):
    """Line through two homogeneous points."""
    return np.cross(p, q)


def meet(l1, l2):
    """Homogeneous intersection point of two lines."""
    return np.cross(l1, l2)


def dehomogenize(p):
    if abs(p[2]) < 1e-12 * max(abs(p[0]), abs(p[1]), 1.0):
        raise NearParallelLines("intersection lies at infinity")
    return np.array([p[0] / p[2], p[1] / p[2]])


def line_angle_deg(l1, l2):
    """Angle between two lines in degrees, in [0, 90]."""
    n1 = np.asarray(l1[:2], dtype=float)
    n2 = np.asarray(l2[:2], dtype=float)
    d1 = np.linalg.norm(n1)
    d2 = np.linalg.norm(n2)
    if d1 < 1e-15 or d2 < 1e-15:
        raise ValueError("degenerate line")
    cosang = abs(float(np.dot(n1, n2)) / (d1 * d2))
    return math.degrees(math.acos(min(1.0, cosang)))


def meet_checked(l1, l2, context=""):
    """Intersection that refuses near-parallel lines instead of extrapolating."""
    angle = line_angle_deg(l1, l2)
    if angle < MIN_INTERSECTION_ANGLE_DEG:
        where = f" ({context})" if context else ""
        raise NearParallelLines(
            f"lines intersect at {angle:.3f} deg{where}; refusing to extrapolate"
        )
    return dehomogenize(meet(l1, l2))


def fit_line_tls(points):
    """Total-least-squares line through >= 2 points.

    Returns (centroid, direction) with a unit direction vector.  For two
    points this is the exact line through them.
    """
    pts = np.asarray(points, dtype=float)
    centroid = pts.mean(axis=0)
    centered = pts - centroid
    # principal direction of the scatter
    _, _, vt = np.linalg.svd(centered, full_matrices=False)
    direction = vt[0]
    norm = np.linalg.norm(direction)
    if norm < 1e-15:
        raise ValueError("cannot fit a line through coincident points")
    return centroid, direction / norm

def line_coeffs(centroid, direction):
    """(a, b, c) homogeneous coefficients of the line through centroid."""
    a, b = -direction[1], direction[0]
    c = -(a * centroid[0] + b * centroid[1])
    return np.array([a, b, c])


def project_to_line(points, centroid, direction):
    """Signed 1D coordinates of points along the line, plus deviations.

    Returns (coords, deviations) where coords[i] is the signed projection
    of point i onto the line direction and deviations[i] the perpendicular
    distance to the line.
    """
    pts = np.asarray(points, dtype=float)
    centered = pts - np.asarray(centroid)
    coords = centered @ np.asarray(direction)
    normal = np.array([-direction[1], direction[0]])
    deviations = np.abs(centered @ normal)
    return coords, deviations


def segment_midpoint_projective(p_end_a, p_end_b, p_far_a, p_far_b):
    """Image of the physical midpoint of edge (p_end_a, p_end_b).

    The four arguments are the corner images of a physical parallelogram,
    ordered so that (p_end_a, p_far_a) and (p_end_b, p_far_b) are the two
    side edges.  The construction intersects the target edge with the line
    through the diagonal intersection and the side-direction vanishing
    point; it is exact under any pinhole projection, including the
    fronto-parallel case where the vanishing point lies at infinity.
    """
    a = hpoint(*p_end_a)
    b = hpoint(*p_end_b)
    fa = hpoint(*p_far_a)
    fb = hpoint(*p_far_b)
    center = meet(join(a, fb), join(b, fa))
    vanishing = meet(join(a, fa), join(b, fb))
    midline = join(center, vanishing)
    return dehomogenize(meet(midline, join(a, b)))


def midpoint_from_vanishing(p, q, vanishing_h):
    """Image of the physical midpoint of segment (p, q).

    vanishing_h is the homogeneous vanishing point of the segment's 3D
    direction; the midpoint image is its harmonic conjugate with respect to
    p and q.  A vanishing point at infinity degrades to the plain pixel
    midpoint (fronto-parallel view).
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    seg = q - p
    length = np.linalg.norm(seg)
    if length < 1e-12:
        raise ValueError("cannot take the midpoint of a zero-length segment")
    direction = seg / length
    v = np.asarray(vanishing_h, dtype=float)
    if abs(v[2]) < 1e-12 * max(abs(v[0]), abs(v[1]), 1.0):
        return (p + q) / 2.0
    t_v = float((v[:2] / v[2] - p) @ direction)
    denom = 2.0 * t_v - length
    if abs(denom) < 1e-12:
        raise NearParallelLines("vanishing point coincides with the segment midpoint")
    t_mid = length * t_v / denom
    return p + t_mid * direction


def homography_from_points(src_xy, dst_xy):
    """3x3 homography mapping four 2D points onto four others (DLT)."""
    src = np.asarray(src_xy, dtype=float)
    dst = np.asarray(dst_xy, dtype=float)
    if src.shape != (4, 2) or dst.shape != (4, 2):
        raise ValueError("need exactly four source and destination points")
    rows = []
    for (x, y), (u, v) in zip(src, dst):
        rows.append([x, y, 1, 0, 0, 0, -u * x, -u * y, -u])
        rows.append([0, 0, 0, x, y, 1, -v * x, -v * y, -v])
    a = np.asarray(rows)
    _, _, vt = np.linalg.svd(a)
    h = vt[-1].reshape(3, 3)
    if abs(h[2, 2]) < 1e-15:
        raise ValueError("degenerate point configuration for homography")
    return h / h[2, 2]


def apply_homography(h, xy):
    p = np.asarray([xy[0], xy[1], 1.0], dtype=float)
    q = h @ p
    if abs(q[2]) < 1e-12:
        raise NearParallelLines("point maps to infinity under the homography")
    return np.array([q[0] / q[2], q[1] / q[2]])


def point_to_segment_distance(point, seg_a, seg_b):
    """Euclidean distance from a point to a finite segment."""
    p = np.asarray(point, dtype=float)
    a = np.asarray(seg_a, dtype=float)
    b = np.asarray(seg_b, dtype=float)
    ab = b - a
    denom = float(ab @ ab)
    if denom < 1e-15:
        return float(np.linalg.norm(p - a))
    t = float((p - a) @ ab) / denom
    t = min(1.0, max(0.0, t))
    return float(np.linalg.norm(p - (a + t * ab)))
