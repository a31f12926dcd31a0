"""Cross-ratio of four collinear image points and the distance inversion.

For collinear physical points A, B, C, D with known AB and BC, the
cross-ratio

    R = (AC * BD) / (BC * AD)

is invariant under pinhole projection, so it can be measured from pixels.
Substituting AC = AB + BC, BD = BC + CD, AD = AB + BC + CD and solving for
the unknown physical distance CD gives

    CD = BC * (AB + BC) * (1 - R) / (R * BC - AB - BC)
"""

from __future__ import annotations

from .lines import fit_line_tls, project_to_line
from .types import (
    CollinearityViolation,
    CollinearQuad,
    DegenerateQuad,
    InversionSingularity,
    NegativeDistance,
)

COINCIDENCE_TOL_PX = 1e-9
INVERSION_TOL = 1e-12


def quad_line_coords(quad: CollinearQuad):
    """Signed 1D coordinates of the quad's points on their best-fit line.

    Fits a total-least-squares line through the four pixel points, checks
    the collinearity tolerance, and rejects coincident projections.
    """
    pts = [p.xy for p in quad.pixel_points]
    centroid, direction = fit_line_tls(pts)
    coords, deviations = project_to_line(pts, centroid, direction)
    length = float(coords.max() - coords.min())
    if length < COINCIDENCE_TOL_PX:
        raise DegenerateQuad("quad points span a zero-length segment")
    worst = float(deviations.max())
    if worst > quad.collinearity_tol * length:
        raise CollinearityViolation(
            f"max perpendicular deviation {worst:.3g}px exceeds "
            f"{quad.collinearity_tol:g} x line length {length:.3g}px"
        )
    for i in range(4):
        for j in range(i + 1, 4):
            if abs(coords[i] - coords[j]) < COINCIDENCE_TOL_PX:
                labels = quad.pixel_points[i].label, quad.pixel_points[j].label
                raise DegenerateQuad(f"projected points {labels[0]!r} and {labels[1]!r} coincide")
    return coords


def cross_ratio(quad: CollinearQuad) -> float:
    """Cross-ratio R = (AC * BD) / (BC * AD) from projected pixel coordinates."""
    a, b, c, d = quad_line_coords(quad)
    return float(((c - a) * (d - b)) / ((c - b) * (d - a)))


def estimate_cd(quad: CollinearQuad) -> float:
    """Physical distance CD in inches recovered from the quad's cross-ratio.

    Raises InversionSingularity when R approaches (ab + bc) / bc, which maps
    D to infinity, and NegativeDistance when the recovered CD is not
    positive (a sign of mislabeled point order).
    """
    r = cross_ratio(quad)
    ab, bc = quad.ab, quad.bc
    denom = r * bc - ab - bc
    if abs(denom) < INVERSION_TOL:
        raise InversionSingularity(f"cross-ratio {r:.12g} puts D at infinity")
    cd = bc * (ab + bc) * (1.0 - r) / denom
    if cd <= 0:
        raise NegativeDistance(
            f"recovered CD = {cd:.6g} in; check the labeled point order"
        )
    return cd
