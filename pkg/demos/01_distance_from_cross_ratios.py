"""Recovering a physical distance from four pixels.

Four collinear 3D points A, B, C, D are photographed by a perspective
camera.  Knowing only the physical AB and BC plus the four pixel
positions, the cross-ratio inversion recovers CD -- no camera calibration
involved.  This script fabricates the scene, projects it, and compares the
recovered distance against the ground truth.
"""

import numpy as np

from tabletalk.geometry import CollinearQuad, PixelPoint, cross_ratio, estimate_cd


def project(points3d, camera_pos, focal=1200.0):
    """Minimal pinhole: camera at camera_pos looking at the origin."""
    forward = -np.asarray(camera_pos) / np.linalg.norm(camera_pos)
    right = np.cross(forward, [0.0, 0.0, 1.0])
    right /= np.linalg.norm(right)
    down = np.cross(forward, right)
    rotation = np.vstack([right, down, forward])
    cam = (points3d - camera_pos) @ rotation.T
    return focal * cam[:, :2] / cam[:, 2:3] + 960.0


def main():
    ab, bc, cd_true = 12.0, 6.0, 9.5
    direction = np.array([0.83, 0.42, 0.11])
    direction /= np.linalg.norm(direction)
    arcs = np.array([0.0, ab, ab + bc, ab + bc + cd_true])
    points3d = np.array([-5.0, 2.0, 0.0]) + arcs[:, None] * direction

    pixels = project(points3d, camera_pos=np.array([40.0, -70.0, 55.0]))
    quad = CollinearQuad(
        *[PixelPoint(u, v, name) for (u, v), name in zip(pixels, "abcd")],
        ab=ab, bc=bc,
    )

    print(f"pixel quad: {[tuple(round(float(c), 1) for c in p) for p in pixels]}")
    print(f"cross-ratio R = {cross_ratio(quad):.6f}")
    print(f"recovered CD  = {estimate_cd(quad):.6f} in (truth {cd_true})")


if __name__ == "__main__":
    main()
