import math

import numpy as np
import pytest

from pinhole import PinholeCamera, random_camera, random_collinear_quad_3d

from tabletalk.geometry import (
    CollinearQuad,
    CollinearityViolation,
    DegenerateQuad,
    InversionSingularity,
    NegativeDistance,
    PixelPoint,
    cross_ratio,
    estimate_cd,
)


def quad_from_1d(coords, ab=1.0, bc=1.0):
    pts = [PixelPoint(float(c), 0.0, name) for c, name in zip(coords, "abcd")]
    return CollinearQuad(*pts, ab=ab, bc=bc)


def quad_from_pixels(pixels, ab, bc, tol=0.02):
    pts = [PixelPoint(float(u), float(v), name) for (u, v), name in zip(pixels, "abcd")]
    return CollinearQuad(*pts, ab=ab, bc=bc, collinearity_tol=tol)


class TestCrossRatio:
    def test_equally_spaced_points(self):
        # AC*BD / (BC*AD) = (2*2)/(1*3)
        assert cross_ratio(quad_from_1d([0, 1, 2, 3])) == pytest.approx(4.0 / 3.0)

    def test_coincident_points_rejected(self):
        with pytest.raises(DegenerateQuad):
            cross_ratio(quad_from_1d([0, 1, 2, 2]))

    def test_non_collinear_rejected(self):
        pts = [(0, 0), (10, 5), (20, 0), (30, 0)]
        with pytest.raises(CollinearityViolation):
            cross_ratio(quad_from_pixels(pts, ab=1.0, bc=1.0))

    def test_projective_invariance_single_projection(self):
        rng = np.random.default_rng(7)
        points3d = random_collinear_quad_3d(rng, ab=1.0, bc=1.0, cd=1.0)
        camera = PinholeCamera((80.0, -60.0, 90.0), (0.0, 0.0, 0.0))
        pixels = camera.project(points3d)
        r = cross_ratio(quad_from_pixels(pixels, ab=1.0, bc=1.0))
        assert abs(r - 4.0 / 3.0) < 1e-9

    def test_similarity_invariance(self):
        rng = np.random.default_rng(3)
        camera = PinholeCamera((50.0, -90.0, 70.0), (0.0, 0.0, 0.0))
        points3d = random_collinear_quad_3d(rng, ab=10.0, bc=5.0, cd=7.0)
        pixels = camera.project(points3d)
        base = cross_ratio(quad_from_pixels(pixels, ab=10.0, bc=5.0))
        for k in (0.25, 3.0, 117.0):
            scaled = cross_ratio(quad_from_pixels(pixels * k, ab=10.0, bc=5.0))
            assert abs(scaled - base) < 1e-9

    def test_line_direction_sign_irrelevant(self):
        a = cross_ratio(quad_from_1d([0, 1, 2, 3]))
        b = cross_ratio(quad_from_1d([3, 2, 1, 0][::-1]))
        assert a == pytest.approx(b)


class TestEstimateCd:
    def test_closed_form_unit_spacing(self):
        # R = 4/3 with ab = bc = 1 must invert to CD = 1
        quad = quad_from_1d([0, 1, 2, 3])
        assert estimate_cd(quad) == pytest.approx(1.0, abs=1e-12)

    def test_r_of_one_means_d_at_c(self):
        # R = 1 corresponds to CD = 0, which is not a distance
        with pytest.raises((NegativeDistance, DegenerateQuad)):
            # build coords that give R exactly 1: d == c is degenerate, so
            # check algebraically through a nearly-coincident layout instead
            estimate_cd(quad_from_1d([0.0, 1.0, 2.0, 2.0 + 1e-12]))

    def test_inversion_singularity(self):
        # R -> (ab+bc)/bc puts D at infinity; with ab=bc=1 that is R=2,
        # i.e. d at the harmonic position
        # coords a=0,b=1,c=2: R(d) = (2*(d-1))/(1*d) = 2 - 2/d -> 2 as d -> inf
        # pick d so that R*bc - ab - bc == 0 within 1e-12
        with pytest.raises(InversionSingularity):
            estimate_cd(quad_from_1d([0.0, 1.0, 2.0, 2e13]))

    def test_pinhole_recovery_fixed_pose(self):
        rng = np.random.default_rng(11)
        points3d = random_collinear_quad_3d(rng, ab=10.0, bc=5.0, cd=7.0)
        camera = PinholeCamera((70.0, -80.0, 60.0), (0.0, 0.0, 0.0), focal_px=900.0)
        pixels = camera.project(points3d)
        cd = estimate_cd(quad_from_pixels(pixels, ab=10.0, bc=5.0))
        assert abs(cd - 7.0) < 1e-6

    def test_pinhole_recovery_randomized_poses(self):
        # round-trip property over many random poses and spacings
        rng = np.random.default_rng(2024)
        recovered = 0
        attempts = 0
        while recovered < 300 and attempts < 5000:
            attempts += 1
            ab = rng.uniform(2.0, 20.0)
            bc = rng.uniform(2.0, 20.0)
            cd = rng.uniform(1.0, 30.0)
            points3d = random_collinear_quad_3d(rng, ab, bc, cd)
            camera = random_camera(rng, points3d.mean(axis=0))
            try:
                pixels = camera.project(points3d)
            except ValueError:
                continue
            if np.abs(pixels).max() > 1e5:
                continue
            try:
                got = estimate_cd(quad_from_pixels(pixels, ab=ab, bc=bc))
            except (DegenerateQuad, InversionSingularity, CollinearityViolation):
                continue
            assert abs(got - cd) < 1e-6, (ab, bc, cd, got)
            recovered += 1
        assert recovered == 300

    def test_negative_distance_flags_mislabeled_order(self):
        # swapping C and D breaks the forward order and must be reported
        with pytest.raises(NegativeDistance):
            estimate_cd(quad_from_1d([0.0, 1.0, 3.0, 2.0]))
