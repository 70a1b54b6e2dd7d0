import inspect
import math
import os
import sys
import unittest

import numpy as np

currentdir = os.path.dirname(os.path.abspath(inspect.getfile(inspect.currentframe())))
parentdir = os.path.dirname(currentdir)
parentdir = os.path.dirname(parentdir)
sys.path.insert(0, parentdir)

from carleson.geometry import (BoundaryPoint, CarlesonSet, CarlesonWindow, Height,  # noqa: E402
                               PlanePoint, chord_half_angle, corner_distance_sq, in_set,
                               in_window, landmarks, make_region, power_of_origin,
                               prop1_witness, rotate, second_intersection, set_slack,
                               wedge_distance_sq, window_slack)
from carleson.utils.error import DomainError  # noqa: E402

HEIGHT_GRID = [round(0.05 * i, 2) for i in range(1, 20)]
B = BoundaryPoint.default()


class TestPoints(unittest.TestCase):

    def test_plane_point_rejects_non_finite_coordinates(self):
        for x, y in ((math.nan, 0.0), (0.0, math.inf), (-math.inf, 1.0)):
            with self.subTest(x=x, y=y):
                with self.assertRaises(DomainError):
                    PlanePoint(x, y)

    def test_boundary_point_is_renormalized(self):
        b = BoundaryPoint(PlanePoint(1.0 + 5e-13, 0.0))
        self.assertEqual(b.x, 1.0)
        self.assertEqual(b.y, 0.0)

    def test_boundary_point_off_the_circle(self):
        with self.assertRaises(DomainError):
            BoundaryPoint(PlanePoint(0.9, 0.0))

    def test_height_is_strictly_inside_the_unit_interval(self):
        for value in (0.0, 1.0, -0.2, 1.5):
            with self.subTest(value=value):
                with self.assertRaises(DomainError):
                    Height(value)
        self.assertEqual(float(Height(0.25)), 0.25)

    def test_rotate(self):
        z = rotate(PlanePoint(1.0, 0.0), math.pi / 2)
        self.assertAlmostEqual(z.x, 0.0, places=15)
        self.assertAlmostEqual(z.y, 1.0, places=15)

    def test_domain_error_is_a_value_error(self):
        self.assertTrue(issubclass(DomainError, ValueError))


class TestRegions(unittest.TestCase):

    def setUp(self):
        self.s = CarlesonSet(B, Height(0.5))
        self.w = CarlesonWindow(B, Height(0.5))

    def test_in_set(self):
        self.assertTrue(in_set(self.s, PlanePoint(0.9, 0.0)))
        self.assertFalse(in_set(self.s, PlanePoint(0.4, 0.0)))
        # |z - b| = h is excluded
        self.assertFalse(in_set(self.s, PlanePoint(0.5, 0.0)))

    def test_in_window(self):
        self.assertTrue(in_window(self.w, PlanePoint(0.9, 0.0)))
        self.assertFalse(in_window(self.w, PlanePoint(0.4, 0.0)))
        self.assertFalse(in_window(self.w, PlanePoint(0.0, 0.0)))

    def test_window_angular_bound_is_closed(self):
        theta = chord_half_angle(0.5)
        m = PlanePoint.from_polar(1.0, theta)
        self.assertAlmostEqual(m.distance(B.point), 0.5, delta=1e-12)
        self.assertTrue(in_window(self.w, PlanePoint.from_polar(0.9, theta)))

    def test_window_angular_bound_slack(self):
        for h in HEIGHT_GRID:
            with self.subTest(h=h):
                w = CarlesonWindow(B, Height(h))
                self.assertGreater(w.arc_bound, h)
                self.assertLessEqual(w.arc_bound - h, 4 * math.ulp(h))
                theta = chord_half_angle(h)
                radius = 1.0 - h / 2.0
                self.assertTrue(in_window(w, PlanePoint.from_polar(radius, theta - 1e-9)))
                self.assertFalse(in_window(w, PlanePoint.from_polar(radius, theta + 1e-9)))

    def test_regions_stay_in_the_open_disk(self):
        self.assertFalse(in_set(self.s, PlanePoint(1.0, 0.0)))
        self.assertFalse(in_window(self.w, PlanePoint(1.0, 0.0)))

    def test_slack_signs(self):
        self.assertAlmostEqual(set_slack(self.s, PlanePoint(0.9, 0.0)), 0.1, places=12)
        self.assertAlmostEqual(set_slack(self.s, PlanePoint(0.4, 0.0)), -0.1, places=12)
        self.assertAlmostEqual(window_slack(self.w, PlanePoint(0.8, 0.0)), 0.2, places=12)
        self.assertAlmostEqual(window_slack(self.w, PlanePoint(0.0, 0.0)), -0.5, places=12)

    def test_vectorized_predicates_match_scalar_ones(self):
        rng = np.random.default_rng(7)
        xy = rng.uniform(-1.0, 1.0, size=(500, 2))
        for region in (self.s, self.w):
            with self.subTest(region=region.describe()):
                points = [PlanePoint(x, y) for x, y in xy]
                self.assertEqual(list(region.contains_array(xy)),
                                 [region.contains(z) for z in points])
                np.testing.assert_allclose(region.slack_array(xy),
                                           [region.slack(z) for z in points], atol=1e-15)

    def test_make_region(self):
        self.assertIsInstance(make_region('S', B, 0.3), CarlesonSet)
        self.assertIsInstance(make_region('W', B, Height(0.3)), CarlesonWindow)
        with self.assertRaises(DomainError):
            make_region('T', B, 0.3)

    def test_rotation_equivariance(self):
        rng = np.random.default_rng(2024)
        checked = 0
        for _ in range(2000):
            alpha = rng.uniform(-math.pi, math.pi)
            h = rng.uniform(0.05, 0.95)
            z = PlanePoint.from_polar(rng.uniform(0.0, 1.05), rng.uniform(-math.pi, math.pi))
            rotated_base = BoundaryPoint(rotate(B.point, alpha))
            for symbol in ('S', 'W'):
                region = make_region(symbol, B, h)
                if abs(region.slack(z)) < 1e-9:
                    continue
                checked += 1
                self.assertEqual(region.contains(z),
                                 make_region(symbol, rotated_base, h).contains(rotate(z, alpha)))
        self.assertGreater(checked, 3000)


class TestLandmarks(unittest.TestCase):

    def test_chord_half_angle(self):
        theta = chord_half_angle(0.6)
        self.assertAlmostEqual(theta, 2.0 * math.asin(0.3), delta=1e-14)
        self.assertAlmostEqual(theta, 0.6093853, places=7)
        self.assertAlmostEqual(2.0 - 2.0 * math.cos(theta), 0.36, delta=1e-12)

    def test_chord_half_angle_range(self):
        for h in HEIGHT_GRID:
            with self.subTest(h=h):
                theta = chord_half_angle(h)
                self.assertTrue(0.0 < theta < math.pi / 3)
                self.assertAlmostEqual(2.0 - 2.0 * math.cos(theta), h * h, delta=1e-14)

    def test_landmark_invariants(self):
        for h in HEIGHT_GRID:
            with self.subTest(h=h):
                marks = landmarks(B, h)
                self.assertAlmostEqual(marks.M.modulus, 1.0, delta=1e-12)
                self.assertAlmostEqual(marks.N.modulus, 1.0, delta=1e-12)
                self.assertAlmostEqual(marks.P.modulus, 1.0 - h, delta=1e-12)
                self.assertAlmostEqual(marks.Q.modulus, 1.0 - h, delta=1e-12)
                self.assertAlmostEqual(marks.Mprime.modulus, 1.0 - h * h, delta=1e-12)
                self.assertAlmostEqual(marks.M.distance(B.point), h, delta=1e-12)
                self.assertAlmostEqual(marks.N.distance(B.point), h, delta=1e-12)

    def test_mprime_for_h_06(self):
        self.assertAlmostEqual(landmarks(B, 0.6).Mprime.modulus, 0.64, delta=1e-12)

    def test_n_mirrors_m(self):
        marks = landmarks(B, 0.35)
        self.assertAlmostEqual(marks.N.x, marks.M.x, places=15)
        self.assertAlmostEqual(marks.N.y, -marks.M.y, places=15)

    def test_landmarks_rotate_with_the_base(self):
        marks = landmarks(B, 0.5)
        rotated = landmarks(BoundaryPoint(PlanePoint(0.0, 1.0)), 0.5)
        for name in ('M', 'N', 'P', 'Q', 'Mprime'):
            with self.subTest(name=name):
                expected = rotate(getattr(marks, name), math.pi / 2)
                self.assertAlmostEqual(getattr(rotated, name).x, expected.x, delta=1e-12)
                self.assertAlmostEqual(getattr(rotated, name).y, expected.y, delta=1e-12)

    def test_power_of_origin_locates_mprime(self):
        for h in HEIGHT_GRID:
            with self.subTest(h=h):
                self.assertGreater(power_of_origin(h), 0.0)
                second = second_intersection(B, h)
                mprime = landmarks(B, h).Mprime
                self.assertAlmostEqual(second.x, mprime.x, delta=1e-10)
                self.assertAlmostEqual(second.y, mprime.y, delta=1e-10)

    def test_corner_distance_sq(self):
        self.assertAlmostEqual(corner_distance_sq(0.5), 0.375, places=15)
        p = landmarks(B, 0.3).P
        self.assertAlmostEqual(p.distance(B.point) ** 2, 0.153, delta=1e-12)

    def test_corner_identity_on_grid(self):
        for r in HEIGHT_GRID:
            with self.subTest(r=r):
                p = landmarks(B, r).P
                self.assertAlmostEqual(corner_distance_sq(r), p.distance(B.point) ** 2,
                                       delta=1e-12)

    def test_wedge_distance_sq(self):
        self.assertAlmostEqual(wedge_distance_sq(0.5), 0.234375, places=15)
        for s in HEIGHT_GRID:
            with self.subTest(s=s):
                self.assertAlmostEqual(wedge_distance_sq(s), math.sin(chord_half_angle(s)) ** 2,
                                       delta=1e-12)

    def test_distance_identities_reject_out_of_range(self):
        for value in (0.0, 1.0, 1.2):
            with self.subTest(value=value):
                with self.assertRaises(DomainError):
                    corner_distance_sq(value)
                with self.assertRaises(DomainError):
                    wedge_distance_sq(value)


class TestWitness(unittest.TestCase):

    def test_witness_for_h_06(self):
        w = prop1_witness(B, Height(0.6))
        self.assertAlmostEqual(w.argument, 0.6264432, places=7)
        self.assertTrue(in_set(CarlesonSet(B, Height(0.6)), w))
        self.assertFalse(in_window(CarlesonWindow(B, Height(0.6)), w))

    def test_witness_sweep(self):
        bases = [B, BoundaryPoint(PlanePoint(0.0, 1.0)), BoundaryPoint.from_angle(2.5)]
        for base in bases:
            for h in HEIGHT_GRID:
                with self.subTest(base=base.angle, h=h):
                    w = prop1_witness(base, h)
                    self.assertTrue(in_set(CarlesonSet(base, Height(h)), w))
                    self.assertFalse(in_window(CarlesonWindow(base, Height(h)), w))


if __name__ == '__main__':
    unittest.main()
