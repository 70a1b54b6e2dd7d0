import inspect
import math
import os
import sys
import unittest

currentdir = os.path.dirname(os.path.abspath(inspect.getfile(inspect.currentframe())))
parentdir = os.path.dirname(currentdir)
parentdir = os.path.dirname(parentdir)
sys.path.insert(0, parentdir)

from carleson.analysis import (F, AdmissibleInterval, IntervalKind, Part,  # noqa: E402
                               admissible_interval, analytic_verdict, below_threshold,
                               bisect, cap_margin, f, f_inv, g, interval_part_ii,
                               interval_part_iii, k, k_literal, quad_interval, quadratic_form,
                               ray_part_i, solve_h0, sweep_csv, sweep_heights, sweep_table)
from carleson.utils.error import (DomainError, RootNotFoundError,  # noqa: E402
                                  UnsupportedPartError)

SQRT3_2 = math.sqrt(3) / 2
H0 = 0.82056


class TestBisect(unittest.TestCase):

    def test_converges_to_tolerance(self):
        root = bisect(lambda x: x * x - 2.0, 1.0, 2.0, tol=1e-12)
        self.assertLessEqual(abs(root.residual), 1e-12)
        self.assertAlmostEqual(root.value, math.sqrt(2.0), places=11)
        self.assertGreater(root.iterations, 0)

    def test_endpoint_root(self):
        root = bisect(lambda x: x - 1.0, 1.0, 2.0)
        self.assertEqual((root.value, root.iterations), (1.0, 0))

    def test_no_sign_change(self):
        with self.assertRaises(RootNotFoundError):
            bisect(lambda x: x * x + 1.0, -1.0, 1.0)

    def test_iteration_cap_is_a_hard_failure(self):
        with self.assertRaises(RootNotFoundError):
            bisect(lambda x: x - 0.3, 0.0, 1.0, tol=1e-15, max_iterations=5)

    def test_unreachable_tolerance(self):
        # a jump has no point with a small residual
        with self.assertRaises(RootNotFoundError):
            bisect(lambda x: -1.0 if x < 0.5 else 1.0, 0.0, 1.0)

    def test_tolerance_must_be_positive(self):
        with self.assertRaises(DomainError):
            bisect(lambda x: x, -1.0, 1.0, tol=0.0)


class TestFunctions(unittest.TestCase):

    def test_f(self):
        self.assertAlmostEqual(f(math.sqrt(2.0)), 0.0, places=14)
        self.assertEqual(f(2.0), -4.0)
        self.assertAlmostEqual(f(1.26704), 0.5, delta=1e-4)
        with self.assertRaises(DomainError):
            f(1.0)

    def test_f_strictly_decreasing(self):
        xs = [1.0 + 2.0 * i / 1000 for i in range(1, 1001)]
        values = [f(x) for x in xs]
        self.assertTrue(all(a > b for a, b in zip(values, values[1:])))

    def test_f_inv_inverts_f(self):
        for i in range(1, 100):
            h = i / 100
            with self.subTest(h=h):
                root = f_inv(h)
                self.assertTrue(1.0 < root.value < math.sqrt(2.0))
                self.assertAlmostEqual(f(root.value), h, delta=1e-10)
                self.assertLessEqual(abs(root.residual), 1e-12)

    def test_f_inv_at_half(self):
        value = f_inv(0.5, 1e-10).value
        self.assertLess(value, 1.27)
        self.assertAlmostEqual(value, 1.26704, delta=1e-4)

    def test_f_inv_limits(self):
        self.assertAlmostEqual(f_inv(1e-9).value, math.sqrt(2.0), places=6)
        self.assertAlmostEqual(f_inv(1.0 - 1e-9).value, 1.0, places=6)

    def test_f_inv_domain(self):
        for h in (0.0, 1.0, 1.5):
            with self.subTest(h=h):
                with self.assertRaises(DomainError):
                    f_inv(h)

    def test_k_values(self):
        self.assertAlmostEqual(k(0.5), 1.035276, delta=1e-5)
        self.assertAlmostEqual(k(0.85), 1.1445, delta=1e-3)
        self.assertLessEqual(k(0.85), 1.15)
        self.assertAlmostEqual(k(SQRT3_2), 2.0 / math.sqrt(3.0), places=12)

    def test_k_increasing_and_above_one(self):
        hs = [SQRT3_2 * i / 2000 for i in range(1, 2000)]
        values = [k(h) for h in hs]
        self.assertTrue(all(a < b for a, b in zip(values, values[1:])))
        for i in range(1, 100):
            with self.subTest(h=i / 100):
                self.assertGreater(k(i / 100), 1.0)

    def test_k_matches_literal_form(self):
        for i in range(10, 100, 5):
            h = i / 100
            with self.subTest(h=h):
                self.assertAlmostEqual(k(h), k_literal(h), delta=1e-12)

    def test_quad_interval(self):
        low, high = quad_interval(0.5)
        self.assertAlmostEqual(low, 1.035276, delta=1e-5)
        self.assertAlmostEqual(high, 3.863703, delta=1e-5)
        for i in range(1, 100):
            h = i / 100
            with self.subTest(h=h):
                low, high = quad_interval(h)
                self.assertAlmostEqual(low, k(h), delta=1e-12)
                self.assertLessEqual(low, high)
                self.assertGreaterEqual(high, 1.0 / h)
                mid = ((low * low) + (high * high)) / 2.0
                self.assertLessEqual(quadratic_form(h, mid), 1e-12)

    def test_F_signs(self):
        self.assertGreater(F(0.82), 0.0)
        self.assertLess(F(0.83), 0.0)
        self.assertGreater(F(0.5), 0.0)
        with self.assertRaises(DomainError):
            F(0.9)

    def test_solve_h0(self):
        root = solve_h0(1e-10)
        self.assertTrue(0.82 < root.value < 0.83)
        self.assertLess(abs(root.value - H0), 5e-5)
        self.assertLessEqual(abs(root.residual), 1e-10)
        self.assertLess(F(root.value + 0.001), 0.0)
        self.assertGreater(F(root.value - 0.001), 0.0)

    def test_g_branches(self):
        for h in (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8):
            with self.subTest(h=h):
                self.assertEqual(g(h), f_inv(h).value)
        for h in (0.83, 0.84, 0.85, 0.86):
            with self.subTest(h=h):
                self.assertEqual(g(h), k(h))

    def test_g_continuous_at_h0(self):
        h0 = solve_h0().value
        self.assertAlmostEqual(f_inv(h0).value, k(h0), delta=1e-6)

    def test_g_domain(self):
        with self.assertRaises(DomainError):
            g(0.9)

    def test_cap_margin_positive(self):
        for i in range(1, 87):
            h = i / 100
            with self.subTest(h=h):
                self.assertGreater(cap_margin(h), 0.0)
                self.assertLess(f_inv(h).value, 1.0 / h)

    def test_below_threshold(self):
        self.assertTrue(below_threshold(0.866))
        self.assertFalse(below_threshold(SQRT3_2))


class TestIntervals(unittest.TestCase):

    def test_part_parse(self):
        self.assertIs(Part.parse('I'), Part.PART_I)
        self.assertIs(Part.parse(' iii '), Part.PART_III)
        with self.assertRaises(UnsupportedPartError):
            Part.parse('iv')

    def test_ray_part_i(self):
        ray = ray_part_i(0.5)
        self.assertIs(ray.kind, IntervalKind.RAY_PART_I)
        self.assertTrue(math.isinf(ray.upper))
        self.assertLess(ray.lower, 1.27)
        self.assertTrue(ray.contains(100.0))
        self.assertAlmostEqual(ray_part_i(0.9).lower, 1.0802, delta=1e-3)

    def test_ray_lower_in_bracket(self):
        for i in range(1, 20):
            h = i / 20
            with self.subTest(h=h):
                self.assertTrue(1.0 < ray_part_i(h).lower < math.sqrt(2.0))

    def test_interval_part_ii(self):
        interval = interval_part_ii(0.85)
        self.assertIs(interval.kind, IntervalKind.INTERVAL_PART_II)
        self.assertTrue(interval.covers(1.15, 1.17))
        self.assertAlmostEqual(interval.upper, 1.0 / 0.85, places=12)
        self.assertTrue(interval_part_ii(0.87).is_empty)

    def test_interval_part_ii_near_threshold(self):
        interval = interval_part_ii(SQRT3_2 - 1e-9)
        self.assertFalse(interval.is_empty)
        self.assertLess(interval.width, 1e-6)

    def test_interval_part_iii_examples(self):
        half = interval_part_iii(0.5)
        self.assertTrue(half.contains(1.27))
        self.assertTrue(half.contains(1.999))
        self.assertEqual(half.upper, 2.0)
        self.assertLess(half.lower, 1.27)
        self.assertAlmostEqual(half.lower, f_inv(0.5).value, delta=1e-10)

        high = interval_part_iii(0.85)
        self.assertTrue(high.covers(1.15, 1.17))
        self.assertAlmostEqual(high.lower, k(0.85), delta=1e-12)

        self.assertTrue(interval_part_iii(0.9).is_empty)

    def test_threshold(self):
        for h in (0.8661, 0.87, 0.9, SQRT3_2):
            with self.subTest(h=h):
                self.assertTrue(interval_part_ii(h).is_empty)
                self.assertTrue(interval_part_iii(h).is_empty)
        for h in (0.86, 0.866):
            with self.subTest(h=h):
                self.assertFalse(interval_part_ii(h).is_empty)
                self.assertFalse(interval_part_iii(h).is_empty)

    def test_endpoint_coherence(self):
        for part in ('i', 'ii', 'iii'):
            for i in range(1, 19):
                h = i / 20
                interval = admissible_interval(part, h)
                if interval.is_empty:
                    continue
                with self.subTest(part=part, h=h):
                    self.assertTrue(analytic_verdict(part, h, interval.lower))
                    if not interval.is_ray:
                        self.assertTrue(analytic_verdict(part, h, interval.midpoint))
                        self.assertFalse(analytic_verdict(part, h, interval.upper + 1e-3))
                    if interval.lower - 1e-3 > 1.0:
                        self.assertFalse(analytic_verdict(part, h, interval.lower - 1e-3))

    def test_analytic_verdict_examples(self):
        self.assertTrue(analytic_verdict('i', 0.5, 1.3))
        self.assertFalse(analytic_verdict('i', 0.5, 1.2))
        self.assertTrue(analytic_verdict('iii', 0.85, 1.16))
        # ch >= 1 leaves no window W(b,ch)
        self.assertFalse(analytic_verdict('ii', 0.5, 2.0))

    def test_analytic_verdict_huge_c(self):
        for c in (1e120, 1e200, 1e308):
            with self.subTest(c=c):
                self.assertTrue(analytic_verdict('i', 0.5, c))
                self.assertFalse(analytic_verdict('ii', 0.5, c))
                self.assertFalse(analytic_verdict('iii', 0.5, c))
        self.assertEqual(f(1e200), -math.inf)

    def test_analytic_verdict_domain(self):
        with self.assertRaises(DomainError):
            analytic_verdict('i', 0.5, 1.0)
        with self.assertRaises(DomainError):
            analytic_verdict('i', 1.0, 1.3)

    def test_interval_invariants(self):
        with self.assertRaises(DomainError):
            AdmissibleInterval(1.5, 1.2, IntervalKind.INTERVAL_PART_II, 0.5)
        with self.assertRaises(DomainError):
            AdmissibleInterval(1.2, 3.0, IntervalKind.RAY_PART_I, 0.5)
        with self.assertRaises(DomainError):
            AdmissibleInterval(1.2, 3.0, IntervalKind.INTERVAL_PART_III, 0.5)
        empty = AdmissibleInterval.empty(0.9)
        self.assertEqual(empty.width, 0.0)
        self.assertFalse(empty.contains(1.1))


class TestSweep(unittest.TestCase):

    def test_heights(self):
        self.assertEqual(len(sweep_heights(0.1, 0.9, 9)), 9)
        with self.assertRaises(DomainError):
            sweep_heights(0.0, 0.5, 3)
        with self.assertRaises(DomainError):
            sweep_heights(0.1, 0.5, 1)

    def test_table(self):
        table = sweep_table(0.5, 0.9, 5)
        self.assertEqual(list(table.columns),
                         ['h', 'f_inv', 'k', 'g', 'lower_iii', 'upper_iii', 'empty'])
        first, last = table.iloc[0], table.iloc[-1]
        self.assertEqual(first['g'], first['f_inv'])
        self.assertEqual(first['upper_iii'], 2.0)
        self.assertEqual(last['empty'], 1)
        self.assertTrue(math.isnan(last['g']))

        high = sweep_table(0.8, 0.85, 2).iloc[-1]
        self.assertEqual(high['g'], high['k'])
        self.assertEqual(high['empty'], 0)

    def test_csv_is_stable(self):
        first = sweep_csv(sweep_table(0.05, 0.95, 19))
        second = sweep_csv(sweep_table(0.05, 0.95, 19))
        self.assertEqual(first, second)
        lines = first.splitlines()
        self.assertEqual(lines[0], 'h,f_inv,k,g,lower_iii,upper_iii,empty')
        self.assertEqual(len(lines), 20)
        # rows past sqrt(3)/2 leave g and the interval blank
        self.assertTrue(lines[-1].endswith(',,,,1'))


if __name__ == '__main__':
    unittest.main()
