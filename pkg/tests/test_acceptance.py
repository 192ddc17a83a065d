"""
Desk-scale acceptance checks: the midpoint inequality over the convex
catalog, the chain relation, the worked instances and float fidelity.
"""

import unittest
from fractions import Fraction

from bernstein_gap.core.function_library import CONVEX_CATALOG, parse_spec, sample
from bernstein_gap.core.gap_engine import chain_holds, gap_coefficients, gap_report_float, identity_lhs
from bernstein_gap.models.scan_config import ScanConfig
from bernstein_gap.services.verifier import GapVerifier

GRID_21 = [Fraction(i, 20) for i in range(21)]


class TestConvexCatalogScans(unittest.TestCase):
    """gap4 >= 0 on a 21x21 grid for every convex catalog entry, n = 1..10"""

    @classmethod
    def setUpClass(cls):
        verifier = GapVerifier()
        cls.results = {
            (text, n): verifier.run_scan(ScanConfig(n=n, function=text, grid=20))
            for text in CONVEX_CATALOG
            for n in range(1, 11)
        }

    def test_midpoint_gap_nonnegative(self):
        """Test min gap4 >= 0 and zero residuals for every scan."""
        for key, result in self.results.items():
            self.assertTrue(result.convex_input, msg=str(key))
            self.assertEqual(result.violations, [], msg=str(key))
            self.assertGreaterEqual(result.min_gap4.value, 0, msg=str(key))

    def test_equality_exactly_on_diagonal(self):
        """Test gap4 vanishes on the diagonal and only there."""
        for key, result in self.results.items():
            for cell in result.cells:
                if cell.x == cell.y:
                    self.assertEqual(cell.gap4, 0, msg=str(key))
                else:
                    self.assertGreater(cell.gap4, 0, msg=f"{key} at ({cell.x}, {cell.y})")

    def test_chain_on_every_cell(self):
        """Test gap1 = gap2 = gap3 + 2 gap4 on every evaluated cell."""
        for key, result in self.results.items():
            for cell in result.cells:
                self.assertEqual(cell.gap1, cell.gap2, msg=str(key))
                self.assertEqual(cell.gap2, cell.gap3 + 2 * cell.gap4, msg=str(key))
                self.assertTrue(chain_holds(cell))

    def test_affine_samples_zero_everywhere(self):
        """Test affine samples give equality on the whole grid."""
        result = GapVerifier().run_scan(ScanConfig(n=4, function="e1", grid=20))
        self.assertEqual(result.equality_cells, result.total_cells)


class TestWorkedInstances(unittest.TestCase):
    """Regression fixtures for the hand-checked cases"""

    def test_n1_square(self):
        """Test (n=1, x=1, y=0, e2)."""
        result = GapVerifier().run_scan(ScanConfig(n=1, function="e2", grid=1))
        cell = next(c for c in result.cells if (c.x, c.y) == (1, 0))
        self.assertEqual((cell.gap4, cell.gap3, cell.gap2), (Fraction(1, 8), Fraction(1, 4), Fraction(1, 2)))

    def test_n2_square(self):
        """Test (n=2, x=1, y=0, e2)."""
        samples = sample(parse_spec("e2"), 4)
        self.assertEqual(identity_lhs(2, samples, 1, 0), Fraction(1, 16))
        self.assertEqual(gap_coefficients(2, 1, 0).c, (Fraction(1, 16), Fraction(3, 8), Fraction(1, 16)))


class TestFloatFidelity(unittest.TestCase):
    """Float-mode gap4 within 1e-10 of the exact value for e2"""

    def test_float_matches_exact(self):
        """Test a spread of n up to 32 on the 21x21 grid."""
        spec = parse_spec("e2")
        for n in (1, 2, 3, 5, 8, 13, 21, 32):
            exact_samples = sample(spec, 2 * n)
            float_samples = sample(spec, 2 * n, exact=False)
            for x in GRID_21:
                for y in GRID_21:
                    exact = identity_lhs(n, exact_samples, x, y)
                    approx = gap_report_float(n, float_samples, x, y).gap4
                    self.assertAlmostEqual(approx, float(exact), delta=1e-10, msg=f"n={n} ({x}, {y})")


if __name__ == '__main__':
    unittest.main()
