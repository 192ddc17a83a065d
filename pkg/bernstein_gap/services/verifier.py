import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from fractions import Fraction
from typing import Dict, List

from ..config import settings
from ..core.bernstein_ops import SampleVector
from ..core.function_library import is_affine_samples, is_convex_samples, sample
from ..core.gap_engine import (
    GapCoefficients,
    chain_holds,
    gap_coefficients,
    gap_report,
    gap_report_float,
    identity_lhs,
    identity_rhs,
)
from ..models.report import GapReport, IdentityFailure, IdentityTrialResult, MinimumGap, ScanResult
from ..models.scan_config import ScanConfig
from ..utils.helpers import format_fraction

logger = logging.getLogger(__name__)


class GapVerifier:
    """
    Runs the verification workflows: randomized identity trials, coefficient
    listings and (x, y) grid scans.
    """

    def __init__(self,
                 sample_bound: int = settings.IDENTITY_SAMPLE_BOUND,
                 denominator_max: int = settings.IDENTITY_DENOMINATOR_MAX,
                 float_tolerance: float = settings.FLOAT_TOLERANCE):
        """
        Args:
            sample_bound: random samples are drawn from [-sample_bound, sample_bound]
            denominator_max: largest denominator of random x, y
            float_tolerance: absolute tolerance for float-mode checks
        """
        self.sample_bound = sample_bound
        self.denominator_max = denominator_max
        self.float_tolerance = float_tolerance

    def _random_point(self, rng: random.Random) -> Fraction:
        denominator = rng.randint(1, self.denominator_max)
        return Fraction(rng.randint(0, denominator), denominator)

    def run_identity_trials(self, n: int, trials: int, seed: int) -> IdentityTrialResult:
        """
        Check the midpoint identity on random (x, y, integer samples) cases.

        A single seeded generator drives every draw, so any failure is
        reproducible from (n, trials, seed).
        """
        if n < 1 or trials < 1:
            raise ValueError(f"n and trials must be positive, got n={n}, trials={trials}")
        if seed < 0:
            raise ValueError(f"seed must be nonnegative, got {seed}")
        rng = random.Random(seed)
        result = IdentityTrialResult(n=n, trials=trials, seed=seed)

        for trial in range(trials):
            x = self._random_point(rng)
            y = self._random_point(rng)
            samples = [rng.randint(-self.sample_bound, self.sample_bound) for _ in range(2 * n + 1)]

            residual = identity_lhs(n, samples, x, y) - identity_rhs(gap_coefficients(n, x, y), samples)
            if residual == 0:
                result.passed += 1
            else:
                logger.error(f"identity residual {residual} at trial {trial}: x={x}, y={y}, samples={samples}")
                if result.first_failure is None:
                    result.first_failure = IdentityFailure(trial=trial, x=x, y=y, samples=samples, residual=residual)
            result.max_abs_residual = max(result.max_abs_residual, abs(residual))

        logger.info(f"identity n={n}: {result.passed}/{trials} cases with zero residual (seed {seed})")
        return result

    def coefficients(self, n: int, x: Fraction, y: Fraction) -> GapCoefficients:
        return gap_coefficients(n, x, y)

    def _evaluate_cell(self, n: int, samples: SampleVector, x: Fraction, y: Fraction, exact: bool) -> GapReport:
        if exact:
            return gap_report(n, samples, x, y)
        return gap_report_float(n, samples, x, y)

    def _cell_violations(self, report: GapReport) -> List[str]:
        where = f"(x={format_fraction(report.x)}, y={format_fraction(report.y)})"
        tolerance = 0.0 if report.exact else self.float_tolerance
        problems = []
        if not chain_holds(report, tolerance):
            problems.append(f"chain relation broken at {where}")
        if abs(report.identity_residual) > tolerance:
            problems.append(f"nonzero identity residual {report.identity_residual} at {where}")
        return problems

    def run_scan(self, config: ScanConfig) -> ScanResult:
        """
        Evaluate the gap report on all (G + 1)^2 grid cells.

        Cells may be evaluated concurrently; the result always lists them
        ordered by (x, y).
        """
        started = time.perf_counter()
        n, grid = config.n, config.grid
        samples = sample(config.spec, 2 * n, exact=config.exact)
        convex = is_convex_samples(samples)
        affine = is_affine_samples(samples)
        if not convex:
            logger.warning(f"samples of '{config.function}' are not convex at n={n}; gap4 verdict suppressed")

        points = [Fraction(i, grid) for i in range(grid + 1)]
        coordinates = [(x, y) for x in points for y in points]
        reports: Dict[int, GapReport] = {}

        logger.info(f"scanning {len(coordinates)} cells: fn={config.function}, n={n}, mode={config.mode}")
        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            futures = {
                executor.submit(self._evaluate_cell, n, samples, x, y, config.exact): index
                for index, (x, y) in enumerate(coordinates)
            }
            for future in as_completed(futures):
                reports[futures[future]] = future.result()

        cells = [reports[index] for index in range(len(coordinates))]
        result = ScanResult(
            n=n,
            function=config.function,
            grid=grid,
            mode=config.mode,
            seed=config.seed,
            cells=cells,
            convex_input=convex,
            affine_input=affine,
        )

        tolerance = 0.0 if config.exact else self.float_tolerance
        for report in cells:
            problems = self._cell_violations(report)
            for problem in problems:
                logger.error(problem)
            result.violations.extend(problems)
            if abs(report.gap4) <= tolerance:
                result.equality_cells += 1
            logger.debug(f"cell ({report.x}, {report.y}): gap4={report.gap4}")

        best = min(cells, key=lambda r: (r.gap4, r.x, r.y))
        result.min_gap4 = MinimumGap(value=best.gap4, x=best.x, y=best.y)

        if convex and best.gap4 < -tolerance:
            logger.error(f"negative gap4 {best.gap4} for convex input at ({best.x}, {best.y})")

        if config.record_timing:
            result.runtime_ms = round((time.perf_counter() - started) * 1000.0, 3)
        return result

    def scan_exit_status(self, result: ScanResult) -> int:
        """0 when the scan verified everything it claims, 1 otherwise"""
        tolerance = 0.0 if result.mode == "exact" else self.float_tolerance
        return 0 if result.passes(tolerance) else 1
