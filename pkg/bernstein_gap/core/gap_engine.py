"""
The gap polynomial g_n(z; x, y) and the four inequality gaps.

g is built two ways: from its definition

    g(z) = z^-2 * ((1 + m z)^(2n) - (1 + x z)^n (1 + y z)^n),   m = (x + y) / 2,

and from the factored sum

    g(z) = (x - y)^2 / 4 * sum_{k<n} (1 + m z)^(2(n-1-k)) (1 + x z)^k (1 + y z)^k.

Its Taylor coefficients at z = -1 weight the second differences of the
samples in the midpoint identity

    B_2n(a)(m) - T_n(a)(x, y) = sum_k (delta^2 a_k) * g^(k)(-1) / k!

where T_n is the tensor operator. Every coefficient is nonnegative on the
unit square, so convex samples give a nonnegative midpoint gap.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import List, Sequence, Tuple

from .bernstein_ops import (
    SampleLike,
    _values,
    bernstein_apply,
    bernstein_apply_float,
    check_unit_interval,
    midpoint,
    tensor_apply,
    tensor_apply_float,
)
from .errors import LengthMismatch, NegativeCoefficient, TooShort
from .exact_core import (
    DensePoly,
    divide_by_z_squared,
    poly_from_linear,
    poly_mul,
    poly_pow,
    poly_scale,
    poly_sub,
    taylor_coeffs_at,
)
from ..models.report import GapReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GapCoefficients:
    """c[k] = g^(k)(-1) / k! for k = 0..2n-2"""
    n: int
    x: Fraction
    y: Fraction
    c: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.c) != 2 * self.n - 1:
            raise LengthMismatch(f"expected {2 * self.n - 1} coefficients, got {len(self.c)}")


def _check_inputs(n: int, x, y) -> Tuple[Fraction, Fraction]:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    x, y = Fraction(x), Fraction(y)
    check_unit_interval(x)
    check_unit_interval(y, "y")
    return x, y


def build_g_definition(n: int, x, y) -> DensePoly:
    x, y = _check_inputs(n, x, y)
    m = midpoint(x, y)
    mid_power = poly_pow(poly_from_linear(1, m), 2 * n)
    product = poly_mul(poly_pow(poly_from_linear(1, x), n), poly_pow(poly_from_linear(1, y), n))
    return divide_by_z_squared(poly_sub(mid_power, product))


def build_g_closedform(n: int, x, y) -> DensePoly:
    x, y = _check_inputs(n, x, y)
    prefactor = (x - y) ** 2 / 4
    if prefactor == 0:
        return DensePoly.zero()
    m = midpoint(x, y)
    mid_square = poly_pow(poly_from_linear(1, m), 2)
    pair = poly_mul(poly_from_linear(1, x), poly_from_linear(1, y))

    mid_powers = [DensePoly.one()]
    pair_powers = [DensePoly.one()]
    for _ in range(n - 1):
        mid_powers.append(poly_mul(mid_powers[-1], mid_square))
        pair_powers.append(poly_mul(pair_powers[-1], pair))

    total = DensePoly.zero()
    for k in range(n):
        total = total + poly_mul(mid_powers[n - 1 - k], pair_powers[k])
    return poly_scale(total, prefactor)


def degree_bound_holds(g: DensePoly, n: int) -> bool:
    return g.degree <= 2 * n - 2


def gap_coefficients(n: int, x, y) -> GapCoefficients:
    """Taylor coefficients of g at z = -1, zero-padded to length 2n - 1"""
    x, y = _check_inputs(n, x, y)
    return _gap_coefficients(n, x, y)


@lru_cache(maxsize=8192)
def _gap_coefficients(n: int, x: Fraction, y: Fraction) -> GapCoefficients:
    g = build_g_definition(n, x, y)
    c = DensePoly(taylor_coeffs_at(g, -1)).padded(2 * n - 1)
    for k, value in enumerate(c):
        if value < 0:
            logger.error(f"negative gap coefficient c[{k}] = {value} at n={n}, x={x}, y={y}")
            raise NegativeCoefficient(f"c[{k}] = {value} < 0 for n={n}, x={x}, y={y}")
    return GapCoefficients(n=n, x=x, y=y, c=tuple(c))


def delta2(values: Sequence) -> List:
    """Second forward differences a[k+2] - 2 a[k+1] + a[k]"""
    values = list(_values(values))
    if len(values) < 3:
        raise TooShort(f"second differences need at least 3 values, got {len(values)}")
    return [values[k + 2] - 2 * values[k + 1] + values[k] for k in range(len(values) - 2)]


def _check_samples(n: int, values: Sequence) -> None:
    if len(values) != 2 * n + 1:
        raise LengthMismatch(f"n={n} needs {2 * n + 1} samples, got {len(values)}")


def identity_lhs(n: int, samples: SampleLike, x, y) -> Fraction:
    """B_2n at the midpoint minus the tensor operator at (x, y)"""
    x, y = _check_inputs(n, x, y)
    values = _values(samples)
    _check_samples(n, values)
    return bernstein_apply(values, midpoint(x, y)) - tensor_apply(n, values, x, y)


def identity_rhs(coeffs: GapCoefficients, samples: SampleLike) -> Fraction:
    """Second differences of the samples dotted with the gap coefficients"""
    values = _values(samples)
    _check_samples(coeffs.n, values)
    return sum((d * c for d, c in zip(delta2(values), coeffs.c)), Fraction(0))


def gap1_raw(n: int, samples: SampleLike, x, y) -> Fraction:
    """Left side of the original inequality as its own double sum"""
    x, y = _check_inputs(n, x, y)
    values = _values(samples)
    _check_samples(n, values)
    return tensor_apply(n, values, x, x) + tensor_apply(n, values, y, y) - 2 * tensor_apply(n, values, x, y)


def is_affine(values: Sequence) -> bool:
    return all(d == 0 for d in delta2(values))


def gap_report(n: int, samples: SampleLike, x, y) -> GapReport:
    x, y = _check_inputs(n, x, y)
    values = _values(samples)
    _check_samples(n, values)

    at_x = bernstein_apply(values, x)
    at_y = bernstein_apply(values, y)
    at_mid = bernstein_apply(values, midpoint(x, y))
    tensor = tensor_apply(n, values, x, y)

    gap4 = at_mid - tensor
    residual = gap4 - identity_rhs(gap_coefficients(n, x, y), values)
    return GapReport(
        n=n,
        x=x,
        y=y,
        gap1=gap1_raw(n, values, x, y),
        gap2=at_x + at_y - 2 * tensor,
        gap3=at_x + at_y - 2 * at_mid,
        gap4=gap4,
        identity_residual=residual,
        on_diagonal=x == y,
        affine_samples=is_affine(values),
    )


def gap_report_float(n: int, samples: SampleLike, x, y) -> GapReport:
    """
    Float-mode report for plot data. The residual compares the float midpoint
    gap with the exact gap coefficients rounded to float.
    """
    x, y = _check_inputs(n, x, y)
    values = [float(v) for v in _values(samples)]
    _check_samples(n, values)
    fx, fy = float(x), float(y)

    at_x = bernstein_apply_float(values, fx)
    at_y = bernstein_apply_float(values, fy)
    at_mid = bernstein_apply_float(values, float(midpoint(x, y)))
    tensor = tensor_apply_float(n, values, fx, fy)

    gap4 = at_mid - tensor
    coeffs = gap_coefficients(n, x, y).c
    rhs = sum(d * float(c) for d, c in zip(delta2(values), coeffs))
    gap1 = (
        tensor_apply_float(n, values, fx, fx)
        + tensor_apply_float(n, values, fy, fy)
        - 2 * tensor
    )
    return GapReport(
        n=n,
        x=x,
        y=y,
        gap1=gap1,
        gap2=at_x + at_y - 2 * tensor,
        gap3=at_x + at_y - 2 * at_mid,
        gap4=gap4,
        identity_residual=gap4 - rhs,
        on_diagonal=x == y,
        affine_samples=is_affine(values),
        exact=False,
    )


def chain_holds(report: GapReport, tolerance: float = 0.0) -> bool:
    """gap1 = gap2 and gap2 = gap3 + 2 gap4, exactly unless a tolerance is given"""
    if report.exact:
        return report.gap1 == report.gap2 and report.chain_residual == 0
    return abs(report.gap1 - report.gap2) <= tolerance and abs(report.chain_residual) <= tolerance
