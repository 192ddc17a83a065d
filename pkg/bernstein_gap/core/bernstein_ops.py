"""
Bernstein basis rows and the univariate / tensor Bernstein operators.

Exact mode is the default and is the only mode used for verdicts. The float
helpers (``basis_row_float``, ``bernstein_apply_float``,
``tensor_apply_float``) exist for plot data and float-mode scans.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

import numpy as np
from scipy.linalg import hankel

from .errors import DomainError, LengthMismatch
from .exact_core import DensePoly, binomial, poly_from_linear, poly_mul, poly_pow, taylor_coeffs_at

Number = Union[Fraction, float]


@dataclass(frozen=True)
class BasisRow:
    """Weights p_{n,v}(x) for v = 0..n"""
    n: int
    x: Fraction
    weights: Tuple[Fraction, ...]

    @property
    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))


@dataclass(frozen=True)
class SampleVector:
    """
    Samples a_k = f(k / n2) for k = 0..n2.

    ``exact`` is True when every value is a Fraction; float samples carry
    exact=False and never enter an exact verdict.
    """
    n2: int
    values: Tuple[Number, ...]
    exact: bool = True

    def __post_init__(self):
        if len(self.values) != self.n2 + 1:
            raise LengthMismatch(f"expected {self.n2 + 1} samples for grid {self.n2}, got {len(self.values)}")
        if self.exact and not all(isinstance(v, (Fraction, int)) for v in self.values):
            raise TypeError("exact sample vectors must hold rationals only")
        if self.exact:
            object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    @classmethod
    def from_values(cls, values: Sequence[Number]) -> "SampleVector":
        exact = all(isinstance(v, (Fraction, int)) for v in values)
        return cls(n2=len(values) - 1, values=tuple(values), exact=exact)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, k):
        return self.values[k]


SampleLike = Union[SampleVector, Sequence[Number]]


def _values(samples: SampleLike) -> Sequence[Number]:
    return samples.values if isinstance(samples, SampleVector) else samples


def check_unit_interval(x, name: str = "x") -> None:
    if not 0 <= x <= 1:
        raise DomainError(f"{name} = {x} lies outside [0, 1]")


def midpoint(x, y):
    return (Fraction(x) + Fraction(y)) / 2


@lru_cache(maxsize=4096)
def _basis_weights(n: int, x: Fraction) -> Tuple[Fraction, ...]:
    # Python evaluates 0**0 as 1, which is the endpoint convention we want.
    one_minus = 1 - x
    return tuple(binomial(n, v) * x ** v * one_minus ** (n - v) for v in range(n + 1))


def basis_row(n: int, x) -> BasisRow:
    """Exact basis row by the direct binomial formula"""
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    x = Fraction(x)
    check_unit_interval(x)
    return BasisRow(n=n, x=x, weights=_basis_weights(n, x))


def bernstein_apply(samples: SampleLike, x) -> Fraction:
    """(B_n f)(x) where the samples are f(v/n), v = 0..n"""
    values = _values(samples)
    n = len(values) - 1
    if n < 1:
        raise LengthMismatch(f"need at least 2 samples, got {len(values)}")
    row = basis_row(n, x)
    return sum((w * a for w, a in zip(row.weights, values)), Fraction(0))


def _check_tensor_length(n: int, values: Sequence[Number]) -> None:
    if len(values) != 2 * n + 1:
        raise LengthMismatch(f"tensor operator of degree {n} needs {2 * n + 1} samples, got {len(values)}")


def tensor_apply(n: int, samples: SampleLike, x, y) -> Fraction:
    """Double sum of p_{n,i}(x) p_{n,j}(y) a_{i+j}"""
    values = _values(samples)
    _check_tensor_length(n, values)
    wx = basis_row(n, x).weights
    wy = basis_row(n, y).weights
    total = Fraction(0)
    for i, p in enumerate(wx):
        if p == 0:
            continue
        inner = sum((q * values[i + j] for j, q in enumerate(wy)), Fraction(0))
        total += p * inner
    return total


@dataclass(frozen=True)
class DiagonalCheck:
    tensor_value: Fraction
    bernstein_value: Fraction

    @property
    def equal(self) -> bool:
        return self.tensor_value == self.bernstein_value


def diagonal_check(n: int, samples: SampleLike, x) -> DiagonalCheck:
    """Tensor operator at (x, x) against B_{2n} at x, computed independently"""
    values = _values(samples)
    return DiagonalCheck(
        tensor_value=tensor_apply(n, values, x, x),
        bernstein_value=bernstein_apply(values, x),
    )


def generating_weights(n: int, x, y) -> List[Fraction]:
    """
    Taylor coefficients at z = -1 of (1 + xz)^n (1 + yz)^n, padded to 2n + 1.

    Summing a_k against these weights reproduces the tensor operator.
    """
    x, y = Fraction(x), Fraction(y)
    check_unit_interval(x)
    check_unit_interval(y, "y")
    product = poly_mul(poly_pow(poly_from_linear(1, x), n), poly_pow(poly_from_linear(1, y), n))
    return DensePoly(taylor_coeffs_at(product, -1)).padded(2 * n + 1)


def tensor_apply_generating(n: int, samples: SampleLike, x, y) -> Fraction:
    """Tensor operator through the generating-function weights"""
    values = _values(samples)
    _check_tensor_length(n, values)
    weights = generating_weights(n, x, y)
    return sum((w * a for w, a in zip(weights, values)), Fraction(0))


def basis_row_float(n: int, x: float) -> np.ndarray:
    """
    Float basis row by the multiplicative recurrence
    p_{n,v+1} = p_{n,v} * (n - v) / (v + 1) * x / (1 - x).

    For x > 1/2 the row is built at 1 - x and reversed, since
    p_{n,v}(x) = p_{n,n-v}(1 - x); the start value stays >= 2^-n.
    """
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    x = float(x)
    check_unit_interval(x)
    if x > 0.5:
        return basis_row_float(n, 1.0 - x)[::-1].copy()
    v = np.arange(n)
    ratios = (n - v) / (v + 1) * (x / (1.0 - x))
    row = np.empty(n + 1)
    row[0] = (1.0 - x) ** n
    row[1:] = row[0] * np.cumprod(ratios)
    return row


def bernstein_apply_float(samples: SampleLike, x: float) -> float:
    """(B_n f)(x) by de Casteljau's algorithm"""
    points = np.array([float(a) for a in _values(samples)], dtype=float)
    if len(points) < 2:
        raise LengthMismatch(f"need at least 2 samples, got {len(points)}")
    x = float(x)
    check_unit_interval(x)
    for size in range(len(points) - 1, 0, -1):
        points[:size] = points[:size] + x * (points[1:size + 1] - points[:size])
    return float(points[0])


def tensor_apply_float(n: int, samples: SampleLike, x: float, y: float) -> float:
    values = _values(samples)
    _check_tensor_length(n, values)
    a = np.array([float(v) for v in values], dtype=float)
    # H[i, j] = a[i + j]
    matrix = hankel(a[:n + 1], a[n:])
    return float(basis_row_float(n, x) @ matrix @ basis_row_float(n, y))
