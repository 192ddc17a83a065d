"""
Exact rational scalars and dense univariate polynomial arithmetic.

Rationals are ``fractions.Fraction`` values, which are always kept in lowest
terms with a positive denominator. Polynomials are stored densely with
ascending coefficients and are normalized on construction, so two equal
polynomials compare equal structurally.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from .errors import NonDivisible

Rational = Fraction
RationalLike = Union[Fraction, int]


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer; 0 when k > n"""
    if n < 0 or k < 0:
        raise ValueError(f"binomial arguments must be nonnegative, got ({n}, {k})")
    return math.comb(n, k)


def binomial_row(n: int) -> List[int]:
    return [math.comb(n, k) for k in range(n + 1)]


def _strip(coeffs: Iterable[RationalLike]) -> Tuple[Fraction, ...]:
    values = [Fraction(c) for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class DensePoly:
    """Polynomial over the rationals; ``coeffs[i]`` is the coefficient of z^i."""
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(self.coeffs))

    @classmethod
    def zero(cls) -> "DensePoly":
        return cls(())

    @classmethod
    def one(cls) -> "DensePoly":
        return cls((Fraction(1),))

    @property
    def degree(self) -> int:
        """Highest index with a nonzero coefficient; -1 for the zero polynomial"""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def padded(self, length: int) -> List[Fraction]:
        """Coefficients zero-padded (never truncated) to ``length`` entries"""
        if self.degree >= length:
            raise ValueError(f"degree {self.degree} does not fit in {length} coefficients")
        return list(self.coeffs) + [Fraction(0)] * (length - len(self.coeffs))

    def __add__(self, other: "DensePoly") -> "DensePoly":
        return poly_add(self, other)

    def __sub__(self, other: "DensePoly") -> "DensePoly":
        return poly_sub(self, other)

    def __mul__(self, other: "DensePoly") -> "DensePoly":
        return poly_mul(self, other)

    def __pow__(self, m: int) -> "DensePoly":
        return poly_pow(self, m)

    def __call__(self, z: RationalLike) -> Fraction:
        return poly_eval(self, z)


def poly_from_linear(a: RationalLike, b: RationalLike) -> DensePoly:
    """The polynomial a + b*z"""
    return DensePoly((a, b))


def poly_add(p: DensePoly, q: DensePoly) -> DensePoly:
    size = max(len(p.coeffs), len(q.coeffs))
    return DensePoly(p.coefficient(i) + q.coefficient(i) for i in range(size))


def poly_sub(p: DensePoly, q: DensePoly) -> DensePoly:
    size = max(len(p.coeffs), len(q.coeffs))
    return DensePoly(p.coefficient(i) - q.coefficient(i) for i in range(size))


def poly_scale(p: DensePoly, c: RationalLike) -> DensePoly:
    c = Fraction(c)
    return DensePoly(c * a for a in p.coeffs)


def poly_mul(p: DensePoly, q: DensePoly) -> DensePoly:
    """Exact schoolbook convolution of the coefficient sequences"""
    if p.is_zero or q.is_zero:
        return DensePoly.zero()
    result = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            result[i + j] += a * b
    return DensePoly(result)


def poly_pow(p: DensePoly, m: int) -> DensePoly:
    """p**m by square-and-multiply; p**0 is 1 (also for the zero polynomial)"""
    if m < 0:
        raise ValueError(f"exponent must be nonnegative, got {m}")
    result = DensePoly.one()
    base = p
    while m:
        if m & 1:
            result = poly_mul(result, base)
        m >>= 1
        if m:
            base = poly_mul(base, base)
    return result


def poly_eval(p: DensePoly, z: RationalLike) -> Fraction:
    """Horner evaluation"""
    z = Fraction(z)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def taylor_coeffs_at(p: DensePoly, a: RationalLike) -> List[Fraction]:
    """
    Coefficients of p re-expanded around z = a, i.e. t_k = p^(k)(a) / k!.

    Computed by Horner's scheme on p(a + w): no derivatives and no factorials
    appear in the intermediates. Returns degree(p) + 1 entries ([] for zero).
    """
    a = Fraction(a)
    shifted: List[Fraction] = []
    for c in reversed(p.coeffs):
        # shifted <- shifted * (w + a) + c
        nxt = [Fraction(0)] * (len(shifted) + 1)
        for i, s in enumerate(shifted):
            nxt[i + 1] += s
            nxt[i] += s * a
        nxt[0] += c
        shifted = nxt
    return shifted


def divide_by_z_squared(p: DensePoly) -> DensePoly:
    """q with p = z^2 * q; raises NonDivisible when z^0 or z^1 survives"""
    if p.coefficient(0) != 0 or p.coefficient(1) != 0:
        raise NonDivisible(
            f"cannot divide by z^2: constant term {p.coefficient(0)}, "
            f"linear term {p.coefficient(1)}"
        )
    return DensePoly(p.coeffs[2:])


def convolve(u: Sequence[RationalLike], v: Sequence[RationalLike]) -> List[Fraction]:
    """Plain convolution of two coefficient lists without normalization"""
    if not u or not v:
        return []
    out = [Fraction(0)] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        for j, b in enumerate(v):
            out[i + j] += Fraction(a) * b
    return out
