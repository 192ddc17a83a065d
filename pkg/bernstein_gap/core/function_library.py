"""
Catalog of test functions on [0, 1], sampled on the grid k / (2n).

Textual forms (used by the CLI ``--fn`` option):

    e<p>                 t**p for an integer p >= 1 (e1 is affine, e2 the square)
    abs:<c>              |t - c| for a rational c in [0, 1]
    hat:<c>              tent through (0, 0), (c, 1), (1, 0); not convex
    pwl:<x>,<y>;...      piecewise linear through the listed breakpoints,
                         x strictly increasing from 0 to 1
    exp                  e**t, float mode only

Rationals are written ``p/q`` or as integers. Whitespace is ignored.
"""

import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Tuple, Union

from .bernstein_ops import SampleVector
from .errors import SpecParseError, UnsupportedExact
from .gap_engine import delta2, is_affine

Number = Union[Fraction, float]


class FunctionKind(Enum):
    MONOMIAL = "monomial"
    ABS_SHIFT = "abs"
    HAT = "hat"
    PIECEWISE_LINEAR = "pwl"
    EXP_LIKE = "exp"


@dataclass(frozen=True)
class FunctionSpec:
    kind: FunctionKind
    power: int = 1
    center: Fraction = Fraction(0)
    breakpoints: Tuple[Tuple[Fraction, Fraction], ...] = ()

    @property
    def float_only(self) -> bool:
        return self.kind == FunctionKind.EXP_LIKE

    @property
    def text(self) -> str:
        """Canonical textual form; parse_spec(spec.text) == spec"""
        if self.kind == FunctionKind.MONOMIAL:
            return f"e{self.power}"
        if self.kind == FunctionKind.ABS_SHIFT:
            return f"abs:{self.center}"
        if self.kind == FunctionKind.HAT:
            return f"hat:{self.center}"
        if self.kind == FunctionKind.PIECEWISE_LINEAR:
            return "pwl:" + ";".join(f"{bx},{by}" for bx, by in self.breakpoints)
        return "exp"

    def __str__(self) -> str:
        return self.text


def _rational(token: str, text: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise SpecParseError(f"'{token}' is not a rational number in function spec '{text}'")


def _check_breakpoints(points: List[Tuple[Fraction, Fraction]], text: str) -> None:
    if len(points) < 2:
        raise SpecParseError(f"piecewise linear spec '{text}' needs at least two breakpoints")
    xs = [bx for bx, _ in points]
    if xs[0] != 0 or xs[-1] != 1:
        raise SpecParseError(f"breakpoints of '{text}' must start at 0 and end at 1")
    if any(b <= a for a, b in zip(xs, xs[1:])):
        raise SpecParseError(f"breakpoints of '{text}' must be strictly increasing")


def parse_spec(text: str) -> FunctionSpec:
    source = text
    text = re.sub(r"\s+", "", text).lower()

    monomial = re.fullmatch(r"e(\d+)", text)
    if monomial:
        power = int(monomial.group(1))
        if power < 1:
            raise SpecParseError(f"monomial power must be at least 1 in '{source}'")
        return FunctionSpec(kind=FunctionKind.MONOMIAL, power=power)

    if text == "exp":
        return FunctionSpec(kind=FunctionKind.EXP_LIKE)

    head, sep, body = text.partition(":")
    if not sep or not body:
        raise SpecParseError(f"unrecognized function spec '{source}'")

    if head == "abs":
        center = _rational(body, source)
        if not 0 <= center <= 1:
            raise SpecParseError(f"abs center must lie in [0, 1], got {center}")
        return FunctionSpec(kind=FunctionKind.ABS_SHIFT, center=center)

    if head == "hat":
        peak = _rational(body, source)
        if not 0 < peak < 1:
            raise SpecParseError(f"hat peak must lie strictly inside (0, 1), got {peak}")
        points = ((Fraction(0), Fraction(0)), (peak, Fraction(1)), (Fraction(1), Fraction(0)))
        return FunctionSpec(kind=FunctionKind.HAT, center=peak, breakpoints=points)

    if head == "pwl":
        points = []
        for pair in body.split(";"):
            coords = pair.split(",")
            if len(coords) != 2:
                raise SpecParseError(f"breakpoint '{pair}' in '{source}' is not an x,y pair")
            points.append((_rational(coords[0], source), _rational(coords[1], source)))
        _check_breakpoints(points, source)
        return FunctionSpec(kind=FunctionKind.PIECEWISE_LINEAR, breakpoints=tuple(points))

    raise SpecParseError(f"unknown function kind '{head}' in '{source}'")


def _interpolate(points: Tuple[Tuple[Fraction, Fraction], ...], t: Fraction) -> Fraction:
    for (x0, y0), (x1, y1) in zip(points, points[1:]):
        if x0 <= t <= x1:
            return y0 + (y1 - y0) * (t - x0) / (x1 - x0)
    raise ValueError(f"{t} lies outside the breakpoint range")


def evaluate(spec: FunctionSpec, t, exact: bool = True) -> Number:
    """f(t) for a rational t; a float when exact is False"""
    if spec.float_only:
        if exact:
            raise UnsupportedExact(f"'{spec.text}' has no exact rational values")
        return math.exp(float(t))
    t = Fraction(t)
    if spec.kind == FunctionKind.MONOMIAL:
        value = t ** spec.power
    elif spec.kind == FunctionKind.ABS_SHIFT:
        value = abs(t - spec.center)
    else:
        value = _interpolate(spec.breakpoints, t)
    return value if exact else float(value)


def sample(spec: FunctionSpec, grid_size: int, exact: bool = True) -> SampleVector:
    """a_k = f(k / grid_size) for k = 0..grid_size"""
    if grid_size < 2 or grid_size % 2:
        raise ValueError(f"grid size must be even and at least 2, got {grid_size}")
    if exact and spec.float_only:
        raise UnsupportedExact(f"'{spec.text}' is float-only and cannot be sampled exactly")
    values = tuple(evaluate(spec, Fraction(k, grid_size), exact) for k in range(grid_size + 1))
    return SampleVector(n2=grid_size, values=values, exact=exact)


def is_convex_samples(samples) -> bool:
    return all(d >= 0 for d in delta2(samples))


def is_affine_samples(samples) -> bool:
    return is_affine(samples)


def is_convex_spec(spec: FunctionSpec) -> bool:
    """Declared convexity of the function kind, independent of any grid"""
    if spec.kind in (FunctionKind.MONOMIAL, FunctionKind.ABS_SHIFT, FunctionKind.EXP_LIKE):
        return True
    if spec.kind == FunctionKind.HAT:
        return False
    slopes = [(y1 - y0) / (x1 - x0) for (x0, y0), (x1, y1) in zip(spec.breakpoints, spec.breakpoints[1:])]
    return all(b >= a for a, b in zip(slopes, slopes[1:]))


CONVEX_CATALOG = (
    "e2",
    "abs:1/4",
    "abs:1/2",
    "abs:3/4",
    "pwl:0,1;1/4,1/4;3/4,1/4;1,1",
)

CONTROL_CATALOG = (
    "hat:1/2",
)
