from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Union

Number = Union[Fraction, float]


@dataclass(frozen=True)
class GapReport:
    """The four inequality gaps at a single (x, y) point"""
    n: int
    x: Fraction
    y: Fraction
    gap1: Number
    gap2: Number
    gap3: Number
    gap4: Number
    identity_residual: Number
    on_diagonal: bool = False
    affine_samples: bool = False
    exact: bool = True

    @property
    def chain_residual(self) -> Number:
        """gap2 - (gap3 + 2 * gap4); exactly zero in exact mode"""
        return self.gap2 - (self.gap3 + 2 * self.gap4)


@dataclass(frozen=True)
class MinimumGap:
    value: Number
    x: Fraction
    y: Fraction


@dataclass
class ScanResult:
    """Outcome of a grid scan, cells ordered by (x, y)"""
    n: int
    function: str
    grid: int
    mode: str
    seed: int
    cells: List[GapReport] = field(default_factory=list)
    min_gap4: Optional[MinimumGap] = None
    convex_input: bool = True
    affine_input: bool = False
    equality_cells: int = 0
    violations: List[str] = field(default_factory=list)
    runtime_ms: Optional[float] = None

    @property
    def total_cells(self) -> int:
        return len(self.cells)

    def passes(self, tolerance: float = 0.0) -> bool:
        """True when no invariant failed and, for convex input, min gap4 >= -tolerance"""
        if self.violations:
            return False
        if not self.convex_input or self.min_gap4 is None:
            return True
        return self.min_gap4.value >= -tolerance


@dataclass(frozen=True)
class IdentityFailure:
    trial: int
    x: Fraction
    y: Fraction
    samples: List[int]
    residual: Fraction


@dataclass
class IdentityTrialResult:
    """Summary of a batch of randomized identity checks"""
    n: int
    trials: int
    seed: int
    passed: int = 0
    max_abs_residual: Fraction = Fraction(0)
    first_failure: Optional[IdentityFailure] = None

    @property
    def ok(self) -> bool:
        return self.passed == self.trials and self.max_abs_residual == 0
