# Exact core, Bernstein operators, gap engine and function catalog
from .exact_core import DensePoly, Rational, binomial
from .bernstein_ops import BasisRow, SampleVector
from .gap_engine import GapCoefficients, gap_coefficients, gap_report
from .function_library import FunctionSpec, parse_spec, sample

__all__ = [
    'DensePoly', 'Rational', 'binomial',
    'BasisRow', 'SampleVector',
    'GapCoefficients', 'gap_coefficients', 'gap_report',
    'FunctionSpec', 'parse_spec', 'sample',
]
