# Console rendering for scan, identity and coefficient results
from .dashboard import VerifierDashboard

__all__ = ['VerifierDashboard']
