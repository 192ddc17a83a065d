# Storage module for report files
from .report_storage import ReportStorage

__all__ = ['ReportStorage']
