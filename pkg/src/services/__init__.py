from .report_service import ReportService, latex_module

__all__ = ['ReportService', 'latex_module']
