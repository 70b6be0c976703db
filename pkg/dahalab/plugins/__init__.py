from .budget import BudgetPlugin
from .log import LogPlugin
from .progress import ProgressPlugin
from .report import ReportPlugin

__all__ = ['BudgetPlugin', 'LogPlugin', 'ProgressPlugin', 'ReportPlugin']
