"""Utility modules for the tiling census"""

from .error_handler import TilingError, handle_errors
from .observability import get_tracker, reset_tracker

__all__ = ['TilingError', 'handle_errors', 'get_tracker', 'reset_tracker']
