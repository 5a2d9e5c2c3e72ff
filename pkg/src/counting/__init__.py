"""Closed-form counts for grids, cylinders and tori"""

from .dispatcher import count_tilings, count_with_table, sequence_values

__all__ = ['count_tilings', 'count_with_table', 'sequence_values']
