"""
Tiling Census

Counts tilings of grids, cylinders and tori up to symmetry with
closed-form Burnside formulas, and checks them against brute force.
"""

__version__ = "1.0.0"

# Data models
from .models import GridShape, Surface, SymmetryGroupSpec, FixedDesignTable, CountResult

# Counting
from .counting import count_tilings, count_with_table

# Tile sets
from .tools.tileset_loader import resolve_tiles

# Evaluation
from .evaluation import CrosscheckEvaluator, count_orbits_direct

__all__ = [
    # Models
    'GridShape',
    'Surface',
    'SymmetryGroupSpec',
    'FixedDesignTable',
    'CountResult',
    # Counting
    'count_tilings',
    'count_with_table',
    # Tile sets
    'resolve_tiles',
    # Evaluation
    'CrosscheckEvaluator',
    'count_orbits_direct',
]
