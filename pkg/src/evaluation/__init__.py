"""Brute-force oracle and the closed-form cross-check"""

from .oracle import count_orbits_direct, count_orbits_flood, orbit_representatives
from .crosscheck import CrosscheckEvaluator, crosscheck_sweep

__all__ = [
    'count_orbits_direct',
    'count_orbits_flood',
    'orbit_representatives',
    'CrosscheckEvaluator',
    'crosscheck_sweep',
]
