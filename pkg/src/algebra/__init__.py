"""Dihedral group, its actions on cells, and tile-design sets"""

from .group import parse_element, parse_group, subgroup_classes, symmetry_group
from .tileset import OrbitSpec, TileDesignSet, classify_orbits, fixed_design_table, realize_orbit_spec

__all__ = [
    'parse_element',
    'parse_group',
    'subgroup_classes',
    'symmetry_group',
    'OrbitSpec',
    'TileDesignSet',
    'classify_orbits',
    'fixed_design_table',
    'realize_orbit_spec',
]
