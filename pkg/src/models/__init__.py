"""Data models for the tiling census"""

from .tiling_models import (
    # Enums
    Surface,
    DihedralElement,

    # Shapes and symmetries
    Cell,
    GridShape,
    SymmetryElement,
    SymmetryGroupSpec,
    SubgroupClass,
    FixedDesignTable,

    # Oracle
    OracleBudget,
    TilingAssignment,

    # Counting
    CountRequest,
    GridCountRequest,
    CylinderCountRequest,
    TorusCountRequest,
    CountResult,
    SequenceRequest,
    CrosscheckRow,

    # Config files
    ExplicitTileSetConfig,
    OrbitSpecTileSetConfig,
)

__all__ = [
    'Surface',
    'DihedralElement',
    'Cell',
    'GridShape',
    'SymmetryElement',
    'SymmetryGroupSpec',
    'SubgroupClass',
    'FixedDesignTable',
    'OracleBudget',
    'TilingAssignment',
    'CountRequest',
    'GridCountRequest',
    'CylinderCountRequest',
    'TorusCountRequest',
    'CountResult',
    'SequenceRequest',
    'CrosscheckRow',
    'ExplicitTileSetConfig',
    'OrbitSpecTileSetConfig',
]
