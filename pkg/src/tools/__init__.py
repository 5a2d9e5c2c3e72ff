"""Tile libraries, config loading and output formats"""

from .tile_library import BUILTIN_NAMES, load_builtin
from .tileset_loader import load_tileset_config, resolve_tiles
from .bfile import build_bfile, write_bfile
from .gallery_formatter import GalleryFormatter

__all__ = [
    'BUILTIN_NAMES',
    'load_builtin',
    'load_tileset_config',
    'resolve_tiles',
    'build_bfile',
    'write_bfile',
    'GalleryFormatter',
]
