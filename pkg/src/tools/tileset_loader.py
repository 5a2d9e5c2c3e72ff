"""
Tile-set config files.

A config is YAML (JSON is accepted too, being a YAML subset):

    kind: explicit            # full action table
    R: "r2,f"
    designs: [u, d]
    action:
      u: {id: u, r2: d, f: u, r2f: d}
      d: {id: d, r2: u, f: d, r2f: u}

    kind: orbit-spec          # orbit census only
    R: D8
    counts: {"rf": 1}
"""

from pathlib import Path
from typing import Optional, Union

import yaml
from pydantic import TypeAdapter, ValidationError

from src.algebra.group import parse_element, parse_group
from src.algebra.tileset import OrbitSpec, TileDesignSet, realize_orbit_spec
from src.models.tiling_models import (
    ExplicitTileSetConfig,
    SymmetryGroupSpec,
    TileSetConfig,
)
from src.tools.tile_library import is_builtin, load_builtin
from src.utils.error_handler import ConfigError, GroupError

_CONFIG_ADAPTER = TypeAdapter(TileSetConfig)


def parse_tileset_config(data: dict, default_name: str = "custom") -> Union[TileDesignSet, OrbitSpec]:
    """Validate a config mapping and build the tile set or orbit census it describes."""
    try:
        config = _CONFIG_ADAPTER.validate_python(data)
    except ValidationError as e:
        raise ConfigError(f"Invalid tile-set config: {e}")

    try:
        R = parse_group(config.R)
        if isinstance(config, ExplicitTileSetConfig):
            action = {
                design: {parse_element(g): image for g, image in row.items()}
                for design, row in config.action.items()
            }
            return TileDesignSet(
                name=config.name or default_name,
                designs=tuple(config.designs),
                action=action,
                ambient=R,
            )
        spec = OrbitSpec.build(R, config.counts)
        if spec.orbit_count == 0:
            raise ConfigError("An orbit-spec config needs at least one orbit")
        return spec
    except GroupError as e:
        raise ConfigError(f"Invalid tile-set config: {e}")
    except ValidationError as e:
        raise ConfigError(f"Invalid tile-set config: {e}")


def load_tileset_config(path: Union[str, Path]) -> Union[TileDesignSet, OrbitSpec]:
    """Read and validate a config file."""
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ConfigError(f"Tile-set config not found: {path}")
    except yaml.YAMLError as e:
        raise ConfigError(f"Could not parse {path}: {e}")
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: expected a mapping at the top level")
    return parse_tileset_config(data, default_name=path.stem)


def resolve_tiles(reference: str, R: Optional[SymmetryGroupSpec] = None) -> TileDesignSet:
    """
    A concrete tile set for a built-in name or a config path, as an R-set
    when R is given.
    """
    if is_builtin(reference):
        return load_builtin(reference, R)

    path = Path(reference)
    if not path.exists():
        raise ConfigError(
            f"'{reference}' is neither a built-in tile set nor an existing config file"
        )
    source = load_tileset_config(path)
    ts = realize_orbit_spec(source, name=path.stem) if isinstance(source, OrbitSpec) else source
    if R is None:
        return ts
    if not R.issubset(ts.ambient):
        raise GroupError(f"Tile set '{ts.name}' only carries an action of {ts.ambient.name}, not {R.name}")
    return ts.restrict(R)
