"""
OEIS b-file output and the sequence mapping file.

A b-file is one "index value" line per term, indices contiguous and
ascending. The mapping file records which (surface, group, tiles) family
corresponds to which published sequence, with the prefix we verified.
"""

from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

import yaml
from pydantic import BaseModel, Field, ValidationError, model_validator

from src.algebra.group import parse_group
from src.models.tiling_models import SequenceRequest, Surface
from src.utils.error_handler import ConfigError


class BFile(BaseModel):
    """Index/value pairs with contiguous ascending indices"""
    offset: int
    values: List[int]

    def lines(self) -> List[str]:
        return [f"{self.offset + i} {v}" for i, v in enumerate(self.values)]

    def render(self) -> str:
        return "".join(f"{line}\n" for line in self.lines())


def build_bfile(req: SequenceRequest, values: Sequence[int]) -> BFile:
    """Square families are indexed by n; tables get a running index over (n, m) row-major."""
    offset = req.offset if req.offset is not None else req.n_min
    for v in values:
        if v < 0:
            raise ValueError(f"b-file values must be nonnegative, got {v}")
    return BFile(offset=offset, values=list(values))


def write_bfile(bfile: BFile, out: Optional[Union[str, Path]] = None) -> str:
    text = bfile.render()
    if out:
        Path(out).write_text(text, encoding="utf-8")
    return text


class MappedSequence(BaseModel):
    """One published sequence reproduced by a census family"""
    oeis: str = Field(..., pattern=r"^A\d{6}$")
    surface: Surface
    square: bool = True
    m: Optional[int] = Field(default=None, ge=1, description="Row count of a fixed-height family")
    group: str
    tiles: str
    offset: int = Field(default=0, description="Published index of term n is n + offset")
    terms: Dict[int, int] = Field(..., description="n -> verified value")
    note: str = ""

    @model_validator(mode="after")
    def _check_height(self) -> "MappedSequence":
        if self.square == (self.m is not None):
            raise ValueError("square families take no m; fixed-height families need one")
        return self

    def height(self, n: int) -> int:
        return n if self.square else self.m


class SequenceMapping(BaseModel):
    sequences: List[MappedSequence]


def load_mapping(path: Union[str, Path]) -> SequenceMapping:
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ConfigError(f"Sequence mapping not found: {path}")
    except yaml.YAMLError as e:
        raise ConfigError(f"Could not parse {path}: {e}")
    try:
        return SequenceMapping.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"Invalid sequence mapping {path}: {e}")


def find_mapping(mapping: SequenceMapping, req: SequenceRequest) -> Optional[MappedSequence]:
    """The published sequence a request reproduces, if one is recorded."""
    if req.transpose:
        return None
    group = parse_group(req.group).name
    height = req.fixed_height()
    for entry in mapping.sequences:
        if (
            entry.surface == req.surface
            and entry.square == req.square
            and (entry.square or entry.m == height)
            and parse_group(entry.group).name == group
            and entry.tiles == req.tiles
        ):
            return entry
    return None


def published_offset(req: SequenceRequest, entry: Optional[MappedSequence]) -> SequenceRequest:
    """Index a mapped family the way its published sequence does, unless an offset was given."""
    if entry is None or req.offset is not None:
        return req
    return req.model_copy(update={"offset": req.n_min + entry.offset})
