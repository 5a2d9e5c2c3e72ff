"""
Data models for the tiling census.
Defines the structured types shared by the algebra, counting, oracle and CLI layers.
"""

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from typing import Annotated, Dict, FrozenSet, List, Literal, NamedTuple, Optional, Tuple, Union
from enum import Enum

from src.utils.error_handler import GroupError


class Surface(str, Enum):
    """Surface the grid is drawn on"""
    GRID = "grid"
    CYLINDER = "cylinder"
    TORUS = "torus"


class DihedralElement(str, Enum):
    """Element of D8, written r^k f meaning "rotate k quarter turns, then flip" """
    ID = "id"
    R = "r"
    R2 = "r2"
    R3 = "r3"
    F = "f"
    RF = "rf"
    R2F = "r2f"
    R3F = "r3f"

    def __str__(self) -> str:
        return self.value

    @property
    def index(self) -> int:
        return _ELEMENT_INDEX[self]

    @property
    def square_only(self) -> bool:
        """Quarter turns and diagonal reflections only map a square onto itself"""
        return self in SQUARE_ONLY


_ELEMENT_INDEX = {g: i for i, g in enumerate(DihedralElement)}

SQUARE_ONLY: FrozenSet[DihedralElement] = frozenset(
    {DihedralElement.R, DihedralElement.R3, DihedralElement.RF, DihedralElement.R3F}
)


class Cell(NamedTuple):
    """A cell (x, y): column x, row y, counted from the lower left"""
    x: int
    y: int


# ============================================================================
# SHAPES AND SYMMETRIES
# ============================================================================

class GridShape(BaseModel):
    """An n x m arrangement of cells on a surface"""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, description="Number of columns (the shifted dimension on a cylinder)")
    m: int = Field(..., ge=1, description="Number of rows")
    surface: Surface = Field(default=Surface.GRID, description="grid, cylinder or torus")

    @property
    def is_square(self) -> bool:
        return self.n == self.m

    @property
    def cell_count(self) -> int:
        return self.n * self.m

    def allows(self, g: DihedralElement) -> bool:
        """Whether g is an isometry of this shape"""
        if not g.square_only:
            return True
        return self.is_square and self.surface != Surface.CYLINDER

    def cells(self) -> List[Cell]:
        """All cells in row-major order (index y*n + x)"""
        return [Cell(x, y) for y in range(self.m) for x in range(self.n)]

    def index(self, c: Cell) -> int:
        return c.y * self.n + c.x

    def __str__(self) -> str:
        return f"{self.n}x{self.m} {self.surface.value}"


class SymmetryElement(BaseModel):
    """
    Element ((shift_x, shift_y), g) of (Z/n x Z/m) x| R.

    Acts on a cell by shifting first, then applying g. Build through
    group.make_element so the shift and g are checked against a shape.
    """
    model_config = ConfigDict(frozen=True)

    shift_x: int = Field(default=0, ge=0)
    shift_y: int = Field(default=0, ge=0)
    g: DihedralElement = Field(default=DihedralElement.ID)

    @property
    def shift(self) -> Tuple[int, int]:
        return (self.shift_x, self.shift_y)

    def __str__(self) -> str:
        return f"(({self.shift_x},{self.shift_y}),{self.g.value})"


class SymmetryGroupSpec(BaseModel):
    """A subgroup R <= D8 together with its canonical generator list"""
    model_config = ConfigDict(frozen=True)

    generators: Tuple[DihedralElement, ...] = Field(default=(), description="Canonical generators")
    elements: FrozenSet[DihedralElement] = Field(..., description="Every element of the subgroup")
    name: str = Field(..., description='Canonical name, e.g. "r,f" or "trivial"')

    @field_validator("elements")
    @classmethod
    def _has_identity(cls, v: FrozenSet[DihedralElement]) -> FrozenSet[DihedralElement]:
        if DihedralElement.ID not in v:
            raise ValueError("a subgroup must contain id")
        if 8 % len(v) != 0:
            raise ValueError(f"subgroup order {len(v)} does not divide 8")
        return v

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def rectangular_ok(self) -> bool:
        """True iff the subgroup lies in D4 = <r2, f>"""
        return not (self.elements & SQUARE_ONLY)

    @property
    def sorted_elements(self) -> Tuple[DihedralElement, ...]:
        return tuple(sorted(self.elements, key=lambda g: g.index))

    @property
    def key(self) -> Tuple[int, ...]:
        """Sorted element indices; orders subgroups deterministically"""
        return tuple(g.index for g in self.sorted_elements)

    def __contains__(self, g: object) -> bool:
        return g in self.elements

    def issubset(self, other: "SymmetryGroupSpec") -> bool:
        return self.elements <= other.elements

    def __str__(self) -> str:
        return self.name


class SubgroupClass(BaseModel):
    """A conjugacy class of subgroups inside an ambient group"""
    model_config = ConfigDict(frozen=True)

    representative: SymmetryGroupSpec
    conjugates: Tuple[SymmetryGroupSpec, ...]

    @property
    def name(self) -> str:
        return self.representative.name

    def __contains__(self, subgroup: object) -> bool:
        return subgroup in self.conjugates


class FixedDesignTable(BaseModel):
    """t[g] = number of tile designs fixed by g, for every g in R"""
    t: Dict[DihedralElement, int] = Field(..., description="Fixed-design counts per element")

    @field_validator("t")
    @classmethod
    def _nonnegative(cls, v: Dict[DihedralElement, int]) -> Dict[DihedralElement, int]:
        if DihedralElement.ID not in v:
            raise ValueError("t must be defined on id")
        for g, count in v.items():
            if count < 0:
                raise ValueError(f"t[{g.value}] must be nonnegative, got {count}")
        return v

    def __getitem__(self, g: DihedralElement) -> int:
        try:
            return self.t[g]
        except KeyError:
            raise GroupError(f"No fixed-design count for {g.value}; it is outside the tile set's group")

    @property
    def total(self) -> int:
        return self.t[DihedralElement.ID]


# ============================================================================
# ORACLE MODELS
# ============================================================================

class OracleBudget(BaseModel):
    """Caps on the tiling spaces the oracle agrees to enumerate"""
    max_states: int = Field(default=10_000_000, ge=1, description="Cap on |T|^(nm) for direct scans")
    max_flood: int = Field(default=1_000_000, ge=1, description="Cap on |T|^(nm) for flood-fill")
    override: bool = Field(default=False, description="Ignore both caps")


class TilingAssignment(BaseModel):
    """A tiling: one design index per cell, row-major"""
    model_config = ConfigDict(frozen=True)

    shape: GridShape
    cells: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_length(self) -> "TilingAssignment":
        if len(self.cells) != self.shape.cell_count:
            raise ValueError(
                f"expected {self.shape.cell_count} cells for {self.shape}, got {len(self.cells)}"
            )
        if any(d < 0 for d in self.cells):
            raise ValueError("design indices must be nonnegative")
        return self

    def design_at(self, c: Cell) -> int:
        return self.cells[self.shape.index(c)]

    def rows_top_down(self) -> List[Tuple[int, ...]]:
        """Rows from y = m-1 down to y = 0, the order they are drawn in"""
        n = self.shape.n
        return [self.cells[y * n:(y + 1) * n] for y in reversed(range(self.shape.m))]


# ============================================================================
# COUNTING REQUESTS AND RESULTS
# ============================================================================

class CountRequest(BaseModel):
    """Count tilings of an n x m surface up to R (and shifts, off the grid)"""
    n: int = Field(..., ge=1)
    m: int = Field(..., ge=1)
    R: SymmetryGroupSpec
    t: FixedDesignTable

    surface: Surface = Surface.GRID

    @model_validator(mode="after")
    def _check_group(self) -> "CountRequest":
        missing = [g.value for g in self.R.elements if g not in self.t.t]
        if missing:
            raise ValueError(f"t is undefined on {', '.join(sorted(missing))}")
        if not self.R.rectangular_ok:
            if self.surface == Surface.CYLINDER:
                raise ValueError("a cylinder only admits subgroups of D4")
            if self.n != self.m:
                raise ValueError(f"group {self.R.name} needs a square shape, got {self.n}x{self.m}")
        return self

    @property
    def shape(self) -> GridShape:
        return GridShape(n=self.n, m=self.m, surface=self.surface)


class GridCountRequest(CountRequest):
    surface: Literal[Surface.GRID] = Surface.GRID


class CylinderCountRequest(CountRequest):
    """n is the circumference (shifted), m the height"""
    surface: Literal[Surface.CYLINDER] = Surface.CYLINDER


class TorusCountRequest(CountRequest):
    surface: Literal[Surface.TORUS] = Surface.TORUS


class CountResult(BaseModel):
    """A Burnside count with its per-element terms"""
    surface: Surface
    n: int
    m: int
    group: str = Field(..., description="Canonical name of R")
    terms: Dict[str, int] = Field(..., description="Shift-summed fixed-point count per element of R")
    burnside_sum: int
    group_order: int = Field(..., description="|R| times the number of shifts")
    count: int


class SequenceRequest(BaseModel):
    """A family of counts emitted as a b-file"""
    surface: Surface
    square: bool = True
    group: str = "trivial"
    tiles: str = "two-color"
    n_min: int = Field(default=1, ge=1)
    n_max: int = Field(default=1, ge=1)
    m_min: Optional[int] = Field(default=None, ge=1)
    m_max: Optional[int] = Field(default=None, ge=1)
    offset: Optional[int] = Field(default=None, description="Index of the first term; defaults to n_min")
    transpose: bool = False

    @model_validator(mode="after")
    def _check_ranges(self) -> "SequenceRequest":
        if self.n_min > self.n_max:
            raise ValueError(f"empty n range {self.n_min}..{self.n_max}")
        if not self.square:
            lo = self.m_min if self.m_min is not None else self.n_min
            hi = self.m_max if self.m_max is not None else self.n_max
            if lo > hi:
                raise ValueError(f"empty m range {lo}..{hi}")
        return self

    def shapes(self) -> List[Tuple[int, int]]:
        """(n, m) pairs in emission order: n ascending, then m"""
        if self.square:
            return [(n, n) for n in range(self.n_min, self.n_max + 1)]
        lo = self.m_min if self.m_min is not None else self.n_min
        hi = self.m_max if self.m_max is not None else self.n_max
        return [(n, m) for n in range(self.n_min, self.n_max + 1) for m in range(lo, hi + 1)]

    def fixed_height(self) -> Optional[int]:
        """The one row count of a table family, None for square or multi-height families"""
        if self.square:
            return None
        heights = {m for _, m in self.shapes()}
        return heights.pop() if len(heights) == 1 else None


class CrosscheckRow(BaseModel):
    """One closed-form vs oracle comparison"""
    surface: Surface
    n: int
    m: int
    group: str
    tiles: str
    closed_form: Optional[int] = None
    oracle: Optional[int] = None
    status: Literal["PASS", "FAIL", "SKIPPED"]
    note: str = ""


# ============================================================================
# TILE-SET CONFIG FILES
# ============================================================================

class ExplicitTileSetConfig(BaseModel):
    """Tile set given as a full action table"""
    kind: Literal["explicit"]
    R: str = Field(..., description="Group the action table is written for")
    designs: List[str] = Field(..., min_length=1)
    action: Dict[str, Dict[str, str]] = Field(
        ..., description="design -> {element name -> image design}"
    )
    name: Optional[str] = None


class OrbitSpecTileSetConfig(BaseModel):
    """Tile set given only by its orbit census"""
    kind: Literal["orbit-spec"]
    R: str
    counts: Dict[str, int] = Field(..., description="stabilizer subgroup name -> number of orbits")
    name: Optional[str] = None

    @field_validator("counts")
    @classmethod
    def _nonnegative(cls, v: Dict[str, int]) -> Dict[str, int]:
        for key, count in v.items():
            if count < 0:
                raise ValueError(f"orbit count for {key} must be nonnegative")
        return v


TileSetConfig = Annotated[
    Union[ExplicitTileSetConfig, OrbitSpecTileSetConfig], Field(discriminator="kind")
]
