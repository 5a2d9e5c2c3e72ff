"""
Routes a (surface, n, m, R, tile source) request to the matching closed form.
"""

from typing import Union

from src.algebra.group import parse_group, transpose_element, transpose_group
from src.algebra.tileset import OrbitSpec, TileDesignSet, fixed_design_table
from src.counting.cylinder import cylinder_breakdown
from src.counting.grid import grid_breakdown
from src.counting.torus import torus_breakdown
from src.models.tiling_models import (
    CountResult,
    CylinderCountRequest,
    FixedDesignTable,
    GridCountRequest,
    Surface,
    SymmetryGroupSpec,
    TorusCountRequest,
)
from src.utils.error_handler import InvalidInputError, validate_surface_group
from src.utils.observability import get_tracker

_REQUESTS = {
    Surface.GRID: (GridCountRequest, grid_breakdown),
    Surface.CYLINDER: (CylinderCountRequest, cylinder_breakdown),
    Surface.TORUS: (TorusCountRequest, torus_breakdown),
}


def transpose_table(t: FixedDesignTable) -> FixedDesignTable:
    """The table of the same designs after exchanging the x and y axes."""
    return FixedDesignTable(t={transpose_element(g): count for g, count in t.t.items()})


def count_with_table(
    surface: Union[str, Surface],
    n: int,
    m: int,
    R: Union[str, SymmetryGroupSpec],
    t: FixedDesignTable,
    transpose: bool = False,
) -> CountResult:
    """
    Closed-form count from a fixed-design table.

    With transpose=True a cylinder shifts its rows instead of its columns:
    the shape, R and t are carried over by the diagonal reflection.
    """
    surface = Surface(surface)
    R = parse_group(R)
    validate_surface_group(surface.value, n, m, (g.value for g in R.elements))
    if transpose:
        if surface != Surface.CYLINDER:
            raise InvalidInputError("--transpose only applies to cylinders")
        n, m = m, n
        R = transpose_group(R)
        t = transpose_table(t)

    request_cls, breakdown = _REQUESTS[surface]
    try:
        req = request_cls(n=n, m=m, R=R, t=t)
    except ValueError as e:
        raise InvalidInputError(str(e))

    tracker = get_tracker()
    tracker.start_timer(f"{surface.value} {n}x{m}")
    result = breakdown(req)
    tracker.log_event(
        "closed-form",
        "completed",
        details=f"{surface.value} {n}x{m} under {R.name}: {result.count}",
        duration=tracker.end_timer(f"{surface.value} {n}x{m}"),
    )
    return result


def count_tilings(
    surface: Union[str, Surface],
    n: int,
    m: int,
    R: Union[str, SymmetryGroupSpec],
    source: Union[TileDesignSet, OrbitSpec],
    transpose: bool = False,
) -> CountResult:
    """Closed-form count for a tile set or orbit census (its group must contain R)."""
    R = parse_group(R)
    return count_with_table(surface, n, m, R, fixed_design_table(source, R), transpose=transpose)


def sequence_values(
    surface: Union[str, Surface],
    shapes,
    R: Union[str, SymmetryGroupSpec],
    source: Union[TileDesignSet, OrbitSpec],
    transpose: bool = False,
) -> list:
    """Counts for each (n, m) in order."""
    R = parse_group(R)
    t = fixed_design_table(source, R)
    return [count_with_table(surface, n, m, R, t, transpose=transpose).count for n, m in shapes]
