"""
Closed-form counts for the n x m grid (R <= D4) and the n x n grid (R <= D8).

Every fixed-point count is a product over the cell orbits of g: an orbit
of length L contributes the number of designs fixed by g^L.
"""

from src.algebra.group import F, ID, R, R2, R2F, R3, R3F, RF, parse_element
from src.counting.common import burnside_result, exponent
from src.models.tiling_models import CountResult, DihedralElement, FixedDesignTable, GridCountRequest
from src.utils.error_handler import GroupError


def fxpt_grid(g: DihedralElement, n: int, m: int, t: FixedDesignTable) -> int:
    """Number of tilings of the n x m grid fixed by g."""
    g = parse_element(g)
    if g.square_only and n != m:
        raise GroupError(f"{g.value} is not a symmetry of the {n}x{m} grid")

    nm = n * m
    tid = t[ID]

    if g == ID:
        return tid ** nm

    if g == R2:
        if nm % 2 == 0:
            return tid ** exponent(nm, 2, "r2, nm even")
        # centre cell is fixed
        return tid ** exponent(nm - 1, 2, "r2, nm odd") * t[R2]

    if g == F:
        if n % 2 == 0:
            return tid ** exponent(nm, 2, "f, n even")
        # middle column is fixed
        return tid ** exponent(m * (n - 1), 2, "f, n odd") * t[F] ** m

    if g == R2F:
        if m % 2 == 0:
            return tid ** exponent(nm, 2, "r2f, m even")
        return tid ** exponent(n * (m - 1), 2, "r2f, m odd") * t[R2F] ** n

    if g in (R, R3):
        if n % 2 == 0:
            return tid ** exponent(n * n, 4, f"{g.value}, n even")
        return tid ** exponent(n * n - 1, 4, f"{g.value}, n odd") * t[g]

    # rf, r3f: the n diagonal cells are fixed, the rest pair up
    if g in (RF, R3F):
        return tid ** exponent(n * n - n, 2, g.value) * t[g] ** n

    raise GroupError(f"No grid formula for {g}")


def grid_breakdown(req: GridCountRequest) -> CountResult:
    return burnside_result(req, fxpt_grid, shift_count=1)


def count_grid(req: GridCountRequest) -> int:
    """Distinct tilings of the grid up to R: the Burnside average over R."""
    return grid_breakdown(req).count
