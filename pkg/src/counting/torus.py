"""
Closed-form counts for the n x m torus (R <= D4) and the n x n torus (R <= D8).

Rows and columns are both shifted; each fxpt value is summed over all nm
shifts. The branches follow the cell-orbit census of ((a, b), g):
fixed cells, two-cycles and longer cycles each contribute the number of
designs fixed by the matching power of g.
"""

from src.algebra.arith import divisors, euler_phi, exact_div, lcm
from src.algebra.group import F, ID, R, R2, R2F, R3, R3F, RF, parse_element, power
from src.counting.common import burnside_result, exponent
from src.models.tiling_models import CountResult, DihedralElement, FixedDesignTable, TorusCountRequest
from src.utils.error_handler import GroupError


def _flip_sum(g: DihedralElement, flipped: int, other: int, t: FixedDesignTable) -> int:
    """
    Shift-summed count for a reflection reversing one axis.

    flipped is the length of the reversed axis, other the length of the
    axis that is only shifted.
    """
    nm = flipped * other
    tid = t[ID]
    total = 0
    for c in divisors(other):
        cycle = lcm(2, c)
        fixed = t[power(g, c)]
        if flipped % 2 == 0:
            total += euler_phi(c) * (
                tid ** exponent(nm, cycle, f"{g.value}, even axis")
                + tid ** exponent((flipped - 2) * other, cycle, f"{g.value}, even axis, odd shift")
                * fixed ** exact_div(2 * other, c, f"{g.value} fixed columns")
            )
        else:
            total += euler_phi(c) * (
                tid ** exponent((flipped - 1) * other, cycle, f"{g.value}, odd axis")
                * fixed ** exact_div(other, c, f"{g.value} fixed column")
            )
    if flipped % 2 == 0:
        return exact_div(flipped, 2, f"{g.value} shift split") * total
    return flipped * total


def fxpt_torus(g: DihedralElement, n: int, m: int, t: FixedDesignTable) -> int:
    """Sum over the shifts (a, b) of the tilings fixed by ((a, b), g)."""
    g = parse_element(g)
    if g.square_only and n != m:
        raise GroupError(f"{g.value} is not a symmetry of the {n}x{m} torus")

    nm = n * m
    tid = t[ID]

    if g == ID:
        return sum(
            euler_phi(c) * euler_phi(d) * tid ** exponent(nm, lcm(c, d), "id")
            for c in divisors(n)
            for d in divisors(m)
        )

    if g == R2:
        if n % 2 == 0 and m % 2 == 0:
            # a quarter of the shifts have exactly 4 fixed cells, the rest none
            quarter = exact_div(nm, 4, "r2 shift split")
            return quarter * (
                3 * tid ** exponent(nm, 2, "r2, no fixed cell")
                + tid ** (exponent(nm, 2, "r2, four fixed cells") - 2) * t[R2] ** 4
            )
        if n % 2 == 1 and m % 2 == 1:
            return nm * tid ** exponent(nm - 1, 2, "r2, odd") * t[R2]
        half = exact_div(nm, 2, "r2 shift split")
        return half * (
            tid ** exponent(nm, 2, "r2, no fixed cell")
            + tid ** (exponent(nm, 2, "r2, two fixed cells") - 1) * t[R2] ** 2
        )

    if g == F:
        return _flip_sum(F, n, m, t)

    if g == R2F:
        # conjugate to f with the axes exchanged
        return _flip_sum(R2F, m, n, t)

    if g in (R, R3):
        if n % 2 == 1:
            return nm * tid ** exponent(nm - 1, 4, f"{g.value}, n odd") * t[g]
        # half the shifts: 2 fixed cells, 1 two-cycle, the rest four-cycles
        half = exact_div(nm, 2, f"{g.value} shift split")
        return half * (
            tid ** exponent(nm, 4, f"{g.value}, no fixed cell")
            + tid ** exponent(nm - 4, 4, f"{g.value}, two fixed cells") * t[g] ** 2 * t[R2]
        )

    if g in (RF, R3F):
        total = 0
        for d in divisors(n):
            if d % 2 == 1:
                term = (
                    tid ** exponent(nm - n, 2 * d, f"{g.value}, odd d")
                    * t[g] ** exact_div(n, d, f"{g.value} diagonal")
                )
            else:
                term = tid ** exponent(nm, 2 * d, f"{g.value}, even d")
            total += euler_phi(d) * term
        return n * total

    raise GroupError(f"No torus formula for {g}")


def torus_breakdown(req: TorusCountRequest) -> CountResult:
    return burnside_result(req, fxpt_torus, shift_count=req.n * req.m)


def count_torus(req: TorusCountRequest) -> int:
    """Distinct tilings of the torus: Burnside average over (Z/n x Z/m) x| R."""
    return torus_breakdown(req).count
