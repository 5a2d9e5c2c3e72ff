"""
Closed-form counts for the n x m cylinder.

Columns are shifted cyclically: n is the circumference, m the height. A
cylinder has no quarter turns or diagonal flips even when n == m, so
R <= D4. Each fxpt value is summed over all n shifts.
"""

from src.algebra.arith import divisors, euler_phi, exact_div, lcm
from src.algebra.group import F, ID, R2, R2F, parse_element, power
from src.counting.common import burnside_result, exponent
from src.models.tiling_models import CountResult, CylinderCountRequest, DihedralElement, FixedDesignTable
from src.utils.error_handler import GroupError


def fxpt_cylinder(g: DihedralElement, n: int, m: int, t: FixedDesignTable) -> int:
    """Sum over the shifts a in Z/n of the tilings fixed by (a, g)."""
    g = parse_element(g)
    if g.square_only:
        raise GroupError(f"{g.value} is not a symmetry of a cylinder")

    nm = n * m
    tid = t[ID]

    if g == ID:
        # phi(d) shifts have order d, each splitting the cells into nm/d cycles
        return sum(euler_phi(d) * tid ** exponent(nm, d, "id") for d in divisors(n))

    if g == R2:
        if m % 2 == 0:
            return n * tid ** exponent(nm, 2, "r2, m even")
        if n % 2 == 0:
            # odd shifts fix two cells of the middle row, even shifts none
            half = exact_div(n, 2, "r2 shift split")
            return half * (
                tid ** exponent(nm, 2, "r2, even shift")
                + tid ** exponent(nm - 2, 2, "r2, odd shift") * t[R2] ** 2
            )
        return n * tid ** exponent(nm - 1, 2, "r2, n and m odd") * t[R2]

    if g == F:
        if n % 2 == 0:
            half = exact_div(n, 2, "f shift split")
            return half * (
                tid ** exponent(nm, 2, "f, even shift")
                + tid ** exponent(nm - 2 * m, 2, "f, odd shift") * t[F] ** (2 * m)
            )
        # exactly one fixed cell in each row
        return n * tid ** exponent(nm - m, 2, "f, n odd") * t[F] ** m

    if g == R2F:
        total = 0
        for d in divisors(n):
            cycle = lcm(d, 2)
            if m % 2 == 0:
                term = tid ** exponent(nm, cycle, "r2f, m even")
            else:
                # the middle row is carried to itself by the shift alone
                term = (
                    tid ** exponent(nm - n, cycle, "r2f, m odd")
                    * t[power(R2F, d)] ** exact_div(n, d, "r2f middle row")
                )
            total += euler_phi(d) * term
        return total

    raise GroupError(f"No cylinder formula for {g}")


def cylinder_breakdown(req: CylinderCountRequest) -> CountResult:
    return burnside_result(req, fxpt_cylinder, shift_count=req.n)


def count_cylinder(req: CylinderCountRequest) -> int:
    """Distinct tilings of the cylinder: Burnside average over Z/n x| R."""
    return cylinder_breakdown(req).count
