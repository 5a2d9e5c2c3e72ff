"""Shared pieces of the closed-form counters."""

from typing import Callable, Dict

from src.algebra.arith import exact_div
from src.models.tiling_models import CountRequest, CountResult, DihedralElement

FxptFunction = Callable[[DihedralElement, int, int, object], int]


def exponent(numerator: int, denominator: int, context: str) -> int:
    """An exponent such as nm/2; a fractional exponent is a formula bug."""
    return exact_div(numerator, denominator, f"exponent of {context}")


def burnside_result(req: CountRequest, fxpt: FxptFunction, shift_count: int) -> CountResult:
    """Per-element terms, their sum, and the asserted orbit count."""
    terms: Dict[str, int] = {
        g.value: fxpt(g, req.n, req.m, req.t) for g in req.R.sorted_elements
    }
    total = sum(terms.values())
    order = shift_count * req.R.order
    count = exact_div(total, order, f"{req.surface.value} {req.n}x{req.m} under {req.R.name}")
    return CountResult(
        surface=req.surface,
        n=req.n,
        m=req.m,
        group=req.R.name,
        terms=terms,
        burnside_sum=total,
        group_order=order,
        count=count,
    )
