"""
Brute-force ground truth for the closed forms.

Tilings of an n x m shape by k designs are encoded as base-k integers,
most significant digit at cell 0 (row-major), so ascending codes are
lexicographic order on tilings. Two fixed-count paths are kept separate
on purpose: a direct scan over every tiling and a product over the cell
orbits of the symmetry. Either can falsify the other.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from src.algebra.arith import exact_div
from src.algebra.group import (
    cell_orbits,
    cell_permutation,
    is_closed,
    power,
    shifts,
)
from src.algebra.tileset import OrbitSpec, TileDesignSet, fixed_design_count, realize_orbit_spec
from src.config import Config
from src.models.tiling_models import (
    DihedralElement,
    GridShape,
    OracleBudget,
    SymmetryElement,
    TilingAssignment,
)
from src.utils.error_handler import (
    BudgetExceededError,
    CrosscheckFailure,
    GroupError,
    InvalidInputError,
)
from src.utils.observability import get_tracker

SHARD_SIZE = 1 << 16
_INT64_LIMIT = 1 << 62

TileSource = Union[TileDesignSet, OrbitSpec]


def _explicit(ts: TileSource) -> TileDesignSet:
    return ts if isinstance(ts, TileDesignSet) else realize_orbit_spec(ts)


def state_count(shape: GridShape, ts: TileSource) -> int:
    """|T|^(nm), the size of the tiling space."""
    k = ts.size if isinstance(ts, TileDesignSet) else ts.design_count
    return k ** shape.cell_count


def _check_budget(states: int, cap: int, budget: OracleBudget, what: str) -> None:
    if states >= _INT64_LIMIT:
        raise BudgetExceededError(f"{what}: {states} tilings cannot be encoded in 64 bits")
    if states > cap and not budget.override:
        raise BudgetExceededError(f"{what}: {states:,} tilings exceed the budget of {cap:,}")


def _check_element(s: SymmetryElement, shape: GridShape, ts: TileDesignSet) -> None:
    if not shape.allows(s.g):
        raise GroupError(f"{s} is not a symmetry of the {shape}")
    if s.g not in ts.ambient:
        raise GroupError(f"Tile set '{ts.name}' has no action of {s.g.value}")


def _weights(nm: int, k: int) -> np.ndarray:
    return np.array([k ** (nm - 1 - i) for i in range(nm)], dtype=np.int64)


def _decode(codes: np.ndarray, weights: np.ndarray, k: int) -> np.ndarray:
    return (codes[:, None] // weights[None, :]) % k


def _scan_shard(start: int, stop: int, nm: int, k: int, perm: List[int], dm: List[int]) -> int:
    """Fixed tilings with codes in [start, stop): F(c*s) = F(c)*g for every cell c."""
    weights = _weights(nm, k)
    tiles = _decode(np.arange(start, stop, dtype=np.int64), weights, k)
    moved = tiles[:, perm]
    expected = np.asarray(dm, dtype=np.int64)[tiles]
    return int(np.count_nonzero(np.all(moved == expected, axis=1)))


def fixed_count_direct(
    s: SymmetryElement,
    shape: GridShape,
    ts: TileSource,
    budget: Optional[OracleBudget] = None,
    workers: Optional[int] = None,
) -> int:
    """
    Count tilings fixed by s by scanning every tiling.

    The space is sharded by code prefix; shards share nothing, so they may
    run in separate processes and their counts are summed.
    """
    ts = _explicit(ts)
    budget = budget or Config.budget()
    _check_element(s, shape, ts)
    nm, k = shape.cell_count, ts.size
    states = k ** nm
    _check_budget(states, budget.max_states, budget, f"direct scan of {shape}")

    perm = cell_permutation(s, shape)
    dm = ts.design_map(s.g)
    bounds = [(lo, min(lo + SHARD_SIZE, states)) for lo in range(0, states, SHARD_SIZE)]

    workers = workers or Config.WORKERS
    if workers > 1 and len(bounds) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_scan_shard, lo, hi, nm, k, perm, dm) for lo, hi in bounds]
            return sum(f.result() for f in futures)
    return sum(_scan_shard(lo, hi, nm, k, perm, dm) for lo, hi in bounds)


def fixed_count_orbit_formula(s: SymmetryElement, shape: GridShape, ts: TileSource) -> int:
    """Product over the cell orbits of s of the designs fixed by g^(orbit length)."""
    if not shape.allows(s.g):
        raise GroupError(f"{s} is not a symmetry of the {shape}")
    total = 1
    for cells in cell_orbits(s, shape):
        total *= fixed_design_count(ts, power(s.g, len(cells)))
        if total == 0:
            break
    return total


def per_shift_fixed_counts(
    g: DihedralElement,
    shape: GridShape,
    ts: TileSource,
    method: str = "orbit",
    budget: Optional[OracleBudget] = None,
) -> Dict[Tuple[int, int], int]:
    """Fixed tilings of ((a, b), g) for every shift; the values sum to the shift-summed fxpt."""
    out = {}
    for a, b in shifts(shape):
        s = SymmetryElement(shift_x=a, shift_y=b, g=g)
        if method == "direct":
            out[(a, b)] = fixed_count_direct(s, shape, ts, budget=budget)
        else:
            out[(a, b)] = fixed_count_orbit_formula(s, shape, ts)
    return out


# ============================================================================
# ORBITS OF TILINGS
# ============================================================================

class _TilingAction:
    """All group images of a tiling, computed in one numpy call."""

    def __init__(self, group: Sequence[SymmetryElement], shape: GridShape, ts: TileDesignSet):
        self.nm = shape.cell_count
        self.k = ts.size
        self.weights = _weights(self.nm, self.k)
        # (F*s)(c*s) = F(c)*g, so (F*s)[j] = dm[F[q[j]]] with q the inverse permutation
        inverse_perms = []
        for s in group:
            perm = cell_permutation(s, shape)
            q = [0] * self.nm
            for i, j in enumerate(perm):
                q[j] = i
            inverse_perms.append(q)
        self.q = np.array(inverse_perms, dtype=np.int64)
        self.dm = np.array([ts.design_map(s.g) for s in group], dtype=np.int64)

    def decode(self, code: int) -> np.ndarray:
        return _decode(np.array([code], dtype=np.int64), self.weights, self.k)[0]

    def image_codes(self, digits: np.ndarray) -> np.ndarray:
        images = np.take_along_axis(self.dm, digits[self.q], axis=1)
        return images @ self.weights


def _representative_codes(
    group: Sequence[SymmetryElement],
    shape: GridShape,
    ts: TileSource,
    budget: Optional[OracleBudget],
) -> List[int]:
    ts = _explicit(ts)
    budget = budget or Config.budget()
    for s in group:
        _check_element(s, shape, ts)
    states = ts.size ** shape.cell_count
    _check_budget(states, budget.max_flood, budget, f"flood-fill of {shape}")

    action = _TilingAction(group, shape, ts)
    visited = np.zeros(states, dtype=bool)
    reps = []
    for code in range(states):
        if visited[code]:
            continue
        reps.append(code)
        visited[action.image_codes(action.decode(code))] = True
    return reps


def count_orbits_flood(
    group: Sequence[SymmetryElement],
    shape: GridShape,
    ts: TileSource,
    budget: Optional[OracleBudget] = None,
) -> int:
    """Number of orbits found by sweeping the tiling space with a visited set."""
    return len(_representative_codes(group, shape, ts, budget))


def orbit_representatives(
    group: Sequence[SymmetryElement],
    shape: GridShape,
    ts: TileSource,
    budget: Optional[OracleBudget] = None,
) -> List[TilingAssignment]:
    """The lexicographically least tiling of every orbit, in ascending order."""
    ts = _explicit(ts)
    codes = _representative_codes(group, shape, ts, budget)
    weights = _weights(shape.cell_count, ts.size)
    digits = _decode(np.array(codes, dtype=np.int64), weights, ts.size)
    return [TilingAssignment(shape=shape, cells=tuple(int(d) for d in row)) for row in digits]


def canonical_form(
    tiling: TilingAssignment,
    group: Sequence[SymmetryElement],
    ts: TileSource,
) -> TilingAssignment:
    """The least tiling in the orbit of the given one."""
    ts = _explicit(ts)
    if any(d >= ts.size for d in tiling.cells):
        raise InvalidInputError(f"Tiling uses design indices beyond the {ts.size} designs of '{ts.name}'")
    action = _TilingAction(group, tiling.shape, ts)
    best = int(action.image_codes(np.array(tiling.cells, dtype=np.int64)).min())
    digits = action.decode(best)
    return TilingAssignment(shape=tiling.shape, cells=tuple(int(d) for d in digits))


def count_orbits_direct(
    group: Sequence[SymmetryElement],
    shape: GridShape,
    ts: TileSource,
    method: str = "auto",
    budget: Optional[OracleBudget] = None,
    compare_flood: bool = False,
) -> int:
    """
    Burnside average over an explicit list of symmetry elements.

    method "direct" scans every tiling per element, "orbit" uses the
    orbit-product count, "auto" scans below Config.DIRECT_THRESHOLD
    tilings. With compare_flood the result is also checked against an
    explicit orbit sweep.
    """
    group = list(group)
    if not group:
        raise InvalidInputError("The symmetry group is empty")
    if len(set(group)) != len(group):
        raise InvalidInputError("The symmetry group lists an element twice")
    if not is_closed(group, shape):
        raise InvalidInputError("The listed symmetry elements are not closed under composition")
    if method not in ("auto", "direct", "orbit"):
        raise InvalidInputError(f"Unknown oracle method '{method}'")

    budget = budget or Config.budget()
    states = state_count(shape, ts)
    if method == "auto":
        method = "direct" if states <= Config.DIRECT_THRESHOLD else "orbit"
    if method == "direct":
        ts = _explicit(ts)
        counts = [fixed_count_direct(s, shape, ts, budget=budget) for s in group]
    else:
        counts = [fixed_count_orbit_formula(s, shape, ts) for s in group]

    result = exact_div(sum(counts), len(group), f"oracle Burnside sum on {shape}")

    tracker = get_tracker()
    tracker.log_event("oracle", "completed", details=f"{shape}, {len(group)} elements, {method}: {result}")

    if compare_flood:
        flood = count_orbits_flood(group, shape, ts, budget=budget)
        if flood != result:
            raise CrosscheckFailure(
                f"Burnside average {result} disagrees with orbit sweep {flood} on {shape}"
            )
    return result
