"""
Dihedral symmetry of grids, cylinders and tori.

Elements act on cells on the right: the element r^k f rotates by k
quarter turns and then flips, and g1*g2 means "apply g1, then g2". The
multiplication table is derived from 2x2 integer matrices acting on
centred, doubled coordinates (X, Y) = (2x - (n-1), 2y - (m-1)), so it is
never typed in by hand.

Shifted surfaces use the semidirect product (Z/n x Z/m) x| R with
    (v1, g1)(v2, g2) = (v1 + phi_g1(v2), g1 g2),   phi_g = M_g^-1.
"""

from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Tuple

from src.models.tiling_models import (
    Cell,
    DihedralElement,
    GridShape,
    SubgroupClass,
    Surface,
    SymmetryElement,
    SymmetryGroupSpec,
)
from src.utils.error_handler import GroupError, InvalidInputError, UnknownDesignError

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]

ELEMENTS: Tuple[DihedralElement, ...] = tuple(DihedralElement)
ID = DihedralElement.ID
R, R2, R3 = DihedralElement.R, DihedralElement.R2, DihedralElement.R3
F, RF, R2F, R3F = DihedralElement.F, DihedralElement.RF, DihedralElement.R2F, DihedralElement.R3F


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def _transpose(a: Matrix) -> Matrix:
    return ((a[0][0], a[1][0]), (a[0][1], a[1][1]))


_IDENTITY: Matrix = ((1, 0), (0, 1))
_QUARTER: Matrix = ((0, -1), (1, 0))   # (x, y) -> (n-1-y, x)
_FLIP: Matrix = ((-1, 0), (0, 1))      # (x, y) -> (n-1-x, y)


def _build_matrices() -> Dict[DihedralElement, Matrix]:
    rotations = [_IDENTITY]
    for _ in range(3):
        rotations.append(_matmul(_QUARTER, rotations[-1]))
    # right action: M(g1 g2) = M(g2) M(g1), so r^k f -> M_f M_r^k
    flips = [_matmul(_FLIP, rot) for rot in rotations]
    return dict(zip(ELEMENTS, rotations + flips))


MATRICES: Dict[DihedralElement, Matrix] = _build_matrices()
_BY_MATRIX = {mat: g for g, mat in MATRICES.items()}

MUL_TABLE: Dict[Tuple[DihedralElement, DihedralElement], DihedralElement] = {
    (g1, g2): _BY_MATRIX[_matmul(MATRICES[g2], MATRICES[g1])]
    for g1 in ELEMENTS
    for g2 in ELEMENTS
}

INVERSES: Dict[DihedralElement, DihedralElement] = {
    g: next(h for h in ELEMENTS if MUL_TABLE[(g, h)] == ID) for g in ELEMENTS
}


# ============================================================================
# D8 ARITHMETIC
# ============================================================================

def dihedral_mul(g1: DihedralElement, g2: DihedralElement) -> DihedralElement:
    """Product g1*g2: act by g1 first, then g2."""
    return MUL_TABLE[(g1, g2)]


def inverse(g: DihedralElement) -> DihedralElement:
    return INVERSES[g]


def power(g: DihedralElement, k: int) -> DihedralElement:
    result = ID
    for _ in range(k % element_order(g)):
        result = MUL_TABLE[(result, g)]
    return result


@lru_cache(maxsize=None)
def element_order(g: DihedralElement) -> int:
    k, h = 1, g
    while h != ID:
        h = MUL_TABLE[(h, g)]
        k += 1
    return k


def conjugate_element(g: DihedralElement, x: DihedralElement) -> DihedralElement:
    """x^-1 g x"""
    return MUL_TABLE[(MUL_TABLE[(INVERSES[x], g)], x)]


def parse_element(name) -> DihedralElement:
    """Element from its text name ("id", "r", ..., "r3f")."""
    if isinstance(name, DihedralElement):
        return name
    try:
        return DihedralElement(str(name).strip().lower())
    except ValueError:
        valid = ", ".join(g.value for g in ELEMENTS)
        raise GroupError(f"Unknown dihedral element '{name}' (expected one of: {valid})")


# ============================================================================
# SUBGROUPS
# ============================================================================

def closure(generators: Iterable[DihedralElement]) -> frozenset:
    elements = {ID}
    frontier = [ID]
    gens = list(generators)
    while frontier:
        h = frontier.pop()
        for s in gens:
            hs = MUL_TABLE[(h, s)]
            if hs not in elements:
                elements.add(hs)
                frontier.append(hs)
    return frozenset(elements)


@lru_cache(maxsize=None)
def _spec_for(elements: frozenset) -> SymmetryGroupSpec:
    if elements == frozenset({ID}):
        return SymmetryGroupSpec(generators=(), elements=elements, name="trivial")

    candidates = [g for g in ELEMENTS if g in elements and g != ID]
    for size in (1, 2, 3):
        for gens in combinations(candidates, size):
            if closure(gens) == elements:
                return SymmetryGroupSpec(
                    generators=gens,
                    elements=elements,
                    name=",".join(g.value for g in gens),
                )
    raise GroupError(f"{sorted(g.value for g in elements)} is not a subgroup of D8")


def subgroup(elements: Iterable[DihedralElement]) -> SymmetryGroupSpec:
    """Subgroup generated by the given elements, under its canonical name."""
    return _spec_for(closure(elements))


D8 = subgroup([R, F])
D4 = subgroup([R2, F])
C4 = subgroup([R])
TRIVIAL = subgroup([])

GROUP_ALIASES: Dict[str, SymmetryGroupSpec] = {
    "d8": D8,
    "d4": D4,
    "c4": C4,
    "trivial": TRIVIAL,
    "id": TRIVIAL,
    "c1": TRIVIAL,
}


def parse_group(name) -> SymmetryGroupSpec:
    """
    Group from an alias ("D8", "D4", "C4", "trivial") or a generator
    list such as "r2,f".
    """
    if isinstance(name, SymmetryGroupSpec):
        return name
    text = str(name).strip()
    if not text:
        raise GroupError("Empty group name")
    alias = GROUP_ALIASES.get(text.lower())
    if alias is not None:
        return alias
    gens = [parse_element(part) for part in text.split(",") if part.strip()]
    return subgroup(gens)


@lru_cache(maxsize=None)
def all_subgroups(R: SymmetryGroupSpec) -> Tuple[SymmetryGroupSpec, ...]:
    """Every subgroup of R, ordered by size and then by sorted element indices."""
    found = set()
    members = R.sorted_elements
    for a in members:
        for b in members:
            found.add(closure([a, b]))
    specs = [_spec_for(els) for els in found]
    return tuple(sorted(specs, key=lambda H: (H.order, H.key)))


def conjugate_subgroup(H: SymmetryGroupSpec, x: DihedralElement) -> SymmetryGroupSpec:
    """x^-1 H x"""
    return _spec_for(frozenset(conjugate_element(h, x) for h in H.elements))


@lru_cache(maxsize=None)
def subgroup_classes(R: SymmetryGroupSpec) -> Tuple[SubgroupClass, ...]:
    """
    Subgroups of R grouped into R-conjugacy classes.

    The representative of a class is its member with the least sorted
    element-index tuple.
    """
    classes = []
    seen = set()
    for H in all_subgroups(R):
        if H in seen:
            continue
        members = {conjugate_subgroup(H, x) for x in R.sorted_elements}
        seen |= members
        ordered = tuple(sorted(members, key=lambda K: K.key))
        classes.append(SubgroupClass(representative=ordered[0], conjugates=ordered))
    return tuple(classes)


def class_of(H: SymmetryGroupSpec, R: SymmetryGroupSpec) -> SubgroupClass:
    """The R-conjugacy class containing H."""
    for cls in subgroup_classes(R):
        if H in cls:
            return cls
    raise GroupError(f"{H.name} is not a subgroup of {R.name}")


def transpose_element(g: DihedralElement) -> DihedralElement:
    """Conjugate by the diagonal reflection rf, swapping the roles of x and y."""
    return conjugate_element(g, RF)


def transpose_group(R: SymmetryGroupSpec) -> SymmetryGroupSpec:
    return _spec_for(frozenset(transpose_element(g) for g in R.elements))


def surface_subgroups(surface: Surface, square: bool) -> Tuple[SymmetryGroupSpec, ...]:
    """Groups R that may act on the surface."""
    if square and surface != Surface.CYLINDER:
        return all_subgroups(D8)
    return all_subgroups(D4)


# ============================================================================
# ACTIONS ON CELLS
# ============================================================================

def _check_allowed(g: DihedralElement, shape: GridShape) -> None:
    if not shape.allows(g):
        if shape.surface == Surface.CYLINDER:
            raise GroupError(f"{g.value} is not a symmetry of a cylinder")
        raise GroupError(f"{g.value} needs a square shape, got {shape.n}x{shape.m}")


def make_element(
    shape: GridShape,
    g: DihedralElement = ID,
    shift_x: int = 0,
    shift_y: int = 0,
) -> SymmetryElement:
    """Checked symmetry element; shifts are reduced mod the shape."""
    g = parse_element(g)
    _check_allowed(g, shape)
    if shape.surface == Surface.GRID and (shift_x % shape.n or shift_y % shape.m):
        raise InvalidInputError("The grid has no shift symmetries")
    if shape.surface == Surface.CYLINDER and shift_y % shape.m:
        raise InvalidInputError("A cylinder only shifts columns")
    return SymmetryElement(shift_x=shift_x % shape.n, shift_y=shift_y % shape.m, g=g)


def act_cell(c: Cell, g: DihedralElement, shape: GridShape) -> Cell:
    """Right action of g on a cell."""
    _check_allowed(g, shape)
    (a, b), (cc, d) = MATRICES[g]
    n, m = shape.n, shape.m
    X, Y = 2 * c.x - (n - 1), 2 * c.y - (m - 1)
    return Cell((a * X + b * Y + n - 1) // 2, (cc * X + d * Y + m - 1) // 2)


def act_cell_sym(c: Cell, s: SymmetryElement, shape: GridShape) -> Cell:
    """Shift the cell, then act by the dihedral part."""
    shifted = Cell((c.x + s.shift_x) % shape.n, (c.y + s.shift_y) % shape.m)
    return act_cell(shifted, s.g, shape)


def phi(g: DihedralElement, v: Tuple[int, int], shape: GridShape) -> Tuple[int, int]:
    """Coordinate automorphism phi_g = M_g^-1 applied to a shift vector."""
    (a, b), (c, d) = _transpose(MATRICES[g])
    x, y = v
    return ((a * x + b * y) % shape.n, (c * x + d * y) % shape.m)


def semidirect_mul(s1: SymmetryElement, s2: SymmetryElement, shape: GridShape) -> SymmetryElement:
    """Product s1*s2 in the semidirect group: act by s1, then s2."""
    _check_allowed(s1.g, shape)
    _check_allowed(s2.g, shape)
    dx, dy = phi(s1.g, s2.shift, shape)
    return SymmetryElement(
        shift_x=(s1.shift_x + dx) % shape.n,
        shift_y=(s1.shift_y + dy) % shape.m,
        g=MUL_TABLE[(s1.g, s2.g)],
    )


def act_tile(tile: Tuple[Cell, str], s: SymmetryElement, tileset, shape: GridShape) -> Tuple[Cell, str]:
    """Move a placed tile: the cell by s, the design by the dihedral part only."""
    cell, design = tile
    if design not in tileset.index:
        raise UnknownDesignError(f"Design '{design}' is not in tile set '{tileset.name}'")
    return act_cell_sym(cell, s, shape), tileset.act(design, s.g)


def cell_permutation(s: SymmetryElement, shape: GridShape) -> List[int]:
    """perm[i] = row-major index of (cell i)*s."""
    return [shape.index(act_cell_sym(c, s, shape)) for c in shape.cells()]


def cell_orbits(s: SymmetryElement, shape: GridShape) -> List[List[Cell]]:
    """
    Partition of the cells into orbits under <s>, each listed as the
    trajectory of its least (row-major) cell.
    """
    perm = cell_permutation(s, shape)
    cells = shape.cells()
    seen = [False] * len(cells)
    orbits = []
    for start in range(len(cells)):
        if seen[start]:
            continue
        orbit = []
        i = start
        while not seen[i]:
            seen[i] = True
            orbit.append(cells[i])
            i = perm[i]
        orbits.append(orbit)
    return orbits


def shifts(shape: GridShape) -> List[Tuple[int, int]]:
    """Translations of the surface, row-major."""
    if shape.surface == Surface.GRID:
        return [(0, 0)]
    if shape.surface == Surface.CYLINDER:
        return [(a, 0) for a in range(shape.n)]
    return [(a, b) for b in range(shape.m) for a in range(shape.n)]


def symmetry_group(shape: GridShape, R: SymmetryGroupSpec) -> List[SymmetryElement]:
    """All elements of shifts x| R for the shape, dihedral part outermost."""
    for g in R.elements:
        _check_allowed(g, shape)
    return [
        SymmetryElement(shift_x=a, shift_y=b, g=g)
        for g in R.sorted_elements
        for a, b in shifts(shape)
    ]


def is_closed(group: List[SymmetryElement], shape: GridShape) -> bool:
    members = set(group)
    return all(semidirect_mul(s1, s2, shape) in members for s1 in group for s2 in group)



def sym_order(s: SymmetryElement, shape: GridShape) -> int:
    """Order of s in the semidirect group."""
    identity = SymmetryElement(g=ID)
    k, h = 1, s
    while h != identity:
        h = semidirect_mul(h, s, shape)
        k += 1
    return k
