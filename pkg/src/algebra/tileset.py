"""
Tile-design sets as finite R-sets.

A tile set only matters to the counting formulas through t_g, the number
of designs fixed by each g in R, and t_g in turn only depends on the
orbit census: how many R-orbits have a stabilizer in each conjugacy class.
"""

from typing import Dict, List, Mapping, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.algebra.group import (
    ID,
    MUL_TABLE,
    class_of,
    conjugate_element,
    dihedral_mul,
    inverse,
    parse_group,
    subgroup,
    subgroup_classes,
)
from src.models.tiling_models import (
    DihedralElement,
    FixedDesignTable,
    SubgroupClass,
    SymmetryGroupSpec,
)
from src.utils.error_handler import GroupError, UnknownDesignError


class TileDesignSet(BaseModel):
    """
    A finite set of designs with a right action of R.

    The action table must cover exactly the elements of R and satisfy
    d*id = d and (d*g1)*g2 = d*(g1 g2); both are checked on construction.
    """
    model_config = ConfigDict(frozen=True)

    name: str = Field(default="custom")
    designs: Tuple[str, ...] = Field(..., min_length=1)
    action: Dict[str, Dict[DihedralElement, str]]
    ambient: SymmetryGroupSpec

    @model_validator(mode="after")
    def _check_action(self) -> "TileDesignSet":
        if len(set(self.designs)) != len(self.designs):
            raise ValueError("design identifiers must be unique")
        known = set(self.designs)
        if set(self.action) != known:
            extra = sorted(set(self.action) - known)
            missing = sorted(known - set(self.action))
            raise ValueError(f"action table keys differ from designs (extra {extra}, missing {missing})")

        for d in self.designs:
            row = self.action[d]
            if set(row) != self.ambient.elements:
                extra = sorted(g.value for g in set(row) - self.ambient.elements)
                missing = sorted(g.value for g in self.ambient.elements - set(row))
                raise ValueError(
                    f"design '{d}': action must list exactly the elements of {self.ambient.name}"
                    f" (extra {extra}, missing {missing})"
                )
            for g, image in row.items():
                if image not in known:
                    raise ValueError(f"design '{d}' maps under {g.value} to unknown design '{image}'")
            if row[ID] != d:
                raise ValueError(f"design '{d}' is not fixed by id")

        for d in self.designs:
            for g1 in self.ambient.elements:
                for g2 in self.ambient.elements:
                    lhs = self.action[self.action[d][g1]][g2]
                    rhs = self.action[d][MUL_TABLE[(g1, g2)]]
                    if lhs != rhs:
                        raise ValueError(
                            f"right-action law fails: ({d}*{g1.value})*{g2.value} = {lhs}"
                            f" but {d}*({g1.value}{g2.value}) = {rhs}"
                        )
        return self

    @classmethod
    def from_generator_images(
        cls,
        designs: List[str],
        images: Mapping[DihedralElement, Mapping[str, str]],
        name: str = "custom",
    ) -> "TileDesignSet":
        """
        Build the full table from the images of generators.

        Raises ValueError when the generator images do not define an
        action of the group they generate.
        """
        gens = list(images)
        ambient = subgroup(gens)
        table: Dict[DihedralElement, Dict[str, str]] = {ID: {d: d for d in designs}}
        frontier = [ID]
        while frontier:
            h = frontier.pop()
            for s in gens:
                hs = MUL_TABLE[(h, s)]
                mapped = {d: images[s][table[h][d]] for d in designs}
                if hs in table:
                    if table[hs] != mapped:
                        raise ValueError(f"generator images are inconsistent at {hs.value}")
                    continue
                table[hs] = mapped
                frontier.append(hs)

        action = {d: {g: table[g][d] for g in ambient.sorted_elements} for d in designs}
        return cls(name=name, designs=tuple(designs), action=action, ambient=ambient)

    @property
    def index(self) -> Dict[str, int]:
        return {d: i for i, d in enumerate(self.designs)}

    @property
    def size(self) -> int:
        return len(self.designs)

    def act(self, design: str, g: DihedralElement) -> str:
        try:
            row = self.action[design]
        except KeyError:
            raise UnknownDesignError(f"Design '{design}' is not in tile set '{self.name}'")
        try:
            return row[g]
        except KeyError:
            raise GroupError(f"Tile set '{self.name}' has no action of {g.value} (group {self.ambient.name})")

    def design_map(self, g: DihedralElement) -> List[int]:
        """dm[i] = index of designs[i]*g"""
        idx = self.index
        return [idx[self.act(d, g)] for d in self.designs]

    def restrict(self, R: SymmetryGroupSpec) -> "TileDesignSet":
        """The same designs viewed as an R-set for a subgroup R of the ambient group."""
        if R == self.ambient:
            return self
        if not R.issubset(self.ambient):
            raise GroupError(
                f"Tile set '{self.name}' is defined for {self.ambient.name}; {R.name} is not a subgroup of it"
            )
        action = {d: {g: self.action[d][g] for g in R.sorted_elements} for d in self.designs}
        return TileDesignSet(name=self.name, designs=self.designs, action=action, ambient=R)


class OrbitSpec(BaseModel):
    """
    Orbit census of an R-set: counts[S] orbits whose stabilizers lie in
    the conjugacy class represented by S.
    """
    model_config = ConfigDict(frozen=True)

    ambient: SymmetryGroupSpec
    counts: Dict[str, int] = Field(..., description="class representative name -> number of orbits")

    @model_validator(mode="after")
    def _check_keys(self) -> "OrbitSpec":
        names = {cls.name for cls in subgroup_classes(self.ambient)}
        for key, value in self.counts.items():
            if key not in names:
                raise ValueError(
                    f"'{key}' is not a class representative of {self.ambient.name}; expected one of {sorted(names)}"
                )
            if value < 0:
                raise ValueError(f"orbit count for '{key}' must be nonnegative")
        return self

    @classmethod
    def build(
        cls,
        R: Union[str, SymmetryGroupSpec],
        counts: Mapping[Union[str, SymmetryGroupSpec], int],
    ) -> "OrbitSpec":
        """Normalize stabilizer names (any conjugate, any alias) to class representatives."""
        R = parse_group(R)
        merged: Dict[str, int] = {}
        for key, value in counts.items():
            S = parse_group(key)
            if not S.issubset(R):
                raise GroupError(f"Stabilizer {S.name} is not a subgroup of {R.name}")
            rep = class_of(S, R).name
            merged[rep] = merged.get(rep, 0) + int(value)
        return cls(ambient=R, counts={k: v for k, v in merged.items() if v})

    def classes(self) -> List[Tuple[SubgroupClass, int]]:
        """(class, count) pairs in the ambient group's class order, zero counts included."""
        return [(c, self.counts.get(c.name, 0)) for c in subgroup_classes(self.ambient)]

    @property
    def orbit_count(self) -> int:
        return sum(self.counts.values())

    @property
    def design_count(self) -> int:
        return sum(count * (self.ambient.order // c.representative.order) for c, count in self.classes())

    def label(self) -> str:
        parts = [f"{c.name}:{count}" for c, count in self.classes() if count]
        return f"{self.ambient.name}[{' '.join(parts)}]" if parts else f"{self.ambient.name}[]"


TileSource = Union[TileDesignSet, OrbitSpec]


def orbit(design: str, ts: TileDesignSet) -> List[str]:
    """The R-orbit of a design, in order of first appearance along the elements of R."""
    seen: List[str] = []
    for g in ts.ambient.sorted_elements:
        image = ts.act(design, g)
        if image not in seen:
            seen.append(image)
    return seen


def stabilizer(design: str, ts: TileDesignSet) -> SymmetryGroupSpec:
    """{g in R : design*g = design}"""
    return subgroup(g for g in ts.ambient.sorted_elements if ts.act(design, g) == design)


def classify_orbits(ts: TileDesignSet) -> OrbitSpec:
    """Census of the R-orbits of ts by stabilizer conjugacy class."""
    remaining = list(ts.designs)
    counts: Dict[str, int] = {}
    while remaining:
        d = remaining[0]
        members = orbit(d, ts)
        S = stabilizer(d, ts)
        if len(members) * S.order != ts.ambient.order:
            raise ValueError(f"orbit-stabilizer fails for '{d}' in tile set '{ts.name}'")
        rep = class_of(S, ts.ambient).name
        counts[rep] = counts.get(rep, 0) + 1
        remaining = [x for x in remaining if x not in members]
    return OrbitSpec(ambient=ts.ambient, counts=counts)


def right_cosets(S: SymmetryGroupSpec, R: SymmetryGroupSpec) -> List[frozenset]:
    """Right cosets Sx of S in R, ordered by their first representative x."""
    cosets: List[frozenset] = []
    for x in R.sorted_elements:
        coset = frozenset(MUL_TABLE[(s, x)] for s in S.elements)
        if coset not in cosets:
            cosets.append(coset)
    return cosets


def _coset_fixed_count(S: SymmetryGroupSpec, R: SymmetryGroupSpec, g: DihedralElement) -> int:
    """Number of right cosets Sx with x g x^-1 in S, i.e. cosets fixed by g."""
    fixed = 0
    for coset in right_cosets(S, R):
        x = min(coset, key=lambda h: h.index)
        if conjugate_element(g, inverse(x)) in S:
            fixed += 1
    return fixed


def fixed_design_count(source: TileSource, g: DihedralElement) -> int:
    """t_g: designs fixed by g, read from an action table or reconstructed from an orbit census."""
    if g not in source.ambient:
        raise GroupError(f"{g.value} is not in {source.ambient.name}")
    if isinstance(source, TileDesignSet):
        return sum(1 for d in source.designs if source.act(d, g) == d)
    return sum(
        count * _coset_fixed_count(c.representative, source.ambient, g)
        for c, count in source.classes()
        if count
    )


def realize_orbit_spec(spec: OrbitSpec, name: Optional[str] = None) -> TileDesignSet:
    """
    A concrete R-set with the given census: each orbit is the coset space
    S\\R with the natural right action Sx*g = S(xg).
    """
    R = spec.ambient
    designs: List[str] = []
    cosets_of: Dict[str, frozenset] = {}
    for c, count in spec.classes():
        S = c.representative
        cosets = right_cosets(S, R)
        for j in range(count):
            for i, coset in enumerate(cosets):
                d = f"{S.name}#{j}.{i}" if S.order > 1 else f"free#{j}.{i}"
                designs.append(d)
                cosets_of[d] = coset

    by_coset: Dict[Tuple[str, frozenset], str] = {}
    for d, coset in cosets_of.items():
        by_coset[(d.rsplit(".", 1)[0], coset)] = d

    action: Dict[str, Dict[DihedralElement, str]] = {}
    for d, coset in cosets_of.items():
        prefix = d.rsplit(".", 1)[0]
        action[d] = {}
        for g in R.sorted_elements:
            moved = frozenset(dihedral_mul(h, g) for h in coset)
            action[d][g] = by_coset[(prefix, moved)]

    if not designs:
        raise GroupError("An orbit census with no orbits has no designs")
    return TileDesignSet(name=name or spec.label(), designs=tuple(designs), action=action, ambient=R)


def fixed_design_table(source: TileSource, R: Optional[SymmetryGroupSpec] = None) -> FixedDesignTable:
    """t_g for every g in R (default: the source's own group)."""
    R = R or source.ambient
    if not R.issubset(source.ambient):
        raise GroupError(f"{R.name} is not a subgroup of {source.ambient.name}")
    return FixedDesignTable(t={g: fixed_design_count(source, g) for g in R.sorted_elements})


def single_orbit_specs(R: SymmetryGroupSpec) -> List[OrbitSpec]:
    """One single-orbit census per stabilizer class of R."""
    return [OrbitSpec(ambient=R, counts={c.name: 1}) for c in subgroup_classes(R)]
