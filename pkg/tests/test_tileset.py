"""
Tests for tile-design sets, orbit censuses and tile-set configs.
"""

import pytest
import random
import sys
from itertools import product
from pathlib import Path

# Add repo root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algebra.group import (
    D4,
    D8,
    ELEMENTS,
    F,
    ID,
    R,
    R2,
    R2F,
    R3,
    R3F,
    RF,
    all_subgroups,
    dihedral_mul,
    subgroup,
    subgroup_classes,
)
from src.algebra.tileset import (
    OrbitSpec,
    TileDesignSet,
    classify_orbits,
    fixed_design_count,
    fixed_design_table,
    orbit,
    realize_orbit_spec,
    right_cosets,
    single_orbit_specs,
    stabilizer,
)
from src.counting.dispatcher import count_tilings
from src.models.tiling_models import Surface
from src.tools.tile_library import load_builtin, rect_twelve, truchet_diagonal, two_color
from src.tools.tileset_loader import load_tileset_config, parse_tileset_config, resolve_tiles
from src.utils.error_handler import ConfigError, GroupError, UnknownDesignError


def conjugate_realization(spec, rng):
    """The same census built on randomly chosen conjugate stabilizers, designs shuffled"""
    R = spec.ambient
    designs, action = [], {}
    for c, count in spec.classes():
        for j in range(count):
            S = rng.choice(c.conjugates)
            names = {coset: f"{c.name}/{j}/{i}" for i, coset in enumerate(right_cosets(S, R))}
            for coset, d in names.items():
                designs.append(d)
                action[d] = {g: names[frozenset(dihedral_mul(h, g) for h in coset)] for g in R.sorted_elements}
    rng.shuffle(designs)
    return TileDesignSet(name="conjugate", designs=tuple(designs), action=action, ambient=R)


class TestTileDesignSet:
    """Test action tables and their validation"""

    def test_truchet_action(self):
        """Quarter turn cycles the corners, f mirrors them"""
        ts = truchet_diagonal()
        assert ts.act("nw", R) == "sw"
        assert ts.act("nw", F) == "ne"
        assert ts.ambient == D8
        for d in ts.designs:
            assert ts.act(d, ID) == d

    def test_right_action_law_holds(self):
        """(d g1) g2 = d (g1 g2) on the built-ins"""
        ts = truchet_diagonal()
        for d in ts.designs:
            for g1, g2 in product(ELEMENTS, repeat=2):
                assert ts.act(ts.act(d, g1), g2) == ts.act(d, dihedral_mul(g1, g2))

    def test_rejects_identity_violation(self):
        """id must fix every design"""
        action = {
            "a": {ID: "b", R2: "a"},
            "b": {ID: "a", R2: "b"},
        }
        with pytest.raises(ValueError):
            TileDesignSet(designs=("a", "b"), action=action, ambient=subgroup([R2]))

    def test_rejects_missing_elements(self):
        """The table must list every element of the group"""
        with pytest.raises(ValueError):
            TileDesignSet(designs=("a",), action={"a": {ID: "a"}}, ambient=subgroup([F]))

    def test_rejects_inconsistent_generators(self):
        """A 3-cycle cannot be the image of a quarter turn"""
        with pytest.raises(ValueError):
            TileDesignSet.from_generator_images(["a", "b", "c"], {R: {"a": "b", "b": "c", "c": "a"}})

    def test_unknown_design(self):
        """Test that unknown designs raise"""
        with pytest.raises(UnknownDesignError):
            two_color().act("grey", ID)

    def test_restrict(self):
        """Restricting keeps the designs and drops the other elements"""
        ts = truchet_diagonal().restrict(D4)
        assert ts.ambient == D4
        assert ts.designs == truchet_diagonal().designs
        with pytest.raises(GroupError):
            rect_twelve().restrict(D8)


class TestOrbitCensus:
    """Test classify_orbits and the fixed-design table"""

    def test_truchet_is_one_diagonal_orbit(self):
        """Four designs, each fixed by a diagonal flip"""
        ts = truchet_diagonal()
        assert orbit("nw", ts) == ["nw", "sw", "se", "ne"]
        assert stabilizer("nw", ts).order == 2
        assert classify_orbits(ts).counts == {"rf": 1}

    def test_truchet_fixed_designs(self):
        """Only the diagonal flips fix a design, two each"""
        t = fixed_design_table(truchet_diagonal()).t
        assert t == {ID: 4, R: 0, R2: 0, R3: 0, F: 0, RF: 2, R2F: 0, R3F: 2}

    def test_rect_twelve(self):
        """Two symmetric designs, a U/D pair, two r2 pairs and a free orbit"""
        ts = rect_twelve()
        assert ts.size == 12
        spec = classify_orbits(ts)
        assert spec.counts == {"r2,f": 2, "f": 1, "r2": 2, "trivial": 1}
        assert spec.orbit_count == 6
        t = fixed_design_table(ts).t
        assert t == {ID: 12, R2: 6, F: 4, R2F: 2}

    def test_two_color_under_every_group(self):
        """Plain colors are fixed by everything"""
        for cls in subgroup_classes(D8):
            t = fixed_design_table(two_color(), cls.representative).t
            assert set(t.values()) == {2}


class TestOrbitSpec:
    """Test orbit censuses without explicit tables"""

    def test_build_normalizes_conjugates(self):
        """Any conjugate names the class representative"""
        spec = OrbitSpec.build("D8", {"r3f": 1, "r2f": 2, "f": 1})
        assert spec.counts == {"rf": 1, "f": 3}

    def test_build_rejects_foreign_stabilizer(self):
        """A stabilizer must lie in R"""
        with pytest.raises(GroupError):
            OrbitSpec.build("D4", {"r": 1})

    def test_design_count(self):
        """Each orbit has |R|/|S| designs"""
        spec = OrbitSpec.build(D8, {"trivial": 1, "r,f": 2, "r2": 1})
        assert spec.design_count == 8 + 2 + 4

    def test_realize_round_trip(self):
        """A realized census classifies back to itself with the same t"""
        for R_ in (D8, D4, subgroup([R])):
            classes = [c.name for c in subgroup_classes(R_)]
            for a, b in product(range(3), repeat=2):
                counts = {classes[0]: a, classes[-1]: b}
                if len(classes) > 2:
                    counts[classes[1]] = 1
                spec = OrbitSpec.build(R_, counts)
                if spec.orbit_count == 0:
                    continue
                ts = realize_orbit_spec(spec)
                assert classify_orbits(ts) == spec
                assert fixed_design_table(ts) == fixed_design_table(spec)

    def test_random_censuses(self):
        """Random censuses over D8 survive realize and classify"""
        rng = random.Random(20)
        names = [c.name for c in subgroup_classes(D8)]
        for _ in range(25):
            counts = {name: rng.randint(0, 2) for name in rng.sample(names, 3)}
            spec = OrbitSpec.build(D8, counts)
            if spec.orbit_count == 0:
                continue
            ts = realize_orbit_spec(spec)
            assert ts.size == spec.design_count
            assert classify_orbits(ts) == spec
            for g in ELEMENTS:
                assert fixed_design_count(ts, g) == fixed_design_count(spec, g)

    def test_single_orbit_specs(self):
        """One spec per class"""
        specs = single_orbit_specs(D8)
        assert len(specs) == 8
        assert all(spec.orbit_count == 1 for spec in specs)

    def test_table_depends_only_on_census(self):
        """The Truchet set and the abstract diagonal orbit share t"""
        spec = OrbitSpec.build(D8, {"rf": 1})
        assert fixed_design_table(spec) == fixed_design_table(truchet_diagonal())
        assert fixed_design_count(spec, RF) == 2

    def test_equal_census_gives_equal_counts(self):
        """Two explicit sets with the same census count alike on random shapes"""
        rng = random.Random(50)
        groups = list(all_subgroups(D8))
        for _ in range(50):
            R = rng.choice(groups)
            names = [c.name for c in subgroup_classes(R)]
            spec = OrbitSpec.build(R, {name: rng.randint(0, 1) for name in names})
            if spec.orbit_count == 0:
                spec = OrbitSpec.build(R, {rng.choice(names): 1})
            first = realize_orbit_spec(spec)
            second = conjugate_realization(spec, rng)
            assert first.designs != second.designs
            assert classify_orbits(first) == classify_orbits(second) == spec

            if R.rectangular_ok:
                surface = rng.choice(list(Surface))
                n, m = rng.randint(1, 5), rng.randint(1, 5)
            else:
                surface = rng.choice([Surface.GRID, Surface.TORUS])
                n = m = rng.randint(1, 5)
            assert (
                count_tilings(surface, n, m, R, first).count == count_tilings(surface, n, m, R, second).count
            ), (surface, n, m, R.name)

    def test_truchet_matches_its_census(self):
        """The Truchet set counts like the abstract diagonal orbit it realizes"""
        ts = truchet_diagonal()
        realized = realize_orbit_spec(classify_orbits(ts))
        for surface, n, m in [("grid", 3, 3), ("torus", 4, 4), ("cylinder", 5, 2)]:
            R = D8 if surface != "cylinder" else D4
            assert (
                count_tilings(surface, n, m, R, ts.restrict(R)).count
                == count_tilings(surface, n, m, R, realized.restrict(R)).count
            )

    def test_empty_census_has_no_designs(self):
        """Realizing nothing is an error"""
        with pytest.raises(GroupError):
            realize_orbit_spec(OrbitSpec(ambient=D8, counts={}))


class TestBuiltins:
    """Test built-in references"""

    def test_colors(self):
        """colors:K gives K fully symmetric designs"""
        ts = load_builtin("colors:3")
        assert ts.size == 3
        assert fixed_design_table(ts).t[R] == 3

    def test_orbit_reference(self):
        """orbit:S realizes one orbit over the requested group"""
        ts = load_builtin("orbit:r3f", D8)
        assert ts.name == "orbit:rf"
        assert ts.size == 4

    def test_bad_references(self):
        """Bad names are config errors; too large a group is a group error"""
        with pytest.raises(ConfigError):
            load_builtin("stripes")
        with pytest.raises(ConfigError):
            load_builtin("colors:x")
        with pytest.raises(ConfigError):
            load_builtin("orbit:f")
        with pytest.raises(GroupError):
            load_builtin("rect-twelve", D8)


class TestConfigFiles:
    """Test YAML tile-set configs"""

    def test_explicit_config(self, tmp_path):
        """An explicit action table loads as a tile set"""
        path = tmp_path / "updown.yaml"
        path.write_text(
            "kind: explicit\n"
            "R: \"r2,f\"\n"
            "designs: [u, d]\n"
            "action:\n"
            "  u: {id: u, r2: d, f: u, r2f: d}\n"
            "  d: {id: d, r2: u, f: d, r2f: u}\n"
        )
        ts = load_tileset_config(path)
        assert isinstance(ts, TileDesignSet)
        assert ts.name == "updown"
        assert classify_orbits(ts).counts == {"f": 1}

    def test_orbit_spec_config(self, tmp_path):
        """An orbit-spec config resolves to a realized tile set"""
        path = tmp_path / "diag.yaml"
        path.write_text('kind: orbit-spec\nR: D8\ncounts: {"rf": 1, "r,f": 2}\n')
        ts = resolve_tiles(str(path), D8)
        assert ts.size == 6
        assert fixed_design_table(ts).t[RF] == 4

    def test_json_config(self, tmp_path):
        """JSON is read through the YAML loader"""
        path = tmp_path / "two.json"
        path.write_text('{"kind": "orbit-spec", "R": "D4", "counts": {"r2,f": 2}}')
        assert resolve_tiles(str(path)).size == 2

    def test_malformed_configs(self, tmp_path):
        """Every malformed config is a ConfigError"""
        with pytest.raises(ConfigError):
            parse_tileset_config({"kind": "explicit", "R": "f", "designs": ["a"], "action": {"a": {"id": "b"}}})
        with pytest.raises(ConfigError):
            parse_tileset_config({"kind": "orbit-spec", "R": "D8", "counts": {}})
        with pytest.raises(ConfigError):
            parse_tileset_config({"kind": "mystery", "R": "D8"})
        with pytest.raises(ConfigError):
            parse_tileset_config({"kind": "orbit-spec", "R": "D8", "counts": {"r9": 1}})

        bad = tmp_path / "bad.yaml"
        bad.write_text("kind: [unclosed\n")
        with pytest.raises(ConfigError):
            load_tileset_config(bad)
        with pytest.raises(ConfigError):
            resolve_tiles(str(tmp_path / "missing.yaml"))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
