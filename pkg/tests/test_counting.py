"""
Tests for the closed-form counts on grids, cylinders and tori.
"""

import pytest
import random
import sys
from pathlib import Path

# Add repo root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algebra.group import (
    C4,
    D4,
    D8,
    F,
    ID,
    R,
    R2,
    R2F,
    R3,
    R3F,
    RF,
    TRIVIAL,
    all_subgroups,
    subgroup_classes,
    surface_subgroups,
)
from src.algebra.tileset import OrbitSpec, fixed_design_table, single_orbit_specs
from src.counting.cylinder import count_cylinder, fxpt_cylinder
from src.counting.dispatcher import count_tilings, count_with_table, sequence_values, transpose_table
from src.counting.grid import count_grid, fxpt_grid
from src.counting.torus import count_torus, fxpt_torus
from src.models.tiling_models import (
    CylinderCountRequest,
    FixedDesignTable,
    GridCountRequest,
    Surface,
    TorusCountRequest,
)
from src.tools.tile_library import rect_twelve, truchet_diagonal, two_color
from src.utils.error_handler import GroupError, InvalidInputError


def two_color_table(R):
    return fixed_design_table(two_color(), R)


def random_census(rng, R):
    """A census over R with at least two orbits"""
    names = [c.name for c in subgroup_classes(R)]
    while True:
        spec = OrbitSpec.build(R, {name: rng.randint(0, 2) for name in names})
        if spec.orbit_count >= 2:
            return spec


class TestGrid:
    """Test counts on the bounded grid"""

    def test_truchet_square(self):
        """The 2x2 Truchet counts: 256 raw, 70 up to rotation, 43 up to D8"""
        ts = truchet_diagonal()
        assert count_tilings("grid", 2, 2, TRIVIAL, ts).count == 256
        assert count_tilings("grid", 2, 2, C4, ts).count == 70
        assert count_tilings("grid", 2, 2, D8, ts).count == 43

    def test_breakdown(self):
        """The per-element terms sum to the Burnside total"""
        result = count_tilings("grid", 2, 2, D8, truchet_diagonal())
        assert result.terms["id"] == 256
        assert result.terms["rf"] == 16
        assert result.burnside_sum == 344
        assert result.group_order == 8

    def test_two_color_full_symmetry(self):
        """n x n binary matrices up to rotation and reflection"""
        values = [count_with_table("grid", n, n, D8, two_color_table(D8)).count for n in range(1, 5)]
        assert values == [2, 6, 102, 8548]

    def test_two_color_rotations(self):
        """n x n binary matrices up to rotation"""
        values = [count_with_table("grid", n, n, C4, two_color_table(C4)).count for n in range(1, 5)]
        assert values == [2, 6, 140, 16456]

    def test_trivial_group(self):
        """Without symmetry every tiling is distinct"""
        for n in range(1, 4):
            assert count_with_table("grid", n, n, TRIVIAL, two_color_table(TRIVIAL)).count == 2 ** (n * n)

    def test_identity_term(self):
        """fxpt(id) is |T|^(nm)"""
        t = fixed_design_table(rect_twelve())
        assert fxpt_grid(ID, 3, 2, t) == 12 ** 6

    def test_rectangle_rejects_quarter_turns(self):
        """Quarter turns need a square grid"""
        with pytest.raises(GroupError):
            count_with_table("grid", 2, 3, C4, two_color_table(C4))

    def test_inverse_elements_agree(self):
        """A quarter turn and its inverse fix the same number of tilings"""
        rng = random.Random(11)
        for _ in range(5):
            t = fixed_design_table(random_census(rng, D8))
            for n in range(1, 9):
                assert fxpt_grid(R, n, n, t) == fxpt_grid(R3, n, n, t)


class TestCylinder:
    """Test counts on the cylinder"""

    def test_necklaces(self):
        """One row under shifts: binary necklaces"""
        t = two_color_table(TRIVIAL)
        assert count_with_table("cylinder", 2, 1, TRIVIAL, t).count == 3
        assert count_with_table("cylinder", 3, 1, TRIVIAL, t).count == 4
        assert count_with_table("cylinder", 6, 1, TRIVIAL, t).count == 14

    def test_bracelets(self):
        """One row under shifts and reversals: binary bracelets"""
        assert count_with_table("cylinder", 4, 1, D4, two_color_table(D4)).count == 6

    def test_fixed_point_sums(self):
        """Per-element sums over all shifts of one row"""
        t = two_color_table(D4)
        assert fxpt_cylinder(ID, 4, 1, t) == 24
        assert fxpt_cylinder(F, 4, 1, t) == 24
        assert fxpt_cylinder(R2, 3, 1, t) == 12

    def test_quarter_turn_rejected(self):
        """Quarter turns are never cylinder symmetries"""
        with pytest.raises(GroupError):
            fxpt_cylinder(R, 2, 2, two_color_table(D4))

    def test_circumference_one_is_the_grid(self):
        """With one column the shifts are trivial"""
        for R in surface_subgroups(Surface.CYLINDER, False):
            for spec in single_orbit_specs(R):
                t = fixed_design_table(spec, R)
                for m in range(1, 5):
                    assert (
                        count_with_table("cylinder", 1, m, R, t).count
                        == count_with_table("grid", 1, m, R, t).count
                    )

    def test_no_square_only_elements(self):
        """A cylinder never admits quarter turns"""
        with pytest.raises(GroupError):
            count_with_table("cylinder", 3, 3, C4, two_color_table(C4))

    def test_transpose(self):
        """Shifting rows of n x m is shifting columns of m x n, for symmetric designs"""
        t = two_color_table(D4)
        assert (
            count_with_table("cylinder", 2, 3, D4, t, transpose=True).count
            == count_with_table("cylinder", 3, 2, D4, t).count
        )

    def test_transpose_only_on_cylinders(self):
        """--transpose has no meaning elsewhere"""
        with pytest.raises(InvalidInputError):
            count_with_table("torus", 2, 3, D4, two_color_table(D4), transpose=True)


class TestTorus:
    """Test counts on the torus"""

    def test_truchet_torus(self):
        """17 Truchet tilings of the 2x2 torus up to everything"""
        result = count_tilings("torus", 2, 2, D8, truchet_diagonal())
        assert result.count == 17
        assert result.burnside_sum == 544
        assert result.group_order == 32

    def test_two_color_torus(self):
        """Small two-color tori"""
        assert count_with_table("torus", 1, 1, D8, two_color_table(D8)).count == 2
        assert count_with_table("torus", 2, 2, TRIVIAL, two_color_table(TRIVIAL)).count == 7
        assert count_with_table("torus", 2, 2, D8, two_color_table(D8)).count == 6

    def test_flip_terms_agree_on_square(self):
        """On a symmetric tile set f and r2f contribute alike on a square torus"""
        t = two_color_table(D4)
        for n in range(1, 6):
            assert fxpt_torus(F, n, n, t) == fxpt_torus(R2F, n, n, t)

    def test_inverse_elements_agree(self):
        """r and r3 agree, and so do the two diagonal flips"""
        rng = random.Random(12)
        for _ in range(5):
            t = fixed_design_table(random_census(rng, D8))
            for n in range(1, 9):
                assert fxpt_torus(R, n, n, t) == fxpt_torus(R3, n, n, t)
                assert fxpt_torus(RF, n, n, t) == fxpt_torus(R3F, n, n, t)

    def test_flip_terms_are_transposes(self):
        """f on n x m is r2f on m x n once the designs are transposed too"""
        rng = random.Random(13)
        tables = [fixed_design_table(rect_twelve())]
        tables += [fixed_design_table(random_census(rng, D4)) for _ in range(5)]
        assert tables[0][F] != tables[0][R2F]
        for t in tables:
            for n in range(1, 7):
                for m in range(1, 7):
                    assert fxpt_torus(F, n, m, t) == fxpt_torus(R2F, m, n, transpose_table(t))


class TestRequests:
    """Test the per-surface counters on request models"""

    def test_counters(self):
        """Each counter takes its own request type"""
        t = fixed_design_table(truchet_diagonal())
        assert count_grid(GridCountRequest(n=2, m=2, R=D8, t=t)) == 43
        assert count_torus(TorusCountRequest(n=2, m=2, R=D8, t=t)) == 17
        t2 = two_color_table(TRIVIAL)
        assert count_cylinder(CylinderCountRequest(n=2, m=1, R=TRIVIAL, t=t2)) == 3

    def test_request_rules(self):
        """Requests enforce the surface rules themselves"""
        with pytest.raises(ValueError):
            CylinderCountRequest(n=3, m=3, R=C4, t=two_color_table(C4))
        with pytest.raises(ValueError):
            GridCountRequest(n=2, m=3, R=D8, t=two_color_table(D8))
        with pytest.raises(ValueError):
            TorusCountRequest(n=2, m=2, R=D4, t=FixedDesignTable(t={ID: 2}))


class TestDispatch:
    """Test request validation and whole-range integrality"""

    def test_missing_table_entry(self):
        """Looking up an element outside the table's group is a group error"""
        with pytest.raises(GroupError):
            two_color_table(D4)[R]

    def test_incomplete_table(self):
        """t must cover every element of R"""
        with pytest.raises(InvalidInputError):
            count_with_table("grid", 2, 2, D4, FixedDesignTable(t={ID: 2}))

    def test_bad_dimensions(self):
        """Dimensions must be positive"""
        with pytest.raises(InvalidInputError):
            count_with_table("torus", 0, 2, TRIVIAL, two_color_table(TRIVIAL))

    def test_every_census_is_integral(self):
        """No Burnside sum leaves a remainder"""
        for surface in Surface:
            for n in range(1, 5):
                for m in range(1, 5):
                    for R in surface_subgroups(surface, n == m):
                        for spec in single_orbit_specs(R):
                            result = count_with_table(surface, n, m, R, fixed_design_table(spec, R))
                            assert result.count >= 1
                            assert result.burnside_sum == result.count * result.group_order

    def test_random_multi_orbit_censuses_are_integral(self):
        """Twenty random censuses on every surface up to 12 x 12"""
        rng = random.Random(2024)
        groups = list(all_subgroups(D8))
        for _ in range(20):
            R = rng.choice(groups)
            t = fixed_design_table(random_census(rng, R), R)
            for surface in Surface:
                for n in range(1, 13):
                    for m in range(1, 13):
                        if R not in surface_subgroups(surface, n == m):
                            continue
                        result = count_with_table(surface, n, m, R, t)
                        assert result.count >= 1
                        assert result.burnside_sum == result.count * result.group_order

    def test_sequence_values(self):
        """Square sequences agree with the single counts"""
        shapes = [(n, n) for n in range(1, 4)]
        values = sequence_values("torus", shapes, D8, two_color())
        assert values == [count_tilings("torus", n, n, D8, two_color()).count for n, _ in shapes]


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
