"""
Tests for the closed-form vs oracle cross-check.
"""

import pytest
import sys
from pathlib import Path

# Add repo root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.evaluation.crosscheck import CrosscheckEvaluator, crosscheck_sweep
from src.models.tiling_models import OracleBudget, Surface
from src.utils.observability import get_tracker, reset_tracker


class TestConfigurations:
    """Test how sweeps are built"""

    def test_catalog_sweep(self):
        """Every valid group with every single-orbit census"""
        configs = CrosscheckEvaluator.configurations(["grid"], [1], [1], None, None)
        assert len({c.R.name for c in configs}) == 10
        assert all(c.source.orbit_count == 1 for c in configs)

    def test_invalid_groups_are_left_out(self):
        """Quarter turns are dropped on rectangles and cylinders"""
        configs = CrosscheckEvaluator.configurations(["cylinder"], [2], [2], ["C4", "D4"], ["two-color"])
        assert [c.R.name for c in configs] == ["r2,f"]
        configs = CrosscheckEvaluator.configurations(["grid"], [2], [3], ["D8"], ["two-color"])
        assert configs == []

    def test_tile_sets_not_carrying_the_group(self):
        """rect-twelve has no quarter turns, so D8 rows are skipped"""
        configs = CrosscheckEvaluator.configurations(["torus"], [2], [2], ["D8", "D4"], ["rect-twelve"])
        assert [c.R.name for c in configs] == ["r2,f"]

    def test_empty_sweep(self):
        """No shapes, no rows"""
        evaluator = CrosscheckEvaluator()
        assert evaluator.run(evaluator.configurations(["grid"], [], [], None, None)) == []


class TestSweeps:
    """Test sweep outcomes"""

    def test_small_sweep_passes(self):
        """Everything up to 2x2 on every surface agrees"""
        rows = crosscheck_sweep(max_n=2, max_m=2)
        assert rows
        assert {row.status for row in rows} == {"PASS"}

    def test_full_sweep_to_three(self):
        """Every surface, every valid group, every single-orbit census up to 3x3"""
        rows = crosscheck_sweep(max_n=3, max_m=3, budget=OracleBudget(override=True))
        assert len(rows) > 400
        assert CrosscheckEvaluator.summarize(rows) == {"PASS": len(rows), "FAIL": 0, "SKIPPED": 0}
        assert {row.surface for row in rows} == set(Surface)
        assert {(row.n, row.m) for row in rows} == {(n, m) for n in range(1, 4) for m in range(1, 4)}

    def test_named_tile_sets(self):
        """Built-in tile sets pass too"""
        rows = crosscheck_sweep(
            surfaces=["torus", "cylinder"], max_n=2, max_m=2, tiles=["truchet-diagonal", "rect-twelve"]
        )
        assert rows
        assert all(row.status == "PASS" for row in rows)

    def test_row_order_is_sweep_order(self):
        """Rows come back in configuration order"""
        evaluator = CrosscheckEvaluator()
        configs = evaluator.configurations(["torus", "grid"], [1, 2], [1], ["trivial"], ["two-color"])
        rows = evaluator.run(configs)
        assert [(r.surface, r.n, r.m) for r in rows] == [(c.surface, c.n, c.m) for c in configs]
        assert rows[0].surface == Surface.TORUS

    def test_corrupt_table_fails(self):
        """A phantom design in t[id] must be caught"""
        rows = crosscheck_sweep(surfaces=["grid", "torus"], max_n=2, max_m=2, corrupt=True)
        assert rows
        assert all(row.status == "FAIL" for row in rows)

    def test_failures_are_logged(self):
        """Each FAIL row is recorded as a tracker error with its configuration"""
        reset_tracker()
        rows = crosscheck_sweep(surfaces=["grid"], max_n=1, max_m=1, groups=["trivial"],
                                tiles=["two-color"], corrupt=True)
        errors = get_tracker().metrics["errors"]
        assert len(errors) == len(rows) == 1
        assert errors[0]["context"] == "grid 1x1 trivial two-color"
        reset_tracker()

    def test_over_budget_is_skipped(self):
        """Rows the oracle refuses are SKIPPED, not failed"""
        tight = OracleBudget(max_states=4, max_flood=4)
        rows = crosscheck_sweep(
            surfaces=["grid"], max_n=2, max_m=2, groups=["trivial"], tiles=["two-color"],
            budget=tight, method="direct", flood_limit=0,
        )
        statuses = {(r.n, r.m): r.status for r in rows}
        assert statuses[(1, 1)] == "PASS"
        assert statuses[(2, 2)] == "SKIPPED"

    def test_summary(self):
        """Counts per status"""
        rows = crosscheck_sweep(surfaces=["grid"], max_n=1, max_m=1, groups=["trivial"], tiles=["two-color"])
        assert CrosscheckEvaluator.summarize(rows) == {"PASS": 1, "FAIL": 0, "SKIPPED": 0}


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
