"""
Tests for the number-theoretic helpers.
Run with: python3 -m pytest tests/
"""

import pytest
import sys
from collections import Counter
from pathlib import Path

import sympy

# Add repo root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.algebra.arith import (
    burnside_average,
    divisors,
    euler_phi,
    exact_div,
    flip_solutions,
    lcm,
    minimal_order,
)
from src.utils.error_handler import FormulaIntegrityError, InvalidInputError


class TestDivisors:
    """Test divisor enumeration"""

    def test_small_values(self):
        """Test a few hand-checked divisor lists"""
        assert divisors(1) == [1]
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert divisors(49) == [1, 7, 49]

    def test_matches_sympy(self):
        """Test against sympy for n up to 200"""
        for n in range(1, 201):
            assert divisors(n) == [int(d) for d in sympy.divisors(n)]

    def test_rejects_nonpositive(self):
        """Test that n < 1 is an input error"""
        with pytest.raises(InvalidInputError):
            divisors(0)


class TestEulerPhi:
    """Test Euler's totient"""

    def test_matches_sympy(self):
        """Test against sympy for n up to 200"""
        for n in range(1, 201):
            assert euler_phi(n) == int(sympy.totient(n))

    def test_divisor_sum_identity(self):
        """Sum of phi(d) over d | n is n"""
        for n in range(1, 65):
            assert sum(euler_phi(d) for d in divisors(n)) == n

    def test_rejects_nonpositive(self):
        """Test that n < 1 is an input error"""
        with pytest.raises(InvalidInputError):
            euler_phi(-3)


class TestFlipSolutions:
    """Test the solutions of 2x = -1 - a (mod n)"""

    def test_matches_brute_force(self):
        """Test every residue a for n up to 64"""
        for n in range(1, 65):
            for a in range(n):
                expected = {x for x in range(n) if (2 * x + 1 + a) % n == 0}
                assert flip_solutions(n, a).solutions == expected

    def test_solution_counts(self):
        """One solution for odd n; two or none for even n by the parity of a"""
        assert len(flip_solutions(5, 2).solutions) == 1
        assert len(flip_solutions(6, 1).solutions) == 2
        assert len(flip_solutions(6, 2).solutions) == 0

    def test_rejects_out_of_range_shift(self):
        """Test that the shift must be a residue"""
        with pytest.raises(InvalidInputError):
            flip_solutions(4, 4)


class TestOrders:
    """Test lcm and minimal order"""

    def test_lcm(self):
        """Test lcm"""
        assert lcm(4, 6) == 12
        assert lcm(2, 1) == 2

    def test_minimal_order(self):
        """Least d with d*a = 0 mod n, checked by brute force"""
        for n in range(1, 40):
            for a in range(n):
                expected = next(d for d in range(1, n + 1) if (d * a) % n == 0)
                assert minimal_order(a, n) == expected

    def test_orders_are_counted_by_totient(self):
        """phi(d) residues mod n have order exactly d, for every d | n"""
        for n in range(1, 65):
            by_order = Counter(minimal_order(a, n) for a in range(n))
            assert by_order == {d: euler_phi(d) for d in divisors(n)}, n


class TestExactDivision:
    """Test the integrality guard"""

    def test_exact(self):
        """Test exact quotients"""
        assert exact_div(344, 8) == 43
        assert burnside_average([16, 4, 4, 4], 4) == 7

    def test_remainder_raises(self):
        """Test that a remainder is a formula bug"""
        with pytest.raises(FormulaIntegrityError):
            exact_div(345, 8, "grid 2x2")

    def test_error_exit_code(self):
        """Test the exit code carried by the error"""
        with pytest.raises(FormulaIntegrityError) as info:
            burnside_average([1, 2], 2)
        assert info.value.exit_code == 3


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
