"""
Error handling utilities for the tiling census.
Every error carries the process exit code the CLI reports for it.
"""

from rich.console import Console
from functools import wraps
from typing import Callable, Iterable

console = Console(stderr=True)


class TilingError(Exception):
    """Base exception for tiling census errors"""
    exit_code = 1


class InvalidInputError(TilingError):
    """Raised when a CLI argument or value is invalid"""
    exit_code = 1


class GroupError(InvalidInputError):
    """Raised for unknown group/element names or groups invalid on a surface"""
    pass


class UnknownDesignError(InvalidInputError):
    """Raised when a design identifier is not part of a tile set"""
    pass


class ConfigError(TilingError):
    """Raised when a tile-set config file or a setting is malformed"""
    exit_code = 2


class CrosscheckFailure(TilingError):
    """Raised when a closed form disagrees with the oracle"""
    exit_code = 3


class FormulaIntegrityError(TilingError):
    """Raised when a Burnside sum or exponent is not integral"""
    exit_code = 3


class BudgetExceededError(TilingError):
    """Raised when the oracle refuses to enumerate a tiling space"""
    exit_code = 4


def handle_errors(func: Callable[..., int]) -> Callable[..., int]:
    """
    Decorator for CLI verbs: known errors become an exit code.

    Usage:
        @handle_errors
        def cmd_count(args) -> int:
            ...
    """
    @wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except BudgetExceededError as e:
            console.print(f"[bold yellow]⚠️  Budget refused:[/bold yellow] {e}")
            console.print("[dim]Use --force or TILING_BUDGET_OVERRIDE=true to enumerate anyway.[/dim]")
            return e.exit_code
        except ConfigError as e:
            console.print(f"[bold red]❌ Config Error:[/bold red] {e}")
            return e.exit_code
        except (CrosscheckFailure, FormulaIntegrityError) as e:
            console.print(f"[bold red]❌ Integrity Error:[/bold red] {e}")
            return e.exit_code
        except InvalidInputError as e:
            console.print(f"[bold red]❌ Input Error:[/bold red] {e}")
            return e.exit_code
        except Exception as e:
            console.print(f"[bold red]❌ Unexpected Error:[/bold red] {e}")
            console.print("[dim]Stack trace:[/dim]")
            import traceback
            console.print(f"[dim]{traceback.format_exc()}[/dim]")
            raise
    return wrapper


def validate_surface_group(surface: str, n: int, m: int, elements: Iterable[str]) -> None:
    """
    Check that a symmetry group may act on the given surface and shape.

    Square-only elements (quarter turns and diagonal reflections) need
    n == m, and never act on a cylinder.

    Raises:
        InvalidInputError for bad dimensions, GroupError for a bad group
    """
    if n < 1 or m < 1:
        raise InvalidInputError(f"Dimensions must be positive, got {n}x{m}")

    square_only = sorted({str(g) for g in elements} & {"r", "r3", "rf", "r3f"})
    if not square_only:
        return

    if surface == "cylinder":
        raise GroupError(
            f"Cylinders only admit subgroups of D4 = <r2,f>; got {', '.join(square_only)}"
        )
    if n != m:
        raise GroupError(
            f"Elements {', '.join(square_only)} need a square {surface}, got {n}x{m}"
        )
