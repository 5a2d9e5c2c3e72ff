"""
Built-in tile libraries.

Supported references:
- "two-color": black and white squares, fixed by every symmetry
- "truchet-diagonal": a square split along a diagonal, one half shaded,
  in its four orientations
- "rect-twelve": twelve designs for the rectangle group <r2, f> with
  orbits of every stabilizer type except <r2f>
- "colors:K": K plain colors
- "orbit:S": a single orbit whose stabilizer is conjugate to S, realized
  over the requested group
"""

from typing import Dict, List, Optional

from src.algebra.group import D8, F, R, R2
from src.algebra.tileset import OrbitSpec, TileDesignSet, realize_orbit_spec
from src.models.tiling_models import DihedralElement, SymmetryGroupSpec
from src.utils.error_handler import ConfigError, GroupError

BUILTIN_NAMES = ["two-color", "truchet-diagonal", "rect-twelve"]

# shaded corner -> glyph; the shaded triangle holds that corner
TRUCHET_CORNERS = ["nw", "ne", "se", "sw"]


def plain_colors(names: List[str], set_name: str) -> TileDesignSet:
    """Designs fixed by all of D8."""
    return TileDesignSet(
        name=set_name,
        designs=tuple(names),
        action={d: {g: d for g in D8.sorted_elements} for d in names},
        ambient=D8,
    )


def two_color() -> TileDesignSet:
    return plain_colors(["black", "white"], "two-color")


def truchet_diagonal() -> TileDesignSet:
    """Quarter turn: nw -> sw -> se -> ne -> nw. Flip x -> n-1-x: nw <-> ne, sw <-> se."""
    images = {
        R: {"nw": "sw", "sw": "se", "se": "ne", "ne": "nw"},
        F: {"nw": "ne", "ne": "nw", "sw": "se", "se": "sw"},
    }
    return TileDesignSet.from_generator_images(TRUCHET_CORNERS, images, name="truchet-diagonal")


def rect_twelve() -> TileDesignSet:
    """
    Twelve designs under <r2, f>: two fully symmetric designs, a U/D pair
    fixed by f, two pairs fixed by r2, and a free orbit of corners.
    """
    designs = [
        "black", "vertical-stripe",
        "u", "d",
        "rr0", "rr1", "rr2", "rr3",
        "nw", "ne", "se", "sw",
    ]
    images: Dict[DihedralElement, Dict[str, str]] = {
        F: {
            "black": "black", "vertical-stripe": "vertical-stripe",
            "u": "u", "d": "d",
            "rr0": "rr1", "rr1": "rr0", "rr2": "rr3", "rr3": "rr2",
            "nw": "ne", "ne": "nw", "se": "sw", "sw": "se",
        },
        R2: {
            "black": "black", "vertical-stripe": "vertical-stripe",
            "u": "d", "d": "u",
            "rr0": "rr0", "rr1": "rr1", "rr2": "rr2", "rr3": "rr3",
            "nw": "se", "se": "nw", "ne": "sw", "sw": "ne",
        },
    }
    return TileDesignSet.from_generator_images(designs, images, name="rect-twelve")


_BUILTINS = {
    "two-color": two_color,
    "truchet-diagonal": truchet_diagonal,
    "rect-twelve": rect_twelve,
}


def is_builtin(reference: str) -> bool:
    ref = reference.strip().lower()
    return ref in _BUILTINS or ref.startswith("colors:") or ref.startswith("orbit:")


def load_builtin(reference: str, R: Optional[SymmetryGroupSpec] = None) -> TileDesignSet:
    """
    Resolve a built-in reference.

    "orbit:S" needs the group R it is realized over; the other libraries
    are restricted to R when one is given.
    """
    ref = reference.strip()
    key = ref.lower()

    if key.startswith("orbit:"):
        if R is None:
            raise ConfigError(f"'{reference}' needs a group to be realized over")
        stab = ref.split(":", 1)[1]
        spec = OrbitSpec.build(R, {stab: 1})
        (rep,) = spec.counts
        return realize_orbit_spec(spec, name=f"orbit:{rep}")

    if key.startswith("colors:"):
        try:
            k = int(key.split(":", 1)[1])
        except ValueError:
            raise ConfigError(f"'{reference}': expected colors:K with an integer K")
        if k < 1:
            raise ConfigError(f"'{reference}': K must be positive")
        ts = plain_colors([f"c{i}" for i in range(k)], f"colors:{k}")
    elif key in _BUILTINS:
        ts = _BUILTINS[key]()
    else:
        raise ConfigError(
            f"Unknown tile set '{reference}'. Built-ins: {', '.join(BUILTIN_NAMES)}, colors:K, orbit:S"
        )

    if R is not None:
        if not R.issubset(ts.ambient):
            raise GroupError(f"Tile set '{ts.name}' only carries an action of {ts.ambient.name}, not {R.name}")
        ts = ts.restrict(R)
    return ts
