#!/usr/bin/env python3
"""
Tiling census - command line front end.

Counts tilings of grids, cylinders and tori up to symmetry, emits
sequences as b-files, cross-checks the closed forms against brute force
and renders galleries of orbit representatives.

Usage:
    python3 -m src.main count --surface grid --n 2 --m 2 --group D8 --tiles truchet-diagonal
    python3 -m src.main sequence --surface torus --group D8 --tiles two-color --n-max 4
    python3 -m src.main crosscheck --max-n 3 --max-m 3
    python3 -m src.main render --surface torus --n 2 --group D8 --tiles truchet-diagonal --format svg --out t.svg
    python3 -m src.main tileset-info --tiles rect-twelve --group D4
    python3 -m src.main catalog --surface torus --terms 4
"""

import argparse
import sys
from typing import List, Optional

from rich.console import Console
from rich.table import Table

from src.algebra.group import parse_group, surface_subgroups, symmetry_group
from src.algebra.tileset import classify_orbits, fixed_design_table, single_orbit_specs
from src.config import Config
from src.counting.dispatcher import count_tilings, count_with_table, sequence_values
from src.evaluation.crosscheck import CrosscheckEvaluator
from src.evaluation.oracle import orbit_representatives
from src.models.tiling_models import GridShape, SequenceRequest, Surface
from src.tools.bfile import (
    MappedSequence,
    build_bfile,
    find_mapping,
    load_mapping,
    published_offset,
    write_bfile,
)
from src.tools.gallery_formatter import GalleryFormatter
from src.tools.tileset_loader import resolve_tiles
from src.utils.error_handler import (
    CrosscheckFailure,
    InvalidInputError,
    handle_errors,
    validate_surface_group,
)
from src.utils.observability import get_tracker

console = Console()
err_console = Console(stderr=True)

SURFACES = [s.value for s in Surface]


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with code 1 like every other input error"""

    def error(self, message):
        raise InvalidInputError(message)


def _shape_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--surface", choices=SURFACES, default="grid", help="Surface to tile")
    p.add_argument("--n", type=int, required=True, help="Columns (the cylinder's circumference)")
    p.add_argument("--m", type=int, default=None, help="Rows (defaults to n)")
    p.add_argument("--group", default="trivial", help='Symmetry group: D8, D4, C4, trivial or generators like "r2,f"')
    p.add_argument("--tiles", default="two-color", help="Built-in tile set or a YAML/JSON config file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="tiling-census",
        description="Count tilings of grids, cylinders and tori up to symmetry",
    )
    parser.add_argument("--metrics", action="store_true", help="Show run metrics and save them to the metrics directory")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="Count distinct tilings")
    _shape_args(p)
    p.add_argument("--breakdown", action="store_true", help="Also print the per-element fixed-point terms")
    p.add_argument("--transpose", action="store_true", help="Cylinder: shift rows instead of columns")

    p = sub.add_parser("sequence", help="Emit a family of counts as a b-file")
    p.add_argument("--surface", choices=SURFACES, default="grid")
    p.add_argument("--group", default="trivial")
    p.add_argument("--tiles", default="two-color")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--table", action="store_true", help="n x m table (row-major) instead of the square family")
    p.add_argument("--m-min", type=int, default=None)
    p.add_argument("--m-max", type=int, default=None)
    p.add_argument("--offset", type=int, default=None, help="Index of the first term (default: n-min)")
    p.add_argument("--transpose", action="store_true")
    p.add_argument("--out", default=None, help="Write the b-file here instead of standard output")

    p = sub.add_parser("crosscheck", help="Compare closed forms with the brute-force oracle")
    p.add_argument("--surfaces", nargs="+", choices=SURFACES, default=SURFACES)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--groups", nargs="+", default=None, help="Groups to sweep (default: every valid group)")
    p.add_argument("--tiles", nargs="+", default=None, help="Tile sets to sweep (default: single-orbit catalog)")
    p.add_argument("--method", choices=["auto", "direct", "orbit"], default="auto")
    p.add_argument("--force", action="store_true", help="Ignore the oracle budget")
    p.add_argument("--corrupt-table", action="store_true", help="Dev: corrupt t[id] to force FAIL rows")

    p = sub.add_parser("render", help="Draw one panel per orbit representative")
    _shape_args(p)
    p.add_argument("--format", choices=["svg", "ascii"], default="svg")
    p.add_argument("--out", default=None)
    p.add_argument("--force", action="store_true", help="Ignore the oracle budget")

    p = sub.add_parser("tileset-info", help="Show the orbit census and fixed-design table of a tile set")
    p.add_argument("--tiles", default="two-color")
    p.add_argument("--group", default=None, help="View the tile set under this subgroup")

    p = sub.add_parser("catalog", help="First terms for every single-orbit tile set over every group")
    p.add_argument("--surface", choices=SURFACES, default="grid")
    p.add_argument("--m", type=int, default=None, help="Fixed height (default: square n x n)")
    p.add_argument("--terms", type=int, default=4)

    return parser


# ============================================================================
# VERBS
# ============================================================================

def cmd_count(args) -> int:
    m = args.m if args.m is not None else args.n
    R = parse_group(args.group)
    validate_surface_group(args.surface, args.n, m, (g.value for g in R.elements))
    ts = resolve_tiles(args.tiles, R)
    result = count_tilings(args.surface, args.n, m, R, ts, transpose=args.transpose)

    print(result.count)
    if args.breakdown:
        table = Table(title=f"{args.surface} {args.n}x{m}, {R.name}, {ts.name}")
        table.add_column("g", style="cyan")
        table.add_column("fxpt", justify="right", style="green")
        for g, value in result.terms.items():
            table.add_row(g, str(value))
        table.add_row("sum", str(result.burnside_sum))
        table.add_row("group order", str(result.group_order))
        console.print(table)
    return 0


def cmd_sequence(args) -> int:
    try:
        req = SequenceRequest(
            surface=args.surface,
            square=not args.table,
            group=args.group,
            tiles=args.tiles,
            n_min=args.n_min,
            n_max=args.n_max,
            m_min=args.m_min,
            m_max=args.m_max,
            offset=args.offset,
            transpose=args.transpose,
        )
    except ValueError as e:
        raise InvalidInputError(str(e))

    R = parse_group(req.group)
    shapes = req.shapes()
    for n, m in shapes:
        validate_surface_group(req.surface.value, n, m, (g.value for g in R.elements))
    values = sequence_values(req.surface, shapes, R, resolve_tiles(req.tiles, R), transpose=req.transpose)

    entry = _lookup_mapping(req)
    bfile = build_bfile(published_offset(req, entry), values)
    text = write_bfile(bfile, args.out)
    if not args.out:
        sys.stdout.write(text)

    if entry is not None:
        _note_mapping(entry, dict(zip((n for n, _ in shapes), values)))
    return 0


def _lookup_mapping(req: SequenceRequest) -> Optional[MappedSequence]:
    try:
        return find_mapping(load_mapping(Config.MAPPING_FILE), req)
    except Exception as e:
        get_tracker().log_event("mapping", "skipped", details=str(e))
        return None


def _note_mapping(entry: MappedSequence, values: dict) -> None:
    """Tell the user (on stderr) when the family is a recorded OEIS sequence."""
    mismatched = [n for n, v in entry.terms.items() if n in values and values[n] != v]
    if mismatched:
        get_tracker().log_warning(f"{entry.oeis} disagrees at n = {mismatched}")
    else:
        err_console.print(f"[dim]matches {entry.oeis}: {entry.note}[/dim]")


def cmd_crosscheck(args) -> int:
    evaluator = CrosscheckEvaluator(
        budget=Config.budget(force=args.force),
        method=args.method,
        corrupt=args.corrupt_table,
    )
    configs = evaluator.configurations(
        args.surfaces, range(1, args.max_n + 1), range(1, args.max_m + 1), args.groups, args.tiles
    )
    rows = evaluator.run(configs)

    for row in rows:
        closed = "-" if row.closed_form is None else str(row.closed_form)
        oracle = "-" if row.oracle is None else str(row.oracle)
        print(f"{row.surface.value}\t{row.n}x{row.m}\t{row.group}\t{row.tiles}\t{closed}\t{oracle}\t{row.status}")

    summary = evaluator.summarize(rows)
    err_console.print(
        f"[bold]{len(rows)} configurations:[/bold] "
        f"[green]{summary['PASS']} PASS[/green], [red]{summary['FAIL']} FAIL[/red], "
        f"[yellow]{summary['SKIPPED']} SKIPPED[/yellow]"
    )
    if summary["FAIL"]:
        raise CrosscheckFailure(f"{summary['FAIL']} configuration(s) disagree with the oracle")
    return 0


def cmd_render(args) -> int:
    m = args.m if args.m is not None else args.n
    R = parse_group(args.group)
    validate_surface_group(args.surface, args.n, m, (g.value for g in R.elements))
    ts = resolve_tiles(args.tiles, R)
    shape = GridShape(n=args.n, m=m, surface=args.surface)

    reps = orbit_representatives(symmetry_group(shape, R), shape, ts, budget=Config.budget(force=args.force))
    title = f"{len(reps)} tilings of the {shape} up to {R.name}, tiles {ts.name}"
    if args.format == "svg":
        text = GalleryFormatter.to_svg(reps, ts, title=title)
    else:
        text = GalleryFormatter.to_ascii(reps, ts)

    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
        err_console.print(f"[green]✅ {len(reps)} panels written to {args.out}[/green]")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return 0


def cmd_tileset_info(args) -> int:
    R = parse_group(args.group) if args.group else None
    ts = resolve_tiles(args.tiles, R)
    spec = classify_orbits(ts)
    t = fixed_design_table(ts)

    console.print(f"[bold]{ts.name}[/bold]: {ts.size} designs under {ts.ambient.name} (order {ts.ambient.order})")
    orbits = Table(title="Orbits by stabilizer class")
    orbits.add_column("stabilizer", style="cyan")
    orbits.add_column("orbit size", justify="right")
    orbits.add_column("orbits", justify="right", style="green")
    for cls, count in spec.classes():
        orbits.add_row(cls.name, str(ts.ambient.order // cls.representative.order), str(count))
    console.print(orbits)

    fixed = Table(title="Fixed designs t_g")
    fixed.add_column("g", style="cyan")
    fixed.add_column("t_g", justify="right", style="green")
    for g, value in t.t.items():
        fixed.add_row(g.value, str(value))
    console.print(fixed)
    return 0


def cmd_catalog(args) -> int:
    surface = Surface(args.surface)
    square = args.m is None
    if args.terms < 1:
        raise InvalidInputError("--terms must be positive")
    for R in surface_subgroups(surface, square):
        for spec in single_orbit_specs(R):
            t = fixed_design_table(spec, R)
            shapes = [(n, n if square else args.m) for n in range(1, args.terms + 1)]
            values = [count_with_table(surface, n, m, R, t).count for n, m in shapes]
            print(f"{surface.value}\t{R.name}\t{spec.label()}\t{', '.join(map(str, values))}")
    return 0


COMMANDS = {
    "count": cmd_count,
    "sequence": cmd_sequence,
    "crosscheck": cmd_crosscheck,
    "render": cmd_render,
    "tileset-info": cmd_tileset_info,
    "catalog": cmd_catalog,
}


@handle_errors
def run(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    Config.validate()
    if Config.is_verbose():
        Config.print_config_info()
    tracker = get_tracker()
    tracker.start_timer(args.command)
    code = COMMANDS[args.command](args)
    tracker.log_event(args.command, "completed", duration=tracker.end_timer(args.command))
    if args.metrics:
        tracker.display_summary()
        if Config.ENABLE_METRICS:
            tracker.save_metrics(Config.METRICS_DIR)
    return code


def main(argv: Optional[List[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
