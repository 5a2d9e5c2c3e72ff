"""
Gallery formatter for orbit representatives.
Draws one panel per representative, as SVG or as text.
"""

import math
import string
from typing import List, Sequence

import svgwrite

from src.algebra.tileset import TileDesignSet
from src.models.tiling_models import TilingAssignment

CELL = 24
GAP = 12
MARGIN = 12

# corners of each shaded half, in SVG coordinates of a unit cell (y down)
TRIANGLES = {
    "nw": [(0, 0), (1, 0), (0, 1)],
    "ne": [(0, 0), (1, 0), (1, 1)],
    "se": [(1, 0), (1, 1), (0, 1)],
    "sw": [(0, 0), (1, 1), (0, 1)],
}

ASCII_GLYPHS = {
    "nw": "◤",
    "ne": "◥",
    "se": "◢",
    "sw": "◣",
    "black": "█",
    "white": "·",
}

PALETTE = [
    "#1b1b1b", "#f2f2f2", "#d1495b", "#edae49", "#00798c",
    "#30638e", "#66a182", "#8d6a9f", "#c47335", "#4f5d75",
]

_LABELS = string.digits + string.ascii_letters


class GalleryFormatter:
    """Formats orbit representatives for output"""

    @staticmethod
    def columns(count: int) -> int:
        return max(1, math.ceil(math.sqrt(count)))

    @staticmethod
    def fill_for(design: str, index: int) -> str:
        if design == "black":
            return "#000000"
        if design == "white":
            return "#ffffff"
        if design.startswith("c") and design[1:].isdigit():
            return PALETTE[int(design[1:]) % len(PALETTE)]
        return "#dddddd"

    @staticmethod
    def to_svg(reps: Sequence[TilingAssignment], ts: TileDesignSet, title: str = "") -> str:
        """
        Self-contained SVG: panels in canonical order, row by row.

        Truchet corners are drawn as shaded triangles, colors as solid
        squares, anything else as a labeled square.
        """
        cols = GalleryFormatter.columns(len(reps))
        rows = math.ceil(len(reps) / cols) if reps else 0
        n = reps[0].shape.n if reps else 1
        m = reps[0].shape.m if reps else 1
        pw, ph = n * CELL, m * CELL
        width = 2 * MARGIN + cols * pw + max(cols - 1, 0) * GAP
        height = 2 * MARGIN + rows * ph + max(rows - 1, 0) * GAP

        dwg = svgwrite.Drawing(size=(f"{width}px", f"{height}px"), profile="tiny", debug=False)
        dwg.add(dwg.rect(insert=(0, 0), size=(width, height), fill="#ffffff"))
        if title:
            dwg.set_desc(desc=title)

        for k, rep in enumerate(reps):
            ox = MARGIN + (k % cols) * (pw + GAP)
            oy = MARGIN + (k // cols) * (ph + GAP)
            panel = dwg.g(class_="panel", transform=f"translate({ox},{oy})")
            for row, values in enumerate(rep.rows_top_down()):
                for col, index in enumerate(values):
                    design = ts.designs[index]
                    x0, y0 = col * CELL, row * CELL
                    GalleryFormatter._draw_cell(dwg, panel, design, index, x0, y0)
            panel.add(dwg.rect(insert=(0, 0), size=(pw, ph), fill="none", stroke="#333333", stroke_width=1))
            dwg.add(panel)

        return dwg.tostring()

    @staticmethod
    def _draw_cell(dwg, panel, design: str, index: int, x0: int, y0: int) -> None:
        if design in TRIANGLES:
            panel.add(dwg.rect(insert=(x0, y0), size=(CELL, CELL), fill="#ffffff"))
            points = [(x0 + px * CELL, y0 + py * CELL) for px, py in TRIANGLES[design]]
            panel.add(dwg.polygon(points=points, fill="#000000"))
            return

        fill = GalleryFormatter.fill_for(design, index)
        panel.add(dwg.rect(insert=(x0, y0), size=(CELL, CELL), fill=fill, stroke="#999999", stroke_width=0.5))
        if fill == "#dddddd":
            panel.add(dwg.text(
                GalleryFormatter.label_for(design, index),
                insert=(x0 + CELL / 2, y0 + CELL * 0.7),
                text_anchor="middle",
                font_size=CELL * 0.5,
            ))

    @staticmethod
    def label_for(design: str, index: int) -> str:
        if design in ASCII_GLYPHS:
            return ASCII_GLYPHS[design]
        return _LABELS[index % len(_LABELS)]

    @staticmethod
    def ascii_panels(reps: Sequence[TilingAssignment], ts: TileDesignSet) -> List[List[str]]:
        """Each panel as its text rows, top row first."""
        panels = []
        for rep in reps:
            panels.append([
                "".join(GalleryFormatter.label_for(ts.designs[i], i) for i in values)
                for values in rep.rows_top_down()
            ])
        return panels

    @staticmethod
    def to_ascii(reps: Sequence[TilingAssignment], ts: TileDesignSet, per_row: int = 8) -> str:
        """Panels side by side, per_row to a line block, blocks separated by a blank line."""
        panels = GalleryFormatter.ascii_panels(reps, ts)
        blocks = []
        for start in range(0, len(panels), per_row):
            chunk = panels[start:start + per_row]
            lines = ["  ".join(panel[r] for panel in chunk) for r in range(len(chunk[0]))]
            blocks.append("\n".join(lines))
        legend = ", ".join(
            f"{GalleryFormatter.label_for(d, i)}={d}" for i, d in enumerate(ts.designs)
        )
        header = f"{len(panels)} orbits of {ts.name}: {legend}"
        return header + "\n\n" + "\n\n".join(blocks) + "\n"
