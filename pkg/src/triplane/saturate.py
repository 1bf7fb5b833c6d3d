"""Filling a drawing with uncrossed edges until it is 3-saturated."""

from __future__ import annotations

from typing import Optional, Tuple

from .census import cells
from .drawing import Drawing, EdgeRecord, validate


class SaturateError(ValueError):
    """Saturation cannot proceed on this input."""


def filled_witness(drawing: Drawing) -> Optional[Tuple[str, str, str]]:
    """First (cell id, u, v) whose cell has no uncrossed u-v edge on its boundary.

    A drawing is filled when every pair of distinct vertices incident to a
    common cell is joined by an uncrossed edge on that cell's boundary.
    Cells are scanned in lexicographic id order and vertex pairs in
    lexicographic order, so the witness is deterministic.
    """
    recs = sorted(cells(drawing), key=lambda r: r.cell_id)
    for rec in recs:
        verts = sorted({drawing.tail(d) for d in rec.walk if drawing.is_vertex(drawing.tail(d))})
        if len(verts) < 2:
            continue
        joined = set()
        for d in rec.walk:
            e = drawing.edges[d[0]]
            if not e.crossings:
                joined.add(tuple(sorted(e.ends)))
        for i, u in enumerate(verts):
            for v in verts[i + 1:]:
                if (u, v) not in joined:
                    return (rec.cell_id, u, v)
    return None


def is_filled(drawing: Drawing) -> bool:
    return filled_witness(drawing) is None


def saturate(drawing: Drawing) -> Drawing:
    """Insert uncrossed edges until the drawing is filled.

    Requires a valid drawing with at least 3 vertices.  Each round takes
    the first filled-ness witness (cell, u, v) and joins u to v by an
    uncrossed edge routed through that cell, splicing it at the first
    boundary occurrences of u and v.  Validity is re-checked after every
    insertion, so the result is 3-saturated.
    """
    if len(drawing.vertices) < 3:
        raise SaturateError("saturation requires at least 3 vertices")
    report = validate(drawing)
    if not report.valid:
        raise SaturateError("input drawing is not valid (failing: " + ", ".join(report.failing()) + ")")

    # #segments <= 3#nodes - 6 on the sphere bounds how many edges can fit.
    nodes = len(drawing.vertices) + len(drawing.crossings)
    cap = max(0, 3 * nodes - 6 - drawing.planarize().num_segments()) + 1

    current = drawing
    fresh = 0
    for _ in range(cap + 1):
        witness = filled_witness(current)
        if witness is None:
            return current
        cell_id, u, v = witness
        rec = next(r for r in cells(current) if r.cell_id == cell_id)
        tails = [current.tail(d) for d in rec.walk]
        occ_u = tails.index(u)
        occ_v = tails.index(v)
        while f"s{fresh}" in current.edges:
            fresh += 1
        new_id = f"s{fresh}"
        fresh += 1
        cmap = current.planarize().insert_edge_in_face(rec.walk, occ_u, occ_v, new_id)
        edges = list(current.edges.values()) + [EdgeRecord(new_id, (u, v), ())]
        current = Drawing(current.vertices, edges, cmap.rotations)
        report = validate(current)
        if not report.valid:
            raise SaturateError(
                f"inserting {new_id}={u}-{v} in {cell_id} broke validity "
                "(failing: " + ", ".join(report.failing()) + ")")
    raise SaturateError("saturation did not terminate within the edge-count bound")


def is_3saturated(drawing: Drawing) -> bool:
    """Valid on >= 3 vertices, and every cell's vertex pairs are joined along its boundary."""
    return len(drawing.vertices) >= 3 and validate(drawing).valid and is_filled(drawing)
