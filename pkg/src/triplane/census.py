"""Cell, trail, and configuration censuses of a drawing.

Cells are the faces of the planarization.  The size of a cell is its
number of segment incidences plus its number of vertex incidences; a cell
is degenerate when some vertex or crossing appears more than once among
the tails of its walk.  Small non-degenerate cells fall into a short list
of named types; trails are the maximal corridors of quadrilateral
crossing-only cells threaded by the inner segments; configurations are
the small cell clusters the counting rows charge against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .combmap import Dart, twin
from .drawing import Drawing, Segment, stats

CELL_COUNT_KEYS = ("XTRI", "XQUAD", "VTRI", "VQUAD", "XPENT", "VVTRI", "KITE", "LARGE", "OTHER")
TRAIL_END_TYPES = ("LARGE", "VQUAD", "VTRI", "XPENT", "XTRI")
CFG_KEYS = ("CFG9", "CFG10", "CFG12", "CFG13", "CFG14", "CFG15", "CFG18")

CROSSING_EVEN_TYPES = frozenset({"VTRI", "XPENT", "XTRI"})


class CensusError(ValueError):
    """The census cannot be computed on this input."""


class WitnessError(CensusError):
    """A structure the counting rows promise is absent."""

    def __init__(self, obj: str, detail: str):
        super().__init__(f"missing witness: {obj}: {detail}")
        self.obj = obj
        self.detail = detail


@dataclass(frozen=True)
class CellRecord:
    cell_id: str
    walk: Tuple[Dart, ...]
    size: int
    vertex_incidences: int
    crossing_incidences: int
    segment_incidences: int
    degenerate: bool


def cells(drawing: Drawing) -> Tuple[CellRecord, ...]:
    """All cells, ids assigned in sorted order of their canonical walks."""
    out = []
    for i, walk in enumerate(drawing.planarize().faces()):
        tails = [drawing.tail(d) for d in walk]
        v = sum(1 for t in tails if drawing.is_vertex(t))
        out.append(CellRecord(
            cell_id=f"c{i}",
            walk=walk,
            size=len(walk) + v,
            vertex_incidences=v,
            crossing_incidences=len(walk) - v,
            segment_incidences=len(walk),
            degenerate=len(set(tails)) < len(tails),
        ))
    return tuple(out)


def walk_features(drawing: Drawing, record: CellRecord) -> List[str]:
    """The boundary walk as alternating node and segment names."""
    out = []
    for d in record.walk:
        out.append(drawing.tail(d))
        out.append(f"{d[0]}:{d[1]}")
    return out


def _crossings_adjacent(drawing: Drawing, record: CellRecord) -> bool:
    tails = [drawing.tail(d) for d in record.walk]
    pos = [i for i, t in enumerate(tails) if not drawing.is_vertex(t)]
    if len(pos) != 2:
        return False
    i, j = pos
    return j - i == 1 or (i == 0 and j == len(tails) - 1)


def classify_cell(drawing: Drawing, record: CellRecord) -> str:
    """One of XTRI, XQUAD, VTRI, VQUAD, XPENT, VVTRI, KITE, LARGE, OTHER."""
    v, x = record.vertex_incidences, record.crossing_incidences
    s = record.segment_incidences
    if record.size >= 6:
        if (not record.degenerate and v == 2 and x == 2 and s == 4
                and _crossings_adjacent(drawing, record)):
            return "KITE"
        return "LARGE"
    if record.degenerate:
        return "OTHER"
    if record.size == 3:
        return "XTRI" if x == 3 else "OTHER"
    if record.size == 4:
        if x == 4 and v == 0:
            return "XQUAD"
        if v == 1 and x == 2:
            return "VTRI"
        return "OTHER"
    if record.size == 5:
        if x == 5 and v == 0:
            return "XPENT"
        if v == 1 and x == 3:
            return "VQUAD"
        if v == 2 and x == 1:
            return "VVTRI"
        return "OTHER"
    return "OTHER"


# -- trails ------------------------------------------------------------------

@dataclass(frozen=True)
class Trail:
    cells: Tuple[str, ...]
    interior_segments: Tuple[Segment, ...]
    endpoint_types: Tuple[str, str]   # sorted; KITE reported as LARGE
    bounding_edges: Tuple[str, str]   # sorted multiset


def _collapse(cell_type: str) -> str:
    return "LARGE" if cell_type == "KITE" else cell_type


class _CellIndex:
    """Shared lookups: dart -> cell, id -> record, id -> type."""

    def __init__(self, drawing: Drawing, records: Sequence[CellRecord]):
        self.drawing = drawing
        self.by_id = {r.cell_id: r for r in records}
        self.types = {r.cell_id: classify_cell(drawing, r) for r in records}
        fmap = drawing.planarize().face_of()
        by_walk = {r.walk: r for r in records}
        self.cell_of_dart = {d: by_walk[w] for d, w in fmap.items()}

    def type_of(self, cell_id: str) -> str:
        return self.types[cell_id]

    def across(self, dart: Dart) -> CellRecord:
        return self.cell_of_dart[twin(dart)]


def _march(drawing: Drawing, index: _CellIndex, seg: Segment, direction: str, limit: int):
    """Follow a corridor of XQUADs away from one side of ``seg``.

    Returns (cells, exit_segments): the cells starting with the one on this
    side of ``seg`` and ending at the first non-XQUAD, and the inner
    segments consumed after ``seg``.
    """
    cell = index.cell_of_dart[(seg[0], seg[1], direction)]
    cells_out = [cell]
    segs_out: List[Segment] = []
    cur = seg
    steps = 0
    while index.type_of(cell.cell_id) == "XQUAD":
        steps += 1
        if steps > limit:
            raise CensusError("trail corridor does not terminate")
        walk = cell.walk
        idx = next(i for i, d in enumerate(walk) if d[:2] == cur)
        exit_dart = walk[(idx + 2) % 4]
        cur = exit_dart[:2]
        if not drawing.is_inner_segment(cur):
            raise CensusError(f"trail corridor exits through outer segment {cur}")
        segs_out.append(cur)
        cell = index.across(exit_dart)
        cells_out.append(cell)
    return cells_out, segs_out


def _crosses(drawing: Drawing, edge_id: str, seg: Segment) -> bool:
    a, b = drawing.segment_nodes(seg)
    return edge_id in (drawing.other_edge_at(a, seg[0]), drawing.other_edge_at(b, seg[0]))


def extract_trails(drawing: Drawing, records: Sequence[CellRecord]) -> Tuple[Trail, ...]:
    """The trails of the drawing; their interiors partition the inner segments."""
    index = _CellIndex(drawing, records)
    inner = drawing.inner_segments()
    limit = len(inner) + 2
    visited = set()
    trails = []
    for s in inner:
        if s in visited:
            continue
        visited.add(s)
        cells_fwd, segs_fwd = _march(drawing, index, s, "fwd", limit)
        cells_bwd, segs_bwd = _march(drawing, index, s, "bwd", limit)
        visited.update(segs_fwd)
        visited.update(segs_bwd)
        chain = list(reversed(cells_fwd)) + cells_bwd
        interior = tuple(reversed(segs_fwd)) + (s,) + tuple(segs_bwd)

        xa, xb = drawing.segment_nodes(interior[0])
        w1 = drawing.other_edge_at(xa, interior[0][0])
        w2 = drawing.other_edge_at(xb, interior[0][0])
        if len(interior) == 1:
            walls = tuple(sorted((w1, w2)))
        else:
            good = sorted(w for w in {w1, w2} if all(_crosses(drawing, w, t) for t in interior))
            if len(good) != 2:
                raise CensusError(f"trail through {s} has no well-defined bounding edges")
            walls = (good[0], good[1])

        t0 = _collapse(index.type_of(chain[0].cell_id))
        t1 = _collapse(index.type_of(chain[-1].cell_id))
        trails.append(Trail(
            cells=tuple(c.cell_id for c in chain),
            interior_segments=interior,
            endpoint_types=tuple(sorted((t0, t1))),
            bounding_edges=walls,
        ))
    return tuple(trails)


def tkey(a: str, b: str) -> str:
    return "T_" + "_".join(sorted((a, b)))


def trail_counts(trails: Sequence[Trail]) -> Dict[str, int]:
    """Unordered endpoint-type pair counts over the named endpoint types."""
    counts = {}
    for i, a in enumerate(TRAIL_END_TYPES):
        for b in TRAIL_END_TYPES[i:]:
            counts[tkey(a, b)] = 0
    for t in trails:
        a, b = t.endpoint_types
        if a in TRAIL_END_TYPES and b in TRAIL_END_TYPES:
            counts[tkey(a, b)] += 1
    return counts


# -- configurations ----------------------------------------------------------

@dataclass(frozen=True)
class Configuration:
    kind: str
    cells: Tuple[str, ...]                       # sorted member cell ids
    designated_segments: Tuple[Segment, ...] = ()
    designated_edge: Optional[str] = None


class _TrailEnds:
    """End incidences: (endpoint cell, adjacent interior segment) -> other end."""

    def __init__(self, trails: Sequence[Trail]):
        self.by_incidence: Dict[Tuple[str, Segment], Tuple[Trail, str]] = {}
        for t in trails:
            self.by_incidence[(t.cells[0], t.interior_segments[0])] = (t, t.cells[-1])
            self.by_incidence[(t.cells[-1], t.interior_segments[-1])] = (t, t.cells[0])

    def at(self, cell_id: str, seg: Segment) -> Tuple[Trail, str]:
        try:
            return self.by_incidence[(cell_id, seg)]
        except KeyError:
            raise CensusError(f"no trail ends at cell {cell_id} through {seg}") from None


def _opposite_quadrant(drawing: Drawing, index: _CellIndex, rec: CellRecord, x: str) -> CellRecord:
    """The cell vertically opposite ``rec`` at crossing ``x``."""
    d = next(dd for dd in rec.walk if drawing.tail(dd) == x)
    rot = drawing.rotations[x]
    i = rot.index(d)
    return index.cell_of_dart[rot[(i + 2) % len(rot)]]


def _xpent_side_profile(drawing: Drawing, index: _CellIndex, ends: _TrailEnds, rec: CellRecord):
    """For each side of an XPENT: (other end cell type, trail length)."""
    profile = []
    for d in rec.walk:
        trail, other = ends.at(rec.cell_id, d[:2])
        profile.append((index.type_of(other), len(trail.cells)))
    return profile


def is_saturated_xpent(drawing: Drawing, record: CellRecord, trails: Sequence[Trail],
                       records: Optional[Sequence[CellRecord]] = None) -> bool:
    """True iff all five trails incident to the cell end in crossing-even cells."""
    index = _CellIndex(drawing, records if records is not None else cells(drawing))
    if index.type_of(record.cell_id) != "XPENT":
        raise CensusError(f"cell {record.cell_id} is not an XPENT")
    profile = _xpent_side_profile(drawing, index, _TrailEnds(trails), record)
    return all(t in CROSSING_EVEN_TYPES for t, _ in profile)


def detect_configurations(
    drawing: Drawing,
    records: Sequence[CellRecord],
    trails: Sequence[Trail],
    strict: bool = False,
) -> Tuple[Configuration, ...]:
    """Find all configurations named by the counting rows.

    With ``strict`` (intended for 3-saturated drawings) a missing or
    mistyped witness cell raises :class:`WitnessError`; otherwise the
    affected configuration is silently skipped (advisory mode).
    """
    index = _CellIndex(drawing, records)
    ends = _TrailEnds(trails)
    found: List[Configuration] = []

    def need(cond: bool, obj: str, detail: str) -> bool:
        if cond:
            return True
        if strict:
            raise WitnessError(obj, detail)
        return False

    # CFG13 / CFG14: one per VTRI, across the outer sides of its inner segment.
    for rec in records:
        if index.type_of(rec.cell_id) != "VTRI":
            continue
        inner_darts = [d for d in rec.walk if drawing.is_inner_segment(d[:2])]
        if not need(len(inner_darts) == 1, rec.cell_id, "VTRI without a unique inner side"):
            continue
        e = inner_darts[0][0]
        k = len(drawing.edges[e].crossings)
        outer = [d for d in rec.walk if d is not inner_darts[0]]
        neighbors = [(d, index.across(d)) for d in outer]
        vv = [(d, nb) for d, nb in neighbors if index.type_of(nb.cell_id) == "VVTRI"]
        if k == 2:
            if not need(len(vv) == 2, rec.cell_id,
                        "VTRI on a twice-crossed edge must have two VVTRI neighbors"):
                continue
            found.append(Configuration(
                kind="CFG14",
                cells=tuple(sorted([rec.cell_id] + [nb.cell_id for _, nb in vv])),
                designated_segments=tuple(sorted(d[:2] for d, _ in vv)),
            ))
        elif k == 3:
            if not need(len(vv) >= 1, rec.cell_id,
                        "VTRI on a thrice-crossed edge must have a VVTRI neighbor"):
                continue
            d, nb = min(vv, key=lambda p: p[1].cell_id)
            found.append(Configuration(
                kind="CFG13",
                cells=tuple(sorted((rec.cell_id, nb.cell_id))),
                designated_segments=(d[:2],),
            ))
        else:
            need(False, rec.cell_id, f"VTRI inner side on edge with {k} crossings")

    # Trail-indexed kinds.
    for trail in trails:
        pair = trail.endpoint_types
        length = len(trail.cells)

        if pair == ("VQUAD", "VTRI") and length == 3:
            two = [w for w in trail.bounding_edges
                   if len(drawing.edges[w].crossings) == 2]
            if not need(len(two) == 1, "+".join(trail.cells),
                        "VTRI-VQUAD trail of length 3 needs exactly one twice-crossed bounding edge"):
                continue
            found.append(Configuration(
                kind="CFG18",
                cells=tuple(sorted(trail.cells)),
                designated_edge=two[0],
            ))
            continue

        if pair not in (("XPENT", "XTRI"), ("VQUAD", "XPENT"), ("VQUAD", "XTRI")):
            continue
        if not need(length == 2, "+".join(trail.cells),
                    f"{pair[0]}-{pair[1]} trail must have length 2"):
            continue
        s = trail.interior_segments[0]
        recs2 = [index.by_id[c] for c in trail.cells]

        if pair == ("XPENT", "XTRI"):
            xtri = next(r for r in recs2 if index.type_of(r.cell_id) == "XTRI")
            xpent = next(r for r in recs2 if index.type_of(r.cell_id) == "XPENT")
            x3 = next(drawing.tail(d) for d in xtri.walk
                      if drawing.tail(d) not in drawing.segment_nodes(s))
            vv = _opposite_quadrant(drawing, index, xtri, x3)
            if not need(index.type_of(vv.cell_id) == "VVTRI", xtri.cell_id,
                        f"opposite quadrant at {x3} is {index.type_of(vv.cell_id)}, not VVTRI"):
                continue
            kite = None
            shared: Optional[Segment] = None
            for d in xtri.walk:
                if d[:2] == s:
                    continue
                cand = index.across(d)
                if index.type_of(cand.cell_id) != "KITE":
                    continue
                for dd in vv.walk:
                    if x3 in drawing.segment_nodes(dd[:2]) and index.across(dd) is cand:
                        kite, shared = cand, dd[:2]
                        break
                if kite is not None:
                    break
            if not need(kite is not None, xtri.cell_id,
                        "no kite sharing a segment with the opposite-quadrant VVTRI"):
                continue
            found.append(Configuration(
                kind="CFG9",
                cells=tuple(sorted({xtri.cell_id, xpent.cell_id, kite.cell_id, vv.cell_id})),
                designated_segments=(shared,),
            ))
        else:
            vq = next(r for r in recs2 if index.type_of(r.cell_id) == "VQUAD")
            other = next(r for r in recs2 if index.type_of(r.cell_id) != "VQUAD")
            idx = next(i for i, d in enumerate(vq.walk) if d[:2] == s)
            far = vq.walk[(idx + 2) % 4]
            z = index.across(far)
            if not need(index.type_of(z.cell_id) == "VVTRI", vq.cell_id,
                        f"cell across the far side is {index.type_of(z.cell_id)}, not VVTRI"):
                continue
            kind = "CFG10" if pair == ("VQUAD", "XPENT") else "CFG12"
            found.append(Configuration(
                kind=kind,
                cells=tuple(sorted({other.cell_id, vq.cell_id, z.cell_id})),
                designated_segments=(far[:2],),
            ))

    # CFG15: saturated XPENTs, one per window of three consecutive uncrossed trails.
    for rec in records:
        if index.type_of(rec.cell_id) != "XPENT":
            continue
        profile = _xpent_side_profile(drawing, index, ends, rec)
        if not all(t in CROSSING_EVEN_TYPES for t, _ in profile):
            continue
        corners = [drawing.tail(d) for d in rec.walk]  # x_i = shared corner of sides i-1, i
        uncrossed = [t == "VTRI" and length == 2 for t, length in profile]
        windows = [i for i in range(5)
                   if uncrossed[i] and uncrossed[(i + 1) % 5] and uncrossed[(i + 2) % 5]]
        if not need(bool(windows), rec.cell_id,
                    "saturated XPENT without three consecutive uncrossed trails"):
            continue
        for i in windows:
            ca = _opposite_quadrant(drawing, index, rec, corners[(i + 1) % 5])
            cb = _opposite_quadrant(drawing, index, rec, corners[(i + 2) % 5])
            ok = need(index.type_of(ca.cell_id) == "VVTRI", rec.cell_id,
                      f"opposite quadrant at {corners[(i + 1) % 5]} is not VVTRI") and \
                 need(index.type_of(cb.cell_id) == "VVTRI", rec.cell_id,
                      f"opposite quadrant at {corners[(i + 2) % 5]} is not VVTRI")
            if not ok:
                continue
            mid = rec.walk[(i + 1) % 5]
            if not need(len(drawing.edges[mid[0]].crossings) == 2, rec.cell_id,
                        f"middle side edge {mid[0]} is not twice-crossed"):
                continue
            found.append(Configuration(
                kind="CFG15",
                cells=tuple(sorted({rec.cell_id, ca.cell_id, cb.cell_id})),
                designated_edge=mid[0],
            ))

    # Deduplicate by kind + member cell set, deterministically ordered.
    seen = set()
    unique: List[Configuration] = []
    for cfg in sorted(found, key=lambda c: (c.kind, c.cells)):
        key = (cfg.kind, cfg.cells)
        if key not in seen:
            seen.add(key)
            unique.append(cfg)

    if strict:
        marked: Dict[Segment, str] = {}
        for cfg in unique:
            if cfg.kind in ("CFG9", "CFG10", "CFG12", "CFG13", "CFG14"):
                for seg in cfg.designated_segments:
                    if seg in marked:
                        raise WitnessError(
                            f"{cfg.kind}@{'+'.join(cfg.cells)}",
                            f"designated segment {seg} already claimed by {marked[seg]}")
                    marked[seg] = f"{cfg.kind}@{'+'.join(cfg.cells)}"

    return tuple(unique)


# -- the full census ---------------------------------------------------------

@dataclass(frozen=True)
class CensusReport:
    cells: Tuple[CellRecord, ...]
    cell_types: Dict[str, str]
    trails: Tuple[Trail, ...]
    configurations: Tuple[Configuration, ...]
    counts: Dict[str, int]

    def as_dict(self) -> dict:
        return {
            "counts": dict(self.counts),
            "cells": [
                {
                    "id": r.cell_id,
                    "type": self.cell_types[r.cell_id],
                    "size": r.size,
                    "vertex_incidences": r.vertex_incidences,
                    "crossing_incidences": r.crossing_incidences,
                    "segment_incidences": r.segment_incidences,
                    "degenerate": r.degenerate,
                    "walk": [
                        {"edge": d[0], "seg": d[1], "dir": d[2]} for d in r.walk
                    ],
                }
                for r in self.cells
            ],
            "trails": [
                {
                    "cells": list(t.cells),
                    "interior_segments": [f"{e}:{i}" for e, i in t.interior_segments],
                    "endpoint_types": list(t.endpoint_types),
                    "bounding_edges": list(t.bounding_edges),
                }
                for t in self.trails
            ],
            "configurations": [
                {
                    "kind": c.kind,
                    "cells": list(c.cells),
                    "designated_segments": [f"{e}:{i}" for e, i in c.designated_segments],
                    "designated_edge": c.designated_edge,
                }
                for c in self.configurations
            ],
        }


def census(drawing: Drawing, strict: bool = False) -> CensusReport:
    """Count everything the constraint rows talk about.

    ``strict`` turns missing configuration witnesses into errors; use it
    for 3-saturated inputs, where the counting rows promise them.
    """
    recs = cells(drawing)
    types = {r.cell_id: classify_cell(drawing, r) for r in recs}
    trails = extract_trails(drawing, recs)
    cfgs = detect_configurations(drawing, recs, trails, strict=strict)

    counts: Dict[str, int] = dict(stats(drawing).as_dict())
    for t in CELL_COUNT_KEYS:
        counts[t] = 0
    for r in recs:
        counts[types[r.cell_id]] += 1
    counts["LARGE"] += counts["KITE"]  # kites are large cells
    counts["large_size_sum"] = sum(
        r.size for r in recs if types[r.cell_id] in ("LARGE", "KITE"))
    counts["cells"] = len(recs)
    counts.update(trail_counts(trails))
    for k in CFG_KEYS:
        counts[k] = 0
    for c in cfgs:
        counts[c.kind] += 1
    return CensusReport(recs, types, trails, cfgs, counts)
