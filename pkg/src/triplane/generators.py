"""Drawing generators: geometric ingestion, tight families, random scenes.

Skeleton drawings (hexagonal cylinders, pentagonal rings) are built with
hand-made rotations; their faces are then filled with straight chords via
an exact convex model: the face's vertex cycle is mapped onto a clockwise
convex polygon (points of a parabola, reversed), chords become secants,
and all crossings, crossing orders, and angular rotations are computed
with rational arithmetic in that model.  Because every face walk maps
orientation-faithfully onto a clockwise polygon, the computed rotations
splice consistently into the global counterclockwise rotation system.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .combmap import Dart, twin
from .drawing import Drawing, EdgeRecord
from .geometry import (GeometricScene, Point, SceneError, ccw_from, ccw_sorted,
                       orient, segment_relation, sub)


class GenerationError(ValueError):
    """A generator was misused or an internal construction invariant broke."""


# -- geometric ingestion -----------------------------------------------------

def _between(p: Point, a: Point, b: Point) -> bool:
    """p lies on segment ab (collinearity assumed checked by caller via orient)."""
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def ingest_geometry(scene: GeometricScene) -> Drawing:
    """Exactly intersect a straight-line scene and emit the drawing.

    Rejections (each naming the offending ids): coincident points,
    degenerate or duplicate segments, collinear overlaps, a vertex lying
    on another segment, adjacent segments crossing, three segments
    through one point, more than 3 crossings on a segment.
    """
    pts = scene.points
    names = sorted(pts)
    seen: Dict[Point, str] = {}
    for nm in names:
        if pts[nm] in seen:
            raise SceneError(f"coincident-endpoints: {seen[pts[nm]]!r} and {nm!r}")
        seen[pts[nm]] = nm

    segs = list(scene.segments)
    sids = [s for s, _ in segs]
    if len(set(sids)) != len(sids):
        raise SceneError("duplicate segment id")
    for sid, (u, v) in segs:
        if u not in pts or v not in pts:
            raise SceneError(f"segment {sid!r} references an unknown point")
        if u == v:
            raise SceneError(f"degenerate-segment: {sid!r} has equal ends")

    for nm in names:
        for sid, (u, v) in segs:
            if nm in (u, v):
                continue
            if orient(pts[u], pts[v], pts[nm]) == 0 and _between(pts[nm], pts[u], pts[v]):
                raise SceneError(f"vertex-on-edge: point {nm!r} lies on segment {sid!r}")

    per_edge: Dict[str, List[Tuple[Point, str]]] = {sid: [] for sid in sids}
    cross_owner: Dict[Point, Tuple[str, str]] = {}
    for (s1, (u1, v1)), (s2, (u2, v2)) in combinations(segs, 2):
        rel = segment_relation(pts[u1], pts[v1], pts[u2], pts[v2])
        kind = rel[0]
        if kind == "disjoint":
            continue
        if kind == "collinear-overlap":
            raise SceneError(f"collinear-overlap: {s1!r} and {s2!r}")
        if kind == "endpoint-on-interior":
            raise SceneError(f"vertex-on-edge: an end of {s1!r} or {s2!r} lies on the other")
        if kind == "shared-endpoint":
            continue
        # proper crossing
        if {u1, v1} & {u2, v2}:
            raise SceneError(f"adjacent-crossing: {s1!r} and {s2!r}")
        p = rel[1]
        if p in cross_owner:
            o1, o2 = cross_owner[p]
            raise SceneError(f"concurrent-crossing: {o1!r}, {o2!r}, {s1!r}, {s2!r} meet at one point")
        cross_owner[p] = (s1, s2)
        per_edge[s1].append((p, s2))
        per_edge[s2].append((p, s1))

    for sid in sids:
        if len(per_edge[sid]) > 3:
            raise SceneError(f"too-many-crossings: {sid!r} is crossed {len(per_edge[sid])} times")

    prefix = "x"
    while any(f"{prefix}{i}" in pts for i in range(len(cross_owner))):
        prefix = "x" + prefix
    xname = {p: f"{prefix}{i}" for i, p in enumerate(sorted(cross_owner))}

    seg_ends = dict(segs)

    def along(sid: str) -> List[Tuple[Point, str]]:
        u, v = seg_ends[sid]
        a, b = pts[u], pts[v]
        # sort crossing points by the parameter along a -> b
        def key(item):
            p, _ = item
            return ((p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1]))
        return sorted(per_edge[sid], key=key)

    edges = []
    for sid, (u, v) in segs:
        ordered = along(sid)
        edges.append(EdgeRecord(sid, (u, v), tuple(xname[p] for p, _ in ordered)))

    rotations: Dict[str, List] = {nm: [] for nm in names}
    items_at: Dict[str, List[Tuple[Dart, Point]]] = {nm: [] for nm in names}
    for sid, (u, v) in segs:
        k = len(per_edge[sid])
        items_at[u].append(((sid, 0, "fwd"), sub(pts[v], pts[u])))
        items_at[v].append(((sid, k, "bwd"), sub(pts[u], pts[v])))
    for nm in names:
        rotations[nm] = list(ccw_sorted(items_at[nm])) if items_at[nm] else []

    idx_on: Dict[Tuple[str, Point], int] = {}
    for sid in sids:
        for i, (p, _) in enumerate(along(sid)):
            idx_on[(sid, p)] = i
    for p, (s1, s2) in cross_owner.items():
        items = []
        for sid in (s1, s2):
            u, v = seg_ends[sid]
            d = sub(pts[v], pts[u])
            i = idx_on[(sid, p)]
            items.append(((sid, i, "bwd"), (-d[0], -d[1])))
            items.append(((sid, i + 1, "fwd"), d))
        rotations[xname[p]] = list(ccw_sorted(items))

    return Drawing(names, edges, rotations)


# -- chord insertion in a face ----------------------------------------------

def add_chords_in_face(
    drawing: Drawing,
    cycle: Sequence[str],
    chords: Sequence[Tuple[int, int]],
    edge_prefix: str,
    crossing_prefix: str,
) -> Drawing:
    """Insert straight chords into the face whose walk visits ``cycle``.

    ``cycle`` must list the face's vertices in boundary-walk order.  Chords
    are (i, j) index pairs into the cycle, i < j, non-adjacent.  New edges
    are named ``{edge_prefix}{k}`` in chord order and new crossings
    ``{crossing_prefix}{k}`` ordered by model position.
    """
    m = len(cycle)
    for i, j in chords:
        if not (0 <= i < j < m) or j - i == 1 or (i == 0 and j == m - 1):
            raise GenerationError(f"bad chord ({i},{j}) for a {m}-cycle")

    cmap = drawing.planarize()
    aligned: Optional[Tuple[Dart, ...]] = None
    for walk in cmap.faces():
        if len(walk) != m:
            continue
        tails = [drawing.tail(d) for d in walk]
        for shift in range(m):
            if all(tails[(shift + i) % m] == cycle[i] for i in range(m)):
                aligned = tuple(walk[(shift + i) % m] for i in range(m))
                break
        if aligned:
            break
    if aligned is None:
        raise GenerationError(
            f"no face with boundary cycle {list(cycle)} (is it in walk order?)")

    # Clockwise convex model: parabola points in reversed order.
    t = [Fraction(m - 1 - i) for i in range(m)]
    model: List[Point] = [(t[i], t[i] * t[i]) for i in range(m)]

    eid = [f"{edge_prefix}{k}" for k in range(len(chords))]
    for e in eid:
        if e in drawing.edges:
            raise GenerationError(f"edge id {e!r} already used")

    # Pairwise chord crossings, exact, in the model.
    per_chord: Dict[int, List[Tuple[Point, int]]] = {k: [] for k in range(len(chords))}
    owner: Dict[Point, Tuple[int, int]] = {}
    for k1, k2 in combinations(range(len(chords)), 2):
        (i1, j1), (i2, j2) = chords[k1], chords[k2]
        interleaved = (i1 < i2 < j1 < j2) or (i2 < i1 < j2 < j1)
        rel = segment_relation(model[i1], model[j1], model[i2], model[j2])
        if interleaved != (rel[0] == "proper"):
            raise GenerationError("model polygon is not convex enough for these chords")
        if not interleaved:
            continue
        p = rel[1]
        if p in owner:
            raise GenerationError(
                f"chords {chords[k1]}, {chords[k2]}, {chords[owner[p][0]]} are concurrent in the model")
        owner[p] = (k1, k2)
        per_chord[k1].append((p, k2))
        per_chord[k2].append((p, k1))
    for k, lst in per_chord.items():
        if len(lst) > 3:
            raise GenerationError(f"chord {chords[k]} would be crossed {len(lst)} times")

    xid = {p: f"{crossing_prefix}{n}" for n, p in enumerate(sorted(owner))}
    for x in xid.values():
        if x in drawing.rotations:
            raise GenerationError(f"crossing id {x!r} already used")

    def ordered(k: int) -> List[Tuple[Point, int]]:
        i, j = chords[k]
        a, b = model[i], model[j]
        return sorted(per_chord[k],
                      key=lambda it: (it[0][0] - a[0]) * (b[0] - a[0]) + (it[0][1] - a[1]) * (b[1] - a[1]))

    new_edges = []
    idx_on: Dict[Tuple[int, Point], int] = {}
    for k, (i, j) in enumerate(chords):
        lst = ordered(k)
        for n, (p, _) in enumerate(lst):
            idx_on[(k, p)] = n
        new_edges.append(EdgeRecord(eid[k], (cycle[i], cycle[j]), tuple(xid[p] for p, _ in lst)))

    rotations: Dict[str, List[Dart]] = {node: list(ds) for node, ds in drawing.rotations.items()}

    for p, (k1, k2) in owner.items():
        items = []
        for k in (k1, k2):
            i, j = chords[k]
            d = sub(model[j], model[i])
            n = idx_on[(k, p)]
            items.append(((eid[k], n, "bwd"), (-d[0], -d[1])))
            items.append(((eid[k], n + 1, "fwd"), d))
        rotations[xid[p]] = list(ccw_sorted(items))

    for i in range(m):
        incident = []
        for k, (a, b) in enumerate(chords):
            if a == i:
                incident.append(((eid[k], 0, "fwd"), sub(model[b], model[a])))
            elif b == i:
                kcross = len(per_chord[k])
                incident.append(((eid[k], kcross, "bwd"), sub(model[a], model[b])))
        if not incident:
            continue
        arrival = aligned[i - 1]
        anchor = twin(arrival)
        base = sub(model[i - 1] if i else model[m - 1], model[i])
        order = ccw_from(base, incident)
        rot = rotations[cycle[i]]
        pos = rot.index(anchor)
        rotations[cycle[i]] = rot[:pos + 1] + list(order) + rot[pos + 1:]

    return Drawing(drawing.vertices, list(drawing.edges.values()) + new_edges, rotations)


# -- the hexagonal cylinder family -------------------------------------------

_HEX_SHORTS = ((0, 2), (1, 3), (2, 4), (3, 5), (0, 4), (1, 5))
_HEX_LONGS = ((0, 3), (1, 4), (2, 5))


def gen_fig3(layers: int) -> Drawing:
    """Hexagonal cylinder with L layers, densely filled with diagonals.

    n = 6(L+1) vertices on L+1 nested hexagonal rings; three vertical
    edges per layer at alternating positions split each layer into three
    hexagonal faces, which receive 8 of their 9 diagonals; the two cap
    faces receive 6 diagonals each.  Totals: |E| = 5.5n - 15 and
    |X| = 5.5n - 21.
    """
    L = layers
    if L < 1:
        raise GenerationError("gen_fig3 needs at least one layer")

    def V(l: int, p: int) -> str:
        return f"u{l}p{p % 6}"

    def R(l: int, p: int) -> str:
        return f"r{l}p{p % 6}"

    def Z(l: int, p: int) -> str:
        return f"z{l}p{p % 6}"

    vertices = [V(l, p) for l in range(L + 1) for p in range(6)]
    edges = [EdgeRecord(R(l, p), (V(l, p), V(l, p + 1)), ()) for l in range(L + 1) for p in range(6)]
    vert_pos = {l: ((l - 1) % 2, ((l - 1) % 2) + 2, ((l - 1) % 2) + 4) for l in range(1, L + 1)}
    for l in range(1, L + 1):
        for p in vert_pos[l]:
            edges.append(EdgeRecord(Z(l, p), (V(l - 1, p), V(l, p)), ()))

    # CCW rotation at each vertex: outward vertical, ring-successor,
    # inward vertical, ring-predecessor (nested-rings embedding).
    rotations: Dict[str, List[Dart]] = {}
    for l in range(L + 1):
        for p in range(6):
            rot: List[Dart] = []
            if l + 1 <= L and p % 6 in vert_pos[l + 1]:
                rot.append((Z(l + 1, p), 0, "fwd"))
            rot.append((R(l, p), 0, "fwd"))
            if l >= 1 and p % 6 in vert_pos[l]:
                rot.append((Z(l, p), 0, "bwd"))
            rot.append((R(l, p - 1), 0, "bwd"))
            rotations[V(l, p)] = rot

    d = Drawing(vertices, edges, rotations)

    # Side faces: clockwise walk [b_p, b_p+1, b_p+2, t_p+2, t_p+1, t_p].
    for l in range(1, L + 1):
        for p in vert_pos[l]:
            cycle = [V(l - 1, p), V(l - 1, p + 1), V(l - 1, p + 2),
                     V(l, p + 2), V(l, p + 1), V(l, p)]
            chords = list(_HEX_SHORTS) + [(0, 3), (2, 5)]
            d = add_chords_in_face(d, cycle, chords, f"g{l}p{p}n", f"xg{l}p{p}n")

    # Caps: three long diagonals plus a triangle of alternate shorts, the
    # parity chosen to avoid duplicating layer diagonals on the shared ring.
    bot = [V(0, 0), V(0, 5), V(0, 4), V(0, 3), V(0, 2), V(0, 1)]  # clockwise inner walk
    bot_tri_start = 1  # layer-1 verticals sit at even positions
    bot_tri = [((bot_tri_start + s) % 6, (bot_tri_start + s + 2) % 6) for s in (0, 2, 4)]
    bot_chords = list(_HEX_LONGS) + sorted(tuple(sorted(c)) for c in bot_tri)
    d = add_chords_in_face(d, bot, bot_chords, "gbotn", "xbotn")

    top = [V(L, p) for p in range(6)]  # counterclockwise walk of the outer face
    top_tri_start = L % 2
    top_tri = [((top_tri_start + s) % 6, (top_tri_start + s + 2) % 6) for s in (0, 2, 4)]
    top_chords = list(_HEX_LONGS) + sorted(tuple(sorted(c)) for c in top_tri)
    d = add_chords_in_face(d, top, top_chords, "gtopn", "xtopn")
    return d


# -- the pentagonal-rings family ----------------------------------------------

_PENT_CHORDS = ((0, 2), (1, 3), (2, 4), (0, 3), (1, 4))


def gen_fig2(rings: int) -> Drawing:
    """Nested pentagonal rings with a pentagram in every pentagonal face.

    Rings k = 0..R alternate between 5-cycles (k even) and 10-cycles
    (k odd); spokes tie consecutive rings so that every annulus splits
    into five pentagonal faces.  Every pentagonal face — including the
    inner cap and, when ring R is a 5-cycle, the outer cap — receives all
    five diagonals, which pairwise cross: 5 crossings per face, every
    diagonal crossed exactly twice.
    """
    R = rings
    if R < 1:
        raise GenerationError("gen_fig2 needs at least one ring")

    def size(k: int) -> int:
        return 5 if k % 2 == 0 else 10

    def W(k: int, j: int) -> str:
        return f"w{k}j{j % size(k)}"

    def RE(k: int, j: int) -> str:
        return f"r{k}j{j % size(k)}"

    def S(k: int, i: int) -> str:
        return f"s{k}i{i % 5}"

    vertices = [W(k, j) for k in range(R + 1) for j in range(size(k))]
    edges = [EdgeRecord(RE(k, j), (W(k, j), W(k, j + 1)), ())
             for k in range(R + 1) for j in range(size(k))]

    def spoke_ends(k: int, i: int) -> Tuple[str, str]:
        # spoke i of annulus k -> k+1, (inner vertex, outer vertex)
        if k % 2 == 0:
            return (W(k, i), W(k + 1, 2 * i))
        return (W(k, 2 * i + 1), W(k + 1, i))

    for k in range(R):
        for i in range(5):
            edges.append(EdgeRecord(S(k, i), spoke_ends(k, i), ()))

    rotations: Dict[str, List[Dart]] = {}
    for k in range(R + 1):
        for j in range(size(k)):
            out_dart: Optional[Dart] = None
            in_dart: Optional[Dart] = None
            if k < R:
                if k % 2 == 0:
                    out_dart = (S(k, j), 0, "fwd")
                elif j % 2 == 1:
                    out_dart = (S(k, (j - 1) // 2), 0, "fwd")
            if k > 0:
                if k % 2 == 1 and j % 2 == 0:
                    in_dart = (S(k - 1, j // 2), 0, "bwd")
                elif k % 2 == 0:
                    in_dart = (S(k - 1, j), 0, "bwd")
            rot: List[Dart] = []
            if out_dart:
                rot.append(out_dart)
            rot.append((RE(k, j), 0, "fwd"))
            if in_dart:
                rot.append(in_dart)
            rot.append((RE(k, j - 1), 0, "bwd"))
            rotations[W(k, j)] = rot

    d = Drawing(vertices, edges, rotations)

    faces: List[List[str]] = []
    faces.append([W(0, 0), W(0, 4), W(0, 3), W(0, 2), W(0, 1)])  # inner cap, clockwise
    for k in range(R):
        for i in range(5):
            if k % 2 == 0:
                faces.append([W(k, i), W(k, i + 1), W(k + 1, 2 * i + 2),
                              W(k + 1, 2 * i + 1), W(k + 1, 2 * i)])
            else:
                faces.append([W(k, 2 * i + 1), W(k, 2 * i + 2), W(k, 2 * i + 3),
                              W(k + 1, i + 1), W(k + 1, i)])
    if R % 2 == 0:
        faces.append([W(R, j) for j in range(5)])  # outer cap, counterclockwise walk

    for fi, cycle in enumerate(faces):
        d = add_chords_in_face(d, cycle, list(_PENT_CHORDS), f"q{fi}n", f"xq{fi}n")
    return d


# -- basic named instances -----------------------------------------------------

def _pentagon_points() -> Dict[str, Point]:
    F = Fraction
    return {
        "v0": (F(0), F(5)), "v1": (F(5), F(1)), "v2": (F(3), F(-4)),
        "v3": (F(-3), F(-4)), "v4": (F(-5), F(1)),
    }


def fig4_flower_scene() -> GeometricScene:
    """A pentagram of five chords; saturation turns it into the flower."""
    pts = _pentagon_points()
    segs = (("c0", ("v0", "v2")), ("c1", ("v1", "v3")), ("c2", ("v2", "v4")),
            ("c3", ("v3", "v0")), ("c4", ("v4", "v1")))
    return GeometricScene(pts, segs)


def fig3a_micro_scene() -> GeometricScene:
    """A pentagram with one star tip replaced by a crossing.

    The chords meeting at the top pentagon vertex are re-anchored to two
    fresh endpoints so they cross just below their old meeting point,
    turning that tip cell into a crossing triangle adjacent to the central
    XPENT: one XTRI-XPENT trail.
    """
    F = Fraction
    pts = _pentagon_points()
    del pts["v0"]
    pts["w1"] = (F(-2), F(7))
    pts["w2"] = (F(2), F(7))
    segs = (("c0", ("w1", "v2")), ("c1", ("v1", "v3")), ("c2", ("v2", "v4")),
            ("c3", ("v3", "w2")), ("c4", ("v4", "v1")))
    return GeometricScene(pts, segs)


def _basic_k2() -> Drawing:
    return Drawing(["a", "b"], [EdgeRecord("e0", ("a", "b"), ())],
                   {"a": [("e0", 0, "fwd")], "b": [("e0", 0, "bwd")]})


def _basic_k3() -> Drawing:
    edges = [EdgeRecord("e0", ("a", "b"), ()), EdgeRecord("e1", ("b", "c"), ()),
             EdgeRecord("e2", ("c", "a"), ())]
    rotations = {
        "a": [("e0", 0, "fwd"), ("e2", 0, "bwd")],
        "b": [("e1", 0, "fwd"), ("e0", 0, "bwd")],
        "c": [("e2", 0, "fwd"), ("e1", 0, "bwd")],
    }
    return Drawing(["a", "b", "c"], edges, rotations)


def _basic_path3() -> Drawing:
    edges = [EdgeRecord("e0", ("a", "b"), ()), EdgeRecord("e1", ("b", "c"), ())]
    rotations = {
        "a": [("e0", 0, "fwd")],
        "b": [("e0", 0, "bwd"), ("e1", 0, "fwd")],
        "c": [("e1", 0, "bwd")],
    }
    return Drawing(["a", "b", "c"], edges, rotations)


def _basic_x1() -> Drawing:
    F = Fraction
    pts = {"v0": (F(-1), F(0)), "v1": (F(1), F(0)), "v2": (F(0), F(-1)), "v3": (F(0), F(1))}
    return ingest_geometry(GeometricScene(pts, (("e0", ("v0", "v1")), ("e1", ("v2", "v3")))))


def _basic_lens_bad() -> Drawing:
    edges = [EdgeRecord("e0", ("a", "b"), ()), EdgeRecord("e1", ("a", "b"), ())]
    rotations = {
        "a": [("e0", 0, "fwd"), ("e1", 0, "fwd")],
        "b": [("e0", 0, "bwd"), ("e1", 0, "bwd")],
    }
    return Drawing(["a", "b"], edges, rotations)


BASIC_NAMES = ("k2", "k3", "path3", "x1", "lens-bad", "fig3a-micro", "fig4-flower")


def gen_basic(name: str) -> Drawing:
    """Small named instances; 'lens-bad' is intentionally invalid."""
    from .saturate import saturate

    if name == "k2":
        return _basic_k2()
    if name == "k3":
        return _basic_k3()
    if name == "path3":
        return _basic_path3()
    if name == "x1":
        return _basic_x1()
    if name == "lens-bad":
        return _basic_lens_bad()
    if name == "fig3a-micro":
        return saturate(ingest_geometry(fig3a_micro_scene()))
    if name == "fig4-flower":
        return saturate(ingest_geometry(fig4_flower_scene()))
    raise GenerationError(f"unknown basic drawing {name!r}; known: {', '.join(BASIC_NAMES)}")


# -- random scenes -------------------------------------------------------------

def build_random_scene(n: int, edge_budget: int, seed: int) -> GeometricScene:
    """Deterministic random straight-line scene that ingest_geometry accepts.

    n distinct rational grid points; candidate segments tried in a seeded
    random order and accepted greedily while the scene stays ingestible
    (no point on a segment, <= 3 crossings per segment, no concurrency).
    If the greedy pass under ``edge_budget`` leaves the scene disconnected,
    a repair pass adds component-joining segments beyond the budget.
    """
    if n < 1:
        raise GenerationError("need at least one point")
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(n)]
    pts: Dict[str, Point] = {}
    used = set()
    for nm in names:
        while True:
            p = (Fraction(rng.randrange(-60, 61)), Fraction(rng.randrange(-60, 61)))
            if p not in used:
                used.add(p)
                pts[nm] = p
                break

    pairs = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(pairs)

    accepted: List[Tuple[str, Tuple[str, str]]] = []
    count: Dict[int, int] = {}
    cross_pts = set()

    def try_add(u: str, v: str) -> bool:
        a, b = pts[u], pts[v]
        if any(nm not in (u, v)
               and orient(a, b, pts[nm]) == 0 and _between(pts[nm], a, b)
               for nm in names):
            return False
        new_crossings: List[Tuple[Point, int]] = []
        for idx, (sid2, (u2, v2)) in enumerate(accepted):
            rel = segment_relation(a, b, pts[u2], pts[v2])
            kind = rel[0]
            if kind == "disjoint":
                continue
            if kind == "shared-endpoint":
                if {u, v} & {u2, v2}:
                    continue
                return False
            if kind == "proper" and not ({u, v} & {u2, v2}):
                new_crossings.append((rel[1], idx))
                continue
            return False
        if len(new_crossings) > 3:
            return False
        pts_new = [p for p, _ in new_crossings]
        if len(set(pts_new)) != len(pts_new) or any(p in cross_pts for p in pts_new):
            return False
        if any(count.get(idx, 0) + 1 > 3 for _, idx in new_crossings):
            return False
        k = len(accepted)
        accepted.append((f"e{k}", (u, v)))
        for p, idx in new_crossings:
            cross_pts.add(p)
            count[idx] = count.get(idx, 0) + 1
            count[k] = count.get(k, 0) + 1
        return True

    for u, v in pairs:
        if len(accepted) >= edge_budget:
            break
        try_add(u, v)

    # connectivity repair: join remaining components, budget or not
    parent = {nm: nm for nm in names}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, (u, v) in accepted:
        parent[find(u)] = find(v)
    components = len({find(nm) for nm in names})
    while components > 1:
        for u, v in pairs:
            if find(u) != find(v) and try_add(u, v):
                parent[find(u)] = find(v)
                components -= 1
                break
        else:
            raise GenerationError(
                f"could not connect the scene for n={n}, seed={seed}")
    return GeometricScene(pts, tuple(accepted))


def random_drawing(n: int, edge_budget: int, seed: int) -> Drawing:
    """Seeded random 3-plane drawing, byte-deterministic per parameters."""
    if n < 3:
        raise GenerationError("random_drawing needs n >= 3")
    return ingest_geometry(build_random_scene(n, edge_budget, seed))
