"""Topological drawings of multigraphs with crossings, and their JSON format.

A drawing records vertices, edges (each with the ordered list of its
crossings), and the counterclockwise rotation of darts around every vertex
and crossing.  An edge with k crossings is divided into segments 0..k;
segment i runs from point i to point i+1, where point 0 is ``ends[0]``,
point k+1 is ``ends[1]``, and points 1..k are the crossings in order.
Dart ``(e, i, "fwd")`` leaves point i toward point i+1; ``"bwd"`` the
reverse.

The JSON wire format::

    {"vertices": ["v1", ...],
     "edges": [{"id": "e1", "ends": ["v1", "v2"], "crossings": ["x1", ...]}, ...],
     "rotations": {"<node>": [{"edge": "e1", "seg": 0, "dir": "fwd"}, ...], ...}}

Canonical form: vertices sorted, edges sorted by id, rotation keys sorted,
each rotation list rotated to start at its smallest dart, compact
separators, sorted object keys, trailing newline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Mapping, Sequence, Tuple

from .combmap import DIRS, CombMap, Dart, twin

Segment = Tuple[str, int]


class TDRError(ValueError):
    """A drawing file that cannot be accepted, with the violated invariant."""


@dataclass(frozen=True)
class EdgeRecord:
    id: str
    ends: Tuple[str, str]
    crossings: Tuple[str, ...]


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise TDRError(msg)


class Drawing:
    """An immutable drawing; construction performs all structural checks.

    Structural soundness (ids resolve, every crossing lies on exactly two
    edge records, rotations cover every dart exactly once at its tail) is
    enforced here; geometric plausibility (planarity of the rotation
    system, crossing alternation, and so on) is the job of ``validate``.
    """

    __slots__ = ("vertices", "edges", "rotations", "_crossings", "_planar", "_vertex_set")

    def __init__(
        self,
        vertices: Sequence[str],
        edges: Sequence[EdgeRecord],
        rotations: Mapping[str, Sequence[Dart]],
    ):
        verts = tuple(vertices)
        _require(all(isinstance(v, str) and v for v in verts), "vertex ids must be nonempty strings")
        _require(len(set(verts)) == len(verts), "duplicate vertex id")
        vset = frozenset(verts)

        emap: Dict[str, EdgeRecord] = {}
        occ: Dict[str, List[Tuple[str, int]]] = {}
        for e in edges:
            _require(isinstance(e.id, str) and bool(e.id), "edge ids must be nonempty strings")
            _require(e.id not in emap, f"duplicate edge id {e.id!r}")
            _require(len(e.ends) == 2 and all(u in vset for u in e.ends),
                     f"edge {e.id!r} has an end that is not a vertex")
            for i, x in enumerate(e.crossings):
                _require(isinstance(x, str) and bool(x), f"edge {e.id!r}: crossing ids must be nonempty strings")
                _require(x not in vset, f"crossing id {x!r} collides with a vertex id")
                occ.setdefault(x, []).append((e.id, i))
            emap[e.id] = e
        for x, places in occ.items():
            _require(len(places) == 2, f"dangling crossing {x!r}: appears on {len(places)} edge slot(s), expected 2")

        nodes = vset | set(occ)
        rot: Dict[str, Tuple[Dart, ...]] = {}
        seen: Dict[Dart, str] = {}
        for node, darts in rotations.items():
            _require(node in nodes, f"rotation given for unknown node {node!r}")
            tupled = []
            for d in darts:
                d = (d[0], d[1], d[2])
                _require(d[0] in emap, f"rotation at {node!r} names unknown edge {d[0]!r}")
                k = len(emap[d[0]].crossings)
                _require(isinstance(d[1], int) and 0 <= d[1] <= k,
                         f"rotation at {node!r}: segment index {d[1]} out of range for edge {d[0]!r}")
                _require(d[2] in DIRS, f"rotation at {node!r}: bad direction {d[2]!r}")
                _require(d not in seen, f"dart {d!r} listed more than once")
                seen[d] = node
                tupled.append(d)
            rot[node] = tuple(tupled)
        _require(set(rot) == nodes,
                 "rotations must cover exactly the vertices and crossings; missing: "
                 + repr(sorted(nodes - set(rot))[:3]))

        self.vertices = verts
        self.edges = emap
        self.rotations = rot
        self._vertex_set = vset
        self._crossings = {x: tuple(sorted(p)) for x, p in occ.items()}
        self._planar: CombMap | None = None

        expected = 0
        for e in emap.values():
            pts = self.points(e.id)
            for i in range(len(pts) - 1):
                for d in ((e.id, i, "fwd"), (e.id, i, "bwd")):
                    _require(d in seen, f"dart {d!r} missing from rotations")
                    t = pts[i] if d[2] == "fwd" else pts[i + 1]
                    _require(seen[d] == t,
                             f"dart {d!r} listed at {seen[d]!r} but its tail is {t!r}")
                expected += 2
        _require(expected == len(seen), "rotations contain darts of no edge segment")

    # -- basic geometry of the incidence structure ------------------------

    def points(self, edge_id: str) -> Tuple[str, ...]:
        """End, crossings in order, other end."""
        e = self.edges[edge_id]
        return (e.ends[0],) + e.crossings + (e.ends[1],)

    def is_vertex(self, node: str) -> bool:
        return node in self._vertex_set

    @property
    def crossings(self) -> Dict[str, Tuple[Tuple[str, int], Tuple[str, int]]]:
        """Crossing id -> its two (edge, position) occurrences, sorted."""
        return self._crossings

    def crossing_edges(self, x: str) -> Tuple[str, str]:
        (e1, _), (e2, _) = self._crossings[x]
        return (e1, e2)

    def other_edge_at(self, x: str, edge_id: str) -> str:
        e1, e2 = self.crossing_edges(x)
        return e2 if edge_id == e1 else e1

    def tail(self, dart: Dart) -> str:
        pts = self.points(dart[0])
        return pts[dart[1]] if dart[2] == "fwd" else pts[dart[1] + 1]

    def head(self, dart: Dart) -> str:
        return self.tail(twin(dart))

    def segment_nodes(self, seg: Segment) -> Tuple[str, str]:
        pts = self.points(seg[0])
        return (pts[seg[1]], pts[seg[1] + 1])

    def is_inner_segment(self, seg: Segment) -> bool:
        """True iff both endpoints of the segment are crossings."""
        return 0 < seg[1] < len(self.edges[seg[0]].crossings)

    def inner_segments(self) -> List[Segment]:
        out = []
        for eid in sorted(self.edges):
            for i in range(1, len(self.edges[eid].crossings)):
                out.append((eid, i))
        return out

    def planarize(self) -> CombMap:
        """The map whose nodes are the vertices and crossings."""
        if self._planar is None:
            self._planar = CombMap(self.rotations)
        return self._planar

    def canonical(self) -> str:
        return serialize_tdr(self)

    def __eq__(self, other) -> bool:
        return isinstance(other, Drawing) and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())


# -- JSON interchange ------------------------------------------------------

def _dart_from_json(obj) -> Dart:
    if not isinstance(obj, dict) or set(obj) != {"edge", "seg", "dir"}:
        raise TDRError(f"malformed dart object {obj!r}")
    return (obj["edge"], obj["seg"], obj["dir"])


def parse_tdr(text: str) -> Drawing:
    """Parse the JSON wire format; raises TDRError on any defect."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TDRError(f"syntax: {exc.msg} at line {exc.lineno} column {exc.colno}") from None
    _require(isinstance(obj, dict), "top level must be an object")
    _require(set(obj) == {"vertices", "edges", "rotations"},
             "top level must have exactly the keys vertices, edges, rotations")
    _require(isinstance(obj["vertices"], list), "vertices must be a list")
    edges = []
    _require(isinstance(obj["edges"], list), "edges must be a list")
    for e in obj["edges"]:
        _require(isinstance(e, dict) and set(e) == {"id", "ends", "crossings"},
                 f"edge record must have exactly id, ends, crossings: {e!r}")
        _require(isinstance(e["ends"], list) and len(e["ends"]) == 2,
                 f"edge {e.get('id')!r}: ends must be a pair")
        _require(isinstance(e["crossings"], list), f"edge {e.get('id')!r}: crossings must be a list")
        edges.append(EdgeRecord(e["id"], (e["ends"][0], e["ends"][1]), tuple(e["crossings"])))
    _require(isinstance(obj["rotations"], dict), "rotations must be an object")
    rotations = {}
    for node, lst in obj["rotations"].items():
        _require(isinstance(lst, list), f"rotation at {node!r} must be a list")
        rotations[node] = [_dart_from_json(d) for d in lst]
    return Drawing(obj["vertices"], edges, rotations)


def _dart_to_json(d: Dart) -> dict:
    return {"edge": d[0], "seg": d[1], "dir": d[2]}


def _canonical_rotation(darts: Sequence[Dart]) -> Sequence[Dart]:
    if not darts:
        return tuple(darts)
    i = min(range(len(darts)), key=lambda j: darts[j])
    return tuple(darts[i:]) + tuple(darts[:i])


def serialize_tdr(drawing: Drawing) -> str:
    """Canonical serialization (stable bytes for equal drawings)."""
    obj = {
        "vertices": sorted(drawing.vertices),
        "edges": [
            {
                "id": e.id,
                "ends": list(e.ends),
                "crossings": list(e.crossings),
            }
            for e in sorted(drawing.edges.values(), key=lambda e: e.id)
        ],
        "rotations": {
            node: [_dart_to_json(d) for d in _canonical_rotation(drawing.rotations[node])]
            for node in sorted(drawing.rotations)
        },
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# -- validation -------------------------------------------------------------

CHECK_NAMES = (
    "no-loops",
    "3-plane",
    "no-self-cross",
    "no-adjacent-cross",
    "crossing-alternation",
    "sphere",
    "connected",
    "non-homotopic",
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witnesses: Tuple[str, ...] = ()


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    checks: Tuple[CheckResult, ...]

    def as_dict(self) -> dict:
        return {
            "valid": self.valid,
            "checks": [
                {"name": c.name, "pass": c.passed, "witnesses": list(c.witnesses)}
                for c in self.checks
            ],
        }

    def failing(self) -> Tuple[str, ...]:
        return tuple(c.name for c in self.checks if not c.passed)


def _alternates(drawing: Drawing, x: str) -> bool:
    rot = drawing.rotations[x]
    if len(rot) != 4:
        return False
    e1, e2 = drawing.crossing_edges(x)
    return (
        rot[0][0] == rot[2][0]
        and rot[1][0] == rot[3][0]
        and {rot[0][0], rot[1][0]} == {e1, e2}
    )


def validate(drawing: Drawing) -> ValidationReport:
    """Run the eight validity checks; witnesses name offending objects."""
    results = []

    loops = tuple(e.id for e in drawing.edges.values() if e.ends[0] == e.ends[1])
    results.append(CheckResult("no-loops", not loops, tuple(sorted(loops))))

    heavy = tuple(sorted(e.id for e in drawing.edges.values() if len(e.crossings) > 3))
    results.append(CheckResult("3-plane", not heavy, heavy))

    selfx = tuple(sorted(x for x in drawing.crossings
                         if drawing.crossing_edges(x)[0] == drawing.crossing_edges(x)[1]))
    results.append(CheckResult("no-self-cross", not selfx, selfx))

    adjacent = []
    for x in sorted(drawing.crossings):
        e1, e2 = drawing.crossing_edges(x)
        if e1 != e2 and set(drawing.edges[e1].ends) & set(drawing.edges[e2].ends):
            adjacent.append(x)
    results.append(CheckResult("no-adjacent-cross", not adjacent, tuple(adjacent)))

    nonalt = tuple(sorted(x for x in drawing.crossings if not _alternates(drawing, x)))
    results.append(CheckResult("crossing-alternation", not nonalt, nonalt))

    cmap = drawing.planarize()
    euler = cmap.euler_characteristic()
    results.append(CheckResult("sphere", euler == 2, () if euler == 2 else (f"euler={euler}",)))

    if cmap.is_connected():
        results.append(CheckResult("connected", True))
    else:
        reached = cmap.component_of(min(cmap.rotations)) if cmap.rotations else frozenset()
        stranded = min(set(cmap.rotations) - reached)
        results.append(CheckResult("connected", False, (stranded,)))

    lenses = set()
    for walk in cmap.faces():
        if len(walk) == 2 and walk[0][:2] != walk[1][:2]:
            a, b = sorted((walk[0][:2], walk[1][:2]))
            lenses.add(f"{a[0]}:{a[1]}|{b[0]}:{b[1]}")
    results.append(CheckResult("non-homotopic", not lenses, tuple(sorted(lenses))))

    return ValidationReport(all(c.passed for c in results), tuple(results))


# -- headline counts --------------------------------------------------------

@dataclass(frozen=True)
class DrawingStats:
    n: int
    E: int
    X: int
    E0: int
    E1: int
    E2: int
    E3: int
    Ex: int

    def as_dict(self) -> dict:
        return {
            "n": self.n, "E": self.E, "X": self.X,
            "E0": self.E0, "E1": self.E1, "E2": self.E2, "E3": self.E3,
            "Ex": self.Ex,
        }


def stats(drawing: Drawing) -> DrawingStats:
    by_load = [0, 0, 0, 0]
    extra = 0
    for e in drawing.edges.values():
        k = len(e.crossings)
        if k <= 3:
            by_load[k] += 1
        else:
            extra += 1  # not 3-plane; still counted in E and Ex
    e0 = by_load[0]
    return DrawingStats(
        n=len(drawing.vertices),
        E=len(drawing.edges),
        X=len(drawing.crossings),
        E0=e0,
        E1=by_load[1],
        E2=by_load[2],
        E3=by_load[3],
        Ex=len(drawing.edges) - e0,
    )
