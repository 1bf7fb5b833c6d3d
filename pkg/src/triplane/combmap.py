"""Rotation-system combinatorial maps on the sphere.

A map is a set of nodes, each carrying the cyclic counterclockwise list of
darts leaving it.  A dart is a triple ``(edge, seg, dir)``: segment ``seg``
of ``edge``, traversed forwards (``"fwd"``) or backwards (``"bwd"``); its
twin is the same segment the other way.  Faces are the orbits of
``d -> rotation_successor(twin(d))``.  With counterclockwise rotations a
bounded face's walk runs clockwise, i.e. every face lies to the right of
each of its darts, and the gap in a node's rotation just after
``twin(arrival)`` points into the face — that is where new darts are
spliced when an edge is inserted inside a face.
"""

from __future__ import annotations

from typing import Dict, Iterator, Mapping, Sequence, Tuple

Dart = Tuple[str, int, str]

DIRS = ("fwd", "bwd")


class MapError(ValueError):
    """Raised when a rotation system does not describe a map."""


def twin(dart: Dart) -> Dart:
    """The same segment traversed in the other direction."""
    edge, seg, direction = dart
    return (edge, seg, "bwd" if direction == "fwd" else "fwd")


def _as_dart(obj) -> Dart:
    try:
        edge, seg, direction = obj
    except (TypeError, ValueError):
        raise MapError(f"malformed dart {obj!r}") from None
    if not isinstance(edge, str) or not isinstance(seg, int) or seg < 0 or direction not in DIRS:
        raise MapError(f"malformed dart {obj!r}")
    return (edge, seg, direction)


class CombMap:
    """An embedded multigraph, immutable once built.

    ``rotations`` must list every dart exactly once, at its tail node, and
    must contain the twin of every dart it contains.
    """

    __slots__ = ("rotations", "_pos", "_edge_ids", "_faces")

    def __init__(self, rotations: Mapping[str, Sequence[Dart]]):
        rot: Dict[str, Tuple[Dart, ...]] = {}
        pos: Dict[Dart, Tuple[str, int]] = {}
        for node in rotations:
            darts = tuple(_as_dart(d) for d in rotations[node])
            rot[node] = darts
            for i, d in enumerate(darts):
                if d in pos:
                    raise MapError(f"dart {d!r} appears in more than one rotation slot")
                pos[d] = (node, i)
        for d in pos:
            if twin(d) not in pos:
                raise MapError(f"dart {d!r} has no twin in the map")
        self.rotations = rot
        self._pos = pos
        self._edge_ids = frozenset(d[0] for d in pos)
        self._faces: Tuple[Tuple[Dart, ...], ...] | None = None

    @property
    def nodes(self) -> Tuple[str, ...]:
        return tuple(self.rotations)

    @property
    def edge_ids(self) -> frozenset:
        return self._edge_ids

    def darts(self) -> Iterator[Dart]:
        return iter(self._pos)

    def num_segments(self) -> int:
        return len(self._pos) // 2

    def tail(self, dart: Dart) -> str:
        """The node a dart leaves."""
        return self._pos[dart][0]

    def head(self, dart: Dart) -> str:
        """The node a dart enters."""
        return self._pos[twin(dart)][0]

    def successor(self, dart: Dart) -> Dart:
        """The next dart counterclockwise around the tail of ``dart``."""
        node, i = self._pos[dart]
        r = self.rotations[node]
        return r[(i + 1) % len(r)]

    def next_dart(self, dart: Dart) -> Dart:
        """Face successor: the rotation successor of the twin."""
        return self.successor(twin(dart))

    def faces(self) -> Tuple[Tuple[Dart, ...], ...]:
        """All face walks, each starting at its smallest dart, sorted."""
        if self._faces is None:
            seen = set()
            out = []
            for d0 in sorted(self._pos):
                if d0 in seen:
                    continue
                walk = [d0]
                seen.add(d0)
                d = self.next_dart(d0)
                while d != d0:
                    walk.append(d)
                    seen.add(d)
                    d = self.next_dart(d)
                out.append(tuple(walk))
            out.sort(key=lambda w: w[0])
            self._faces = tuple(out)
        return self._faces

    def face_of(self) -> Dict[Dart, Tuple[Dart, ...]]:
        """Map each dart to the face walk containing it."""
        table: Dict[Dart, Tuple[Dart, ...]] = {}
        for walk in self.faces():
            for d in walk:
                table[d] = walk
        return table

    def euler_characteristic(self) -> int:
        return len(self.rotations) - self.num_segments() + len(self.faces())

    def is_connected(self) -> bool:
        if not self.rotations:
            return True
        start = min(self.rotations)
        seen = {start}
        stack = [start]
        while stack:
            node = stack.pop()
            for d in self.rotations[node]:
                h = self.head(d)
                if h not in seen:
                    seen.add(h)
                    stack.append(h)
        return len(seen) == len(self.rotations)

    def component_of(self, node: str) -> frozenset:
        seen = {node}
        stack = [node]
        while stack:
            n = stack.pop()
            for d in self.rotations[n]:
                h = self.head(d)
                if h not in seen:
                    seen.add(h)
                    stack.append(h)
        return frozenset(seen)

    def insert_edge_in_face(
        self,
        face: Sequence[Dart],
        occurrence_u: int,
        occurrence_v: int,
        edge_id: str,
    ) -> "CombMap":
        """Insert an uncrossed edge between two node-incidences of a face.

        ``occurrence_u`` / ``occurrence_v`` index into the face walk; the new
        edge joins the tails of the two indexed darts, which must be distinct
        nodes.  Returns a new map in which the face is split in two; the
        Euler characteristic is unchanged.
        """
        if edge_id in self._edge_ids:
            raise MapError(f"edge id {edge_id!r} already present")
        walk = tuple(face)
        if not walk or any(self.next_dart(walk[i - 1]) != walk[i] for i in range(len(walk))):
            raise MapError("not a face walk of this map")
        if occurrence_u == occurrence_v:
            raise MapError("occurrences must be distinct")
        u = self.tail(walk[occurrence_u])
        v = self.tail(walk[occurrence_v])
        if u == v:
            raise MapError(f"occurrences are incidences of the same node {u!r}")
        new_rot = {n: list(r) for n, r in self.rotations.items()}

        def splice(node: str, after: Dart, new: Dart) -> None:
            r = new_rot[node]
            r.insert(r.index(after) + 1, new)

        splice(u, twin(walk[occurrence_u - 1]), (edge_id, 0, "fwd"))
        splice(v, twin(walk[occurrence_v - 1]), (edge_id, 0, "bwd"))
        return CombMap(new_rot)
