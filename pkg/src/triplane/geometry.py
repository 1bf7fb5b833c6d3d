"""Exact rational geometry for straight-line scenes.

Coordinates are ``fractions.Fraction``; every predicate is decided by sign
computations, never by floating point.  A scene is a set of labelled points
and straight segments between them::

    {"points": {"v1": ["1/2", "-3/1"], ...},
     "segments": [{"id": "e1", "ends": ["v1", "v2"]}, ...]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Dict, List, Sequence, Tuple

Point = Tuple[Fraction, Fraction]


class SceneError(ValueError):
    """A scene file or scene content that cannot be accepted."""


def frac_from_str(s) -> Fraction:
    if isinstance(s, str):
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise SceneError(f"bad rational {s!r}") from None
    if isinstance(s, int):
        return Fraction(s)
    raise SceneError(f"bad rational {s!r}")


def frac_to_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def cross(a: Point, b: Point) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def dot(a: Point, b: Point) -> Fraction:
    return a[0] * b[0] + a[1] * b[1]


def orient(o: Point, a: Point, b: Point) -> Fraction:
    """Positive iff o->a->b turns counterclockwise."""
    return cross(sub(a, o), sub(b, o))


def segment_relation(a: Point, b: Point, c: Point, d: Point):
    """How segments ab and cd meet.

    Returns one of
      ("disjoint",)
      ("proper", point)             -- transversal interior crossing
      ("shared-endpoint", point)    -- touch exactly at a shared endpoint
      ("endpoint-on-interior", point)
      ("collinear-overlap",)
    """
    r = sub(b, a)
    s = sub(d, c)
    denom = cross(r, s)
    ca = sub(c, a)
    if denom == 0:
        if cross(ca, r) != 0:
            return ("disjoint",)
        # collinear: compare 1-d intervals along r
        t0 = dot(ca, r)
        t1 = dot(sub(d, a), r)
        lo, hi = min(t0, t1), max(t0, t1)
        mylo, myhi = Fraction(0), dot(r, r)
        if hi < mylo or lo > myhi:
            return ("disjoint",)
        if hi == mylo:
            return ("shared-endpoint", c if t0 == hi else d)
        if lo == myhi:
            return ("shared-endpoint", c if t0 == lo else d)
        return ("collinear-overlap",)
    t = cross(ca, s) / denom
    u = cross(ca, r) / denom
    if not (0 <= t <= 1 and 0 <= u <= 1):
        return ("disjoint",)
    p = (a[0] + t * r[0], a[1] + t * r[1])
    t_end = t == 0 or t == 1
    u_end = u == 0 or u == 1
    if t_end and u_end:
        return ("shared-endpoint", p)
    if t_end or u_end:
        return ("endpoint-on-interior", p)
    return ("proper", p)


def segment_param(a: Point, b: Point, p: Point) -> Fraction:
    """Parameter of p along a->b (assumes p on the line)."""
    r = sub(b, a)
    return dot(sub(p, a), r) / dot(r, r)


def _half(v: Point) -> int:
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _cmp_dir(v: Point, w: Point) -> int:
    hv, hw = _half(v), _half(w)
    if hv != hw:
        return -1 if hv < hw else 1
    c = cross(v, w)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


def ccw_sorted(items: Sequence[Tuple[object, Point]]) -> List[object]:
    """Sort (key, direction) items counterclockwise from the positive x-axis.

    Two items with the same direction are an error: a drawing cannot have
    two darts leaving a node the same way.
    """
    ordered = sorted(items, key=cmp_to_key(lambda p, q: _cmp_dir(p[1], q[1])))
    for (k1, v1), (k2, v2) in zip(ordered, ordered[1:]):
        if _cmp_dir(v1, v2) == 0:
            raise SceneError(f"darts {k1!r} and {k2!r} leave a node in the same direction")
    return [k for k, _ in ordered]


def ccw_from(base: Point, items: Sequence[Tuple[object, Point]]) -> List[object]:
    """Sort items counterclockwise starting just after direction ``base``."""

    def angle_cmp(p, q):
        return _cmp_dir(p[1], q[1])

    def key_from_base(v: Point):
        # rotate so that base maps to angle 0, then use the global order
        # (exactness: compare via cross/dot signs against base)
        c = cross(base, v)
        d = dot(base, v)
        # angle in (0, 2pi): class 0 = same direction as base (excluded),
        # 1 = CCW side (0, pi), 2 = opposite, 3 = CW side (pi, 2pi)
        if c == 0:
            cls = 0 if d > 0 else 2
        elif c > 0:
            cls = 1
        else:
            cls = 3
        return cls

    def cmp_items(p, q):
        cp, cq = key_from_base(p[1]), key_from_base(q[1])
        if cp != cq:
            return -1 if cp < cq else 1
        if cp in (0, 2):
            return 0
        c = cross(p[1], q[1])
        if c > 0:
            return -1
        if c < 0:
            return 1
        return 0

    ordered = sorted(items, key=cmp_to_key(cmp_items))
    for p, q in zip(ordered, ordered[1:]):
        if cmp_items(p, q) == 0:
            raise SceneError(f"darts {p[0]!r} and {q[0]!r} leave a node in the same direction")
    return [k for k, _ in ordered]


# -- scene format ------------------------------------------------------------

@dataclass(frozen=True)
class GeometricScene:
    points: Dict[str, Point]
    segments: Tuple[Tuple[str, Tuple[str, str]], ...]  # (id, (end, end))


def parse_scene(text: str) -> GeometricScene:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneError(f"syntax: {exc.msg} at line {exc.lineno} column {exc.colno}") from None
    if not isinstance(obj, dict) or set(obj) != {"points", "segments"}:
        raise SceneError("top level must have exactly the keys points, segments")
    points = {}
    for name, xy in obj["points"].items():
        if not isinstance(xy, list) or len(xy) != 2:
            raise SceneError(f"point {name!r} must be a coordinate pair")
        points[name] = (frac_from_str(xy[0]), frac_from_str(xy[1]))
    segments = []
    ids = set()
    for s in obj["segments"]:
        if not isinstance(s, dict) or set(s) != {"id", "ends"}:
            raise SceneError(f"segment record must have exactly id, ends: {s!r}")
        sid, ends = s["id"], s["ends"]
        if sid in ids:
            raise SceneError(f"duplicate segment id {sid!r}")
        ids.add(sid)
        if len(ends) != 2 or any(e not in points for e in ends):
            raise SceneError(f"segment {sid!r} has an end that is not a point")
        if ends[0] == ends[1]:
            raise SceneError(f"segment {sid!r} joins a point to itself")
        segments.append((sid, (ends[0], ends[1])))
    return GeometricScene(points, tuple(segments))


def serialize_scene(scene: GeometricScene) -> str:
    obj = {
        "points": {
            name: [frac_to_str(x), frac_to_str(y)]
            for name, (x, y) in sorted(scene.points.items())
        },
        "segments": [
            {"id": sid, "ends": list(ends)}
            for sid, ends in sorted(scene.segments, key=lambda s: s[0])
        ],
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
