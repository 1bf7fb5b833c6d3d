import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from triplane.geometry import (
    SceneError,
    ccw_from,
    ccw_sorted,
    frac_from_str,
    frac_to_str,
    orient,
    parse_scene,
    segment_param,
    segment_relation,
    serialize_scene,
)


def P(x, y):
    return (Fraction(x), Fraction(y))


def test_frac_round_trip():
    for s in ("1/2", "-3/1", "0/1", "7/3"):
        assert frac_to_str(frac_from_str(s)) == s
    assert frac_from_str(4) == Fraction(4)


def test_frac_rejects_garbage():
    for bad in ("", "x", "1/0", None, 1.5):
        with pytest.raises(SceneError):
            frac_from_str(bad)


def test_orient_signs():
    assert orient(P(0, 0), P(1, 0), P(0, 1)) > 0
    assert orient(P(0, 0), P(0, 1), P(1, 0)) < 0
    assert orient(P(0, 0), P(1, 1), P(2, 2)) == 0


def test_proper_crossing_with_exact_point():
    kind, p = segment_relation(P(0, 0), P(1, 1), P(0, 1), P(1, 0))
    assert kind == "proper"
    assert p == P(Fraction(1, 2), Fraction(1, 2))


def test_disjoint_segments():
    assert segment_relation(P(0, 0), P(1, 0), P(0, 1), P(1, 1)) == ("disjoint",)
    # collinear but separated intervals
    assert segment_relation(P(0, 0), P(1, 0), P(2, 0), P(3, 0)) == ("disjoint",)
    # parallel, never meeting
    assert segment_relation(P(0, 0), P(2, 2), P(0, 1), P(2, 3)) == ("disjoint",)


def test_shared_endpoint():
    kind, p = segment_relation(P(0, 0), P(1, 0), P(1, 0), P(1, 1))
    assert kind == "shared-endpoint"
    assert p == P(1, 0)
    # collinear segments that only touch at one point
    kind, p = segment_relation(P(0, 0), P(1, 0), P(1, 0), P(2, 0))
    assert kind == "shared-endpoint"
    assert p == P(1, 0)


def test_endpoint_on_interior():
    kind, p = segment_relation(P(0, 0), P(2, 0), P(1, 0), P(1, 1))
    assert kind == "endpoint-on-interior"
    assert p == P(1, 0)
    # symmetric case: first segment's endpoint inside the second
    kind, p = segment_relation(P(1, 0), P(1, 1), P(0, 0), P(2, 0))
    assert kind == "endpoint-on-interior"
    assert p == P(1, 0)


def test_collinear_overlap():
    assert segment_relation(P(0, 0), P(2, 0), P(1, 0), P(3, 0)) == ("collinear-overlap",)
    # containment counts as overlap
    assert segment_relation(P(0, 0), P(3, 0), P(1, 0), P(2, 0)) == ("collinear-overlap",)


_coord = st.fractions(min_value=-8, max_value=8, max_denominator=4)
_point = st.tuples(_coord, _coord)


@settings(derandomize=True, max_examples=200)
@given(_point, _point, _point, _point)
def test_segment_relation_is_symmetric(a, b, c, d):
    if a == b or c == d:
        return
    lhs = segment_relation(a, b, c, d)
    rhs = segment_relation(c, d, a, b)
    assert lhs == rhs


@settings(derandomize=True, max_examples=200)
@given(_point, _point, _point, _point)
def test_proper_crossing_point_lies_on_both_segments(a, b, c, d):
    if a == b or c == d:
        return
    rel = segment_relation(a, b, c, d)
    if rel[0] != "proper":
        return
    p = rel[1]
    for u, v in ((a, b), (c, d)):
        assert orient(u, v, p) == 0
        t = segment_param(u, v, p)
        assert 0 < t < 1


def test_segment_param_is_linear():
    a, b = P(1, 1), P(5, 3)
    mid = (Fraction(3), Fraction(2))
    assert segment_param(a, b, a) == 0
    assert segment_param(a, b, b) == 1
    assert segment_param(a, b, mid) == Fraction(1, 2)


def test_ccw_sorted_orders_by_angle_from_east():
    dirs = {
        "e": P(1, 0), "ne": P(1, 1), "n": P(0, 1), "nw": P(-1, 1),
        "w": P(-1, 0), "sw": P(-1, -1), "s": P(0, -1), "se": P(1, -1),
    }
    items = sorted(dirs.items())  # scrambled relative to angle
    assert ccw_sorted([(k, v) for k, v in items]) == [
        "e", "ne", "n", "nw", "w", "sw", "s", "se"]


def test_ccw_sorted_ignores_magnitude():
    assert ccw_sorted([("a", P(2, 0)), ("b", P(0, 3)), ("c", P(5, 5))]) == ["a", "c", "b"]


def test_ccw_from_rotates_to_base():
    items = [("e", P(1, 0)), ("n", P(0, 1)), ("w", P(-1, 0)), ("s", P(0, -1))]
    assert ccw_from(P(-1, 0), items) == ["w", "s", "e", "n"]
    assert ccw_from(P(1, -1), items) == ["e", "n", "w", "s"]


def test_scene_round_trip():
    text = json.dumps({
        "points": {"a": ["0", "0"], "b": ["1", "0"], "c": ["1/2", "3/4"]},
        "segments": [{"id": "e0", "ends": ["a", "b"]}, {"id": "e1", "ends": ["b", "c"]}],
    })
    scene = parse_scene(text)
    assert scene.points["c"] == (Fraction(1, 2), Fraction(3, 4))
    again = parse_scene(serialize_scene(scene))
    assert again.points == scene.points
    assert again.segments == scene.segments


def test_parse_scene_rejects_malformed_input():
    with pytest.raises(SceneError):
        parse_scene("not json")
    with pytest.raises(SceneError):
        parse_scene(json.dumps([]))
    with pytest.raises(SceneError):
        parse_scene(json.dumps({"points": {"a": ["0", "0"]}}))  # missing segments
    with pytest.raises(SceneError):
        parse_scene(json.dumps({                                # unknown endpoint
            "points": {"a": ["0", "0"]},
            "segments": [{"id": "e0", "ends": ["a", "zz"]}],
        }))
    with pytest.raises(SceneError):
        parse_scene(json.dumps({                                # duplicate segment id
            "points": {"a": ["0", "0"], "b": ["1", "0"], "c": ["0", "1"]},
            "segments": [{"id": "e0", "ends": ["a", "b"]}, {"id": "e0", "ends": ["b", "c"]}],
        }))
