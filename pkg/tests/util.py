"""Hand-built fixture drawings used across the test modules.

Each builder returns a fresh Drawing; rotations were derived by hand from
straight-line layouts (counterclockwise order around every node).
"""

from triplane.drawing import Drawing, EdgeRecord


def k2():
    return Drawing(
        ["a", "b"],
        [EdgeRecord("e0", ("a", "b"), ())],
        {"a": [("e0", 0, "fwd")], "b": [("e0", 0, "bwd")]},
    )


def k3():
    return Drawing(
        ["a", "b", "c"],
        [
            EdgeRecord("e0", ("a", "b"), ()),
            EdgeRecord("e1", ("b", "c"), ()),
            EdgeRecord("e2", ("c", "a"), ()),
        ],
        {
            "a": [("e0", 0, "fwd"), ("e2", 0, "bwd")],
            "b": [("e1", 0, "fwd"), ("e0", 0, "bwd")],
            "c": [("e2", 0, "fwd"), ("e1", 0, "bwd")],
        },
    )


def path3():
    return Drawing(
        ["a", "b", "c"],
        [EdgeRecord("e0", ("a", "b"), ()), EdgeRecord("e1", ("b", "c"), ())],
        {
            "a": [("e0", 0, "fwd")],
            "b": [("e0", 0, "bwd"), ("e1", 0, "fwd")],
            "c": [("e1", 0, "bwd")],
        },
    )


def x1():
    """Two edges crossing once: the diagonals of a square."""
    return Drawing(
        ["v0", "v1", "v2", "v3"],
        [
            EdgeRecord("e0", ("v0", "v2"), ("x0",)),
            EdgeRecord("e1", ("v1", "v3"), ("x0",)),
        ],
        {
            "v0": [("e0", 0, "fwd")],
            "v1": [("e1", 0, "fwd")],
            "v2": [("e0", 1, "bwd")],
            "v3": [("e1", 1, "bwd")],
            "x0": [("e0", 0, "bwd"), ("e1", 0, "bwd"), ("e0", 1, "fwd"), ("e1", 1, "fwd")],
        },
    )


def lens():
    """Two parallel uncrossed edges bounding an empty 2-gon."""
    return Drawing(
        ["a", "b"],
        [EdgeRecord("e0", ("a", "b"), ()), EdgeRecord("e1", ("a", "b"), ())],
        {
            "a": [("e0", 0, "fwd"), ("e1", 0, "fwd")],
            "b": [("e0", 0, "bwd"), ("e1", 0, "bwd")],
        },
    )


def lasso():
    """One edge crossing itself once (invalid: self-crossing)."""
    return Drawing(
        ["a", "b"],
        [EdgeRecord("e", ("a", "b"), ("x", "x"))],
        {
            "a": [("e", 0, "fwd")],
            "b": [("e", 2, "bwd")],
            "x": [("e", 0, "bwd"), ("e", 1, "fwd"), ("e", 1, "bwd"), ("e", 2, "fwd")],
        },
    )


def adjacent_cross():
    """Two edges sharing vertex a and also crossing (invalid)."""
    return Drawing(
        ["a", "b", "c"],
        [
            EdgeRecord("e0", ("a", "b"), ("x",)),
            EdgeRecord("e1", ("a", "c"), ("x",)),
        ],
        {
            "a": [("e0", 0, "fwd"), ("e1", 0, "fwd")],
            "b": [("e0", 1, "bwd")],
            "c": [("e1", 1, "bwd")],
            "x": [("e0", 0, "bwd"), ("e1", 0, "bwd"), ("e0", 1, "fwd"), ("e1", 1, "fwd")],
        },
    )


def overloaded_line():
    """A horizontal edge crossed by four vertical edges (not 3-plane)."""
    edges = [EdgeRecord("e", ("a", "b"), ("x1", "x2", "x3", "x4"))]
    rotations = {
        "a": [("e", 0, "fwd")],
        "b": [("e", 4, "bwd")],
    }
    for i in range(1, 5):
        f = f"f{i}"
        edges.append(EdgeRecord(f, (f"c{i}", f"d{i}"), (f"x{i}",)))
        rotations[f"c{i}"] = [(f, 0, "fwd")]
        rotations[f"d{i}"] = [(f, 1, "bwd")]
        rotations[f"x{i}"] = [
            ("e", i - 1, "bwd"), (f, 0, "bwd"), ("e", i, "fwd"), (f, 1, "fwd"),
        ]
    return Drawing(["a", "b"] + [f"c{i}" for i in range(1, 5)] + [f"d{i}" for i in range(1, 5)],
                   edges, rotations)


def two_components():
    return Drawing(
        ["a", "b", "c", "d"],
        [EdgeRecord("e0", ("a", "b"), ()), EdgeRecord("e1", ("c", "d"), ())],
        {
            "a": [("e0", 0, "fwd")],
            "b": [("e0", 0, "bwd")],
            "c": [("e1", 0, "fwd")],
            "d": [("e1", 0, "bwd")],
        },
    )
