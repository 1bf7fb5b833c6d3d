import pytest

from triplane.drawing import serialize_tdr, stats, validate
from triplane.generators import gen_fig3, random_drawing
from triplane.saturate import (
    SaturateError,
    filled_witness,
    is_3saturated,
    is_filled,
    saturate,
)

import util


def test_k3_is_already_saturated():
    d = util.k3()
    assert is_filled(d)
    assert is_3saturated(d)
    assert serialize_tdr(saturate(d)) == serialize_tdr(d)


def test_k2_is_filled_but_too_small():
    d = util.k2()
    assert is_filled(d)
    assert not is_3saturated(d)  # needs at least 3 vertices
    with pytest.raises(SaturateError):
        saturate(d)


def test_path3_witness_and_fill():
    d = util.path3()
    assert filled_witness(d) is not None
    _, u, v = filled_witness(d)
    assert {u, v} == {"a", "c"}

    out = saturate(d)
    assert is_3saturated(out)
    assert sorted(out.vertices) == ["a", "b", "c"]
    assert {tuple(sorted(e.ends)) for e in out.edges.values()} == {
        ("a", "b"), ("a", "c"), ("b", "c")}
    assert all(not e.crossings for e in out.edges.values())


def test_x1_fill_adds_five_boundary_edges():
    d = util.x1()
    out = saturate(d)
    assert is_3saturated(out)
    st = stats(out)
    assert st.n == 4 and st.E == 7 and st.X == 1
    assert st.E0 == 5 and st.E1 == 2


def test_saturation_preserves_vertices_and_crossings():
    for seed in range(8):
        d = random_drawing(8, 16, seed)
        out = saturate(d)
        before, after = stats(d), stats(out)
        assert sorted(out.vertices) == sorted(d.vertices)
        assert after.X == before.X
        assert after.E >= before.E
        assert validate(out).valid
        assert is_3saturated(out)


def test_saturation_is_idempotent():
    for build in (util.path3, util.x1, lambda: random_drawing(7, 12, 3)):
        once = saturate(build())
        twice = saturate(once)
        assert serialize_tdr(twice) == serialize_tdr(once)


def test_saturation_never_crosses_new_edges():
    for seed in (0, 1, 2):
        out = saturate(random_drawing(9, 20, seed))
        rep = stats(out)
        # every added edge is uncrossed, so crossing totals stay put
        assert rep.E1 + 2 * rep.E2 + 3 * rep.E3 == 2 * rep.X


def test_fig3_is_born_saturated():
    d = gen_fig3(1)
    assert is_3saturated(d)
    assert stats(saturate(d)).E == stats(d).E


def test_saturate_rejects_invalid_input():
    with pytest.raises(SaturateError):
        saturate(util.lens())
