import json

import pytest

from triplane.cli import main
from triplane.drawing import serialize_tdr
from triplane.generators import gen_basic, gen_fig3

import util


@pytest.fixture()
def k3_file(tmp_path):
    p = tmp_path / "k3.json"
    p.write_text(serialize_tdr(util.k3()))
    return str(p)


@pytest.fixture()
def fig3_file(tmp_path):
    p = tmp_path / "fig3.json"
    p.write_text(serialize_tdr(gen_fig3(1)))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_ok(capsys, k3_file):
    code, out, _ = run(capsys, "validate", k3_file)
    assert code == 0
    report = json.loads(out)
    assert report["valid"] is True
    assert {c["name"] for c in report["checks"]} >= {"connected", "non-homotopic"}


def test_validate_rejects_lens(capsys, tmp_path):
    p = tmp_path / "lens.json"
    p.write_text(serialize_tdr(gen_basic("lens-bad")))
    code, out, _ = run(capsys, "validate", str(p))
    assert code == 1
    report = json.loads(out)
    assert report["valid"] is False


def test_census_emits_counts(capsys, k3_file):
    code, out, _ = run(capsys, "census", k3_file)
    assert code == 0
    counts = json.loads(out)
    assert counts["n"] == 3 and counts["E"] == 3 and counts["X"] == 0
    assert counts["LARGE"] == 2


def test_check_passes_on_k3(capsys, k3_file):
    code, out, _ = run(capsys, "check", k3_file)
    assert code == 0
    report = json.loads(out)
    assert report["all_pass"] is True
    assert report["density_residuals"] == {"1": "0/1", "2": "0/1", "5": "0/1"}


def test_check_reports_known_failing_row_on_fig3(capsys, fig3_file):
    code, out, _ = run(capsys, "check", fig3_file)
    assert code == 1
    report = json.loads(out)
    failing = [r["id"] for r in report["rows"] if r["applicable"] and not r["pass"]]
    assert failing == ["3.E"]
    assert report["density_residuals"] == {"1": "0/1", "2": "0/1", "5": "0/1"}


def test_check_rejects_invalid_drawing(capsys, tmp_path):
    p = tmp_path / "lens.json"
    p.write_text(serialize_tdr(gen_basic("lens-bad")))
    code, _, err = run(capsys, "check", str(p))
    assert code == 1
    assert "valid" in err


def test_certify_numeric(capsys, fig3_file):
    code, out, _ = run(capsys, "certify", fig3_file, "--target", "crossings")
    assert code == 0
    report = json.loads(out)
    assert report["target"] == "crossings"
    assert report["total_slack"] == "10/1"
    assert report["value"] == 45
    assert report["bound"] == "55/1"


def test_certify_requires_saturation(capsys, tmp_path):
    p = tmp_path / "x1.json"
    p.write_text(serialize_tdr(util.x1()))
    code, _, err = run(capsys, "certify", str(p), "--target", "edges")
    assert code == 1
    assert "--saturate" in err
    code, out, _ = run(capsys, "certify", str(p), "--target", "edges", "--saturate")
    assert code == 0
    assert json.loads(out)["value"] == 7


def test_certify_symbolic_reports_residual(capsys):
    code, out, _ = run(capsys, "certify", "--symbolic", "--target", "edges")
    assert code == 1  # the builtin column does not cancel exactly
    report = json.loads(out)
    assert report["target"] == "edges"
    assert report["residual"]["VQUAD"] == "1/4"


def test_generate_fig3(capsys):
    code, out, _ = run(capsys, "generate", "fig3", "--layers", "2")
    assert code == 0
    tdr = json.loads(out)
    assert len(tdr["vertices"]) == 18


def test_generate_basic_unknown_name(capsys):
    code, _, err = run(capsys, "generate", "basic", "zzz")
    assert code == 2
    assert "zzz" in err


def test_generate_rejects_bad_layers(capsys):
    code, _, _ = run(capsys, "generate", "fig3", "--layers", "0")
    assert code == 2


def test_ingest_scene(capsys, tmp_path):
    p = tmp_path / "scene.json"
    p.write_text(json.dumps({
        "points": {"a": ["-1", "0"], "b": ["1", "0"], "c": ["0", "-1"], "d": ["0", "1"]},
        "segments": [{"id": "e0", "ends": ["a", "b"]}, {"id": "e1", "ends": ["c", "d"]}],
    }))
    code, out, _ = run(capsys, "ingest", str(p))
    assert code == 0
    tdr = json.loads(out)
    assert tdr["edges"][0]["crossings"] == ["x0"]


def test_ingest_rejects_bad_geometry(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({
        "points": {"a": ["0", "0"], "b": ["2", "0"], "c": ["1", "0"]},
        "segments": [{"id": "e0", "ends": ["a", "b"]}, {"id": "e1", "ends": ["a", "c"]}],
    }))
    code, _, err = run(capsys, "ingest", str(p))
    assert code == 1
    assert "segment" in err or "point" in err


def test_random_is_deterministic(capsys):
    code, out1, _ = run(capsys, "random", "--n", "6", "--budget", "10", "--seed", "3")
    assert code == 0
    code, out2, _ = run(capsys, "random", "--n", "6", "--budget", "10", "--seed", "3")
    assert out1 == out2


def test_missing_file_is_usage_error(capsys):
    code, _, err = run(capsys, "validate", "/no/such/file.json")
    assert code == 2
    assert err


def test_unknown_subcommand(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 2
    assert "invalid choice" in err


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "validate" in out


def test_pipeline_generate_then_census(capsys, tmp_path):
    code, out, _ = run(capsys, "generate", "basic", "fig4-flower")
    assert code == 0
    p = tmp_path / "flower.json"
    p.write_text(out)
    code, out, _ = run(capsys, "census", str(p))
    assert code == 0
    assert json.loads(out)["XPENT"] == 1
