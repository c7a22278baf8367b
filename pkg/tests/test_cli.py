import json

import pytest

from mme.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_graph_chebyshev(capsys):
    code, out, _ = run(capsys, "analyze-graph", "--map", "z^3-3z")
    assert code == 0
    report = json.loads(out)
    bd = sorted(tuple(c["bidegree"]) for c in report["components"])
    assert bd == [(1, 1), (2, 2)]
    assert all(c["genus"] == 0 for c in report["components"])


def test_analyze_graph_deterministic_output(capsys):
    _, out1, _ = run(capsys, "analyze-graph", "--map", "z^2+1", "--seed", "4")
    _, out2, _ = run(capsys, "analyze-graph", "--map", "z^2+1", "--seed", "4")
    assert out1 == out2


def test_powermap_equal_and_unequal(capsys):
    code, out, _ = run(capsys, "powermap", "--df", "6", "--dg", "12")
    assert code == 0
    assert json.loads(out)["same_periodic_points"] is True
    code, out, _ = run(capsys, "powermap", "--df", "3", "--dg", "5")
    assert json.loads(out)["same_periodic_points"] is False


def test_catalog_run_pass_exits_zero(capsys):
    code, out, _ = run(capsys, "catalog", "run", "zieve-family",
                       "--param", "n=2", "--param", "m=1")
    assert code == 0
    assert json.loads(out)["all_pass"] is True


def test_catalog_run_fail_exits_one(capsys):
    code, out, _ = run(capsys, "catalog", "run", "zieve-family",
                       "--param", "n=2", "--param", "m=2")
    assert code == 1
    assert json.loads(out)["all_pass"] is False


def test_parse_error_exits_two(capsys):
    code, _, err = run(capsys, "analyze-graph", "--map", "z^^2")
    assert code == 2
    assert "position" in err


def test_unknown_catalog_entry_exits_two(capsys):
    code, _, err = run(capsys, "catalog", "run", "nonexistent")
    assert code == 2


def test_compose_and_iterate(capsys):
    code, out, _ = run(capsys, "compose", "--f", "z^2+1", "--g", "1/z")
    assert code == 0
    obj = json.loads(out)
    assert obj["num"] == ["1", "0", "1"]
    assert obj["den"] == ["0", "0", "1"]
    code, out, _ = run(capsys, "iterate", "--map", "z^2", "--n", "3")
    assert json.loads(out)["num"] == ["0"] * 8 + ["1"]


def test_shared_iterate_subcommand(capsys):
    code, out, _ = run(capsys, "iterate", "--map", "z^2", "--shared-with",
                       "z^3", "--budget", "1296")
    assert code == 0
    assert json.loads(out)["shared_iterate"] is None


def test_certify_triple(capsys):
    code, out, _ = run(
        capsys, "certify",
        "--T", "z^2(z+1)",
        "--R", "(1-z^2)/(z^3-1)",
        "--S", "(z-z^3)/(z^3-1)",
    )
    assert code == 0
    assert json.loads(out)["all_pass"] is True


def test_sigma_subcommand(capsys):
    code, out, _ = run(capsys, "sigma", "--map", "z + 1/z")
    assert code == 0
    assert json.loads(out)["entries"] == ["0", "1", "1", "0"]


def test_field_and_bind_options(capsys):
    code, out, _ = run(capsys, "compose", "--field", "1,1,1",
                       "--bind", "a=1+w", "--f", "z^2+a", "--g", "z")
    assert code == 0
    assert json.loads(out)["num"][0] == ["1", "1"]


def test_measure_same_map(capsys):
    code, out, _ = run(capsys, "measure", "--f", "z^2-1", "--g", "z^2-1",
                       "--count", "800", "--depth", "25")
    assert code == 0
    assert json.loads(out)["verdict"] == "SAME"


def test_render_to_file(tmp_path, capsys):
    target = tmp_path / "out.ppm"
    code, _, _ = run(capsys, "render", "--map", "z^2", "--width", "60",
                     "--height", "60", "--count", "1500", "--depth", "20",
                     "--out", str(target))
    assert code == 0
    blob = target.read_bytes()
    assert blob.startswith(b"P6\n60 60\n255\n")
    assert len(blob) == len(b"P6\n60 60\n255\n") + 60 * 60 * 3
