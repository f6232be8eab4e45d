"""CLI surface: subcommand output shapes, exit codes, file handling."""

import json
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from satopo.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---- query subcommands ------------------------------------------------------


def test_critical_lists_points_with_degrees(capsys):
    code, out, _ = run(capsys, "critical", "x^3 - x + y^2")
    assert code == 0
    d = json.loads(out)
    assert len(d["critical_points"]) == 2
    assert sorted(p["local_degree"] for p in d["critical_points"]) == [-1, 1]


def test_critical_rejects_infinite_critical_sets(capsys):
    code, _, err = run(capsys, "critical", "x^2*y")
    assert code == 2
    assert "error:" in err


def test_deg_inf_prints_an_integer(capsys):
    code, out, _ = run(capsys, "deg-inf", "x^2 + y^2")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "deg-inf", "x*(x*y - 1)")
    assert code == 0 and out.strip() == "0"


def test_lambda_reports_jump_sets(capsys):
    code, out, _ = run(capsys, "lambda", "x*(x*y - 1)")
    assert code == 0
    d = json.loads(out)
    assert d["lambda"] == ["0"]
    assert d["jump_eq"] == ["0"]


def test_chi_flavors_and_compact_variant(capsys):
    code, out, _ = run(capsys, "chi", "x^2 - y^2",
                       "--alpha", "1", "--flavor", "le")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "chi", "x^2 - y^2",
                       "--alpha", "1", "--flavor", "le", "--compact")
    assert code == 0 and out.strip() == "-1"


def test_link_at_infinity(capsys):
    # compact fiber: empty link
    code, out, _ = run(capsys, "link", "x^2 + y^2",
                       "--alpha", "1", "--flavor", "eq")
    assert code == 0 and out.strip() == "0"
    # hyperbola: four ends
    code, out, _ = run(capsys, "link", "x^2 - y^2",
                       "--alpha", "1", "--flavor", "eq")
    assert code == 0 and out.strip() == "4"
    code, out, _ = run(capsys, "link", "x^2 - y^2",
                       "--alpha", "1", "--flavor", "le")
    assert code == 0 and out.strip() == "2"


def test_branches_counts_and_stable_radius(capsys):
    code, out, _ = run(capsys, "branches", "x*(x*y - 1)")
    assert code == 0
    d = json.loads(out)
    assert d["half_branches"] == 6
    Fraction(str(d["r_infinity"]))


# ---- verify -----------------------------------------------------------------


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "C4.2-FIBER",
                       "x^2 + y^2", "--alpha", "-1")
    assert code == 0
    d = json.loads(out)
    assert d["pass"] is True and d["lhs"] == "0"


def test_verify_skip_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "T4.5-ALL", "x^2*y")
    assert code == 0
    d = json.loads(out)
    assert d["pass"] is False and d["skipped_reason"]


def test_verify_set_inputs_and_direction_flag(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "P5.4-ALL",
                       "--region", "y", "--v", "3/5,4/5")
    assert code == 0
    assert json.loads(out)["pass"] is True
    code, _, err = run(capsys, "verify", "--identity", "P5.4-ALL",
                       "--region", "y", "--v", "1,1")
    assert code == 2 and "unit circle" in err


def test_verify_requires_exactly_one_input(capsys):
    code, _, err = run(capsys, "verify", "--identity", "T5.6")
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "verify", "--identity", "T5.6",
                       "x", "--region", "y")
    assert code == 2 and "exactly one" in err


def test_verify_rejects_unknown_identity():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--identity", "T9.99", "x"])
    assert exc.value.code == 2


# ---- corpus -----------------------------------------------------------------


def test_corpus_file_all_pass(tmp_path, capsys):
    path = tmp_path / "tiny.txt"
    path.write_text("# comment\npoly: x^2 + y^2\ncurve: x^2 + y^2 - 1\n")
    code, out, _ = run(capsys, "corpus", str(path))
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1].endswith("0 failed, 0 skipped")
    assert all(l.startswith(("PASS", "SKIP")) for l in lines[:-1])


def test_corpus_parse_error_points_at_the_line(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("poly: x^2\nsurface: x\n")
    code, _, err = run(capsys, "corpus", str(path))
    assert code == 2 and "line 2" in err


def test_corpus_degenerate_input_exit_two(tmp_path, capsys):
    path = tmp_path / "deg.txt"
    path.write_text("region: x^2 + y^2\n")  # empty interior
    code, out, _ = run(capsys, "corpus", str(path))
    assert code == 2
    assert "DEGENERATE line 1" in out


def test_corpus_missing_file_exit_two(capsys):
    code, _, err = run(capsys, "corpus", "/nonexistent/corpus.txt")
    assert code == 2 and "error:" in err


def test_corpus_builtin_flag_conflicts_with_file(tmp_path, capsys):
    path = tmp_path / "c.txt"
    path.write_text("poly: x\n")
    code, _, err = run(capsys, "corpus", str(path), "--builtin")
    assert code == 2 and "not both" in err


# ---- gauss-bonnet and plot --------------------------------------------------


def test_gauss_bonnet_exact_disk(capsys):
    code, out, _ = run(capsys, "gauss-bonnet", "--region", "x^2 + y^2 - 1")
    assert code == 0
    d = json.loads(out)
    assert d["value"] == "1" and d["error_bound"] == "0"


def test_gauss_bonnet_sampled_reports_an_error_bound(capsys):
    code, out, _ = run(capsys, "gauss-bonnet", "--region", "y",
                       "--mode", "sampled", "--n", "8")
    assert code == 0
    d = json.loads(out)
    assert Fraction(d["error_bound"]) >= 0
    assert abs(Fraction(d["value"])) <= 1


def test_gauss_bonnet_needs_a_set(capsys):
    code, _, err = run(capsys, "gauss-bonnet")
    assert code == 2 and "exactly one" in err


def test_plot_writes_wellformed_svg(tmp_path, capsys):
    target = tmp_path / "saddle.svg"
    code, out, _ = run(capsys, "plot", "x^2 - y^2", "-o", str(target))
    assert code == 0 and str(target) in out
    root = ET.parse(target).getroot()
    assert root.tag.endswith("svg")


def test_plot_region(tmp_path, capsys):
    target = tmp_path / "disk.svg"
    code, _, _ = run(capsys, "plot", "--region", "x^2 + y^2 - 1",
                     "-o", str(target))
    assert code == 0
    ET.parse(target)


def test_plot_rejects_constants(tmp_path, capsys):
    code, _, err = run(capsys, "plot", "7", "-o", str(tmp_path / "x.svg"))
    assert code == 2 and "constant" in err
