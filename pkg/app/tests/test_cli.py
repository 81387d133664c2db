import json

import pytest

from cli import EXIT_INPUT_ERROR, EXIT_OK, EXIT_THEOREM_VIOLATION, main
from app.commands import CommandRegistry, analysis_commands
from app.exceptions import TheoremViolation


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_all_subcommands_registered():
    assert set(CommandRegistry.get_available_commands()) >= {
        "analyze", "check-gcm", "check-dim2", "check-dim3", "hilbert", "radical-compare",
        "frobenius", "search", "k-index", "oracle-compare",
    }


def test_check_gcm_worked_example(capsys, ideals_dir):
    code, out, _ = run(capsys, "check-gcm", str(ideals_dir / "I_1.ideal"))
    assert code == EXIT_OK
    assert out.strip() == "generalized CM: true (dim 2, depth ≥ 0, field Q)"


def test_check_gcm_negative_example(capsys, tmp_path):
    # an edge plus an isolated vertex
    path = tmp_path / "edge_and_point.ideal"
    path.write_text("ring n=3\ngens: x1*x3, x2*x3\n")
    code, out, _ = run(capsys, "check-gcm", str(path))
    assert code == EXIT_OK
    assert out.startswith("generalized CM: false")


def test_k_index_of_frobenius_image(capsys, ideals_dir):
    code, out, _ = run(capsys, "k-index", str(ideals_dir / "frobJ.ideal"))
    assert code == EXIT_OK
    assert out.strip() == "5"


def test_analyze_json_report(capsys, ideals_dir):
    code, out, _ = run(capsys, "analyze", str(ideals_dir / "J_1.ideal"), "--json")
    assert code == EXIT_OK
    report = json.loads(out)
    assert list(report)[:13] == ["ideal", "field", "dim", "depth", "table", "a", "b", "reg",
                                 "flc", "gcm", "cm", "k_index", "checks"]
    assert report["a"] == ["-infinity", 0, -2]
    assert report["b"] == ["infinity", 0, "-infinity"]
    assert report["table"][0] == {"i": 1, "F": [], "box": [0, 0, 0, 0], "dim": 1}
    assert report["k_index"] == 1
    assert report["gcm"] is True


def test_analyze_output_is_independent_of_threads(capsys, ideals_dir):
    path = str(ideals_dir / "I_1.ideal")
    _, single, _ = run(capsys, "analyze", path, "--json", "--parallel", "1")
    _, many, _ = run(capsys, "analyze", path, "--json", "--parallel", "4")
    assert single == many


def test_characterization_commands(capsys, ideals_dir, tmp_path):
    code, out, _ = run(capsys, "check-dim2", str(ideals_dir / "I_1.ideal"))
    assert (code, out.strip()) == (EXIT_OK, "check-dim2: true")
    code, out, _ = run(capsys, "check-dim3", str(ideals_dir / "I_3.ideal"))
    assert (code, out.strip()) == (EXIT_OK, "check-dim3: true")
    path = tmp_path / "edge_and_point.ideal"
    path.write_text("ring n=3\ngens: x1*x3, x2*x3\n")
    code, out, _ = run(capsys, "check-dim2", str(path))
    assert code == EXIT_OK
    assert out.startswith("check-dim2: false (fails ell at σ=")


def test_dimension_mismatch_is_an_input_error(capsys, ideals_dir):
    code, _, err = run(capsys, "check-dim2", str(ideals_dir / "I_2.ideal"))
    assert code == EXIT_INPUT_ERROR
    assert "check-dim2 needs" in err


def test_frobenius_prints_ideal_file(capsys, ideals_dir):
    code, out, _ = run(capsys, "frobenius", str(ideals_dir / "J_1.ideal"), "--exps", "2,2,2,2")
    assert code == EXIT_OK
    assert out.startswith("ring n=4\n")
    assert "x1^2*x3^2" in out


def test_frobenius_rejects_wrong_length(capsys, ideals_dir):
    code, _, _ = run(capsys, "frobenius", str(ideals_dir / "J_1.ideal"), "--exps", "2,2")
    assert code == EXIT_INPUT_ERROR


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", str(tmp_path / "nope.ideal"))
    assert code == EXIT_INPUT_ERROR
    assert "no such ideal file" in err


def test_parse_error_is_positioned(capsys, tmp_path):
    path = tmp_path / "bad.ideal"
    path.write_text("ring n=2\ngens\nx1^0\n")
    code, _, err = run(capsys, "check-gcm", str(path))
    assert code == EXIT_INPUT_ERROR
    assert "line 3" in err


def test_oracle_compare_random(capsys):
    code, out, _ = run(capsys, "oracle-compare", "random", "--seed", "1", "--count", "10")
    assert code == EXIT_OK
    assert out.strip() == "10/10 degreewise matches"


def test_search_over_product_seed(capsys, ideals_dir):
    code, out, _ = run(capsys, "search", str(ideals_dir / "J_1.ideal"), "--bound", "2", "--json")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["assignments"] == 256
    assert report["positives"] == 16
    assert all(e["gcm"] == e["frobenius_constant"] for e in report["entries"])


def test_radical_compare_and_hilbert(capsys, ideals_dir):
    code, out, _ = run(capsys, "radical-compare", str(ideals_dir / "I_1.ideal"))
    assert code == EXIT_OK
    assert "dimensions agree" in out
    code, out, _ = run(capsys, "hilbert", str(ideals_dir / "J_1.ideal"))
    assert code == EXIT_OK
    assert out.splitlines()[0] == "H^1: 1"


def test_unknown_subcommand_exits_with_input_error():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == EXIT_INPUT_ERROR


def test_theorem_violation_exit_code(capsys, ideals_dir, monkeypatch):
    def broken(*args, **kwargs):
        raise TheoremViolation("forced", index=1)

    monkeypatch.setattr(analysis_commands, "build_gcm_verdict", broken)
    code, _, err = run(capsys, "check-gcm", str(ideals_dir / "I_1.ideal"))
    assert code == EXIT_THEOREM_VIOLATION
    assert "forced" in err
