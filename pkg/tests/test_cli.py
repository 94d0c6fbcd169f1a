"""End-to-end CLI behavior: output shapes, formats, exit codes."""

import json

import pytest

from nilwords.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_text_output(self, capsys):
        code, out, _ = run(capsys, "eval", "X^1 Y^1", "--arith", "exact")
        assert code == 0
        assert "element: (1, 1, 1, 1, 1)" in out
        assert "uvw: (1, 1, 1)" in out
        assert "xy: (1, 0)" in out
        assert "length: 2" in out
        assert "coarse_length: 2" in out

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys, "eval", "X^1/2 Y^1 X^1/2", "--arith", "exact",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["element"] == ["1", "1", "0", "-1/2", "1"]
        assert payload["uvw"] == ["0", "-1/2", "1"]
        assert payload["xy"] == ["1/4", "1/2"]
        assert payload["length"] == "2"
        assert payload["coarse_length"] == 3
        assert payload["abelianization_lower_bound"] == "2"

    def test_non_unit_masses(self, capsys):
        code, out, _ = run(
            capsys, "eval", "X^2", "--arith", "exact", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["uvw"] is None and payload["xy"] is None

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "eval", "Z^1")
        assert code == 2
        assert "parse error" in err

    def test_csv_rejected(self, capsys):
        code, _, err = run(capsys, "eval", "X^1 Y^1", "--format", "csv")
        assert code == 2
        assert "usage error" in err

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "eval.json"
        code, out, _ = run(
            capsys, "eval", "X^1 Y^1", "--arith", "exact",
            "--format", "json", "--out", str(path),
        )
        assert code == 0
        assert out == ""
        assert json.loads(path.read_text())["coarse_length"] == 2


class TestMember:
    def test_interior(self, capsys):
        code, out, _ = run(capsys, "member", "0.36", "0.36")
        assert code == 0
        assert "status: InteriorMember" in out

    def test_endpoint(self, capsys):
        code, out, _ = run(capsys, "member", "1", "0", "--arith", "exact")
        assert code == 0
        assert "status: EndpointMember" in out

    def test_excluded_limit_point(self, capsys):
        code, out, _ = run(capsys, "member", "1/3", "1/3", "--arith", "exact")
        assert code == 1
        assert "status: Outside" in out
        assert "failed_condition: 4x>3(1-y)^2 (exact equality)" in out

    def test_json_payload(self, capsys):
        code, out, _ = run(
            capsys, "member", "0.5", "0.5", "--format", "json"
        )
        assert code == 1
        payload = json.loads(out)
        assert payload["status"] == "Outside"
        assert payload["failed_condition"] == "or-clause"
        assert payload["boundary_equality"] is False

    def test_eps_margin(self, capsys):
        code, out, _ = run(capsys, "member", "0.345", "0.345", "--eps", "0.1")
        assert code == 1
        code, out, _ = run(capsys, "member", "0.345", "0.345")
        assert code == 0

    def test_eps_rejected_in_exact_mode(self, capsys):
        code, _, err = run(
            capsys, "member", "1/3", "1/3", "--arith", "exact", "--eps", "0.1"
        )
        assert code == 2
        assert "usage error" in err

    def test_bad_coordinate(self, capsys):
        code, _, err = run(capsys, "member", "abc", "0.5")
        assert code == 2


class TestPlot:
    def test_svg(self, capsys, tmp_path):
        path = tmp_path / "region.svg"
        code, out, _ = run(
            capsys, "plot", "--out", str(path), "--count", "16",
            "--resolution", "32",
        )
        assert code == 0
        assert f"wrote svg to {path}" in out
        assert path.read_text().startswith("<?xml")

    def test_csv(self, capsys, tmp_path):
        path = tmp_path / "region.csv"
        code, out, _ = run(
            capsys, "plot", "--format", "csv", "--out", str(path),
            "--count", "8",
        )
        assert code == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "curve_label,x,y"
        assert len(lines) == 1 + 6 * 8


class TestProfile:
    def test_planar_csv(self, capsys):
        code, out, _ = run(capsys, "profile", "0.38", "0.36", "2")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "k,distance,pattern,t_vector"
        assert len(lines) == 3
        assert lines[1].startswith("1,")

    def test_planar_json(self, capsys):
        code, out, _ = run(
            capsys, "profile", "0.38", "0.36", "2", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["objective"] == "xy"
        assert len(payload["rows"]) == 2
        assert "upper bounds" in payload["note"]
        first = payload["rows"][0]
        assert set(first) == {"k", "distance", "pattern", "t_vector"}

    def test_uvw_objective(self, capsys):
        code, out, _ = run(
            capsys, "profile", "--objective", "uvw", "1", "1", "1", "1"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 2

    def test_wrong_arity(self, capsys):
        code, _, err = run(capsys, "profile", "0.4", "2")
        assert code == 2
        code, _, err = run(
            capsys, "profile", "0.4", "0.3", "0.2", "2"
        )
        assert code == 2
        code, _, err = run(
            capsys, "profile", "0.4", "0.3", "2", "--objective", "uvw"
        )
        assert code == 2


class TestSynth:
    def test_seed_orbit_target(self, capsys):
        code, out, _ = run(capsys, "synth", "0.25", "0.5")
        assert code == 0
        assert "word: X^0.5 Y^1 X^0.5" in out
        assert "stage: seed-orbit" in out

    def test_json_payload(self, capsys):
        code, out, _ = run(
            capsys, "synth", "0.6", "0.2", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["success"] is True
        assert payload["residual"] <= 1e-9
        assert payload["sequence"]["seed"] in ("XY", "YX")
        assert payload["word_text"]
        assert len(payload["achieved"]) == 2

    def test_outside_target(self, capsys):
        code, _, err = run(capsys, "synth", "0.5", "0.5")
        assert code == 1
        assert "not synthesized" in err

    def test_budget_exhaustion(self, capsys):
        near = repr(1 / 3 + 1e-6)
        code, out, _ = run(
            capsys, "synth", near, near, "--pattern-cap", "3"
        )
        assert code == 1
        assert "not synthesized" in out

    def test_csv_rejected(self, capsys):
        code, _, err = run(capsys, "synth", "0.6", "0.2", "--format", "csv")
        assert code == 2


class TestVerify:
    def test_algebra_text(self, capsys):
        code, out, _ = run(
            capsys, "verify", "algebra", "--arith", "exact", "--trials", "50"
        )
        assert code == 0
        assert "[PASS]" in out
        assert "FAIL" not in out

    def test_convergence_json(self, capsys):
        code, out, _ = run(
            capsys, "verify", "convergence", "--trials", "16",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["suite"] == "convergence"
        assert payload["passed"] is True
        assert payload["trials"] == 16
        assert payload["checks"]

    def test_unknown_suite(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify", "nonsense"])
        assert excinfo.value.code == 2
        capsys.readouterr()


class TestParser:
    def test_missing_command(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == 2
        capsys.readouterr()

    def test_flags_accepted_after_subcommand(self, capsys):
        code, _, _ = run(
            capsys, "synth", "0.6", "0.2", "--tol", "1e-6",
            "--seed", "7", "--pattern-cap", "8",
        )
        assert code == 0
