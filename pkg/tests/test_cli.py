"""Command line behavior: output formats, exit codes, determinism."""

import io
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from fillperm.certificates import GENUS2_BASE
from fillperm.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_valid_certificate(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--sigma", GENUS2_BASE, "--genus", "2", "--punctures", "3"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "n=5"
        assert lines[1] == "degree-divisible-by-4: PASS (degree 20 = 4*5)"
        assert lines[-1] == "result: VALID"
        assert sum(": PASS" in ln for ln in lines) == 9

    def test_invalid_certificate_exits_2(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--sigma", "(1,2,3,4)", "--genus", "0", "--punctures", "0"
        )
        assert code == 2
        assert out.splitlines()[-1] == "result: INVALID"
        assert any(": FAIL" in ln for ln in out.splitlines())

    def test_malformed_sigma_exits_1(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--sigma", "(1,2,3", "--genus", "1", "--punctures", "0"
        )
        assert code == 1
        assert "malformed" in err

    def test_missing_subcommand_exits_1(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 1

    def test_sigma_from_file(self, capsys, tmp_path):
        path = tmp_path / "sigma.txt"
        path.write_text(GENUS2_BASE + "\n")
        code, out, _ = run_cli(
            capsys, "verify", "--sigma-file", str(path), "--genus", "2", "--punctures", "3"
        )
        assert code == 0 and "result: VALID" in out

    def test_sigma_from_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr(sys, "stdin", io.StringIO("(1,2,3,4)\n"))
        code, out, _ = run_cli(
            capsys, "verify", "--sigma-file", "-", "--genus", "1", "--punctures", "0"
        )
        assert code == 0 and "result: VALID" in out

    def test_explicit_n_pads_degree(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--sigma", "(1,2)(3,4)", "--n", "2", "--genus", "1", "--punctures", "0"
        )
        assert code == 2
        assert out.splitlines()[0] == "n=2"


class TestGlue:
    def test_certificate_decomposition(self, capsys):
        code, out, _ = run_cli(capsys, "glue", "--sigma", GENUS2_BASE, "--punctures", "3")
        assert code == 0
        assert out.splitlines() == [
            "F1: a1 b1 a5' b2' *",
            "F2: a2 b4 a3' b3' a5 b2 a4' b4' a3 b5 a1' b1' *",
            "F3: b3 a2' b5' a4 *",
            "vertices=5",
            "edges=10",
            "faces=3",
            "euler=-2",
            "genus=2",
        ]

    def test_too_many_punctures_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "glue", "--sigma", "(1,2,3,4)", "--punctures", "2")
        assert code == 2
        assert "exceeds" in err


class TestSearch:
    def test_torus_base(self, capsys):
        code, out, _ = run_cli(
            capsys, "search", "--genus", "1", "--punctures", "0", "--n", "1"
        )
        assert code == 0
        assert out.splitlines() == ["(1,2,3,4)", "(1,4,3,2)", "count=2 dedup=2 nodes=2"]

    def test_summary_reports_classes_without_dedup(self, capsys):
        _, out, _ = run_cli(capsys, "search", "--genus", "0", "--punctures", "4", "--n", "2")
        assert out.splitlines()[-1].startswith("count=4 dedup=1 nodes=")

    def test_dedup_prints_class_representatives(self, capsys):
        _, out, _ = run_cli(
            capsys, "search", "--genus", "0", "--punctures", "4", "--n", "2", "--dedup"
        )
        lines = out.splitlines()
        assert lines[0] == "(1,2)(3,6)(4,5)(7,8)"
        assert lines[-1].startswith("count=4 dedup=1")

    def test_naive_agrees(self, capsys):
        _, fast, _ = run_cli(capsys, "search", "--genus", "1", "--punctures", "0", "--n", "2")
        _, slow, _ = run_cli(
            capsys, "search", "--genus", "1", "--punctures", "0", "--n", "2", "--naive"
        )
        assert fast.splitlines()[:-1] == slow.splitlines()[:-1]

    def test_node_cap_exits_3(self, capsys):
        code, _, err = run_cli(
            capsys,
            "search", "--genus", "2", "--punctures", "3", "--n", "5", "--max-nodes", "100",
        )
        assert code == 3
        assert "node budget" in err

    def test_byte_identical_reruns(self, capsys):
        args = ("search", "--genus", "1", "--punctures", "2", "--n", "3")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second


class TestExtend:
    def test_torus_to_two_punctures(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "extend", "--sigma", "(1,2,3,4)", "--genus", "1", "--punctures", "0",
            "--target-p", "2",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "(1,4,5,2,7,12,9,8)(3,10)(6,11)"
        assert lines[1] == "n=3"
        assert lines[-1] == "result: VALID"

    def test_parity_mismatch_exits_2(self, capsys):
        code, _, err = run_cli(
            capsys,
            "extend", "--sigma", "(1,2,3,4)", "--genus", "1", "--punctures", "0",
            "--target-p", "3",
        )
        assert code == 2
        assert "pairs" in err


class TestTable:
    def test_single_value(self, capsys):
        assert run_cli(capsys, "table", "--genus", "2", "--punctures", "3")[:2] == (0, "5\n")

    def test_undefined_surface_prints_none(self, capsys):
        assert run_cli(capsys, "table", "--genus", "0", "--punctures", "2")[:2] == (0, "none\n")

    def test_grid(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--max-genus", "2", "--max-punctures", "4")
        assert code == 0
        assert out.splitlines() == [
            "g\\p 0 1 2 3 4",
            "0 none none none none 2",
            "1 1 1 2 3 4",
            "2 4 4 4 5 6",
        ]

    def test_grid_needs_both_bounds(self, capsys):
        code, _, err = run_cli(capsys, "table", "--max-genus", "2")
        assert code == 1 and "grid mode" in err

    def test_no_arguments_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "table")
        assert code == 1 and "need --genus" in err


class TestExportSvg:
    def test_writes_parseable_svg(self, capsys, tmp_path):
        out_path = tmp_path / "surface.svg"
        code, out, _ = run_cli(
            capsys,
            "export-svg", "--sigma", GENUS2_BASE, "--punctures", "3", "--out", str(out_path),
        )
        assert code == 0
        assert out == f"wrote {out_path}\n"
        root = ET.parse(out_path).getroot()
        assert root.tag.endswith("svg")
        texts = [el.text for el in root.iter() if el.tag.endswith("text")]
        assert len(texts) == 20
        assert "a5'" in texts and "b3" in texts

    def test_deterministic_bytes(self, capsys, tmp_path):
        paths = [tmp_path / "a.svg", tmp_path / "b.svg"]
        for p in paths:
            run_cli(capsys, "export-svg", "--sigma", "(1,2,3,4)", "--punctures", "0",
                    "--out", str(p))
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_semantic_failure_exits_2(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys,
            "export-svg", "--sigma", "(1,2)(3,6)(4,5)(7,8)", "--punctures", "0",
            "--out", str(tmp_path / "x.svg"),
        )
        assert code == 2 and "bigon" in err
        assert not (tmp_path / "x.svg").exists()


class TestEntryPoints:
    def test_console_script(self):
        proc = subprocess.run(
            ["fillperm", "table", "--genus", "1", "--punctures", "0"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "1\n"

    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "fillperm", "verify", "--sigma", "(1,2,3,4)",
             "--genus", "1", "--punctures", "0"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip().endswith("result: VALID")

    def test_usage_error_exit_code(self):
        proc = subprocess.run(
            ["fillperm", "search", "--genus", "1"], capture_output=True, text=True
        )
        assert proc.returncode == 1
