"""Command-line interface: parsing, output discipline, exit codes."""

import argparse
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from schubstab.cli import int_list, jsonable, main, rational


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestArgumentTypes:
    def test_rational_accepts_exact_forms(self):
        assert rational("2/3") == Fraction(2, 3)
        assert rational("-7") == Fraction(-7)
        assert rational(" 5/10 ") == Fraction(1, 2)

    @pytest.mark.parametrize("bad", ["0.5", "1e3", "", "3/0", "pi", "1 / 2"])
    def test_rational_rejects_inexact_forms(self, bad):
        with pytest.raises(argparse.ArgumentTypeError):
            rational(bad)

    def test_int_list(self):
        assert int_list("2,1") == (2, 1)
        assert int_list(" 3 , -4 ") == (3, -4)
        assert int_list("") == ()
        with pytest.raises(argparse.ArgumentTypeError):
            int_list("a,b")

    def test_jsonable(self):
        blob = jsonable({"x": Fraction(1, 2), "s": frozenset({3, 1}), "t": (1, 2)})
        assert blob == {"x": "1/2", "s": [1, 3], "t": [1, 2]}
        assert json.dumps(blob)


class TestSchubertCommand:
    def test_simple_transposition(self, capsys):
        code, out, err = run(["schubert", "--n", "2", "--w", "2,1"], capsys)
        assert code == 0
        assert out.strip() == "x1"

    def test_double_flag(self, capsys):
        code, out, _ = run(["schubert", "--n", "2", "--w", "2,1", "--double"], capsys)
        assert code == 0
        assert "y1" in out

    def test_json_payload(self, capsys):
        code, out, _ = run(
            ["schubert", "--n", "3", "--w", "2,3,1", "--json"], capsys
        )
        assert code == 0
        blob = json.loads(out)
        assert blob["w"] == [2, 3, 1]
        assert blob["double"] is False
        assert blob["poly"]["terms"] == [
            {"exp": [1, 1, 0], "num": "1", "den": "1"}
        ]

    def test_rank_mismatch_is_usage_error(self, capsys):
        code, _, err = run(["schubert", "--n", "3", "--w", "2,1"], capsys)
        assert code == 2
        assert "rank" in err

    def test_invalid_word_is_usage_error(self, capsys):
        code, _, _ = run(["schubert", "--n", "2", "--w", "2,2"], capsys)
        assert code == 2


class TestVerifyCommands:
    def test_soergel_rank3_passes(self, capsys):
        code, out, err = run(["verify", "soergel", "--n", "3"], capsys)
        assert code == 0
        assert "filtration_identity: ok" in out
        assert "s_basis_unitriangular: ok" in out
        assert "f_matrix_triangular_injectivity: ok" in out
        assert "checking" in err
        assert "checking" not in out

    def test_demazure_json(self, capsys):
        argv = ["verify", "demazure", "--n", "3", "--trials", "4", "--seed", "2", "--json"]
        code, out, _ = run(argv, capsys)
        assert code == 0
        cert = json.loads(out)
        assert cert["check"] == "demazure_relations"
        assert cert["violations"] == []

    def test_charges_passes(self, capsys):
        argv = [
            "verify", "charges", "--n", "2", "--m", "3",
            "--a", "1/2", "--b", "-1", "--trials", "10", "--seed", "4",
        ]
        code, out, _ = run(argv, capsys)
        assert code == 0
        assert "charge_transforms: ok" in out

    def test_charges_json_yields_identical_bytes(self, capsys):
        argv = [
            "verify", "charges", "--n", "1", "--m", "2",
            "--trials", "8", "--seed", "11", "--json",
        ]
        _, first, _ = run(argv, capsys)
        _, second, _ = run(argv, capsys)
        assert first == second
        assert json.loads(first)["violations"] == []

    def test_nonpositive_a_is_usage_error(self, capsys):
        code, _, err = run(
            ["verify", "charges", "--n", "1", "--a", "-1"], capsys
        )
        assert code == 2
        assert "positive" in err

    def test_float_a_is_usage_error(self, capsys):
        code, _, _ = run(["verify", "charges", "--n", "1", "--a", "0.5"], capsys)
        assert code == 2


class TestScanCommand:
    def test_curve_scan(self, capsys):
        argv = ["scan", "bayer", "--n", "1", "--a", "7/3", "--b", "-2",
                "--bound", "12", "--json"]
        code, out, _ = run(argv, capsys)
        assert code == 0
        cert = json.loads(out)
        assert cert["shadow"] is True
        assert cert["violations"] == []
        assert cert["scanned"] == 12 * 25 + 12

    def test_surface_scan_runs(self, capsys):
        argv = ["scan", "bayer", "--n", "2", "--bound", "1", "--json"]
        code, out, err = run(argv, capsys)
        assert code in (0, 1)
        cert = json.loads(out)
        assert cert["scanned"] + cert["skipped"] == 81
        assert "exploratory" in err


class TestHnCommand:
    def test_torsion_first(self, capsys):
        argv = ["hn", "p1", "--degrees", "5", "--torsion", "2", "--json"]
        code, out, _ = run(argv, capsys)
        assert code == 0
        blob = json.loads(out)
        factors = blob["factors"]
        assert factors[0]["factor"] == {"bundle_degrees": [], "torsion_lengths": [2]}
        assert factors[0]["phase"] == {"re": "-2", "im": "0", "shift": 0}
        assert factors[1]["factor"]["bundle_degrees"] == [5]

    def test_text_mode_ordering(self, capsys):
        code, out, _ = run(["hn", "p1", "--degrees", "1,0"], capsys)
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("1. O(1)")
        assert lines[1].startswith("2. O(0)")

    def test_zero_sheaf_is_usage_error(self, capsys):
        code, _, err = run(["hn", "p1"], capsys)
        assert code == 2
        assert "at least one" in err


class TestDeriveCommand:
    def test_refusal_exits_one(self, capsys):
        code, out, _ = run(["derive", "chain", "--adegrees", "4", "--N", "3"], capsys)
        assert code == 1
        assert "REFUSED" in out

    def test_success_exits_zero(self, capsys):
        code, out, _ = run(["derive", "chain", "--adegrees", "2,5", "--N", "3"], capsys)
        assert code == 0
        assert out.count("derived twist") == 2

    def test_json_certificates(self, capsys):
        argv = ["derive", "chain", "--adegrees", "3,6", "--N", "3", "--json"]
        code, out, _ = run(argv, capsys)
        assert code == 0
        blob = json.loads(out)
        assert [c["achievable"] for c in blob["certificates"]] == [True, True]


class TestTableCommand:
    def test_graph_twists_rank2(self, capsys):
        code, out, _ = run(["table", "graph-twists", "--n", "2"], capsys)
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 2
        assert lines[0].startswith("w=[1,2]")
        assert "degrees=(1,1)" in lines[1]

    def test_json_shape(self, capsys):
        code, out, _ = run(["table", "graph-twists", "--n", "2", "--json"], capsys)
        assert code == 0
        blob = json.loads(out)
        assert blob["entries"][1]["inversions"] == [[1, 2]]


class TestUsageErrors:
    def test_unknown_subcommand(self, capsys):
        assert run(["frobnicate"], capsys)[0] == 2

    def test_no_arguments(self, capsys):
        assert run([], capsys)[0] == 2

    def test_missing_required_flag(self, capsys):
        assert run(["verify", "soergel"], capsys)[0] == 2

    def test_help_exits_zero(self, capsys):
        assert run(["--help"], capsys)[0] == 0


class TestConsoleScript:
    def test_installed_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-c",
             "import sys; from schubstab.cli import main; sys.exit(main(['schubert', '--n', '2', '--w', '2,1']))"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == "x1"
