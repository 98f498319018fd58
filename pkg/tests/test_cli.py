import csv
import io
import json

import pytest

from lapstats import cli
from lapstats.errors import GuardExceeded


def run_cli(capsys, *args):
    code = cli.main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCoeffs:
    def test_complete_json(self, capsys):
        code, out, _ = run_cli(capsys, "coeffs", "--family", "complete", "--n", "3")
        assert code == 0
        assert json.loads(out) == ["0", "9", "6", "1"]

    def test_csv_rows(self, capsys):
        code, out, _ = run_cli(capsys, "coeffs", "--family", "path", "--n", "3",
                               "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows == [["k", "c_k"], ["0", "0"], ["1", "3"], ["2", "4"], ["3", "1"]]

    def test_closed_form_byte_identical(self, capsys):
        _, direct, _ = run_cli(capsys, "coeffs", "--family", "path", "--n", "3")
        _, closed, _ = run_cli(capsys, "coeffs", "--family", "path", "--n", "3",
                               "--closed-form")
        assert direct == closed

    def test_edge_list_input(self, capsys, tmp_path):
        path = tmp_path / "k2.txt"
        path.write_text("# one edge\n2 1\n0 1\n")
        code, out, _ = run_cli(capsys, "coeffs", "--edge-list", str(path))
        assert code == 0
        assert json.loads(out) == ["0", "2", "1"]

    def test_signless_odd_cycle(self, capsys):
        code, out, _ = run_cli(capsys, "coeffs", "--family", "cycle", "--n", "5",
                               "--signless")
        assert code == 0
        assert json.loads(out)[0] == "4"  # det Q(C5) = 4, unsigned

    def test_huge_exact_output(self, capsys):
        code, out, _ = run_cli(capsys, "coeffs", "--family", "complete", "--n", "50",
                               "--closed-form")
        assert code == 0
        values = json.loads(out)
        assert values[1] == str(50 ** 49)  # n * tau = 50 * 50^48


class TestSpectrum:
    def test_star_json(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--family", "star", "--n", "5")
        assert code == 0
        payload = json.loads(out)
        assert payload["exact"] is False
        assert payload["values"] == sorted(payload["values"], reverse=True)
        assert payload["values"][0] == pytest.approx(5.0, abs=1e-9)
        assert payload["trace_residual"] <= 1e-8

    def test_closed_form_is_exact(self, capsys):
        code, out, _ = run_cli(capsys, "spectrum", "--family", "complete", "--n", "6",
                               "--closed-form")
        payload = json.loads(out)
        assert code == 0 and payload["exact"] is True
        assert payload["trace_residual"] == 0.0

    def test_signless_differs_on_odd_cycle(self, capsys):
        _, lap, _ = run_cli(capsys, "spectrum", "--family", "cycle", "--n", "5")
        _, signless, _ = run_cli(capsys, "spectrum", "--family", "cycle", "--n", "5",
                                 "--signless")
        low = json.loads(signless)["values"][-1]
        assert json.loads(lap)["values"] != json.loads(signless)["values"]
        assert low > 0.1  # Q of an odd cycle is nonsingular


class TestStats:
    def test_star(self, capsys):
        code, out, _ = run_cli(capsys, "stats", "--family", "star", "--n", "10")
        payload = json.loads(out)
        assert code == 0
        assert payload["mu"] == pytest.approx(112 / 22, rel=1e-12)
        assert payload["sigma2"] == pytest.approx(9 * 112 / (4 * 121), rel=1e-12)


class TestDiagnoseAndSweep:
    def test_diagnose_complete_50(self, capsys):
        code, out, _ = run_cli(capsys, "diagnose", "--family", "complete", "--n", "50")
        row = json.loads(out)[0]
        assert code == 0
        assert row["verdict"] == "poisson-regime"
        assert row["poisson_distance"] <= 0.02

    def test_sweep_csv_and_json_carry_identical_values(self, capsys):
        args = ("sweep", "--family", "path", "--ladder", "10,20,40")
        _, json_text, _ = run_cli(capsys, *args)
        _, csv_text, _ = run_cli(capsys, *args, "--format", "csv")
        json_rows = json.loads(json_text)
        csv_rows = list(csv.DictReader(io.StringIO(csv_text)))
        assert len(json_rows) == len(csv_rows) == 3
        for jrow, crow in zip(json_rows, csv_rows):
            for key, value in jrow.items():
                if isinstance(value, float):
                    assert crow[key] == repr(value)
                else:
                    assert crow[key] == str(value)

    def test_sweep_rows_ascending(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "--family", "cycle",
                               "--ladder", "40,10,20", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["n"] for r in rows] == ["10", "20", "40"]

    def test_seeded_family_is_reproducible(self, capsys):
        args = ("diagnose", "--family", "random_tree", "--n", "30", "--seed", "5")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second
        _, other, _ = run_cli(capsys, "diagnose", "--family", "random_tree",
                              "--n", "30", "--seed", "6")
        assert first != other

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "rows.json"
        code, out, _ = run_cli(capsys, "diagnose", "--family", "star", "--n", "6",
                               "--out", str(target))
        assert code == 0 and out == ""
        assert json.loads(target.read_text())[0]["family"] == "star"


class TestExitCodes:
    def test_bad_family_size(self, capsys):
        code, _, err = run_cli(capsys, "coeffs", "--family", "cycle", "--n", "2")
        assert code == 2 and "error" in err

    def test_both_inputs_rejected(self, capsys, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("2 1\n0 1\n")
        code, _, err = run_cli(capsys, "coeffs", "--family", "path", "--n", "3",
                               "--edge-list", str(path))
        assert code == 2

    def test_closed_form_needs_supported_family(self, capsys, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("2 1\n0 1\n")
        code, _, _ = run_cli(capsys, "coeffs", "--edge-list", str(path), "--closed-form")
        assert code == 2

    def test_missing_seed_for_random_family(self, capsys):
        code, _, _ = run_cli(capsys, "coeffs", "--family", "random_tree", "--n", "6")
        assert code == 2

    def test_garbage_size(self, capsys):
        code, _, _ = run_cli(capsys, "coeffs", "--family", "path", "--n", "many")
        assert code == 2

    def test_missing_file(self, capsys):
        code, _, _ = run_cli(capsys, "coeffs", "--edge-list", "/nonexistent/g.txt")
        assert code == 2

    def test_guard_maps_to_exit_3(self, capsys, monkeypatch):
        def explode(g):
            raise GuardExceeded("boom")

        monkeypatch.setattr(cli.exact, "laplacian_coefficients", explode)
        code, _, err = run_cli(capsys, "coeffs", "--family", "path", "--n", "4")
        assert code == 3 and "boom" in err

    def test_unknown_command_usage_error(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["frobnicate"])
        assert info.value.code == 2
