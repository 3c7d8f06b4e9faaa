import csv
import io
import json

import pytest

from bh_lab.app import EXIT_INVALID, EXIT_OK, LabApp, UsageError, parse_int_list, parse_number
from bh_lab.domain.model.fuzz_report import FuzzReport


def run_cli(toolkit, *argv):
    out, err = io.StringIO(), io.StringIO()
    code = LabApp(toolkit, stdout=out, stderr=err).run(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestValueParsers:
    def test_fraction(self):
        assert parse_number("4/3") == 4 / 3

    def test_decimal(self):
        assert parse_number(" 1.5 ") == 1.5

    def test_ranges(self):
        assert parse_int_list("1..4,8") == [1, 2, 3, 4, 8]

    @pytest.mark.parametrize("text", ["4..1", "a", ","])
    def test_bad_int_lists(self, text):
        with pytest.raises(UsageError):
            parse_int_list(text)

    def test_bad_number(self):
        with pytest.raises(UsageError):
            parse_number("1/0")


class TestConstantsCommand:
    def test_complex_table(self, toolkit):
        code, out, _ = run_cli(toolkit, "constants", "--m", "1..8", "--t", "1.0", "--field", "complex")
        assert code == EXIT_OK
        rows = list(csv.reader(io.StringIO(out)))
        assert len(rows) == 9
        assert float(rows[2][5]) == pytest.approx(1.12837917, rel=1e-8)

    def test_json_grid(self, toolkit):
        code, out, _ = run_cli(toolkit, "constants", "--m", "2..4", "--t", "1.0,1.5", "--field", "real",
                               "--format", "json")
        assert code == EXIT_OK
        assert len(json.loads(out)["rows"]) == 6

    def test_both_fields_by_default(self, toolkit):
        code, out, _ = run_cli(toolkit, "constants", "--m", "2", "--t", "1")
        assert code == EXIT_OK
        assert [r[2] for r in list(csv.reader(io.StringIO(out)))[1:]] == ["real", "complex"]

    def test_t_out_of_range(self, toolkit):
        code, out, err = run_cli(toolkit, "constants", "--m", "2", "--t", "2")
        assert code == EXIT_INVALID
        assert out == ""
        assert "error" in err


class TestVerifyCommand:
    def test_bh_holds(self, toolkit):
        code, out, err = run_cli(toolkit, "verify", "bh", "--m", "2", "--t", "1.0", "--field", "real",
                                 "--trials", "50", "--seed", "7")
        assert code == EXIT_OK
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[1][0] == "bh"
        assert rows[1][-1] == "holds"
        assert "verify bh" in err
        assert "Bohnenblust-Hille variant" in err

    def test_zero_trials(self, toolkit):
        code, _, _ = run_cli(toolkit, "verify", "bh", "--trials", "0")
        assert code == EXIT_INVALID

    def test_unknown_check(self, toolkit):
        code, _, err = run_cli(toolkit, "verify", "nope")
        assert code == EXIT_INVALID
        assert "invalid" in err

    def test_minkowski(self, toolkit):
        code, _, _ = run_cli(toolkit, "verify", "minkowski", "--trials", "100")
        assert code == EXIT_OK

    def test_json_report_and_witness_file(self, toolkit, tmp_path):
        out_path = tmp_path / "blei.json"
        witness = tmp_path / "w.json"
        code, out, _ = run_cli(toolkit, "verify", "blei", "--trials", "10", "--format", "json",
                               "--out", str(out_path), "--witness", str(witness))
        assert code == EXIT_OK
        assert out == ""
        doc = json.loads(out_path.read_text())
        assert doc["check"] == "blei"
        assert json.loads(witness.read_text())["check"] == "blei"

    def test_same_seed_same_output(self, toolkit):
        args = ("verify", "interpolation", "--trials", "20", "--seed", "5", "--format", "json")
        assert run_cli(toolkit, *args)[1] == run_cli(toolkit, *args)[1]

    def test_several_degrees_rejected(self, toolkit):
        code, _, err = run_cli(toolkit, "verify", "bh", "--m", "2,3", "--trials", "1")
        assert code == EXIT_INVALID
        assert "single" in err


    def test_field_rejected_where_unused(self, toolkit):
        code, out, err = run_cli(toolkit, "verify", "summing", "--field", "real", "--trials", "1")
        assert code == EXIT_INVALID
        assert out == ""
        assert "apply" in err

    def test_help_lists_catalog(self, toolkit, capsys):
        code, _, _ = run_cli(toolkit, "verify", "--help")
        assert code == EXIT_OK
        text = capsys.readouterr().out
        assert "Coincidence bound (hard)" in text
        assert "N-separately summing estimate (one-sided)" in text

    def test_summary_echoes_messages(self, toolkit):
        report = FuzzReport(check="dps", seed=1, trials=3, field="real", params={}, worst_ratio=1.5,
                            worst_slack=-0.5, verdict="inconclusive", inconclusive=1)
        report.messages.append({"level": "warn", "text": "trial 2: inconclusive", "tag": "dps", "ctx": {"trial": 2}})
        out, err = io.StringIO(), io.StringIO()
        LabApp(toolkit, stdout=out, stderr=err)._print_summary(report, None, "Mixed-exponent summing diagnostic")
        assert "trial 2: inconclusive" in err.getvalue()


class TestChecksCommand:
    def test_csv_listing(self, toolkit):
        code, out, _ = run_cli(toolkit, "checks")
        assert code == EXIT_OK
        rows = list(csv.reader(io.StringIO(out)))
        assert [r[0] for r in rows[1:]] == toolkit.registry.names()

    def test_json_listing(self, toolkit):
        code, out, _ = run_cli(toolkit, "checks", "--format", "json")
        assert code == EXIT_OK
        assert {d["name"]: d["hard"] for d in json.loads(out)}["separate"] is False


class TestNormCommand:
    def test_four_thirds(self, toolkit, reports, identity_file):
        code, out, _ = run_cli(toolkit, "norm", "--input", str(identity_file), "--p", "4/3,4/3")
        assert code == EXIT_OK
        assert out.strip() == reports.format_float(2 ** 0.75)
        assert out.startswith("1.681792830507429")

    def test_transposed_blocks(self, toolkit, identity_file):
        code, out, _ = run_cli(toolkit, "norm", "--input", str(identity_file), "--blocks", "{2}{1}", "--p", "1,2")
        assert code == EXIT_OK
        assert float(out) == pytest.approx(2.0)

    def test_missing_file(self, toolkit, tmp_path):
        code, _, _ = run_cli(toolkit, "norm", "--input", str(tmp_path / "none.json"), "--p", "2,2")
        assert code == EXIT_INVALID

    def test_wrong_exponent_count(self, toolkit, identity_file):
        code, _, _ = run_cli(toolkit, "norm", "--input", str(identity_file), "--p", "2,2,2")
        assert code == EXIT_INVALID

    def test_exponent_below_one(self, toolkit, identity_file):
        code, _, _ = run_cli(toolkit, "norm", "--input", str(identity_file), "--p", "1/2,2")
        assert code == EXIT_INVALID

    def test_missing_required_option(self, toolkit):
        code, _, _ = run_cli(toolkit, "norm", "--p", "2,2")
        assert code == EXIT_INVALID


class TestCompareAndKappa:
    def test_compare_exponents(self, toolkit):
        code, out, _ = run_cli(toolkit, "compare-exponents", "--n", "2", "--N", "3,4", "--q", "2", "--r", "1")
        assert code == EXIT_OK
        rows = list(csv.reader(io.StringIO(out)))
        assert [r[-1] for r in rows[1:]] == ["strict", "equal"]

    def test_compare_without_valid_pair(self, toolkit):
        code, _, _ = run_cli(toolkit, "compare-exponents", "--n", "4", "--N", "3")
        assert code == EXIT_INVALID

    def test_kappa(self, toolkit):
        code, out, _ = run_cli(toolkit, "kappa", "--t", "1", "--m-max", "500", "--format", "json")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert [d["field"] for d in doc] == ["complex", "real"]
        assert all(d["m_max"] == 500 for d in doc)

    def test_kappa_small_scan(self, toolkit):
        code, _, _ = run_cli(toolkit, "kappa", "--m-max", "3")
        assert code == EXIT_INVALID


class TestReplayCommand:
    def test_replays_report(self, toolkit, tmp_path):
        report = tmp_path / "bh.json"
        code, _, _ = run_cli(toolkit, "verify", "bh", "--m", "2", "--t", "1", "--field", "real", "--trials", "10",
                             "--format", "json", "--out", str(report))
        assert code == EXIT_OK
        code, out, err = run_cli(toolkit, "replay", "--input", str(report))
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["drift"] <= 1e-12
        assert doc["verdict"] == "holds"
        assert "replay" in err

    def test_not_an_object(self, toolkit, tmp_path):
        path = tmp_path / "list.json"
        path.write_text("[1, 2]")
        code, _, _ = run_cli(toolkit, "replay", "--input", str(path))
        assert code == EXIT_INVALID


class TestTopLevel:
    def test_version(self, toolkit):
        code, _, _ = run_cli(toolkit, "--version")
        assert code == EXIT_OK

    def test_no_command(self, toolkit):
        code, _, _ = run_cli(toolkit)
        assert code == EXIT_INVALID
