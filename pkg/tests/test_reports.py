import csv
import io
import json
import math
from pathlib import Path

import pytest

from bh_lab.config.report_settings import ReportSettings
from bh_lab.config.settings import Settings
from bh_lab.domain.errors import MalformedTensorFileError
from bh_lab.domain.model.field_tag import FieldTag
from bh_lab.domain.model.tensor import Tensor
from bh_lab.engine.services.report_service import ReportService


def _rows(text):
    return list(csv.reader(io.StringIO(text)))


class TestFormatFloat:
    def test_seventeen_significant_digits(self, reports):
        assert reports.format_float(2 ** 0.75).startswith("1.681792830507429")
        assert len(reports.format_float(2 ** 0.75).replace(".", "")) == 17

    def test_integers_keep_their_digits(self, reports):
        assert reports.format_float(2.0) == "2.0000000000000000"

    def test_non_finite(self, reports):
        assert reports.format_float(math.inf) == "inf"
        assert reports.format_float(math.nan) == "nan"

    def test_configurable_digits(self):
        short = ReportService(Settings(report=ReportSettings(significant_digits=5)))
        assert short.format_float(1.0 / 3.0) == "0.33333"


class TestConstantsTables:
    def test_csv_header_and_rows(self, toolkit):
        report = toolkit.constants_table(range(1, 9), [1.0], ["complex"])
        rows = _rows(toolkit.reports.constants_csv(report))
        assert rows[0] == ["m", "t", "field", "exponent", "C_recursive", "C_closed"]
        assert len(rows) == 9
        m2 = rows[2]
        assert m2[0] == "2" and m2[2] == "complex"
        assert float(m2[5]) == pytest.approx(2 / math.sqrt(math.pi), rel=1e-12)

    def test_json_rows_and_metadata(self, toolkit):
        report = toolkit.constants_table(range(2, 5), [1.0, 1.5], ["real"])
        doc = json.loads(toolkit.reports.constants_json(report))
        assert len(doc["rows"]) == 6
        assert doc["metadata"]["build"].startswith("bh-lab ")
        assert "p0" in doc["metadata"]
        first = doc["rows"][0]
        assert set(first) >= {"m", "t", "field", "exponent", "C_recursive", "C_closed", "improvement"}
        assert first["improvement"] == pytest.approx(first["C_closed"] / first["C_recursive"])
        assert first["improvement"] <= 1.0 + 1e-12

    def test_rows_ordered_by_field_then_t_then_m(self, toolkit):
        report = toolkit.constants_table([2, 3], [1.0, 1.5], [FieldTag.REAL, FieldTag.COMPLEX])
        keys = [(r.field.value, r.t, r.m) for r in report.rows]
        assert keys[:4] == [("real", 1.0, 2), ("real", 1.0, 3), ("real", 1.5, 2), ("real", 1.5, 3)]
        assert report.row(3, 1.5, FieldTag.COMPLEX) is report.rows[-1]


class TestComparisonAndEnvelope:
    def test_comparison_csv(self, toolkit):
        rows = toolkit.compare_exponents([2], [3, 4], [4.0], [2.0])
        table = _rows(toolkit.reports.comparison_csv(rows))
        assert table[0] == ["n", "N", "q", "r", "old", "new", "verdict"]
        assert [r[6] for r in table[1:]] == ["strict", "equal"]

    def test_comparison_json(self, toolkit):
        rows = toolkit.compare_exponents([2], [4], [2.0], [1.0])
        doc = json.loads(toolkit.reports.comparison_json(rows))
        assert doc[0]["new"] == pytest.approx(4 / 3)
        assert doc[0]["k"] == 2 and doc[0]["l"] == 0

    def test_pairs_with_n_not_below_N_are_skipped(self, toolkit):
        assert toolkit.compare_exponents([3, 4], [3], [2.0], [1.0]) == []

    def test_envelope_csv(self, toolkit):
        rows = toolkit.kappa([1.0], ["complex"], 200)
        table = _rows(toolkit.reports.envelope_csv(rows))
        assert table[0][:3] == ["t", "field", "m_max"]
        assert table[1][1] == "complex"
        assert table[1][2] == "200"

    def test_envelope_json_flags_stabilization(self, toolkit):
        doc = json.loads(toolkit.reports.envelope_json(toolkit.kappa([1.5], ["real"], 100)))
        assert isinstance(doc[0]["stabilized"], bool)
        assert doc[0]["field"] == "real"


class TestFuzzReports:
    def test_document_keys(self, toolkit):
        report = toolkit.verify("minkowski", trials=5, seed=1)
        doc = json.loads(toolkit.reports.fuzz_json(report))
        for key in ("check", "seed", "trials", "field", "params", "worst_ratio", "verdict", "witness", "messages"):
            assert key in doc
        assert doc["witness"]["outcome"]["ratio"] == report.worst_ratio

    def test_csv_single_row(self, toolkit):
        report = toolkit.verify("blei", trials=5, seed=1)
        table = _rows(toolkit.reports.fuzz_csv(report))
        assert len(table) == 2
        assert table[1][0] == "blei"
        assert table[1][-1] == report.verdict

    def test_witness_tensor_reloads_exactly(self, toolkit):
        report = toolkit.verify("bh", trials=5, seed=2, m=2, t=1.0, field="real")
        doc = json.loads(toolkit.reports.fuzz_json(report))
        reloaded = Tensor.from_document(doc["witness"]["instance"]["tensor"])
        original = Tensor.from_document(report.witness["instance"]["tensor"])
        assert (reloaded.entries == original.entries).all()


class TestCheckCatalog:
    def test_csv(self, toolkit):
        table = _rows(toolkit.reports.checks_csv(toolkit.checks_repo.get_all()))
        assert table[0] == ["name", "title", "kind", "uses_field", "description"]
        assert [r[0] for r in table[1:]] == toolkit.registry.names()
        assert table[-1][2] == "one-sided"

    def test_json(self, toolkit):
        doc = json.loads(toolkit.reports.checks_json(toolkit.checks_repo.get_all()))
        summing = next(d for d in doc if d["name"] == "summing")
        assert summing == {
            "name": "summing",
            "title": "Coincidence bound",
            "hard": True,
            "uses_field": False,
            "description": summing["description"],
        }


class TestFiles:
    def test_load_tensor(self, reports, identity_file):
        tensor = reports.load_tensor(identity_file)
        assert tensor.shape == (2, 2)
        assert tensor.field is FieldTag.REAL

    def test_malformed_json(self, reports, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        with pytest.raises(MalformedTensorFileError):
            reports.load_tensor(bad)

    def test_wrong_entry_count(self, reports, tmp_path):
        bad = tmp_path / "short.json"
        bad.write_text(json.dumps({"field": "real", "shape": [2, 2], "entries": [1, 2, 3]}))
        with pytest.raises(MalformedTensorFileError):
            reports.load_tensor(bad)

    def test_missing_keys(self, reports, tmp_path):
        bad = tmp_path / "keys.json"
        bad.write_text(json.dumps({"field": "real", "entries": [1]}))
        with pytest.raises(MalformedTensorFileError, match="shape"):
            reports.load_tensor(bad)

    def test_complex_tensor_file(self, reports, tmp_path):
        path = tmp_path / "c.json"
        path.write_text(json.dumps({"field": "complex", "shape": [2], "entries": [[1, 0], [0, -1]]}))
        assert list(reports.load_tensor(path).entries) == [1 + 0j, -1j]

    def test_witness_path(self, reports):
        assert reports.witness_path("out/bh.json", "bh") == Path("out/bh.witness.json")
        assert reports.witness_path(None, "blei") == Path("blei.witness.json")

    def test_write_text_creates_parents(self, reports, tmp_path):
        path = reports.write_text(tmp_path / "a" / "b.csv", "x\n")
        assert path.read_text() == "x\n"
