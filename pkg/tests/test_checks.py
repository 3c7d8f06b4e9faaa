import dataclasses
import json

import pytest

from bh_lab.domain.errors import ParameterRangeError
from bh_lab.domain.model.fuzz_report import TrialOutcome
from bh_lab.engine.checks.base import BaseCheck
from bh_lab.engine.checks.hard import BhCheck, MinkowskiCheck
from bh_lab.engine.checks.registry import CheckRegistry, build_default_registry
from bh_lab.engine.services.campaign_service import CampaignService
from bh_lab.engine.services.messenger_service import MessengerService
from bh_lab.engine.services.rng_service import RngService
from bh_lab.repositories import ChecksRepository


def _roundtrip(toolkit, report):
    return json.loads(toolkit.reports.fuzz_json(report))


class TestRegistry:
    def test_default_names_in_order(self):
        names = build_default_registry().names()
        assert names == ["minkowski", "interpolation", "blei", "bh", "khinchine", "summing", "dps", "separate"]

    def test_kinds(self):
        registry = build_default_registry()
        assert [c.name for c in registry.get_by_kind("one-sided")] == ["dps", "separate"]
        assert len(registry.get_by_kind("hard")) == 6

    def test_duplicate_registration(self):
        registry = CheckRegistry()
        registry.register(MinkowskiCheck())
        with pytest.raises(ValueError):
            registry.register(MinkowskiCheck())

    def test_require_unknown(self):
        with pytest.raises(ValueError, match="Unknown check"):
            build_default_registry().require("nope")

    def test_catalog_matches_registry(self):
        repo = ChecksRepository()
        registry = build_default_registry()
        assert sorted(repo.names()) == sorted(registry.names())
        for spec in repo.get_all():
            assert spec.hard == (registry.require(spec.name).kind == "hard")

    def test_catalog_lookup(self):
        repo = ChecksRepository()
        assert repo.get_by_name("bh").hard
        assert repo.get_by_name("missing") is None
        assert [s.name for s in repo.get_one_sided()] == ["dps", "separate"]
        assert not repo.get_by_name("summing").uses_field
        assert repo.get_by_name("separate").uses_field


class TestRngStreams:
    def test_same_key_same_draws(self):
        a = RngService.make(42, 0, 3).random(5)
        b = RngService.make(42, 0, 3).random(5)
        assert list(a) == list(b)

    def test_trial_independent_of_order(self):
        service = RngService(9)
        late_first = service.trial(5).random()
        for i in range(5):
            service.trial(i).random()
        assert service.trial(5).random() == late_first

    def test_streams_differ(self):
        assert RngService.make(1, 0, 0).random() != RngService.make(1, 1, 0).random()

    def test_negative_seed(self):
        with pytest.raises(ValueError):
            RngService(-1)


class TestCampaigns:
    @pytest.mark.slow
    @pytest.mark.parametrize("check", ["minkowski", "interpolation", "blei"])
    def test_norm_inequalities_hold(self, toolkit, check):
        report = toolkit.verify(check, trials=1000, seed=1)
        assert report.violations == 0
        assert report.verdict in ("holds", "inconclusive")
        assert report.worst_ratio <= 1.0 + toolkit.settings.tolerance.inequality_rel

    def test_minkowski_all_hold(self, toolkit):
        report = toolkit.verify("minkowski", trials=100, seed=3, field="real")
        assert report.verdict == "holds"
        assert report.field == "real"
        assert report.witness["check"] == "minkowski"

    def test_khinchine_real(self, toolkit):
        report = toolkit.verify("khinchine", trials=60, seed=2, field="real")
        assert report.violations == 0

    def test_bh_degree_two(self, toolkit):
        report = toolkit.verify("bh", trials=100, seed=7, field="real", m=2, t=1.0)
        assert report.verdict == "holds"
        assert report.worst_ratio <= 1.0 + toolkit.settings.tolerance.inequality_rel
        assert report.params["m"] == 2
        assert report.witness["instance"]["t"] == 1.0

    def test_bh_degree_three(self, toolkit):
        report = toolkit.verify("bh", trials=30, seed=11, field="real", m=3, t=1.5)
        assert report.verdict == "holds"

    def test_summing(self, toolkit):
        report = toolkit.verify("summing", trials=20, seed=5)
        assert report.violations == 0

    def test_dps_never_violated(self, toolkit):
        report = toolkit.verify("dps", trials=15, seed=4)
        assert report.violations == 0
        assert report.verdict in ("holds", "inconclusive")

    def test_separate_never_violated(self, toolkit):
        report = toolkit.verify("separate", trials=20, seed=4)
        assert report.violations == 0
        assert report.verdict in ("holds", "inconclusive")
        assert report.witness["instance"]["n"] in (1, 2)
        assert report.witness["outcome"]["details"]["subsets"]

    def test_separate_complex_forms(self, toolkit):
        report = toolkit.verify("separate", trials=5, seed=9, field="complex", m=2)
        assert report.violations == 0
        assert report.witness["outcome"]["details"]["subset_exact"] == [False, False]

    def test_same_seed_same_report(self, toolkit):
        first = toolkit.reports.fuzz_json(toolkit.verify("minkowski", trials=40, seed=21))
        second = toolkit.reports.fuzz_json(toolkit.verify("minkowski", trials=40, seed=21))
        assert first == second

    def test_seed_changes_witness(self, toolkit):
        a = toolkit.verify("minkowski", trials=20, seed=1).witness
        b = toolkit.verify("minkowski", trials=20, seed=2).witness
        assert a["instance"] != b["instance"]

    def test_zero_trials(self, toolkit):
        with pytest.raises(ParameterRangeError):
            toolkit.verify("minkowski", trials=0, seed=1)

    def test_unknown_check(self, toolkit):
        with pytest.raises(ValueError):
            toolkit.verify("nope", trials=1, seed=1)

    def test_report_echoes_parameters(self, toolkit):
        report = toolkit.verify("bh", trials=2, seed=1, m=2, t=1.5, dim=2, tol=1e-9)
        assert report.params == {"tol": 1e-9, "m": 2, "t": 1.5, "dim": 2}
        assert report.seed == 1
        assert report.trials == 2


class TestReplay:
    @pytest.mark.parametrize(
        "check, args",
        [("minkowski", {}), ("bh", {"m": 2, "t": 1.0, "field": "real"}), ("interpolation", {}), ("separate", {})],
    )
    def test_witness_reevaluates(self, toolkit, check, args):
        report = toolkit.verify(check, trials=25, seed=13, **args)
        outcome, drift = toolkit.replay(_roundtrip(toolkit, report))
        assert drift <= 1e-12
        assert outcome.verdict == report.witness["outcome"]["verdict"]

    def test_bare_witness(self, toolkit):
        report = toolkit.verify("blei", trials=10, seed=6)
        witness = _roundtrip(toolkit, report)["witness"]
        outcome, drift = toolkit.replay(witness)
        assert drift <= 1e-12
        assert outcome.lhs == pytest.approx(witness["outcome"]["lhs"], rel=1e-12)

    def test_document_without_witness(self, toolkit):
        with pytest.raises(ParameterRangeError):
            toolkit.replay({"check": "bh"})

    def test_handmade_bh_instance(self, toolkit):
        instance = {
            "tensor": {"field": "real", "shape": [2, 2], "entries": [1, 0, 0, 1]},
            "field": "real",
            "t": 1.0,
            "ascent_seed": 0,
        }
        outcome = BhCheck().evaluate(instance, toolkit.check_context())
        assert outcome.verdict == "holds"
        assert outcome.details["norm"] == pytest.approx(2.0)
        assert outcome.details["norm_exact"]
        assert outcome.lhs == pytest.approx(2 ** -0.25)


class TestMessenger:
    def test_bounded(self):
        messenger = MessengerService(limit=3)
        for i in range(5):
            messenger.info(f"message {i}", tag="t")
        texts = [m["text"] for m in messenger.get_entries()]
        assert texts == ["message 2", "message 3", "message 4"]

    def test_entries_have_no_timestamps(self):
        messenger = MessengerService(limit=10)
        messenger.warn("careful", tag="bh", ctx={"trial": 4})
        entry = messenger.get_entries()[0]
        assert set(entry) == {"level", "text", "tag", "ctx"}
        assert entry["ctx"] == {"trial": 4}

    def test_filter_by_level(self):
        messenger = MessengerService(limit=10)
        messenger.info("a")
        messenger.error("b")
        messenger.debug("c")
        assert [m["text"] for m in messenger.get_entries(level="error")] == ["b"]
        assert [m["text"] for m in messenger.get_entries(limit=1)] == ["c"]
        messenger.clear()
        assert messenger.get_entries() == []


class UndecidedCheck(BaseCheck):
    name = "undecided"
    kind = "one-sided"

    def sample(self, rng, context):
        return {"x": float(rng.random())}

    def evaluate(self, instance, context):
        return TrialOutcome(2.0 * instance["x"] + 1.0, 1.0, "inconclusive")


class TestCampaignMessages:
    def _run(self, toolkit, trials, limit):
        registry = CheckRegistry()
        registry.register(UndecidedCheck())
        context = dataclasses.replace(toolkit.check_context(), messenger=MessengerService(limit=limit))
        return CampaignService(registry).run("undecided", context, trials, seed=3)

    def test_report_keeps_newest_entries(self, toolkit):
        report = self._run(toolkit, trials=5, limit=3)
        assert report.inconclusive == 5
        assert [m["ctx"]["trial"] for m in report.messages] == [2, 3, 4]
        assert {m["level"] for m in report.messages} == {"warn"}
        assert all(m["tag"] == "undecided" for m in report.messages)

    def test_messages_in_json_report(self, toolkit):
        report = self._run(toolkit, trials=2, limit=10)
        doc = json.loads(toolkit.reports.fuzz_json(report))
        assert [m["text"].split(":")[0] for m in doc["messages"]] == ["trial 0", "trial 1"]

    def test_holding_campaign_has_no_messages(self, toolkit):
        report = toolkit.verify("minkowski", trials=100, seed=3, field="real")
        assert report.verdict == "holds"
        assert report.messages == []
