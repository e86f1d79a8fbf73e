import pytest

import mining.lattice
from mining import STAGES, MiningConfig, MiningManager, MiningProgress


def test_stage_registry():
    assert MiningManager.get_stage_names() == ["generators", "order", "rules"]
    assert len(STAGES) == 3


def test_run_summary_and_timings(example_context, example_params):
    run = MiningManager().mine(example_context, MiningConfig(example_params))
    assert run.summary() == {"classes": 6, "generators": 9, "border": 1, "bg": 7, "ri": 9}
    assert set(run.timings_ms) == {"generators", "order", "rules"}
    assert all(ms >= 0 for ms in run.timings_ms.values())


def test_progress_events(example_context, example_params):
    events: list[MiningProgress] = []
    MiningManager(progress_callback=events.append).mine(example_context, MiningConfig(example_params))

    percents = [e.percent for e in events]
    assert percents == sorted(percents)
    assert events[-1].status == "finished"
    assert events[-1].percent == 100.0
    assert "classes=6" in events[-1].message
    assert {e.stage for e in events} >= {"generators", "order", "rules"}


def test_stage_error_is_reported_then_raised(example_context, example_params, monkeypatch):
    def broken(*args, **kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr(mining.lattice, "gen_ordre", broken)
    events: list[MiningProgress] = []
    with pytest.raises(RuntimeError, match="boom"):
        MiningManager(progress_callback=events.append).mine(example_context, MiningConfig(example_params))

    assert events[-1].status == "error"
    assert events[-1].stage == "order"
    assert "boom" in events[-1].message
