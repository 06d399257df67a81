import json
import os
from pathlib import Path

import pytest

import awplan

DATA = Path(os.environ.get("AWPLAN_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def load(name):
    return json.loads((DATA / name).read_text())


@pytest.fixture(scope="module")
def model():
    return awplan.calibrate(load("trial.calib.json"))


def test_calibration_reproduces_reference_points(model):
    q, klass = awplan.estimate_q(model, 345, "QPSK")
    assert q == pytest.approx(13.77, abs=1e-9)
    assert klass == "Ok"
    q, _ = awplan.estimate_q(model, 345, "bpsk", guarded=2, unguarded=3)
    assert q == pytest.approx(16.15, abs=1e-9)
    q, _ = awplan.estimate_q(model, 1131, "QPSK", dedicated=True)
    assert q == pytest.approx(11.44, abs=1e-9)


def test_thresholds():
    assert awplan.classify_q(6.5) == "Infeasible"
    assert awplan.classify_q(6.51) == "Marginal"
    assert awplan.classify_q(8.51) == "Ok"


def test_capacity():
    assert awplan.superchannel_capacity(["QPSK"] * 5, 10) == 500
    assert awplan.superchannel_capacity(["BPSK"] * 5, 10) == 250
    assert awplan.superchannel_capacity(["QPSK"] * 5, 9) == 450
    with pytest.raises(awplan.Error):
        awplan.superchannel_capacity(["QPSK"] * 5, 11)


def test_path_metrics():
    topo = awplan.parse_topology((DATA / "garr.topo.json").read_text())
    demand = load("rm-mi2.demands.json")[0]
    metrics = awplan.aggregate_path(topo, demand["path"])
    assert metrics["distance_km"] == 1131
    assert metrics["ola_count"] == 12
    assert metrics["roadm_count"] == 5


def test_plan_long_link(model):
    report = awplan.plan_link(
        load("rm-mi2.demands.json")[0], load("garr.topo.json"), load("garr.grid.json"), model
    )
    chosen = report["chosen"]
    assert chosen["strategy"] == "DedicatedPartition"
    assert chosen["active_carriers"] == 9
    assert chosen["capacity_gbps"] == 450
    assert report["feasible"]


def test_allocate_example():
    result = awplan.first_fit_allocate({}, load("example.requests.json"))
    assert [a["start_slot"] for a in result["assignments"]] == [0, 2, 6]
    assert awplan.validate_grid(result["grid"]) == []


def test_voa_levelling():
    result = awplan.compute_voa_settings(
        [{"channel_ref": "a", "power_dbm": 2.0}, {"channel_ref": "b", "power_dbm": -1.0}], 0.0
    )
    att = {s["channel_ref"]: s["attenuation_db"] for s in result["settings"]}
    assert att == {"a": 2.0, "b": 0.0}
    assert result["clipped_channels"] == ["b"]


def test_plot_export(model):
    series = awplan.export_q_vs_distance(model, "QPSK", [1131, 345], dedicated=True)
    assert [p[0] for p in series["points"]] == [345, 1131]
    csv = awplan.to_csv(series)
    assert csv.splitlines()[0] == "distance_km,q_db"
    assert len(csv.splitlines()) == 3


def test_canonical_and_errors():
    text = (DATA / "garr.grid.json").read_text()
    assert awplan.dump_canonical(json.loads(text)) == text
    assert awplan.sha256_hex(b"abc").startswith("ba7816bf")
    with pytest.raises(awplan.ParseError):
        awplan.parse_topology('{"nodes": [')
