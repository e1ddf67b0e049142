import json

import numpy as np
import pytest

from pripareto.conceptual.error import MalformedRecordError
from pripareto.conceptual.variation import VariationConfig
from pripareto.logical.archive import EvaluationRecord, PointSet, nd_filter
from pripareto.logical.metrics import compute_metrics
from pripareto.persistance import PriParetoDecoder, PriParetoEncoder, Store
from pripareto.physical.model import evaluate, model_config_hash
from pripareto.physical.radar import EvaluationConfig, RadarParams
from tests.helpers import X_A, X_S, random_objectives, synthetic_point_set


def records():
    result = []
    for i, x in enumerate((X_S, X_A)):
        v = evaluate(x)
        result.append(EvaluationRecord(0, "nsga2", i, tuple(x), v.margins, v.dwell))
    return result


def test_direct_encode_decode_configurations():
    for config in (
        RadarParams(fft_size=32),
        EvaluationConfig(tolerance_cap=(100.0, 5.0)),
        VariationConfig(pm_prob=0.2),
    ):
        assert json.loads(json.dumps(config, cls=PriParetoEncoder), cls=PriParetoDecoder) == config


def test_direct_encode_decode_point_set():
    S = PointSet(tuple(records()), model_config_hash(), metadata={"seeds": [0, 1]})
    restored = json.loads(json.dumps(S, cls=PriParetoEncoder), cls=PriParetoDecoder)
    assert restored.records == S.records
    assert restored.provenance == S.provenance
    assert restored.config_hash == S.config_hash
    assert restored.metadata["seeds"] == [0, 1]


def test_point_set_units_are_checked():
    document = json.loads(json.dumps(synthetic_point_set(random_objectives(2)), cls=PriParetoEncoder))
    document["units"] = "us"
    with pytest.raises(ValueError):
        json.loads(json.dumps(document), cls=PriParetoDecoder)


def test_store_point_set(tmp_path):
    store = Store(tmp_path)
    S = nd_filter(synthetic_point_set(random_objectives(50)))
    path = store.save_point_set(S, "sets/S.json")
    loaded = store.load_point_set("sets/S.json")
    assert loaded.records == S.records
    assert loaded.nd_filtered
    assert loaded.metadata["path"] == str(path)
    assert np.array_equal(loaded.F, S.F)


def test_store_rejects_other_documents(tmp_path):
    store = Store(tmp_path)
    store.save_json({"a": 1}, "other.json")
    with pytest.raises(MalformedRecordError):
        store.load_point_set("other.json")


def test_log_round_trip(tmp_path):
    store = Store(tmp_path)
    store.write_log(records(), "nsga2/run0.csv", {"algo": "nsga2", "seed": 0})
    loaded, metadata = store.read_log("nsga2/run0.csv")
    assert loaded == records()
    assert metadata == {"algo": "nsga2", "seed": "0"}


def test_log_error_carries_line_number(tmp_path):
    store = Store(tmp_path)
    path = store.write_log(records(), "run0.csv", {"seed": 0})
    lines = path.read_text().splitlines()
    lines[3] = lines[3].replace("510", "5x0", 1)
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(MalformedRecordError) as e:
        store.read_log("run0.csv")
    assert e.value.line == 4


def test_log_rejects_bad_header(tmp_path):
    (tmp_path / "bad.csv").write_text("run,algo,eval,y1\n0,a,0,1\n")
    with pytest.raises(MalformedRecordError) as e:
        Store(tmp_path).read_log("bad.csv")
    assert e.value.line == 1


def test_import_pris(tmp_path):
    (tmp_path / "published.pris").write_text(
        "unit=0.1us\n" + ",".join(map(str, X_S)) + "\n" + ",".join(map(str, X_A)) + "\n"
    )
    S = Store(tmp_path).import_pris("published.pris")
    assert S.keys() == [tuple(X_S), tuple(X_A)]
    assert S.records[0].dwell_ms == pytest.approx(46.521, abs=1e-3)
    assert S.provenance[0] == ("file:published.pris",)
    assert S.config_hash == model_config_hash()


def test_import_pris_in_microseconds(tmp_path):
    (tmp_path / "us.pris").write_text("unit=us\n51,57,63,66,69,78,90,96\n")
    S = Store(tmp_path).import_pris("us.pris")
    assert S.keys() == [tuple(X_S)]


def test_import_pris_detects_unit_mismatch(tmp_path):
    (tmp_path / "wrong.pris").write_text("unit=0.1us\n51,57,63,66,69,78,90,96\n")
    with pytest.raises(MalformedRecordError) as e:
        Store(tmp_path).import_pris("wrong.pris")
    assert e.value.line == 2


def test_import_pris_requires_unit(tmp_path):
    (tmp_path / "bare.pris").write_text("510,570,630,660,690,780,900,960\n")
    with pytest.raises(MalformedRecordError) as e:
        Store(tmp_path).import_pris("bare.pris")
    assert e.value.line == 1


def test_export_import_round_trip(tmp_path):
    store = Store(tmp_path)
    original = [
        EvaluationRecord(3, r.algo, 7 + 5 * i, r.decision, r.margins, r.dwell_ms)
        for i, r in enumerate(records())
    ]
    S = store.import_pris(store.export_pris(PointSet(tuple(original), model_config_hash()), "out.pris", "us"))
    assert S.keys() == [tuple(X_S), tuple(X_A)]
    assert S.config_hash == model_config_hash()
    for imported, record in zip(S.records, original):
        assert imported.margins == record.margins
        assert imported.dwell_ms == record.dwell_ms
    assert [(r.run, r.algo, r.eval_index) for r in S.records] == [(0, "out", 0), (0, "out", 1)]
    assert S.provenance == (("file:out.pris",), ("file:out.pris",))
    assert (tmp_path / "out.pris").read_text().splitlines()[1].startswith("51,57,63")


def test_report_round_trip(tmp_path):
    store = Store(tmp_path)
    B = nd_filter(synthetic_point_set(random_objectives(40)))
    report = compute_metrics({"copy": B}, B, samples=1000, seed=0)
    path = store.save_report(report, "metrics.json")
    assert store.load_report("metrics.json") == report
    assert store.read_metadata(path.with_suffix(".csv")) == {
        "config_hash": B.config_hash,
        "seed": "0",
        "seeds": "",
    }
