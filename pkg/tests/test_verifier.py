import json

import pytest

from icosa import hashimoto as hs
from icosa.errors import UnknownFormat
from icosa.verifier import REGISTRY, SCOPE, Report, list_claims, render, run, to_dict
from icosa.verifier.cli import main


def _strip_volatile(doc):
    doc = dict(doc)
    doc.pop("timestamp")
    doc["results"] = [{k: v for k, v in r.items() if k != "runtime_ms"} for r in doc["results"]]
    return doc


def test_registry_size_and_ids():
    claims = list_claims()
    assert len(claims) >= 25
    ids = [c.id for c in claims]
    assert ids == sorted(ids)
    assert len(set(ids)) == len(ids) == len(REGISTRY)


def test_filter_semantics():
    lam = list_claims("pencil.lambda")
    assert [c.id for c in lam] == [
        "pencil.lambda.s10",
        "pencil.lambda.s10p",
        "pencil.lambda.s15",
        "pencil.lambda.s5",
    ]
    assert list_claims("zzz") == []
    assert {c.id for c in list_claims("x10p")} == {
        "x10p.chart-independence",
        "x10p.irreducible",
        "x10p.nine-nodes",
        "x10p.sextic",
    }


def test_every_scope_topic_has_a_claim():
    topics = {c.topic for c in REGISTRY.values()}
    missing = [t for t in SCOPE if t not in topics]
    assert not missing
    assert topics <= set(SCOPE)


def test_claims_carry_anchors():
    for c in REGISTRY.values():
        assert c.paper_anchor and c.description


def test_run_pencil_passes():
    report = run("pencil.lambda")
    assert report.summary == {"pass": 4, "fail": 0, "error": 0}
    assert report.exit_code == 0
    report = run("qfact")
    assert [r["computed"] for r in report.results] == [10, 10]


def test_json_shape():
    doc = json.loads(render(run("x15"), "json"))
    assert set(doc) == {"version", "timestamp", "results", "summary"}
    assert set(doc["summary"]) == {"pass", "fail", "error"}
    for r in doc["results"]:
        assert set(r) == {"id", "status", "paper_anchor", "expected", "computed", "runtime_ms"}


def test_render_empty_and_counts():
    empty = Report([])
    doc = json.loads(render(empty, "json"))
    assert doc["results"] == [] and doc["summary"] == {"pass": 0, "fail": 0, "error": 0}
    mixed = Report(
        [
            {"id": "a", "status": "pass", "paper_anchor": "", "expected": 1, "computed": 1, "runtime_ms": 0},
            {"id": "b", "status": "fail", "paper_anchor": "", "expected": 1, "computed": 2, "runtime_ms": 0},
            {"id": "c", "status": "error", "paper_anchor": "", "expected": 1, "computed": "X", "runtime_ms": 0},
        ]
    )
    assert to_dict(mixed)["summary"] == {"pass": 1, "fail": 1, "error": 1}
    assert mixed.exit_code == 2
    assert "| b | fail |" in render(mixed, "md")
    with pytest.raises(UnknownFormat):
        render(empty, "xml")


def test_determinism_across_jobs():
    a = _strip_volatile(to_dict(run("incidence", jobs=1)))
    b = _strip_volatile(to_dict(run("incidence", jobs=2)))
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_run_rejects_zero_jobs():
    with pytest.raises(ValueError):
        run("x15", jobs=0)


def test_cli_list(capsys):
    assert main(["list", "--filter", "bring"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert [line.split("\t")[0] for line in out] == ["bring.genus", "bring.zeta-points"]


def test_cli_run_report(tmp_path, capsys):
    path = tmp_path / "r.json"
    assert main(["run", "--filter", "pencil.lambda", "--report", str(path)]) == 0
    doc = json.loads(path.read_text())
    assert doc["summary"]["pass"] == 4
    assert main(["run", "--filter", "x15.r2", "--format", "md"]) == 0
    assert "x15.r2" in capsys.readouterr().out


def test_cli_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["run", "--format", "xml"])
    assert info.value.code == 3
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 3
    assert main(["run", "--jobs", "0"]) == 3


@pytest.fixture
def corrupted_f4(monkeypatch):
    original = hs.power_sum_form

    def corrupt(i):
        f = original(i)
        return f + hs.RING.gens[0] ** 4 if i == 4 else f

    hs.hashimoto_quartic.cache_clear()
    monkeypatch.setattr(hs, "power_sum_form", corrupt)
    yield
    monkeypatch.undo()
    hs.hashimoto_quartic.cache_clear()


def test_corrupted_f4_is_caught(corrupted_f4, capsys):
    report = run("pencil")
    assert report.summary["fail"] + report.summary["error"] > 0
    assert main(["run", "--filter", "pencil.lambda"]) != 0
    assert main(["run", "--filter", "pencil.nodes"]) != 0


def test_cache_restored_after_corruption():
    assert run("pencil.nodes").exit_code == 0
