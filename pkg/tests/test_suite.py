import json

from autorbits.suite import ALIASES, GATING, SUITES, run_suite, suite_names


def test_aliases_point_to_suites():
    assert set(ALIASES.values()) <= set(SUITES)
    assert set(GATING) <= set(SUITES)
    assert "all" in suite_names()


def test_nonsolvable_suite():
    rep = run_suite("nonsolvable")
    assert rep.suite == "nonsolvable" and rep.status == "pass"
    values = [(c.computed["lo"], c.computed["hi"], c.computed["status"]) for c in rep.checks]
    assert values == [(v, v, "certified") for v in (4, 5, 5, 5, 6, 6)]


def test_census_suite_and_report_shape():
    rep = run_suite("census", parallel=True)
    assert rep.status == "pass"
    data = json.loads(rep.to_json())
    assert [c["id"] for c in data["checks"]] == SUITES["census"]
    assert rep.table().splitlines()[-1] == "overall: pass"
