import json

import pytest

from modgraph.checks import (
    ALL_CHECKS,
    APPLICABILITY_FAILED,
    FAIL,
    PASS,
    VACUOUS,
    check_complement_coloring,
    check_connectivity,
    check_low_degree,
    check_overline_coloring,
    check_pair_count,
    check_small_degree_maximal,
    check_socle_cliques,
    check_structured_shapes,
    check_triangle_free,
    render_summary,
    reports_to_jsonl,
    run_suite,
)


@pytest.fixture(scope="module")
def named_reports(named_contexts):
    return run_suite(named_contexts)


def test_no_failures_on_named_instances(named_reports):
    reports, summary = named_reports
    assert not summary.failed
    assert all(r.status != FAIL for r in reports)


def test_every_check_has_a_nonvacuous_instance(named_reports):
    reports, summary = named_reports
    assert not summary.warnings
    for cid, counts in summary.counts.items():
        assert set(counts) != {VACUOUS}, cid


def test_c4_nonvacuous_on_triangular(ctx_by_id):
    rep = check_small_degree_maximal(ctx_by_id["triangular(F4,F2)/regular"])
    assert rep.status == PASS
    item = rep.details["<[[0,1],[0,0]],[[0,0],[0,1]]>"]
    assert item["deg"] == 2 and item["deg_c"] == 4
    assert item["end_size"] == 4
    assert item["deg_formula_adjusted"] and not item["deg_formula_stated"]
    assert item["g_T"] == 1 and item["g_T_over_inner"] == 0


def test_c4_vacuous_on_mixed_sum(ctx_by_id):
    rep = check_small_degree_maximal(ctx_by_id["zmod(4)/sum(quot(regular;2),regular)"])
    assert rep.status == VACUOUS


def test_c4_handles_simple_maximal_ideals(ctx_by_id):
    rep = check_small_degree_maximal(ctx_by_id["M2(F2)/regular"])
    assert rep.status == PASS
    items = [v for k, v in rep.details.items() if isinstance(v, dict)]
    assert items and all(it.get("t_simple") for it in items)


def test_c5_exact_counts(ctx_by_id):
    for q, name in [(4, "triangular(F4,F2)/regular"), (9, "triangular(F9,F3)/regular")]:
        rep = check_structured_shapes(ctx_by_id[name])
        assert rep.status == PASS
        assert rep.details["deg_T"] == 2
        assert rep.details["alpha"] == q + 3
        assert rep.details["zero_meet_count"] == q
    rep = check_structured_shapes(ctx_by_id["M2(F3)/regular"])
    assert rep.status == PASS and rep.details["alpha"] == 4


def test_c1_counts(ctx_by_id):
    rep = check_pair_count(ctx_by_id["gf(3,1)^2/selfsum"])
    assert rep.status == PASS
    assert rep.details == {
        "iso_count": 2,
        "alpha": 4,
        "end_size": 3,
        "whole_module_end_plus_one": 82,
    }
    rep2 = check_pair_count(ctx_by_id["zmod(6)/sum(quot(regular;2),quot(regular;3))"])
    assert rep2.status == PASS and rep2.details["alpha"] == 2
    rep3 = check_pair_count(ctx_by_id["zmod(12)/regular"])
    assert rep3.status == VACUOUS


def test_c2_records_degree_one_counterexample(ctx_by_id):
    rep = check_low_degree(ctx_by_id["zmod(12)/regular"])
    assert rep.status == PASS
    assert rep.details["degree_one_without_star"] == ["<4>"]
    star = check_low_degree(ctx_by_id["polyquot(F2,x^2,x*y,y^2)/regular"])
    assert star.status == PASS and star.details["predicted_order"] == 4


def test_c6_matches_overlines(ctx_by_id):
    rep = check_socle_cliques(ctx_by_id["triangular(F4,F2)/regular"])
    assert rep.status == PASS and rep.details["maximal_cliques"] == 5
    assert check_socle_cliques(ctx_by_id["zmod(12)/regular"]).status == VACUOUS


def test_c7_and_c8_statuses(ctx_by_id):
    c7 = check_overline_coloring(ctx_by_id["triangular(F4,F2)/regular"])
    assert c7.status == PASS
    assert c7.details == {"omega": 3, "chi": 3, "construction_colors": 3}
    c8 = check_complement_coloring(ctx_by_id["triangular(F4,F2)/regular"])
    assert c8.status == APPLICABILITY_FAILED
    assert c8.details["omega_c"] == c8.details["chi_c"] == 5
    c8_chain = check_complement_coloring(ctx_by_id["zmod(8)/regular"])
    assert c8_chain.status == VACUOUS


def test_c9_ring_cases(ctx_by_id):
    rep = check_triangle_free(ctx_by_id["zmod(8)/regular"])
    assert rep.status == PASS
    assert rep.details["case"] == "chain" and rep.details["ring_case"] == "chain-radical"
    star = check_triangle_free(ctx_by_id["polyquot(F2,x^2,x*y,y^2)/regular"])
    assert star.details["ring_case"] == "radical-pair-maximal"
    semi = check_triangle_free(ctx_by_id["M2(F2)/regular"])
    assert semi.details["ring_case"] == "semisimple-pair"
    z12 = check_triangle_free(ctx_by_id["zmod(12)/regular"])
    assert z12.status == PASS and z12.details["case"] is None


def test_c10_connectivity(ctx_by_id):
    rep = check_connectivity(ctx_by_id["zmod(6)/sum(quot(regular;2),quot(regular;3))"])
    assert rep.status == PASS and rep.details["connected"] is False
    rep2 = check_connectivity(ctx_by_id["zmod(12)/regular"])
    assert rep2.details["connected"] is True and rep2.details["diameter"] == 2


def test_c11_structure_report(ctx_by_id):
    rep = ALL_CHECKS["C11-structure-report"](ctx_by_id["triangular(F4,F2)/regular"])
    assert rep.status == PASS
    entry = rep.details["small_degree_maximal"][0]
    assert entry["inner_simple_unique"] and entry["inner_isomorphic_to_complement"]
    assert entry["end_size"] == 4
    assert rep.details["double_simple_image"] is not None
    z8 = ALL_CHECKS["C11-structure-report"](ctx_by_id["zmod(8)/regular"])
    assert z8.details["double_simple_image"] is None


def test_reports_are_replayable_and_deterministic(named_contexts):
    subset = [c for c in named_contexts if c.instance_id.startswith("zmod")]
    first, _ = run_suite(subset, ["C9-triangle-free", "C10-connectivity"])
    second, _ = run_suite(subset, ["C9-triangle-free", "C10-connectivity"])
    strip = lambda reports: [
        {k: v for k, v in r.to_json().items() if k != "seconds"} for r in reports
    ]
    assert strip(first) == strip(second)


def test_jsonl_round_trip(named_contexts):
    reports, _ = run_suite(named_contexts[:2], ["C1-pair-count"])
    lines = reports_to_jsonl(reports).strip().splitlines()
    assert len(lines) == 2
    for line in lines:
        rec = json.loads(line)
        assert {"check", "instance", "status", "witness", "details", "seconds"} <= set(rec)


def test_summary_rendering(named_reports):
    reports, summary = named_reports
    text = render_summary(reports, summary)
    assert "C9-triangle-free" in text
    assert text.strip().endswith("ok")


def test_unknown_check_id_rejected(named_contexts):
    with pytest.raises(KeyError):
        run_suite(named_contexts[:1], ["C99-nope"])


def test_vacuous_warning_fires(ctx_by_id):
    only_chain = [ctx_by_id["zmod(8)/regular"]]
    _, summary = run_suite(only_chain, ["C1-pair-count"])
    assert summary.warnings
