import json
from fractions import Fraction

import pytest

from volkenborn.catalog import (
    CHECKS,
    Ranges,
    Status,
    UnknownIdentity,
    errata_section,
    has_failure,
    load_manifest,
    report_json,
    report_tsv,
    resolve_id,
    run,
)

SPEC_IDS = {
    "FAC": "RO IDD1 AB6 AB6A LF1C CV V1A GG1 GG2 ID7 ID5 ID6 ID1A ID2B BIAA BI1B3 BI1B4 SCHLOMILCH OSGOOD "
    "LAH_DEF CF_RT BUTZER_EVEN BUTZER_ODD BUTZER_REC DELTA_T",
    "GF": "APB_VALUES APB_INITIAL APE_VALUES REL_APBE FROB_EULER APB_FROB CAUCHY_B2 FUBINI_W CHANGHEE_STIRLING "
    "PETERS_SPECIAL AY1B AY1C A1A3",
    "VOLK": "C7 AK1 C0 BI1 L1 L1A LL1A LL1B XRATIO COMBSUM X1N1 AI0A3 LF1A LF1B V1A_INT X1N DELTA_INT NEGX V1B "
    "LF1S LF1U GG1_INT HARM_INT ID7_INT IR2 ID6_INT ID1_ID2 BIAA_INT AS1B LF1H LAHV LF1I BIAB CFT_INT CF2_INT "
    "CF_EVEN_INT CF_ODD_INT XVBINR_V BERN_SUM_V PETERS_V HARMPROD_V",
    "FERM": "EST3 AK2 CA1 FI1 AB7 AB7A V1B_F XRATIO_F LF1Y LF1Z ID6_F ID3_ID4 ID7_F IR1 HARM_F BIAA_F BERNSTEIN_F "
    "AS11A CFT_F CF2_F CF_EVEN_F BIAC LAH_F XVBINR_F BERN_SUM_F PETERS_F HARMPROD_F",
    "IDENT": "AF6B AF8E CF_TB CF_TE EULER_BERNSTEIN_REL BERNSTEIN_ZERO_SUM STIRLING_BERN_DOUBLE DAEHEE_PETERS "
    "PETERS_FACT CHANGHEE_PETERS CHANGHEE_Y2 DAEHEE_Y2",
    "SEQ": "YB_VALUES YE_VALUES YB_CF YE_ZERO B2N_REC E2N_REC YB_STIRLAH YE_STIRLAH XNXM_V XNXM_F",
}


@pytest.fixture(scope="module")
def all_results():
    return run()


def test_manifest_covers_every_listed_identity():
    manifest = load_manifest()
    for group, ids in SPEC_IDS.items():
        for i in ids.split():
            assert f"{group}.{i}" in manifest


def test_manifest_is_well_formed():
    manifest = load_manifest()
    for key, e in manifest.items():
        assert key == e.id and e.id.startswith(e.group + ".")
        assert e.check in CHECKS and e.paper_eq and e.anchor
        if e.erratum:
            assert e.erratum.kind in ("bulk", "boundary", "declared")
            assert e.erratum.corrected is None or e.erratum.corrected in CHECKS


def test_spec_examples():
    (r,) = run(["VOLK.L1"], 8)
    assert r.status is Status.PASS and r.tested == 9
    (r,) = run(["SEQ.YE_ZERO"], 8)
    assert r.status is Status.PASS
    (r,) = run(["FAC.CV"], 8)
    assert r.status is Status.PASS


def test_l1_value_at_two():
    seen = {}
    for params, lhs, rhs in CHECKS["l1"](Ranges(n_max=2)):
        seen[params["n"]] = (lhs, rhs)
    assert seen[2] == (Fraction(-1, 6), Fraction(-1, 6))


def test_unknown_and_bare_ids():
    with pytest.raises(UnknownIdentity):
        run(["NOT.THERE"])
    assert resolve_id("L1") == "VOLK.L1"
    assert resolve_id("SCHLOMILCH") == "FAC.SCHLOMILCH"


def test_full_catalog_has_no_failure(all_results):
    assert not has_failure(all_results)
    assert [r.id for r in all_results] == list(load_manifest())


def test_erratum_reports_carry_both_sides(all_results):
    manifest = load_manifest()
    for r in all_results:
        e = manifest[r.id]
        if e.erratum is None:
            assert r.status is Status.PASS, r.id
            continue
        assert r.status is Status.ERRATUM_CANDIDATE
        rep = r.report
        assert rep["kind"] == e.erratum.kind and rep["reason"]
        if e.erratum.corrected:
            assert rep["corrected"]["agrees"], r.id
        if e.erratum.kind in ("bulk", "boundary"):
            ce = rep["printed"]["counterexample"]
            assert not rep["printed"]["agrees"] and ce["lhs"] != ce["rhs"], r.id


def test_declared_entries(all_results):
    by_id = {r.id: r for r in all_results}
    assert by_id["FAC.SCHLOMILCH"].status is Status.ERRATUM_CANDIDATE
    assert by_id["FAC.SCHLOMILCH"].report["printed"]["agrees"]
    unit = by_id["SEQ.UNIT_T"].report
    assert not unit["printed"]["agrees"] and unit["corrected"]["agrees"]


def test_boundary_errata_fail_only_at_the_boundary(all_results):
    for r in all_results:
        if r.report and r.report["kind"] == "boundary":
            params = r.report["printed"]["counterexample"]["params"]
            assert "0" in params.values(), r.id


def test_reports_are_deterministic():
    a = run(["VOLK.C7", "FERM.HARM_F", "SEQ.UNIT_T"])
    b = run(["SEQ.UNIT_T", "VOLK.C7", "FERM.HARM_F"], workers=2)
    ta = report_tsv(a, errata=True).splitlines()
    tb = report_tsv(b, errata=True).splitlines()
    assert sorted(ta) == sorted(tb)
    assert report_json(run(["VOLK.C7"]), True) == report_json(run(["VOLK.C7"], workers=2), True)


def test_json_schema():
    data = json.loads(report_json(run(["FERM.HARM_F", "VOLK.L1"])))
    for d in data:
        assert {"id", "paper_eq", "tested", "status"} <= set(d)
    assert data[0]["counterexample"]["params"] == {"n": "0"}


def test_errata_section_lists_both_checks():
    text = errata_section(run(["VOLK.HARM_INT"]))
    assert "## VOLK.HARM_INT (bulk)" in text
    assert "printed form agrees" in text and "corrected form agrees" in text


def test_failures_carry_exact_counterexamples(monkeypatch):
    from volkenborn.catalog import registry, runner

    def broken(R):
        yield {"n": 3}, Fraction(1, 3), Fraction(1, 2)

    monkeypatch.setitem(registry.CHECKS, "l1", broken)
    (r,) = runner.run(["VOLK.L1"])
    assert r.status is Status.FAIL
    assert r.counterexample.as_dict() == {"params": {"n": "3"}, "lhs": "1/3", "rhs": "1/2"}
    assert has_failure([r])
