import json

import pytest

from periodic_homfly.corpus import (
    CorpusRecord,
    CrossCheckError,
    bundled_corpus,
    cross_check,
    emit,
    ingest,
    ingest_text,
    parse_variant,
    scan,
)
from periodic_homfly.diagram import linking_data

TREFOIL = "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]"
RIGHT_TREFOIL = "PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]"
HOPF = "PD[X[4,1,3,2],X[2,3,1,4]]"


def test_ingest_trefoil_line():
    res = ingest_text(f'name,components,pd,homfly\n3_1,1,"{TREFOIL}",\n')
    assert not res.errors and len(res) == 1
    rec = res.records[0]
    assert rec.components == 1 and rec.homfly is None and rec.line == 2


def test_ingest_collects_line_errors():
    text = (
        "name,components,pd,homfly\n"
        f'3_1,2,"{TREFOIL}",\n'
        f'bad_pd,1,"PD[X[1,2,3]]",\n'
        f'bad_poly,1,"{TREFOIL}",2*q\n'
        f'hopf,2,"{HOPF}",\n'
    )
    res = ingest_text(text)
    assert [r.name for r in res] == ["hopf"]
    assert [(e.line, e.name) for e in res.errors] == [(2, "3_1"), (3, "bad_pd"), (4, "bad_poly")]
    assert "declared 2 components" in res.errors[0].message


def test_ingest_missing_columns():
    res = ingest_text("name,pd\nx,PD[]\n")
    assert not res.records and res.errors[0].line == 1


def test_cross_check():
    assert cross_check(CorpusRecord("3_1", 1, RIGHT_TREFOIL, "2*v^2 - v^4 + v^2*z^2"))
    assert not cross_check(CorpusRecord("3_1", 1, RIGHT_TREFOIL, "2*v^2 - v^4 + v^2*z^4"))
    assert cross_check(CorpusRecord("3_1", 1, RIGHT_TREFOIL, "v^2*z^2 - v^4 + 2*v^2"))
    with pytest.raises(ValueError):
        cross_check(CorpusRecord("3_1", 1, RIGHT_TREFOIL))


def test_variant_bits():
    assert parse_variant("{0,1,0}") == (0, 1, 0)
    assert parse_variant("011") == (0, 1, 1)
    assert parse_variant("") == ()
    with pytest.raises(ValueError):
        parse_variant("{0,2}")


def test_variant_reverses_later_components():
    base = next(r for r in ingest(bundled_corpus()) if r.name == "L10n107{0,0,0}")
    flipped = CorpusRecord("x", 4, base.pd, None, (0, 1, 0))
    a, b = linking_data(base.diagram()), linking_data(flipped.diagram())
    # bit 2 reverses component 3 (index 2): its linking numbers change sign
    for i in range(4):
        for j in range(4):
            if i != j:
                sign = -1 if 2 in (i, j) else 1
                assert b.lk(i, j) == sign * a.lk(i, j)


def test_variant_column_round_trip(tmp_path):
    recs = [CorpusRecord("h{1}", 2, HOPF, None, (1,)), CorpusRecord("h{0}", 2, HOPF, None, ())]
    path = tmp_path / "c.csv"
    emit(recs, path)
    back = ingest(path)
    assert not back.errors and back.records == recs


def test_emit_ingest_round_trip(tmp_path):
    src = bundled_corpus("small_le8")
    res = ingest(src)
    out = tmp_path / "copy.csv"
    emit(res.records, out)
    again = ingest(out)
    assert again.records == res.records
    assert emit(again.records) == out.read_text()


def test_scan_census():
    rep = scan(ingest(bundled_corpus()), 3)
    names = [e["name"] for e in rep.summary()]
    assert len(names) == 14
    assert rep.passing == [e for e in rep.entries if e.report.condition2_passed]
    assert [e.name for e in rep.entries] == sorted(e.name for e in rep.entries)


def test_scan_is_deterministic():
    recs = ingest(bundled_corpus()).records
    a = scan(recs, 3).to_json()
    b = scan(list(reversed(recs)), 3).to_json()
    c = scan(recs, 3, workers=2).to_json()
    assert a == b == c
    assert json.loads(a)["passing"] == 14


def test_scan_filter_and_errors():
    recs = ingest(bundled_corpus("small_le8")).records
    rep = scan(recs, 3, components=[1])
    assert {e.n for e in rep.entries} == {1}
    rep = scan(recs, 3)
    assert {e.n for e in rep.entries} == {1}
    rep = scan(recs, 3, components=[2, 3], max_crossings=5)
    assert rep.errors and all("limit" in e.error for e in rep.errors)


def test_scan_refuses_bad_stored_values():
    good = CorpusRecord("3_1", 1, RIGHT_TREFOIL, "2*v^2 - v^4 + v^2*z^2")
    bad = CorpusRecord("3_1x", 1, RIGHT_TREFOIL, "1")
    with pytest.raises(CrossCheckError) as exc:
        scan([good, bad], 3)
    assert exc.value.names == ["3_1x"]
    rep = scan([good, bad], 3, allow_mismatch=True)
    assert [e.cross_check for e in rep.entries] == [True, False]
