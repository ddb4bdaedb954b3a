import json
import os
import pathlib

import pytest

import posetlogic as pl

SCHEMA = pathlib.Path(
    os.environ.get("POSETLOGIC_SCHEMA", pathlib.Path(__file__).parents[2] / "docs" / "report.schema.json")
)


def p4():
    return pl.Orthoset.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def test_p4_example():
    o = p4()
    assert pl.perp(o, [2]) == [1, 3]
    assert pl.double_perp(o, [0, 2]) == [0, 2]
    assert pl.bases(o, [0, 2]) == [[0], [2]]
    dacey, witness = pl.is_dacey(o)
    assert not dacey
    assert witness is not None


def test_n_poset():
    n = pl.n_poset()
    assert pl.find_n(n) == (0, 1, 2, 3)
    assert pl.incomparability_orthoset(n) == pl.Orthoset.from_edges(4, [(1, 0), (0, 3), (3, 2)])
    t = pl.verify_theorems(n)
    assert not t["n_free"] and not t["dacey"] and not t["orthomodular"]
    assert t["violations"] == []


def test_diamond_logic():
    logic = pl.build_logic(pl.incomparability_orthoset(pl.diamond22()))
    assert len(logic) == 6
    assert pl.is_orthomodular(logic)[0]
    assert not pl.is_boolean(logic)[0]
    assert pl.verify_ortholattice(logic)[0]


def test_poset_queries_and_errors():
    c = pl.chain(3)
    assert c.lt(0, 2) and not c.covers(0, 2)
    assert pl.maximal_chains(c) == [[0, 1, 2]]
    assert pl.maximal_antichains(pl.antichain(3)) == [[0, 1, 2]]
    with pytest.raises(pl.CycleError):
        pl.Poset.from_covers(2, [(0, 1), (1, 0)])
    with pytest.raises(pl.ParseError):
        pl.parse_poset_file("element a\ncover a b\n")
    with pytest.raises(pl.NotOrthoclosedError):
        pl.ud_decomposition(c, [0])


def test_counts_and_census():
    assert [pl.count_labeled_posets(n) for n in range(5)] == [1, 1, 3, 19, 219]
    summaries = pl.census_run(4, workers=2)
    assert summaries[4]["total_posets"] == 219
    assert all(s["violations"] == [] for s in summaries)


def test_round_trip():
    p = pl.random_poset(7, 5, 0.4)
    assert pl.parse_poset_file(pl.serialize_poset_file(p)) == p
    assert "digraph hasse" in pl.emit_dot_hasse(p)


def test_report_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(SCHEMA.read_text())
    for poset in [pl.n_poset(), pl.diamond22(), pl.chain(3), pl.antichain(0), pl.random_poset(6, 2, 0.3)]:
        report = pl.analyze(poset, timing=True)
        jsonschema.validate(report, schema)
        assert pl.revalidate_report(report, poset) == ""


def test_bowtie_report_lists_the_weak_n_violation():
    bowtie = pl.Poset.from_covers(5, [(2, 4), (3, 4), (4, 0), (4, 1)])
    report = pl.analyze(bowtie)
    assert report["predicates"]["weak_n_free"]
    assert not report["predicates"]["compatible"]
    assert "weak-N-free != compatible" in report["violations"]
