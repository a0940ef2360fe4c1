import pytest

from hecke_quiver.coxeter import (
    INF, CoxeterDatum, HeckeDatum, alternating_word, conjugacy_classes, datum_from_json, s2fin,
    validate_hecke_datum,
)
from hecke_quiver.laurent import parse


def test_s2fin_b3(b3_datum):
    pairs = s2fin(b3_datum.coxeter)
    assert len(pairs) == 6
    assert all((s, r) in pairs for r, s in pairs)


def test_s2fin_infinite_and_a2():
    inf = CoxeterDatum(("r", "s"), ((1, "inf"), ("inf", 1)))
    assert s2fin(inf) == []
    a2 = CoxeterDatum(("r1", "r2"), ((1, 3), (3, 1)))
    assert s2fin(a2) == [("r1", "r2"), ("r2", "r1")]


def test_matrix_invariants_enforced():
    with pytest.raises(ValueError):
        CoxeterDatum(("r", "s"), ((1, 3), (2, 1)))
    with pytest.raises(ValueError):
        CoxeterDatum(("r", "s"), ((2, 3), (3, 1)))
    with pytest.raises(ValueError):
        CoxeterDatum(("r", "s"), ((1, 1), (1, 1)))


def test_validate_datum(b3_datum):
    cox = b3_datum.coxeter
    ok = HeckeDatum(cox, {"r1": parse("v"), "r2": parse("v"), "r3": parse("v^2")})
    assert validate_hecke_datum(ok).passed
    bad = HeckeDatum(cox, {"r1": parse("v"), "r2": parse("v^2")})
    rep = validate_hecke_datum(bad)
    assert not rep.passed
    assert rep.violations[0]["pair"] == ["r1", "r2"]
    assert validate_hecke_datum(b3_datum).passed


def test_odd_components_partition(b3_datum):
    classes = conjugacy_classes(b3_datum.coxeter)
    assert classes == [frozenset({"r1", "r2"}), frozenset({"r3"})]


def test_alternating_word():
    assert alternating_word("r", "s", 3) == ("r", "s", "r")
    assert alternating_word("r", "s", 1) == ("r",)
    assert alternating_word("s", "r", 4) == ("s", "r", "s", "r")


def test_dual_datum(b3_datum):
    d = b3_datum.dual()
    assert d.a["r1"] == parse("-v^-1") and d.b["r1"] == parse("-v")
    assert d.dual() == b3_datum


def test_json_round_trip(b3_datum):
    obj = {"generators": ["r1", "r2", "r3"], "matrix": [[1, 3, 2], [3, 1, 4], [2, 4, 1]]}
    assert datum_from_json(obj) == b3_datum
    assert datum_from_json(b3_datum.to_json()) == b3_datum
    inf = datum_from_json({"generators": ["a", "b"], "matrix": [[1, "inf"], ["inf", 1]]})
    assert inf.coxeter.m("a", "b") == INF
