import random

from hecke_quiver.coxeter import CoxeterDatum, HeckeDatum
from hecke_quiver.graph import DGraph, dual_graph, dual_name
from hecke_quiver.laurent import ONE, V, V_INV
from hecke_quiver.reps import (
    FreeModuleElement, RepMatrix, check_dgraph, quadratic_defect, tau_dual_matrix, tau_matrix, tau_word,
)


def perturb(g, k=0, weight=2):
    mu = {e.id: g.mu[e.id] for e in g.edges}
    mu[g.edges[k].id] = weight
    return g.with_mu(mu)


def test_tau_a2_columns(a2):
    t = tau_matrix(a2, "r1")
    assert t.column("u") == FreeModuleElement({"u": -V_INV})
    assert t.column("w") == FreeModuleElement({"w": V, "u": ONE})


def test_tau_diagonal_without_edges():
    d = HeckeDatum(CoxeterDatum.from_orders(["r", "s"], {("r", "s"): 3}))
    g = DGraph(d, ("x", "y"), (), {"x": frozenset({"r"}), "y": frozenset()}, {})
    t = tau_matrix(g, "r")
    assert t.entry("x", "x") == -V_INV and t.entry("y", "y") == V
    assert t.entry("x", "y").is_zero()


def test_a2_braid_by_hand(a2):
    t1, t2 = tau_matrix(a2, "r1"), tau_matrix(a2, "r2")
    assert t1 @ t2 @ t1 == t2 @ t1 @ t2


def test_check_dgraph(a2, b3):
    assert check_dgraph(a2).passed
    assert check_dgraph(b3).passed
    bad = check_dgraph(perturb(a2))
    assert not bad.passed
    assert any(f["relation"] == "braid" and f["pair"] == ["r1", "r2"] for f in bad.failures)


def test_empty_graph_passes():
    d = HeckeDatum(CoxeterDatum.from_orders(["r", "s"], {("r", "s"): 3}))
    assert check_dgraph(DGraph(d, (), (), {}, {})).passed


def test_quadratic_on_matrices(a2, b3):
    for g in (a2, b3):
        for r in g.generators:
            assert quadratic_defect(g, r).is_zero()


def test_dual_is_a_dgraph(a2, b3):
    for g in (a2, b3):
        assert check_dgraph(dual_graph(g)).passed


def test_dual_is_transpose(a2, b3):
    for g in (a2, b3):
        for r in g.generators:
            assert tau_dual_matrix(g, r) == tau_matrix(g, r).transpose().renamed(dual_name)


def test_word_contragredience(b3):
    rng = random.Random(1)
    gd = dual_graph(b3)
    for _ in range(30):
        word = [rng.choice(b3.generators) for _ in range(rng.randint(0, 5))]
        left = tau_word(b3, word).transpose().renamed(dual_name)
        right = tau_word(gd, list(reversed(word)))
        assert left == right


def test_double_dual_matrix(b3):
    dd = dual_graph(dual_graph(b3))
    for r in b3.generators:
        assert tau_matrix(dd, r) == tau_matrix(b3, r)
