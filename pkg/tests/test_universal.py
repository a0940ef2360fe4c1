import random

import pytest
from hypothesis import given, settings, strategies as st

from hecke_quiver.coxeter import CoxeterDatum, HeckeDatum
from hecke_quiver.graph import dual_graph
from hecke_quiver.laurent import BETA, parse
from hecke_quiver.maps import random_path
from hecke_quiver.pathalg import PathElement, format_element, mul, parse_element
from hecke_quiver.rho import RhoOperator, braid_defect, j0_generators
from hecke_quiver.universal import (
    COperators, brute_force_universal, c_defect, c_word_op, cronr_expected, d_m, ending_with, kl_expansion,
    psi, pushforward_defect, pushforward_generators, rho_defect_ending, universal_generators, universal_graph,
)


def uni(m):
    d = HeckeDatum(CoxeterDatum.from_orders(["r", "s"], {("r", "s"): m}))
    return universal_graph(d, "r", "s")


def test_shape():
    u = uni(3)
    assert len(u.vertices) == 4 and len(u.edges) == 16
    assert u.labels["both"] == frozenset({"r", "s"})
    assert dual_graph(u).labels["empty^d"] == frozenset({"r", "s"})
    with pytest.raises(ValueError):
        universal_graph(u.datum, "r", "r")


@pytest.mark.parametrize("m,text", [
    (1, "r"), (2, "r.s"), (3, "r.s.r - r"), (4, "r.s.r.s - 2*r.s"),
    (5, "r.s.r.s.r - 3*r.s.r + r"), (6, "r.s.r.s.r.s - 4*r.s.r.s + 3*r.s"),
])
def test_d_m_examples(m, text):
    u = uni(max(m, 2))
    assert format_element(d_m(u, m, "r", "s"), u) == text


def test_universal_generators_small():
    u = uni(2)
    assert sorted(universal_generators(u).format_bodies(u)) == sorted(["r.s", "s.r", "empty.r.both - empty.s.both"])
    u = uni(3)
    assert sorted(universal_generators(u).format_bodies(u)) == sorted(
        ["r.s.r - r", "s.r.s - s", "empty.r.both - empty.s.both", "empty.r.s.both - empty.s.r.both"])
    u = uni(4)
    got = universal_generators(u).format_bodies(u)
    assert "r.s.r.s - 2*r.s" in got and "s.r.s.r - 2*s.r" in got and len(got) == 5


def test_universal_needs_dz():
    d = HeckeDatum(CoxeterDatum.from_orders(["r", "s"], {("r", "s"): 3}), {"r": parse("v^2"), "s": parse("v^2")})
    with pytest.raises(ValueError):
        universal_generators(universal_graph(d, "r", "s"))


@pytest.mark.parametrize("m", range(2, 8))
def test_closed_form_matches_brute_force(m):
    u = uni(m)
    assert universal_generators(u).same_bodies(brute_force_universal(u))


def test_c_on_both():
    u = uni(3)
    both = PathElement.vertex("both")
    assert c_word_op(u, ("r",), both) == both.scale(-BETA)


@pytest.mark.parametrize("m", range(1, 7))
def test_cronr_displays(m):
    u = uni(7)
    ops = COperators(u)
    cases = [("rr", "r", ending_with("r", "s", m)), ("sr", "r", ending_with("s", "r", m)),
             ("re", "empty", ending_with("r", "s", m)), ("se", "empty", ending_with("s", "r", m))]
    for case, x, word in cases:
        assert ops.product(word, PathElement.vertex(x)) == cronr_expected(u, case, m, "r", "s"), case


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from(["r", "s"]), max_size=6))
def test_c_words_on_both(word):
    u = uni(3)
    got = COperators(u).product(word, PathElement.vertex("both"))
    assert got == PathElement.vertex("both").scale((-BETA) ** len(word))


@pytest.mark.parametrize("m", range(2, 8))
def test_kl_recursion_expansion(m):
    u = uni(m)
    ops = COperators(u)
    for last, other in (("r", "s"), ("s", "r")):
        w = ending_with(last, other, m)
        for x in u.vertices:
            assert ops.kl(w, PathElement.vertex(x)) == kl_expansion(u, w, PathElement.vertex(x))


@pytest.mark.parametrize("m", range(2, 8))
def test_c_difference_equals_rho_difference(m):
    u = uni(m)
    for x in u.vertices:
        assert c_defect(u, x) == rho_defect_ending(u, x)
        sign = (-1) ** (m - 1)
        assert rho_defect_ending(u, x) == braid_defect(u, "r", "s", x).scale(sign)


def test_non_alternating_rejected():
    with pytest.raises(ValueError):
        c_word_op(uni(3), ("r", "r"), PathElement.vertex("r"))


def test_psi_table(psi_graph):
    u = universal_graph(psi_graph.datum, "r", "s")
    ps = psi(u, psi_graph)
    assert ps.vertex("r") == parse_element("x1 + x2", psi_graph)
    assert ps.vertex("s") == parse_element("x3", psi_graph)
    assert ps.vertex("both").is_zero()
    assert ps.vertex("empty") == parse_element("x4 + x5 + x6", psi_graph)
    # the drawn quiver also has x4 <- x1, whose endpoints lie in these classes
    assert ps.edge("empty:r") == parse_element("x5.x1 + x6.x1 + x4.x2 + x4.x1", psi_graph)
    assert ps.edge("s:empty").is_zero()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_psi_is_multiplicative(psi_graph, seed):
    u = universal_graph(psi_graph.datum, "r", "s")
    ps = psi(u, psi_graph)
    rng = random.Random(seed)
    p = PathElement.of(random_path(u, rng, 3))
    q = PathElement.of(random_path(u, rng, 3))
    assert ps(mul(p, q)) == mul(ps(p), ps(q))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_psi_intertwines_rho(psi_graph, seed):
    u = universal_graph(psi_graph.datum, "r", "s")
    ps = psi(u, psi_graph)
    rng = random.Random(seed)
    q = PathElement.of(random_path(u, rng, 3))
    z = rng.choice(["r", "s"])
    assert RhoOperator(psi_graph).apply(z, ps(q)) == ps(RhoOperator(u).apply(z, q))


def test_pushforward_b3_steps(b3):
    step1 = pushforward_generators(b3, "r1", "r2")
    assert sorted(step1.format_bodies(b3)) == ["y.z.y - y", "z.y.z - z"]
    assert len(pushforward_generators(b3, "r1", "r3")) == 0


def test_pushforward_asymptotic(asymptotic):
    got = pushforward_generators(asymptotic, "r1", "r2").format_bodies(asymptotic)
    assert sorted(got) == ["r1.r2.r1 - r1", "r2.r1.r2 - r2"]
    got = pushforward_generators(asymptotic, "r2", "r3").format_bodies(asymptotic)
    assert sorted(got) == ["r2.r3.r2.r3 - 2*r2.r3", "r3.r2.r3.r2 - 2*r3.r2"]


def test_pushforward_defects_equal_brute_force(b3, asymptotic, psi_graph):
    for g in (b3, asymptotic, psi_graph):
        for r in g.generators:
            for s in g.generators:
                if r == s:
                    continue
                for y in g.vertices:
                    assert pushforward_defect(g, r, s, y) == braid_defect(g, r, s, y)
