"""Equivariant maps out of A[Gamma] and the duality between Gamma and its dual.

Statements about the quotient R are checked on representatives in A[Gamma]
and on their images under ``u`` and ``U``, since membership in J is not
decided here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import networkx as nx

from .coxeter import s2fin
from .graph import DGraph, PreDGraph, dual_graph, dual_name
from .ideal import in_zspan
from .laurent import LaurentPoly, ONE, ZERO, Specialization
from .pathalg import Path, PathElement, element_sum, format_element, mul
from .reps import FreeModuleElement, tau_word
from .rho import (
    GeneratorEntry,
    GeneratorSet,
    RhoOperator,
    braid_defect,
    defect_components,
    j0_generators,
    pair_order,
    raw_generators,
    split_by_source,
)


class MatrixAlgebraElement:
    """Sparse matrix ``sum a_{x,y} e_{x,y}`` over A, indexed by vertex pairs."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Mapping[tuple[str, str], LaurentPoly] | None = None):
        self._entries = {}
        for k, c in (entries or {}).items():
            c = LaurentPoly.coerce(c)
            if not c.is_zero():
                self._entries[k] = c

    @classmethod
    def unit(cls, x: str, y: str, c=ONE) -> MatrixAlgebraElement:
        return cls({(x, y): c})

    def entry(self, x: str, y: str) -> LaurentPoly:
        return self._entries.get((x, y), ZERO)

    def items(self):
        return self._entries.items()

    def is_zero(self) -> bool:
        return not self._entries

    def __add__(self, other: MatrixAlgebraElement) -> MatrixAlgebraElement:
        out = dict(self._entries)
        for k, c in other._entries.items():
            out[k] = out.get(k, ZERO) + c
        return MatrixAlgebraElement(out)

    def __neg__(self) -> MatrixAlgebraElement:
        return MatrixAlgebraElement({k: -c for k, c in self._entries.items()})

    def __sub__(self, other: MatrixAlgebraElement) -> MatrixAlgebraElement:
        return self + (-other)

    def __mul__(self, other: MatrixAlgebraElement) -> MatrixAlgebraElement:
        by_row: dict[str, list] = {}
        for (y, z), c in other._entries.items():
            by_row.setdefault(y, []).append((z, c))
        out: dict[tuple[str, str], LaurentPoly] = {}
        for (x, y), a in self._entries.items():
            for z, c in by_row.get(y, ()):
                out[(x, z)] = out.get((x, z), ZERO) + a * c
        return MatrixAlgebraElement(out)

    def scale(self, c) -> MatrixAlgebraElement:
        c = LaurentPoly.coerce(c)
        return MatrixAlgebraElement({k: c * a for k, a in self._entries.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, MatrixAlgebraElement) and self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"({x},{y}): {c}" for (x, y), c in sorted(self._entries.items()))
        return f"MatrixAlgebraElement({{{body}}})"

    def to_json(self) -> list[dict]:
        return [{"row": x, "col": y, "value": str(c)} for (x, y), c in sorted(self._entries.items())]


def mu_path(g: PreDGraph, p: Path) -> LaurentPoly:
    """Product of edge weights along ``p``; 1 on vertices."""
    out = ONE
    for e in p.edges:
        out = out * g.mu_of(e)
    return out


def u_map(g: DGraph, u: PathElement) -> FreeModuleElement:
    """``p -> mu(p) s(p)``, extended linearly."""
    out: dict[str, LaurentPoly] = {}
    for p, c in u.items():
        out[p.source] = out.get(p.source, ZERO) + c * mu_path(g, p)
    return FreeModuleElement(out)


def U_map(g: DGraph, u: PathElement) -> MatrixAlgebraElement:
    """``p -> mu(p) e_{t(p), s(p)}``, an algebra homomorphism."""
    out: dict[tuple[str, str], LaurentPoly] = {}
    for p, c in u.items():
        k = (p.target, p.source)
        out[k] = out.get(k, ZERO) + c * mu_path(g, p)
    return MatrixAlgebraElement(out)


def row_sum_projection(m: MatrixAlgebraElement) -> FreeModuleElement:
    """``e_{x,y} -> y``: forget the row index."""
    out: dict[str, LaurentPoly] = {}
    for (_, y), c in m.items():
        out[y] = out.get(y, ZERO) + c
    return FreeModuleElement(out)


def U_equivariance_sides(g: DGraph, word: Sequence[str], q: PathElement):
    """Both sides of ``U(rho_w(q)) = sum mu(p) e_{t(p)} (x) tau_w(s(p))``."""
    lhs = U_map(g, RhoOperator(g).word(word, q))
    tw = tau_word(g, word)
    rhs = MatrixAlgebraElement()
    for p, c in q.items():
        col = tw.column(p.source)
        scale = c * mu_path(g, p)
        rhs = rhs + MatrixAlgebraElement({(p.target, y): scale * a for y, a in col.items()})
    return lhs, rhs


def check_U_equivariance(g: DGraph, word: Sequence[str], q: PathElement) -> bool:
    lhs, rhs = U_equivariance_sides(g, word, q)
    return lhs == rhs


# duality ---------------------------------------------------------------------

def phi_path(p: Path) -> Path:
    """Reverse a path into the dual graph."""
    return Path(dual_name(p.source), dual_name(p.target), tuple(dual_name(e) for e in reversed(p.edges)))


def phi_anti_iso(u: PathElement) -> PathElement:
    """``p -> p^d``; its own inverse up to the renaming ``(x^d)^d = x``."""
    return PathElement({phi_path(p): c for p, c in u.items()})


phi_inverse = phi_anti_iso


def bilinear_form(p: PathElement, qd: PathElement) -> PathElement:
    """``<p, q^d> = p phi^{-1}(q^d)``."""
    return mul(p, phi_inverse(qd))


def contragredience_sides(g: PreDGraph, word: Sequence[str], p: PathElement, qd: PathElement, gd=None):
    """``<rho_w(p), q^d>`` and ``<p, rho^d_{rev w}(q^d)>``."""
    gd = gd if gd is not None else dual_graph(g)
    lhs = bilinear_form(RhoOperator(g).word(word, p), qd)
    rhs = bilinear_form(p, RhoOperator(gd).word(tuple(reversed(tuple(word))), qd))
    return lhs, rhs


def check_contragredience(g: PreDGraph, word, p, qd, gd=None) -> bool:
    lhs, rhs = contragredience_sides(g, word, p, qd, gd)
    return lhs == rhs


@dataclass
class DualityReport:
    passed: bool
    checked: int
    failures: list[dict] = field(default_factory=list)


def duality_generator_check(g: PreDGraph) -> DualityReport:
    """Right-split generators of J0 map under phi into the Z-span of the dual ones.

    Each ``X z`` (sign ``(-1)^(m-1)``) is tested for membership in the
    Z-span of the right-split generators of the dual graph, by exact
    lattice membership.
    """
    gd = dual_graph(g)
    mine = split_by_source(raw_generators(g, workers=1))
    theirs = [e.body for e in split_by_source(raw_generators(gd, workers=1))]
    failures = []
    for ent in mine:
        sign = (-1) ** (pair_order(g, ent.r, ent.s) - 1)
        img = phi_anti_iso(ent.body).scale(sign)
        if not in_zspan(img, theirs):
            failures.append({"r": ent.r, "s": ent.s, "x": ent.x, "i": ent.i, "body": format_element(ent.body, g)})
    return DualityReport(not failures, len(mine), failures)


def duality_literal_check(g: PreDGraph) -> DualityReport:
    """``X_i^{r,s,x} z = (-1)^(m-1) phi^{-1}(Y_i^{r,s,z^d} x^d)`` for all ``x, z, i``.

    ``X`` and ``Y`` are the v-power components of braid defects on the graph
    and on its dual.
    """
    gd = dual_graph(g)
    op, opd = RhoOperator(g), RhoOperator(gd)
    failures = []
    checked = 0
    for r, s in s2fin(g.datum.coxeter):
        sign = (-1) ** (pair_order(g, r, s) - 1)
        mine = {x: defect_components(g, r, s, x, op) for x in g.vertices}
        theirs = {z: defect_components(gd, r, s, dual_name(z), opd) for z in g.vertices}
        for x in g.vertices:
            for z in g.vertices:
                for i in sorted(set(mine[x]) | set(theirs[z])):
                    a = mine[x].get(i, PathElement()).right_idempotent(z)
                    b = theirs[z].get(i, PathElement()).right_idempotent(dual_name(x))
                    checked += 1
                    if a != phi_inverse(b).scale(sign):
                        failures.append({"r": r, "s": s, "x": x, "z": z, "i": i})
    return DualityReport(not failures, checked, failures)


# surjectivity ----------------------------------------------------------------

def check_Ux_surjective(g: DGraph, x: str) -> bool:
    """Every vertex ``y`` reaches ``x`` along a path of nonzero weight."""
    for e in g.edges:
        mu = g.mu_of(e.id)
        if not mu.is_constant() or mu.is_zero():
            raise ValueError(f"edge {e.id} needs a nonzero constant weight for this test")
    if not g.has_vertex(x):
        raise KeyError(f"unknown vertex {x!r}")
    net = nx.DiGraph()
    net.add_nodes_from(g.vertices)
    net.add_edges_from((e.source, e.target) for e in g.edges)
    return nx.ancestors(net, x) | {x} == set(g.vertices)


# specialization ----------------------------------------------------------------

@dataclass
class SpecializationReport:
    passed: bool
    generators: GeneratorSet
    mismatches: list[dict] = field(default_factory=list)


def specialize_element(u: PathElement, f: Specialization) -> PathElement:
    return u.map_coefficients(f)


def specialize_defects(g: PreDGraph, f: Specialization) -> SpecializationReport:
    """Recompute defects with parameters ``f(a_r)``, ``f(b_r)`` and compare to ``f`` of the originals."""
    gf = g.with_datum(g.datum.specialize(f))
    op, opf = RhoOperator(g), RhoOperator(gf)
    mismatches = []
    for r, s in s2fin(g.datum.coxeter):
        for x in g.vertices:
            want = specialize_element(braid_defect(g, r, s, x, op), f)
            got = braid_defect(gf, r, s, x, opf)
            if want != got:
                mismatches.append({"r": r, "s": s, "x": x})
    return SpecializationReport(not mismatches, j0_generators(gf, workers=1), mismatches)


# bimodule --------------------------------------------------------------------

def action_element(g: PreDGraph, word: Sequence[str], f: Specialization | None = None) -> PathElement:
    """``rho_w(1)`` with parameters specialized by ``f``; right multiplication by it is ``rho_w``."""
    h = g if f is None else g.with_datum(g.datum.specialize(f))
    return RhoOperator(h).word(word, PathElement.identity(h))


def check_bimodule(g: PreDGraph, a: PathElement, u: PathElement, word: Sequence[str], f=None) -> bool:
    """``(a u) T = a (u T) = rho_w(a u)`` with ``T = rho_w(1)``."""
    t = action_element(g, word, f)
    h = g if f is None else g.with_datum(g.datum.specialize(f))
    au = mul(a, u)
    lhs = mul(au, t)
    return lhs == mul(a, mul(u, t)) and lhs == RhoOperator(h).word(word, au)


# random inputs ---------------------------------------------------------------

def random_path(g: PreDGraph, rng: random.Random, max_len: int = 4) -> Path:
    """A random walk of length at most ``max_len``, built target to source."""
    x = rng.choice(g.vertices)
    n = rng.randint(0, max_len)
    edges = []
    cur = x
    for _ in range(n):
        ins = g.in_edges(cur)
        if not ins:
            break
        e = rng.choice(ins)
        edges.append(e.id)
        cur = e.source
    return Path(x, cur, tuple(edges))


def random_word(gens: Sequence[str], rng: random.Random, max_len: int = 5) -> tuple[str, ...]:
    return tuple(rng.choice(gens) for _ in range(rng.randint(0, max_len)))


def random_element(g: PreDGraph, rng: random.Random, terms: int = 3, max_len: int = 3) -> PathElement:
    return element_sum(
        PathElement.of(random_path(g, rng, max_len), LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3)}))
        for _ in range(terms)
    )


def equivariance_sweep(g: DGraph, cases: int, seed: int = 0, max_word: int = 5) -> list[dict]:
    """Failures of the U-equivariance identity on random (word, path) cases."""
    rng = random.Random(seed)
    bad = []
    for k in range(cases):
        word = random_word(g.generators, rng, max_word)
        q = PathElement.of(random_path(g, rng))
        if not check_U_equivariance(g, word, q):
            bad.append({"case": k, "word": list(word), "path": format_element(q, g)})
    return bad


def contragredience_sweep(g: PreDGraph, cases: int, seed: int = 0, max_word: int = 5) -> list[dict]:
    rng = random.Random(seed)
    gd = dual_graph(g)
    bad = []
    for k in range(cases):
        word = random_word(g.generators, rng, max_word)
        p = PathElement.of(random_path(g, rng))
        qd = PathElement.of(random_path(gd, rng))
        if not check_contragredience(g, word, p, qd, gd):
            bad.append({"case": k, "word": list(word), "p": format_element(p, g), "q": format_element(qd, gd)})
    return bad

