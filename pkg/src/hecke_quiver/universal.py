"""The universal pre-D-graph on a pair ``{r, s}`` and its dihedral relations.

Vertices of the universal graph are named after what they stand for:
``r`` and ``s`` (labels ``{r}``, ``{s}``), ``empty`` (no label) and
``both`` (label ``{r, s}``).  With simple edges the compressed path
syntax then reads like the classical notation, e.g. ``r.s.r - r``.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from .coxeter import HeckeDatum, alternating_word
from .graph import Edge, PreDGraph
from .laurent import BETA, V
from .pathalg import Path, PathElement, element_sum, mul
from .rho import GeneratorEntry, GeneratorSet, RhoOperator, braid_defect, pair_order

EMPTY = "empty"
BOTH = "both"


class UniversalGraph(PreDGraph):
    """Complete quiver with loops on ``{r, s, empty, both}``.

    ``pair`` records ``(r, s)``; the datum is restricted to ``{r, s}``.
    """

    pair: tuple[str, str]

    def vertex_of(self, labels) -> str:
        """Universal vertex whose label equals ``labels`` (a subset of ``{r, s}``)."""
        r, s = self.pair
        lab = frozenset(labels) & {r, s}
        if lab == {r, s}:
            return BOTH
        if lab == {r}:
            return r
        if lab == {s}:
            return s
        return EMPTY


def universal_graph(datum: HeckeDatum, r: str, s: str) -> UniversalGraph:
    if r == s:
        raise ValueError("the universal graph needs two distinct generators")
    if {r, s} & {EMPTY, BOTH}:
        raise ValueError(f"generator ids {EMPTY!r} and {BOTH!r} are reserved here")
    sub = datum.restrict([r, s])
    verts = (r, s, EMPTY, BOTH)
    labels = {r: frozenset({r}), s: frozenset({s}), EMPTY: frozenset(), BOTH: frozenset({r, s})}
    edges = tuple(Edge(f"{t}:{u}", t, u) for t in verts for u in verts)
    g = UniversalGraph(sub, verts, edges, labels)
    object.__setattr__(g, "pair", (r, s))
    return g


def chain(g: PreDGraph, names: Sequence[str]) -> PathElement:
    """The path visiting ``names`` from target to source, via simple edges."""
    if len(names) == 1:
        return PathElement.vertex(names[0])
    return PathElement.of(Path.from_edges(g, [g.edge_between(a, b).id for a, b in zip(names, names[1:])]))


def alternating_path(g: PreDGraph, first: str, second: str, k: int) -> PathElement:
    """``(first second first ...)_k`` as a path through ``k`` vertices."""
    return chain(g, alternating_word(first, second, k))


def d_m(g: PreDGraph, m: int, first: str, second: str) -> PathElement:
    """``sum_j (-1)^j C(m-1-j, j) (first second ...)_{m-2j}``."""
    if m < 1:
        raise ValueError("d_m needs m >= 1")
    terms = []
    for j in range((m - 1) // 2 + 1):
        c = (-1) ** j * comb(m - 1 - j, j)
        terms.append(alternating_path(g, first, second, m - 2 * j).scale(c))
    return element_sum(terms)


def mixed_path(g: PreDGraph, first: str, second: str, i: int) -> PathElement:
    """``empty (first second ...)_i both``."""
    return chain(g, (EMPTY,) + alternating_word(first, second, i) + (BOTH,))


def universal_generators(uni: UniversalGraph) -> GeneratorSet:
    """Closed-form generators of J0 on the universal graph (D_Z only)."""
    if not uni.datum.is_dz():
        raise ValueError("the closed form is only available for the datum a = v, b = v^-1")
    r, s = uni.pair
    m = pair_order(uni, r, s)
    entries = [
        GeneratorEntry(r, s, r, None, d_m(uni, m, r, s), "closed form"),
        GeneratorEntry(r, s, s, None, d_m(uni, m, s, r), "closed form"),
    ]
    for i in range(1, m):
        body = mixed_path(uni, s, r, i) - mixed_path(uni, r, s, i)
        entries.append(GeneratorEntry(r, s, EMPTY, i, body, "closed form"))
    return GeneratorSet.build(entries)


# C-operators ---------------------------------------------------------------

def _check_alternating(word: Sequence[str], pair: tuple[str, str]) -> tuple[str, ...]:
    word = tuple(word)
    for a in word:
        if a not in pair:
            raise ValueError(f"letter {a!r} not in {pair}")
    for a, b in zip(word, word[1:]):
        if a == b:
            raise ValueError("C-words must alternate")
    return word


class COperators:
    """``C_r = rho_r - v Id`` and the dihedral Kazhdan-Lusztig elements.

    ``kl(word, u)`` follows ``C_t C_{w'} = C_{t w'} + C_{w''}`` where
    ``w' = word[1:]`` and ``w'' = word[2:]``.  Words are read left to
    right as operators, so the last letter acts first.
    """

    def __init__(self, uni: UniversalGraph):
        if not uni.datum.is_dz():
            raise ValueError("C-operators are defined for the datum a = v, b = v^-1")
        self.uni = uni
        self.rho = RhoOperator(uni)

    def c(self, r: str, u: PathElement) -> PathElement:
        return self.rho.apply(r, u) - u.scale(V)

    def product(self, word: Sequence[str], u: PathElement) -> PathElement:
        """``C_{w_0} C_{w_1} ... C_{w_{n-1}} (u)``, any letters from the pair."""
        for a in reversed(tuple(word)):
            if a not in self.uni.pair:
                raise ValueError(f"letter {a!r} not in {self.uni.pair}")
            u = self.c(a, u)
        return u

    def kl(self, word: Sequence[str], u: PathElement) -> PathElement:
        word = _check_alternating(word, self.uni.pair)
        memo: dict[int, PathElement] = {}

        def go(k: int) -> PathElement:
            # C_{word[k:]}(u)
            if k in memo:
                return memo[k]
            n = len(word) - k
            if n == 0:
                out = u
            elif n <= 2:
                out = self.product(word[k:], u)
            else:
                out = self.c(word[k], go(k + 1)) - go(k + 2)
            memo[k] = out
            return out

        return go(0)


def c_word_op(uni: UniversalGraph, word: Sequence[str], u: PathElement) -> PathElement:
    return COperators(uni).kl(word, u)


def ending_with(last: str, other: str, m: int) -> tuple[str, ...]:
    """The alternating word ``(... other last)`` of length ``m``."""
    return tuple(reversed(alternating_word(last, other, m)))


def kl_expansion(uni: UniversalGraph, word: Sequence[str], u: PathElement) -> PathElement:
    """``sum_j (-1)^j C(m-1-j, j) (C ... C)_{m-2j}(u)`` with words ending like ``word``."""
    word = tuple(word)
    m = len(word)
    if m < 2:
        raise ValueError("expansion stated for m >= 2")
    ops = COperators(uni)
    last, other = word[-1], (word[-2] if m > 1 else None)
    terms = []
    for j in range((m - 1) // 2 + 1):
        c = (-1) ** j * comb(m - 1 - j, j)
        terms.append(ops.product(ending_with(last, other, m - 2 * j), u).scale(c))
    return element_sum(terms)


def cronr_expected(uni: UniversalGraph, case: str, m: int, r: str, s: str) -> PathElement:
    """Right-hand sides of the four closed forms for C-words on ``r`` and ``empty``.

    ``case`` is one of ``"rr"`` (word ending in r, applied to r), ``"sr"``
    (ending in s, applied to r), ``"re"`` and ``"se"`` (applied to ``empty``).
    """
    nb = -BETA

    def alt_both(first, second, k):
        return chain(uni, alternating_word(first, second, k) + (BOTH,))

    if case == "rr":
        out = alternating_path(uni, r, s, m).scale(nb)
        for i in range(1, m):
            out = out + alt_both(r, s, m - i).scale(nb ** i)
        return out
    if case == "sr":
        out = alternating_path(uni, r, s, m + 1)
        for i in range(m):
            out = out + alt_both(r, s, m - i).scale(nb ** i)
        return out
    if case in ("re", "se"):
        a, b = (r, s) if case == "re" else (s, r)
        out = chain(uni, (EMPTY,) + alternating_word(a, b, m))
        for i in range(m):
            out = out + mixed_path(uni, a, b, m - 1 - i).scale(nb ** i)
        return out
    raise ValueError(f"unknown case {case!r}")


def c_defect(uni: UniversalGraph, x: str, m: int | None = None) -> PathElement:
    """``(C_{(..r,s,r)_m} - C_{(..s,r,s)_m})(x)``."""
    r, s = uni.pair
    m = m if m is not None else pair_order(uni, r, s)
    ops = COperators(uni)
    u = PathElement.vertex(x)
    return ops.kl(ending_with(r, s, m), u) - ops.kl(ending_with(s, r, m), u)


def rho_defect_ending(uni: UniversalGraph, x: str, m: int | None = None) -> PathElement:
    """``((.. rho_s rho_r)_m - (.. rho_r rho_s)_m)(x)``, words ending in r and s."""
    r, s = uni.pair
    m = m if m is not None else pair_order(uni, r, s)
    op = RhoOperator(uni)
    u = PathElement.vertex(x)
    return op.word(ending_with(r, s, m), u) - op.word(ending_with(s, r, m), u)


# psi -----------------------------------------------------------------------

class Psi:
    """The homomorphism ``A[Gamma^U] -> A[target]`` attached to a pair ``(r, s)``."""

    def __init__(self, uni: UniversalGraph, target: PreDGraph):
        r, s = uni.pair
        for a in (r, s):
            if a not in target.datum.a:
                raise KeyError(f"generator {a!r} not in the target datum")
        self.uni = uni
        self.target = target
        self.classes: dict[str, list[str]] = {x: [] for x in uni.vertices}
        for y in target.vertices:
            self.classes[uni.vertex_of(target.labels[y])].append(y)
        self._edges: dict[tuple[str, str], list[Edge]] = {}
        for e in target.edges:
            key = (uni.vertex_of(target.labels[e.target]), uni.vertex_of(target.labels[e.source]))
            self._edges.setdefault(key, []).append(e)

    def class_of(self, y: str) -> str:
        return self.uni.vertex_of(self.target.labels[y])

    def vertex(self, x: str) -> PathElement:
        return element_sum(PathElement.vertex(y) for y in self.classes[x])

    def edge(self, eid: str) -> PathElement:
        e = self.uni.edge(eid)
        return element_sum(
            PathElement.of(Path(f.target, f.source, (f.id,))) for f in self._edges.get((e.target, e.source), ())
        )

    def path(self, p: Path) -> PathElement:
        if not p.edges:
            return self.vertex(p.target)
        out = self.edge(p.edges[0])
        for eid in p.edges[1:]:
            if out.is_zero():
                break
            out = mul(out, self.edge(eid))
        return out

    def element(self, u: PathElement) -> PathElement:
        return element_sum(self.path(p).scale(c) for p, c in u.items())

    __call__ = element


def psi(uni: UniversalGraph, target: PreDGraph) -> Psi:
    return Psi(uni, target)


def pushforward_generators(target: PreDGraph, r: str, s: str, gens: GeneratorSet | None = None) -> GeneratorSet:
    """``y psi(g)`` for each target vertex ``y`` and universal generator ``g`` at ``x_y``.

    ``gens`` defaults to the closed form, which needs the datum a = v, b = v^-1.
    """
    uni = universal_graph(target.datum, r, s)
    ps = Psi(uni, target)
    if gens is None:
        gens = universal_generators(uni)
    entries = []
    for y in target.vertices:
        x = ps.class_of(y)
        for ent in gens:
            body = ent.body.left_idempotent(x)
            if body.is_zero():
                continue
            img = ps.element(body).left_idempotent(y)
            if not img.is_zero():
                entries.append(GeneratorEntry(r, s, y, ent.i, img, "pushed forward"))
    return GeneratorSet.build(entries)


def pushforward_defect(target: PreDGraph, r: str, s: str, y: str) -> PathElement:
    """``y psi(defect at x_y)`` computed on the universal graph."""
    uni = universal_graph(target.datum, r, s)
    ps = Psi(uni, target)
    return ps.element(braid_defect(uni, r, s, ps.class_of(y))).left_idempotent(y)


def brute_force_universal(uni: UniversalGraph, reduce: bool = True) -> GeneratorSet:
    from .rho import j0_generators

    r, s = uni.pair
    return j0_generators(uni, pairs=[(r, s)], reduce=reduce, workers=1)

