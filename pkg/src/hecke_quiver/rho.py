"""The endomorphisms rho_r of A[Gamma], braid defects and generators of J0.

Words are tuples of generator ids read as a composition: the word
``(r_n, ..., r_1)`` acts as ``rho_{r_n} o ... o rho_{r_1}``, so its last
letter is applied first.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coxeter import alternating_word, s2fin
from .graph import PreDGraph
from .laurent import LaurentPoly, ONE
from .pathalg import (
    Path,
    PathElement,
    concat,
    decompose_by_vpower,
    element_sum,
    format_element,
)


def _check_vertex(g: PreDGraph, x: str) -> None:
    if not g.has_vertex(x):
        raise KeyError(f"unknown vertex {x!r}")


def _check_gen(g: PreDGraph, r: str) -> None:
    if r not in g.datum.a:
        raise KeyError(f"unknown generator {r!r}")


def rho_on_vertex(g: PreDGraph, r: str, x: str) -> PathElement:
    """``(-b_r) x`` if ``r`` labels ``x``, else ``a_r x`` plus incoming edges from r-labelled vertices."""
    _check_vertex(g, x)
    _check_gen(g, r)
    if r in g.labels[x]:
        return PathElement.of(Path.vertex(x), -g.datum.b[r])
    terms = {Path.vertex(x): g.datum.a[r]}
    for e in g.in_edges(x):
        if r in g.labels[e.source]:
            p = Path(x, e.source, (e.id,))
            terms[p] = terms.get(p, LaurentPoly()) + ONE
    return PathElement(terms)


class RhoOperator:
    """Caches ``rho_r(x)`` for every vertex so words apply quickly."""

    def __init__(self, g: PreDGraph):
        self.graph = g
        self._cache: dict[tuple[str, str], list[tuple[Path, LaurentPoly]]] = {}

    def on_vertex(self, r: str, x: str) -> list[tuple[Path, LaurentPoly]]:
        key = (r, x)
        hit = self._cache.get(key)
        if hit is None:
            hit = list(rho_on_vertex(self.graph, r, x).items())
            self._cache[key] = hit
        return hit

    def apply(self, r: str, u: PathElement) -> PathElement:
        _check_gen(self.graph, r)
        out: dict[Path, LaurentPoly] = {}
        for p, c in u.items():
            for q, k in self.on_vertex(r, p.source):
                pq = concat(p, q)
                prev = out.get(pq)
                out[pq] = c * k if prev is None else prev + c * k
        return PathElement(out)

    def word(self, word: Sequence[str], u: PathElement) -> PathElement:
        for r in reversed(tuple(word)):
            u = self.apply(r, u)
        return u


def rho_apply(g: PreDGraph, r: str, u: PathElement) -> PathElement:
    """Left-module extension ``rho_r(p) = p * rho_r(s(p))``."""
    return RhoOperator(g).apply(r, u)


def rho_word(g: PreDGraph, word: Sequence[str], u: PathElement) -> PathElement:
    return RhoOperator(g).word(word, u)


def rho_word_explicit(g: PreDGraph, word: Sequence[str], x: str) -> PathElement:
    """Evaluate ``rho_word(g, word, x)`` by enumerating weighted walks.

    A walk either rests at its current vertex (a distinguished loop,
    weight ``a_r`` or ``-b_r``) or steps along an edge ``cur <- y`` with
    ``r`` absent from ``L(cur)`` and present in ``L(y)`` (weight 1).  The
    resting steps are dropped from the recorded path.
    """
    _check_vertex(g, x)
    letters = tuple(reversed(tuple(word)))  # r_1 first
    for r in letters:
        _check_gen(g, r)
    out: dict[Path, LaurentPoly] = {}

    def walk(step: int, cur: str, edges: tuple[str, ...], weight: LaurentPoly):
        if step == len(letters):
            p = Path(x, cur, edges)
            prev = out.get(p)
            out[p] = weight if prev is None else prev + weight
            return
        r = letters[step]
        if r in g.labels[cur]:
            walk(step + 1, cur, edges, weight * -g.datum.b[r])
            return
        walk(step + 1, cur, edges, weight * g.datum.a[r])
        for e in g.in_edges(cur):
            if e.source != cur and r in g.labels[e.source]:
                walk(step + 1, e.source, edges + (e.id,), weight)

    walk(0, x, (), ONE)
    return PathElement(out)


def pair_order(g: PreDGraph, r: str, s: str) -> int:
    m = g.datum.coxeter.m(r, s)
    if r == s:
        raise ValueError("braid defect needs r != s")
    if m == math.inf:
        raise ValueError(f"m({r},{s}) is infinite; no braid relation")
    return int(m)


def braid_defect(g: PreDGraph, r: str, s: str, x: str, op: RhoOperator | None = None) -> PathElement:
    """``((rho_r rho_s ...)_m - (rho_s rho_r ...)_m)(x)``."""
    m = pair_order(g, r, s)
    op = op or RhoOperator(g)
    start = PathElement.vertex(x)
    return op.word(alternating_word(r, s, m), start) - op.word(alternating_word(s, r, m), start)


# generator sets ------------------------------------------------------------

def normalize_sign(u: PathElement) -> tuple[PathElement, int]:
    """Make the coefficient of the leading printed path positive."""
    if u.is_zero():
        return u, 1
    lead = min(u.paths(), key=lambda p: p.display_key)
    c = u.coeff(lead)
    positive = c.coeff_at(c.degree()) > 0
    return (u, 1) if positive else (-u, -1)


def body_key(u: PathElement) -> tuple:
    return tuple(sorted(((p.sort_key, p.source, c.constant_value()) for p, c in u.items())))


@dataclass(frozen=True)
class GeneratorEntry:
    r: str | None
    s: str | None
    x: str | None
    i: int | None
    body: PathElement
    note: str = ""

    def sort_key(self):
        return (
            self.r or "",
            self.s or "",
            self.x or "",
            self.i if self.i is not None else 0,
            tuple(sorted(p.display_key for p in self.body.paths())),
        )

    def to_json(self, g: PreDGraph | None = None) -> dict:
        rec = {"r": self.r, "s": self.s, "x": self.x, "i": self.i, "body": format_element(self.body, g)}
        if self.note:
            rec["note"] = self.note
        return rec


@dataclass
class GeneratorSet:
    """Sign-normalized, deduplicated integer generators with provenance.

    ``provenance`` keeps every ``(r, s, x, i)`` that produced a body, even
    when later duplicates were merged into an earlier entry.
    """

    entries: list[GeneratorEntry] = field(default_factory=list)
    provenance: dict[tuple, list[tuple]] = field(default_factory=dict)

    @classmethod
    def build(cls, raw: Iterable[GeneratorEntry]) -> GeneratorSet:
        seen: dict[tuple, GeneratorEntry] = {}
        prov: dict[tuple, list[tuple]] = {}
        for ent in sorted(raw, key=lambda e: e.sort_key()):
            if ent.body.is_zero():
                continue
            if not ent.body.is_integral():
                raise ValueError("generator bodies must have integer coefficients")
            body, _ = normalize_sign(ent.body)
            key = body_key(body)
            prov.setdefault(key, []).append((ent.r, ent.s, ent.x, ent.i))
            if key not in seen:
                seen[key] = GeneratorEntry(ent.r, ent.s, ent.x, ent.i, body, ent.note)
        return cls(list(seen.values()), prov)

    def bodies(self) -> list[PathElement]:
        return [e.body for e in self.entries]

    def body_keys(self) -> set[tuple]:
        return {body_key(e.body) for e in self.entries}

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def same_bodies(self, other: GeneratorSet) -> bool:
        return self.body_keys() == other.body_keys()

    def to_jsonl(self, g: PreDGraph | None = None) -> str:
        import json

        return "".join(json.dumps(e.to_json(g), ensure_ascii=False) + "\n" for e in self.entries)

    def format_bodies(self, g: PreDGraph | None = None) -> list[str]:
        return [format_element(e.body, g) for e in self.entries]


def defect_components(
    g: PreDGraph, r: str, s: str, x: str, op: RhoOperator | None = None
) -> dict[int, PathElement]:
    return decompose_by_vpower(braid_defect(g, r, s, x, op))


def _sweep_chunk(args):
    g, tasks = args
    op = RhoOperator(g)
    out = []
    for r, s, x in tasks:
        for i, comp in defect_components(g, r, s, x, op).items():
            out.append(GeneratorEntry(r, s, x, i, comp))
    return out


def resolve_workers(workers: int | None) -> int:
    if workers is None:
        env = os.environ.get("HQ_THREADS")
        workers = int(env) if env else 1
    return max(1, int(workers))


def raw_generators(
    g: PreDGraph,
    pairs: Sequence[tuple[str, str]] | None = None,
    workers: int | None = None,
) -> list[GeneratorEntry]:
    """Every nonzero v-power component of every braid defect, unmerged."""
    pairs = list(pairs) if pairs is not None else s2fin(g.datum.coxeter)
    tasks = [(r, s, x) for (r, s) in pairs for x in g.vertices]
    workers = resolve_workers(workers)
    if workers == 1 or len(tasks) < 2:
        return _sweep_chunk((g, tasks))
    chunks = [tasks[k::workers] for k in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_sweep_chunk, [(g, c) for c in chunks if c]))
    out = [ent for part in parts for ent in part]
    return sorted(out, key=lambda e: e.sort_key())


def split_by_source(entries: Iterable[GeneratorEntry]) -> list[GeneratorEntry]:
    """Replace each body ``u`` by the pieces ``u * z`` for vertices ``z``.

    The pieces generate the same two-sided ideal since ``u`` is their sum.
    """
    out = []
    for ent in entries:
        for z in ent.body.sources():
            piece = ent.body.right_idempotent(z)
            out.append(GeneratorEntry(ent.r, ent.s, ent.x, ent.i, piece, ent.note))
    return out


def j0_generators(
    g: PreDGraph,
    pairs: Sequence[tuple[str, str]] | None = None,
    split: bool = False,
    reduce: bool = False,
    workers: int | None = None,
) -> GeneratorSet:
    """Generators of J0: v-power components of braid defects at each vertex.

    ``split`` refines every generator by source idempotent; ``reduce``
    additionally drops generators certified redundant (see
    :func:`hecke_quiver.ideal.reduce_generators`).  Both leave the generated
    ideal unchanged.
    """
    raw = raw_generators(g, pairs, workers)
    if split or reduce:
        raw = split_by_source(raw)
    gens = GeneratorSet.build(raw)
    if reduce:
        from .ideal import reduce_generator_set

        gens = reduce_generator_set(gens, g)
    return gens


def sum_elements(elements: Iterable[PathElement]) -> PathElement:
    return element_sum(elements)
