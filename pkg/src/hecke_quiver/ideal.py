"""Bounded certificates for two-sided ideals of Z[Gamma].

Ideal membership is not decided in general.  The helpers here only look for
explicit witnesses ``g = sum_k c_k p_k h_k q_k`` with ``p_k``, ``q_k`` taken
from prefixes and suffixes of the paths of ``g``; finding one proves
``g`` lies in the ideal generated by the ``h_k``.  Failing to find one
proves nothing.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import PreDGraph
from .pathalg import Path, PathElement, integer_terms, from_integer_terms, mul
from .zlinalg import hermite_basis, in_lattice


def split_by_endpoints(u: PathElement) -> list[PathElement]:
    """The Peirce pieces ``x u y``, ordered by ``(target, source)``."""
    pieces: dict[tuple[str, str], dict] = {}
    for p, c in u.items():
        pieces.setdefault((p.target, p.source), {})[p] = c
    return [PathElement(pieces[k]) for k in sorted(pieces)]


def _columns(elements: Iterable[PathElement]) -> list[Path]:
    """Union of supports, longest paths first."""
    paths = set()
    for u in elements:
        paths.update(u.paths())
    return sorted(paths, key=lambda p: p.sort_key, reverse=True)


def _vector(u: PathElement, index: dict[Path, int]) -> list[int] | None:
    vec = [0] * len(index)
    for p, c in integer_terms(u).items():
        k = index.get(p)
        if k is None:
            return None
        vec[k] = c
    return vec


def in_zspan(u: PathElement, elements: Sequence[PathElement]) -> bool:
    """Whether ``u`` is an integer combination of ``elements``."""
    if u.is_zero():
        return True
    cols = _columns(list(elements) + [u])
    index = {p: k for k, p in enumerate(cols)}
    rows = [_vector(e, index) for e in elements]
    return in_lattice(hermite_basis(rows, len(cols)), _vector(u, index))


def span_basis(elements: Sequence[PathElement]) -> list[PathElement]:
    """Hermite basis of the Z-span of ``elements``, longest paths leading."""
    cols = _columns(elements)
    if not cols:
        return []
    index = {p: k for k, p in enumerate(cols)}
    rows = [_vector(e, index) for e in elements]
    basis = hermite_basis(rows, len(cols))
    return [from_integer_terms({cols[k]: a for k, a in enumerate(row) if a}) for row in basis]


def _prefixes(g: PreDGraph, p: Path) -> list[Path]:
    """Paths ``a`` with ``p = a b`` for some ``b``, including vertices."""
    out = [Path.vertex(p.target)]
    for k in range(1, len(p.edges) + 1):
        out.append(Path.from_edges(g, p.edges[:k]))
    return out


def _suffixes(g: PreDGraph, p: Path) -> list[Path]:
    out = [Path.vertex(p.source)]
    for k in range(len(p.edges)):
        out.append(Path.from_edges(g, p.edges[k:]))
    return out


def ideal_candidates(g: PreDGraph, u: PathElement, gens: Sequence[PathElement]) -> list[PathElement]:
    """Products ``a h b`` with ``a`` a prefix and ``b`` a suffix of a path of ``u``.

    Only products sharing at least one path with ``u`` are kept.
    """
    support = set(u.paths())
    prefixes = {a for p in support for a in _prefixes(g, p)}
    suffixes = {b for p in support for b in _suffixes(g, p)}
    pre_by_source: dict[str, list[Path]] = {}
    for a in prefixes:
        pre_by_source.setdefault(a.source, []).append(a)
    suf_by_target: dict[str, list[Path]] = {}
    for b in suffixes:
        suf_by_target.setdefault(b.target, []).append(b)
    out = []
    seen = set()
    for h in gens:
        for piece in split_by_endpoints(h):
            t, s = next(iter(piece.paths())).target, next(iter(piece.paths())).source
            for a in sorted(pre_by_source.get(t, ()), key=lambda p: p.sort_key):
                left = mul(PathElement.of(a), piece)
                for b in sorted(suf_by_target.get(s, ()), key=lambda p: p.sort_key):
                    prod = mul(left, PathElement.of(b))
                    if prod.is_zero() or not support.intersection(prod.paths()):
                        continue
                    if prod not in seen:
                        seen.add(prod)
                        out.append(prod)
    return out


def certify_in_ideal(g: PreDGraph, u: PathElement, gens: Sequence[PathElement]) -> bool:
    """True only if a bounded witness shows ``u`` in the ideal of ``gens``."""
    if u.is_zero():
        return True
    cands = ideal_candidates(g, u, gens)
    return bool(cands) and in_zspan(u, cands)


def reduce_generators(g: PreDGraph, gens: Sequence[PathElement]) -> list[PathElement]:
    """Shrink a generating family without changing the ideal it generates.

    Each element is first cut into Peirce pieces and each endpoint class is
    replaced by a Hermite basis of its Z-span.  Then elements are dropped,
    longest first, whenever the rest certifiably generate them.
    """
    classes: dict[tuple[str, str], list[PathElement]] = {}
    for u in gens:
        for piece in split_by_endpoints(u):
            p = piece.paths()[0]
            classes.setdefault((p.target, p.source), []).append(piece)
    pool: list[PathElement] = []
    for key in sorted(classes):
        pool.extend(span_basis(classes[key]))
    order = sorted(
        range(len(pool)),
        key=lambda k: (pool[k].max_length(), len(pool[k]), _columns([pool[k]])[0].sort_key),
        reverse=True,
    )
    alive = set(range(len(pool)))
    for k in order:
        rest = [pool[j] for j in sorted(alive) if j != k]
        if rest and certify_in_ideal(g, pool[k], rest):
            alive.discard(k)
    return [pool[j] for j in sorted(alive)]


def ideals_agree(g: PreDGraph, first: Sequence[PathElement], second: Sequence[PathElement]) -> bool:
    """Mutual containment, each element certified against the other family."""
    return all(certify_in_ideal(g, u, second) for u in first) and all(
        certify_in_ideal(g, u, first) for u in second
    )


def reduce_generator_set(gens, g: PreDGraph):
    """:func:`reduce_generators` on a :class:`~hecke_quiver.rho.GeneratorSet`.

    Surviving bodies keep the provenance of the first raw generator they
    share a Peirce class with.
    """
    from .rho import GeneratorEntry, GeneratorSet

    kept = reduce_generators(g, gens.bodies())
    owners = {}
    for ent in gens:
        for piece in split_by_endpoints(ent.body):
            p = piece.paths()[0]
            owners.setdefault((p.target, p.source), ent)
    out = []
    for body in kept:
        p = body.paths()[0]
        ent = owners[(p.target, p.source)]
        out.append(GeneratorEntry(ent.r, ent.s, ent.x, ent.i, body, "reduced"))
    return GeneratorSet.build(out)
