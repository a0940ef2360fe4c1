"""Paths of a quiver and the path algebra A[Gamma] over Z[v, v^-1]."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .graph import PreDGraph
from .laurent import LaurentPoly, ONE, ZERO


@dataclass(frozen=True, order=False)
class Path:
    """``target <-e1- ... <-en- source``; edges are stored target-to-source.

    A path with no edges is the idempotent of its vertex.
    """

    target: str
    source: str
    edges: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.edges and self.target != self.source:
            raise ValueError("a length-0 path must have target == source")

    @classmethod
    def vertex(cls, x: str) -> Path:
        return cls(x, x, ())

    @classmethod
    def from_edges(cls, g: PreDGraph, edge_ids: Iterable[str]) -> Path:
        ids = tuple(edge_ids)
        if not ids:
            raise ValueError("use Path.vertex for length-0 paths")
        es = [g.edge(e) for e in ids]
        for k in range(len(es) - 1):
            if es[k].source != es[k + 1].target:
                raise ValueError(f"edges {es[k].id} and {es[k + 1].id} do not compose")
        return cls(es[0].target, es[-1].source, ids)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def sort_key(self):
        return (len(self.edges), self.edges, self.target)

    @property
    def display_key(self):
        """Longest first, then ascending edge ids; used for printing."""
        return (-len(self.edges), self.edges, self.target)

    def __lt__(self, other: Path) -> bool:
        return self.sort_key < other.sort_key

    def vertices(self, g: PreDGraph) -> list[str]:
        """Visited vertices from target to source."""
        out = [self.target]
        for e in self.edges:
            out.append(g.edge(e).source)
        return out


def concat(p: Path, q: Path) -> Path | None:
    """``p q``: follow ``q`` then ``p``; ``None`` when ``s(p) != t(q)``."""
    if p.source != q.target:
        return None
    if not p.edges:
        return q
    if not q.edges:
        return p
    return Path(p.target, q.source, p.edges + q.edges)


class PathElement:
    """Finite Z[v, v^-1]-combination of paths."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Path, LaurentPoly] | None = None):
        clean = {}
        if terms:
            for p, c in terms.items():
                c = LaurentPoly.coerce(c)
                if not c.is_zero():
                    clean[p] = c
        self._terms = clean

    @classmethod
    def of(cls, p: Path, coeff=ONE) -> PathElement:
        return cls({p: coeff})

    @classmethod
    def vertex(cls, x: str) -> PathElement:
        return cls({Path.vertex(x): ONE})

    @classmethod
    def identity(cls, g: PreDGraph) -> PathElement:
        return cls({Path.vertex(x): ONE for x in g.vertices})

    @classmethod
    def _raw(cls, terms: dict) -> PathElement:
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @property
    def terms(self) -> dict[Path, LaurentPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def paths(self) -> list[Path]:
        return sorted(self._terms)

    def coeff(self, p: Path) -> LaurentPoly:
        return self._terms.get(p, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Path, LaurentPoly]]:
        return iter(sorted(self._terms.items(), key=lambda t: t[0].sort_key))

    def is_integral(self) -> bool:
        """All coefficients are constants, i.e. the element lies in Z[Gamma]."""
        return all(c.is_constant() for c in self._terms.values())

    def __add__(self, other: PathElement) -> PathElement:
        if not isinstance(other, PathElement):
            return NotImplemented
        out = dict(self._terms)
        for p, c in other._terms.items():
            s = out.get(p)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(p, None)
            else:
                out[p] = s
        return PathElement._raw(out)

    def __neg__(self) -> PathElement:
        return PathElement._raw({p: -c for p, c in self._terms.items()})

    def __sub__(self, other: PathElement) -> PathElement:
        if not isinstance(other, PathElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> PathElement:
        c = LaurentPoly.coerce(c)
        if c.is_zero():
            return PathElement()
        return PathElement._raw({p: c * k for p, k in self._terms.items()})

    def __rmul__(self, c) -> PathElement:
        if isinstance(c, (int, LaurentPoly)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other) -> PathElement:
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, PathElement):
            return NotImplemented
        return mul(self, other)

    def __eq__(self, other) -> bool:
        if isinstance(other, PathElement):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"PathElement({format_element(self)!r})"

    def map_coefficients(self, f) -> PathElement:
        return PathElement({p: f(c) for p, c in self._terms.items()})

    def left_idempotent(self, x: str) -> PathElement:
        """``x * self``: keep terms with target ``x``."""
        return PathElement._raw({p: c for p, c in self._terms.items() if p.target == x})

    def right_idempotent(self, x: str) -> PathElement:
        """``self * x``: keep terms with source ``x``."""
        return PathElement._raw({p: c for p, c in self._terms.items() if p.source == x})

    def sources(self) -> list[str]:
        return sorted({p.source for p in self._terms})

    def targets(self) -> list[str]:
        return sorted({p.target for p in self._terms})

    def max_length(self) -> int:
        return max((len(p) for p in self._terms), default=-1)

    def min_length(self) -> int:
        return min((len(p) for p in self._terms), default=-1)


def mul(u: PathElement, w: PathElement) -> PathElement:
    """Bilinear extension of concatenation."""
    out: dict[Path, LaurentPoly] = {}
    by_target: dict[str, list] = {}
    for q, c2 in w._terms.items():
        by_target.setdefault(q.target, []).append((q, c2))
    for p, c1 in u._terms.items():
        for q, c2 in by_target.get(p.source, ()):
            pq = concat(p, q)
            prev = out.get(pq)
            val = c1 * c2 if prev is None else prev + c1 * c2
            out[pq] = val
    return PathElement(out)


def element_sum(elements: Iterable[PathElement]) -> PathElement:
    out: dict[Path, LaurentPoly] = {}
    for el in elements:
        for p, c in el._terms.items():
            prev = out.get(p)
            out[p] = c if prev is None else prev + c
    return PathElement(out)


def decompose_by_vpower(u: PathElement) -> dict[int, PathElement]:
    """Split ``u = sum_i v^i * u_i`` with each ``u_i`` in Z[Gamma]."""
    comps: dict[int, dict[Path, LaurentPoly]] = {}
    for p, c in u._terms.items():
        for i, k in c.items():
            comps.setdefault(i, {})[p] = LaurentPoly.const(k)
    return {i: PathElement(comps[i]) for i in sorted(comps)}


def reassemble(components: Mapping[int, PathElement]) -> PathElement:
    return element_sum(el.scale(LaurentPoly.monomial(i)) for i, el in components.items())


def integer_terms(u: PathElement) -> dict[Path, int]:
    if not u.is_integral():
        raise ValueError("element has non-constant coefficients")
    return {p: c.constant_value() for p, c in u._terms.items()}


def from_integer_terms(terms: Mapping[Path, int]) -> PathElement:
    return PathElement({p: LaurentPoly.const(c) for p, c in terms.items() if c})


# text syntax ---------------------------------------------------------------

def format_path(p: Path, g: PreDGraph | None = None, compressed: bool | None = None) -> str:
    """``x<-e1-y<-e2-z`` or, for graphs without parallel edges, ``x.y.z``."""
    if not p.edges:
        return p.target
    if compressed is None:
        compressed = g is not None and g.simple_edges()
    if compressed:
        if g is None:
            raise ValueError("compressed syntax needs the graph")
        return ".".join(p.vertices(g))
    parts = [p.target]
    for e in p.edges:
        parts.append(f"<-{e}-")
        parts.append(g.edge(e).source if g is not None else "?")
    return "".join(parts)


def parse_path(text: str, g: PreDGraph) -> Path:
    t = text.strip()
    if "<-" in t:
        pieces = t.split("<-")
        target = pieces[0]
        edges = []
        src = target
        for piece in pieces[1:]:
            eid, _, src = piece.rpartition("-")
            if not eid:
                raise ValueError(f"malformed path segment {piece!r}")
            edges.append(eid)
        p = Path.from_edges(g, edges)
        if p.target != target or p.source != src:
            raise ValueError(f"path {text!r} endpoints disagree with its edges")
        return p
    names = t.split(".")
    if len(names) == 1:
        if not g.has_vertex(names[0]):
            raise KeyError(f"unknown vertex {names[0]!r}")
        return Path.vertex(names[0])
    return Path.from_edges(g, [g.edge_between(a, b).id for a, b in zip(names, names[1:])])


def _coeff_text(c: LaurentPoly) -> tuple[int, str]:
    """Sign and magnitude text of a coefficient for ``a + b`` style printing."""
    if c.is_constant():
        k = c.constant_value()
        return (1 if k > 0 else -1), ("" if abs(k) == 1 else str(abs(k)))
    if len(c.terms) == 1:
        (e, k), = c.items()
        lead = LaurentPoly({e: abs(k)})
        return (1 if k > 0 else -1), str(lead)
    return 1, f"({c})"


def format_element(u: PathElement, g: PreDGraph | None = None, compressed: bool | None = None) -> str:
    """Longest paths first, e.g. ``y.z.y - y``."""
    if u.is_zero():
        return "0"
    out = []
    for k, (p, c) in enumerate(sorted(u._terms.items(), key=lambda t: t[0].display_key)):
        sign, mag = _coeff_text(c)
        body = (mag + ("*" if mag and not mag.startswith("(") else "") if mag else "") + format_path(
            p, g, compressed
        )
        if k == 0:
            out.append(body if sign > 0 else "-" + body)
        else:
            out.append((" + " if sign > 0 else " - ") + body)
    return "".join(out)


def parse_element(text: str, g: PreDGraph) -> PathElement:
    """Parse integer combinations such as ``y.z.y - y`` or ``2*x.y + z``.

    Binary operators must be surrounded by spaces, as printed by
    :func:`format_element`, because ``-`` also occurs inside arrows.
    """
    s = text.strip()
    if s == "0":
        return PathElement()
    pieces = re.split(r"\s+([+-])\s+", s)
    signs = [1] + [(-1 if op == "-" else 1) for op in pieces[1::2]]
    terms: dict[Path, int] = {}
    for sign, tok in zip(signs, pieces[0::2]):
        tok = tok.strip()
        if tok.startswith("-"):
            sign, tok = -sign, tok[1:].strip()
        coef = 1
        if "*" in tok:
            num, tok = tok.split("*", 1)
            coef = int(num)
        p = parse_path(tok, g)
        terms[p] = terms.get(p, 0) + sign * coef
    return from_integer_terms(terms)
