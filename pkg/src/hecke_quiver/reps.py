"""The W-graph representation tau on the free module with basis the vertices."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .coxeter import alternating_word, s2fin
from .graph import DGraph, dual_graph, dual_name
from .laurent import LaurentPoly, ONE, ZERO


class FreeModuleElement:
    """Finite A-combination of vertices."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[str, LaurentPoly] | None = None):
        self._terms = {}
        for x, c in (terms or {}).items():
            c = LaurentPoly.coerce(c)
            if not c.is_zero():
                self._terms[x] = c

    @classmethod
    def basis(cls, x: str) -> FreeModuleElement:
        return cls({x: ONE})

    def coeff(self, x: str) -> LaurentPoly:
        return self._terms.get(x, ZERO)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: FreeModuleElement) -> FreeModuleElement:
        out = dict(self._terms)
        for x, c in other._terms.items():
            out[x] = out.get(x, ZERO) + c
        return FreeModuleElement(out)

    def __neg__(self) -> FreeModuleElement:
        return FreeModuleElement({x: -c for x, c in self._terms.items()})

    def __sub__(self, other: FreeModuleElement) -> FreeModuleElement:
        return self + (-other)

    def scale(self, c) -> FreeModuleElement:
        c = LaurentPoly.coerce(c)
        return FreeModuleElement({x: c * k for x, k in self._terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeModuleElement) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*{x}" for x, c in sorted(self._terms.items()))
        return f"FreeModuleElement({body or '0'})"


@dataclass
class RepMatrix:
    """Dense square matrix over A indexed by an ordered vertex list.

    ``rows[i][j]`` is the coefficient of ``index[i]`` in the image of
    ``index[j]``, so columns are images of basis vectors.
    """

    index: tuple[str, ...]
    rows: list[list[LaurentPoly]] = field(repr=False)

    @classmethod
    def zero(cls, index: Sequence[str]) -> RepMatrix:
        n = len(index)
        return cls(tuple(index), [[ZERO] * n for _ in range(n)])

    @classmethod
    def identity(cls, index: Sequence[str]) -> RepMatrix:
        out = cls.zero(index)
        for k in range(len(index)):
            out.rows[k][k] = ONE
        return out

    def _pos(self) -> dict[str, int]:
        return {x: k for k, x in enumerate(self.index)}

    def entry(self, target: str, source: str) -> LaurentPoly:
        pos = self._pos()
        return self.rows[pos[target]][pos[source]]

    def column(self, x: str) -> FreeModuleElement:
        j = self._pos()[x]
        return FreeModuleElement({y: self.rows[i][j] for i, y in enumerate(self.index)})

    def apply(self, u: FreeModuleElement) -> FreeModuleElement:
        out = FreeModuleElement()
        for x, c in u.items():
            out = out + self.column(x).scale(c)
        return out

    def _check(self, other: RepMatrix) -> None:
        if self.index != other.index:
            raise ValueError("matrices are indexed by different vertex lists")

    def __add__(self, other: RepMatrix) -> RepMatrix:
        self._check(other)
        n = len(self.index)
        return RepMatrix(self.index, [[self.rows[i][j] + other.rows[i][j] for j in range(n)] for i in range(n)])

    def __neg__(self) -> RepMatrix:
        return RepMatrix(self.index, [[-a for a in row] for row in self.rows])

    def __sub__(self, other: RepMatrix) -> RepMatrix:
        return self + (-other)

    def scale(self, c) -> RepMatrix:
        c = LaurentPoly.coerce(c)
        return RepMatrix(self.index, [[c * a for a in row] for row in self.rows])

    def __matmul__(self, other: RepMatrix) -> RepMatrix:
        self._check(other)
        n = len(self.index)
        out = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            row = self.rows[i]
            for k in range(n):
                a = row[k]
                if a.is_zero():
                    continue
                orow = other.rows[k]
                for j in range(n):
                    if not orow[j].is_zero():
                        out[i][j] = out[i][j] + a * orow[j]
        return RepMatrix(self.index, out)

    def transpose(self) -> RepMatrix:
        n = len(self.index)
        return RepMatrix(self.index, [[self.rows[j][i] for j in range(n)] for i in range(n)])

    def renamed(self, f) -> RepMatrix:
        return RepMatrix(tuple(f(x) for x in self.index), [list(row) for row in self.rows])

    def is_zero(self) -> bool:
        return all(a.is_zero() for row in self.rows for a in row)

    def nonzero_columns(self) -> list[str]:
        return [x for j, x in enumerate(self.index) if any(not row[j].is_zero() for row in self.rows)]

    def __eq__(self, other) -> bool:
        return isinstance(other, RepMatrix) and self.index == other.index and self.rows == other.rows

    def to_json(self) -> list[list[str]]:
        return [[str(a) for a in row] for row in self.rows]


def tau_matrix(g: DGraph, r: str) -> RepMatrix:
    """Column ``x``: ``-b_r x`` if ``r`` labels ``x``, else ``a_r x + sum mu(e) y`` over ``x <-e- y`` with ``r`` labelling ``y``."""
    if r not in g.datum.a:
        raise KeyError(f"unknown generator {r!r}")
    mat = RepMatrix.zero(g.vertices)
    pos = {x: k for k, x in enumerate(g.vertices)}
    for x in g.vertices:
        j = pos[x]
        if r in g.labels[x]:
            mat.rows[j][j] = -g.datum.b[r]
            continue
        mat.rows[j][j] = g.datum.a[r]
        for e in g.in_edges(x):
            if r in g.labels[e.source]:
                i = pos[e.source]
                mat.rows[i][j] = mat.rows[i][j] + g.mu_of(e.id)
    return mat


def tau_word(g: DGraph, word: Sequence[str]) -> RepMatrix:
    """``tau_{w_0} ... tau_{w_{n-1}}``; the last letter acts first."""
    out = RepMatrix.identity(g.vertices)
    for r in word:
        out = out @ tau_matrix(g, r)
    return out


def tau_dual_matrix(g: DGraph, r: str) -> RepMatrix:
    """``tau^d_r`` built on the dual graph with the datum ``(-b, -a)``."""
    return tau_matrix(dual_graph(g), r)


@dataclass
class DGraphReport:
    passed: bool
    failures: list[dict] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        return {"pass": self.passed, "witnesses": self.failures}


def quadratic_defect(g: DGraph, r: str) -> RepMatrix:
    """``(tau_r - a_r)(tau_r + b_r)``."""
    t = tau_matrix(g, r)
    one = RepMatrix.identity(g.vertices)
    return (t - one.scale(g.datum.a[r])) @ (t + one.scale(g.datum.b[r]))


def braid_matrix_defect(g: DGraph, r: str, s: str) -> RepMatrix:
    m = g.datum.coxeter.m(r, s)
    m = int(m)
    return tau_word(g, alternating_word(r, s, m)) - tau_word(g, alternating_word(s, r, m))


def check_dgraph(g: DGraph) -> DGraphReport:
    """Exact check of the quadratic and braid relations for ``tau``.

    Each failure names the relation and the vertex columns where it breaks.
    """
    failures = []
    for r in g.generators:
        bad = quadratic_defect(g, r).nonzero_columns()
        if bad:
            failures.append({"relation": "quadratic", "r": r, "columns": bad})
    for r, s in s2fin(g.datum.coxeter):
        if g.generators.index(r) > g.generators.index(s):
            continue
        d = braid_matrix_defect(g, r, s)
        bad = d.nonzero_columns()
        if bad:
            x = bad[0]
            col = d.column(x)
            failures.append(
                {
                    "relation": "braid",
                    "pair": [r, s],
                    "columns": bad,
                    "witness": {"column": x, "entries": {y: str(c) for y, c in sorted(col.items())}},
                }
            )
    return DGraphReport(not failures, failures)

