"""Finite quivers carrying pre-D-graph and D-graph structure.

Edge orientation follows the convention ``target <-e- source``: an edge is
written ``x <- y`` with source ``y`` and target ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Sequence

import networkx as nx

from .coxeter import HeckeDatum, datum_from_json
from .laurent import LaurentPoly, ZERO, parse as parse_poly

DUAL_SUFFIX = "^d"


class GraphError(ValueError):
    """Raised for malformed graph data (schema violations)."""


@dataclass(frozen=True)
class Edge:
    id: str
    target: str
    source: str


def dual_name(name: str) -> str:
    """``x -> x^d``, collapsing ``(x^d)^d`` back to ``x``."""
    if name.endswith(DUAL_SUFFIX):
        return name[: -len(DUAL_SUFFIX)]
    return name + DUAL_SUFFIX


@dataclass(frozen=True, eq=False)
class PreDGraph:
    """A finite quiver with vertex labels ``L(x)`` drawn from ``S``."""

    datum: HeckeDatum
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    labels: Mapping[str, frozenset[str]]
    _edge_index: dict = field(init=False, repr=False)
    _in_edges: dict = field(init=False, repr=False)

    def __post_init__(self):
        verts = tuple(self.vertices)
        edges = tuple(self.edges)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)
        if len(set(verts)) != len(verts):
            raise GraphError("duplicate vertex ids")
        vset = set(verts)
        index = {}
        for e in edges:
            if e.id in index:
                raise GraphError(f"duplicate edge id {e.id!r}")
            for end in (e.target, e.source):
                if end not in vset:
                    raise GraphError(f"edge {e.id!r} uses undeclared vertex {end!r}")
            index[e.id] = e
        gens = set(self.datum.generators)
        labels = {}
        for x in verts:
            lab = frozenset(self.labels.get(x, ()))
            if not lab <= gens:
                raise GraphError(f"label of {x!r} uses unknown generators {sorted(lab - gens)}")
            labels[x] = lab
        extra = set(self.labels) - vset
        if extra:
            raise GraphError(f"labels given for undeclared vertices {sorted(extra)}")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_edge_index", index)
        into: dict[str, list[Edge]] = {x: [] for x in verts}
        for e in edges:
            into[e.target].append(e)
        object.__setattr__(self, "_in_edges", into)

    # finite data is always dualizable; kept for fidelity with the definition
    @property
    def dualizable(self) -> bool:
        return True

    @property
    def generators(self) -> tuple[str, ...]:
        return self.datum.generators

    def edge(self, eid: str) -> Edge:
        try:
            return self._edge_index[eid]
        except KeyError:
            raise KeyError(f"unknown edge {eid!r}") from None

    def in_edges(self, x: str) -> list[Edge]:
        """Edges ``x <- y`` ending at ``x``."""
        try:
            return self._in_edges[x]
        except KeyError:
            raise KeyError(f"unknown vertex {x!r}") from None

    def has_vertex(self, x: str) -> bool:
        return x in self._in_edges

    def label(self, x: str) -> frozenset[str]:
        return self.labels[x]

    def simple_edges(self) -> bool:
        """At most one edge per ordered vertex pair (compressed path syntax applies)."""
        seen = set()
        for e in self.edges:
            key = (e.target, e.source)
            if key in seen:
                return False
            seen.add(key)
        return True

    def edge_between(self, target: str, source: str) -> Edge:
        found = [e for e in self.in_edges(target) if e.source == source]
        if len(found) != 1:
            raise KeyError(f"expected one edge {target}<-{source}, found {len(found)}")
        return found[0]

    def to_networkx(self, mu_nonzero_only: bool = False) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph()
        g.add_nodes_from(self.vertices)
        for e in self.edges:
            if mu_nonzero_only and self.mu_of(e.id).is_zero():
                continue
            g.add_edge(e.source, e.target, key=e.id)
        return g

    def mu_of(self, eid: str) -> LaurentPoly:
        raise TypeError("pre-D-graph carries no edge weights")

    def with_datum(self, datum: HeckeDatum) -> PreDGraph:
        return PreDGraph(datum, self.vertices, self.edges, self.labels)

    def to_json(self) -> dict:
        return {
            "coxeter": self.datum.to_json(),
            "vertices": [
                {"id": x, "labels": [r for r in self.generators if r in self.labels[x]]}
                for x in self.vertices
            ],
            "edges": [{"id": e.id, "target": e.target, "source": e.source} for e in self.edges],
        }


@dataclass(frozen=True, eq=False)
class DGraph(PreDGraph):
    """A pre-D-graph with edge weights ``mu``.

    Whether the braid axiom holds is decided by :func:`reps.check_dgraph`,
    not enforced here.
    """

    mu: Mapping[str, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        super().__post_init__()
        mu = {}
        for e in self.edges:
            if e.id not in self.mu:
                raise GraphError(f"edge {e.id!r} has no weight mu")
            mu[e.id] = LaurentPoly.coerce(self.mu[e.id])
        extra = set(self.mu) - set(mu)
        if extra:
            raise GraphError(f"weights given for unknown edges {sorted(extra)}")
        object.__setattr__(self, "mu", mu)

    def mu_of(self, eid: str) -> LaurentPoly:
        return self.mu[eid]

    def with_datum(self, datum: HeckeDatum) -> DGraph:
        return DGraph(datum, self.vertices, self.edges, self.labels, self.mu)

    def with_mu(self, mu: Mapping[str, Any]) -> DGraph:
        return DGraph(self.datum, self.vertices, self.edges, self.labels, dict(mu))

    def pre(self) -> PreDGraph:
        return PreDGraph(self.datum, self.vertices, self.edges, self.labels)

    def to_json(self) -> dict:
        out = super().to_json()
        for rec in out["edges"]:
            rec["mu"] = str(self.mu[rec["id"]])
        out["weighted"] = True
        return out


def is_weighted(g: PreDGraph) -> bool:
    return isinstance(g, DGraph)


def dual_graph(g: PreDGraph) -> PreDGraph:
    """Reverse edges, complement labels and swap the datum to ``(-b, -a)``."""
    gens = frozenset(g.generators)
    verts = tuple(dual_name(x) for x in g.vertices)
    edges = tuple(Edge(dual_name(e.id), dual_name(e.source), dual_name(e.target)) for e in g.edges)
    labels = {dual_name(x): gens - g.labels[x] for x in g.vertices}
    datum = g.datum.dual()
    if isinstance(g, DGraph):
        mu = {dual_name(e.id): g.mu[e.id] for e in g.edges}
        return DGraph(datum, verts, edges, labels, mu)
    return PreDGraph(datum, verts, edges, labels)


def reduced_graph(g: DGraph) -> DGraph:
    keep = tuple(e for e in g.edges if not g.mu[e.id].is_zero())
    return DGraph(g.datum, g.vertices, keep, g.labels, {e.id: g.mu[e.id] for e in keep})


def import_kl_wgraph(
    datum: HeckeDatum,
    vertices: Mapping[str, Iterable[str]] | Sequence[tuple[str, Iterable[str]]],
    edges: Iterable[tuple[str, str, int]],
) -> DGraph:
    """Double each undirected weighted edge ``{x, y}`` into ``x <- y`` and ``y <- x``."""
    items = list(vertices.items()) if isinstance(vertices, Mapping) else list(vertices)
    names = tuple(x for x, _ in items)
    labels = {x: frozenset(lab) for x, lab in items}
    directed = []
    mu = {}
    for x, y, w in edges:
        w = LaurentPoly.coerce(w)
        if w.is_zero():
            raise GraphError(f"W-graph edge {{{x},{y}}} has zero weight")
        for t, s in ((x, y), (y, x)):
            eid = f"{t}:{s}"
            directed.append(Edge(eid, t, s))
            mu[eid] = w
    return DGraph(datum, names, tuple(directed), labels, mu)


def is_connected(g: PreDGraph) -> bool:
    """Strong connectivity using only edges with nonzero weight."""
    if not g.vertices:
        return True
    weighted = isinstance(g, DGraph)
    return nx.is_strongly_connected(g.to_networkx(mu_nonzero_only=weighted))


def check_isomorphism(
    g: PreDGraph,
    h: PreDGraph,
    vmap: Mapping[str, str],
    emap: Mapping[str, str],
) -> list[str]:
    """Verify that ``(vmap, emap)`` is an isomorphism of (pre-)D-graphs.

    Returns a list of problems; empty means the maps are an isomorphism.
    """
    problems = []
    if sorted(vmap) != sorted(g.vertices) or sorted(vmap.values()) != sorted(h.vertices):
        problems.append("vertex map is not a bijection")
    if sorted(emap) != sorted(e.id for e in g.edges) or sorted(emap.values()) != sorted(
        e.id for e in h.edges
    ):
        problems.append("edge map is not a bijection")
    if problems:
        return problems
    for e in g.edges:
        f = h.edge(emap[e.id])
        if vmap[e.source] != f.source or vmap[e.target] != f.target:
            problems.append(f"edge {e.id} endpoints not preserved")
        if isinstance(g, DGraph) and isinstance(h, DGraph) and g.mu[e.id] != h.mu[f.id]:
            problems.append(f"edge {e.id} weight not preserved")
    for x in g.vertices:
        if g.labels[x] != h.labels[vmap[x]]:
            problems.append(f"label of {x} not preserved")
    return problems


def relabel(g: PreDGraph, vmap: Mapping[str, str], emap: Mapping[str, str]) -> PreDGraph:
    verts = tuple(vmap[x] for x in g.vertices)
    edges = tuple(Edge(emap[e.id], vmap[e.target], vmap[e.source]) for e in g.edges)
    labels = {vmap[x]: g.labels[x] for x in g.vertices}
    if isinstance(g, DGraph):
        return DGraph(g.datum, verts, edges, labels, {emap[e.id]: g.mu[e.id] for e in g.edges})
    return PreDGraph(g.datum, verts, edges, labels)


# JSON ----------------------------------------------------------------------

def graph_from_json(obj: Mapping[str, Any]) -> PreDGraph:
    """Read the graph file format.

    ``edges`` hold directed records ``{id, target, source, mu?}``; a
    ``wgraph_edges`` list of ``{ends: [x, y], mu}`` is imported as a
    Kazhdan-Lusztig W-graph instead.  Weights present on every edge (or
    ``"weighted": true``) make the result a :class:`DGraph`.
    """
    if not isinstance(obj, Mapping):
        raise GraphError("graph file must be a JSON object")
    if "coxeter" not in obj:
        raise GraphError("graph file missing 'coxeter'")
    try:
        datum = datum_from_json(obj["coxeter"])
    except (ValueError, TypeError) as exc:
        raise GraphError(f"bad coxeter datum: {exc}") from None
    verts = []
    for rec in obj.get("vertices", []):
        if "id" not in rec:
            raise GraphError("vertex record missing 'id'")
        verts.append((str(rec["id"]), frozenset(str(r) for r in rec.get("labels", []))))
    if "wgraph_edges" in obj:
        if obj.get("edges"):
            raise GraphError("give either 'edges' or 'wgraph_edges', not both")
        und = []
        for rec in obj["wgraph_edges"]:
            ends = rec.get("ends")
            if not ends or len(ends) != 2:
                raise GraphError("wgraph edge needs two 'ends'")
            und.append((str(ends[0]), str(ends[1]), parse_poly(str(rec.get("mu", "1")))))
        return import_kl_wgraph(datum, verts, und)
    edges = []
    mus = {}
    for k, rec in enumerate(obj.get("edges", [])):
        for key in ("target", "source"):
            if key not in rec:
                raise GraphError(f"edge record {k} missing {key!r}")
        eid = str(rec.get("id", f"{rec['target']}:{rec['source']}"))
        edges.append(Edge(eid, str(rec["target"]), str(rec["source"])))
        if "mu" in rec:
            mus[eid] = parse_poly(str(rec["mu"]))
    weighted = obj.get("weighted")
    if mus and len(mus) != len(edges):
        raise GraphError("either every edge carries 'mu' or none does")
    if weighted is None:
        weighted = bool(mus)
    labels = dict(verts)
    names = tuple(x for x, _ in verts)
    if weighted:
        if len(mus) != len(edges):
            raise GraphError("'weighted' graph needs 'mu' on every edge")
        return DGraph(datum, names, tuple(edges), labels, mus)
    return PreDGraph(datum, names, tuple(edges), labels)
