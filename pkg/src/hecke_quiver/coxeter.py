"""Coxeter matrices, Hecke datums and dihedral words."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

import networkx as nx

from .laurent import LaurentPoly, V, V_INV, parse as parse_poly

INF = math.inf


def _order(entry: Any) -> float:
    if isinstance(entry, str):
        if entry.strip().lower() in ("inf", "infinity", "∞"):
            return INF
        entry = int(entry)
    if entry == INF:
        return INF
    if isinstance(entry, float) and not entry.is_integer():
        raise ValueError(f"non-integer Coxeter order {entry!r}")
    return int(entry)


@dataclass(frozen=True)
class CoxeterDatum:
    """Generators ``S`` and the Coxeter matrix ``m[r][s]``."""

    generators: tuple[str, ...]
    matrix: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        mat = tuple(tuple(_order(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", mat)
        n = len(gens)
        if len(set(gens)) != n:
            raise ValueError("duplicate generator ids")
        if len(mat) != n or any(len(row) != n for row in mat):
            raise ValueError("Coxeter matrix must be square of size |S|")
        for i in range(n):
            if mat[i][i] != 1:
                raise ValueError(f"m({gens[i]},{gens[i]}) must be 1")
            for j in range(n):
                if mat[i][j] != mat[j][i]:
                    raise ValueError(f"Coxeter matrix not symmetric at ({gens[i]},{gens[j]})")
                if i != j and mat[i][j] < 2:
                    raise ValueError(f"m({gens[i]},{gens[j]}) must be >= 2")

    @classmethod
    def from_orders(cls, generators: Sequence[str], orders: Mapping[tuple[str, str], Any]) -> CoxeterDatum:
        """Build from off-diagonal orders; unspecified pairs default to 2."""
        gens = tuple(generators)
        idx = {g: k for k, g in enumerate(gens)}
        mat = [[1 if i == j else 2 for j in range(len(gens))] for i in range(len(gens))]
        for (r, s), m in orders.items():
            mat[idx[r]][idx[s]] = mat[idx[s]][idx[r]] = _order(m)
        return cls(gens, tuple(tuple(row) for row in mat))

    def index(self, r: str) -> int:
        try:
            return self.generators.index(r)
        except ValueError:
            raise KeyError(f"unknown generator {r!r}") from None

    def m(self, r: str, s: str) -> float:
        return self.matrix[self.index(r)][self.index(s)]

    def restrict(self, gens: Sequence[str]) -> CoxeterDatum:
        return CoxeterDatum(tuple(gens), tuple(tuple(self.m(r, s) for s in gens) for r in gens))

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "matrix": [["inf" if x == INF else int(x) for x in row] for row in self.matrix],
        }


def s2fin(d: CoxeterDatum) -> list[tuple[str, str]]:
    """Ordered pairs ``(r, s)`` with ``r != s`` and ``m(r, s)`` finite."""
    return [
        (r, s)
        for r in d.generators
        for s in d.generators
        if r != s and d.m(r, s) != INF
    ]


def odd_graph(d: CoxeterDatum) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(d.generators)
    for i, r in enumerate(d.generators):
        for s in d.generators[i + 1:]:
            m = d.m(r, s)
            if m != INF and m % 2 == 1:
                g.add_edge(r, s)
    return g


def conjugacy_classes(d: CoxeterDatum) -> list[frozenset[str]]:
    """Simple reflections are conjugate iff joined by a path of odd edges."""
    comps = [frozenset(c) for c in nx.connected_components(odd_graph(d))]
    order = {g: k for k, g in enumerate(d.generators)}
    return sorted(comps, key=lambda c: min(order[g] for g in c))


@dataclass(frozen=True)
class HeckeDatum:
    coxeter: CoxeterDatum
    a: Mapping[str, LaurentPoly] = field(default_factory=dict)
    b: Mapping[str, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        gens = self.coxeter.generators
        a = {r: LaurentPoly.coerce(self.a.get(r, V)) for r in gens}
        b = {r: LaurentPoly.coerce(self.b.get(r, V_INV)) for r in gens}
        extra = (set(self.a) | set(self.b)) - set(gens)
        if extra:
            raise ValueError(f"parameters given for unknown generators {sorted(extra)}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __hash__(self):
        return hash((self.coxeter, tuple(self.a.items()), tuple(self.b.items())))

    @property
    def generators(self) -> tuple[str, ...]:
        return self.coxeter.generators

    def is_dz(self) -> bool:
        """True for the equal-parameter datum a_r = v, b_r = v^-1."""
        return all(self.a[r] == V and self.b[r] == V_INV for r in self.generators)

    def dual(self) -> HeckeDatum:
        """The datum with ``(a, b)`` replaced by ``(-b, -a)``."""
        return HeckeDatum(
            self.coxeter,
            {r: -self.b[r] for r in self.generators},
            {r: -self.a[r] for r in self.generators},
        )

    def specialize(self, f) -> HeckeDatum:
        return HeckeDatum(
            self.coxeter,
            {r: f(p) for r, p in self.a.items()},
            {r: f(p) for r, p in self.b.items()},
        )

    def restrict(self, gens: Sequence[str]) -> HeckeDatum:
        return HeckeDatum(
            self.coxeter.restrict(gens),
            {r: self.a[r] for r in gens},
            {r: self.b[r] for r in gens},
        )

    def to_json(self) -> dict:
        out = self.coxeter.to_json()
        params = {}
        for name, fam in (("a", self.a), ("b", self.b)):
            values = set(fam.values())
            if len(values) == 1:
                params[name] = {"default": str(next(iter(values)))}
            else:
                params[name] = {r: str(p) for r, p in fam.items()}
        out["params"] = params
        return out


def dz_datum(coxeter: CoxeterDatum) -> HeckeDatum:
    return HeckeDatum(coxeter)


@dataclass
class ValidationReport:
    passed: bool
    violations: list[dict] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed


def validate_hecke_datum(h: HeckeDatum) -> ValidationReport:
    """Parameters must agree on each conjugacy class of simple reflections."""
    violations = []
    for cls in conjugacy_classes(h.coxeter):
        members = [g for g in h.generators if g in cls]
        for r in members:
            for s in members:
                if h.generators.index(r) >= h.generators.index(s):
                    continue
                for name, fam in (("a", h.a), ("b", h.b)):
                    if fam[r] != fam[s]:
                        violations.append(
                            {"pair": [r, s], "param": name, "values": [str(fam[r]), str(fam[s])]}
                        )
    return ValidationReport(not violations, violations)


def alternating_word(r: str, s: str, m: int) -> tuple[str, ...]:
    if r == s:
        raise ValueError("alternating word needs two distinct generators")
    if m < 0:
        raise ValueError("length must be non-negative")
    return tuple(r if k % 2 == 0 else s for k in range(m))


# JSON ----------------------------------------------------------------------

def datum_from_json(obj: Mapping[str, Any]) -> HeckeDatum:
    try:
        gens = obj["generators"]
        matrix = obj["matrix"]
    except KeyError as exc:
        raise ValueError(f"coxeter datum missing key {exc.args[0]!r}") from None
    cox = CoxeterDatum(tuple(str(g) for g in gens), tuple(tuple(row) for row in matrix))
    params = obj.get("params") or {}
    fams = {}
    for name, default in (("a", "v"), ("b", "v^-1")):
        spec = params.get(name) or {}
        base = parse_poly(str(spec.get("default", default)))
        fam = {r: base for r in cox.generators}
        for key, val in spec.items():
            if key == "default":
                continue
            if key not in cox.generators:
                raise ValueError(f"parameter {name} given for unknown generator {key!r}")
            fam[key] = parse_poly(str(val))
        fams[name] = fam
    return HeckeDatum(cox, fams["a"], fams["b"])
