"""Exact Laurent polynomials in a single variable ``v`` over the integers.

Elements are stored sparsely as ``{exponent: coefficient}`` with zero
coefficients stripped, so structural equality is ring equality.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

IntLike = Union[int, "LaurentPoly"]

_TERM_RE = re.compile(
    r"""
    \s*(?P<sign>[+-])?\s*
    (?:
        (?P<coef>\d+)?\s*\*?\s*v(?:\s*\^\s*(?P<exp>[+-]?\d+))?
      | (?P<const>\d+)
    )\s*
    """,
    re.VERBOSE,
)


class LaurentPoly:
    """An element of Z[v, v^-1].

    >>> beta = LaurentPoly({1: 1, -1: 1})
    >>> str(beta * beta)
    'v^2 + 2 + v^-2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = int(c)
        self._terms = clean
        self._hash = None

    # construction helpers -------------------------------------------------
    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, x: IntLike) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        if isinstance(x, str):
            return parse(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # accessors ------------------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff_at(self, i: int) -> int:
        return self._terms.get(i, 0)

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == 0 for e in self._terms)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(0, 0)

    def degree(self) -> int | None:
        return max(self._terms) if self._terms else None

    def valuation(self) -> int | None:
        return min(self._terms) if self._terms else None

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: IntLike) -> LaurentPoly:
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: IntLike) -> LaurentPoly:
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: IntLike) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: IntLike) -> LaurentPoly:
        other = _coerce_or_none(other)
        if other is None:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only units can be raised to negative powers")
            (e, c), = self._terms.items()
            k = -n
            return LaurentPoly({-e * k: c**k})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def bar(self) -> LaurentPoly:
        """The involution v -> v^-1."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def specialize(self, f: Specialization) -> LaurentPoly:
        return f(self)

    # comparison / hashing -------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def _coerce_or_none(x) -> LaurentPoly | None:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    return None


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
V = LaurentPoly.monomial(1)
V_INV = LaurentPoly.monomial(-1)
BETA = V + V_INV


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def coeff_at(p: LaurentPoly, i: int) -> int:
    return p.coeff_at(i)


def lsum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out: dict[int, int] = {}
    for p in polys:
        for e, c in p.items():
            out[e] = out.get(e, 0) + c
    return LaurentPoly(out)


# text syntax ---------------------------------------------------------------

def _format_term(e: int, c: int, first: bool) -> str:
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if e == 0:
        body = str(a)
    else:
        mono = "v" if e == 1 else f"v^{e}"
        body = mono if a == 1 else f"{a}{mono}"
    if first:
        return body if sign == "+" else "-" + body
    return f" {sign} {body}"


def format_poly(p: LaurentPoly) -> str:
    """Render with exponents descending, e.g. ``v^2 + 2 + v^-2``."""
    if p.is_zero():
        return "0"
    parts = []
    for k, e in enumerate(sorted(p._terms, reverse=True)):
        parts.append(_format_term(e, p._terms[e], k == 0))
    return "".join(parts)


def parse(text: str) -> LaurentPoly:
    """Parse the textual syntax produced by :func:`format_poly`.

    Accepts terms such as ``v^2``, ``-3v^-1``, ``2*v``, ``1`` joined by
    ``+``/``-``.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial string")
    pos = 0
    out: dict[int, int] = {}
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse Laurent polynomial {text!r} at {pos}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing operator in {text!r} at {pos}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("const") is not None:
            e, c = 0, int(m.group("const"))
        else:
            c = int(m.group("coef")) if m.group("coef") else 1
            e = int(m.group("exp")) if m.group("exp") is not None else 1
        out[e] = out.get(e, 0) + sign * c
        pos = m.end()
        first = False
    return LaurentPoly(out)


# specializations -----------------------------------------------------------

class Specialization:
    """Ring endomorphism of Z[v, v^-1] fixed by ``v -> sign * v^power``.

    Only units are valid images of ``v``; anything else would not extend to
    ``v^-1``.
    """

    __slots__ = ("sign", "power")

    def __init__(self, sign: int = 1, power: int = 1):
        if sign not in (1, -1):
            raise ValueError("image of v must be a unit (+-v^k)")
        self.sign = sign
        self.power = power

    @classmethod
    def from_image(cls, image: IntLike) -> Specialization:
        img = LaurentPoly.coerce(image)
        if len(img._terms) != 1:
            raise ValueError(f"image {img} of v is not a unit of Z[v, v^-1]")
        (e, c), = img._terms.items()
        if c not in (1, -1):
            raise ValueError(f"image {img} of v is not a unit of Z[v, v^-1]")
        return cls(c, e)

    @classmethod
    def parse(cls, text: str) -> Specialization:
        """Parse ``v->1``, ``v->v^-1`` or just the image ``-v``."""
        t = text.replace(" ", "")
        for arrow in ("->", "=", "↦"):
            if arrow in t:
                lhs, t = t.split(arrow, 1)
                if lhs != "v":
                    raise ValueError(f"specialization must map v, got {lhs!r}")
                break
        return cls.from_image(parse(t))

    @property
    def image(self) -> LaurentPoly:
        return LaurentPoly({self.power: self.sign})

    def is_identity(self) -> bool:
        return self.sign == 1 and self.power == 1

    def __call__(self, p: LaurentPoly) -> LaurentPoly:
        out: dict[int, int] = {}
        for e, c in p.items():
            k = self.power * e
            sgn = -1 if (self.sign < 0 and e % 2) else 1
            out[k] = out.get(k, 0) + sgn * c
        return LaurentPoly(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Specialization) and (self.sign, self.power) == (
            other.sign,
            other.power,
        )

    def __hash__(self) -> int:
        return hash((self.sign, self.power))

    def __repr__(self) -> str:
        return f"Specialization(v->{self.image})"


def specialize(p: LaurentPoly, f: Specialization) -> LaurentPoly:
    return f(p)
