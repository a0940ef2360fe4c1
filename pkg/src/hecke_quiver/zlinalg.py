"""Integer row reduction: Hermite normal form and lattice membership."""

from __future__ import annotations

from typing import Sequence


def hermite_basis(rows: Sequence[Sequence[int]], ncols: int | None = None) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    The result is a basis of the same Z-lattice with strictly increasing
    pivot columns, positive pivots, and entries above each pivot reduced
    into ``[0, pivot)``.  Zero rows are dropped.
    """
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return []
    n = ncols if ncols is not None else len(mat[0])
    basis: list[list[int]] = []
    pivots: list[int] = []
    active = mat
    for col in range(n):
        if not active:
            break
        nz = [r for r in active if r[col] != 0]
        zero = [r for r in active if r[col] == 0]
        if not nz:
            continue
        # Euclid on the column until a single nonzero row remains.
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            head = nz[0]
            nxt = [head]
            for r in nz[1:]:
                q = r[col] // head[col]
                red = [a - q * b for a, b in zip(r, head)]
                if red[col] != 0:
                    nxt.append(red)
                elif any(red):
                    zero.append(red)
            nz = nxt
        piv = nz[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        basis.append(piv)
        pivots.append(col)
        active = zero
    # reduce entries above pivots
    for i in range(len(basis)):
        pc = pivots[i]
        p = basis[i][pc]
        for k in range(i):
            q = basis[k][pc] // p
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], basis[i])]
    return basis


def pivot_columns(basis: Sequence[Sequence[int]]) -> list[int]:
    out = []
    for row in basis:
        out.append(next(k for k, a in enumerate(row) if a))
    return out


def in_lattice(basis: Sequence[Sequence[int]], b: Sequence[int]) -> bool:
    """Whether ``b`` is an integer combination of an echelon ``basis``."""
    vec = list(b)
    pivs = pivot_columns(basis)
    for row, pc in zip(basis, pivs):
        for k in range(pc):
            if vec[k] != 0:
                return False
        if vec[pc] % row[pc]:
            return False
        q = vec[pc] // row[pc]
        if q:
            vec = [a - q * c for a, c in zip(vec, row)]
    return not any(vec)


def solve_integer(rows: Sequence[Sequence[int]], b: Sequence[int]) -> bool:
    """Whether ``b`` lies in the Z-span of ``rows``."""
    if not any(b):
        return True
    return in_lattice(hermite_basis(rows, len(b)), b)
