"""Exact linear algebra over the rationals on sparse (dict) and dense (list) vectors."""
from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

Vector = dict  # key -> Fraction, zero entries absent


def add_into(target: dict, source: Mapping, scale=1) -> None:
    """``target += scale * source`` in place, dropping zeros."""
    for k, v in source.items():
        new = target.get(k, 0) + scale * v
        if new:
            target[k] = new
        else:
            target.pop(k, None)


def scaled(v: Mapping, c) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


class RowSpace:
    """Incrementally maintained row echelon basis of a span of sparse vectors.

    Pivots are taken in insertion order, so the basis (and every quotient
    coordinate system derived from it) is reproducible.
    """

    def __init__(self, vectors: Iterable[Mapping] = ()):
        self._rows: list[tuple[Hashable, dict]] = []
        self._pivot_keys: set = set()
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> set:
        return set(self._pivot_keys)

    def rows(self) -> list[dict]:
        return [dict(r) for _, r in self._rows]

    def reduce(self, v: Mapping) -> dict:
        """Remainder of ``v`` after eliminating every pivot coordinate."""
        out = {k: Fraction(x) for k, x in v.items() if x}
        if not out:
            return out
        for key, row in self._rows:
            c = out.get(key)
            if c:
                add_into(out, row, -c)
        return out

    def add(self, v: Mapping) -> bool:
        """Add ``v`` to the span; return True if the rank grew."""
        r = self.reduce(v)
        if not r:
            return False
        key = next(iter(r))
        c = r[key]
        row = {k: x / c for k, x in r.items()}
        self._rows.append((key, row))
        self._pivot_keys.add(key)
        return True

    def contains(self, v: Mapping) -> bool:
        return not self.reduce(v)


def _sort_key(k):
    # deterministic pivot choice for heterogeneous hashable keys
    return repr(k)


def rank(vectors: Iterable[Mapping]) -> int:
    return RowSpace(vectors).rank


def dense_rank(rows: list[list]) -> int:
    return rank({j: x for j, x in enumerate(row) if x} for row in rows)


def rref(matrix: list[list]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of a dense matrix and its pivot columns."""
    m = [[Fraction(x) for x in row] for row in matrix]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(matrix: list[list], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{x : matrix @ x = 0}`` (dense)."""
    if not matrix:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    n = len(matrix[0])
    red, pivots = rref(matrix)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def inverse(matrix: list[list]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def matmul(a: list[list], b: list[list]) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def trace(a: list[list]):
    return sum(a[i][i] for i in range(len(a)))


def solve_in_span(basis: list[Mapping], target: Mapping) -> list[Fraction] | None:
    """Coefficients ``c`` with ``sum c_i basis_i == target``, or None."""
    keys = sorted({k for v in basis for k in v} | set(target), key=_sort_key)
    rows = [[Fraction(v.get(k, 0)) for v in basis] + [Fraction(target.get(k, 0))] for k in keys]
    if not rows:
        return [Fraction(0)] * len(basis)
    red, pivots = rref(rows)
    n = len(basis)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return x


def sparse_nullspace(equations: Iterable[Mapping], unknowns: Iterable[Hashable]) -> list[dict]:
    """Basis of the solutions of sparse homogeneous equations.

    Each equation is a dict ``unknown -> coefficient``; the basis vectors
    are dicts too, one per free unknown (in the order of ``unknowns``).
    """
    space = RowSpace(equations)
    rows = space._rows
    pivots = space._pivot_keys
    out = []
    for free in unknowns:
        if free in pivots:
            continue
        x = {free: Fraction(1)}
        # each row only mentions later pivots, so solve from the back
        for key, row in reversed(rows):
            val = -sum((c * x[k] for k, c in row.items() if k != key and k in x), Fraction(0))
            if val:
                x[key] = val
        out.append(x)
    return out
