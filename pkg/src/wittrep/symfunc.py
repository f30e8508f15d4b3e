"""Degree-truncated symmetric functions, polynomial series and rational forms.

Every symmetric function is a window ``sum_{|lambda| <= D} c_lambda b_lambda``
in one of the bases ``m, e, h, p, s``.  Change of basis goes through the
monomial basis; the monomial expansion of each basis element is computed by
counting (integer matrices for ``e``/``h``/``p``, semistandard tableaux for
``s``), never read from a table.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .combinatorics import EMPTY, Partition, frac, partitions_of
from .errors import DomainError, PreconditionError
from .linalg import add_into, inverse

BASES = ("m", "e", "h", "p", "s")


# --- monomial expansions -------------------------------------------------

@lru_cache(maxsize=None)
def _p_count(parts: tuple[int, ...], caps: tuple[int, ...]) -> int:
    # ways to send each (labelled) part into a row so every row is filled exactly
    if not parts:
        return int(all(c == 0 for c in caps))
    first, rest = parts[0], parts[1:]
    total = 0
    for i, c in enumerate(caps):
        if c >= first:
            new = list(caps)
            new[i] -= first
            total += _p_count(rest, tuple(sorted(new, reverse=True)))
    return total


@lru_cache(maxsize=None)
def _e_count(rows: tuple[int, ...], caps: tuple[int, ...]) -> int:
    # 0/1 matrices with the given row and column sums
    if not rows:
        return int(all(c == 0 for c in caps))
    first, rest = rows[0], rows[1:]
    total = 0
    idx = [i for i, c in enumerate(caps) if c > 0]
    for chosen in itertools.combinations(idx, first):
        new = list(caps)
        for i in chosen:
            new[i] -= 1
        total += _e_count(rest, tuple(sorted(new, reverse=True)))
    return total


@lru_cache(maxsize=None)
def _h_count(rows: tuple[int, ...], caps: tuple[int, ...]) -> int:
    # non-negative integer matrices with the given row and column sums
    if not rows:
        return int(all(c == 0 for c in caps))
    first, rest = rows[0], rows[1:]
    total = 0
    for dist in _bounded_compositions(first, caps):
        new = tuple(sorted((c - x for c, x in zip(caps, dist)), reverse=True))
        total += _h_count(rest, new)
    return total


def _bounded_compositions(total: int, caps: tuple[int, ...]):
    if not caps:
        if total == 0:
            yield ()
        return
    for x in range(min(total, caps[0]), -1, -1):
        for rest in _bounded_compositions(total - x, caps[1:]):
            yield (x,) + rest


def _horizontal_strips(shape: tuple[int, ...], size: int):
    """Shapes ``nu`` with ``shape / nu`` a horizontal strip of ``size`` boxes."""
    n = len(shape)

    def rec(i, remaining, acc):
        if i == n:
            if remaining == 0:
                yield tuple(p for p in acc if p > 0)
            return
        lower = shape[i + 1] if i + 1 < n else 0
        for take in range(min(remaining, shape[i] - lower), -1, -1):
            yield from rec(i + 1, remaining - take, acc + (shape[i] - take,))

    yield from rec(0, size, ())


@lru_cache(maxsize=None)
def kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of ``shape`` with ``content``."""
    if not content:
        return int(not shape)
    if sum(shape) != sum(content):
        return 0
    last = content[-1]
    return sum(kostka(nu, content[:-1]) for nu in _horizontal_strips(shape, last))


def monomial_coefficient(basis: str, lam: Partition, mu: Partition) -> int:
    """Coefficient of ``m_mu`` in the basis element ``basis_lam``."""
    if lam.size != mu.size:
        return 0
    if basis == "m":
        return int(lam == mu)
    if basis == "p":
        return _p_count(lam.parts, mu.parts)
    if basis == "e":
        return _e_count(lam.parts, mu.parts)
    if basis == "h":
        return _h_count(lam.parts, mu.parts)
    if basis == "s":
        return kostka(lam.parts, mu.parts)
    raise DomainError(f"unsupported basis {basis!r}")


@lru_cache(maxsize=None)
def to_monomial_matrix(basis: str, d: int) -> tuple[tuple[int, ...], ...]:
    parts = partitions_of(d)
    return tuple(tuple(monomial_coefficient(basis, lam, mu) for mu in parts) for lam in parts)


@lru_cache(maxsize=None)
def from_monomial_matrix(basis: str, d: int) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(row) for row in inverse([list(r) for r in to_monomial_matrix(basis, d)]))


def _check_basis(basis: str) -> None:
    if basis not in BASES:
        raise DomainError(f"unsupported basis {basis!r}; expected one of {BASES}")


# --- symmetric functions -------------------------------------------------

@dataclass(frozen=True)
class SymFunc:
    """A symmetric function known up to degree ``D`` in a named basis."""

    D: int
    basis: str
    coeffs: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        _check_basis(self.basis)
        clean = {}
        for lam, c in self.coeffs.items():
            if not isinstance(lam, Partition):
                lam = Partition.of(*lam)
            c = frac(c)
            if c and lam.size <= self.D:
                clean[lam] = clean.get(lam, 0) + c
        object.__setattr__(self, "coeffs", {k: v for k, v in sorted(clean.items()) if v})

    @classmethod
    def zero(cls, D: int, basis: str = "s") -> "SymFunc":
        return cls(D, basis, {})

    @classmethod
    def one(cls, D: int, basis: str = "s") -> "SymFunc":
        return cls(D, basis, {EMPTY: 1})

    @classmethod
    def element(cls, basis: str, lam, D: int | None = None, coeff=1) -> "SymFunc":
        lam = lam if isinstance(lam, Partition) else Partition.of(*lam)
        return cls(lam.size if D is None else D, basis, {lam: coeff})

    def __getitem__(self, lam) -> Fraction:
        lam = lam if isinstance(lam, Partition) else Partition.of(*lam)
        return self.coeffs.get(lam, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _same_window(self, other: "SymFunc") -> None:
        if self.D != other.D:
            raise PreconditionError(f"truncation degrees differ: {self.D} vs {other.D}")

    def __add__(self, other: "SymFunc") -> "SymFunc":
        self._same_window(other)
        other = other.convert(self.basis)
        out = dict(self.coeffs)
        add_into(out, other.coeffs)
        return SymFunc(self.D, self.basis, out)

    def __neg__(self) -> "SymFunc":
        return SymFunc(self.D, self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        c = frac(other)
        return SymFunc(self.D, self.basis, {k: c * v for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.D == other.D and self.coeffs == other.convert(self.basis).coeffs

    def __hash__(self):
        return hash((self.D, self.basis, tuple(self.coeffs.items())))

    def convert(self, target: str) -> "SymFunc":
        return convert(self, target)

    def truncate(self, D: int) -> "SymFunc":
        return SymFunc(D, self.basis, {k: v for k, v in self.coeffs.items() if k.size <= D})

    def degree_part(self, d: int) -> "SymFunc":
        return SymFunc(self.D, self.basis, {k: v for k, v in self.coeffs.items() if k.size == d})

    def to_json(self) -> dict:
        return {
            "D": self.D,
            "basis": self.basis,
            "terms": [{"partition": lam.to_json(), "coeff": str(c)} for lam, c in self.coeffs.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SymFunc":
        return cls(
            int(data["D"]),
            data["basis"],
            {Partition.from_json(t["partition"]): Fraction(t["coeff"]) for t in data.get("terms", [])},
        )

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"SymFunc(D={self.D}, {self.basis}: 0)"
        terms = " + ".join(f"{c}*{self.basis}{list(lam.parts)}" for lam, c in self.coeffs.items())
        return f"SymFunc(D={self.D}, {terms})"


def convert(f: SymFunc, target: str) -> SymFunc:
    """Re-express ``f`` in ``target`` basis, degree by degree."""
    _check_basis(target)
    if target == f.basis:
        return f
    by_degree: dict[int, dict[Partition, Fraction]] = {}
    for lam, c in f.coeffs.items():
        by_degree.setdefault(lam.size, {})[lam] = c
    out: dict[Partition, Fraction] = {}
    for d, part in by_degree.items():
        parts = partitions_of(d)
        index = {lam: i for i, lam in enumerate(parts)}
        vec = [Fraction(0)] * len(parts)
        for lam, c in part.items():
            vec[index[lam]] = c
        if f.basis != "m":
            mat = to_monomial_matrix(f.basis, d)
            vec = [sum(vec[i] * mat[i][j] for i in range(len(parts)) if vec[i]) for j in range(len(parts))]
        if target != "m":
            inv = from_monomial_matrix(target, d)
            vec = [sum(vec[i] * inv[i][j] for i in range(len(parts)) if vec[i]) for j in range(len(parts))]
        for lam, c in zip(parts, vec):
            if c:
                out[lam] = c
    return SymFunc(f.D, target, out)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Truncated product, computed in the power-sum basis."""
    f._same_window(g)
    fp, gp = f.convert("p"), g.convert("p")
    out: dict[Partition, Fraction] = {}
    for a, x in fp.coeffs.items():
        for b, y in gp.coeffs.items():
            if a.size + b.size <= f.D:
                key = a.union(b)
                out[key] = out.get(key, 0) + x * y
    return SymFunc(f.D, "p", out).convert(f.basis)


def hall(f: SymFunc, g: SymFunc) -> Fraction:
    """Hall inner product of two windows of equal truncation degree."""
    f._same_window(g)
    fs, gs = f.convert("s"), g.convert("s")
    return sum((c * gs.coeffs.get(lam, 0) for lam, c in fs.coeffs.items()), Fraction(0))


def power_sum(k: int, D: int) -> SymFunc:
    return SymFunc.element("p", (k,), D)


def sym_exp(f: SymFunc) -> SymFunc:
    """``exp(f)`` for ``f`` without constant term, truncated at ``f.D``."""
    if f[EMPTY]:
        raise PreconditionError("exponential needs a series with zero constant term")
    result = SymFunc.one(f.D, "p")
    term = SymFunc.one(f.D, "p")
    fp = f.convert("p")
    for j in range(1, f.D + 1):
        term = multiply(term, fp) * Fraction(1, j)
        if term.is_zero():
            break
        result = result + term
    return result.convert(f.basis)


# --- polynomial series ---------------------------------------------------

@dataclass(frozen=True)
class PolySeries:
    """A power series in ``x_1..x_n`` known up to total degree ``D``."""

    n: int
    D: int
    coeffs: Mapping[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exps, c in self.coeffs.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != self.n or any(e < 0 for e in exps):
                raise DomainError(f"bad exponent vector {exps} for {self.n} variables")
            c = frac(c)
            if c and sum(exps) <= self.D:
                clean[exps] = clean.get(exps, 0) + c
        object.__setattr__(self, "coeffs", {k: v for k, v in sorted(clean.items()) if v})

    @classmethod
    def from_list(cls, coeffs: Iterable, D: int | None = None) -> "PolySeries":
        coeffs = list(coeffs)
        D = len(coeffs) - 1 if D is None else D
        return cls(1, D, {(i,): c for i, c in enumerate(coeffs)})

    @classmethod
    def one(cls, n: int, D: int) -> "PolySeries":
        return cls(n, D, {(0,) * n: 1})

    def __getitem__(self, exps) -> Fraction:
        if isinstance(exps, int):
            exps = (exps,)
        return self.coeffs.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "PolySeries") -> None:
        if self.n != other.n or self.D != other.D:
            raise PreconditionError("series differ in variable count or truncation degree")

    def __add__(self, other: "PolySeries") -> "PolySeries":
        self._check(other)
        out = dict(self.coeffs)
        add_into(out, other.coeffs)
        return PolySeries(self.n, self.D, out)

    def __neg__(self) -> "PolySeries":
        return PolySeries(self.n, self.D, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "PolySeries") -> "PolySeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PolySeries):
            self._check(other)
            out: dict = {}
            for a, x in self.coeffs.items():
                da = sum(a)
                for b, y in other.coeffs.items():
                    if da + sum(b) <= self.D:
                        key = tuple(i + j for i, j in zip(a, b))
                        out[key] = out.get(key, 0) + x * y
            return PolySeries(self.n, self.D, out)
        c = frac(other)
        return PolySeries(self.n, self.D, {k: c * v for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self.n == other.n and self.D == other.D and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.D, tuple(self.coeffs.items())))

    def truncate(self, D: int) -> "PolySeries":
        return PolySeries(self.n, D, {k: v for k, v in self.coeffs.items() if sum(k) <= D})

    def collapse(self) -> "PolySeries":
        """Set every variable to a single variable ``t``."""
        out: dict = {}
        for k, v in self.coeffs.items():
            out[(sum(k),)] = out.get((sum(k),), 0) + v
        return PolySeries(1, self.D, out)

    def coefficient_list(self) -> list[Fraction]:
        """Coefficients of ``t^0..t^D`` of the one-variable collapse."""
        c = self.collapse()
        return [c[(d,)] for d in range(self.D + 1)]

    def to_json(self) -> dict:
        return {
            "vars": self.n,
            "D": self.D,
            "terms": [{"exponents": list(k), "coeff": str(v)} for k, v in self.coeffs.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PolySeries":
        return cls(
            int(data["vars"]),
            int(data["D"]),
            {tuple(t["exponents"]): Fraction(t["coeff"]) for t in data.get("terms", [])},
        )

    def __repr__(self) -> str:
        return f"PolySeries(n={self.n}, D={self.D}, {dict(self.coeffs)})"


def _monomial_symmetric(lam: Partition, n: int) -> list[tuple[int, ...]]:
    if len(lam) > n:
        return []
    padded = lam.parts + (0,) * (n - len(lam))
    return sorted(set(itertools.permutations(padded)))


def pi_n(f: SymFunc, n: int) -> PolySeries:
    """Set ``x_i = 0`` for ``i > n``; Schur terms with more than ``n`` rows vanish."""
    if n < 1:
        raise DomainError("pi_n needs n >= 1")
    fm = f.convert("m")
    out: dict = {}
    for lam, c in fm.coeffs.items():
        for exps in _monomial_symmetric(lam, n):
            out[exps] = out.get(exps, 0) + c
    return PolySeries(n, f.D, out)


# --- rational forms ------------------------------------------------------

@dataclass(frozen=True)
class Factor:
    """``(1 - x_var^m)^power``."""

    var: int
    m: int
    power: int = 1

    def __post_init__(self):
        if self.var < 1 or self.m < 1 or self.power < 1:
            raise DomainError(f"invalid denominator factor {self}")


@dataclass(frozen=True)
class RationalForm:
    """``numerator / prod (1 - x_var^m)^power`` in ``n`` variables."""

    n: int
    numerator: Mapping[tuple[int, ...], Fraction]
    denominator: tuple[Factor, ...] = ()

    def __post_init__(self):
        num = PolySeries(self.n, 10**9, self.numerator).coeffs
        object.__setattr__(self, "numerator", dict(num))
        facs: dict[tuple[int, int], int] = {}
        for f in self.denominator:
            if not isinstance(f, Factor):
                f = Factor(*f)
            if f.var > self.n:
                raise DomainError(f"factor variable {f.var} exceeds {self.n}")
            facs[(f.var, f.m)] = facs.get((f.var, f.m), 0) + f.power
        object.__setattr__(self, "denominator", tuple(Factor(v, m, p) for (v, m), p in sorted(facs.items())))

    @property
    def max_exponent(self) -> int:
        return max((f.m for f in self.denominator), default=0)

    @property
    def denominator_degree(self) -> int:
        return sum(f.m * f.power for f in self.denominator)

    def to_json(self) -> dict:
        return {
            "vars": self.n,
            "numerator": {"terms": [{"exponents": list(k), "coeff": str(v)} for k, v in self.numerator.items()]},
            "denominator": [{"var": f.var, "m": f.m, "power": f.power} for f in self.denominator],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "RationalForm":
        return cls(
            int(data["vars"]),
            {tuple(t["exponents"]): Fraction(t["coeff"]) for t in data["numerator"].get("terms", [])},
            tuple(Factor(int(f["var"]), int(f["m"]), int(f.get("power", 1))) for f in data.get("denominator", [])),
        )

    def __str__(self) -> str:
        def mono(k):
            parts = [f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(k) if e]
            return "*".join(parts) or "1"

        num = " + ".join(f"{c}*{mono(k)}" for k, c in self.numerator.items()) or "0"
        den = "*".join(f"(1-x{f.var}^{f.m})^{f.power}" for f in self.denominator) or "1"
        return f"({num}) / ({den})"


def expand(rf: RationalForm, D: int) -> PolySeries:
    """Series expansion of ``rf`` up to total degree ``D``."""
    if D < 0:
        raise DomainError("D must be non-negative")
    out = PolySeries(rf.n, D, rf.numerator)
    for f in rf.denominator:
        geo = {}
        for k in range(0, D // f.m + 1):
            e = [0] * rf.n
            e[f.var - 1] = k * f.m
            geo[tuple(e)] = 1
        g = PolySeries(rf.n, D, geo)
        for _ in range(f.power):
            out = out * g
    return out


@dataclass
class FitResult:
    """Outcome of ``fit_rational``; ``form`` is None when no candidate fits."""

    form: RationalForm | None
    candidates_tried: int
    fit_degree: int
    heldout: int
    heldout_ok: bool
    rejected_on_heldout: list = field(default_factory=list)

    @property
    def success(self) -> bool:
        return self.form is not None

    def to_json(self) -> dict:
        return {
            "success": self.success,
            "form": self.form.to_json() if self.form else None,
            "candidates_tried": self.candidates_tried,
            "fit_degree": self.fit_degree,
            "heldout_coefficients": self.heldout,
            "heldout_ok": self.heldout_ok,
        }


def _candidate_denominators(n: int, d: int, total: int):
    factors = [(v, m) for v in range(1, n + 1) for m in range(1, d + 1)]

    def rec(start, remaining):
        if remaining == 0:
            yield ()
            return
        for i in range(start, len(factors)):
            v, m = factors[i]
            if m <= remaining:
                for rest in rec(i, remaining - m):
                    yield ((v, m),) + rest

    yield from rec(0, total)


def fit_rational(
    series: PolySeries,
    d: int,
    B: int,
    numerator_degree: int | None = None,
    holdout: int = 5,
) -> FitResult:
    """Find ``N / prod (1 - x_a^m)`` with all ``m <= d`` matching ``series``.

    Denominators are tried by increasing total degree ``<= B`` and, within a
    degree, in lexicographic factor order.  For a candidate ``Q`` the numerator
    is the unique solution of ``N = series * Q`` in degrees ``<= numerator_degree``;
    the candidate is accepted when ``series * Q`` vanishes in every degree from
    ``numerator_degree + 1`` to ``D - holdout`` and is then confirmed on the
    ``holdout`` top coefficients.  The window must satisfy
    ``D >= B + numerator_degree + holdout + 1``; by default ``numerator_degree``
    takes the largest value allowed.
    """
    D = series.D
    if numerator_degree is None:
        numerator_degree = D - holdout - B - 1
    if numerator_degree < 0 or D < B + numerator_degree + holdout + 1:
        raise PreconditionError(
            f"truncation degree {D} too small: need D >= B + numerator_degree + holdout + 1 "
            f"= {B} + {numerator_degree} + {holdout} + 1"
        )
    fit_degree = D - holdout
    tried = 0
    rejected = []
    for total in range(B + 1):
        for cand in _candidate_denominators(series.n, d, total):
            tried += 1
            q = PolySeries.one(series.n, D)
            for v, m in cand:
                e = [0] * series.n
                e[v - 1] = m
                q = q * PolySeries(series.n, D, {(0,) * series.n: 1, tuple(e): -1})
            prod = series * q
            tail = {k: c for k, c in prod.coeffs.items() if sum(k) > numerator_degree}
            if any(sum(k) <= fit_degree for k in tail):
                continue
            form = RationalForm(
                series.n,
                {k: c for k, c in prod.coeffs.items() if sum(k) <= numerator_degree},
                tuple(Factor(v, m) for v, m in cand),
            )
            if tail:
                rejected.append(form)
                continue
            return FitResult(form, tried, fit_degree, holdout, True, rejected)
    return FitResult(None, tried, fit_degree, holdout, False, rejected)
