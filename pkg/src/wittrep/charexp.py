"""Character exponentials and the expansion of characters in shifted power sums.

For a partition ``A`` with multiplicities ``a_i`` the character exponential is

    e^A = exp(sum_i a_i sum_m p_{im} / m) = prod_i prod_alpha (1 - x_alpha^i)^(-a_i).

Every element ``s = sum_lambda c_lambda p_lambda e^A`` is recovered from Hall
pairings with the shifted power sums ``u_lambda``.

Shift convention: with ``p_n^perp = n d/dp_n`` one gets
``p_n^perp e^A = (sum_{i | n} i a_i) e^A``, so ``u_n = p_n - sum_{i | n} i a_i``
is the shift that makes ``<u_mu, p_lambda e^A> = z_lambda delta``.  The
unweighted shift ``sum_{i | n} a_i`` is available as ``kind="plain"``; it
agrees with the weighted one whenever ``A`` has only parts equal to 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .combinatorics import EMPTY, Partition, frac, part_rk, partitions_of, z_lambda
from .errors import DomainError, InvariantViolation, PreconditionError
from .linalg import sparse_nullspace
from .symfunc import (
    Factor, PolySeries, RationalForm, SymFunc, expand, multiply, pi_n, sym_exp,
)


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition.of(*lam)


@dataclass(frozen=True)
class CharExpParams:
    A: Partition
    r: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "A", _as_partition(self.A))
        if self.r < 1 or self.k < 0:
            raise DomainError(f"need r >= 1 and k >= 0, got r={self.r}, k={self.k}")

    def a(self, i: int) -> int:
        return self.A.multiplicity(i)

    def index_set(self) -> list[Partition]:
        """Nonempty partitions with parts <= k and fewer than r parts."""
        return sorted(part_rk(self.r, self.k))

    def in_V(self, c: Mapping) -> bool:
        return all(len(_as_partition(lam)) < self.r for lam, v in c.items() if v)


# --- e^A -----------------------------------------------------------------

def _log_e_A(A: Partition, D: int) -> SymFunc:
    coeffs: dict[Partition, Fraction] = {}
    for i in set(A.parts):
        for m in range(1, D // i + 1):
            coeffs[Partition.of(i * m)] = coeffs.get(Partition.of(i * m), 0) + Fraction(A.multiplicity(i), m)
    return SymFunc(D, "p", coeffs)


@lru_cache(maxsize=None)
def _e_A_abstract(A: Partition, D: int) -> SymFunc:
    via_exp = sym_exp(_log_e_A(A, D)).convert("m")
    # product side: prod_i G_i^{a_i}, where G_i sums m_mu over mu with all parts divisible by i
    via_prod = SymFunc.one(D, "m")
    for i in sorted(set(A.parts)):
        g = SymFunc(D, "m", {mu: 1 for d in range(0, D + 1) for mu in partitions_of(d)
                             if all(p % i == 0 for p in mu.parts)})
        for _ in range(A.multiplicity(i)):
            via_prod = multiply(via_prod, g)
    if via_exp.coeffs != via_prod.convert("m").coeffs:
        raise InvariantViolation(f"e^{A} disagrees between exp and product formulas")
    return via_exp.convert("p")


def _e_A_specialized(A: Partition, n: int, D: int) -> PolySeries:
    out = PolySeries.one(n, D)
    for i in A.parts:
        for alpha in range(n):
            geo = {}
            for j in range(0, D // i + 1):
                e = [0] * n
                e[alpha] = i * j
                geo[tuple(e)] = 1
            out = out * PolySeries(n, D, geo)
    return out


def e_A(A, D: int, n: int | None = None):
    """Degree ``<= D`` window of ``e^A``; a SymFunc when ``n`` is None, else its ``n``-variable specialization."""
    A = _as_partition(A)
    if D < 0:
        raise DomainError("D must be non-negative")
    abstract = _e_A_abstract(A, D)
    if n is None:
        return abstract
    direct = _e_A_specialized(A, n, D)
    if pi_n(abstract, n) != direct:
        raise InvariantViolation(f"specialized e^{A} disagrees with pi_{n}")
    return direct


# --- u_lambda and reconstruction -----------------------------------------

def shift(A, n: int, kind: str = "weighted") -> int:
    """Constant subtracted from ``p_n`` in ``u_n``."""
    A = _as_partition(A)
    if kind == "weighted":
        return sum(i * A.multiplicity(i) for i in range(1, n + 1) if n % i == 0)
    if kind == "plain":
        return sum(A.multiplicity(i) for i in range(1, n + 1) if n % i == 0)
    raise DomainError(f"unknown shift kind {kind!r}")


def u_lambda(A, lam, D: int | None = None, kind: str = "weighted") -> SymFunc:
    """``prod_i (p_i - shift_i)^{m_i(lambda)}`` in the power-sum basis."""
    A, lam = _as_partition(A), _as_partition(lam)
    D = lam.size if D is None else D
    out = SymFunc.one(D, "p")
    for part in lam.parts:
        out = multiply(out, SymFunc(D, "p", {Partition.of(part): 1, EMPTY: -shift(A, part, kind)}))
    return out


def combination(c: Mapping, A, D: int) -> SymFunc:
    """``sum_lambda c_lambda p_lambda e^A`` truncated at ``D``, in the p basis."""
    A = _as_partition(A)
    base = _e_A_abstract(A, D)
    out = SymFunc.zero(D, "p")
    for lam, v in c.items():
        lam = _as_partition(lam)
        if v and lam.size <= D:
            out = out + multiply(SymFunc.element("p", lam, D), base) * frac(v)
    return out


def _pair_p(f: SymFunc, g: SymFunc) -> Fraction:
    """Hall pairing of two p-basis windows, using <p_lambda, p_mu> = z_lambda delta."""
    return sum((c * g.coeffs.get(lam, 0) * z_lambda(lam) for lam, c in f.coeffs.items()), Fraction(0))


@dataclass
class Reconstruction:
    result: SymFunc
    residual: SymFunc
    coefficients: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.residual.is_zero()


def reconstruct(s: SymFunc, params: CharExpParams, D: int | None = None, kind: str = "weighted") -> Reconstruction:
    """Rebuild ``s`` as ``sum <u_lambda / z_lambda, s> p_lambda e^A`` over ``|lambda| <= D``."""
    D = s.D if D is None else D
    if D > s.D:
        raise PreconditionError(f"s is only known to degree {s.D}")
    s = SymFunc(D, "p", s.convert("p").coeffs)
    coeffs = {}
    for d in range(0, D + 1):
        for lam in partitions_of(d):
            c = _pair_p(u_lambda(params.A, lam, D, kind), s) / z_lambda(lam)
            if c:
                coeffs[lam] = c
    result = combination(coeffs, params.A, D)
    return Reconstruction(result, (s - result).convert("p"), coeffs)


def member_basis(params: CharExpParams, D: int) -> list[dict]:
    """Coefficient vectors ``c`` (``l(lambda) < r``, ``|lambda| <= D``) with ``sum c p e^A`` in ``F_{<=k}`` to degree ``D``."""
    unknowns = [lam for d in range(D + 1) for lam in partitions_of(d) if len(lam) < params.r]
    images = {lam: combination({lam: 1}, params.A, D).convert("s") for lam in unknowns}
    equations: dict[Partition, dict] = {}
    for lam, img in images.items():
        for mu, v in img.coeffs.items():
            if len(mu) > params.k:
                equations.setdefault(mu, {})[lam] = v
    return sparse_nullspace(list(equations.values()), unknowns)


# --- the generating identity ---------------------------------------------

@dataclass(frozen=True)
class NilpotentPoly:
    """Polynomial in symbols ``E_1..E_k`` modulo degree ``r``; monomials are partitions."""

    r: int
    k: int
    coeffs: Mapping[Partition, object]

    def __post_init__(self):
        for nu in self.coeffs:
            if len(nu) >= self.r or (nu.parts and nu.parts[0] > self.k):
                raise InvariantViolation(f"monomial E_{nu} outside the truncated ring")

    def __getitem__(self, nu):
        return self.coeffs.get(_as_partition(nu))

    def monomials(self) -> list[Partition]:
        return sorted(self.coeffs)


def _denominator_series(A: Partition, power: int, D: int) -> list[Fraction]:
    """Coefficients of ``prod_i (1 - t^i)^(-a_i * power)`` up to ``t^D``."""
    out = [Fraction(0)] * (D + 1)
    out[0] = Fraction(1)
    for i in A.parts:
        for _ in range(power):
            for d in range(i, D + 1):
                out[d] += out[d - i]
    return out


def _nu_weight(nu: Partition) -> Fraction:
    return Fraction(math.factorial(len(nu) - 1), nu.factorial())


@dataclass
class IdentityExpansion:
    rhs: NilpotentPoly           # values: PolySeries in t
    exponential: NilpotentPoly   # values: SymFunc in x, p basis


def expand_identity(params: CharExpParams, D: int) -> IdentityExpansion:
    A, r = params.A, params.r
    index = params.index_set()
    rhs = {}
    inner: dict[Partition, SymFunc] = {}
    for nu in index:
        den = _denominator_series(A, len(nu), D)
        w = _nu_weight(nu)
        series = {(d,): w * den[d - nu.size] for d in range(nu.size, D + 1) if den[d - nu.size]}
        rhs[nu] = PolySeries(1, D, series)
        # sum_alpha f(x_alpha) with f(t) = sum f_d t^d is sum_d f_d p_d
        inner[nu] = SymFunc(D, "p", {Partition.of(d): c for (d,), c in series.items()})
    # exp in the nilpotent ring: X = sum_nu E_nu inner_nu, products of E's add multisets
    result = {EMPTY: SymFunc.one(D, "p")}
    power = {EMPTY: SymFunc.one(D, "p")}
    for j in range(1, r):
        nxt: dict[Partition, SymFunc] = {}
        for mono, val in power.items():
            for nu, f in inner.items():
                key = mono.union(nu)
                if len(key) >= r:
                    continue
                prod = multiply(val, f)
                nxt[key] = nxt[key] + prod if key in nxt else prod
        power = nxt
        for key, val in power.items():
            term = val * Fraction(1, math.factorial(j))
            result[key] = result[key] + term if key in result else term
    result = {k: v for k, v in result.items() if not v.is_zero()}
    return IdentityExpansion(NilpotentPoly(r, params.k, rhs), NilpotentPoly(r, params.k, result))


# --- rational forms ------------------------------------------------------

def rational_form(c: Mapping, params: CharExpParams, n: int, D: int = 10) -> RationalForm:
    """Exact rational form of ``pi_n(sum c_lambda p_lambda e^A)``, checked by expansion to degree ``D``."""
    if n < 1:
        raise DomainError("need at least one variable")
    c = {_as_partition(lam): frac(v) for lam, v in c.items() if v}
    if not params.in_V(c):
        raise PreconditionError(f"support must have fewer than {params.r} parts")
    top = max((lam.size for lam in c), default=0)
    numerator = pi_n(SymFunc(top, "p", c), n).coeffs
    A = params.A
    denominator = tuple(Factor(alpha, i, A.multiplicity(i)) for alpha in range(1, n + 1) for i in sorted(set(A.parts)))
    form = RationalForm(n, numerator, denominator)
    if form.max_exponent > A.size:
        raise InvariantViolation("denominator exponent exceeds |A|")
    direct = pi_n(combination(c, A, D), n)
    if expand(form, D) != direct:
        raise InvariantViolation("rational form does not reproduce the direct series")
    return form
