"""Wiring categories of the four operads.

A basis morphism ``[n] -> [m]`` is a function ``f`` together with, for each
target ``i``, an operad element on the fiber ``f^{-1}(i)``.  Input ``j`` of
that decoration is the ``j``-th smallest element of the fiber.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import operad as opd
from .combinatorics import DEFAULT_CAP, FiniteMap, check_cap, maps
from .errors import DomainError, PreconditionError
from .freealg import Monomial, TensorElement, free_basis, generator, gl_element, apply_derivation, multiply, unit
from .linalg import RowSpace, add_into, sparse_nullspace
from .operad import OperadElement, OperadId

Key = tuple  # (values, decorations)


def _fibers(values: Sequence[int], m: int) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(m)]
    for a, v in enumerate(values, start=1):
        out[v - 1].append(a)
    return out


@dataclass(frozen=True)
class WiringMorphism:
    operad: OperadId
    n: int
    m: int
    terms: Mapping = field(default_factory=dict)

    def __post_init__(self):
        op = OperadId.parse(self.operad)
        object.__setattr__(self, "operad", op)
        clean: dict = {}
        for (values, decs), c in self.terms.items():
            values, decs = tuple(values), tuple(decs)
            f = FiniteMap(self.n, self.m, values)
            if len(decs) != self.m:
                raise DomainError(f"need {self.m} decorations, got {len(decs)}")
            for fib, dec in zip(f.fibers(), decs):
                if dec.operad is not op or dec.arity != len(fib):
                    raise DomainError(f"decoration {dec} does not fit fiber {fib}")
            add_into(clean, {(values, decs): Fraction(c)})
        object.__setattr__(self, "terms", clean)

    @classmethod
    def basic(cls, P, f: FiniteMap | Sequence[int], m: int | None = None,
              decorations: Sequence[OperadElement] | None = None, coeff=1) -> "WiringMorphism":
        P = OperadId.parse(P)
        if not isinstance(f, FiniteMap):
            f = FiniteMap(len(f), m if m is not None else max(f, default=0), tuple(f))
        if decorations is None:
            decorations = [OperadElement(P, len(fib)) for fib in f.fibers()]
        return cls(P, f.n, f.m, {(f.values, tuple(decorations)): coeff})

    @classmethod
    def identity(cls, P, n: int) -> "WiringMorphism":
        return cls.basic(P, FiniteMap.identity(n))

    @classmethod
    def zero(cls, P, n: int, m: int) -> "WiringMorphism":
        return cls(OperadId.parse(P), n, m, {})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "WiringMorphism"):
        if (self.operad, self.n, self.m) != (other.operad, other.n, other.m):
            raise DomainError("morphisms live in different hom spaces")

    def __add__(self, other: "WiringMorphism") -> "WiringMorphism":
        self._check(other)
        out = dict(self.terms)
        add_into(out, other.terms)
        return WiringMorphism(self.operad, self.n, self.m, out)

    def __sub__(self, other: "WiringMorphism") -> "WiringMorphism":
        return self + other * -1

    def __mul__(self, c) -> "WiringMorphism":
        c = Fraction(c)
        return WiringMorphism(self.operad, self.n, self.m, {k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: "WiringMorphism") -> "WiringMorphism":
        return compose_w(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WiringMorphism):
            return NotImplemented
        return (self.operad, self.n, self.m) == (other.operad, other.n, other.m) and self.terms == other.terms

    def __hash__(self):
        return hash((self.operad, self.n, self.m, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return f"0:[{self.n}]->[{self.m}]"
        parts = []
        for (values, decs), c in sorted(self.terms.items(), key=lambda kv: _key_sort(kv[0])):
            tag = list(values)
            if self.operad is OperadId.AS:
                tag = (list(values), [list(d.order) for d in decs])
            parts.append(f"{c}*{tag}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        terms = []
        for (values, decs), c in sorted(self.terms.items(), key=lambda kv: _key_sort(kv[0])):
            terms.append({
                "map": list(values),
                "decorations": [{k: v for k, v in d.to_json().items() if k != "operad"} for d in decs],
                "coeff": str(c),
            })
        return {"operad": self.operad.value, "n": self.n, "m": self.m, "terms": terms}

    @classmethod
    def from_json(cls, data) -> "WiringMorphism":
        P = OperadId.parse(data["operad"])
        n, m = int(data["n"]), int(data["m"])
        terms: dict = {}
        for t in data.get("terms", []):
            values = tuple(int(v) for v in t["map"])
            if "decorations" in t:
                decs = tuple(OperadElement.from_json(d, P) for d in t["decorations"])
            else:
                decs = tuple(OperadElement(P, len(fib)) for fib in _fibers(values, m))
            add_into(terms, {(values, decs): Fraction(t.get("coeff", 1))})
        return cls(P, n, m, terms)


def _key_sort(key):
    values, decs = key
    return (values, tuple(d.order or () for d in decs))


def _compose_basic(P: OperadId, outer: Key, inner: Key, n: int, l: int) -> Key:
    fvals, odecs = outer
    gvals, pdecs = inner
    m = len(fvals)
    gfib = _fibers(gvals, m)
    composite = tuple(fvals[g - 1] for g in gvals)
    cfib = _fibers(composite, l)
    decs = []
    for i in range(l):
        ffib = [b for b in range(1, m + 1) if fvals[b - 1] == i + 1]
        blocks = [pdecs[b - 1] for b in ffib]
        dec = opd.compose(odecs[i], blocks)
        # relabel from block order to sorted-fiber order
        concat = [a for b in ffib for a in gfib[b - 1]]
        pos = {a: k for k, a in enumerate(cfib[i], start=1)}
        decs.append(dec.relabel([pos[a] for a in concat]))
    return composite, tuple(decs)


def compose_w(psi: WiringMorphism, phi: WiringMorphism) -> WiringMorphism:
    """``psi o phi`` for ``phi: [n] -> [m]`` and ``psi: [m] -> [l]``."""
    if psi.operad is not phi.operad:
        raise DomainError("cannot compose morphisms of different operads")
    if psi.n != phi.m:
        raise DomainError(f"cannot compose [{psi.n}]->[{psi.m}] after [{phi.n}]->[{phi.m}]")
    out: dict = {}
    for k1, c1 in psi.terms.items():
        for k2, c2 in phi.terms.items():
            add_into(out, {_compose_basic(psi.operad, k1, k2, phi.n, psi.m): c1 * c2})
    return WiringMorphism(psi.operad, phi.n, psi.m, out)


def _act_basic(P: OperadId, key: Key, factors: Sequence[Monomial], n_vars: int) -> tuple[Monomial, ...]:
    values, decs = key
    out = []
    for i, fib in enumerate(_fibers(values, len(decs))):
        if not fib:
            out.append(unit(P, n_vars))
        else:
            out.append(multiply(decs[i], [factors[a - 1] for a in fib]))
    return tuple(out)


def act(phi: WiringMorphism, t: TensorElement) -> TensorElement:
    """The induced map on tensor powers of the free algebra."""
    if t.operad is not phi.operad:
        raise DomainError("tensor and morphism use different operads")
    if t.power != phi.n:
        raise DomainError(f"morphism from [{phi.n}] cannot act on a tensor of power {t.power}")
    out: dict = {}
    for key, c in phi.terms.items():
        for factors, a in t.coeffs.items():
            add_into(out, {_act_basic(phi.operad, key, factors, t.n): c * a})
    return TensorElement(t.operad, t.n, phi.m, t.D, out)


def hom_basis(P, n: int, m: int, cap: int = DEFAULT_CAP) -> list[WiringMorphism]:
    """Every (function, decoration) pair ``[n] -> [m]``."""
    P = OperadId.parse(P)
    check_cap(cap, n, m)
    out = []
    for f in maps(n, m, cap=cap):
        fibs = f.fibers()
        choices = [opd.basis(P, len(fib)) for fib in fibs]
        if P is OperadId.TRIVIAL and not f.is_bijective:
            continue
        for decs in itertools.product(*choices):
            out.append(WiringMorphism(P, n, m, {(f.values, decs): 1}))
    return out


def hom_dimension(P, n: int, m: int, cap: int = DEFAULT_CAP) -> int:
    return len(hom_basis(P, n, m, cap))


def permutation_morphism(P, perm: Sequence[int]) -> WiringMorphism:
    """The bijection ``j -> perm[j-1]`` with identity decorations."""
    return WiringMorphism.basic(P, FiniteMap(len(perm), len(perm), tuple(perm)))


def key_of(phi: WiringMorphism) -> Key:
    """The unique basis key of a pure morphism."""
    if len(phi.terms) != 1:
        raise DomainError("not a basis morphism")
    return next(iter(phi.terms))


# --- independent check of the hom-space description -------------------------

def rename_variables(mono: Monomial, sigma: Sequence[int]) -> Monomial:
    """Substitute ``x_i -> x_{sigma[i-1]}``."""
    if mono.operad in (OperadId.COM, OperadId.COMNU):
        exps = [0] * mono.n
        for i, a in enumerate(mono.payload):
            exps[sigma[i] - 1] += a
        return Monomial(mono.operad, mono.n, tuple(exps))
    return Monomial(mono.operad, mono.n, tuple(sigma[a - 1] for a in mono.payload))


def multilinear_basis(P, N: int, n: int, m: int) -> list[tuple[Monomial, ...]]:
    """m-tuples of monomials in ``N`` variables of total weight ``1^n 0^{N-n}``."""
    P = OperadId.parse(P)
    target = tuple([1] * n + [0] * (N - n))
    out = []
    for degs in _compositions(n, m):
        pools = [[x for x in free_basis(P, N, d) if all(w <= 1 for w in x.weight) and not any(x.weight[n:])] for d in degs]
        for combo in itertools.product(*pools):
            w = tuple(map(sum, zip(*(x.weight for x in combo)))) if combo else (0,) * N
            if w == target:
                out.append(combo)
    return out


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@dataclass
class OracleResult:
    dimension: int
    basis: list[dict]
    hom_count: int
    matching: dict
    spans: bool
    extra_weight_ok: bool

    @property
    def agrees(self) -> bool:
        return (self.dimension == self.hom_count and self.spans and self.extra_weight_ok
                and len(self.matching) == self.hom_count
                and len(set(self.matching.values())) == self.hom_count)


def schur_weyl_oracle(P, n: int, m: int, D: int | None = None, N: int | None = None,
                      cap: int = DEFAULT_CAP) -> OracleResult:
    """Solve for the S_n-equivariant maps between 1^n weight spaces directly.

    Unknowns are the matrix entries ``A[y, s]`` from permutation tensors ``s``
    of generators to multilinear tensors ``y``; the equations say ``A``
    commutes with relabelling variables.  The solution space is compared with
    the images of ``hom_basis`` morphisms under ``act``.
    """
    P = OperadId.parse(P)
    N = max(n, 1) if N is None else N
    D = n if D is None else D
    if N < n:
        raise PreconditionError(f"need N >= n, got N={N}, n={n}")
    if D < n:
        raise PreconditionError(f"need D >= n, got D={D}, n={n}")
    check_cap(cap, n, m)
    perms = list(itertools.permutations(range(1, n + 1)))
    sources = [tuple(generator(P, N, s) for s in p) for p in perms]
    targets = multilinear_basis(P, N, n, m)
    tindex = {y: k for k, y in enumerate(targets)}
    sindex = {s: k for k, s in enumerate(sources)}

    def full(sigma):
        return tuple(sigma) + tuple(range(n + 1, N + 1))

    gens = [full(tuple(range(1, i)) + (i + 1, i) + tuple(range(i + 2, n + 1))) for i in range(1, n)]
    unknowns = [(y, s) for y in range(len(targets)) for s in range(len(sources))]
    equations = []
    for tau in gens:
        for y, ty in enumerate(targets):
            ny = tindex[tuple(rename_variables(x, tau) for x in ty)]
            for s, ts in enumerate(sources):
                ns = sindex[tuple(rename_variables(x, tau) for x in ts)]
                # (tau . A)(tau s) = tau . A(s)
                eq: dict = {}
                add_into(eq, {(ny, ns): 1})
                add_into(eq, {(y, s): -1})
                if eq:
                    equations.append(eq)
    solutions = sparse_nullspace(equations, unknowns)

    morphisms = hom_basis(P, n, m, cap)
    assignments = []
    matching = {}
    for idx, phi in enumerate(morphisms):
        vec: dict = {}
        for s, ts in enumerate(sources):
            img = act(phi, TensorElement(P, N, n, D, {ts: 1}))
            for key, c in img.coeffs.items():
                add_into(vec, {(tindex[key], s): c})
        assignments.append(vec)
        ident = act(phi, TensorElement(P, N, n, D, {sources[0]: 1}))
        if len(ident.coeffs) == 1:
            matching[idx] = tindex[next(iter(ident.coeffs))]
    sol_space = RowSpace(solutions)
    spans = (all(sol_space.contains(a) for a in assignments)
             and RowSpace(assignments).rank == len(solutions))

    extra_ok = True
    if n >= 2 and N >= 2:
        delta = gl_element(P, N, 1, 2)
        base = TensorElement(P, N, n, D, {sources[0]: 1})
        moved = apply_derivation(delta, base)
        for phi in morphisms:
            if act(phi, moved) != apply_derivation(delta, act(phi, base)):
                extra_ok = False
                break
    return OracleResult(len(solutions), solutions, len(morphisms), matching, spans, extra_ok)
