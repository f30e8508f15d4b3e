"""Schur functors of the free algebra, specialization to ``n`` variables, the
lift back, generation-degree experiments and the named verification scenarios.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .catmod import ModulePresentation, Relation, hilbert_specialized, hook_dimension, specialized_character
from .combinatorics import Partition, maps, sign, weak_compositions
from .errors import DomainError, PreconditionError
from .freealg import (Derivation, Monomial, TensorElement, apply_derivation, bracket, derive_monomial,
                      free_basis, generator, unit, witt_L)
from .linalg import RowSpace, add_into, nullspace
from .operad import OperadId
from .symfunc import Factor, PolySeries, RationalForm, SymFunc, expand, fit_rational
from .wiring import WiringMorphism, act, compose_w, hom_basis, permutation_morphism

# --- tensors ------------------------------------------------------------------


def tensor_basis(P, n: int, power: int, degree: int) -> list[tuple[Monomial, ...]]:
    """Pure tensors of monomials in ``n`` variables with the given total degree."""
    P = OperadId.parse(P)
    out = []
    for degs in weak_compositions(degree, power):
        pools = [free_basis(P, n, d) for d in degs]
        out.extend(itertools.product(*pools))
    return out


def tensor_weight(key: Sequence[Monomial]) -> tuple[int, ...]:
    return tuple(map(sum, zip(*(m.weight for m in key))))


def _permute_factors(t: TensorElement, perm: Sequence[int]) -> dict:
    """Factor ``a`` moves to slot ``perm[a-1]``."""
    out = {}
    for key, c in t.coeffs.items():
        new = [None] * len(key)
        for a, m in enumerate(key):
            new[perm[a] - 1] = m
        add_into(out, {tuple(new): c})
    return out


# --- Young symmetrizers -------------------------------------------------------

def canonical_tableau(lam: Partition) -> list[list[int]]:
    rows, start = [], 1
    for p in lam.parts:
        rows.append(list(range(start, start + p)))
        start += p
    return rows


def _group_from_blocks(blocks: Sequence[Sequence[int]], size: int) -> list[tuple[int, ...]]:
    """All permutations of ``[size]`` preserving each block."""
    out = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = list(range(1, size + 1))
        for block, image in zip(blocks, choice):
            for a, b in zip(block, image):
                perm[a - 1] = b
        out.append(tuple(perm))
    return out


def _compose_perm(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """``p o q``."""
    return tuple(p[x - 1] for x in q)


def young_symmetrizer_element(lam: Partition) -> dict[tuple[int, ...], Fraction]:
    """``c = a o b`` in the group algebra (row sum after signed column sum)."""
    tab = canonical_tableau(lam)
    d = lam.size
    rows = _group_from_blocks(tab, d)
    cols = _group_from_blocks([[x for x in c if x is not None] for c in itertools.zip_longest(*tab)], d) if tab else [()]
    out: dict = {}
    for r in rows:
        for c in cols:
            add_into(out, {_compose_perm(r, c): Fraction(sign(c))})
    return out


def young_idempotent(lam: Partition) -> dict[tuple[int, ...], Fraction]:
    scale = Fraction(hook_dimension(lam), math.factorial(lam.size))
    return {p: scale * c for p, c in young_symmetrizer_element(lam).items()}


def young_symmetrizer_morphism(P, lam: Partition, idempotent: bool = True) -> WiringMorphism:
    P = OperadId.parse(P)
    elem = young_idempotent(lam) if idempotent else young_symmetrizer_element(lam)
    out = WiringMorphism.zero(P, lam.size, lam.size)
    for perm, c in elem.items():
        out = out + permutation_morphism(P, perm) * c
    return out


def apply_group_element(elem: Mapping, t: TensorElement) -> TensorElement:
    out: dict = {}
    for perm, c in elem.items():
        add_into(out, _permute_factors(t, perm), c)
    return TensorElement(t.operad, t.n, t.power, t.D, out)


def _symmetrize_tensor(t: TensorElement) -> TensorElement:
    """Averaging over all factor permutations, via orbits of the factor tuples."""
    out: dict = {}
    for key, c in t.coeffs.items():
        orbit = set(itertools.permutations(key))
        for k in orbit:
            add_into(out, {k: c / len(orbit)})
    return TensorElement(t.operad, t.n, t.power, t.D, out)


def apply_idempotent(lam: Partition, t: TensorElement) -> TensorElement:
    if len(lam) == 1:
        return _symmetrize_tensor(t)
    return apply_group_element(young_idempotent(lam), t)


@dataclass
class SchurModuleBasis:
    lam: Partition
    operad: OperadId
    n: int
    D: int
    basis: list[TensorElement]
    min_factor_degree: int = 0

    def dims_by_degree(self) -> list[int]:
        out = [0] * (self.D + 1)
        for t in self.basis:
            (deg,) = t.degrees()
            out[deg] += 1
        return out

    def dims_by_weight(self) -> dict[tuple[int, ...], int]:
        out: dict = {}
        for t in self.basis:
            w = tensor_weight(next(iter(t.coeffs)))
            out[w] = out.get(w, 0) + 1
        return out


def young_symmetrizer_image(lam: Partition, P, n: int, D: int, min_factor_degree: int = 0) -> SchurModuleBasis:
    """Basis of the Schur functor of the free algebra, degrees ``<= D``.

    Each basis vector is weight-homogeneous.  ``min_factor_degree=1`` with
    ``D = |lam|`` restricts to the Schur functor of the degree-one part.
    """
    P = OperadId.parse(P)
    k = lam.size
    basis = []
    if k == 0:
        return SchurModuleBasis(lam, P, n, D, [TensorElement(P, n, 0, D, {(): 1})], min_factor_degree)
    c = young_symmetrizer_element(lam)
    for deg in range(D + 1):
        by_weight: dict = {}
        for key in tensor_basis(P, n, k, deg):
            if any(m.degree < min_factor_degree for m in key):
                continue
            by_weight.setdefault(tensor_weight(key), []).append(key)
        for w, keys in sorted(by_weight.items(), reverse=True):
            space = RowSpace()
            for key in keys:
                space.add(apply_group_element(c, TensorElement(P, n, k, D, {key: 1})).coeffs)
            for row in space.rows():
                basis.append(TensorElement(P, n, k, D, row))
    return SchurModuleBasis(lam, P, n, D, basis, min_factor_degree)


def gamma_n_character(ch: SymFunc, n: int) -> SymFunc:
    """Drop the Schur terms with more than ``n`` rows."""
    s = ch.convert("s")
    return SymFunc(s.D, "s", {lam: c for lam, c in s.coeffs.items() if len(lam) <= n})


# --- presentations over h_n and the lift --------------------------------------

@dataclass(frozen=True)
class SchurPresentation:
    """Cokernel of a map of sums of Schur functors of the ``n``-variable free algebra.

    A relation ``(mu, entries)`` maps ``S_mu`` to ``S_{lam_i}`` by
    ``e_{lam_i} o rho_i o e_mu`` with ``rho_i in W([|mu|], [|lam_i|])``.
    """

    operad: OperadId
    n: int
    generators: tuple[Partition, ...]
    relations: tuple[tuple[Partition, tuple], ...] = ()


def _right_idempotent(rho: WiringMorphism, mu: Partition) -> WiringMorphism:
    """``rho o e_mu``."""
    k = mu.size
    if len(mu) == 1 and rho.operad in (OperadId.COM, OperadId.COMNU):
        # average over the orbit of each map under precomposition
        out: dict = {}
        for (values, decs), c in rho.terms.items():
            orbit = set(itertools.permutations(values))
            for v in orbit:
                add_into(out, {(v, decs): c / len(orbit)})
        return WiringMorphism(rho.operad, rho.n, rho.m, out)
    return compose_w(rho, young_symmetrizer_morphism(rho.operad, mu))


def delta_n_presentation(S: SchurPresentation) -> ModulePresentation:
    """Lift to a presentation over the wiring category.

    Each generator ``lam`` becomes a generator in degree ``|lam|`` cut down
    by the relation ``1 - e_lam``; each relation becomes ``rho o e_mu`` (the
    left idempotent is already implied by the cut-down generators).
    """
    P = OperadId.parse(S.operad)
    for lam in S.generators:
        if len(lam) > S.n:
            raise PreconditionError(f"generator {lam.parts} has more than {S.n} rows")
    for mu, _ in S.relations:
        if len(mu) > S.n:
            raise PreconditionError(f"relation source {mu.parts} has more than {S.n} rows")
    gens = tuple(lam.size for lam in S.generators)
    rels = []
    for i, lam in enumerate(S.generators):
        if lam.size == 0:
            continue
        cut = WiringMorphism.identity(P, lam.size) - young_symmetrizer_morphism(P, lam)
        if not cut.is_zero():
            rels.append(Relation(lam.size, tuple(cut if j == i else None for j in range(len(gens)))))
    for mu, entries in S.relations:
        rels.append(Relation(mu.size, tuple(None if e is None else _right_idempotent(e, mu) for e in entries)))
    return ModulePresentation(P, gens, tuple(rels))


def schur_cokernel_dims(S: SchurPresentation, D: int) -> dict[tuple[int, ...], int]:
    """Weight-space dimensions of the ``h_n``-module itself, from tensors."""
    P, n = OperadId.parse(S.operad), S.n
    out = {}
    for deg in range(D + 1):
        gen_space: dict = {}
        rel_space: dict = {}
        for i, lam in enumerate(S.generators):
            for key in tensor_basis(P, n, lam.size, deg):
                t = apply_idempotent(lam, TensorElement(P, n, lam.size, D, {key: 1}))
                w = tensor_weight(key)
                gen_space.setdefault(w, RowSpace()).add({(i, k): c for k, c in t.coeffs.items()})
        for mu, entries in S.relations:
            for key in tensor_basis(P, n, mu.size, deg):
                src = apply_idempotent(mu, TensorElement(P, n, mu.size, D, {key: 1}))
                vec: dict = {}
                for i, rho in enumerate(entries):
                    if rho is None:
                        continue
                    img = apply_idempotent(S.generators[i], act(rho, src))
                    add_into(vec, {(i, k): c for k, c in img.coeffs.items()})
                rel_space.setdefault(tensor_weight(key), RowSpace()).add(vec)
        for w, space in gen_space.items():
            dim = space.rank - (rel_space[w].rank if w in rel_space else 0)
            if dim:
                out[w] = dim
    return out


def unit_isomorphism_check(S: SchurPresentation, D: int) -> dict:
    """Compare the ``h_n``-module with the specialization of its lift, weight by weight."""
    lifted = delta_n_presentation(S)
    direct = schur_cokernel_dims(S, D)
    spec = specialized_character(lifted, S.n, D)
    via_lift = {k: int(v) for k, v in spec.coeffs.items() if v}
    degrees = {}
    for deg in range(D + 1):
        a = sum(v for w, v in direct.items() if sum(w) == deg)
        b = sum(v for w, v in via_lift.items() if sum(w) == deg)
        degrees[deg] = (a, b)
    return {"ok": direct == via_lift, "by_degree": degrees, "direct": direct, "lifted": via_lift}


# --- generation ----------------------------------------------------------------

def witt_terms(P, n: int, max_degree: int, min_degree: int | None = None) -> list[Derivation]:
    """Every ``x^a d_i`` with ``min_degree <= deg - 1 <= max_degree``."""
    P = OperadId.parse(P)
    if min_degree is None:
        min_degree = 0 if P is OperadId.COMNU else -1
    out = []
    for g in range(min_degree, max_degree + 1):
        for f in free_basis(P, n, g + 1):
            for i in range(1, n + 1):
                out.append(Derivation.term(f, i))
    return out


def _homogeneous_parts(t: TensorElement) -> list[dict]:
    parts: dict = {}
    for key, c in t.coeffs.items():
        parts.setdefault(tensor_weight(key), {})[key] = c
    return list(parts.values())


def _host_dims(P, n: int, power: int, D: int, allowed) -> dict[int, int]:
    out = {}
    for deg in range(D + 1):
        out[deg] = sum(1 for key in tensor_basis(P, n, power, deg) if allowed(tensor_weight(key)))
    return out


@dataclass
class ClosureReport:
    by_degree: dict  # degree -> (closure dim, host dim)
    spanned: dict  # degree -> bool

    @property
    def all_spanned(self) -> bool:
        return all(self.spanned.values())


def generation_closure(seed: Sequence[TensorElement], terms: Sequence[Derivation], D: int,
                       host_dims: Mapping[int, int] | None = None,
                       allowed: Callable[[tuple], bool] | None = None) -> ClosureReport:
    """Saturate the span of ``seed`` under the derivation ``terms`` up to degree ``D``.

    Seeds are split into weight spaces first; this stays inside the closure
    because the diagonal ``x_i d_i`` lie in every algebra used here.  Only
    weights passing ``allowed`` count towards the report, but the search runs
    through every weight.
    """
    allowed = allowed or (lambda w: True)
    seed = [t for t in seed if not t.is_zero()]
    if not seed and host_dims is None:
        raise DomainError("empty seed needs explicit host dimensions")
    spaces: dict = {}
    queue: deque = deque()
    proto = seed[0] if seed else None

    def push(vec: dict):
        key = next(iter(vec))
        w = tensor_weight(key)
        sp = spaces.setdefault(w, RowSpace())
        if sp.add(vec):
            queue.append((sum(w), vec))

    for t in seed:
        for part in _homogeneous_parts(t):
            if sum(tensor_weight(next(iter(part)))) <= D:
                push(part)
    term_list = [(next(iter(d.degrees())), d) for d in terms]
    while queue:
        deg, vec = queue.popleft()
        t = TensorElement(proto.operad, proto.n, proto.power, D, vec)
        for g, d in term_list:
            if deg + g > D or deg + g < 0:
                continue
            img = apply_derivation(d, t, D)
            if not img.is_zero():
                push(dict(img.coeffs))
    if host_dims is None:
        host_dims = _host_dims(proto.operad, proto.n, proto.power, D, allowed)
    by_degree, spanned = {}, {}
    for deg in range(D + 1):
        got = sum(sp.rank for w, sp in spaces.items() if sum(w) == deg and allowed(w))
        by_degree[deg] = (got, host_dims.get(deg, 0))
        spanned[deg] = got == host_dims.get(deg, 0)
    return ClosureReport(by_degree, spanned)


def tensor_power_generation(d: int, D: int = 6, P="Com") -> ClosureReport:
    """Close the degree-one tensors of ``d`` variables under all derivations and
    count what lands in the one-variable tensor power ``V_1^{(x)d}``.
    """
    P = OperadId.parse(P)
    n = max(d, 1)
    seed = [TensorElement.pure([generator(P, n, i) for i in key], D)
            for key in itertools.product(range(1, n + 1), repeat=d)]
    only_first = lambda w: not any(w[1:])
    return generation_closure(seed, witt_terms(P, n, D), D, allowed=only_first)


def schur_generation(lam: Partition, n: int, D: int = 6, P="Com") -> ClosureReport:
    """Does the degree-one part of ``S_lam`` generate ``S_lam`` up to degree ``D``?"""
    P = OperadId.parse(P)
    top = young_symmetrizer_image(lam, P, n, lam.size, min_factor_degree=1).basis
    host = young_symmetrizer_image(lam, P, n, D).dims_by_degree()
    return generation_closure(top, witt_terms(P, n, D), D, host_dims=dict(enumerate(host))) if top else \
        ClosureReport({deg: (0, host[deg]) for deg in range(D + 1)},
                      {deg: host[deg] == 0 for deg in range(D + 1)})


# --- scenarios -------------------------------------------------------------------

def _d_poly(poly: Mapping, m: int) -> dict:
    """Differential of a polynomial as ``{(monomial, j): coeff}`` meaning ``coeff * monomial dx_j``."""
    out: dict = {}
    for j in range(1, m + 1):
        dj = Derivation.term(unit(OperadId.COM, m), j)
        for mono, c in poly.items():
            for new, a in derive_monomial(dj, mono).items():
                add_into(out, {(new, j): c * a})
    return out


def _omega(m: int, b: int) -> dict:
    exps = tuple(0 if a == b else 1 for a in range(1, m + 1))
    return {(Monomial(OperadId.COM, m, exps), b): Fraction(1)}


def kaehler_check(max_size: int = 4) -> dict:
    """Pull back ``omega_j`` along every ``f: [m] -> [n]`` via the substitution that ``f`` induces."""
    checked = failures = 0
    for n in range(1, max_size + 1):
        for m in range(1, max_size + 1):
            xs = TensorElement.pure([generator(OperadId.COM, m, a) for a in range(1, m + 1)])
            for f in maps(m, n, cap=max_size):
                (images,) = act(WiringMorphism.basic(OperadId.COM, f), xs).coeffs
                for j in range(1, n + 1):
                    others = [images[i].payload for i in range(n) if i != j - 1]
                    coeff = Monomial(OperadId.COM, m, tuple(map(sum, zip(*others))) if others else (0,) * m)
                    pulled: dict = {}
                    for (mono, b), c in _d_poly({images[j - 1]: Fraction(1)}, m).items():
                        prod = Monomial(OperadId.COM, m, tuple(x + y for x, y in zip(mono.payload, coeff.payload)))
                        add_into(pulled, {(prod, b): c})
                    expected: dict = {}
                    for b in f.fiber(j):
                        add_into(expected, _omega(m, b))
                    checked += 1
                    if pulled != expected:
                        failures += 1
    return {"ok": failures == 0, "checked": checked, "failures": failures}


def ideal_generator(n: int, D: int) -> TensorElement:
    """``(x - y)^n`` inside ``k[x] (x) k[x] = k[x, y]``."""
    coeffs = {}
    for j in range(n + 1):
        coeffs[(Monomial(OperadId.COM, 1, (n - j,)), Monomial(OperadId.COM, 1, (j,)))] = (-1) ** j * math.comb(n, j)
    return TensorElement(OperadId.COM, 1, 2, D, coeffs)


def _ideal_piece(n: int, d: int, D: int) -> RowSpace:
    space = RowSpace()
    if d < n:
        return space
    g = ideal_generator(n, D)
    for a in range(d - n + 1):
        b = d - n - a
        vec: dict = {}
        for (u, v), c in g.coeffs.items():
            add_into(vec, {(Monomial(OperadId.COM, 1, (u.payload[0] + a,)),
                            Monomial(OperadId.COM, 1, (v.payload[0] + b,))): c})
        space.add(vec)
    return space


def ideal_chain_dims(n_max: int, D: int) -> dict:
    """Graded dimensions of the ideals ``((x - y)^n)``, strictness and closure under ``W_1``."""
    table = {n: [_ideal_piece(n, d, D).rank for d in range(D + 1)] for n in range(n_max + 1)}
    strict = all(table[n][d] > table[n + 1][d]
                 for d in range(1, D + 1) for n in range(1, min(n_max, d)))
    closed = True
    for n in range(1, n_max + 1):
        pieces = {d: _ideal_piece(n, d, D) for d in range(D + 1)}
        for d in range(n, D + 1):
            for row in pieces[d].rows():
                t = TensorElement(OperadId.COM, 1, 2, D, row)
                for k in range(-1, D - d + 1):
                    img = apply_derivation(witt_L(k), t, D)
                    if not img.is_zero() and not pieces[d + k].contains(img.coeffs):
                        closed = False
    return {"dims": table, "strict": strict, "closed": closed}


def adjoint_witness() -> dict:
    v = witt_L(2)
    L = witt_L
    rel1 = bracket(L(3), bracket(L(1), v))
    rel2 = bracket(L(2), bracket(L(2), v))
    rel3 = bracket(L(1), bracket(L(1), bracket(L(2), v)))
    x = Monomial(OperadId.COMNU, 1, (1,))
    e = TensorElement.pure([x, x], 6)

    def lift(k):
        return Derivation.term(Monomial(OperadId.COMNU, 1, (k + 1,)), 1)

    def run(word, t):
        for k in reversed(word):
            t = apply_derivation(lift(k), t, 6)
        return t

    span = [run(w, e) for w in [(3, 1), (2, 2), (1, 1, 2)]]
    sym2 = young_symmetrizer_image(Partition((2,)), OperadId.COMNU, 1, 6)
    dim6 = sym2.dims_by_degree()[6]
    sym_space = RowSpace(t.coeffs for t in sym2.basis)
    span_rank = RowSpace(t.coeffs for t in span).rank
    inside = all(sym_space.contains(t.coeffs) for t in span)
    return {
        "ok": rel1.is_zero() and rel2.is_zero() and rel3.is_zero() and dim6 == 3 and span_rank == 3 and inside,
        "relations_zero": [rel1.is_zero(), rel2.is_zero(), rel3.is_zero()],
        "sym2_degree6": dim6,
        "spanning_rank": span_rank,
    }


def growth_dims(D: int = 12) -> dict:
    """True graded dimensions of the exterior square and symmetric cube of ``V_1``."""
    wedge = young_symmetrizer_image(Partition((1, 1)), OperadId.COMNU, 1, D).dims_by_degree()
    sym3 = young_symmetrizer_image(Partition((3,)), OperadId.COMNU, 1, D).dims_by_degree()
    return {"wedge2": wedge, "sym3": sym3}


WEDGE2_TARGET = RationalForm(1, {(3,): Fraction(1)}, (Factor(1, 1), Factor(1, 2)))


def wedge2_presentation() -> ModulePresentation:
    """The exterior square as a cut-down principal projective of the surjection category."""
    cut = WiringMorphism.identity(OperadId.COMNU, 2) - young_symmetrizer_morphism(OperadId.COMNU, Partition((1, 1)))
    return ModulePresentation(OperadId.COMNU, (2,), (Relation(2, (cut,)),))


def wedge2_scenario(D: int = 12, holdout: int = 5) -> dict:
    direct = young_symmetrizer_image(Partition((1, 1)), OperadId.COMNU, 1, D).dims_by_degree()
    via_module = [int(c) for c in hilbert_specialized(wedge2_presentation(), 1, D).coefficient_list()]
    series = PolySeries.from_list(direct, D)
    fit = fit_rational(series, 2, 3, holdout=holdout)
    matches = fit.success and expand(fit.form, D) == expand(WEDGE2_TARGET, D)
    return {
        "ok": direct[2] == 0 and direct == via_module and matches and fit.form.max_exponent <= 2,
        "degree2": direct[2],
        "coefficients": direct,
        "fit": str(fit.form) if fit.form else None,
        "heldout": fit.heldout,
    }


def wedge2_schur_presentation(D: int = 8) -> SchurPresentation:
    """``Sym^3(V_1)`` modulo the kernel of its map onto the exterior square, up to degree ``D``.

    The map is induced by ``x_a (x) x_b (x) x_c -> x_a (x) x_b x_c - x_a x_b (x) x_c``;
    each kernel vector in degree ``e`` becomes a relation out of ``Sym^e``.
    """
    P = OperadId.COMNU
    psi = WiringMorphism.basic(P, (1, 2, 2), 2) - WiringMorphism.basic(P, (1, 1, 2), 2)
    three = Partition((3,))
    rels = []
    for e in range(4, D + 1):
        sym = [t for t in young_symmetrizer_image(three, P, 1, e).basis if t.degrees() == {e}]
        images = [act(psi, t).coeffs for t in sym]
        # kernel of psi on the symmetric tensors of degree e
        keys = sorted({k for im in images for k in im}, key=lambda k: [m.payload for m in k])
        matrix = [[im.get(k, 0) for im in images] for k in keys]
        kernel = nullspace(matrix, len(images)) if matrix else [[Fraction(int(i == j)) for i in range(len(images))] for j in range(len(images))]
        for vec in kernel:
            elt: dict = {}
            for c, t in zip(vec, sym):
                add_into(elt, t.coeffs, c)
            rho = WiringMorphism.zero(P, e, 3)
            for key, c in elt.items():
                sizes = [m.degree for m in key]
                values = tuple(i + 1 for i, s in enumerate(sizes) for _ in range(s))
                rho = rho + WiringMorphism.basic(P, values, 3) * c
            rels.append((Partition((e,)), (rho,)))
    return SchurPresentation(P, 1, (three,), tuple(rels))


def sample_presentations() -> dict[str, SchurPresentation]:
    P, Q = OperadId.COMNU, OperadId.COM
    return {
        "free(1),n=1": SchurPresentation(P, 1, (Partition((1,)),)),
        "free(2),n=2": SchurPresentation(P, 2, (Partition((2,)),)),
        "free(1,1),n=2": SchurPresentation(P, 2, (Partition((1, 1)),)),
        "free(2),Com,n=1": SchurPresentation(Q, 1, (Partition((2,)),)),
        "zero": SchurPresentation(P, 1, ()),
        "sym3/kernel,n=1": wedge2_schur_presentation(8),
    }


def end_ring_dimension(P, lam: Partition) -> int:
    """``dim e_lam W([d], [d]) e_lam``: endomorphisms of the Schur functor of the free algebra."""
    e = young_symmetrizer_morphism(P, lam)
    space = RowSpace()
    for phi in hom_basis(P, lam.size, lam.size):
        space.add(compose_w(compose_w(e, phi), e).terms)
    return space.rank


def end_ring_scenario() -> dict:
    shapes = [Partition((1,)), Partition((2,)), Partition((1, 1))]
    comnu = {str(lam.parts): end_ring_dimension(OperadId.COMNU, lam) for lam in shapes}
    com = {str(lam.parts): end_ring_dimension(OperadId.COM, lam) for lam in shapes}
    return {"ok": all(v == 1 for v in comnu.values()), "ComNu": comnu, "Com": com}


def generation_scenario(D: int = 6) -> dict:
    tensor = {d: tensor_power_generation(d, D).all_spanned for d in (1, 2)}
    schur = {}
    for lam in [Partition((1,)), Partition((2,)), Partition((1, 1))]:
        for n in (1, 2):
            if len(lam) <= n:
                for P in (OperadId.COM, OperadId.COMNU):
                    schur[f"{P.value}{lam.parts},n={n}"] = schur_generation(lam, n, D, P).all_spanned
    unit = {name: unit_isomorphism_check(S, 8)["ok"] for name, S in sample_presentations().items()}
    ok = all(tensor.values()) and all(schur.values()) and all(unit.values())
    return {"ok": ok, "tensor_powers": tensor, "schur": schur, "unit_isomorphism": unit}


def kaehler_scenario() -> dict:
    return kaehler_check(4)


def ideal_chain_scenario() -> dict:
    out = ideal_chain_dims(5, 10)
    out["ok"] = out["strict"] and out["closed"]
    return out


SCENARIOS = {
    "kaehler": kaehler_scenario,
    "ideal-chain": ideal_chain_scenario,
    "adjoint-witness": adjoint_witness,
    "wedge2": wedge2_scenario,
    "generation": generation_scenario,
    "end-ring": end_ring_scenario,
}
