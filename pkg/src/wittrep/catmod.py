"""Finitely presented modules over the opposite of a wiring category.

Convention: a generator of degree ``d`` contributes ``W([n], [d])`` to the
value at ``[n]``, and a relation of degree ``e`` with entries
``rho_i in W([e], [d_i])`` sends ``phi in W([n], [e])`` to
``(rho_i o phi)_i``.  The value ``M([n])`` is the cokernel.  Permutations
act by precomposition with their inverses.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from . import operad as opd
from .combinatorics import (DEFAULT_CAP, FiniteMap, Partition, check_cap, class_representative,
                            partitions_of, weak_compositions, z_lambda)
from .errors import DomainError
from .linalg import RowSpace, add_into
from .operad import OperadElement, OperadId
from .symfunc import PolySeries, SymFunc
from .wiring import WiringMorphism, _compose_basic, _fibers, compose_w, hom_basis


@dataclass(frozen=True)
class Relation:
    degree: int
    entries: tuple  # one WiringMorphism (or None for zero) per generator

    def entry(self, i: int, P: OperadId, d: int) -> WiringMorphism:
        e = self.entries[i]
        return WiringMorphism.zero(P, self.degree, d) if e is None else e


@dataclass(frozen=True)
class ModulePresentation:
    operad: OperadId
    generators: tuple[int, ...]
    relations: tuple[Relation, ...] = ()

    def __post_init__(self):
        op = OperadId.parse(self.operad)
        object.__setattr__(self, "operad", op)
        gens = tuple(int(d) for d in self.generators)
        if any(d < 0 for d in gens):
            raise DomainError("generator degrees must be non-negative")
        object.__setattr__(self, "generators", gens)
        rels = []
        for r in self.relations:
            if len(r.entries) != len(gens):
                raise DomainError(f"relation has {len(r.entries)} entries for {len(gens)} generators")
            for e, d in zip(r.entries, gens):
                if e is None:
                    continue
                if e.operad is not op or e.n != r.degree or e.m != d:
                    raise DomainError(f"relation entry [{e.n}]->[{e.m}] should be [{r.degree}]->[{d}]")
            rels.append(Relation(int(r.degree), tuple(r.entries)))
        object.__setattr__(self, "relations", tuple(rels))

    @classmethod
    def principal(cls, P, d: int) -> "ModulePresentation":
        return cls(OperadId.parse(P), (d,))

    @classmethod
    def zero(cls, P) -> "ModulePresentation":
        return cls(OperadId.parse(P), ())

    @property
    def is_free(self) -> bool:
        return all(all(e is None or e.is_zero() for e in r.entries) for r in self.relations)

    def to_json(self) -> dict:
        return {
            "operad": self.operad.value,
            "generators": list(self.generators),
            "relations": [
                {"degree": r.degree,
                 "entries": [None if e is None else e.to_json() for e in r.entries]}
                for r in self.relations
            ],
        }

    @classmethod
    def from_json(cls, data) -> "ModulePresentation":
        P = OperadId.parse(data["operad"])
        gens = tuple(int(d) for d in data.get("generators", []))
        rels = []
        for r in data.get("relations", []):
            entries = []
            for e in r["entries"]:
                if e is None:
                    entries.append(None)
                else:
                    e = dict(e)
                    e.setdefault("operad", P.value)
                    entries.append(WiringMorphism.from_json(e))
            rels.append(Relation(int(r["degree"]), tuple(entries)))
        return cls(P, gens, tuple(rels))

    @classmethod
    def loads(cls, text: str) -> "ModulePresentation":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainError(f"malformed presentation at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
        try:
            return cls.from_json(data)
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"invalid presentation: {exc}") from exc


# --- evaluation ---------------------------------------------------------------

def _relation_image(M: ModulePresentation, rel: Relation, phi_key) -> dict:
    vec: dict = {}
    P = M.operad
    for i, d in enumerate(M.generators):
        rho = rel.entries[i]
        if rho is None:
            continue
        for k, c in rho.terms.items():
            add_into(vec, {(i, _compose_basic(P, k, phi_key, None, d)): c})
    return vec


def _inverse(perm: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(perm)
    for j, p in enumerate(perm, start=1):
        out[p - 1] = j
    return tuple(out)


@dataclass
class EvaluatedModule:
    n: int
    labels: list
    dimension: int
    operad: OperadId = OperadId.COM
    _space: RowSpace | None = field(default=None, repr=False)
    _transpositions: list | None = field(default=None, repr=False)

    @property
    def transpositions(self) -> list:
        """Matrices of s_k = (k, k+1) for k = 1..n-1, built on first use."""
        if self._transpositions is None:
            self._transpositions = [self.action(adjacent_transposition(self.n, k)) for k in range(1, self.n)]
        return self._transpositions

    def _coords(self, vec: Mapping) -> list[Fraction]:
        red = self._space.reduce(vec) if self._space is not None else dict(vec)
        return [red.get(lab, Fraction(0)) for lab in self.labels]

    def _precompose(self, label, perm: Sequence[int]) -> dict:
        i, key = label
        sigma = FiniteMap(self.n, self.n, _inverse(perm))
        skey = (sigma.values, tuple(OperadElement(self.operad, 1) for _ in range(self.n)))
        return {(i, _compose_basic(self.operad, key, skey, self.n, len(key[1]))): Fraction(1)}

    def action(self, perm: Sequence[int]) -> list[list[Fraction]]:
        """Matrix (columns are images of basis labels) of a permutation."""
        perm = tuple(perm)
        if sorted(perm) != list(range(1, self.n + 1)):
            raise DomainError(f"{perm} is not a permutation of [{self.n}]")
        cols = [self._coords(self._precompose(lab, perm)) for lab in self.labels]
        return [list(row) for row in zip(*cols)] if cols else []

    def trace(self, perm: Sequence[int]) -> Fraction:
        total = Fraction(0)
        for idx, lab in enumerate(self.labels):
            red = self._space.reduce(self._precompose(lab, perm)) if self._space else self._precompose(lab, perm)
            total += red.get(lab, 0)
        return total

    def character(self) -> dict[Partition, Fraction]:
        return {mu: self.trace(class_representative(mu)) for mu in partitions_of(self.n)}


def adjacent_transposition(n: int, k: int) -> tuple[int, ...]:
    p = list(range(1, n + 1))
    p[k - 1], p[k] = p[k], p[k - 1]
    return tuple(p)


def evaluate(M: ModulePresentation, n: int, cap: int = DEFAULT_CAP) -> EvaluatedModule:
    """``M([n])`` as a cokernel, with the S_n action on it."""
    check_cap(cap, n)
    P = M.operad
    gen_keys = []
    for i, d in enumerate(M.generators):
        check_cap(cap, d)
        gen_keys.extend((i, next(iter(b.terms))) for b in hom_basis(P, n, d, cap))
    space = RowSpace()
    for rel in M.relations:
        for phi in hom_basis(P, n, rel.degree, cap):
            space.add(_relation_image(M, rel, next(iter(phi.terms))))
    pivots = space.pivots
    labels = [k for k in gen_keys if k not in pivots]
    return EvaluatedModule(n, labels, len(labels), P, space if space.rank else None)


def _matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def coxeter_ok(E: EvaluatedModule) -> bool:
    """Adjacent transpositions square to 1, commute when far apart, and braid."""
    dim = E.dimension
    one = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    s = E.transpositions
    for i, a in enumerate(s):
        if _matmul(a, a) != one:
            return False
        for j in range(i + 1, len(s)):
            b = s[j]
            if j == i + 1:
                if _matmul(_matmul(a, b), a) != _matmul(_matmul(b, a), b):
                    return False
            elif _matmul(a, b) != _matmul(b, a):
                return False
    return True


# --- characters ---------------------------------------------------------------

@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """Irreducible character value by removing border strips."""
    if lam.size != mu.size:
        raise DomainError("partitions of different sizes")
    if mu.size == 0:
        return 1
    r = mu.parts[0]
    rest = Partition(mu.parts[1:])
    ell = len(lam)
    beta = [lam.parts[i] + ell - 1 - i for i in range(ell)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new = sorted((bset - {b}) | {nb}, reverse=True)
        parts = [x - (ell - 1 - i) for i, x in enumerate(new)]
        total += (-1) ** height * mn_character(Partition(tuple(p for p in parts if p > 0)), rest)
    return total


def hook_dimension(lam: Partition) -> int:
    out = math.factorial(lam.size)
    for h in lam.hook_lengths():
        out //= h
    return out


def multiplicities_from_character(n: int, chi: Mapping[Partition, Fraction]) -> dict[Partition, int]:
    out = {}
    for lam in partitions_of(n):
        m = sum(Fraction(chi[mu]) * mn_character(lam, mu) / z_lambda(mu) for mu in partitions_of(n))
        if m.denominator != 1 or m < 0:
            raise DomainError(f"character is not a genuine representation (multiplicity {m})")
        if m:
            out[lam] = int(m)
    return out


def specht_multiplicities(E: EvaluatedModule) -> dict[Partition, int]:
    if E.dimension == 0:
        return {}
    return multiplicities_from_character(E.n, E.character())


def free_character_value(P: OperadId, d: int, mu: Partition) -> int:
    """Number of basis elements of ``W([n], [d])`` fixed by a permutation of type ``mu``."""
    n, ell = mu.size, len(mu)
    if P is OperadId.COM:
        return d ** ell
    if P is OperadId.COMNU:
        return math.factorial(d) * _stirling2(ell, d)
    if any(p > 1 for p in mu.parts):
        return 0
    if P is OperadId.AS:
        return math.prod(range(d, d + n)) if n else 1
    return math.factorial(n) if n == d else 0


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


def character_table(M: ModulePresentation, n: int, cap: int = DEFAULT_CAP) -> dict[Partition, Fraction]:
    """Trace of every conjugacy class on ``M([n])``."""
    if M.is_free:
        return {mu: Fraction(sum(free_character_value(M.operad, d, mu) for d in M.generators))
                for mu in partitions_of(n)}
    return evaluate(M, n, cap).character()


def formal_character(M: ModulePresentation, D: int, cap: int = DEFAULT_CAP) -> SymFunc:
    """``sum_n sum_lambda m_lambda s_lambda`` over evaluations up to ``D``."""
    check_cap(cap, D)
    coeffs = {}
    for n in range(D + 1):
        for lam, m in multiplicities_from_character(n, character_table(M, n, cap)).items():
            coeffs[lam] = m
    return SymFunc(D, "s", coeffs)


# --- specialization through coinvariants -------------------------------------

def _blocks(beta: Sequence[int]) -> list[int]:
    out = []
    for alpha, b in enumerate(beta, start=1):
        out.extend([alpha] * b)
    return out


def _orbit_key(key, blocks: Sequence[int], ordered: bool):
    values, decs = key
    out = []
    for fib, dec in zip(_fibers(values, len(decs)), decs):
        if ordered:
            out.append(tuple(blocks[fib[j - 1] - 1] for j in dec.sequence()))
        else:
            out.append(tuple(sorted(blocks[a - 1] for a in fib)))
    return tuple(out)


def _multiset_perms(items: Sequence[int]):
    return sorted(set(itertools.permutations(items)))


def _orbit_representatives(P: OperadId, beta: Sequence[int], d: int):
    """One basis morphism ``[k] -> [d]`` per orbit of the Young subgroup of ``beta``."""
    n = len(beta)
    ordered = P is OperadId.AS
    offsets = [sum(beta[:a]) for a in range(n)]
    k = sum(beta)
    if P is OperadId.TRIVIAL and k != d:
        return
    # counts[i][alpha]: how many elements of block alpha go to target i
    per_block = [list(weak_compositions(b, d)) for b in beta]
    for choice in itertools.product(*per_block):
        counts = [[choice[a][i] for a in range(n)] for i in range(d)]
        sizes = [sum(c) for c in counts]
        if P is OperadId.COMNU and 0 in sizes:
            continue
        if P is OperadId.TRIVIAL and any(s != 1 for s in sizes):
            continue
        multisets = [tuple(a + 1 for a in range(n) for _ in range(counts[i][a])) for i in range(d)]
        words = [(_multiset_perms(ms) if ordered else [ms]) for ms in multisets]
        for wchoice in itertools.product(*words):
            nxt = list(offsets)
            values = [0] * k
            seqs = []
            for i, word in enumerate(wchoice, start=1):
                elems = []
                for alpha in word:
                    nxt[alpha - 1] += 1
                    values[nxt[alpha - 1] - 1] = i
                    elems.append(nxt[alpha - 1])
                seqs.append(elems)
            decs = []
            for elems in seqs:
                if ordered:
                    rank = {a: j for j, a in enumerate(sorted(elems), start=1)}
                    decs.append(opd.from_sequence([rank[a] for a in elems]))
                else:
                    decs.append(OperadElement(P, len(elems)))
            yield (tuple(values), tuple(decs)), tuple(wchoice)


def coinvariant_dimension(M: ModulePresentation, beta: Sequence[int]) -> int:
    """``dim M([k])`` coinvariants for the Young subgroup ``S_beta``."""
    P = M.operad
    ordered = P is OperadId.AS
    blocks = _blocks(beta)
    gens = set()
    for i, d in enumerate(M.generators):
        for _, okey in _orbit_representatives(P, beta, d):
            gens.add((i, okey))
    if not gens:
        return 0
    space = RowSpace()
    for rel in M.relations:
        for key, _ in _orbit_representatives(P, beta, rel.degree):
            img = _relation_image(M, rel, key)
            vec: dict = {}
            for (i, k), c in img.items():
                add_into(vec, {(i, _orbit_key(k, blocks, ordered)): c})
            space.add(vec)
    return len(gens) - space.rank


def specialized_character(M: ModulePresentation, n: int, D: int) -> PolySeries:
    """Character of the specialization to ``n`` variables, truncated at ``D``."""
    if n < 1:
        raise DomainError("need at least one variable")
    coeffs = {}
    for k in range(D + 1):
        for beta in weak_compositions(k, n):
            dim = coinvariant_dimension(M, beta)
            if dim:
                coeffs[tuple(beta)] = dim
    return PolySeries(n, D, coeffs)


def hilbert_specialized(M: ModulePresentation, n: int, D: int) -> PolySeries:
    """Hilbert series of the ``n``-variable specialization in one variable ``t``."""
    return specialized_character(M, n, D).collapse()
