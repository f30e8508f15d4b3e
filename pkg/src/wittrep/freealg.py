"""Free algebras on ``n`` generators, their tensor powers, and derivations.

Elements of the free algebra are sparse dicts ``Monomial -> Fraction``.  A
derivation is stored through the images of the generators; ``f d_i`` sends
``x_i`` to ``f`` and every other generator to zero.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .combinatorics import weak_compositions
from .errors import DomainError, PreconditionError, TruncationOverflow
from .linalg import add_into
from .operad import OperadElement, OperadId

Poly = dict  # Monomial -> Fraction


@dataclass(frozen=True)
class Monomial:
    """A basis element of the free algebra.

    ``payload`` is an exponent vector for Com/ComNu and a word (tuple of
    generator indices) for As and Trivial.
    """

    operad: OperadId
    n: int
    payload: tuple[int, ...]

    def __post_init__(self):
        op = OperadId.parse(self.operad)
        object.__setattr__(self, "operad", op)
        payload = tuple(int(a) for a in self.payload)
        object.__setattr__(self, "payload", payload)
        if self.n < 1:
            raise DomainError("need at least one generator")
        if _commutative(op):
            if len(payload) != self.n or any(a < 0 for a in payload):
                raise DomainError(f"bad exponent vector {payload} for n={self.n}")
        elif any(not 1 <= a <= self.n for a in payload):
            raise DomainError(f"word {payload} uses letters outside 1..{self.n}")
        if op is OperadId.TRIVIAL and len(payload) != 1:
            raise DomainError("Trivial monomials are single generators")
        if op is OperadId.COMNU and sum(payload) == 0:
            raise DomainError("ComNu has no degree-0 monomial")

    @property
    def degree(self) -> int:
        return sum(self.payload) if _commutative(self.operad) else len(self.payload)

    @property
    def weight(self) -> tuple[int, ...]:
        if _commutative(self.operad):
            return self.payload
        out = [0] * self.n
        for a in self.payload:
            out[a - 1] += 1
        return tuple(out)

    def sort_key(self):
        return (self.degree, tuple(-a for a in self.payload))

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if _commutative(self.operad):
            parts = [f"x{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(self.payload) if a]
            return "*".join(parts) or "1"
        return "".join(f"x{a}" for a in self.payload)

    def to_json(self) -> dict:
        key = "exponents" if _commutative(self.operad) else "word"
        return {"operad": self.operad.value, "n": self.n, key: list(self.payload)}

    @classmethod
    def from_json(cls, data) -> "Monomial":
        payload = data.get("exponents", data.get("word"))
        if payload is None:
            raise DomainError("monomial needs 'exponents' or 'word'")
        return cls(OperadId.parse(data["operad"]), int(data["n"]), tuple(payload))


def _commutative(op: OperadId) -> bool:
    return op in (OperadId.COM, OperadId.COMNU)


def generator(P, n: int, i: int) -> Monomial:
    P = OperadId.parse(P)
    if not 1 <= i <= n:
        raise DomainError(f"generator index {i} outside 1..{n}")
    if _commutative(P):
        return Monomial(P, n, tuple(int(j == i) for j in range(1, n + 1)))
    return Monomial(P, n, (i,))


def unit(P, n: int) -> Monomial:
    P = OperadId.parse(P)
    if P is OperadId.COM:
        return Monomial(P, n, (0,) * n)
    if P is OperadId.AS:
        return Monomial(P, n, ())
    raise DomainError(f"{P} has no unit")


def free_basis(P, n: int, d: int) -> list[Monomial]:
    """Basis of the degree-``d`` part of the free algebra on ``n`` generators."""
    P = OperadId.parse(P)
    if n < 1 or d < 0:
        raise DomainError("need n >= 1 and d >= 0")
    if P is OperadId.TRIVIAL:
        return [Monomial(P, n, (i,)) for i in range(1, n + 1)] if d == 1 else []
    if P is OperadId.COMNU and d == 0:
        return []
    if _commutative(P):
        return [Monomial(P, n, c) for c in weak_compositions(d, n)]
    return [Monomial(P, n, w) for w in itertools.product(range(1, n + 1), repeat=d)]


def weight(m: Monomial) -> tuple[int, ...]:
    return m.weight


def multiply(p: OperadElement, args: Sequence[Monomial]) -> Monomial:
    """Structure map of the free algebra: ``p`` applied to monomials."""
    if len(args) != p.arity:
        raise DomainError(f"operation of arity {p.arity} given {len(args)} arguments")
    op = p.operad
    if not args:
        raise DomainError("arity-0 product needs the generator count; use unit()")
    n = args[0].n
    if any(a.operad is not op or a.n != n for a in args):
        raise DomainError("arguments must share operad and generator count")
    if _commutative(op):
        return Monomial(op, n, tuple(map(sum, zip(*(a.payload for a in args)))))
    word: list[int] = []
    for j in p.sequence():
        word.extend(args[j - 1].payload)
    return Monomial(op, n, tuple(word))


def multiply_polys(p: OperadElement, args: Sequence[Mapping]) -> Poly:
    out: Poly = {}
    for combo in itertools.product(*(a.items() for a in args)):
        c = Fraction(1)
        for _, x in combo:
            c *= x
        add_into(out, {multiply(p, [m for m, _ in combo]): c})
    return out


@dataclass(frozen=True)
class TensorElement:
    """A truncated element of the ``power``-fold tensor power of the free algebra."""

    operad: OperadId
    n: int
    power: int
    D: int
    coeffs: Mapping = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "operad", OperadId.parse(self.operad))
        clean = {}
        for key, c in self.coeffs.items():
            key = tuple(key)
            if len(key) != self.power:
                raise DomainError(f"tensor of power {self.power} got a {len(key)}-tuple")
            deg = sum(m.degree for m in key)
            if deg > self.D:
                raise TruncationOverflow(deg, self.D)
            c = Fraction(c)
            if c:
                clean[key] = clean.get(key, 0) + c
        object.__setattr__(self, "coeffs", {k: v for k, v in clean.items() if v})

    @classmethod
    def pure(cls, factors: Sequence[Monomial], D: int | None = None, coeff=1) -> "TensorElement":
        if not factors:
            raise DomainError("use TensorElement(...) directly for the empty tensor power")
        deg = sum(m.degree for m in factors)
        return cls(factors[0].operad, factors[0].n, len(factors), deg if D is None else D,
                   {tuple(factors): coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def degrees(self) -> set[int]:
        return {sum(m.degree for m in k) for k in self.coeffs}

    def _check(self, other: "TensorElement"):
        if (self.operad, self.n, self.power) != (other.operad, other.n, other.power):
            raise DomainError("tensors live in different spaces")

    def __add__(self, other: "TensorElement") -> "TensorElement":
        self._check(other)
        out = dict(self.coeffs)
        add_into(out, other.coeffs)
        return TensorElement(self.operad, self.n, self.power, max(self.D, other.D), out)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other * -1

    def __mul__(self, c) -> "TensorElement":
        c = Fraction(c)
        return TensorElement(self.operad, self.n, self.power, self.D,
                             {k: c * v for k, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.operad, self.n, self.power) == (other.operad, other.n, other.power) \
            and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.operad, self.n, self.power, frozenset(self.coeffs.items())))

    def with_D(self, D: int) -> "TensorElement":
        return TensorElement(self.operad, self.n, self.power, D, self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = sorted(self.coeffs.items(), key=lambda kv: [m.sort_key() for m in kv[0]])
        return " + ".join(f"{c}*" + "(x)".join(str(m) for m in k) for k, c in terms)


@dataclass(frozen=True)
class Derivation:
    """``sum c * f d_{x_i}``, stored canonically as ``{(f, i): c}``."""

    operad: OperadId
    n: int
    terms: Mapping = field(default_factory=dict)

    def __post_init__(self):
        op = OperadId.parse(self.operad)
        object.__setattr__(self, "operad", op)
        clean: dict = {}
        for (f, i), c in self.terms.items():
            if not 1 <= i <= self.n:
                raise DomainError(f"derivation index {i} outside 1..{self.n}")
            if f.operad is not op or f.n != self.n:
                raise DomainError("derivation coefficient lives in a different algebra")
            add_into(clean, {(f, i): Fraction(c)})
        object.__setattr__(self, "terms", clean)

    @classmethod
    def term(cls, f: Monomial, i: int, coeff=1) -> "Derivation":
        return cls(f.operad, f.n, {(f, i): coeff})

    @classmethod
    def zero(cls, P, n: int) -> "Derivation":
        return cls(OperadId.parse(P), n, {})

    @classmethod
    def from_images(cls, P, n: int, images: Mapping[int, Mapping]) -> "Derivation":
        return cls(P, n, {(f, i): c for i, poly in images.items() for f, c in poly.items()})

    def image(self, i: int) -> Poly:
        """Value on the generator ``x_i``."""
        return {f: c for (f, j), c in self.terms.items() if j == i}

    def degrees(self) -> set[int]:
        return {f.degree - 1 for f, _ in self.terms}

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Derivation") -> "Derivation":
        out = dict(self.terms)
        add_into(out, other.terms)
        return Derivation(self.operad, self.n, out)

    def __sub__(self, other: "Derivation") -> "Derivation":
        return self + other * -1

    def __mul__(self, c) -> "Derivation":
        c = Fraction(c)
        return Derivation(self.operad, self.n, {k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Derivation):
            return NotImplemented
        return (self.operad, self.n) == (other.operad, other.n) and self.terms == other.terms

    def __hash__(self):
        return hash((self.operad, self.n, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1]))
        return " + ".join(f"{c}*{f}d{i}" for (f, i), c in items)


def derive_monomial(delta: Derivation, m: Monomial) -> Poly:
    """Leibniz rule on a single monomial."""
    out: Poly = {}
    if _commutative(m.operad):
        for (f, i), c in delta.terms.items():
            a = m.payload[i - 1]
            if not a:
                continue
            exps = list(m.payload)
            exps[i - 1] -= 1
            exps = [x + y for x, y in zip(exps, f.payload)]
            add_into(out, {Monomial(m.operad, m.n, tuple(exps)): c * a})
        return out
    # words: replace each occurrence of x_i by its image
    for pos, letter in enumerate(m.payload):
        for f, c in delta.image(letter).items():
            word = m.payload[:pos] + f.payload + m.payload[pos + 1:]
            if m.operad is OperadId.TRIVIAL and len(word) != 1:
                raise DomainError("Trivial algebra derivations must preserve degree")
            add_into(out, {Monomial(m.operad, m.n, word): c})
    return out


def derive_poly(delta: Derivation, poly: Mapping) -> Poly:
    out: Poly = {}
    for m, c in poly.items():
        add_into(out, derive_monomial(delta, m), c)
    return out


def apply_derivation(delta: Derivation, t: TensorElement, D: int | None = None) -> TensorElement:
    """Action of ``delta`` on a tensor power (Leibniz across factors).

    The result is truncated at ``D`` (default ``t.D``); any term that would
    land above it raises ``TruncationOverflow``.
    """
    if delta.operad is not t.operad or delta.n != t.n:
        raise PreconditionError("derivation and tensor live over different algebras")
    D = t.D if D is None else D
    out: dict = {}
    for key, c in t.coeffs.items():
        for pos, m in enumerate(key):
            for new, a in derive_monomial(delta, m).items():
                k = key[:pos] + (new,) + key[pos + 1:]
                deg = sum(x.degree for x in k)
                if deg > D:
                    raise TruncationOverflow(deg, D)
                add_into(out, {k: c * a})
    return TensorElement(t.operad, t.n, t.power, D, out)


def bracket(d1: Derivation, d2: Derivation) -> Derivation:
    """Commutator ``d1 d2 - d2 d1``, re-expanded in the ``f d_i`` spanning set."""
    if d1.operad is not d2.operad or d1.n != d2.n:
        raise PreconditionError("derivations over different algebras")
    images = {}
    for i in range(1, d1.n + 1):
        img = derive_poly(d1, d2.image(i))
        add_into(img, derive_poly(d2, d1.image(i)), -1)
        images[i] = img
    return Derivation.from_images(d1.operad, d1.n, images)


def witt_L(k: int, n_vars: int = 1) -> Derivation:
    """``L_k = x^{k+1} d_x`` in one variable (``k >= -1``)."""
    if k < -1:
        raise DomainError("L_k needs k >= -1")
    if n_vars != 1:
        raise DomainError("L_k is defined in one variable")
    return Derivation.term(Monomial(OperadId.COM, 1, (k + 1,)), 1)


def gl_element(P, n: int, i: int, j: int) -> Derivation:
    """``x_i d_{x_j}``."""
    return Derivation.term(generator(P, n, i), j)
