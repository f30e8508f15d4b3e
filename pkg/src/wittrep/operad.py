"""The four set-operads used throughout: Trivial, Com, ComNu and As.

Arity sets are ``[r]``.  An ``As`` element is a total order on its inputs,
stored as a rank vector: ``order[j-1]`` is the position of input ``j``.  So
``(2, 3, 1)`` orders the inputs as ``3 < 1 < 2``.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError


class OperadId(enum.Enum):
    TRIVIAL = "Trivial"
    COM = "Com"
    COMNU = "ComNu"
    AS = "As"

    @classmethod
    def parse(cls, name) -> "OperadId":
        if isinstance(name, OperadId):
            return name
        key = str(name).strip().lower()
        for op in cls:
            if op.value.lower() == key:
                return op
        raise DomainError(f"unknown operad {name!r}")

    def __str__(self) -> str:
        return self.value


def admits_arity(P: OperadId, r: int) -> bool:
    if r < 0:
        return False
    if P is OperadId.TRIVIAL:
        return r == 1
    if P is OperadId.COMNU:
        return r >= 1
    return True


@dataclass(frozen=True)
class OperadElement:
    operad: OperadId
    arity: int
    order: tuple[int, ...] | None = None

    def __post_init__(self):
        op = OperadId.parse(self.operad)
        object.__setattr__(self, "operad", op)
        if not admits_arity(op, self.arity):
            raise DomainError(f"{op} has no operations of arity {self.arity}")
        if op is OperadId.AS:
            order = tuple(range(1, self.arity + 1)) if self.order is None else tuple(self.order)
            if sorted(order) != list(range(1, self.arity + 1)):
                raise DomainError(f"{order} is not a total order on [{self.arity}]")
            object.__setattr__(self, "order", order)
        elif self.order is not None:
            raise DomainError(f"{op} elements carry no order")

    def sequence(self) -> tuple[int, ...]:
        """Inputs listed from smallest to largest in the order."""
        if self.operad is not OperadId.AS:
            return tuple(range(1, self.arity + 1))
        seq = [0] * self.arity
        for j, rank in enumerate(self.order, start=1):
            seq[rank - 1] = j
        return tuple(seq)

    def relabel(self, perm: Sequence[int]) -> "OperadElement":
        """Transport along the bijection sending input ``j`` to ``perm[j-1]``."""
        if self.operad is not OperadId.AS:
            return self
        new = [0] * self.arity
        for j, rank in enumerate(self.order, start=1):
            new[perm[j - 1] - 1] = rank
        return OperadElement(self.operad, self.arity, tuple(new))

    def to_json(self) -> dict:
        out = {"operad": self.operad.value, "arity": self.arity}
        if self.operad is OperadId.AS:
            out["order"] = list(self.order)
        return out

    @classmethod
    def from_json(cls, data, operad=None) -> "OperadElement":
        op = OperadId.parse(data.get("operad", operad))
        order = data.get("order")
        return cls(op, int(data["arity"]), tuple(order) if order is not None else None)


def identity(P) -> OperadElement:
    return OperadElement(OperadId.parse(P), 1)


def from_sequence(seq: Sequence[int]) -> OperadElement:
    """The ``As`` element whose inputs in increasing order are ``seq``."""
    order = [0] * len(seq)
    for rank, j in enumerate(seq, start=1):
        order[j - 1] = rank
    return OperadElement(OperadId.AS, len(seq), tuple(order))


def basis(P, r: int) -> list[OperadElement]:
    """A basis of ``P([r])``."""
    P = OperadId.parse(P)
    if r < 0 or not admits_arity(P, r):
        return []
    if P is OperadId.AS:
        return [OperadElement(P, r, p) for p in itertools.permutations(range(1, r + 1))]
    return [OperadElement(P, r)]


def compose(p: OperadElement, blocks: Sequence[OperadElement]) -> OperadElement:
    """Operadic composite ``p o (q_1, ..., q_r)``.

    Inputs of the composite are labelled block by block: block ``i`` owns the
    inputs ``sum_{j<i} n_j + 1 .. sum_{j<=i} n_j``.
    """
    if len(blocks) != p.arity:
        raise DomainError(f"arity {p.arity} operation needs {p.arity} blocks, got {len(blocks)}")
    if any(q.operad is not p.operad for q in blocks):
        raise DomainError("cannot compose elements of different operads")
    total = sum(q.arity for q in blocks)
    if p.operad is not OperadId.AS:
        return OperadElement(p.operad, total)
    offsets = list(itertools.accumulate([0] + [q.arity for q in blocks]))
    seq = []
    for i in p.sequence():
        q = blocks[i - 1]
        seq.extend(offsets[i - 1] + j for j in q.sequence())
    return from_sequence(seq)
