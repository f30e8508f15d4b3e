import functools
import random

import pytest

from wittrep import operad as opd
from wittrep.combinatorics import FiniteMap
from wittrep.operad import OperadId
from wittrep.wiring import WiringMorphism, hom_basis

OPERADS = list(OperadId)
SEED = 20240611


@functools.lru_cache(maxsize=None)
def cached_basis(P, n, m):
    return tuple(hom_basis(P, n, m))


def random_morphism(P, n, m, rng, terms=2):
    """Random integer combination of basic morphisms, or None for an empty hom space."""
    basis = cached_basis(P, n, m)
    if not basis:
        return None
    out = WiringMorphism.zero(P, n, m)
    for _ in range(terms):
        out = out + rng.choice(basis) * rng.randint(-3, 3)
    return out


# As morphisms as lists: entry i lists the fiber over i in its decorated order

def to_lists(phi):
    ((values, decs),) = phi.terms
    out = []
    for i, dec in enumerate(decs, start=1):
        fib = [a for a, v in enumerate(values, start=1) if v == i]
        out.append([fib[j - 1] for j in dec.sequence()])
    return out


def from_lists(lists, n):
    values = [0] * n
    decs = []
    for i, seq in enumerate(lists, start=1):
        for a in seq:
            values[a - 1] = i
        fib = sorted(seq)
        decs.append(opd.from_sequence([fib.index(a) + 1 for a in seq]))
    return WiringMorphism.basic(OperadId.AS, FiniteMap(n, len(lists), tuple(values)), len(lists), decs)


@pytest.fixture
def rng():
    return random.Random(SEED)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
