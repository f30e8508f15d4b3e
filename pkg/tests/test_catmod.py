import itertools
import json

import pytest

from conftest import OPERADS, random_morphism
from wittrep.catmod import (
    ModulePresentation, Relation, character_table, coinvariant_dimension, coxeter_ok, evaluate,
    formal_character, hilbert_specialized, hook_dimension, mn_character, specht_multiplicities,
    specialized_character,
)
from wittrep.combinatorics import EMPTY, Partition, partitions_of
from wittrep.errors import CapExceeded, DomainError
from wittrep.linalg import matmul
from wittrep.operad import OperadId
from wittrep.symfunc import SymFunc, hall, pi_n
from wittrep.wiring import WiringMorphism, hom_dimension

COM, COMNU, AS, TRIVIAL = OperadId.COM, OperadId.COMNU, OperadId.AS, OperadId.TRIVIAL
P = Partition.of


def random_presentation(Pid, rng, gens=(1, 2), rel_degrees=(2, 3)):
    rels = []
    for e in rel_degrees:
        entries = tuple(random_morphism(Pid, e, d, rng) for d in gens)
        rels.append(Relation(e, entries))
    return ModulePresentation(Pid, gens, tuple(rels))


def compose_perm(a, b):
    return tuple(a[x - 1] for x in b)


def test_principal_evaluations():
    assert evaluate(ModulePresentation.principal(COMNU, 1), 2).dimension == 1
    assert evaluate(ModulePresentation.principal(COMNU, 1), 0).dimension == 0
    assert evaluate(ModulePresentation.principal(COM, 1), 0).dimension == 1


@pytest.mark.parametrize("Pid", OPERADS)
def test_free_evaluation_dimensions(Pid):
    for d in range(4):
        for n in range(5):
            assert evaluate(ModulePresentation.principal(Pid, d), n).dimension == hom_dimension(Pid, n, d)


def test_specht_examples():
    assert specht_multiplicities(evaluate(ModulePresentation.principal(COMNU, 1), 3)) == {P(3): 1}
    regular = evaluate(ModulePresentation.principal(TRIVIAL, 2), 2)
    assert specht_multiplicities(regular) == {P(2): 1, P(1, 1): 1}
    assert specht_multiplicities(evaluate(ModulePresentation.zero(COM), 3)) == {}


def test_mn_character_matches_power_sum_pairing():
    # chi^lambda(mu) = <s_lambda, p_mu>
    for n in range(1, 7):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                expect = hall(SymFunc.element("s", lam), SymFunc.element("p", mu))
                assert mn_character(lam, mu) == expect
    assert mn_character(P(2, 1), P(1, 1, 1)) == 2
    assert mn_character(P(3, 1, 1), P(2, 2, 1)) == -2


def test_formal_character_examples():
    D = 5
    assert formal_character(ModulePresentation.principal(COMNU, 1), D).coeffs == {P(d): 1 for d in range(1, D + 1)}
    assert formal_character(ModulePresentation.principal(COM, 1), D).coeffs == {
        (P(d) if d else EMPTY): 1 for d in range(D + 1)}
    assert formal_character(ModulePresentation.zero(AS), D).is_zero()


def test_relation_killing_degree_zero():
    # quotient of the Com principal P_1 by the image of P_0: only [0] changes
    unit_map = WiringMorphism.basic(COM, (), 1)
    M = ModulePresentation(COM, (1,), (Relation(0, (unit_map,)),))
    assert [evaluate(M, n).dimension for n in range(5)] == [0, 1, 1, 1, 1]
    assert formal_character(M, 5) == formal_character(ModulePresentation.principal(COMNU, 1), 5)


@pytest.mark.parametrize("Pid", OPERADS)
def test_presented_module_invariants(Pid, rng):
    for _ in range(3):
        M = random_presentation(Pid, rng)
        for n in range(5):
            E = evaluate(M, n)
            assert coxeter_ok(E)
            mult = specht_multiplicities(E)
            assert sum(m * hook_dimension(lam) for lam, m in mult.items()) == E.dimension
            if 2 <= n <= 3 and E.dimension:
                for a, b in itertools.product(itertools.permutations(range(1, n + 1)), repeat=2):
                    assert matmul(E.action(a), E.action(b)) == E.action(compose_perm(a, b))


@pytest.mark.parametrize("Pid", OPERADS)
def test_specialization_routes_agree(Pid, rng):
    M = random_presentation(Pid, rng, gens=(1, 2), rel_degrees=(2,))
    ch = formal_character(M, 4)
    for n in (1, 2, 3):
        assert pi_n(ch, n) == specialized_character(M, n, 4)


def test_free_fast_path_matches_traces():
    for Pid in OPERADS:
        M = ModulePresentation.principal(Pid, 2)
        for n in range(5):
            assert character_table(M, n) == evaluate(M, n).character()


def test_hilbert_examples():
    D = 8
    h1 = hilbert_specialized(ModulePresentation.principal(COMNU, 1), 1, D)
    assert h1.coefficient_list() == [0] + [1] * D
    h2 = hilbert_specialized(ModulePresentation.principal(COMNU, 2), 1, D)
    assert h2.coefficient_list() == [max(d - 1, 0) for d in range(D + 1)]


def test_large_n_specialization_keeps_everything():
    M = ModulePresentation.principal(COM, 2)
    ch = formal_character(M, 3)
    assert all(len(lam) <= 3 for lam in ch.coeffs)
    assert specialized_character(M, 3, 3) == pi_n(ch, 3)
    assert hilbert_specialized(M, 3, 3) == pi_n(ch, 3).collapse()


def test_coinvariant_dimension_direct():
    # Com P_2 at weight (1, 1): maps [2] -> [2] modulo nothing = 4
    assert coinvariant_dimension(ModulePresentation.principal(COM, 2), (1, 1)) == 4
    assert coinvariant_dimension(ModulePresentation.principal(COM, 2), (2,)) == 3


def test_json_round_trip_and_errors():
    unit_map = WiringMorphism.basic(COM, (), 1)
    M = ModulePresentation(COM, (1,), (Relation(0, (unit_map,)),))
    assert ModulePresentation.loads(json.dumps(M.to_json())) == M
    with pytest.raises(DomainError, match="line 2, column"):
        ModulePresentation.loads('{"operad": "Com",\n "generators": [1,]}')
    with pytest.raises(DomainError):
        ModulePresentation.loads('{"generators": [1]}')
    with pytest.raises(DomainError):
        ModulePresentation(COM, (1,), (Relation(2, (WiringMorphism.basic(COM, (1, 1, 1), 1),)),))


def test_cap():
    with pytest.raises(CapExceeded):
        formal_character(ModulePresentation.principal(COM, 1), 9)
