import itertools
import math

import pytest

from conftest import OPERADS, cached_basis, from_lists, random_morphism, to_lists
from wittrep.errors import DomainError, PreconditionError
from wittrep import operad as opd
from wittrep.freealg import Derivation, Monomial, TensorElement, apply_derivation, free_basis, generator
from wittrep.operad import OperadElement, OperadId
from wittrep.wiring import (
    WiringMorphism, act, compose_w, hom_basis, hom_dimension, permutation_morphism, schur_weyl_oracle,
)

COM, COMNU, AS, TRIVIAL = OperadId.COM, OperadId.COMNU, OperadId.AS, OperadId.TRIVIAL


def stirling2(n, k):
    return sum((-1) ** j * math.comb(k, j) * (k - j) ** n for j in range(k + 1)) // math.factorial(k)


def as_count(n, m):
    # (function, linear order on every fiber) pairs
    return sum(math.prod(math.factorial(values.count(i)) for i in range(1, m + 1))
               for values in itertools.product(range(1, m + 1), repeat=n))


def test_hom_dimension_tables():
    for n in range(5):
        for m in range(5):
            assert hom_dimension(COM, n, m) == m ** n
            assert hom_dimension(COMNU, n, m) == math.factorial(m) * stirling2(n, m)
            assert hom_dimension(TRIVIAL, n, m) == (math.factorial(n) if n == m else 0)
            assert hom_dimension(AS, n, m) == as_count(n, m)
    assert hom_dimension(COM, 3, 2) == 8 and hom_dimension(COMNU, 3, 2) == 6 and hom_dimension(AS, 2, 1) == 2


def test_as_composition_matches_substitution(rng):
    for _ in range(300):
        n, m, l = rng.randint(0, 4), rng.randint(0, 3), rng.randint(0, 3)
        if (n and not m) or (m and not l):
            continue
        phi, psi = rng.choice(cached_basis(AS, n, m)), rng.choice(cached_basis(AS, m, l))
        expect = [[a for b in seq for a in to_lists(phi)[b - 1]] for seq in to_lists(psi)]
        assert compose_w(psi, phi) == from_lists(expect, n)


def test_com_fold_composite():
    fold = WiringMorphism.basic(COM, (1, 1), 1)
    phi = WiringMorphism.basic(COM, (1, 2, 1), 2)
    assert compose_w(fold, phi) == WiringMorphism.basic(COM, (1, 1, 1), 1)


@pytest.mark.parametrize("P", OPERADS)
def test_identity_and_associativity(P, rng):
    for n, m, l, k in itertools.product(range(4), repeat=4):
        phi, psi, chi = (random_morphism(P, n, m, rng), random_morphism(P, m, l, rng),
                         random_morphism(P, l, k, rng))
        if phi is not None:
            assert compose_w(WiringMorphism.identity(P, m), phi) == phi
            assert compose_w(phi, WiringMorphism.identity(P, n)) == phi
        if None not in (phi, psi, chi):
            assert compose_w(chi, compose_w(psi, phi)) == compose_w(compose_w(chi, psi), phi)


def random_tensor(P, power, n_vars, rng, max_degree=5, terms=3):
    low = 0 if P in (COM, AS) else 1
    high = 1 if P is TRIVIAL else 2
    out = None
    for _ in range(terms):
        degs = [rng.randint(low, high) for _ in range(power)]
        while sum(degs) > max_degree:
            degs = [max(low, d - 1) for d in degs]
        factors = [rng.choice(free_basis(P, n_vars, d)) for d in degs]
        t = TensorElement(P, n_vars, power, max_degree, {tuple(factors): rng.randint(1, 3)})
        out = t if out is None else out + t
    return out


@pytest.mark.parametrize("P", OPERADS)
def test_act_is_functorial(P, rng):
    for n, m, l in itertools.product(range(1, 4), repeat=3):
        phi, psi = random_morphism(P, n, m, rng), random_morphism(P, m, l, rng)
        if phi is None or psi is None:
            continue
        t = random_tensor(P, n, 2, rng)
        assert act(compose_w(psi, phi), t) == act(psi, act(phi, t))


def derivation_terms(P, n_vars, max_degree):
    top = 1 if P is TRIVIAL else max_degree + 1
    for d in range(1, top + 1):
        for f in free_basis(P, n_vars, d):
            for i in range(1, n_vars + 1):
                yield Derivation.term(f, i)


@pytest.mark.parametrize("P", OPERADS)
def test_act_commutes_with_derivations(P, rng):
    for n, m in itertools.product(range(1, 4), repeat=2):
        phi = random_morphism(P, n, m, rng)
        if phi is None:
            continue
        t = random_tensor(P, n, 2, rng, max_degree=3)
        for delta in derivation_terms(P, 2, 2):
            assert act(phi, apply_derivation(delta, t, D=5)) == apply_derivation(delta, act(phi, t), D=5)


def test_fold_multiplies():
    x1, x2 = generator(COM, 2, 1), generator(COM, 2, 2)
    out = act(WiringMorphism.basic(COM, (1, 1), 1), TensorElement.pure([x1, x2]))
    assert out == TensorElement.pure([Monomial(COM, 2, (1, 1))])


def test_empty_fiber_inserts_unit():
    x1 = generator(COM, 1, 1)
    out = act(WiringMorphism.basic(COM, (1,), 2), TensorElement.pure([x1]))
    assert out == TensorElement.pure([x1, Monomial(COM, 1, (0,))])


def test_permutation_acts_by_permuting_factors():
    a, b, c = (generator(TRIVIAL, 3, i) for i in (1, 2, 3))
    sigma = permutation_morphism(TRIVIAL, (2, 3, 1))
    assert act(sigma, TensorElement.pure([a, b, c])) == TensorElement.pure([c, a, b])


@pytest.mark.parametrize("P", OPERADS)
def test_oracle_agrees(P):
    for n in range(4):
        for m in range(4):
            res = schur_weyl_oracle(P, n, m)
            assert res.agrees, (P, n, m)
            assert res.dimension == len(hom_basis(P, n, m))


def test_oracle_small_cases():
    assert schur_weyl_oracle(COM, 1, 1).dimension == 1
    assert schur_weyl_oracle(COM, 2, 1, N=2).dimension == 1
    assert schur_weyl_oracle(COMNU, 1, 2).dimension == 0
    with pytest.raises(PreconditionError):
        schur_weyl_oracle(COM, 3, 1, N=2)


def test_morphism_validation_and_json():
    with pytest.raises(DomainError):
        WiringMorphism.basic(COM, (1, 3), 2)
    with pytest.raises(DomainError):
        WiringMorphism.basic(AS, (1, 1), 1, [OperadElement(AS, 1)])
    phi = WiringMorphism.basic(AS, (2, 1, 2), 2, [opd.identity(AS), OperadElement(AS, 2, (2, 1))]) * 3
    assert WiringMorphism.from_json(phi.to_json()) == phi
    with pytest.raises(DomainError):
        compose_w(phi, phi)
