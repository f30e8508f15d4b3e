"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines as they are
produced; they are also repeated in the terminal summary of any pytest run.
"""

import itertools
import math
import random
import time

from conftest import SEED, cached_basis, from_lists, random_morphism, to_lists
from wittrep.catmod import ModulePresentation, Relation, evaluate, hilbert_specialized, hook_dimension, specht_multiplicities
from wittrep.charexp import CharExpParams, combination, e_A, member_basis, rational_form, reconstruct
from wittrep.combinatorics import Partition, partitions_of, z_lambda
from wittrep.freealg import Derivation, TensorElement, apply_derivation, free_basis
from wittrep.operad import OperadId
from wittrep.specialize import (
    adjoint_witness, generation_scenario, ideal_chain_dims, kaehler_check, wedge2_presentation, wedge2_scenario,
)
from wittrep.symfunc import BASES, Factor, RationalForm, SymFunc, expand, fit_rational, hall, pi_n
from wittrep.wiring import WiringMorphism, act, compose_w, hom_basis, hom_dimension, schur_weyl_oracle

COM, COMNU, AS, TRIVIAL = OperadId.COM, OperadId.COMNU, OperadId.AS, OperadId.TRIVIAL
UNDECORATED = (COM, COMNU, TRIVIAL)
P = Partition.of

RESULTS: dict[int, str] = {}


def report(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[number] = line
    print(line)
    assert ok, line


def key_of(phi):
    (key,) = phi.terms
    return key


def function_of(phi):
    ((values, _),) = phi.terms
    return values


def tensor_keys(P_, power, n_vars, top):
    low = 0 if P_ in (COM, AS) else 1
    mons = {d: free_basis(P_, n_vars, d) for d in range(top + 1)}
    for degs in itertools.product(range(low, top + 1), repeat=power):
        if sum(degs) <= top:
            yield from itertools.product(*(mons[d] for d in degs))


def seeded_tensor(P_, power, n_vars, top, D, rng, terms):
    keys = list(tensor_keys(P_, power, n_vars, top))
    if not keys:
        return None
    keys = rng.sample(keys, min(terms, len(keys)))
    return TensorElement(P_, n_vars, power, D, {k: rng.randint(1, 10 ** 6) for k in keys})


# --- 1 ----------------------------------------------------------------------

def test_criterion_01_category_laws():
    start = time.perf_counter()
    rng = random.Random(SEED)
    failures = 0
    pairs = triples = 0
    sizes = range(5)
    for P_ in UNDECORATED:
        # every composable pair of basic morphisms composes to the composite function
        table = {}
        for n, m, l in itertools.product(sizes, repeat=3):
            for phi in cached_basis(P_, n, m):
                f = function_of(phi)
                for psi in cached_basis(P_, m, l):
                    g = function_of(psi)
                    got = compose_w(psi, phi)
                    pairs += 1
                    expect = WiringMorphism.basic(P_, tuple(g[v - 1] for v in f), l)
                    failures += got != expect
                    table[(key_of(psi), key_of(phi))] = key_of(got)
        for n, m in itertools.product(sizes, repeat=2):
            for phi in cached_basis(P_, n, m):
                failures += compose_w(WiringMorphism.identity(P_, m), phi) != phi
                failures += compose_w(phi, WiringMorphism.identity(P_, n)) != phi
        # associativity on every basic triple through objects of size <= 3
        for n, m, l, k in itertools.product(range(4), repeat=4):
            for phi in map(key_of, cached_basis(P_, n, m)):
                for psi in map(key_of, cached_basis(P_, m, l)):
                    for chi in map(key_of, cached_basis(P_, l, k)):
                        triples += 1
                        failures += table[(chi, table[(psi, phi)])] != table[(table[(chi, psi)], phi)]
        # and on seeded combinations through objects of size <= 4
        for n, m, l, k in itertools.product(sizes, repeat=4):
            if 4 not in (n, m, l, k):
                continue
            phi, psi, chi = (random_morphism(P_, a, b, rng, terms=4) for a, b in ((n, m), (m, l), (l, k)))
            if None not in (phi, psi, chi):
                failures += compose_w(chi, compose_w(psi, phi)) != compose_w(compose_w(chi, psi), phi)
    # As: seeded random cases against list substitution, identities and associativity
    as_cases = 0
    while as_cases < 500:
        n, m, l, k = (rng.randint(0, 4) for _ in range(4))
        bases = [cached_basis(AS, a, b) for a, b in ((n, m), (m, l), (l, k))]
        if not all(bases):
            continue
        phi, psi, chi = (rng.choice(b) for b in bases)
        substituted = [[a for b in seq for a in to_lists(phi)[b - 1]] for seq in to_lists(psi)]
        failures += compose_w(psi, phi) != from_lists(substituted, n)
        failures += compose_w(WiringMorphism.identity(AS, m), phi) != phi
        failures += compose_w(phi, WiringMorphism.identity(AS, n)) != phi
        failures += compose_w(chi, compose_w(psi, phi)) != compose_w(compose_w(chi, psi), phi)
        as_cases += 1
    # act is a functor on the same range
    act_checks = 0
    for P_ in UNDECORATED:
        for n, m, l in itertools.product(range(1, 5), repeat=3):
            phi, psi = random_morphism(P_, n, m, rng, terms=4), random_morphism(P_, m, l, rng, terms=4)
            t = seeded_tensor(P_, n, 2, 4, 4, rng, 6)
            if None in (phi, psi, t):
                continue
            failures += act(compose_w(psi, phi), t) != act(psi, act(phi, t))
            act_checks += 1
    for _ in range(500):
        n, m, l = (rng.randint(1, 4) for _ in range(3))
        if not cached_basis(AS, n, m) or not cached_basis(AS, m, l):
            continue
        phi, psi = rng.choice(cached_basis(AS, n, m)), rng.choice(cached_basis(AS, m, l))
        t = seeded_tensor(AS, n, 2, 4, 4, rng, 4)
        failures += act(compose_w(psi, phi), t) != act(psi, act(phi, t))
        act_checks += 1
    elapsed = time.perf_counter() - start
    report(1, failures == 0 and elapsed < 30,
           f"{pairs} basic pairs, {triples} basic triples, {as_cases} As cases, {act_checks} act checks, "
           f"{failures} failures, {elapsed:.1f}s")


# --- 2 ----------------------------------------------------------------------

def test_criterion_02_schur_weyl_oracle():
    start = time.perf_counter()
    bad = []
    for P_ in OperadId:
        for n, m in itertools.product(range(4), repeat=2):
            res = schur_weyl_oracle(P_, n, m)
            if not res.agrees or res.dimension != len(hom_basis(P_, n, m)):
                bad.append((P_.value, n, m))
    elapsed = time.perf_counter() - start
    report(2, not bad and elapsed < 120, f"4 operads x n,m <= 3, mismatches {bad}, {elapsed:.1f}s")


# --- 3 ----------------------------------------------------------------------

def stirling2(n, k):
    return sum((-1) ** j * math.comb(k, j) * (k - j) ** n for j in range(k + 1)) // math.factorial(k)


def as_enumeration(n, m):
    """All (function, linear order on each fiber) pairs, as ordered fiber lists."""
    out = set()
    for values in itertools.product(range(1, m + 1), repeat=n):
        fibers = [[a for a, v in enumerate(values, start=1) if v == i] for i in range(1, m + 1)]
        for orders in itertools.product(*(itertools.permutations(f) for f in fibers)):
            out.add(tuple(tuple(o) for o in orders))
    return out


def test_criterion_03_hom_tables():
    bad = []
    for n, m in itertools.product(range(5), repeat=2):
        expect = {COM: m ** n, COMNU: math.factorial(m) * stirling2(n, m),
                  TRIVIAL: math.factorial(n) if n == m else 0}
        for P_, value in expect.items():
            if hom_dimension(P_, n, m) != value or len(hom_basis(P_, n, m)) != value:
                bad.append((P_.value, n, m))
        listed = {tuple(map(tuple, to_lists(phi))) for phi in hom_basis(AS, n, m)}
        if listed != as_enumeration(n, m) or hom_dimension(AS, n, m) != len(listed):
            bad.append(("As", n, m))
    report(3, not bad, f"n,m <= 4, mismatches {bad}")


# --- 4 ----------------------------------------------------------------------

def test_criterion_04_equivariance():
    rng = random.Random(SEED)
    checks = failures = 0
    for P_ in OperadId:
        # f d_i has degree deg f - 1, so deg f <= 3
        terms = [Derivation.term(f, i) for d in range(4) for f in free_basis(P_, 2, d) for i in (1, 2)]
        for n in range(1, 4):
            t = seeded_tensor(P_, n, 2, 5, 7, rng, 20)
            if t is None:
                continue
            for m in range(1, 4):
                moved = [apply_derivation(delta, t, 7) for delta in terms]
                for phi in hom_basis(P_, n, m):
                    image = act(phi, t)
                    for delta, dt in zip(terms, moved):
                        checks += 1
                        failures += act(phi, dt) != apply_derivation(delta, image, 7)
    report(4, failures == 0, f"{checks} (morphism, derivation term) checks on tensors of degree <= 5, "
                             f"{failures} failures")


# --- 5 ----------------------------------------------------------------------

def test_criterion_05_kaehler():
    out = kaehler_check(4)
    report(5, out["ok"], f"{out['checked']} pullbacks, {out['failures']} failures")


# --- 6 ----------------------------------------------------------------------

def test_criterion_06_ideal_chain():
    out = ideal_chain_dims(5, 10)
    dims = out["dims"]
    strict = all(dims[n][d] > dims[n + 1][d] for d in range(1, 11) for n in range(1, min(5, d)))
    report(6, strict and out["strict"] and out["closed"],
           f"strict={strict}, closed={out['closed']}, degree-10 dims {[dims[n][10] for n in range(1, 6)]}")


# --- 7 ----------------------------------------------------------------------

def test_criterion_07_adjoint_witness():
    out = adjoint_witness()
    ok = out["ok"] and all(out["relations_zero"]) and out["sym2_degree6"] == 3 and out["spanning_rank"] == 3
    report(7, ok, f"relations zero {out['relations_zero']}, dim Sym^2 degree 6 = {out['sym2_degree6']}, "
                  f"spanning rank {out['spanning_rank']}")


# --- 8 ----------------------------------------------------------------------

def test_criterion_08_wedge2():
    out = wedge2_scenario(12, 5)
    target = expand(RationalForm(1, {(3,): 1}, (Factor(1, 1), Factor(1, 2))), 12).coefficient_list()
    module = [int(c) for c in hilbert_specialized(wedge2_presentation(), 1, 12).coefficient_list()]
    ok = out["ok"] and out["degree2"] == 0 and out["heldout"] == 5 and out["coefficients"] == target == module
    report(8, ok, f"degree 2 dim {out['degree2']}, fit {out['fit']}, held out {out['heldout']}")


# --- 9 ----------------------------------------------------------------------

def test_criterion_09_hilbert_rationality():
    start = time.perf_counter()
    D = 15
    ok = True
    fits = []
    for d in range(4):
        series = hilbert_specialized(ModulePresentation.principal(COMNU, d), 1, D)
        fit = None
        for B in range(d + 1):
            fit = fit_rational(series, d, B, holdout=5)
            if fit.success:
                break
        target = RationalForm(1, {(d,): 1}, (Factor(1, 1, d),) if d else ())
        good = (fit.success and expand(fit.form, D) == series == expand(target, D)
                and fit.form.max_exponent <= max(d, 1))
        ok &= good
        fits.append(str(fit.form) if fit.form else None)
    elapsed = time.perf_counter() - start
    report(9, ok and elapsed < 60, f"fits {fits}, verified to degree {D}, {elapsed:.1f}s")


# --- 10 ---------------------------------------------------------------------

def test_criterion_10_symmetric_functions():
    bad = []
    for size in range(7):
        parts = partitions_of(size)
        for lam in parts:
            s_lam = SymFunc.element("s", lam)
            for mu in parts:
                if hall(s_lam, SymFunc.element("s", mu)) != (lam == mu):
                    bad.append(("orthonormal", lam, mu))
            if hall(SymFunc.element("p", lam), SymFunc.element("p", lam)) != z_lambda(lam):
                bad.append(("z", lam))
            for a, b in itertools.permutations(BASES, 2):
                x = SymFunc.element(a, lam, 6)
                if x.convert(b).convert(a) != x:
                    bad.append(("round trip", a, b, lam))
    modules = [(ModulePresentation.principal(P_, d), n)
               for P_ in (COM, COMNU, TRIVIAL) for d in range(4) for n in range(7)]
    modules += [(ModulePresentation.principal(AS, d), n) for d in range(3) for n in range(6)]
    modules += [(ModulePresentation.principal(AS, 1), 6), (ModulePresentation.principal(TRIVIAL, 6), 6)]
    unit_map = WiringMorphism.basic(COM, (), 1)
    modules += [(wedge2_presentation(), n) for n in range(7)]
    modules += [(ModulePresentation(COM, (1,), (Relation(0, (unit_map,)),)), n) for n in range(7)]
    for M, n in modules:
        E = evaluate(M, n)
        mult = specht_multiplicities(E)
        if sum(c * hook_dimension(lam) for lam, c in mult.items()) != E.dimension:
            bad.append(("specht", M, n))
    report(10, not bad, f"|lambda| <= 6, {len(modules)} evaluated modules, failures {bad[:3]}")


# --- 11 ---------------------------------------------------------------------

def brute_e_A_one_variable(A, D):
    coeffs = [0] * (D + 1)
    for counts in itertools.product(range(D + 1), repeat=len(A)):
        d = sum(c * p for c, p in zip(counts, A.parts))
        if d <= D:
            coeffs[d] += 1
    return coeffs


def test_criterion_11_character_exponential():
    bad = []
    shapes = [A for s in range(5) for A in partitions_of(s)]
    for A in shapes:
        # e_A checks the exponential against the product formula internally
        full = e_A(A, 10)
        for n in (1, 2):
            if e_A(A, 10, n=n) != pi_n(full, n):
                bad.append(("specialize", A, n))
        if e_A(A, 10, n=1).coefficient_list() != brute_e_A_one_variable(A, 10):
            bad.append(("count", A))
    members = 0
    for A in [P(), P(1), P(2), P(1, 1), P(2, 1)]:
        for r, k in itertools.product(range(1, 4), range(3)):
            pr = CharExpParams(A, r, k)
            for vec in member_basis(pr, 8):
                members += 1
                rec = reconstruct(combination(vec, A, 8), pr)
                if not rec.exact:
                    bad.append(("reconstruct", A, r, k))
    samples = [{(): 1}, {(1,): 1}, {(2,): 2, (1,): -1}, {(1, 1): 1, (): 3}, {(3,): 1, (2,): -1}]
    forms = 0
    for A in shapes:
        for c in samples:
            for n in (1, 2):
                form = rational_form(c, CharExpParams(A, 3, 2), n, D=10)
                forms += 1
                if form.max_exponent > A.size:
                    bad.append(("exponent", A, n))
    report(11, not bad, f"{len(shapes)} shapes, {members} members reconstructed, {forms} rational forms, "
                        f"failures {bad[:3]}")


# --- 12 ---------------------------------------------------------------------

def test_criterion_12_generation():
    out = generation_scenario(6)
    failed = [k for group in ("tensor_powers", "schur", "unit_isomorphism") for k, v in out[group].items() if not v]
    report(12, out["ok"], f"{sum(len(out[g]) for g in ('tensor_powers', 'schur', 'unit_isomorphism'))} cases, "
                          f"failed {failed}")
