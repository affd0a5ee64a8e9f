from fractions import Fraction
import random

import pytest

from charvar.combinat import partitions_of
from charvar.errors import AlphabetMismatch, ConstantTermNotOne, DegreeCapExceeded, NonzeroConstantTerm
from charvar.exact import ONE, RatFun, Z
from charvar.polybases import hall_littlewood, hook_specials
from charvar.symfun import (
    GradedSeries, SymFun, adams, basis_element, from_schur, hall_pair, log_via_types,
    pleth_exp, pleth_log, principal_specialize, family_series,
)


def p(*parts, cap=None):
    return basis_element("p", [parts], cap=cap)


def test_basis_examples():
    assert basis_element("h", [(1,)]) == p(1)
    half = Fraction(1, 2)
    assert basis_element("s", [(1, 1)]) == (p(1, 1) - p(2)).scale(half)
    assert basis_element("h", [(2,)]) == (p(1, 1) + p(2)).scale(half)
    with pytest.raises(DegreeCapExceeded):
        basis_element("h", [(3,)], cap=2)


@pytest.mark.parametrize("n", range(1, 7))
def test_basis_round_trips(n):
    for lam in partitions_of(n):
        for basis in "hems":
            f = basis_element(basis, [lam])
            assert from_schur(f.schur_coefficients(), cap=n) == f
    # h and m are dual
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            got = hall_pair(basis_element("h", [lam]), basis_element("m", [mu]))
            assert got == (1 if lam == mu else 0)


def test_hall_pair_examples():
    assert hall_pair(p(2), p(2)) == 2
    assert hall_pair(basis_element("h", [(2, 1)]), basis_element("m", [(2, 1)])) == 1
    f = basis_element("p", [(1,), (2,)])
    assert hall_pair(f, f) == 2
    with pytest.raises(AlphabetMismatch):
        hall_pair(p(1), f)


@pytest.mark.parametrize("n", range(1, 6))
def test_schur_orthonormal(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            got = hall_pair(basis_element("s", [lam]), basis_element("s", [mu]))
            assert got == (1 if lam == mu else 0)


def test_adams_examples():
    assert adams(p(1, cap=3), 3) == p(3)
    assert adams(p(2, cap=4).scale(Z), 2) == p(4).scale(Z ** 2)
    h2 = basis_element("h", [(2,)], cap=4)
    assert adams(h2, 2) == (p(2, 2) + p(4)).scale(Fraction(1, 2))
    # dropped terms set the truncation flag
    assert adams(p(2), 2).is_zero() and adams(p(2), 2).truncated


def _series_of(f: SymFun, cap: int) -> GradedSeries:
    return GradedSeries(f.k, cap, {sum(next(iter(f.coeffs))[0]): f})


def _h_series(cap):
    return GradedSeries(1, cap, {n: basis_element("h", [(n,) if n else ()], cap=cap) for n in range(cap + 1)})


def test_exp_of_p1_is_cauchy_kernel():
    cap = 5
    e = pleth_exp(_series_of(p(1, cap=cap), cap))
    assert e == _h_series(cap)
    assert pleth_exp(GradedSeries(1, cap)) == GradedSeries.one(1, cap)
    with pytest.raises(NonzeroConstantTerm):
        pleth_exp(GradedSeries.one(1, cap))


def test_log_examples():
    cap = 5
    assert pleth_log(_h_series(cap)) == _series_of(p(1, cap=cap), cap)
    assert pleth_log(GradedSeries.one(1, cap)) == GradedSeries(1, cap)
    with pytest.raises(ConstantTermNotOne):
        pleth_log(GradedSeries(1, cap, {1: p(1, cap=cap)}))


def _random_series(rng, k, cap):
    terms = {}
    for n in range(1, cap + 1):
        f = SymFun.zero(k, cap)
        for _ in range(2):
            idx = [rng.choice(partitions_of(n)) for _ in range(k)]
            c = RatFun.monomial(rng.randint(-3, 3), rng.randint(0, 2), rng.randint(0, 2))
            f = f + basis_element("p", idx, cap=cap).scale(c)
        terms[n] = f
    return GradedSeries(k, cap, terms)


@pytest.mark.parametrize("seed", range(4))
def test_exp_homomorphism_and_round_trip(seed):
    rng = random.Random(seed)
    k, cap = 1 + seed % 2, 4
    v = _random_series(rng, k, cap)
    w = _random_series(rng, k, cap)
    assert pleth_exp(v + w) == pleth_exp(v) * pleth_exp(w)
    assert pleth_log(pleth_exp(v)) == v
    f = GradedSeries.one(k, cap) + v
    assert pleth_exp(pleth_log(f)) == f


def test_log_via_types_matches_pleth_log():
    cap = 5
    fam = {(1,): p(1, cap=cap)}
    assert log_via_types(fam, 1, cap) == pleth_log(family_series(fam, 1, cap))
    fam = {lam: basis_element("s", [lam], cap=cap).scale(Z ** len(lam))
           for n in range(1, cap + 1) for lam in partitions_of(n)}
    assert log_via_types(fam, 1, cap) == pleth_log(family_series(fam, 1, cap))
    assert log_via_types({}, 1, cap) == GradedSeries(1, cap)


def test_principal_specialize():
    assert principal_specialize(p(1)) == p(1).scale(ONE / (1 - Z))
    for m in range(1, 5):
        lam = (1,) * m
        lhs = principal_specialize(basis_element("h", [(m,)]))
        rhs = hall_littlewood(lam).scale((-1) ** m * Z ** (m * (m - 1) // 2) * hook_specials(lam, 0).pure)
        assert lhs == rhs


def test_principal_specialize_self_adjoint():
    rng = random.Random(7)
    for _ in range(10):
        n = rng.randint(1, 4)
        u = basis_element(rng.choice("hesm"), [rng.choice(partitions_of(n))])
        v = basis_element(rng.choice("hesm"), [rng.choice(partitions_of(n))])
        assert hall_pair(principal_specialize(u), v) == hall_pair(u, principal_specialize(v))
