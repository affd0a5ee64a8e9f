import json
import math

import pytest

from charvar import polybases
from charvar.combinat import Partition, TypeT, partitions_of, single_type, sym_char
from charvar.errors import SizeMismatch
from charvar.exact import ONE, ZERO, RatFun, W, Z
from charvar.polybases import (
    TableStore, green, hall_littlewood, hall_littlewood_plethystic, hall_littlewood_schur,
    hook_genus, hook_specials, kostka_foulkes, kostka_foulkes_charge, macdonald,
    macdonald_schur, specialize_zero_q,
)
from charvar.symfun import basis_element

Q, T = RatFun.gen(0), RatFun.gen(1)
P = Partition


def test_macdonald_small():
    assert macdonald_schur((1,)) == {P((1,)): ONE}
    assert macdonald_schur((2,)) == {P((2,)): ONE, P((1, 1)): Q}
    assert macdonald_schur((1, 1)) == {P((2,)): ONE, P((1, 1)): T}


@pytest.mark.parametrize("n", range(1, 6))
def test_macdonald_at_one_is_h1_power(n):
    h1n = basis_element("p", [(1,) * n])
    for lam in partitions_of(n):
        assert macdonald(lam).map_coeffs(lambda c: RatFun(c.evaluate(1, 1))) == h1n


def test_hall_littlewood_small():
    assert hall_littlewood_schur((1,)) == {P((1,)): ONE}
    assert hall_littlewood_schur((1, 1)) == {P((2,)): ONE, P((1, 1)): Q}
    assert hall_littlewood_schur((2,)) == {P((2,)): ONE}


@pytest.mark.parametrize("n", range(1, 6))
def test_hall_littlewood_three_routes(n):
    for lam in partitions_of(n):
        special = {nu: specialize_zero_q(c) for nu, c in macdonald_schur(lam).items()}
        special = {nu: c for nu, c in special.items() if not c.is_zero()}
        assert hall_littlewood_schur(lam) == special
        assert hall_littlewood_plethystic(lam) == special
        assert macdonald(lam).map_coeffs(specialize_zero_q) == hall_littlewood(lam)


def test_kostka_foulkes_examples():
    assert kostka_foulkes((2,), (1, 1)) == 1
    assert kostka_foulkes((1, 1), (1, 1)) == Q
    with pytest.raises(SizeMismatch):
        kostka_foulkes((2,), (1,))


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_foulkes_positive_and_dimension(n):
    parts = partitions_of(n)
    for lam in parts:
        total = 0
        for nu in parts:
            k = kostka_foulkes_charge(nu, lam)
            assert k.den.is_one()
            coeffs = k.as_polynomial().terms
            assert all(c >= 0 and c.denominator == 1 for c in coeffs.values())
            total += k.evaluate(1) * sym_char(nu, (1,) * n)
        # at q = 1 these are Kostka numbers, so the sum counts words of content lam
        assert total == math.factorial(n) // math.prod(math.factorial(x) for x in lam)


def test_green():
    assert green((1,), (1,)) == 1
    assert green((2,), (1, 1)) == 1 - Q
    a = TypeT([(1, (1,)), (1, (1,))])
    assert green(single_type((1,), 2), a) == ZERO
    assert green(single_type((1,), 2), single_type((1,), 2)) == 1


def test_hook_genus():
    for g in range(3):
        assert hook_genus((1,), g) == (Z - W) ** (2 * g) / ((Z ** 2 - 1) * (1 - W ** 2))
        assert hook_genus((), g) == ONE


@pytest.mark.parametrize("n", range(1, 5))
def test_hook_pure_specialization(n):
    for lam in partitions_of(n):
        for g in range(3):
            # z -> 0 leaves a function of w; compare with the pure value at q = w^2
            special = hook_genus(lam, g).substitute((0, (0, 0)), (1, (0, 1)))
            want = hook_specials(lam, g).pure.substitute((1, (0, 2)), (1, (0, 1)))
            assert special == want


def test_hook_specials():
    for g in range(4):
        s = hook_specials((1,), g)
        assert s.a_lambda == Q - 1
        assert s.pure == Q ** g / (Q - 1)
        # (q^{-1/2}(1-q))^{2g-2}
        assert s.epoly == (1 - Q) ** (2 * g - 2) * Q ** (1 - g)
    assert hook_specials((2,), 1).hookpoly == (1 - Q) * (1 - Q ** 2)


def test_cache_round_trip(fresh_cache):
    store = TableStore()
    first = store.tables(3)
    assert store.misses == 1
    path = fresh_cache / "tables-n3.json"
    assert path.exists()
    again = TableStore()
    assert again.tables(3) == first
    assert (again.hits, again.misses) == (1, 0)


def test_corrupt_cache_is_rebuilt(fresh_cache):
    path = fresh_cache / "tables-n3.json"
    path.write_text("{not json")
    store = TableStore()
    mac, kf = store.tables(3)
    assert store.misses == 1
    assert mac[P((2, 1))] == macdonald_schur((2, 1))
    assert json.loads(path.read_text())["n"] == 3


def test_cache_disabled(monkeypatch, tmp_path):
    monkeypatch.setenv("CHARVAR_CACHE_DIR", "")
    assert polybases.cache_dir() is None
    store = TableStore()
    store.tables(2)
    assert list(tmp_path.iterdir()) == []
