import pytest

from charvar.combinat import multipartitions
from charvar.errors import DivisibleMu, UnsupportedGenusZero
from charvar.exact import QT, W, Z, RatFun, parse_laurent
from charvar.kernel import (
    KernelQuery, apoly, check_curious, epoly_routes, check_curious_mhp, check_nonempty, dim_mu, epoly, epoly_fast, euler_from_epoly,
    euler_tilde, hmu, mhp_candidate, mhp_pure_part, omega_series,
)
from charvar.symfun import basis_element

Q = RatFun.gen(0)


def qpoly(text):
    return parse_laurent(text, QT)


def test_dim_mu():
    assert dim_mu(KernelQuery(0, ((1, 1),) * 3)) == 0
    assert dim_mu(KernelQuery(1, ((2,),))) == 2
    for g in range(4):
        for k in range(1, 4):
            assert dim_mu(KernelQuery(g, ((1,),) * k)) == 2 * g


def test_hmu_genus0_two_points():
    assert hmu(KernelQuery(0, ((1,), (1,)))).value == 1
    assert hmu(KernelQuery(0, ((2,), (2,)))).value == 0


@pytest.mark.parametrize("g", range(4))
@pytest.mark.parametrize("k", range(1, 4))
def test_hmu_rank_one(g, k):
    res = hmu(KernelQuery(g, ((1,),) * k))
    assert res.value == (Z - W) ** (2 * g)
    assert res.polynomial_flag


def test_omega_degree_one_terms():
    full = omega_series(0, 2, 2).term(1)
    p11 = basis_element("p", [(1,), (1,)], cap=2)
    assert full == p11.scale(1 / ((Z ** 2 - 1) * (1 - W ** 2)))
    for g in range(3):
        pure = omega_series(g, 2, 2, mode="pure").term(1)
        assert pure == p11.scale(Q ** g / (Q - 1))


def test_epoly_examples():
    assert epoly(KernelQuery(1, ((1,),))) == qpoly("q^2 - 2*q + 1")
    assert epoly(KernelQuery(0, ((1,), (1,)))) == qpoly("1")
    assert epoly(KernelQuery(0, ((2,), (2,)))).is_zero()
    assert epoly(KernelQuery(0, ((1, 1),) * 3)) == qpoly("1")


@pytest.mark.parametrize("mu", [((1, 1),), ((2,),), ((1, 1), (2,)), ((2, 1), (1, 1, 1))])
@pytest.mark.parametrize("g", [1, 2])
def test_epoly_routes_agree(g, mu):
    q = KernelQuery(g, mu)
    e = epoly(q)
    assert e == epoly_fast(q)
    assert all(v == e for v in epoly_routes(q).values())
    assert check_curious(e, dim_mu(q))
    # the rank-one factor makes E vanish at q = 1
    assert e.evaluate(1) == 0


def test_apoly_examples():
    for g in range(4):
        assert apoly(KernelQuery(g, ((1,),))).value == qpoly("q") ** g
    assert apoly(KernelQuery(0, ((1, 1),) * 3)).value == qpoly("1")
    res = apoly(KernelQuery(0, ((2,), (2,))))
    assert not res.quiver_interpretation


def test_mhp():
    h = mhp_candidate(KernelQuery(1, ((1,),)))
    # t^2 (1 + t q)^2
    assert h == parse_laurent("q^2*t^4 + 2*q*t^3 + t^2", QT)
    for g, mu in [(1, ((1, 1),)), (0, ((1, 1),) * 3), (1, ((2,), (1, 1))), (2, ((2,),))]:
        q = KernelQuery(g, mu)
        h = mhp_candidate(q)
        assert h.set_second(-1) == epoly(q)
        assert check_curious_mhp(h, dim_mu(q))
        # weight-equals-degree part is q^{d/2} A(q)
        assert mhp_pure_part(h) == apoly(q).value.shift(dim_mu(q) // 2)


def test_check_curious_mhp_rejects_asymmetric():
    h = parse_laurent("q^2*t^4 + 2*q*t^3 + t^2", QT)
    assert check_curious_mhp(h, 2)
    assert not check_curious_mhp(h + parse_laurent("t", QT), 2)


def test_check_curious():
    assert check_curious(qpoly("q^2 - 2*q + 1"), 2)
    assert check_curious(qpoly("1"), 0)
    assert not check_curious(qpoly("q + 1"), 3)


def test_euler():
    assert euler_tilde(KernelQuery(2, ((2,),))) == -2
    assert euler_tilde(KernelQuery(2, ((1, 1),))) == 0
    assert euler_tilde(KernelQuery(1, ((1, 1),))) == 3
    with pytest.raises(UnsupportedGenusZero):
        euler_tilde(KernelQuery(0, ((1,), (1,))))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_euler_matches_limit(n):
    for g in (1, 2):
        for k in (1, 2):
            for mu in multipartitions(n, k):
                q = KernelQuery(g, mu)
                assert euler_tilde(q) == euler_from_epoly(q)


def test_check_nonempty():
    assert check_nonempty(KernelQuery(0, ((1, 1),) * 3))
    for g in range(3):
        assert check_nonempty(KernelQuery(g, ((1,), (1,))))
    assert not check_nonempty(KernelQuery(0, ((1, 1), (1, 1))))
    with pytest.raises(DivisibleMu):
        check_nonempty(KernelQuery(1, ((2,),)))


def test_component_order_irrelevant():
    a = KernelQuery(1, ((2, 1), (1, 1, 1), (3,)))
    b = KernelQuery(1, ((3,), (2, 1), (1, 1, 1)))
    assert hmu(a).value == hmu(b).value


def test_mixed_sizes_give_zero():
    res = hmu(KernelQuery(1, ((1,), (1, 1))))
    assert res.value == 0
    assert res.E.is_zero()


def test_query_validation():
    with pytest.raises(ValueError):
        KernelQuery(-1, ((1,),))
    with pytest.raises(ValueError):
        KernelQuery(0, ())
    assert KernelQuery(1, [[1, 2]]).mu == ((2, 1),)
