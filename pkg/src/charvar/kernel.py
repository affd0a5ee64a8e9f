"""The genus-g Cauchy kernel Omega, the rational function H_mu(z, w) and its
specialisations: E-polynomials, pure parts, the Poincare candidate and
Euler characteristics."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce

from .charsums import epoly_character_sum, multiplicity
from .combinat import Partition, divisor_sigma, divisors, format_multipartition, mobius, partitions_of
from .errors import DivisibleMu, NotPolynomial, UnsupportedGenusZero
from .exact import (QT, ZERO, LaurentPoly2, RatFun, as_polynomial,
                    substitute_halfpowers)
from .polybases import (hall_littlewood, hook_genus, hook_poly, hook_specials, macdonald)
from .symfun import (GradedSeries, SymFun, basis_element, hall_pair, log_via_types,
                     pleth_log, principal_specialize, family_series)

log = logging.getLogger(__name__)

MODES = ("full", "pure", "epoly")

# z -> u, w -> 1/u and the reverse orientation; z -> 0, w -> u
_E_IMAGES = ((1, (1, 0)), (1, (-1, 0)))
_E_IMAGES_REV = ((1, (-1, 0)), (1, (1, 0)))
_PURE_IMAGES = ((0, (0, 0)), (1, (1, 0)))
# z -> -1/u, w -> t u
_MHP_IMAGES = ((-1, (-1, 0)), (1, (1, 1)))


@dataclass(frozen=True)
class KernelQuery:
    g: int
    mu: tuple
    mode: str = "full"

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(Partition.from_parts(m) for m in self.mu))
        if self.g < 0:
            raise ValueError("genus must be non-negative")
        if not self.mu:
            raise ValueError("need at least one puncture")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")

    @property
    def k(self) -> int:
        return len(self.mu)

    @property
    def n(self) -> int:
        return self.mu[0].size

    def sizes_agree(self) -> bool:
        return all(m.size == self.n for m in self.mu)

    def indivisible(self) -> bool:
        parts = [p for m in self.mu for p in m]
        return reduce(math.gcd, parts, 0) == 1


def dim_mu(q: KernelQuery) -> int:
    n = q.n
    d = n * n * (2 * q.g - 2 + q.k) - sum(p * p for m in q.mu for p in m) + 2
    assert d % 2 == 0, "dimension must be even"
    return d


def _hook_factor(lam, g: int, k: int, mode: str) -> RatFun:
    if mode == "full":
        return hook_genus(lam, g)
    if mode == "pure":
        return hook_specials(lam, g).pure
    lam = Partition(lam)
    # q^{(1-g)|lam|} (q^{-n(lam)} H_lam(q))^{2g+k-2}
    return RatFun.monomial(1, (1 - g) * lam.size - lam.nstat() * (2 * g + k - 2), 0) * \
        hook_poly(lam) ** (2 * g + k - 2)


def _single(lam, mode: str, cap: int) -> SymFun:
    lam = Partition(lam)
    if mode == "full":
        f = macdonald(lam)
        return SymFun(1, cap, {idx: c.adams(2) for idx, c in f.coeffs.items()})
    if mode == "pure":
        return SymFun(1, cap, hall_littlewood(lam).coeffs)
    s = basis_element("s", [lam], cap=cap)
    return principal_specialize(s, 0)


@lru_cache(maxsize=None)
def omega_family(g: int, k: int, cap: int, mode: str = "full") -> dict:
    """{lambda: hook(lambda) * prod_i B_lambda(x_i)} for 0 < |lambda| <= cap."""
    fam = {}
    for m in range(1, cap + 1):
        for lam in partitions_of(m):
            single = {idx[0]: c for idx, c in _single(lam, mode, cap).coeffs.items()}
            fam[lam] = SymFun.tensor([single] * k, cap, _hook_factor(lam, g, k, mode))
    return fam


def omega_series(g: int, k: int, cap: int, mode: str = "full") -> GradedSeries:
    return family_series(omega_family(g, k, cap, mode), k, cap)


@lru_cache(maxsize=None)
def log_omega(g: int, k: int, cap: int, mode: str = "full", method: str = "types") -> GradedSeries:
    if method == "types":
        return log_via_types(omega_family(g, k, cap, mode), k, cap)
    return pleth_log(omega_series(g, k, cap, mode))


def _pair_with_h(q: KernelQuery, mode: str, method: str = "types") -> RatFun:
    series = log_omega(q.g, q.k, q.n, mode, method)
    h = basis_element("h", q.mu, cap=q.n)
    return hall_pair(series.term(q.n), h)


@dataclass
class HmuResult:
    value: RatFun
    polynomial_flag: bool
    d_mu: int
    E: LaurentPoly2 | None = None
    A: LaurentPoly2 | None = None
    notes: list = field(default_factory=list)


def _even_check(value: RatFun) -> bool:
    return value.substitute((-1, (1, 0)), (-1, (0, 1))) == value


@lru_cache(maxsize=None)
def _hmu_value(q: KernelQuery) -> RatFun:
    if not q.sizes_agree():
        return ZERO
    z2 = RatFun.monomial(1, 2, 0)
    w2 = RatFun.monomial(1, 0, 2)
    return (z2 - 1) * (1 - w2) * _pair_with_h(KernelQuery(q.g, q.mu, "full"), "full")


def hmu(q: KernelQuery) -> HmuResult:
    value = _hmu_value(KernelQuery(q.g, q.mu, "full"))
    d = dim_mu(q) if q.sizes_agree() else 0
    res = HmuResult(value, value.is_polynomial_denominator(), d)
    if not res.polynomial_flag:
        log.warning("H_mu is not a Laurent polynomial: %s", value.to_str())
        res.notes.append("non-polynomial")
    elif not _even_check(value):
        raise AssertionError("H_mu(z,w) is not invariant under (z,w) -> (-z,-w)")
    if q.sizes_agree():
        try:
            res.E = substitute_halfpowers(value, _E_IMAGES).shift(d // 2)
        except NotPolynomial:
            res.notes.append("E not polynomial")
        try:
            res.A = substitute_halfpowers(value, _PURE_IMAGES)
        except NotPolynomial:
            res.notes.append("A not polynomial")
    else:
        res.E = LaurentPoly2({}, QT)
        res.A = LaurentPoly2({}, QT)
    return res


def _to_q_poly(f: RatFun) -> LaurentPoly2:
    return as_polynomial(f, QT)


def epoly_routes(q: KernelQuery) -> dict:
    """E(q) computed independently by each route, keyed by route name."""
    if not q.sizes_agree():
        zero = LaurentPoly2({}, QT)
        return {"z=u": zero, "z=1/u": zero, "character_sum": zero, "principal": zero}
    value = _hmu_value(KernelQuery(q.g, q.mu, "full"))
    d = dim_mu(q)
    return {
        "z=u": substitute_halfpowers(value, _E_IMAGES).shift(d // 2),
        "z=1/u": substitute_halfpowers(value, _E_IMAGES_REV).shift(d // 2),
        "character_sum": _to_q_poly(epoly_character_sum(q.g, q.mu)),
        "principal": epoly_fast(q),
    }


def epoly(q: KernelQuery, cross_check: bool = True) -> LaurentPoly2:
    """E(q) = q^{d/2} H_mu(sqrt q, 1/sqrt q), checked against the character-sum route."""
    if not q.sizes_agree():
        return LaurentPoly2({}, QT)
    value = _hmu_value(KernelQuery(q.g, q.mu, "full"))
    d = dim_mu(q)
    e1 = substitute_halfpowers(value, _E_IMAGES).shift(d // 2)
    e2 = substitute_halfpowers(value, _E_IMAGES_REV).shift(d // 2)
    if e1 != e2:
        raise AssertionError("E differs between the two orientations of (z, w)")
    if cross_check:
        e3 = _to_q_poly(epoly_character_sum(q.g, q.mu))
        if e1 != e3:
            raise AssertionError(f"E routes disagree: {e1} vs {e3}")
    return e1


def epoly_fast(q: KernelQuery) -> LaurentPoly2:
    """E via the principal-specialisation kernel (no Macdonald polynomials)."""
    if not q.sizes_agree():
        return LaurentPoly2({}, QT)
    pairing = _pair_with_h(KernelQuery(q.g, q.mu, "epoly"), "epoly")
    qq = RatFun.gen(0)
    val = pairing * (qq - 1) ** 2 / qq
    return _to_q_poly(val).shift(dim_mu(q) // 2)


@dataclass
class APolyResult:
    value: LaurentPoly2
    quiver_interpretation: bool


def apoly(q: KernelQuery) -> APolyResult:
    """A(q) = H_mu(0, sqrt q), computed from the Hall-Littlewood kernel."""
    if not q.sizes_agree():
        return APolyResult(LaurentPoly2({}, QT), q.indivisible())
    pairing = _pair_with_h(KernelQuery(q.g, q.mu, "pure"), "pure")
    val = pairing * (RatFun.gen(0) - 1)
    return APolyResult(_to_q_poly(val), q.indivisible())


def mhp_candidate(q: KernelQuery) -> LaurentPoly2:
    """(t sqrt q)^d H_mu(-1/sqrt q, t sqrt q) as a polynomial in (q, t)."""
    if not q.sizes_agree():
        return LaurentPoly2({}, QT)
    value = _hmu_value(KernelQuery(q.g, q.mu, "full"))
    d = dim_mu(q)
    return substitute_halfpowers(value, _MHP_IMAGES).shift(d // 2, d)


def mhp_pure_part(h: LaurentPoly2) -> LaurentPoly2:
    """Terms q^i t^{2i} of a Poincare candidate, with t set to 1."""
    return LaurentPoly2({(a, 0): c for (a, b), c in h.terms.items() if b == 2 * a}, QT)


def check_curious(e: LaurentPoly2, d: int) -> bool:
    """E(q) == q^d E(1/q)."""
    return e == e.invert_first().shift(d)


def check_curious_mhp(h: LaurentPoly2, d: int) -> bool:
    """H(1/(q t^2), t) == (q t)^{-d} H(q, t)."""
    inverted = LaurentPoly2({(-a, b - 2 * a): c for (a, b), c in h.terms.items()}, h.names)
    return inverted == h.shift(-d, -d)


def euler_tilde(q: KernelQuery) -> Fraction:
    """Euler characteristic of the character variety modulo the torus (g >= 1)."""
    if q.g == 0:
        raise UnsupportedGenusZero("the genus 0 Euler characteristic is not supported")
    n = q.n
    if q.g > 1:
        if all(m == Partition([n]) for m in q.mu):
            return Fraction(mobius(n) * n ** (2 * q.g - 3))
        return Fraction(0)
    gcd = reduce(math.gcd, [p for m in q.mu for p in m], 0)
    total = Fraction(0)
    for d in divisors(gcd):
        term = Fraction(divisor_sigma(n // d) * mobius(d))
        for m in q.mu:
            term *= math.factorial(n // d)
            for p in m:
                term /= math.factorial(p // d)
        total += term
    return total / n


def euler_from_epoly(q: KernelQuery, e: LaurentPoly2 | None = None) -> Fraction:
    """lim_{q -> 1} E(q) / (q - 1)^{2g}."""
    e = epoly(q) if e is None else e
    qq = RatFun.gen(0)
    return (e.to_ratfun() / (qq - 1) ** (2 * q.g)).evaluate(1)


def check_nonempty(q: KernelQuery) -> bool:
    if not q.indivisible():
        raise DivisibleMu(f"mu={format_multipartition(q.mu)} is divisible")
    return not apoly(q).value.is_zero()


def multiplicity_poly(q: KernelQuery) -> LaurentPoly2:
    return _to_q_poly(multiplicity(q.g, q.mu))
