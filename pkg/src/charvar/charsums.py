"""Character sums over types of GL_n(F_q) and tensor-product multiplicities.

Everything here is a polynomial (or rational function) in q, the first
generator of RatFun.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .combinat import Partition, TypeT, k0, partitions_of, sym_char, types_of, z_part
from .errors import SizeMismatch
from .exact import ONE, ZERO, RatFun
from .polybases import green, hall_littlewood, hook_poly, hook_specials
from .symfun import SymFun, adams, hall_pair, schur_in_p

Q = RatFun.gen(0)


def type_star(lam) -> TypeT:
    """Semisimple class type (1,(1^{l_1}))(1,(1^{l_2}))... of a partition."""
    return TypeT([(1, Partition([1] * p)) for p in Partition(lam)])


def type_dagger(lam) -> TypeT:
    """Semisimple character type (1,(l_1))(1,(l_2))... of a partition."""
    return TypeT([(1, Partition([p])) for p in Partition(lam)])


@lru_cache(maxsize=None)
def schur_of_type(alpha: TypeT) -> SymFun:
    """s_alpha = prod_j s_{alpha_j}(x^{d_j}) in one alphabet."""
    n = alpha.size
    out = SymFun.one(1, n)
    for d, lam in alpha:
        f = SymFun(1, n, {(rho,): c for rho, c in schur_in_p(lam).items()})
        out = out * adams(f, d, n)
    return out


@lru_cache(maxsize=None)
def hl_of_type(beta: TypeT) -> SymFun:
    """H~_beta(x; q) = prod_j H~_{beta_j}(x^{d_j}; q^{d_j})."""
    n = beta.size
    out = SymFun.one(1, n)
    for d, lam in beta:
        f = hall_littlewood(lam)
        out = out * adams(SymFun(1, n, f.coeffs), d, n)
    return out


@lru_cache(maxsize=None)
def a_pair(alpha: TypeT, beta: TypeT) -> RatFun:
    """A(alpha, beta) = <s_alpha, H~_beta(x; q)>."""
    alpha, beta = TypeT(alpha), TypeT(beta)
    if alpha.size != beta.size:
        raise SizeMismatch(f"|{alpha}| != |{beta}|")
    return hall_pair(schur_of_type(alpha), hl_of_type(beta))


def _aligned_tuples(omega: TypeT):
    """Ordered tuples of partitions tau_j with |tau_j| = |omega_j|."""
    return itertools.product(*(partitions_of(sum(lam)) for _, lam in omega))


def _bracket(omega: TypeT, taus) -> Partition:
    return Partition.from_parts(d * p for (d, _), tau in zip(omega, taus) for p in tau)


def a_pair_raw(alpha: TypeT, beta: TypeT) -> RatFun:
    """The same quantity from the character/Green double sum, used as an oracle."""
    alpha, beta = TypeT(alpha), TypeT(beta)
    if alpha.size != beta.size:
        raise SizeMismatch(f"|{alpha}| != |{beta}|")
    # inner sums grouped by bracket: sum_{nu aligned with beta} Q^beta_nu / z_nu
    inner: dict = {}
    for nus in _aligned_tuples(beta):
        val = ONE
        z = 1
        for (d, lam), nu in zip(beta, nus):
            val = val * green(nu, lam).adams(d)
            z *= z_part(nu)
        key = _bracket(beta, nus)
        inner[key] = inner.get(key, ZERO) + val / z
    total = ZERO
    for taus in _aligned_tuples(alpha):
        ch = 1
        z = 1
        for (_, lam), tau in zip(alpha, taus):
            ch *= sym_char(lam, tau)
            z *= z_part(tau)
        if not ch:
            continue
        key = _bracket(alpha, taus)
        if key in inner:
            total = total + inner[key] * Fraction(z_part(key) * ch, z)
    return total


class TypeSums:
    __slots__ = ("H", "Hhat")

    def __init__(self, H, Hhat):
        self.H, self.Hhat = H, Hhat

    def __repr__(self):
        return f"TypeSums(H={self.H}, Hhat={self.Hhat})"


def _prefactor(omega: TypeT) -> RatFun:
    k = k0(omega)
    if k == 0:
        return ZERO
    return (Q - 1) * Fraction(k, omega.worder())


def char_type_sums(mu_types, omega: TypeT) -> TypeSums:
    """H^mu_omega (sum over classes of type omega) and its dual Hhat^mu_omega."""
    omega = TypeT(omega)
    n = omega.size
    mu_types = [TypeT(m) for m in mu_types]
    for m in mu_types:
        if m.size != n:
            raise SizeMismatch("all types must have the same size")
    pre = _prefactor(omega)
    if pre.is_zero():
        return TypeSums(ZERO, ZERO)
    h = pre
    hh = pre
    for m in mu_types:
        h = h * a_pair(m, omega) * (-1) ** (n + m.f())
        hh = hh * a_pair(omega, m) * (-1) ** (n + omega.f())
    return TypeSums(h, hh)


@lru_cache(maxsize=None)
def hook_pure_type(omega: TypeT, g: int) -> RatFun:
    """Hook function at (0, sqrt q) extended to a type: product over pairs with q -> q^d."""
    out = ONE
    for d, lam in omega:
        out = out * hook_specials(lam, g).pure.adams(d)
    return out


def multiplicity(g: int, mu) -> RatFun:
    """<Lambda (x) R_mu, 1> as a sum over types of GL_n."""
    mu = tuple(Partition(m) for m in mu)
    n = mu[0].size
    if any(m.size != n for m in mu):
        return ZERO
    daggers = [type_dagger(m) for m in mu]
    total = ZERO
    for omega in types_of(n):
        s = char_type_sums(daggers, omega).H
        if not s.is_zero():
            total = total + hook_pure_type(omega, g) * s
    return total


def hook_poly_type(omega: TypeT) -> RatFun:
    out = ONE
    for d, lam in omega:
        out = out * hook_poly(lam).adams(d)
    return out


def degree_ratio(omega: TypeT) -> RatFun:
    """|GL_n(F_q)| / X_omega(1) for an irreducible character of type omega."""
    n = omega.size
    sign = (-1) ** omega.f()
    return hook_poly_type(omega) * RatFun.monomial(sign, n * (n - 1) // 2 - omega.nstat(), 0)


def semisimple_centralizer(lam) -> RatFun:
    """|C_G(x)| for x semisimple with eigenvalue multiplicities lam, all eigenvalues in F_q."""
    out = ONE
    for m in Partition(lam):
        out = out * RatFun.monomial(1, m * (m - 1) // 2, 0)
        for j in range(1, m + 1):
            out = out * (RatFun.monomial(1, j, 0) - 1)
    return out


def epoly_character_sum(g: int, mu) -> RatFun:
    """#M_mu(F_q) via the sum over character types (Frobenius formula grouped by type)."""
    mu = tuple(Partition(m) for m in mu)
    n = mu[0].size
    k = len(mu)
    stars = [type_star(m) for m in mu]
    total = ZERO
    for omega in types_of(n):
        s = char_type_sums(stars, omega).Hhat
        if s.is_zero():
            continue
        total = total + degree_ratio(omega) ** (2 * g + k - 2) * s
    for m in mu:
        total = total / semisimple_centralizer(m)
    return total * (Q - 1)
