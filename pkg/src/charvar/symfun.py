"""Symmetric functions in k alphabets, stored in the power-sum basis.

An index is a k-tuple of partitions; p_index = prod_i p_{index[i]}(x_i).
Coefficients are RatFun in two parameters.  Every SymFun carries a degree
cap N per alphabet and silently-dropped terms are flagged, never hidden.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .combinat import (EMPTY, Partition, c0, divisors, mobius, partitions_of, sym_char,
                       types_of, z_part)
from .errors import (AlphabetMismatch, ConstantTermNotOne, DegreeCapExceeded,
                     NonzeroConstantTerm)
from .exact import ONE, ZERO, RatFun


@lru_cache(maxsize=None)
def _merge(a: tuple, b: tuple) -> Partition:
    if not a:
        return b
    if not b:
        return a
    return Partition.from_parts(a + b)


def _as_coeff(c) -> RatFun:
    if isinstance(c, RatFun):
        return c
    return RatFun.const(c)


# single-alphabet expansions into p, as {Partition: Fraction}

@lru_cache(maxsize=None)
def schur_in_p(lam: tuple) -> dict:
    n = sum(lam)
    return {rho: Fraction(sym_char(lam, rho), z_part(rho)) for rho in partitions_of(n)
            if sym_char(lam, rho)}


@lru_cache(maxsize=None)
def _hn_in_p(n: int) -> dict:
    return {rho: Fraction(1, z_part(rho)) for rho in partitions_of(n)}


@lru_cache(maxsize=None)
def _en_in_p(n: int) -> dict:
    return {rho: Fraction((-1) ** (n - len(rho)), z_part(rho)) for rho in partitions_of(n)}


def _multiply_single(parts: Iterable, factor: Callable) -> dict:
    out = {EMPTY: Fraction(1)}
    for r in parts:
        new: dict = {}
        for a, ca in out.items():
            for b, cb in factor(r).items():
                key = _merge(a, b)
                new[key] = new.get(key, 0) + ca * cb
        out = new
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def h_in_p(lam: tuple) -> dict:
    return _multiply_single(lam, _hn_in_p)


@lru_cache(maxsize=None)
def e_in_p(lam: tuple) -> dict:
    return _multiply_single(lam, _en_in_p)


@lru_cache(maxsize=None)
def _m_matrix(n: int) -> dict:
    """m_lambda in p, from duality <m_lambda, h_mu> = delta."""
    parts = partitions_of(n)
    idx = {rho: i for i, rho in enumerate(parts)}
    size = len(parts)
    # H[mu][rho] = <h_mu, p_rho> = coefficient(h_mu, p_rho) * z_rho
    hmat = [[Fraction(0)] * size for _ in parts]
    for i, mu in enumerate(parts):
        for rho, c in h_in_p(mu).items():
            hmat[i][idx[rho]] = c * z_part(rho)
    # want M with sum_rho M[lam][rho] * H[mu][rho] = delta, i.e. M = (H^T)^{-1}
    ht = [[hmat[j][i] for j in range(size)] for i in range(size)]
    inv = _invert(ht)
    return {lam: {parts[j]: inv[i][j] for j in range(size) if inv[i][j]} for i, lam in enumerate(parts)}


def _invert(mat: list) -> list:
    n = len(mat)
    a = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def m_in_p(lam: tuple) -> dict:
    return _m_matrix(sum(lam))[Partition(lam)]


def p_in_p(lam: tuple) -> dict:
    return {Partition(lam): Fraction(1)}


_BASES = {"p": p_in_p, "h": h_in_p, "e": e_in_p, "s": schur_in_p, "m": m_in_p}


def single_expansion(basis: str, lam) -> dict:
    try:
        fn = _BASES[basis]
    except KeyError:
        raise ValueError(f"unknown basis {basis!r}") from None
    return fn(Partition(lam))


@lru_cache(maxsize=None)
def p_to_schur(rho: tuple) -> dict:
    """p_rho = sum_lambda chi^lambda_rho s_lambda."""
    return {lam: sym_char(lam, rho) for lam in partitions_of(sum(rho)) if sym_char(lam, rho)}


def z_index(index: tuple) -> int:
    out = 1
    for lam in index:
        out *= z_part(lam)
    return out


class SymFun:
    """Element of Lambda(x_1, ..., x_k) truncated at degree `cap` in each alphabet."""

    __slots__ = ("k", "cap", "coeffs", "truncated")

    def __init__(self, k: int, cap: int, coeffs: Mapping | None = None, truncated: bool = False):
        if k < 1:
            raise ValueError("need at least one alphabet")
        self.k = k
        self.cap = cap
        self.truncated = truncated
        clean = {}
        for idx, c in (coeffs or {}).items():
            if len(idx) != k:
                raise AlphabetMismatch(f"index {idx} has wrong number of alphabets")
            if any(sum(lam) > cap for lam in idx):
                self.truncated = True
                continue
            c = _as_coeff(c)
            if not c.is_zero():
                clean[tuple(Partition(l) if not isinstance(l, Partition) else l for l in idx)] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, k: int, cap: int) -> "SymFun":
        return cls(k, cap)

    @classmethod
    def one(cls, k: int, cap: int) -> "SymFun":
        return cls(k, cap, {(EMPTY,) * k: ONE})

    @classmethod
    def tensor(cls, factors: list, cap: int, scalar=ONE) -> "SymFun":
        """prod_i f_i(x_i) for single-alphabet expansions f_i: {Partition: coeff}."""
        out = {(): _as_coeff(scalar)}
        trunc = False
        for f in factors:
            new = {}
            for idx, c in out.items():
                for lam, d in f.items():
                    if sum(lam) > cap:
                        trunc = True
                        continue
                    new[idx + (lam,)] = c * _as_coeff(d)
            out = new
        return cls(len(factors), cap, out, trunc)

    def _compat(self, other: "SymFun"):
        if not isinstance(other, SymFun):
            raise TypeError("expected SymFun")
        if other.k != self.k:
            raise AlphabetMismatch(f"{self.k} vs {other.k} alphabets")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        self._compat(other)
        out = dict(self.coeffs)
        for idx, c in other.coeffs.items():
            s = out.get(idx)
            out[idx] = c if s is None else s + c
        return SymFun(self.k, min(self.cap, other.cap), out, self.truncated or other.truncated)

    def __neg__(self):
        return SymFun(self.k, self.cap, {i: -c for i, c in self.coeffs.items()}, self.truncated)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymFun":
        c = _as_coeff(c)
        if c.is_zero():
            return SymFun(self.k, self.cap, {}, self.truncated)
        return SymFun(self.k, self.cap, {i: v * c for i, v in self.coeffs.items()}, self.truncated)

    def __mul__(self, other):
        if not isinstance(other, SymFun):
            return self.scale(other)
        self._compat(other)
        cap = min(self.cap, other.cap)
        out: dict = {}
        trunc = self.truncated or other.truncated
        for i1, c1 in self.coeffs.items():
            for i2, c2 in other.coeffs.items():
                if any(sum(a) + sum(b) > cap for a, b in zip(i1, i2)):
                    trunc = True
                    continue
                key = tuple(_merge(a, b) for a, b in zip(i1, i2))
                v = c1 * c2
                s = out.get(key)
                out[key] = v if s is None else s + v
        return SymFun(self.k, cap, out, trunc)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SymFun):
            return NotImplemented
        return self.k == other.k and self.coeffs == other.coeffs

    def __repr__(self):
        return f"SymFun(k={self.k}, cap={self.cap}, terms={len(self.coeffs)})"

    def map_coeffs(self, fn: Callable) -> "SymFun":
        return SymFun(self.k, self.cap, {i: fn(c) for i, c in self.coeffs.items()}, self.truncated)

    def map_terms(self, fn: Callable) -> "SymFun":
        """fn(index, coeff) -> coeff."""
        return SymFun(self.k, self.cap, {i: fn(i, c) for i, c in self.coeffs.items()}, self.truncated)

    def multidegree(self) -> set:
        return {tuple(sum(l) for l in idx) for idx in self.coeffs}

    def coefficient(self, index) -> RatFun:
        return self.coeffs.get(tuple(Partition(l) for l in index), ZERO)

    def schur_coefficients(self) -> dict:
        """Single-alphabet Schur expansion {lambda: coeff}."""
        if self.k != 1:
            raise AlphabetMismatch("Schur expansion is implemented for one alphabet")
        out: dict = {}
        for (rho,), c in self.coeffs.items():
            for lam, ch in p_to_schur(rho).items():
                v = c * ch
                s = out.get(lam)
                out[lam] = v if s is None else s + v
        return {lam: c for lam, c in out.items() if not c.is_zero()}


def basis_element(basis: str, index, k: int | None = None, cap: int | None = None) -> SymFun:
    """a_{index} = prod_i a_{index[i]}(x_i) expanded into power sums."""
    index = tuple(Partition.from_parts(l) for l in index)
    k = len(index) if k is None else k
    if len(index) != k:
        raise AlphabetMismatch("index length differs from the number of alphabets")
    cap = max([sum(l) for l in index] + [0]) if cap is None else cap
    if any(sum(l) > cap for l in index):
        raise DegreeCapExceeded(f"index {index} exceeds degree cap {cap}")
    return SymFun.tensor([single_expansion(basis, lam) for lam in index], cap)


def from_schur(coeffs: Mapping, cap: int | None = None) -> SymFun:
    """Single-alphabet SymFun from a Schur expansion {lambda: coeff}."""
    out: dict = {}
    for lam, c in coeffs.items():
        c = _as_coeff(c)
        for rho, v in schur_in_p(Partition(lam)).items():
            key = (rho,)
            t = c * v
            out[key] = out[key] + t if key in out else t
    if cap is None:
        cap = max((sum(l) for l in coeffs), default=0)
    return SymFun(1, cap, out)


def hall_pair(f: SymFun, g: SymFun) -> RatFun:
    if f.k != g.k:
        raise AlphabetMismatch(f"{f.k} vs {g.k} alphabets")
    small, big = (f, g) if len(f.coeffs) <= len(g.coeffs) else (g, f)
    total = ZERO
    for idx, c in small.coeffs.items():
        d = big.coeffs.get(idx)
        if d is not None:
            total = total + c * d * z_index(idx)
    return total


def adams(f: SymFun, d: int, new_cap: int | None = None) -> SymFun:
    """p_r -> p_{dr} in every alphabet and parameters raised to the d-th power."""
    if d < 1:
        raise ValueError("d must be positive")
    cap = f.cap if new_cap is None else new_cap
    out = {}
    trunc = f.truncated
    for idx, c in f.coeffs.items():
        if any(d * sum(l) > cap for l in idx):
            trunc = True
            continue
        out[tuple(l.scale(d) for l in idx)] = c.adams(d)
    return SymFun(f.k, cap, out, trunc)


def principal_specialize(f: SymFun, i: int = 0) -> SymFun:
    """Tensor alphabet i with (1, q, q^2, ...): p_r(x_i) -> p_r(x_i)/(1 - q^r)."""
    def fac(idx, c):
        out = c
        for r in idx[i]:
            out = out / (1 - RatFun.monomial(1, r, 0))
        return out
    return f.map_terms(fac)


class GradedSeries:
    """Series sum_n F_n with F_n homogeneous of multidegree (n, ..., n), n <= cap."""

    __slots__ = ("k", "cap", "terms", "truncated")

    def __init__(self, k: int, cap: int, terms: Mapping | None = None, truncated: bool = False):
        self.k = k
        self.cap = cap
        self.truncated = truncated
        self.terms = {}
        for n, f in (terms or {}).items():
            if n > cap:
                self.truncated = True
                continue
            if f.truncated:
                self.truncated = True
            if not f.is_zero():
                self.terms[n] = SymFun(k, cap, f.coeffs)

    def term(self, n: int) -> SymFun:
        if n > self.cap:
            raise DegreeCapExceeded(f"degree {n} is above the reliable cap {self.cap}")
        return self.terms.get(n, SymFun.zero(self.k, self.cap))

    def constant(self) -> RatFun:
        return self.term(0).coefficient((EMPTY,) * self.k)

    def __add__(self, other):
        out = dict(self.terms)
        for n, f in other.terms.items():
            out[n] = out[n] + f if n in out else f
        return GradedSeries(self.k, min(self.cap, other.cap), out, self.truncated or other.truncated)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "GradedSeries":
        return GradedSeries(self.k, self.cap, {n: f.scale(c) for n, f in self.terms.items()}, self.truncated)

    def __mul__(self, other):
        if not isinstance(other, GradedSeries):
            return self.scale(other)
        cap = min(self.cap, other.cap)
        out: dict = {}
        trunc = self.truncated or other.truncated
        for a, fa in self.terms.items():
            for b, fb in other.terms.items():
                if a + b > cap:
                    trunc = True
                    continue
                prod = fa * fb
                out[a + b] = out[a + b] + prod if a + b in out else prod
        return GradedSeries(self.k, cap, out, trunc)

    def adams(self, d: int) -> "GradedSeries":
        out = {}
        trunc = self.truncated
        for n, f in self.terms.items():
            if n * d <= self.cap:
                out[n * d] = adams(f, d)
            else:
                trunc = True
        return GradedSeries(self.k, self.cap, out, trunc)

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.term(n) == other.term(n) for n in keys)

    def __repr__(self):
        return f"GradedSeries(k={self.k}, cap={self.cap}, degrees={sorted(self.terms)})"

    @classmethod
    def one(cls, k: int, cap: int) -> "GradedSeries":
        return cls(k, cap, {0: SymFun.one(k, cap)})


def _ordinary_exp(v: GradedSeries) -> GradedSeries:
    """exp(v) for v without constant term."""
    out = GradedSeries.one(v.k, v.cap)
    power = GradedSeries.one(v.k, v.cap)
    fact = 1
    for j in range(1, v.cap + 1):
        power = power * v
        fact *= j
        if not power.terms:
            break
        out = out + power.scale(Fraction(1, fact))
    return out


def _ordinary_log(f: GradedSeries) -> GradedSeries:
    """log(f) for f with constant term 1."""
    u = GradedSeries(f.k, f.cap, {n: t for n, t in f.terms.items() if n > 0})
    out = GradedSeries(f.k, f.cap)
    power = GradedSeries.one(f.k, f.cap)
    for j in range(1, f.cap + 1):
        power = power * u
        if not power.terms:
            break
        out = out + power.scale(Fraction((-1) ** (j + 1), j))
    return out


def pleth_exp(v: GradedSeries) -> GradedSeries:
    if 0 in v.terms:
        raise NonzeroConstantTerm("Exp needs a series without constant term")
    total = GradedSeries(v.k, v.cap)
    for d in range(1, v.cap + 1):
        total = total + v.adams(d).scale(Fraction(1, d))
    res = _ordinary_exp(total)
    res.truncated = res.truncated or v.truncated
    return res


def pleth_log(f: GradedSeries) -> GradedSeries:
    if not f.constant().is_one() or len(f.term(0).coeffs) != 1:
        raise ConstantTermNotOne("Log needs constant term 1")
    log = _ordinary_log(f)
    out: dict = {}
    for n in range(1, f.cap + 1):
        acc = SymFun.zero(f.k, f.cap)
        for d in divisors(n):
            mu = mobius(d)
            if mu == 0 or (n // d) not in log.terms:
                continue
            acc = acc + adams(log.terms[n // d], d).scale(Fraction(mu, d))
        out[n] = acc
    return GradedSeries(f.k, f.cap, out, f.truncated)


def log_via_types(family: Mapping, k: int, cap: int) -> GradedSeries:
    """Log(sum_lambda A_lambda) = sum_omega C0(omega) prod_j adams(A_{omega_j}, d_j).

    `family` maps nonzero partitions to SymFun of multidegree (|lambda|, ..., |lambda|);
    missing partitions are zero, A_0 = 1 is implicit.
    """
    out: dict = {}
    for n in range(1, cap + 1):
        acc = SymFun.zero(k, cap)
        for omega in types_of(n):
            c = c0(omega)
            if c == 0:
                continue
            term = None
            for d, lam in omega:
                a = family.get(lam)
                if a is None or a.is_zero():
                    term = None
                    break
                a = adams(a, d)
                term = a if term is None else term * a
            if term is not None:
                acc = acc + term.scale(c)
        out[n] = acc
    return GradedSeries(k, cap, out)


def family_series(family: Mapping, k: int, cap: int) -> GradedSeries:
    """1 + sum_lambda A_lambda grouped by degree."""
    terms = {0: SymFun.one(k, cap)}
    for lam, a in family.items():
        n = sum(lam)
        if n > cap or n == 0:
            continue
        terms[n] = terms[n] + a if n in terms else a
    return GradedSeries(k, cap, terms)
