"""Verification suite: the twelve end-to-end checks run by `charvar verify --suite small`
and by the acceptance tests.

Each check returns a CheckResult; the pass/fail line format is shared with
the command line front end.
"""
from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .combinat import Partition, partitions_of, sym_char
from .exact import ONE, RatFun
from .fforacle.counting import (commutator_histogram, count_char_points, count_quiver_points,
                                count_via_add_fourier, count_via_group_fourier)
from .fforacle.cyclotomic import Cyclo
from .fforacle.fields import pgl_order
from .fforacle.generic import escalate, find_generic_add, find_generic_mult
from .fforacle.gl2 import generic_characters, gl2_char_table, multiplicity_from_table
from .fforacle.matrices import ConjClassFq, all_classes, matrix_space
from .kernel import (KernelQuery, apoly, check_curious, dim_mu, epoly, epoly_fast, euler_from_epoly,
                     euler_tilde, hmu, log_omega, multiplicity_poly)
from .polybases import macdonald, macdonald_schur
from .symfun import (GradedSeries, SymFun, basis_element, family_series, hall_pair,
                     log_via_types, pleth_exp, pleth_log)


@dataclass
class CheckResult:
    number: int
    name: str
    ok: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} [{self.number:2d}] {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _sweep(nmax=3, gmax=2, kmax=3):
    for n in range(1, nmax + 1):
        for k in range(1, kmax + 1):
            for mu in itertools.product(partitions_of(n), repeat=k):
                for g in range(gmax + 1):
                    yield KernelQuery(g, mu)


def _fmt_mu(mu) -> str:
    return ";".join(",".join(str(p) for p in m) for m in mu)


# 1
def check_cauchy(cap: int = 4):
    q, t = RatFun.gen(0), RatFun.gen(1)
    p1 = basis_element("p", [[1], [1]], cap=cap)
    lhs = pleth_exp(GradedSeries(2, cap, {1: p1.scale(1 / ((q - 1) * (1 - t)))}))
    for n in range(1, cap + 1):
        rhs = SymFun.zero(2, cap)
        for lam in partitions_of(n):
            single = {idx[0]: c for idx, c in macdonald(lam).coeffs.items()}
            weight = ONE
            for a, l in lam.arms_legs():
                weight = weight * (q ** (a + 1) - t ** l) * (q ** a - t ** (l + 1))
            rhs = rhs + SymFun.tensor([single, single], cap, 1 / weight)
        if rhs != lhs.term(n):
            return False, f"degree {n} differs"
    return True, f"both sides agree in every degree <= {cap} of each alphabet"


# 2
def check_genus0_collapse(nmax: int = 4):
    checked = 0
    for n in range(1, nmax + 1):
        for mu in itertools.product(partitions_of(n), repeat=2):
            value = hmu(KernelQuery(0, mu)).value
            expected = 1 if n == 1 else 0
            if value != RatFun(expected):
                return False, f"H_mu for mu={_fmt_mu(mu)} is {value}, expected {expected}"
            checked += 1
    return True, f"{checked} pairs mu with n <= {nmax}"


# 3
def check_macdonald_symmetry(nmax: int = 5):
    checked = 0
    for n in range(1, nmax + 1):
        for lam in partitions_of(n):
            a = macdonald_schur(lam)
            b = macdonald_schur(lam.conjugate())
            if {k: v.swap() for k, v in a.items() if not v.is_zero()} != \
                    {k: v for k, v in b.items() if not v.is_zero()}:
                return False, f"symmetry fails for {lam}"
            # H~_lambda(1,1) = h_1^n = sum_nu f^nu s_nu
            for nu in partitions_of(n):
                v = a.get(nu, RatFun(0)).evaluate(1, 1)
                if v != sym_char(nu, Partition([1] * n)):
                    return False, f"(1,1) specialisation fails for {lam} at s_{nu}"
            checked += 1
    return True, f"{checked} partitions with |lambda| <= {nmax}"


# 4
def check_hmu_symmetries():
    checked = 0
    for query in _sweep():
        v = hmu(query).value
        if v.swap() != v or v.substitute((-1, (1, 0)), (-1, (0, 1))) != v:
            return False, f"symmetry fails at g={query.g}, mu={_fmt_mu(query.mu)}"
        checked += 1
    return True, f"{checked} cases with n <= 3, g <= 2, k <= 3"


_MULT_CASES = [(0, ((1, 1),) * 3, (5, 7)), (1, ((1, 1),), (3, 5)), (1, ((2,),), (3, 5))]


# 5
def check_epoly_counts(threads=None):
    notes = []
    for g, mu, fields in _MULT_CASES:
        query = KernelQuery(g, mu)
        e = epoly(query)
        for q0 in fields:
            q, assignment = escalate(find_generic_mult, mu, q0, avoid=set(fields) - {q0})
            classes = [ConjClassFq.semisimple(a, q) for a in assignment]
            count = count_char_points(g, classes, threads=threads)
            pgl = pgl_order(2, q)
            if count % pgl or Fraction(count, pgl) != e.evaluate(q):
                return False, f"g={g} mu={_fmt_mu(mu)} q={q}: count/|PGL| = {Fraction(count, pgl)}, E(q) = {e.evaluate(q)}"
            notes.append(f"{_fmt_mu(mu)}@F{q}" + ("" if q == q0 else f"(from F{q0})"))
    return True, "count/|PGL_2| = E(q) for " + ", ".join(notes)


# 6
def check_apoly_counts(threads=None):
    notes = []
    for g, mu, _ in _MULT_CASES:
        query = KernelQuery(g, mu)
        if not query.indivisible():
            continue
        a = apoly(query).value
        d = dim_mu(query)
        fields = (3, 5)
        for q0 in fields:
            q, assignment = escalate(find_generic_add, mu, q0, avoid=set(fields) - {q0})
            orbits = [ConjClassFq.semisimple(x, q, additive=True) for x in assignment]
            count = count_quiver_points(g, orbits, threads=threads)
            pgl = pgl_order(2, q)
            if Fraction(count, pgl) != q ** (d // 2) * a.evaluate(q):
                return False, f"g={g} mu={_fmt_mu(mu)} q={q}: count/|PGL| = {Fraction(count, pgl)}"
            notes.append(f"{_fmt_mu(mu)}@F{q}" + ("" if q == q0 else f"(from F{q0})"))
    for query in _sweep():
        if query.indivisible():
            coeffs = apoly(query).value.terms
            if any(c < 0 or c.denominator != 1 or a < 0 for (a, _), c in coeffs.items()):
                return False, f"A has a negative or non-integral coefficient at mu={_fmt_mu(query.mu)}"
    return True, "count/|PGL_2| = q^(d/2) A(q) for " + ", ".join(notes) + "; A coefficients non-negative"


# 7
def check_fourier(threads=None):
    p = 3
    table = gl2_char_table(p)
    classes = all_classes(2, p)
    group_cases = 0
    for g in (0, 1):
        for k in (1, 3):
            for combo in itertools.combinations_with_replacement(classes, k):
                direct = count_char_points(g, list(combo), threads=threads)
                if direct != count_via_group_fourier(g, list(combo), table):
                    return False, f"group count differs at g={g}, classes={[c.representative for c in combo]}"
                group_cases += 1
    orbits = all_classes(2, p, additive=True)
    add_cases = 0
    for g in (0, 1):
        for k in (1, 3):
            for combo in itertools.combinations_with_replacement(orbits, k):
                direct = count_quiver_points(g, list(combo), threads=threads)
                if direct != count_via_add_fourier(g, list(combo)):
                    return False, f"additive count differs at g={g}, orbits={[o.representative for o in combo]}"
                add_cases += 1
    # #{(X1, X2): [X1, X2] = z} = sum_chi |G| chi(z) / chi(1)
    hist = commutator_histogram(2, p)
    space = matrix_space(2, p)
    if int(hist.sum()) != len(space.group()) ** 2:
        return False, "commutator histogram does not cover all pairs"
    for c in classes:
        label = table.class_of(c.representative)
        expected = Cyclo.const(table.N, 0)
        for chi in table.characters:
            expected = expected + table.value(chi, label) * Fraction(table.group_order, table.degree(chi))
        if not expected.is_rational() or any(hist[m] != expected.rational() for m in c.members):
            return False, f"commutator count differs on class {label}"
    return True, (f"{group_cases} group and {add_cases} additive class tuples over F_3 agree; "
                  f"all {len(space.group())}^2 commutator pairs match the character sum")


# 8
def check_multiplicity():
    checked = 0
    for query in _sweep():
        if multiplicity_poly(query) != apoly(query).value:
            return False, f"multiplicity differs from A at g={query.g}, mu={_fmt_mu(query.mu)}"
        checked += 1
    table_cases = []
    for k in (1, 2, 3):
        for mu in itertools.product(((2,), (1, 1)), repeat=k):
            for g in (0, 1, 2):
                for q0 in (3, 5):
                    q, _ = escalate(generic_characters, mu, q0, avoid={3, 5} - {q0})
                    m = multiplicity_from_table(g, mu, q)
                    if m != apoly(KernelQuery(g, mu)).value.evaluate(q):
                        return False, f"table multiplicity differs at g={g}, mu={_fmt_mu(mu)}, q={q}"
                    table_cases.append(q)
    escalated = sum(1 for q in table_cases if q not in (3, 5))
    return True, (f"{checked} symbolic cases; {len(table_cases)} GL_2 table cases "
                  f"({escalated} escalated past F_5)")


# 9
def check_euler():
    checked = 0
    for n in range(1, 4):
        for k in (1, 2):
            for mu in itertools.product(partitions_of(n), repeat=k):
                for g in (1, 2):
                    query = KernelQuery(g, mu)
                    limit = euler_from_epoly(query)
                    closed = euler_tilde(query)
                    if limit != closed:
                        return False, f"g={g} mu={_fmt_mu(mu)}: limit {limit}, closed form {closed}"
                    if g > 1 and any(m != Partition([n]) for m in mu) and closed != 0:
                        return False, f"g={g} mu={_fmt_mu(mu)} should vanish"
                    checked += 1
    special = euler_tilde(KernelQuery(2, [(2,)]))
    if special != -2:
        return False, f"g=2, mu=(2) gives {special}"
    return True, f"{checked} cases agree; g=2, mu=(2) gives -2"


# 10
def check_palindromic():
    checked = 0
    for query in _sweep():
        e = epoly(query)
        if not check_curious(e, dim_mu(query)) or e != epoly_fast(query):
            return False, f"E not palindromic at g={query.g}, mu={_fmt_mu(query.mu)}"
        checked += 1
    return True, f"{checked} E-polynomials satisfy E(q) = q^d E(1/q)"


def _random_family(rng, k, cap):
    fam = {}
    for m in range(1, cap + 1):
        parts = partitions_of(m)
        for lam in parts:
            coeffs = {}
            for _ in range(rng.randint(1, 3)):
                idx = tuple(rng.choice(parts) for _ in range(k))
                c = RatFun.monomial(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(0, 2), rng.randint(0, 2))
                if rng.random() < 0.3:
                    c = c / (1 - RatFun.monomial(1, rng.randint(1, 2), 0))
                coeffs[idx] = coeffs.get(idx, RatFun(0)) + c
            fam[lam] = SymFun(k, cap, coeffs)
    return fam


# 11
def check_log_routes(cap: int = 5, n_random: int = 20, seed: int = 2024):
    for g in (0, 1, 2):
        for k in (1, 2):
            if log_omega(g, k, cap, "full", "types") != log_omega(g, k, cap, "full", "mobius"):
                return False, f"Omega family differs at g={g}, k={k}"
    rng = random.Random(seed)
    for i in range(n_random):
        k = 1 + i % 2
        fam = _random_family(rng, k, cap)
        if log_via_types(fam, k, cap) != pleth_log(family_series(fam, k, cap)):
            return False, f"random family {i} differs"
    return True, f"Omega families (g <= 2, k <= 2) and {n_random} random families agree up to degree {cap}"


# 12
def check_power_sum_pairing(nmax: int = 6):
    checked = 0
    for n in range(1, nmax + 1):
        for d in (d for d in range(1, n + 1) if n % d == 0):
            p = basis_element("p", [[d] * (n // d)])
            for lam in partitions_of(n):
                value = hall_pair(p, basis_element("h", [lam]))
                if all(part % d == 0 for part in lam):
                    closed = Fraction(math.factorial(n // d),
                                      math.prod(math.factorial(part // d) for part in lam))
                else:
                    closed = Fraction(0)
                if value != RatFun(closed):
                    return False, f"n={n}, d={d}, lambda={lam}: {value} vs {closed}"
                checked += 1
    return True, f"{checked} pairings with n <= {nmax}"


CHECKS = [
    (1, "Cauchy identity", check_cauchy),
    (2, "genus-0 two-point collapse", check_genus0_collapse),
    (3, "Macdonald symmetry and (1,1) specialisation", check_macdonald_symmetry),
    (4, "H_mu(z,w) symmetries", check_hmu_symmetries),
    (5, "E-polynomial vs direct count", check_epoly_counts),
    (6, "A-polynomial vs direct additive count", check_apoly_counts),
    (7, "Fourier counts vs direct counts", check_fourier),
    (8, "multiplicity vs A-polynomial", check_multiplicity),
    (9, "Euler characteristics", check_euler),
    (10, "curious palindromicity", check_palindromic),
    (11, "Log by types vs Moebius inversion", check_log_routes),
    (12, "power-sum/complete pairing closed form", check_power_sum_pairing),
]

_THREADED = {5, 6, 7}


def run_check(number: int, threads=None) -> CheckResult:
    num, name, fn = CHECKS[number - 1]
    start = time.perf_counter()
    try:
        ok, detail = fn(threads=threads) if num in _THREADED else fn()
    except Exception as exc:  # a crash is a failure with its reason
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(num, name, ok, detail, time.perf_counter() - start)


def run_suite(suite: str = "small", threads=None, only=None) -> list:
    if suite != "small":
        raise ValueError(f"unknown suite {suite!r}")
    numbers = only or [c[0] for c in CHECKS]
    return [run_check(n, threads) for n in numbers]
