"""Search for generic tuples of semisimple classes (multiplicative) or orbits (additive).

An assignment is a k-tuple; entry i lists (eigenvalue, multiplicity) pairs
following the parts of mu^i. The search works with exponents modulo q-1
(multiplicative, with respect to a primitive root) or with field elements
modulo p (additive); the checkers work directly in the field.
"""
from __future__ import annotations

import itertools
import math
import random
from functools import reduce

from ..combinat import Partition, format_multipartition
from ..errors import DivisibleMu, NotFound
from .fields import Fq, next_prime

EXHAUSTIVE_LIMIT = 2_000_000
RANDOM_TRIALS = 200_000


def _sub_choices(parts, size):
    """Vectors (c_j) with 0 <= c_j <= parts[j] and sum c_j = size."""
    ranges = [range(min(m, size) + 1) for m in parts]
    return [c for c in itertools.product(*ranges) if sum(c) == size]


def _class_sums(parts, values, modulus, size):
    return {sum(c * v for c, v in zip(cs, values)) % modulus for cs in _sub_choices(parts, size)}


def _zero_reachable(sets, modulus) -> bool:
    acc = {0}
    for s in sets:
        acc = {(a + b) % modulus for a in acc for b in s}
    return 0 in acc


def _exponents_ok(mu, values, modulus) -> bool:
    n = mu[0].size
    total = sum(m * v for parts, vs in zip(mu, values) for m, v in zip(parts, vs)) % modulus
    if total:
        return False
    for size in range(1, n):
        sets = [_class_sums(parts, vs, modulus, size) for parts, vs in zip(mu, values)]
        if _zero_reachable(sets, modulus):
            return False
    return True


def _distinct_tuples(parts, modulus, order):
    """Distinct values for the parts of one partition; equal parts get increasing values."""
    r = len(parts)
    for combo in itertools.permutations(order, r):
        if all(not (parts[j] == parts[j + 1] and combo[j] > combo[j + 1]) for j in range(r - 1)):
            yield combo


def find_generic_exponents(mu, modulus: int, order=None, seed: int = 0):
    """Values v^i_j mod `modulus`, distinct within each i, passing the sum conditions."""
    mu = tuple(Partition(m) for m in mu)
    order = list(range(modulus)) if order is None else list(order)
    if any(len(m) > modulus for m in mu):
        raise NotFound(f"not enough distinct values mod {modulus}")
    per_class = [math.perm(modulus, len(m)) for m in mu]
    space = math.prod(per_class)
    if space <= EXHAUSTIVE_LIMIT:
        for values in itertools.product(*(_distinct_tuples(m, modulus, order) for m in mu)):
            if _exponents_ok(mu, values, modulus):
                return values
        raise NotFound(f"no generic tuple for {format_multipartition(mu)} with values mod {modulus}")
    rng = random.Random(seed)
    for _ in range(RANDOM_TRIALS):
        values = tuple(tuple(rng.sample(range(modulus), len(m))) for m in mu)
        if _exponents_ok(mu, values, modulus):
            return values
    raise NotFound(f"random search found no generic tuple for {format_multipartition(mu)} mod {modulus}")


def find_generic_mult(mu, q: int, seed: int = 0):
    """Generic k-tuple of semisimple classes of GL_n(F_q) with eigenvalues in F_q."""
    mu = tuple(Partition(m) for m in mu)
    field = Fq(q)
    exps = find_generic_exponents(mu, q - 1, seed=seed)
    out = tuple(tuple((field.exp(e), m) for e, m in zip(es, parts)) for es, parts in zip(exps, mu))
    assert is_generic_mult(out, q)
    return out


def find_generic_add(mu, q: int, seed: int = 0):
    """Generic k-tuple of semisimple adjoint orbits of gl_n(F_q)."""
    mu = tuple(Partition(m) for m in mu)
    if reduce(math.gcd, [p for m in mu for p in m], 0) != 1:
        raise DivisibleMu(f"mu={format_multipartition(mu)} is divisible, generic orbits do not exist")
    order = list(range(1, q)) + [0]
    vals = find_generic_exponents(mu, q, order=order, seed=seed)
    out = tuple(tuple((v, m) for v, m in zip(vs, parts)) for vs, parts in zip(vals, mu))
    assert is_generic_add(out, q)
    return out


def _sub_multisets(assignment_i, size):
    parts = [m for _, m in assignment_i]
    vals = [v for v, _ in assignment_i]
    for cs in _sub_choices(parts, size):
        yield list(zip(vals, cs))


def is_generic_mult(assignment, q: int) -> bool:
    """Direct check in F_q: total product 1, distinct eigenvalues, no proper sub-product 1."""
    n = sum(m for _, m in assignment[0])

    def prod(choice):
        out = 1
        for v, c in choice:
            out = out * pow(v, c, q) % q
        return out

    return _check(assignment, n, prod, lambda vals: math.prod(vals) % q, 1, q)


def is_generic_add(assignment, q: int) -> bool:
    n = sum(m for _, m in assignment[0])

    def total(choice):
        return sum(v * c for v, c in choice) % q

    return _check(assignment, n, total, lambda vals: sum(vals) % q, 0, q)


def _check(assignment, n, reduce_one, combine, unit, q) -> bool:
    for a in assignment:
        vals = [v % q for v, _ in a]
        if len(set(vals)) != len(vals) or sum(m for _, m in a) != n:
            return False
    full = combine([reduce_one(list((v, m) for v, m in a)) for a in assignment])
    if full != unit:
        return False
    for size in range(1, n):
        for picks in itertools.product(*(list(_sub_multisets(a, size)) for a in assignment)):
            if combine([reduce_one(c) for c in picks]) == unit:
                return False
    return True


def escalate(finder, mu, q: int, avoid=(), max_q: int = 50):
    """Call finder(mu, q) at q, moving to larger primes (skipping `avoid`) on NotFound.

    Returns (q_used, assignment).
    """
    while q <= max_q:
        if q not in avoid:
            try:
                return q, finder(mu, q)
            except NotFound:
                pass
        q = next_prime(q)
    raise NotFound(f"no generic tuple for {format_multipartition(mu)} up to q={max_q}")
