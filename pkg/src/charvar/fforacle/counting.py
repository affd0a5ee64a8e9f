"""Point counts of the defining equations over F_p.

Multiplicative:  [A_1,B_1]...[A_g,B_g] X_1...X_k = I,  A_i, B_i in GL_n, X_j in C_j.
Additive:        [A_1,B_1]+...+[A_g,B_g] + X_1+...+X_k = 0,  A_i, B_i in gl_n, X_j in O_j.

The direct counts enumerate every tuple through exact histogram
convolution: a histogram over encoded matrices records how many partial
tuples reach each value, and the last factor is solved for and
membership-tested. The Fourier counts evaluate the character formulas
in exact cyclotomic arithmetic.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np
from flint import nmod_mat

from ..errors import BudgetExceeded, NonIntegerResult
from .cyclotomic import Cyclo
from .matrices import MatrixSpace

DEFAULT_BUDGET = 10 ** 8
_INT64_SAFE = 1 << 62


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self, amount: int, what: str):
        self.used += amount
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"{what}: {self.used} pairwise products exceed the budget of {self.limit}")


def _map_chunks(fn, chunks, threads):
    if threads and threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            parts = list(ex.map(fn, chunks))
    else:
        parts = [fn(c) for c in chunks]
    # fixed summation order keeps totals deterministic
    out = parts[0]
    for p in parts[1:]:
        out = out + p
    return out


def _chunks(arr, rows):
    return [arr[i:i + rows] for i in range(0, len(arr), rows)] or [arr[:0]]


def _commutator_hist(space: MatrixSpace, additive: bool, budget: _Budget, threads) -> np.ndarray:
    pool = np.arange(space.size) if additive else space.group()
    budget.spend(len(pool) ** 2, "commutator enumeration")
    mats = space.mats

    def work(xs):
        a = mats[xs][:, None]
        b = mats[pool][None, :]
        ab = a @ b
        ba = b @ a
        if additive:
            idx = space.encode(ab - ba)
        else:
            idx = space.multiply_pairs(space.encode(ab), space.inverse[space.encode(ba)])
        return np.bincount(idx.ravel(), minlength=space.size).astype(np.int64)

    return _map_chunks(work, _chunks(pool, space.chunk_rows(len(pool))), threads)


def _convolve(space: MatrixSpace, h1, h2, additive: bool, budget: _Budget, threads) -> np.ndarray:
    s1 = np.nonzero(h1)[0]
    s2 = np.nonzero(h2)[0]
    if int(h1.sum()) * int(h2.sum()) >= _INT64_SAFE:
        raise BudgetExceeded("count exceeds the exact int64 range")
    budget.spend(len(s1) * len(s2), "convolution")
    w2 = h2[s2]

    def work(xs):
        idx = space.add(xs, s2) if additive else space.multiply(xs, s2)
        w = h1[xs][:, None] * w2[None, :]
        out = np.zeros(space.size, dtype=np.int64)
        np.add.at(out, idx.ravel(), w.ravel())
        return out

    return _map_chunks(work, _chunks(s1, space.chunk_rows(len(s2))), threads)


def _indicator(space, members) -> np.ndarray:
    h = np.zeros(space.size, dtype=np.int64)
    h[members] = 1
    return h


def _direct(g, classes, additive, budget, threads, space=None):
    if space is None:
        space = classes[0].space
    budget = _Budget(budget)
    h = _indicator(space, [space.zero if additive else space.identity])
    if g > 0:
        comm = _commutator_hist(space, additive, budget, threads)
        h = comm
        for _ in range(g - 1):
            h = _convolve(space, h, comm, additive, budget, threads)
    if not classes:
        return int(h[space.zero if additive else space.identity])
    for c in classes[:-1]:
        h = _convolve(space, h, _indicator(space, c.members), additive, budget, threads)
    last = classes[-1].members
    budget.spend(len(last), "final membership test")
    # X_k must equal the inverse (negative) of the partial product
    target = space.negation[last] if additive else space.inverse[last]
    return int(h[target].sum())


def count_char_points(g: int, classes, budget=DEFAULT_BUDGET, threads=None, n=None, p=None) -> int:
    """Number of solutions in GL_n(F_p)^{2g} x C_1 x ... x C_k."""
    for c in classes:
        if c.additive:
            raise ValueError("expected conjugacy classes, got an adjoint orbit")
    space = classes[0].space if classes else _space(n, p)
    return _direct(g, list(classes), False, budget, threads, space)


def count_quiver_points(g: int, orbits, budget=DEFAULT_BUDGET, threads=None, n=None, p=None) -> int:
    """Number of solutions in gl_n(F_p)^{2g} x O_1 x ... x O_k."""
    space = orbits[0].space if orbits else _space(n, p)
    return _direct(g, list(orbits), True, budget, threads, space)


def _space(n, p):
    from .matrices import matrix_space
    if n is None or p is None:
        raise ValueError("n and p are needed when no classes are given")
    return matrix_space(n, p)


def commutator_histogram(n: int, p: int, budget=DEFAULT_BUDGET, threads=None) -> np.ndarray:
    """#{(A, B) in GL_n^2 : [A, B] = z} for every encoded z."""
    from .matrices import matrix_space
    return _commutator_hist(matrix_space(n, p), False, _Budget(budget), threads)


def _as_integer(value: Cyclo | Fraction, what: str) -> int:
    if isinstance(value, Cyclo):
        if not value.is_rational():
            raise NonIntegerResult(f"{what} is not rational: {value}")
        value = value.rational()
    if value.denominator != 1:
        raise NonIntegerResult(f"{what} is not an integer: {value}")
    return int(value)


def count_via_group_fourier(g: int, classes, table) -> int:
    """sum_chi (chi(1)^2/|G|) (|G|/chi(1))^{2g} prod_i |C_i| chi(C_i)/chi(1)."""
    for c in classes:
        if c.n != 2:
            raise ValueError("the group Fourier count needs n = 2")
    order = table.group_order
    labels = []
    for c in classes:
        label = table.class_of(c.representative)
        if table.class_size(label) != c.size:
            raise AssertionError("class size disagrees with the character table")
        labels.append(label)
    total = Cyclo.const(table.N, 0)
    for chi in table.characters:
        deg = table.degree(chi)
        term = Cyclo.const(table.N, Fraction(deg * deg, order) * Fraction(order, deg) ** (2 * g))
        for c, label in zip(classes, labels):
            term = term * table.value(chi, label) * Fraction(c.size, deg)
        total = total + term
    return _as_integer(total, "group Fourier count")


def _centraliser_size(mat, p: int) -> int:
    """|C_A(x)| = p^{dim ker ad_x} for A = gl_n(F_p)."""
    n = len(mat)
    rows = []
    # ad_x(E_ij) = x E_ij - E_ij x, written in the basis E_kl
    for i in range(n):
        for j in range(n):
            col = [0] * (n * n)
            for k in range(n):
                col[k * n + j] += mat[k][i]
                col[i * n + k] -= mat[j][k]
            rows.append([c % p for c in col])
    rank = nmod_mat(rows, p).rank()
    return p ** (n * n - rank)


def count_via_add_fourier(g: int, orbits, n=None, p=None) -> int:
    """sum_x |A|^{g-1} |C_A(x)|^g prod_i sum_{a in O_i} Psi(tr(x a)), Psi(y) = zeta_p^y."""
    space = orbits[0].space if orbits else _space(n, p)
    if space.n > 2:
        raise ValueError("the additive Fourier count needs n <= 2")
    p = space.p
    mats = space.mats
    flat = mats.reshape(space.size, -1)
    # tr(x a) = sum_{kl} x_kl a_lk
    transposed = np.transpose(mats, (0, 2, 1)).reshape(space.size, -1)
    counts = []
    for o in orbits:
        tr = (flat @ transposed[o.members].T) % p
        counts.append(np.stack([(tr == v).sum(axis=1) for v in range(p)], axis=1))
    zetas = [Cyclo.zeta(p, v) for v in range(p)]
    size_a = space.size
    total = Cyclo.const(p, 0)
    cache: dict = {}
    for x in range(space.size):
        key = tuple(tuple(int(v) for v in c[x]) for c in counts)
        cent = _centraliser_size(mats[x].tolist(), p) if g else 1
        if key not in cache:
            val = Cyclo.const(p, 1)
            for vec in key:
                s = Cyclo.const(p, 0)
                for v, m in enumerate(vec):
                    if m:
                        s = s + zetas[v] * m
                val = val * s
            cache[key] = val
        total = total + cache[key] * (Fraction(size_a) ** (g - 1) * cent ** g)
    return _as_integer(total, "additive Fourier count")
