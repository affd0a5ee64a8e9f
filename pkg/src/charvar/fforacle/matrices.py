"""Enumeration of n x n matrices over F_p, conjugacy classes and adjoint orbits.

Matrices are encoded as integers: the row-major entries are the base-p
digits of the index. A MatrixSpace holds every matrix as a numpy array so
that products, commutators and class keys can be computed in bulk.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np
from flint import nmod_mat

from .fields import Fq

_CHUNK_ELEMS = 1 << 22


class MatrixSpace:
    def __init__(self, n: int, p: int):
        self.n, self.p = n, p
        self.field = Fq(p)
        self.dim = n * n
        self.size = p ** self.dim
        if self.size > 2 * 10 ** 6:
            raise ValueError(f"gl_{n}(F_{p}) is too large to enumerate")
        idx = np.arange(self.size, dtype=np.int64)
        digits = np.empty((self.size, self.dim), dtype=np.int64)
        for i in range(self.dim):
            digits[:, i] = idx % p
            idx //= p
        self.mats = digits.reshape(self.size, n, n)
        self.weights = p ** np.arange(self.dim, dtype=np.int64)
        self.identity = self.encode(np.eye(n, dtype=np.int64))
        self.zero = 0
        self._det = None
        self._inv = None
        self._neg = None
        self._keys = None

    def encode(self, arr) -> np.ndarray | int:
        """Index of a matrix (or stack of matrices); entries are reduced mod p."""
        arr = np.asarray(arr, dtype=np.int64) % self.p
        flat = arr.reshape(arr.shape[:-2] + (self.dim,))
        out = flat @ self.weights
        return int(out) if out.ndim == 0 else out

    def decode(self, index: int) -> tuple:
        return tuple(tuple(int(x) for x in row) for row in self.mats[index])

    @property
    def det(self) -> np.ndarray:
        if self._det is None:
            self._det = _det_mod(self.mats, self.p)
        return self._det

    def group(self) -> np.ndarray:
        """Indices of the invertible matrices."""
        return np.nonzero(self.det)[0]

    @property
    def inverse(self) -> np.ndarray:
        """inverse[i] is the index of the inverse of matrix i (-1 if singular)."""
        if self._inv is None:
            inv = np.full(self.size, -1, dtype=np.int64)
            g = self.group()
            m = self.mats[g]
            d = self.det[g]
            # adjugate from the integer determinant of the lifted matrix
            true_det = np.rint(np.linalg.det(m.astype(float)))
            adj = np.rint(np.linalg.inv(m.astype(float)) * true_det[:, None, None]).astype(np.int64)
            dinv = np.array([pow(int(x), -1, self.p) for x in range(1, self.p)], dtype=np.int64)
            inv[g] = self.encode(adj * dinv[d - 1][:, None, None])
            self._inv = inv
        return self._inv

    @property
    def negation(self) -> np.ndarray:
        if self._neg is None:
            self._neg = self.encode(-self.mats)
        return self._neg

    def multiply(self, xs, ys) -> np.ndarray:
        """Indices of x @ y for every pair, shape (len(xs), len(ys))."""
        a = self.mats[np.asarray(xs)][:, None]
        b = self.mats[np.asarray(ys)][None, :]
        return self.encode(a @ b)

    def multiply_pairs(self, xs, ys) -> np.ndarray:
        """Elementwise products of two index arrays of the same shape."""
        return self.encode(self.mats[np.asarray(xs)] @ self.mats[np.asarray(ys)])

    def add(self, xs, ys) -> np.ndarray:
        a = self.mats[np.asarray(xs)][:, None]
        b = self.mats[np.asarray(ys)][None, :]
        return self.encode(a + b)

    def chunk_rows(self, ncols: int) -> int:
        return max(1, _CHUNK_ELEMS // max(1, ncols * self.dim))

    @property
    def keys(self) -> np.ndarray:
        """Class key id of every matrix (see class_key)."""
        if self._keys is None:
            self._keys, self._key_list = _all_keys(self)
        return self._keys

    def key_id(self, key) -> int | None:
        self.keys
        try:
            return self._key_list.index(key)
        except ValueError:
            return None

    def members(self, key) -> np.ndarray:
        kid = self.key_id(key)
        if kid is None:
            return np.zeros(0, dtype=np.int64)
        return np.nonzero(self.keys == kid)[0]

    def key_of(self, index: int) -> tuple:
        kid = self.keys[index]
        return self._key_list[kid]


@lru_cache(maxsize=8)
def matrix_space(n: int, p: int) -> MatrixSpace:
    return MatrixSpace(n, p)


def _det_mod(mats: np.ndarray, p: int) -> np.ndarray:
    n = mats.shape[-1]
    if n == 1:
        return mats[:, 0, 0] % p
    if n == 2:
        return (mats[:, 0, 0] * mats[:, 1, 1] - mats[:, 0, 1] * mats[:, 1, 0]) % p
    # entries < p and n <= 3 keep the float determinant well inside exact range
    return np.rint(np.linalg.det(mats.astype(float))).astype(np.int64) % p


def class_key(matrix, p: int) -> tuple:
    """(characteristic polynomial, minimal polynomial), coefficients low to high mod p.

    This is a complete conjugacy invariant for n <= 3 and for semisimple
    matrices of any size.
    """
    m = nmod_mat([[int(x) % p for x in row] for row in matrix], p)
    return (tuple(int(c) for c in m.charpoly().coeffs()),
            tuple(int(c) for c in m.minpoly().coeffs()))


def _all_keys(space: MatrixSpace):
    p, n = space.p, space.n
    mats = space.mats
    if n == 2:
        a, b, c, d = mats[:, 0, 0], mats[:, 0, 1], mats[:, 1, 0], mats[:, 1, 1]
        tr = (a + d) % p
        det = space.det
        scalar = (b == 0) & (c == 0) & (a == d)
        code = (det * p + (-tr) % p) * (p + 1) + np.where(scalar, a + 1, 0)
        uniq, inv = np.unique(code, return_inverse=True)
        keys = []
        for u in uniq:
            rest, s = divmod(int(u), p + 1)
            det_u, mtr = divmod(rest, p)
            char = (det_u, mtr, 1)
            mini = ((1 - s) % p, 1) if s else char
            keys.append((char, mini))
        return inv.astype(np.int64), keys
    seen: dict = {}
    out = np.empty(space.size, dtype=np.int64)
    for i in range(space.size):
        k = class_key(mats[i], p)
        out[i] = seen.setdefault(k, len(seen))
    return out, list(seen)


def is_semisimple_key(key, p: int) -> bool:
    """Minimal polynomial squarefree over F_p (hence diagonalisable over the closure)."""
    from flint import nmod_poly
    mini = nmod_poly(list(key[1]), p)
    return mini.gcd(mini.derivative()).degree() == 0


class ConjClassFq:
    """A conjugacy class of GL_n(F_p) (or, with additive=True, an adjoint orbit in gl_n)."""

    def __init__(self, representative, p: int, additive: bool = False):
        rep = np.asarray(representative, dtype=np.int64) % p
        self.n = rep.shape[0]
        self.p = p
        self.additive = additive
        self.space = matrix_space(self.n, p)
        self.representative = tuple(tuple(int(x) for x in row) for row in rep)
        self.key = class_key(rep, p)
        if self.n > 3 and not is_semisimple_key(self.key, p):
            raise NotImplementedError("non-semisimple classes need n <= 3")
        if not additive and self.space.det[self.space.encode(rep)] == 0:
            raise ValueError("representative is not invertible")
        self._members = None

    @classmethod
    def semisimple(cls, eigenvalues, p: int, additive: bool = False):
        """Class of diag(eigenvalues); eigenvalues may be given as [(value, multiplicity), ...]."""
        vals = []
        for e in eigenvalues:
            if isinstance(e, tuple):
                vals.extend([e[0]] * e[1])
            else:
                vals.append(e)
        return cls(np.diag(vals), p, additive)

    @property
    def members(self) -> np.ndarray:
        if self._members is None:
            self._members = self.space.members(self.key)
        return self._members

    @property
    def size(self) -> int:
        return len(self.members)

    def is_semisimple(self) -> bool:
        return is_semisimple_key(self.key, self.p)

    def __repr__(self):
        kind = "AdjOrbitFq" if self.additive else "ConjClassFq"
        return f"{kind}({self.representative}, p={self.p}, size={self.size})"


def AdjOrbitFq(representative, p: int) -> ConjClassFq:
    return ConjClassFq(representative, p, additive=True)


def all_classes(n: int, p: int, additive: bool = False) -> list:
    """Every conjugacy class of GL_n(F_p), or every adjoint orbit of gl_n(F_p)."""
    space = matrix_space(n, p)
    keys = space.keys
    pool = np.arange(space.size) if additive else space.group()
    out = []
    for kid in np.unique(keys[pool]):
        first = pool[np.argmax(keys[pool] == kid)]
        out.append(ConjClassFq(space.mats[first], p, additive))
    return out
