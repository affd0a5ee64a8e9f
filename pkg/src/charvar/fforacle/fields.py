"""Prime fields F_p and the quadratic extension used for elliptic classes of GL_2."""
from __future__ import annotations

from functools import lru_cache

from flint import fmpz


def is_prime(p: int) -> bool:
    return p >= 2 and bool(fmpz(p).is_prime())


def next_prime(p: int) -> int:
    p += 1
    while not is_prime(p):
        p += 1
    return p


class Fq:
    """The prime field F_p. Elements are the integers 0..p-1.

    Only degree e = 1 is implemented; the acceptance cases all live over
    prime fields.
    """

    def __init__(self, p: int, e: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if e != 1:
            raise NotImplementedError("only prime fields are supported")
        self.p = p
        self.e = e

    def __repr__(self):
        return f"Fq({self.p})"

    def __eq__(self, other):
        return isinstance(other, Fq) and other.p == self.p and other.e == self.e

    def __hash__(self):
        return hash((self.p, self.e))

    @property
    def q(self) -> int:
        return self.p ** self.e

    def elements(self):
        return range(self.p)

    def units(self):
        return range(1, self.p)

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("0 has no inverse in F_q")
        return pow(a, -1, self.p)

    def generator(self) -> int:
        return _primitive_root(self.p)

    def log(self, a) -> int:
        """Discrete log of a unit with respect to generator()."""
        return _log_table(self.p)[a % self.p]

    def exp(self, m) -> int:
        return pow(self.generator(), m % (self.p - 1), self.p)

    def is_square(self, a) -> bool:
        a %= self.p
        return a == 0 or self.p == 2 or pow(a, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a):
        a %= self.p
        for x in range(self.p):
            if x * x % self.p == a:
                return x
        raise ValueError(f"{a} is not a square mod {self.p}")


@lru_cache(maxsize=None)
def _primitive_root(p: int) -> int:
    if p == 2:
        return 1
    order = p - 1
    primes = [int(f) for f, _ in fmpz(order).factor()]
    for g in range(2, p):
        if all(pow(g, order // f, p) != 1 for f in primes):
            return g
    raise AssertionError("no primitive root")


@lru_cache(maxsize=None)
def _log_table(p: int) -> dict:
    g = _primitive_root(p)
    out = {}
    x = 1
    for m in range(p - 1):
        out[x] = m
        x = x * g % p
    return out


class Fq2:
    """F_{p^2} = F_p[s]/(s^2 - r) with r a non-square; elements are pairs (a, b) = a + b s."""

    def __init__(self, p: int):
        if p == 2:
            raise NotImplementedError("characteristic 2 is not supported")
        self.base = Fq(p)
        self.p = p
        self.r = next(a for a in range(2, p) if not self.base.is_square(a))
        self.order = p * p - 1
        self._gen = self._find_generator()
        self._logs = {}
        x = (1, 0)
        for m in range(self.order):
            self._logs[x] = m
            x = self.mul(x, self._gen)

    def mul(self, x, y):
        a, b = x
        c, d = y
        p = self.p
        return ((a * c + self.r * b * d) % p, (a * d + b * c) % p)

    def pow(self, x, m):
        out = (1, 0)
        m %= self.order
        while m:
            if m & 1:
                out = self.mul(out, x)
            x = self.mul(x, x)
            m >>= 1
        return out

    def _find_generator(self):
        primes = [int(f) for f, _ in fmpz(self.order).factor()]
        for a in range(self.p):
            for b in range(1, self.p):
                x = (a, b)
                if all(self.pow(x, self.order // f) != (1, 0) for f in primes):
                    return x
        raise AssertionError("no generator of F_{q^2}^x")

    def generator(self):
        return self._gen

    def log(self, x) -> int:
        return self._logs[(x[0] % self.p, x[1] % self.p)]

    def embed_log(self, a: int) -> int:
        """Log (base the extension generator) of a unit of F_p."""
        return self.log((a % self.p, 0))

    def roots_of_quadratic(self, tr: int, det: int):
        """Roots of x^2 - tr x + det; assumes the discriminant is a non-square."""
        p = self.p
        disc = (tr * tr - 4 * det) % p
        c = self.base.sqrt(disc * pow(self.r, -1, p) % p)
        half = pow(2, -1, p)
        return ((tr * half) % p, (c * half) % p), ((tr * half) % p, (-c * half) % p)


def gl_order(n: int, q: int) -> int:
    """|GL_n(F_q)| = prod_{i<n} (q^n - q^i)."""
    if n < 1:
        raise ValueError("n must be positive")
    out = 1
    for i in range(n):
        out *= q ** n - q ** i
    return out


def pgl_order(n: int, q: int) -> int:
    return gl_order(n, q) // (q - 1)
