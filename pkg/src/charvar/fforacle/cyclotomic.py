"""Exact arithmetic in Q(zeta_N), stored as rational polynomials reduced modulo Phi_N."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from flint import fmpq, fmpq_poly, fmpz_poly


@lru_cache(maxsize=None)
def _phi(n: int) -> fmpq_poly:
    return fmpq_poly(fmpz_poly.cyclotomic(n).coeffs())


def _to_fmpq(c) -> fmpq:
    if isinstance(c, Fraction):
        return fmpq(c.numerator, c.denominator)
    return fmpq(c)


class Cyclo:
    __slots__ = ("n", "poly")

    def __init__(self, n: int, poly=None):
        self.n = n
        if poly is None:
            poly = fmpq_poly([])
        self.poly = poly % _phi(n) if poly.degree() >= _phi(n).degree() else poly

    @classmethod
    def const(cls, n: int, c) -> Cyclo:
        return cls(n, fmpq_poly([_to_fmpq(c)]))

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> Cyclo:
        """zeta_n^k."""
        k %= n
        coeffs = [0] * k + [1]
        return cls(n, fmpq_poly(coeffs))

    def _coerce(self, other) -> Cyclo:
        if isinstance(other, Cyclo):
            if other.n != self.n:
                raise ValueError("cyclotomic orders differ")
            return other
        return Cyclo.const(self.n, other)

    def __add__(self, other):
        return Cyclo(self.n, self.poly + self._coerce(other).poly)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.n, -self.poly)

    def __sub__(self, other):
        return Cyclo(self.n, self.poly - self._coerce(other).poly)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, Cyclo):
            return Cyclo(self.n, self._coerce(other).poly * self.poly)
        return Cyclo(self.n, self.poly * _to_fmpq(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyclo):
            raise TypeError("division by a cyclotomic number is not supported")
        return Cyclo(self.n, self.poly / _to_fmpq(other))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        out = Cyclo.const(self.n, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.const(self.n, other)
        return isinstance(other, Cyclo) and self.n == other.n and self.poly == other.poly

    def __hash__(self):
        return hash((self.n, str(self.poly)))

    def __repr__(self):
        return f"Cyclo({self.n}, {self.poly})"

    def conj(self) -> Cyclo:
        """Complex conjugate: zeta -> zeta^{-1}."""
        out = fmpq_poly([])
        for i, c in enumerate(self.poly.coeffs()):
            if c:
                out += fmpq_poly([0] * ((-i) % self.n) + [c])
        return Cyclo(self.n, out)

    def is_rational(self) -> bool:
        return self.poly.degree() <= 0

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        if self.poly.degree() < 0:
            return Fraction(0)
        c = self.poly.coeffs()[0]
        return Fraction(int(c.p), int(c.q))
