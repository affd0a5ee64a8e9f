"""Partitions, types, symmetric group characters and the arithmetic constants
attached to them."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import ParseError, SizeMismatch


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Sort arbitrary positive parts into a partition."""
        return tuple.__new__(cls, tuple(sorted((int(p) for p in parts), reverse=True)))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def nstat(self) -> int:
        return sum(i * p for i, p in enumerate(self))

    def multiplicities(self) -> dict:
        return dict(Counter(self))

    def cells(self):
        for i, row in enumerate(self):
            for j in range(row):
                yield i, j

    def arm(self, i: int, j: int) -> int:
        return self[i] - j - 1

    def leg(self, i: int, j: int) -> int:
        return conjugate(self)[j] - i - 1

    def arms_legs(self) -> list:
        """(arm, leg) for every cell, in row-major order."""
        c = conjugate(self)
        return [(row - j - 1, c[j] - i - 1) for i, row in enumerate(self) for j in range(row)]

    def hooks(self) -> list:
        return [a + l + 1 for a, l in self.arms_legs()]

    def pairing(self) -> int:
        """<lambda, lambda> = sum of squared conjugate parts."""
        return sum(p * p for p in conjugate(self))

    def scale(self, d: int) -> "Partition":
        return tuple.__new__(Partition, tuple(d * p for p in self))

    def dominates(self, other: "Partition") -> bool:
        if self.size != other.size:
            return False
        a = b = 0
        for i in range(max(len(self), len(other))):
            a += self[i] if i < len(self) else 0
            b += other[i] if i < len(other) else 0
            if a < b:
                return False
        return True

    def __repr__(self):
        return f"Partition({list(self)})"

    def __str__(self):
        return ",".join(map(str, self)) if self else "0"


EMPTY = Partition(())


@lru_cache(maxsize=None)
def conjugate(lam: tuple) -> Partition:
    if not lam:
        return EMPTY
    return tuple.__new__(Partition, tuple(sum(1 for p in lam if p > j) for j in range(lam[0])))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of n in reverse lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = []

    def rec(rem, mx, acc):
        if rem == 0:
            out.append(tuple.__new__(Partition, tuple(acc)))
            return
        for p in range(min(rem, mx), 0, -1):
            acc.append(p)
            rec(rem - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


@dataclass(frozen=True)
class PartitionStats:
    size: int
    length: int
    conjugate: Partition
    nstat: int
    hook_multiset: tuple
    pairing: int


def partition_stats(lam) -> PartitionStats:
    lam = Partition(lam)
    return PartitionStats(lam.size, lam.length, conjugate(lam), lam.nstat(),
                          tuple(sorted(lam.hooks(), reverse=True)), lam.pairing())


@lru_cache(maxsize=None)
def z_part(lam: tuple) -> int:
    """Order of the centralizer of a permutation of cycle type lam."""
    out = 1
    for part, m in Counter(lam).items():
        out *= part ** m * math.factorial(m)
    return out


def _beta(lam: tuple, length: int) -> tuple:
    lam = tuple(lam) + (0,) * (length - len(lam))
    return tuple(p + length - 1 - i for i, p in enumerate(lam))


@lru_cache(maxsize=None)
def _mn(beta: frozenset, rho: tuple) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in beta:
            continue
        sign = -1 if sum(1 for x in beta if t < x < b) % 2 else 1
        total += sign * _mn((beta - {b}) | {t}, rest)
    return total


@lru_cache(maxsize=None)
def sym_char(lam: tuple, rho: tuple) -> int:
    """chi^lam evaluated on cycle type rho (Murnaghan-Nakayama)."""
    if sum(lam) != sum(rho):
        raise SizeMismatch(f"|{lam}| != |{rho}|")
    rho = tuple(sorted(rho, reverse=True))
    return _mn(frozenset(_beta(lam, len(lam))), rho)


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    return -out if n > 1 else out


def divisor_sigma(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return sum(d for d in range(1, n + 1) if n % d == 0)


def divisors(n: int) -> list:
    return [d for d in range(1, n + 1) if n % d == 0]


def _pair_key(pair):
    d, lam = pair
    return (d, sum(lam), tuple(lam))


class TypeT(tuple):
    """Multiset of pairs (d, lambda), stored non-increasingly in the (d, |lambda|, lex) order."""

    __slots__ = ()

    def __new__(cls, pairs: Iterable = ()):
        norm = []
        for d, lam in pairs:
            lam = Partition(lam)
            if d < 1 or not lam:
                raise ValueError("type pairs need d >= 1 and a nonzero partition")
            norm.append((int(d), lam))
        norm.sort(key=_pair_key, reverse=True)
        return tuple.__new__(cls, tuple(norm))

    @property
    def size(self) -> int:
        return sum(d * sum(lam) for d, lam in self)

    def f(self) -> int:
        return sum(sum(lam) for _, lam in self)

    def bracket(self) -> Partition:
        return Partition.from_parts(d * p for d, lam in self for p in lam)

    def nstat(self) -> int:
        return sum(d * lam.nstat() for d, lam in self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def worder(self) -> int:
        out = 1
        for (d, _), m in Counter(self).items():
            out *= d ** m * math.factorial(m)
        return out

    def degree_profile(self) -> tuple:
        """pi(omega): the sorted multiset of (d, |lambda|)."""
        return tuple(sorted(((d, sum(lam)) for d, lam in self), reverse=True))

    def similar(self, other: "TypeT") -> bool:
        return self.degree_profile() == other.degree_profile()

    def concentrated_degree(self):
        """The common d if every pair has the same degree, else None."""
        ds = {d for d, _ in self}
        return ds.pop() if len(ds) == 1 else None

    def __repr__(self):
        return "TypeT(" + "".join(f"({d},{tuple(lam)})" for d, lam in self) + ")"

    def __str__(self):
        return "".join(f"({d},({str(lam)}))" for d, lam in self)


def single_type(lam, d: int = 1) -> TypeT:
    return TypeT([(d, Partition(lam))])


@lru_cache(maxsize=None)
def types_of(n: int) -> tuple:
    """All types of size n."""
    if n < 1:
        raise ValueError("n must be positive")
    pairs = [(d, lam) for d in range(1, n + 1) for m in range(1, n // d + 1) for lam in partitions_of(m)]
    pairs.sort(key=_pair_key, reverse=True)
    out = []

    def rec(start, rem, acc):
        if rem == 0:
            out.append(TypeT(acc))
            return
        for i in range(start, len(pairs)):
            d, lam = pairs[i]
            s = d * sum(lam)
            if s <= rem:
                acc.append(pairs[i])
                rec(i, rem - s, acc)
                acc.pop()

    rec(0, n, [])
    return tuple(out)


@dataclass(frozen=True)
class TypeStats:
    size: int
    f: int
    bracket: Partition
    nstat: int
    worder: int
    degree_profile: tuple


def type_stats(omega: TypeT) -> TypeStats:
    return TypeStats(omega.size, omega.f(), omega.bracket(), omega.nstat(), omega.worder(),
                     omega.degree_profile())


def k0(omega: TypeT) -> int:
    d = omega.concentrated_degree()
    if d is None:
        return 0
    r = len(omega)
    return (-1) ** (r - 1) * d ** (r - 1) * mobius(d) * math.factorial(r - 1)


def c0(omega: TypeT) -> Fraction:
    d = omega.concentrated_degree()
    if d is None:
        return Fraction(0)
    r = len(omega)
    den = 1
    for m in Counter(omega).values():
        den *= math.factorial(m)
    return Fraction(mobius(d), d) * (-1) ** (r - 1) * math.factorial(r - 1) / den


# text syntax

def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0"):
        return EMPTY
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise ParseError(f"bad partition {text!r}") from exc
    if any(p < 1 for p in parts):
        raise ParseError(f"parts must be positive in {text!r}")
    return Partition.from_parts(parts)


def parse_multipartition(text: str) -> tuple:
    if not text.strip():
        raise ParseError("empty multipartition")
    return tuple(parse_partition(t) for t in text.split(";"))


def format_multipartition(mu) -> str:
    return ";".join(str(Partition(lam)) for lam in mu)


def multipartitions(n: int, k: int) -> list:
    """All k-tuples of partitions of n."""
    out = [()]
    for _ in range(k):
        out = [t + (lam,) for t in out for lam in partitions_of(n)]
    return out
