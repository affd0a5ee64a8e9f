from fractions import Fraction
import itertools

import pytest

from charvar.combinat import (
    EMPTY, Partition, TypeT, c0, conjugate, divisor_sigma, format_multipartition, k0, mobius,
    multipartitions, parse_multipartition, parse_partition, partition_stats, partitions_of,
    single_type, sym_char, type_stats, types_of, z_part,
)
from charvar.errors import ParseError


def _brute_partitions(n):
    """Multisets of positive integers summing to n, by filtering compositions."""
    seen = set()
    for r in range(1, n + 1):
        for c in itertools.product(range(1, n + 1), repeat=r):
            if sum(c) == n:
                seen.add(tuple(sorted(c, reverse=True)))
    return seen


def test_partition_counts():
    assert partitions_of(0) == (EMPTY,)
    assert len(partitions_of(4)) == 5
    assert len(partitions_of(8)) == 22
    assert set(partitions_of(6)) == _brute_partitions(6)


def test_partition_stats():
    s = partition_stats((1,))
    assert (s.size, s.nstat, s.hook_multiset, s.pairing) == (1, 0, (1,), 1)
    s = partition_stats((2, 1))
    assert s.nstat == 1
    assert sorted(s.hook_multiset) == [1, 1, 3]
    assert s.pairing == 5
    for n in range(1, 7):
        assert partition_stats((n,)).pairing == n


@pytest.mark.parametrize("n", range(1, 8))
def test_hook_sum_identity(n):
    for lam in partitions_of(n):
        lam_c = conjugate(lam)
        assert conjugate(lam_c) == lam
        assert sum(lam.hooks()) == lam.nstat() + lam_c.nstat() + n


def test_z_part():
    assert z_part((1, 1, 1)) == 6
    assert z_part((3,)) == 3
    assert z_part((2, 1)) == 2
    for n in range(1, 8):
        assert sum(Fraction(1, z_part(rho)) for rho in partitions_of(n)) == 1


def test_sym_char_examples():
    assert sym_char((2, 1), (3,)) == -1
    for rho in partitions_of(5):
        assert sym_char((5,), rho) == 1
        assert sym_char((1,) * 5, rho) == (-1) ** (5 - len(rho))


@pytest.mark.parametrize("n", range(1, 7))
def test_character_orthogonality(n):
    parts = partitions_of(n)
    for lam in parts:
        for mu in parts:
            s = sum(Fraction(sym_char(lam, rho) * sym_char(mu, rho), z_part(rho)) for rho in parts)
            assert s == (1 if lam == mu else 0)


def test_types_of():
    assert types_of(1) == (single_type((1,)),)
    two = set(types_of(2))
    assert two == {single_type((2,)), single_type((1, 1)),
                   TypeT([(1, (1,)), (1, (1,))]), single_type((1,), 2)}
    assert len(types_of(3)) == 8


def _multisets_of_partitions(n):
    """Number of multisets of nonzero partitions with total size n."""
    items = [lam for m in range(1, n + 1) for lam in partitions_of(m)]
    count = 0

    def rec(start, rem):
        nonlocal count
        if rem == 0:
            count += 1
            return
        for i in range(start, len(items)):
            if sum(items[i]) <= rem:
                rec(i, rem - sum(items[i]))

    rec(0, n)
    return count


@pytest.mark.parametrize("n", range(1, 6))
def test_degree_one_types_count(n):
    ones = [w for w in types_of(n) if w.concentrated_degree() == 1]
    assert len(ones) == _multisets_of_partitions(n)


def test_type_stats():
    s = type_stats(single_type((1,), 2))
    assert (s.bracket, s.f, s.worder) == (Partition((2,)), 1, 2)
    s = type_stats(TypeT([(1, (1,)), (1, (1,))]))
    assert (s.bracket, s.f, s.worder) == (Partition((1, 1)), 2, 2)
    s = type_stats(single_type((2, 1)))
    assert (s.bracket, s.f, s.worder) == (Partition((2, 1)), 3, 1)


def test_k0_c0_examples():
    assert k0(single_type((3, 1))) == 1
    assert c0(single_type((3, 1))) == 1
    mixed = TypeT([(1, (1,)), (2, (1,))])
    assert k0(mixed) == 0 and c0(mixed) == 0
    assert k0(TypeT([(2, (1,)), (2, (2,))])) == 2
    assert c0(TypeT([(1, (1,)), (1, (1,))])) == Fraction(-1, 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_k0_equals_c0_times_worder(n):
    for w in types_of(n):
        assert k0(w) == c0(w) * w.worder()


def test_mobius_sigma():
    assert [mobius(n) for n in (1, 4, 6)] == [1, 0, 1]
    assert divisor_sigma(1) == 1
    assert divisor_sigma(6) == 12
    for n in range(1, 30):
        assert divisor_sigma(n) == sum(d for d in range(1, n + 1) if n % d == 0)
        assert sum(mobius(d) for d in range(1, n + 1) if n % d == 0) == (1 if n == 1 else 0)


def test_text_syntax():
    assert parse_partition("2,1") == Partition((2, 1))
    assert parse_partition("1,2") == Partition((2, 1))
    mu = parse_multipartition("1,1;2;2")
    assert mu == (Partition((1, 1)), Partition((2,)), Partition((2,)))
    assert format_multipartition(mu) == "1,1;2;2"
    for bad in ("a", "1,-1", ""):
        with pytest.raises(ParseError):
            parse_multipartition(bad)


def test_multipartitions():
    assert len(multipartitions(2, 3)) == 8
    assert len(multipartitions(3, 2)) == 9
