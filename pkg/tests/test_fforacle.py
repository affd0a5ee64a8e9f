from collections import Counter
from fractions import Fraction
import itertools

import numpy as np
import pytest

from charvar.combinat import Partition
from charvar.errors import BudgetExceeded, DivisibleMu, NotFound
from charvar.fforacle.counting import (
    commutator_histogram, count_char_points, count_quiver_points, count_via_add_fourier,
    count_via_group_fourier,
)
from charvar.fforacle.cyclotomic import Cyclo
from charvar.fforacle.fields import Fq, Fq2, gl_order, is_prime, next_prime, pgl_order
from charvar.fforacle.generic import (
    escalate, find_generic_add, find_generic_mult, is_generic_add, is_generic_mult,
)
from charvar.fforacle.gl2 import gl2_char_table, multiplicity_from_table
from charvar.fforacle.matrices import AdjOrbitFq, ConjClassFq, all_classes, matrix_space
from charvar.kernel import KernelQuery, apoly, dim_mu, epoly

D4 = tuple(Partition((1, 1)) for _ in range(3))


def mult_classes(assignment, q):
    return [ConjClassFq.semisimple(a, q) for a in assignment]


def add_orbits(assignment, q):
    return [ConjClassFq.semisimple(a, q, additive=True) for a in assignment]


def test_fields():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert next_prime(5) == 7
    f = Fq(7)
    g = f.generator()
    assert sorted(f.exp(m) for m in range(6)) == list(range(1, 7))
    assert all(f.exp(f.log(a)) == a for a in f.units())
    assert all(f.mul(a, f.inv(a)) == 1 for a in f.units())
    assert f.log(g) == 1
    ext = Fq2(5)
    gen = ext.generator()
    assert len({ext.pow(gen, m) for m in range(24)}) == 24


def test_gl_order():
    assert gl_order(1, 7) == 6
    assert gl_order(2, 2) == 6
    assert gl_order(2, 3) == 48
    assert pgl_order(2, 5) == 120
    space = matrix_space(2, 3)
    assert len(space.group()) == 48


def test_cyclotomic():
    z = Cyclo.zeta(5)
    total = Cyclo.const(5, 0)
    for k in range(5):
        total = total + Cyclo.zeta(5, k)
    assert total == Cyclo.const(5, 0)
    assert z ** 5 == Cyclo.const(5, 1)
    assert (z * z.conj()).rational() == 1
    assert not z.is_rational()


def test_class_sizes_and_counts():
    for q, n_classes in [(2, 3), (3, 8), (5, 24)]:
        classes = all_classes(2, q)
        assert len(classes) == q * q - 1
        assert len(classes) == n_classes
        assert sum(c.size for c in classes) == gl_order(2, q)
        assert all(gl_order(2, q) % c.size == 0 for c in classes)
    orbits = all_classes(2, 3, additive=True)
    assert sum(o.size for o in orbits) == 81
    classes = all_classes(3, 3)
    assert sum(c.size for c in classes) == gl_order(3, 3) == 11232
    assert len(classes) == 24


def test_class_membership_by_conjugation():
    space = matrix_space(2, 3)
    rep = [[0, 1], [2, 0]]
    cls = ConjClassFq(rep, 3)
    group = [space.decode(i) for i in space.group()]
    orbit = set()
    a = np.array(rep)
    for g in group:
        g = np.array(g)
        ginv = np.array(space.decode(space.inverse[space.encode(g)]))
        orbit.add(space.encode((g @ a @ ginv) % 3))
    assert orbit == set(int(i) for i in cls.members)


def test_generic_mult():
    # n = 1: any scalars with product 1
    assert is_generic_mult((((3, 1),), ((5, 1),)), 7)
    # a central class zeta I is generic iff zeta has exact order n
    assert find_generic_mult(((2,),), 5) == (((4, 2),),)
    assert is_generic_mult((((6, 2),),), 7)
    assert not is_generic_mult((((1, 2),),), 7)
    got = find_generic_mult(D4, 5)
    assert is_generic_mult(got, 5)
    # total product is 1 but so is the sub-product 2 * 3
    assert not is_generic_mult((((2, 1), (3, 1)), ((2, 1), (3, 1))), 5)
    # repeated eigenvalue inside a regular class
    assert not is_generic_mult((((2, 1), (2, 1)),), 5)


def test_generic_mult_small_field_escalates():
    with pytest.raises(NotFound):
        find_generic_mult((Partition((1, 1)),), 3)
    q, got = escalate(find_generic_mult, (Partition((1, 1)),), 3, avoid=(5,))
    assert q == 7 and is_generic_mult(got, 7)


def test_generic_add():
    with pytest.raises(DivisibleMu):
        find_generic_add(((2,), (2,)), 5)
    got = find_generic_add(((1,), (1,)), 3)
    assert got == (((1, 1),), ((2, 1),))
    assert is_generic_add(got, 3)
    got = find_generic_add(D4, 5)
    assert is_generic_add(got, 5)


def test_generic_add_impossible_over_f3():
    # every pair of distinct residues mod 3 is {0,1}, {0,2} or {1,2}; with three
    # classes some choice of one eigenvalue per class always sums to 0
    with pytest.raises(NotFound):
        find_generic_add(D4, 3)
    for choice in itertools.product(itertools.combinations(range(3), 2), repeat=3):
        sums = {sum(x) % 3 for x in itertools.product(*choice)}
        assert 0 in sums


def _brute_char_count(g, classes, q):
    """Plain loops, only for tiny cases."""
    space = matrix_space(classes[0].n if classes else 1, q)
    group = [np.array(space.decode(i)) for i in space.group()]
    ident = np.eye(space.n, dtype=np.int64)
    member_sets = [set(int(i) for i in c.members) for c in classes]
    count = 0
    for ab in itertools.product(group, repeat=2 * g):
        acc = ident
        for i in range(g):
            a, b = ab[2 * i], ab[2 * i + 1]
            ainv = np.array(space.decode(space.inverse[space.encode(a)]))
            binv = np.array(space.decode(space.inverse[space.encode(b)]))
            acc = acc @ a @ b @ ainv @ binv % q
        for xs in itertools.product(*member_sets):
            m = acc
            for x in xs:
                m = m @ np.array(space.decode(x)) % q
            count += bool((m == ident).all())
    return count


def test_count_char_points_small():
    one = ConjClassFq([[1]], 3)
    assert count_char_points(1, [one]) == 4
    assert _brute_char_count(1, [one], 3) == 4
    assert count_quiver_points(0, [AdjOrbitFq([[1]], 3), AdjOrbitFq([[2]], 3)]) == 1
    for q in (3, 5):
        assert count_quiver_points(1, [AdjOrbitFq([[0]], q)]) == q * q
    cls = ConjClassFq([[2, 0], [0, 2]], 3)
    assert count_char_points(1, [cls]) == _brute_char_count(1, [cls], 3)


def test_generic_count_matches_epoly():
    got = find_generic_mult(D4, 5)
    count = count_char_points(0, mult_classes(got, 5))
    assert count == 120
    assert Fraction(count, pgl_order(2, 5)) == epoly(KernelQuery(0, D4)).evaluate(5)


def test_generic_additive_count_matches_apoly():
    got = find_generic_add(D4, 5)
    count = count_quiver_points(0, add_orbits(got, 5))
    q = KernelQuery(0, D4)
    assert count == pgl_order(2, 5) * apoly(q).value.evaluate(5) * 5 ** (dim_mu(q) // 2)


def test_empty_quiver_variety():
    # mu = ((1,1),(1,1)) at genus 0 is not a root: no solutions over any field
    mu = (Partition((1, 1)), Partition((1, 1)))
    q, got = escalate(find_generic_add, mu, 3)
    assert count_quiver_points(0, add_orbits(got, q)) == 0
    assert apoly(KernelQuery(0, mu)).value.is_zero()


def test_non_generic_raw_count():
    ident = ConjClassFq([[1, 0], [0, 1]], 3)
    # the commutator equation alone: pairs of commuting invertible matrices
    commuting = count_char_points(1, [ident])
    hist = commutator_histogram(2, 3)
    space = matrix_space(2, 3)
    assert commuting == hist[space.identity]
    assert hist.sum() == 48 * 48


def test_group_fourier_matches_direct():
    table = gl2_char_table(3)
    minus = ConjClassFq([[2, 0], [0, 2]], 3)
    assert count_via_group_fourier(1, [minus], table) == count_char_points(1, [minus])
    got = find_generic_mult(D4, 5)
    classes = mult_classes(got, 5)
    assert count_via_group_fourier(0, classes, gl2_char_table(5)) == 120


def test_add_fourier_matches_direct():
    for q in (3, 5):
        orbits = [AdjOrbitFq([[1]], q), AdjOrbitFq([[q - 1]], q)]
        assert count_via_add_fourier(0, orbits) == count_quiver_points(0, orbits) == 1
        zero = [AdjOrbitFq([[0]], q)]
        assert count_via_add_fourier(1, zero) == count_quiver_points(1, zero) == q * q
    orbits = [AdjOrbitFq([[1, 0], [0, 2]], 3), AdjOrbitFq([[0, 1], [1, 0]], 3), AdjOrbitFq([[1, 1], [0, 1]], 3)]
    assert count_via_add_fourier(0, orbits) == count_quiver_points(0, orbits)


def test_char_table_q3():
    t = gl2_char_table(3)
    assert len(t.classes) == len(t.characters) == 8
    assert Counter(t.degree(c) for c in t.characters) == Counter({1: 2, 3: 2, 4: 1, 2: 3})
    assert t.sum_of_squares() == 48
    assert t.plancherel_mass() == 1
    assert t.check_orthogonality()
    assert t.check_columns()


@pytest.mark.parametrize("q", [5, 7])
def test_char_table_orthogonality(q):
    t = gl2_char_table(q)
    assert len(t.characters) == q * q - 1
    assert t.sum_of_squares() == gl_order(2, q)
    assert t.check_orthogonality()


def test_class_of_agrees_with_enumeration():
    t = gl2_char_table(5)
    for c in all_classes(2, 5):
        assert t.class_size(t.class_of(c.representative)) == c.size


def test_multiplicity_from_table():
    mu = (Partition((1, 1)),)
    q, _ = escalate(find_generic_mult, mu, 3)
    want = apoly(KernelQuery(1, mu)).value.evaluate(q)
    assert multiplicity_from_table(1, mu, q) == want


def test_budget_and_threads():
    got = find_generic_mult(D4, 5)
    classes = mult_classes(got, 5)
    with pytest.raises(BudgetExceeded):
        count_char_points(0, classes, budget=10)
    assert count_char_points(0, classes, threads=4) == count_char_points(0, classes, threads=1)
    minus = ConjClassFq([[2, 0], [0, 2]], 3)
    assert count_char_points(1, [minus], threads=3) == count_char_points(1, [minus])
