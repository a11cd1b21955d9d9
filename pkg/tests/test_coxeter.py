import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cambrian import (
    build_system,
    enumerate_weak_order,
    inversion_set,
    ji_from_subset,
    signed_ji_from_signed_subset,
    signed_subset_of_ji,
    subset_of_ji,
    weak_join,
    weak_meet,
)
from cambrian.coxeter import (
    CapExceeded,
    all_ji_subsets_a,
    all_signed_ji_subsets,
    contains_signed_pattern,
    embed_b_in_a,
    standardize_signed,
)


def test_build_system_families():
    a2 = build_system("A", 2)
    assert a2.bond_label(1, 2) == 3
    b2 = build_system("B", 2)
    assert b2.bond_label(0, 1) == 4
    h3 = build_system("H3")
    assert h3.bond_label(1, 2) == 5
    assert h3.bond_label(2, 3) == 3
    i25 = build_system("I2", None, 5)
    assert i25.bond_label(1, 2) == 5


def test_build_system_rejects_bad_input():
    with pytest.raises(ValueError):
        build_system("I2", None, 2)
    with pytest.raises(ValueError):
        build_system("Z", 3)


def test_weak_order_s3():
    system = build_system("A", 2)
    lattice = enumerate_weak_order(system)
    assert lattice.n == 6
    assert len(lattice.covers) == 6
    assert lattice.elements[lattice.top] == (3, 2, 1)


def test_weak_order_counts():
    assert enumerate_weak_order(build_system("B", 2)).n == 8
    h3 = enumerate_weak_order(build_system("H3"))
    assert h3.n == 120
    assert len(h3.covers) == 180


def test_weak_order_cap():
    with pytest.raises(CapExceeded):
        build_system("A", 3).weak_order_lattice(cap=5)


def test_inversion_sets():
    system = build_system("A", 2)
    assert inversion_set(system, (2, 3, 1)) == {(1, 2), (1, 3)}
    assert inversion_set(system, (1, 2, 3)) == frozenset()
    b2 = build_system("B", 2)
    assert inversion_set(b2, (-1, 2)) == {(-1, 1)}


def test_join_meet_s3():
    system = build_system("A", 2)
    assert weak_join(system, (2, 1, 3), (1, 3, 2)) == (3, 2, 1)
    assert weak_meet(system, (2, 3, 1), (3, 1, 2)) == (1, 2, 3)
    assert weak_join(system, (2, 3, 1), (2, 3, 1)) == (2, 3, 1)


def test_weak_order_is_inversion_containment():
    system = build_system("A", 3)
    lattice = system.weak_order_lattice()
    for i, v in enumerate(lattice.elements):
        for j, w in enumerate(lattice.elements):
            assert lattice.le(i, j) == (
                system.inversion_set(v) <= system.inversion_set(w)
            )


def test_longest_element_anti_automorphisms():
    system = build_system("B", 2)
    lattice = system.weak_order_lattice()
    w0 = system.longest_element()
    n = lattice.n
    for i in range(n):
        for j in range(n):
            x, y = lattice.elements[i], lattice.elements[j]
            if lattice.le(i, j):
                w0x = tuple(w0[abs(v) - 1] * (1 if v > 0 else -1) for v in x)
                w0y = tuple(w0[abs(v) - 1] * (1 if v > 0 else -1) for v in y)
                assert system.weak_le(w0y, w0x)


def test_ji_from_subset_examples():
    assert ji_from_subset(3, {1, 3}) == (2, 1, 3)
    assert ji_from_subset(3, {1, 2}) == (3, 1, 2)
    assert ji_from_subset(3, {2}) == (1, 3, 2)
    with pytest.raises(ValueError):
        ji_from_subset(3, {2, 3})


def test_ji_subset_round_trip():
    for n in range(2, 8):
        lattice = build_system("A", n - 1).weak_order_lattice()
        jis = [lattice.elements[g] for g in lattice.join_irreducibles]
        assert len(jis) == len(all_ji_subsets_a(n))
        for x in jis:
            assert ji_from_subset(n, subset_of_ji(x)) == x


def test_signed_ji_examples():
    assert signed_ji_from_signed_subset(2, {-1, 2}) == (-1, 2)
    assert signed_ji_from_signed_subset(2, {-2, 1}) == (-2, 1)
    with pytest.raises(ValueError):
        signed_ji_from_signed_subset(2, {1, -1})


def test_signed_ji_round_trip():
    for n in range(2, 5):
        lattice = build_system("B", n).weak_order_lattice()
        jis = [lattice.elements[g] for g in lattice.join_irreducibles]
        assert len(jis) == len(all_signed_ji_subsets(n))
        for x in jis:
            assert signed_ji_from_signed_subset(n, signed_subset_of_ji(x)) == x


def test_standardize_signed():
    assert standardize_signed((7, -3, -5, 1)) == (4, -2, -3, 1)
    assert standardize_signed((2, -1)) == (2, -1)
    with pytest.raises(ValueError):
        standardize_signed((1, -1))


def test_signed_pattern_containment():
    assert contains_signed_pattern((2, -1), (2, -1))
    assert not contains_signed_pattern((1, 2), (2, -1))


def test_b_embedding_is_lattice_embedding():
    for n in (2, 3):
        system = build_system("B", n)
        big = build_system("A", 2 * n - 1)
        lattice = system.weak_order_lattice()
        for x, y in itertools.product(lattice.elements, repeat=2):
            assert embed_b_in_a(weak_join(system, x, y)) == weak_join(
                big, embed_b_in_a(x), embed_b_in_a(y)
            )


@st.composite
def permutations(draw, max_n=6):
    n = draw(st.integers(min_value=2, max_value=max_n))
    values = list(range(1, n + 1))
    return tuple(draw(st.permutations(values)))


@settings(max_examples=60, deadline=None)
@given(permutations(), permutations())
def test_join_is_least_upper_bound(x, y):
    if len(x) != len(y):
        return
    system = build_system("A", len(x) - 1)
    j = weak_join(system, x, y)
    assert system.weak_le(x, j) and system.weak_le(y, j)
    m = weak_meet(system, x, y)
    assert system.weak_le(m, x) and system.weak_le(m, y)


@settings(max_examples=60, deadline=None)
@given(permutations(max_n=7))
def test_standardize_idempotent(x):
    assert standardize_signed(x) == x
