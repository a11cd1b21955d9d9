import itertools

import pytest

from cambrian import (
    build_system,
    cg,
    congruence_closure,
    forcing_poset,
    is_lattice_congruence,
    quotient,
)
from cambrian.lattices import (
    FiniteLattice,
    congruence_from_partition,
    poset_anti_isomorphism,
    poset_isomorphism,
    quotient_lattice,
)


def hexagon():
    """Weak order of S3."""
    return build_system("A", 2).weak_order_lattice()


def pentagon():
    elements = ("0", "a", "b1", "b2", "1")
    covers = [(0, 1), (1, 4), (0, 2), (2, 3), (3, 4)]
    return FiniteLattice.from_covers(elements, covers)


def test_from_covers_trivial_and_bowtie():
    single = FiniteLattice.from_covers(("x",), [])
    assert single.n == 1 and single.bottom == single.top
    elements = ("a", "b", "c", "d")
    bowtie = [(0, 2), (0, 3), (1, 2), (1, 3)]
    with pytest.raises(ValueError):
        FiniteLattice.from_covers(elements, bowtie)


def test_congruence_closure_hexagon():
    lattice = hexagon()
    idx = lattice.index
    cong = congruence_closure(lattice, [(idx[(1, 3, 2)], idx[(3, 1, 2)])])
    classes = {frozenset(lattice.elements[i] for i in cls) for cls in cong.classes}
    assert frozenset({(1, 3, 2), (3, 1, 2)}) in classes
    assert cong.num_classes == 5
    cong2 = congruence_closure(lattice, [(idx[(2, 3, 1)], idx[(2, 1, 3)])])
    classes2 = {
        frozenset(lattice.elements[i] for i in cls) for cls in cong2.classes
    }
    assert frozenset({(2, 1, 3), (2, 3, 1)}) in classes2
    assert cong2.num_classes == 5
    discrete = congruence_closure(lattice, [])
    assert discrete.num_classes == lattice.n


def test_is_lattice_congruence():
    lattice = hexagon()
    idx = lattice.index
    cong = congruence_closure(lattice, [(idx[(1, 3, 2)], idx[(3, 1, 2)])])
    ok, reason = is_lattice_congruence(
        lattice, [list(cls) for cls in cong.classes]
    )
    assert ok and reason is None
    # Bottom and top together: not an interval class.
    blocks = [[lattice.bottom, lattice.top]] + [
        [i]
        for i in range(lattice.n)
        if i not in (lattice.bottom, lattice.top)
    ]
    ok, reason = is_lattice_congruence(lattice, blocks)
    assert not ok and "interval" in reason
    # Interval classes whose projections fail to be order-preserving.
    blocks = [[idx[(1, 2, 3)], idx[(2, 1, 3)]]] + [
        [i] for i in range(lattice.n) if i not in (idx[(1, 2, 3)], idx[(2, 1, 3)])
    ]
    ok, _ = is_lattice_congruence(lattice, blocks)
    assert not ok


def test_quotient_of_hexagon_is_pentagon():
    lattice = hexagon()
    idx = lattice.index
    cong = congruence_closure(lattice, [(idx[(1, 3, 2)], idx[(3, 1, 2)])])
    q = quotient(lattice, cong)
    assert q.n == 5
    assert poset_isomorphism(q, pentagon()) is not None
    all_in_one = congruence_from_partition(lattice, [list(range(lattice.n))])
    assert quotient_lattice(all_in_one).n == 1
    discrete = congruence_from_partition(
        lattice, [[i] for i in range(lattice.n)]
    )
    assert poset_isomorphism(quotient_lattice(discrete), lattice) is not None


def test_cg_hexagon():
    lattice = hexagon()
    idx = lattice.index
    cong = cg(lattice, idx[(3, 1, 2)])
    contracted = {
        lattice.elements[g] for g in cong.contracted_join_irreducibles()
    }
    assert contracted == {(3, 1, 2)}
    assert cong.num_classes == 5
    # Contracting an atom forces the rest of the fixpoint cascade.
    cong_atom = cg(lattice, idx[(2, 1, 3)])
    classes = {
        frozenset(lattice.elements[i] for i in cls)
        for cls in cong_atom.classes
    }
    assert classes == {
        frozenset({(1, 2, 3), (2, 1, 3), (2, 3, 1)}),
        frozenset({(1, 3, 2), (3, 1, 2), (3, 2, 1)}),
    }
    with pytest.raises(ValueError):
        cg(lattice, lattice.top)


def test_forcing_poset_hexagon_and_pentagon():
    lattice = hexagon()
    fp = forcing_poset(lattice)
    atoms = set(lattice.atoms())
    degree2 = set(fp.nodes) - atoms
    for a in atoms:
        assert degree2 <= fp.forced[a]
    for g in degree2:
        assert fp.forced[g] == {g}
    p = pentagon()
    fp = forcing_poset(p)
    # Atom-side join-irreducibles force the middle of the long chain.
    mid = p.index["b2"]
    for g in fp.nodes:
        if g != mid:
            assert fp.forces(g, mid)
    single = FiniteLattice.from_covers(("x",), [])
    assert forcing_poset(single).nodes == []


def test_mobius_and_atomic():
    lattice = hexagon()
    assert lattice.mobius(lattice.bottom, lattice.top) == 1
    assert lattice.is_atomic_interval(lattice.bottom, lattice.top)
    for i in range(lattice.n):
        assert lattice.mobius(i, i) == 1
    p = pentagon()
    mid = p.index["b2"]
    assert p.mobius(p.bottom, mid) == 0
    assert not p.is_atomic_interval(p.bottom, mid)


def test_is_sublattice():
    lattice = hexagon()
    idx = lattice.index
    ok, witness = lattice.is_sublattice(
        [idx[(1, 2, 3)], idx[(2, 1, 3)], idx[(1, 3, 2)]]
    )
    assert not ok and witness is not None
    ok, witness = lattice.is_sublattice(range(lattice.n))
    assert ok and witness is None


def test_quotient_join_agrees_classwise():
    lattice = hexagon()
    idx = lattice.index
    cong = congruence_closure(lattice, [(idx[(1, 3, 2)], idx[(3, 1, 2)])])
    q = quotient_lattice(cong)
    down = cong.down_projection
    for i, j in itertools.product(range(lattice.n), repeat=2):
        a = q.index[lattice.elements[down[i]]]
        b = q.index[lattice.elements[down[j]]]
        joined = q.elements[q.join(a, b)]
        assert joined == lattice.elements[down[lattice.join(i, j)]]


def test_poset_isomorphism_and_dual():
    lattice = hexagon()
    assert poset_isomorphism(lattice, lattice.dual()) is not None
    assert poset_anti_isomorphism(lattice, lattice) is not None
    assert poset_isomorphism(lattice, pentagon()) is None


def test_closure_outputs_verify():
    for rank in (2, 3):
        lattice = build_system("A", rank).weak_order_lattice()
        for g in lattice.join_irreducibles:
            cong = cg(lattice, g)
            ok, reason = cong.verify()
            assert ok, reason
