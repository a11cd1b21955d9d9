import pytest

from cambrian import (
    build_system,
    cambrian_congruence,
    cambrian_lattice,
    check_iso_anti_iso,
    descent_quotient_check,
    generating_pairs,
    parabolic_restriction_check,
    parse_orientation,
    recover_orientation,
)
from cambrian.congruences import (
    all_orientations,
    orientation_from_edges,
)


def test_parse_orientation_and_reverse():
    system = build_system("A", 3)
    o = parse_orientation(system, "1>2,3>2")
    assert set((s, t) for s, t, _ in o.edges) == {(1, 2), (3, 2)}
    assert set((s, t) for s, t, _ in o.reverse().edges) == {(2, 1), (2, 3)}
    with pytest.raises(ValueError):
        parse_orientation(system, "1>2")
    with pytest.raises(ValueError):
        parse_orientation(system, "1>2,2>1,3>2")


def test_all_orientations_count():
    assert len(all_orientations(build_system("A", 3))) == 4
    assert len(all_orientations(build_system("B", 3))) == 4
    assert len(all_orientations(build_system("H3"))) == 4
    assert len(all_orientations(build_system("I2", None, 7))) == 2


def test_generating_pairs_shape():
    system = build_system("B", 2)
    o = parse_orientation(system, "0>1")
    ((gen, word),) = generating_pairs(system, o)
    # Edge s0 -> s1 with m = 4: t = s1, word = s1 s0 s1.
    assert gen == system.generator(1)
    assert word == system.from_word([1, 0, 1])


def test_cambrian_congruence_counts():
    system = build_system("A", 2)
    for o in all_orientations(system):
        assert cambrian_congruence(system, o).num_classes == 5
    h3 = build_system("H3")
    o = parse_orientation(h3, "1>2,2>3")
    assert cambrian_congruence(h3, o).num_classes == 32


def test_class_representatives_are_bottoms():
    system = build_system("A", 3)
    o = parse_orientation(system, "1>2,3>2")
    camb = cambrian_lattice(system, o)
    lattice = camb.congruence.lattice
    for rep, cls in zip(camb.class_representatives, camb.congruence.classes):
        bottom = cls[0]
        assert rep == lattice.elements[bottom]
        for i in cls:
            assert lattice.le(bottom, i)


def test_recover_orientation_round_trip():
    for family, rank in [("A", 3), ("B", 3), ("I2", 6), ("H3", None)]:
        if family == "I2":
            system = build_system("I2", None, rank)
        else:
            system = build_system(family, rank)
        for o in all_orientations(system):
            quotient = cambrian_lattice(system, o).quotient
            got = recover_orientation(quotient, name=system.generator_of_atom)
            assert set(got.edges) == set(o.edges)


def test_check_iso_anti_iso():
    system = build_system("A", 3)
    a = parse_orientation(system, "1>2,2>3")
    b = parse_orientation(system, "2>1,3>2")
    verdict = check_iso_anti_iso(system, a, b)
    assert verdict["diagram"] == "both"
    assert verdict["lattice_iso"] and verdict["lattice_anti_iso"]
    assert verdict["consistent"]
    c = parse_orientation(system, "1>2,3>2")
    verdict = check_iso_anti_iso(system, a, c)
    assert verdict["consistent"]


def test_descent_quotient_check():
    for family, rank in [("A", 3), ("B", 2)]:
        system = build_system(family, rank)
        for o in all_orientations(system):
            ok, witness = descent_quotient_check(system, o)
            assert ok, witness


def test_parabolic_restriction():
    system = build_system("A", 3)
    o = parse_orientation(system, "1>2,3>2")
    assert parabolic_restriction_check(system, o, {1, 2})
    assert parabolic_restriction_check(system, o, {2, 3})
    assert parabolic_restriction_check(system, o, {1, 3})
    b3 = build_system("B", 3)
    ob = orientation_from_edges(b3, [(0, 1), (2, 1)])
    assert parabolic_restriction_check(b3, ob, {0, 1})
    assert parabolic_restriction_check(b3, ob, {1, 2})
