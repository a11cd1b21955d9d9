"""Tests for polygon triangulations and pattern machinery in type A."""

import itertools

import pytest

from cambrian import (
    UpDownSignature,
    all_triangulations,
    camb_forcing_a,
    cambrian_congruence,
    contains_colored_pattern,
    descent_set_of_triangulation,
    eta,
    get_system,
    is_pi_down_fixed,
    is_pi_up_fixed,
    ji_contracted_a,
    lambda_paths,
    orientation_from_edges,
    pi_down,
    pi_up,
    polygon_from_signature,
    poset_isomorphism,
    quotient_lattice,
    shard_arrow_a,
    signatures_for_orientation,
    triangulation_lattice,
    uncontracted_ji_subsets,
)
from cambrian.suites import catalan


SIG6 = UpDownSignature(6, frozenset({1, 3, 4}))


def test_signature_basics():
    sig = UpDownSignature.from_string("udud")
    assert sig.n == 4 and sig.ups == frozenset({1, 3})
    assert sig.to_string() == "udud"
    assert sig.downs == frozenset({2, 4})
    # Indices 0 and n+1 count as both up and down.
    assert sig.is_up(0) and sig.is_down(0)
    assert sig.is_up(5) and sig.is_down(5)
    with pytest.raises(ValueError):
        UpDownSignature.from_string("udx")
    with pytest.raises(ValueError):
        UpDownSignature(3, frozenset({4}))


def test_orientation_edges_and_recovery():
    # b=2 down: (1,2); b=3 up: (3,2); b=4 up: (4,3); b=5 down: (4,5).
    assert SIG6.orientation_edges() == ((1, 2), (3, 2), (4, 3), (4, 5))
    sigs = signatures_for_orientation(6, SIG6.orientation_edges())
    # Indices 1 and n are free, so four signatures share the orientation.
    assert len(sigs) == 4
    assert SIG6 in sigs
    assert all(s.orientation_edges() == SIG6.orientation_edges() for s in sigs)
    with pytest.raises(ValueError):
        signatures_for_orientation(6, [(1, 2)])


def test_polygon_chains():
    poly = polygon_from_signature(SIG6)
    assert poly.boundary_cycle() == (0, 1, 3, 4, 7, 6, 5, 2)
    # The lower chain is vertex 0, the down vertices, then vertex n+1.
    assert [0] + sorted(SIG6.downs) + [7] == [0, 2, 5, 6, 7]


def test_lambda_paths_example():
    poly = polygon_from_signature(SIG6)
    paths = lambda_paths((4, 2, 6, 3, 1, 5), poly)
    assert paths[0] == (0, 2, 5, 6, 7)
    assert paths[1] == (0, 2, 4, 5, 6, 7)
    assert paths[6] == (0, 1, 3, 4, 7)
    with pytest.raises(ValueError):
        lambda_paths((1, 1, 2), poly)


def test_eta_examples():
    poly = polygon_from_signature(SIG6)
    tri = eta((4, 2, 6, 3, 1, 5), poly)
    assert tri.diagonals == frozenset({(0, 3), (0, 4), (2, 4), (4, 5), (5, 7)})
    # Identity with the odd-up alternating signature gives the snake.
    snake_sig = UpDownSignature(6, frozenset({1, 3, 5}))
    snake = eta(tuple(range(1, 7)), polygon_from_signature(snake_sig))
    assert snake.diagonals == frozenset({(1, 2), (1, 4), (3, 4), (3, 6), (5, 6)})


def test_colored_pattern_witness():
    found, witness = contains_colored_pattern((4, 2, 6, 3, 1, 5), SIG6, "up231")
    assert found and witness == (4, 6, 3)
    with pytest.raises(ValueError):
        contains_colored_pattern((1, 2), SIG6, "no-such-pattern")


def test_pi_down_small_examples():
    all_up = UpDownSignature(3, frozenset({1, 2, 3}))
    assert pi_down((2, 3, 1), all_up) == (2, 1, 3)
    assert pi_down((3, 2, 1), all_up) == (3, 2, 1)


@pytest.mark.parametrize("ups", [frozenset(), frozenset({2, 3}), frozenset({1, 4})])
def test_projection_properties(ups):
    sig = UpDownSignature(4, ups)
    system = get_system("A", 3)
    fixed_down = 0
    for x in itertools.permutations(range(1, 5)):
        down = pi_down(x, sig)
        up = pi_up(x, sig)
        # Idempotent, with fixed points characterized by pattern avoidance.
        assert pi_down(down, sig) == down
        assert pi_up(up, sig) == up
        assert is_pi_down_fixed(down, sig) and is_pi_up_fixed(up, sig)
        assert is_pi_down_fixed(x, sig) == (down == x)
        assert is_pi_up_fixed(x, sig) == (up == x)
        # Projections move within the weak order, bracketing x.
        assert system.weak_le(down, x) and system.weak_le(x, up)
        fixed_down += down == x
    assert fixed_down == catalan(4)


def test_eta_constant_on_fibers():
    sig = UpDownSignature(4, frozenset({2, 4}))
    poly = polygon_from_signature(sig)
    for x in itertools.permutations(range(1, 5)):
        assert eta(x, poly).diagonals == eta(pi_down(x, sig), poly).diagonals


@pytest.mark.parametrize("ups", [frozenset({1, 2, 3}), frozenset({2})])
def test_triangulation_lattice_counts(ups):
    lattice = triangulation_lattice(UpDownSignature(3, ups))
    assert len(lattice.elements) == catalan(3) == 5
    assert sum(len(lattice.upper[i]) for i in range(5)) == 5


def test_triangulation_lattice_trivial():
    lattice = triangulation_lattice(UpDownSignature(1, frozenset()))
    assert len(lattice.elements) == 1


def test_triangulation_lattice_matches_quotient():
    sig = UpDownSignature(4, frozenset({1, 3}))
    system = get_system("A", 3)
    orientation = orientation_from_edges(system, sig.orientation_edges())
    cong = cambrian_congruence(system, orientation)
    assert poset_isomorphism(triangulation_lattice(sig), quotient_lattice(cong))


def test_all_triangulations_count():
    sig = UpDownSignature(5, frozenset({2, 5}))
    assert len(all_triangulations(polygon_from_signature(sig))) == catalan(5)


def test_descents_of_triangulations():
    sig = UpDownSignature(4, frozenset({2, 3}))
    poly = polygon_from_signature(sig)
    system = get_system("A", 3)
    identity = (1, 2, 3, 4)
    w0 = (4, 3, 2, 1)
    assert descent_set_of_triangulation(eta(identity, poly), sig) == frozenset()
    assert descent_set_of_triangulation(eta(w0, poly), sig) == frozenset(
        {(1, 2), (2, 3), (3, 4)}
    )
    for x in itertools.permutations(range(1, 5)):
        got = {a for a, _ in descent_set_of_triangulation(eta(x, poly), sig)}
        assert got == set(system.left_descents(x))


def test_shard_arrow_examples():
    assert shard_arrow_a(3, frozenset({2}), frozenset({1, 2}))
    assert shard_arrow_a(3, frozenset({1, 3}), frozenset({1, 2}))
    assert not shard_arrow_a(3, frozenset({1, 2}), frozenset({2}))
    with pytest.raises(ValueError):
        shard_arrow_a(3, frozenset({3}), frozenset({2}))
    with pytest.raises(ValueError):
        shard_arrow_a(3, frozenset(), frozenset({2}))


def test_uncontracted_ji_subsets():
    sig = UpDownSignature(4, frozenset({2, 4}))
    survivors = uncontracted_ji_subsets(sig)
    assert len(survivors) == 4 * 3 // 2
    for members in survivors.values():
        assert not ji_contracted_a(sig, members)
    forcing = camb_forcing_a(sig)
    assert set(forcing) == set(survivors.values())
