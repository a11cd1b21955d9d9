"""Tests for centrally symmetric triangulations and signed patterns."""

import math

import pytest

from cambrian import (
    SymmetricSignature,
    all_symmetric_signatures,
    b_shard_arrow,
    b_tamari_membership,
    cambrian_congruence,
    descent_set_b,
    eta_b,
    get_system,
    is_pi_down_fixed,
    ji_contraction_test_b,
    linear_signature,
    orientation_from_edges,
    poset_isomorphism,
    quotient_lattice,
    symmetric_triangulation_lattice,
    symmetric_triangulations,
)
from cambrian.coxeter import embed_b_in_a, full_notation


def test_symmetric_signature_validation():
    sig = SymmetricSignature.from_positive_ups(3, {1, 3})
    assert sig.ups == frozenset({1, 3, -2})
    assert sig.is_up(1) and not sig.is_up(-1)
    with pytest.raises(ValueError):
        SymmetricSignature(2, frozenset({1, -1, 2, -2}))
    with pytest.raises(ValueError):
        SymmetricSignature(2, frozenset({3, -1, 2}))


def test_bridge_round_trip():
    sig = SymmetricSignature.from_positive_ups(3, {2})
    for i in [v for v in range(-4, 5) if v != 0]:
        assert sig.unbridge(sig.bridge(i)) == i
    assert sig.bridge(-4) == 0 and sig.bridge(4) == 7
    a_sig = sig.a_signature()
    assert a_sig.n == 6
    assert a_sig.ups == frozenset(sig.bridge(i) for i in sig.ups)


def test_orientation_edges():
    sig = SymmetricSignature.from_positive_ups(3, {1, 3})
    # 1 up: (1, 0); 2 down: (1, 2).
    assert sig.orientation_edges() == ((1, 0), (1, 2))


def test_eta_b_always_symmetric():
    system = get_system("B", 3)
    sig = SymmetricSignature.from_positive_ups(3, {2})
    for x in system.weak_order_lattice().elements:
        tri = eta_b(tuple(x), sig)
        mirrored = {(-q, -p) for p, q in tri.signed_diagonals}
        assert mirrored == set(tri.signed_diagonals)


def test_eta_b_fiber_count():
    system = get_system("B", 2)
    sig = SymmetricSignature.from_positive_ups(2, {1})
    fibers = {eta_b(tuple(x), sig).signed_diagonals for x in system.weak_order_lattice().elements}
    assert len(fibers) == math.comb(4, 2)


def test_ji_contraction_examples():
    sig = SymmetricSignature.from_positive_ups(2, {1, 2})
    # Atoms are never contracted: the open interval misses +-[n].
    assert not ji_contraction_test_b(2, frozenset({-1, 2}), sig)
    with pytest.raises(ValueError):
        ji_contraction_test_b(2, frozenset({1, 3}), sig)
    # n=3, A={-2,3}: the open window (-2, 1) meets the complement only in
    # -1, so contraction follows the up-ness of -1 (i.e. the down-ness of 1).
    up1 = SymmetricSignature.from_positive_ups(3, {1})
    down1 = SymmetricSignature.from_positive_ups(3, {2, 3})
    members = frozenset({-2, 3})
    assert not ji_contraction_test_b(3, members, up1)
    assert ji_contraction_test_b(3, members, down1)


def test_b_shard_arrow_validation():
    with pytest.raises(ValueError):
        b_shard_arrow(2, frozenset({1, 3}), frozenset({-1, 2}))
    # Atoms force nothing but may be forced.
    assert not b_shard_arrow(2, frozenset({-1, 2}), frozenset({-1, 2}))


def test_b_tamari_counts_and_identity():
    for variant in ("toward_s0", "away_from_s0"):
        assert b_tamari_membership((1, 2, 3), variant)
        system = get_system("B", 3)
        members = [x for x in system.weak_order_lattice().elements if b_tamari_membership(tuple(x), variant)]
        assert len(members) == math.comb(6, 3)
    with pytest.raises(ValueError):
        b_tamari_membership((1, 2), "sideways")


def test_b_tamari_excluded_at_rank_two():
    system = get_system("B", 2)
    excluded = {
        tuple(x)
        for x in system.weak_order_lattice().elements
        if not b_tamari_membership(tuple(x), "toward_s0")
    }
    assert excluded == {(-2, -1), (2, -1)}


def test_b_tamari_matches_projection_fixedness():
    for variant in ("toward_s0", "away_from_s0"):
        sig = linear_signature(3, variant)
        a_sig = sig.a_signature()
        system = get_system("B", 3)
        for x in system.weak_order_lattice().elements:
            fixed = is_pi_down_fixed(embed_b_in_a(tuple(x)), a_sig)
            assert fixed == b_tamari_membership(tuple(x), variant)


@pytest.mark.parametrize("n", [2, 3])
def test_symmetric_triangulation_counts(n):
    sig = SymmetricSignature.from_positive_ups(n, {1})
    assert len(symmetric_triangulations(sig)) == math.comb(2 * n, n)


def test_symmetric_triangulation_lattice_matches_quotient():
    for sig in all_symmetric_signatures(2):
        system = get_system("B", 2)
        orientation = orientation_from_edges(system, sig.orientation_edges())
        cong = cambrian_congruence(system, orientation)
        lattice = symmetric_triangulation_lattice(sig)
        assert len(lattice.elements) == 6
        assert poset_isomorphism(lattice, quotient_lattice(cong))


def test_descent_set_b_matches_group_descents():
    system = get_system("B", 3)
    sig = SymmetricSignature.from_positive_ups(3, {2})
    identity = (1, 2, 3)
    w0 = (-1, -2, -3)
    assert descent_set_b(eta_b(identity, sig)) == frozenset()
    assert descent_set_b(eta_b(w0, sig)) == frozenset({0, 1, 2})
    for x in system.weak_order_lattice().elements:
        got = descent_set_b(eta_b(tuple(x), sig))
        assert got == frozenset(system.left_descents(x))
