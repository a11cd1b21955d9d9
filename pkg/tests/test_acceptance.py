"""Acceptance checks: each test prints a single pass/fail line.

The sixteen checks below exercise the full verification surface at its
largest configured scale: Catalan counts in types A, B, I2 and the H3 fan,
congruence/fiber equality, pattern characterizations, sublattice and
shard-forcing checks, the B analogue of the Tamari lattice, the cluster
machinery, Stasheff rays, Mobius values, descents, duality, and the
congruence-uniformity shadow on join-irreducibles.
"""

import itertools

import pytest

from cambrian import cg, forcing_poset, get_system, quotient_lattice
from cambrian.congruences import all_orientations, cambrian_congruence
from cambrian.suites import (
    run_suite,
    suite_fibers,
)


def _record(number: int, name: str, passed: bool, detail: str = "") -> None:
    status = "PASS" if passed else "FAIL"
    line = f"criterion {number:2d} {name}: {status}"
    if detail and not passed:
        line += f" ({detail})"
    print(line)
    assert passed, line


def _suite(number: int, name: str, report: dict) -> None:
    failed = [c["name"] for c in report["checks"] if not c["passed"]]
    _record(number, name, report["passed"], "; ".join(failed[:3]))


def test_criterion_01_catalan_counts_type_a():
    _suite(1, "catalan counts A n<=7", run_suite("catalan", "A", 7))


def test_criterion_02_catalan_counts_type_b():
    _suite(2, "central binomial counts B n<=4", run_suite("catalan", "B", 4))


def test_criterion_03_dihedral_counts():
    _suite(3, "dihedral counts m<=8", run_suite("catalan", "I2", 8))


def test_criterion_04_h3_fan():
    _suite(4, "H3 fan: 32 simplicial cones", run_suite("fan", "H3"))


def test_criterion_05_congruence_equality():
    _suite(5, "fiber partition equals congruence", run_suite("congruence-eq"))


def test_criterion_06_fiber_structure():
    _suite(6, "fibers are connected intervals n<=6", suite_fibers(6))


def test_criterion_07_pattern_characterization():
    _suite(7, "projection fixedness by patterns n<=7", run_suite("patterns", max_rank=7))


def test_criterion_08_sublattice():
    _suite(8, "representatives form a sublattice", run_suite("sublattice"))


def test_criterion_09_b_tamari():
    _suite(9, "signed-pattern avoiders n<=4", run_suite("b-tamari", max_rank=4))


def test_criterion_10_shard_digraphs():
    _suite(10, "shard closure equals brute forcing", run_suite("shard"))


def test_criterion_11_cluster_suite():
    _suite(11, "cluster complex and refinement", run_suite("cluster"))


def test_criterion_12_stasheff_rays():
    report = run_suite("fan", "A", 7)
    stasheff = [c for c in report["checks"] if c["name"].startswith("stasheff")]
    ok = len(stasheff) == 5 and all(c["passed"] for c in stasheff)
    _record(12, "stasheff interval rays n<=7", ok)


def test_criterion_13_mobius():
    _suite(13, "Mobius values and atomic intervals", run_suite("mobius"))


def test_criterion_14_descents():
    _suite(14, "descents from triangulations", run_suite("descent"))


def test_criterion_15_duality():
    _suite(15, "orientation recovery and duality", run_suite("iso"))


def _root_poset(rank: int):
    """Positive roots of the A series ordered componentwise."""
    roots = []
    for i in range(rank):
        for j in range(i, rank):
            roots.append(tuple(1 if i <= k <= j else 0 for k in range(rank)))
    return roots


def test_criterion_16_congruence_uniformity_shadow():
    ok = True
    detail = ""
    for n in (3, 4):
        system = get_system("A", n - 1)
        roots = _root_poset(n - 1)
        root_le = {
            (a, b): all(x <= y for x, y in zip(a, b))
            for a in roots
            for b in roots
        }
        for orientation in all_orientations(system):
            cong = cambrian_congruence(system, orientation)
            lattice = quotient_lattice(cong)
            jis = list(lattice.join_irreducibles)
            if len(jis) != n * (n - 1) // 2:
                ok, detail = False, f"n={n}: {len(jis)} join-irreducibles"
                break
            keys = {cg(lattice, g).key() for g in jis}
            if len(keys) != len(jis):
                ok, detail = False, f"n={n}: contraction map not injective"
                break
            forcing = forcing_poset(lattice)
            found = False
            for perm in itertools.permutations(roots):
                image = dict(zip(jis, perm))
                direct = all(
                    forcing.forces(g, h) == root_le[(image[g], image[h])]
                    for g in jis
                    for h in jis
                )
                dual = all(
                    forcing.forces(g, h) == root_le[(image[h], image[g])]
                    for g in jis
                    for h in jis
                )
                if direct or dual:
                    found = True
                    break
            if not found:
                ok, detail = False, f"n={n}: forcing order not root-poset shaped"
                break
        if not ok:
            break
    _record(16, "contraction congruences shadow the root poset", ok, detail)
