"""Named verification suites shared by the command line tool and the tests.

Every suite returns a JSON-ready report::

    {"suite": ..., "passed": bool, "checks": [{"name", "passed", ...}, ...]}

Each check that builds a Cambrian congruence records the generating pairs
used, so a failing run can be replayed from the report alone.

Throughout, ``max_rank`` bounds the group index n: the symmetric group
S_n for family A (Coxeter rank n-1), the signed-permutation group B_n,
and the bond label m for I2.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from math import comb

from .coxeter import (
    CoxeterSystem,
    build_system,
    perm_to_ji_subset,
    perm_to_signed_ji,
)
from .lattices import (
    FiniteLattice,
    forcing_arrows,
    poset_anti_isomorphism,
    poset_isomorphism,
)
from .congruences import (
    Orientation,
    all_orientations,
    cambrian_congruence,
    cambrian_lattice,
    descent_quotient_check,
    generating_pairs,
    orientation_from_edges,
    recover_orientation,
)
from .polygon_a import (
    UpDownSignature,
    descent_set_of_triangulation,
    eta,
    pi_down,
    pi_up,
    polygon_from_signature,
    shard_digraph_a,
    transitive_closure_digraph,
)
from .polygon_b import (
    all_symmetric_signatures,
    b_tamari_membership,
    descent_set_b,
    eta_b,
    linear_signature,
    shard_digraph_b,
)
from .fans import (
    alternating_signature,
    b_bipartite_signature,
    b_cluster_poset,
    check_fan_a,
    check_fan_b,
    check_fan_h3,
    cluster_poset,
    cluster_refine_check,
    clusters,
    nice_coroot,
    positive_roots,
    psi_and_bipartite_iso_check,
    stasheff_ray_check,
    twist_check,
)

SUITE_NAMES = (
    "catalan",
    "congruence-eq",
    "sublattice",
    "patterns",
    "shard",
    "fan",
    "cluster",
    "descent",
    "mobius",
    "iso",
    "b-tamari",
)

_SYSTEMS: dict = {}


def get_system(family: str, rank=None, bond=None) -> CoxeterSystem:
    """Memoized system construction so weak orders are enumerated once."""
    key = (family, rank, bond)
    if key not in _SYSTEMS:
        _SYSTEMS[key] = build_system(family, rank, bond)
    return _SYSTEMS[key]


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def all_updown_signatures(n: int) -> list[UpDownSignature]:
    out = []
    for r in range(n + 1):
        for ups in itertools.combinations(range(1, n + 1), r):
            out.append(UpDownSignature(n, frozenset(ups)))
    return out


def _sym_sig_string(sig) -> str:
    return "".join("u" if i in sig.ups else "d" for i in range(1, sig.n + 1))


def _element_repr(system: CoxeterSystem, w) -> str:
    if system.family in ("A", "B"):
        return ",".join(str(v) for v in w)
    return " ".join(f"s{g}" for g in w.word) if w.word else "e"


def _pairs_repr(system: CoxeterSystem, orientation: Orientation) -> list:
    return [
        [_element_repr(system, a), _element_repr(system, b)]
        for a, b in generating_pairs(system, orientation)
    ]


def _check(name: str, passed, **extra) -> dict:
    return {"name": name, "passed": bool(passed), **extra}


def _report(suite: str, checks: list[dict], **meta) -> dict:
    return {
        "suite": suite,
        **meta,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
    }


def _cut(default: int, max_rank) -> int:
    return default if max_rank is None else min(default, max_rank)


# ---------------------------------------------------------------------------
# Counting suites.


def suite_catalan(family: str = "A", max_rank=None, cap=None) -> dict:
    """Class counts of every orientation against the family's formula."""
    checks = []
    if family == "A":
        for n in range(3, (max_rank if max_rank is not None else 7) + 1):
            system = get_system("A", n - 1)
            for orientation in all_orientations(system):
                cong = cambrian_congruence(system, orientation, cap=cap)
                checks.append(
                    _check(
                        f"A n={n} [{orientation}]",
                        cong.num_classes == catalan(n),
                        count=cong.num_classes,
                        expected=catalan(n),
                        generating_pairs=_pairs_repr(system, orientation),
                    )
                )
    elif family == "B":
        for n in range(2, (max_rank if max_rank is not None else 4) + 1):
            system = get_system("B", n)
            for orientation in all_orientations(system):
                cong = cambrian_congruence(system, orientation, cap=cap)
                checks.append(
                    _check(
                        f"B n={n} [{orientation}]",
                        cong.num_classes == comb(2 * n, n),
                        count=cong.num_classes,
                        expected=comb(2 * n, n),
                        generating_pairs=_pairs_repr(system, orientation),
                    )
                )
    elif family == "I2":
        for m in range(3, (max_rank if max_rank is not None else 8) + 1):
            system = get_system("I2", None, m)
            for orientation in all_orientations(system):
                cong = cambrian_congruence(system, orientation, cap=cap)
                checks.append(
                    _check(
                        f"I2({m}) [{orientation}]",
                        cong.num_classes == m + 2,
                        count=cong.num_classes,
                        expected=m + 2,
                        generating_pairs=_pairs_repr(system, orientation),
                    )
                )
    elif family == "H3":
        system = get_system("H3")
        for orientation in all_orientations(system):
            cong = cambrian_congruence(system, orientation, cap=cap)
            checks.append(
                _check(
                    f"H3 [{orientation}]",
                    cong.num_classes == 32,
                    count=cong.num_classes,
                    expected=32,
                    generating_pairs=_pairs_repr(system, orientation),
                )
            )
    else:
        raise ValueError(f"unsupported family {family!r}")
    return _report("catalan", checks, family=family)


# ---------------------------------------------------------------------------
# Fibers of eta versus the Cambrian congruence.


def _eta_fiber_partition(lattice: FiniteLattice, signature: UpDownSignature):
    polygon = polygon_from_signature(signature)
    fibers: dict = defaultdict(list)
    for i, x in enumerate(lattice.elements):
        fibers[eta(x, polygon).diagonals].append(i)
    return fibers


def suite_congruence_eq(family=None, max_rank=None, cap=None) -> dict:
    """Fiber partitions of eta equal the Cambrian congruence classes."""
    checks = []
    for fam in [family] if family else ["A", "B"]:
        if fam == "A":
            for n in range(3, _cut(5, max_rank) + 1):
                system = get_system("A", n - 1)
                lattice = system.weak_order_lattice(cap=cap)
                cong_keys = {}
                for sig in all_updown_signatures(n):
                    orientation = orientation_from_edges(
                        system, sig.orientation_edges()
                    )
                    if orientation not in cong_keys:
                        cong_keys[orientation] = cambrian_congruence(
                            system, orientation
                        ).key()
                    fibers = _eta_fiber_partition(lattice, sig)
                    key = frozenset(frozenset(f) for f in fibers.values())
                    checks.append(
                        _check(
                            f"A n={n} sig {sig.to_string()}",
                            key == cong_keys[orientation],
                            generating_pairs=_pairs_repr(system, orientation),
                        )
                    )
        elif fam == "B":
            for n in range(2, _cut(3, max_rank) + 1):
                system = get_system("B", n)
                lattice = system.weak_order_lattice(cap=cap)
                cong_keys = {}
                for sig in all_symmetric_signatures(n):
                    orientation = orientation_from_edges(
                        system, sig.orientation_edges()
                    )
                    if orientation not in cong_keys:
                        cong_keys[orientation] = cambrian_congruence(
                            system, orientation
                        ).key()
                    fibers: dict = defaultdict(list)
                    for i, x in enumerate(lattice.elements):
                        fibers[eta_b(x, sig).base.diagonals].append(i)
                    key = frozenset(frozenset(f) for f in fibers.values())
                    checks.append(
                        _check(
                            f"B n={n} sig {_sym_sig_string(sig)}",
                            key == cong_keys[orientation],
                            generating_pairs=_pairs_repr(system, orientation),
                        )
                    )
        else:
            raise ValueError(f"unsupported family {fam!r}")
    return _report("congruence-eq", checks, family=family or "A,B")


def suite_fibers(max_rank=None, cap=None) -> dict:
    """Each eta fiber is the interval between the two projections of any
    member, and is connected in the Hasse diagram."""
    checks = []
    for n in range(3, _cut(6, max_rank) + 1):
        system = get_system("A", n - 1)
        lattice = system.weak_order_lattice(cap=cap)
        for sig in all_updown_signatures(n):
            ok, witness = _fibers_ok(lattice, sig)
            checks.append(
                _check(f"A n={n} sig {sig.to_string()}", ok, witness=witness)
            )
    return _report("fibers", checks, family="A")


def _fibers_ok(lattice: FiniteLattice, sig: UpDownSignature):
    fibers = _eta_fiber_partition(lattice, sig)
    for members in fibers.values():
        fiber = set(members)
        x = lattice.elements[members[0]]
        bot = lattice.index[pi_down(x, sig)]
        top = lattice.index[pi_up(x, sig)]
        if fiber != set(lattice.interval(bot, top)):
            return False, str(x)
        for i in members[1:]:
            y = lattice.elements[i]
            if lattice.index[pi_down(y, sig)] != bot:
                return False, str(y)
            if lattice.index[pi_up(y, sig)] != top:
                return False, str(y)
        seen = {members[0]}
        frontier = [members[0]]
        while frontier:
            i = frontier.pop()
            for j in itertools.chain(lattice.lower[i], lattice.upper[i]):
                if j in fiber and j not in seen:
                    seen.add(j)
                    frontier.append(j)
        if seen != fiber:
            return False, str(x)
    return True, None


# ---------------------------------------------------------------------------
# Pattern characterization of the projections' fixed points.


def _pattern_masks(x: tuple[int, ...]):
    """Bitmasks of values usable as the marked letter of each pattern.

    Returns (m231, m312, m213, m132); the marked letter carries the up or
    down requirement, everything else is signature-free, so containment
    for a given signature is a mask intersection.
    """
    n = len(x)
    m231 = m312 = m213 = m132 = 0
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                a, b, c = x[i], x[j], x[k]
                if c < a < b:
                    m231 |= 1 << a
                if b < c < a:
                    m312 |= 1 << c
                if b < a < c:
                    m213 |= 1 << a
                if a < c < b:
                    m132 |= 1 << c
    return m231, m312, m213, m132


def _firing_masks(x: tuple[int, ...], descending: bool):
    """Per adjacent inversion (or ascent), witness masks for a move.

    For each adjacent pair that a downward (upward) move could swap,
    returns (mask of earlier values strictly between the pair, mask of
    later values strictly between the pair).  The move fires exactly
    when an earlier witness is up or a later witness is down.
    """
    n = len(x)
    out = []
    for j in range(n - 1):
        if (x[j] > x[j + 1]) != descending:
            continue
        lo, hi = sorted((x[j], x[j + 1]))
        before = after = 0
        for i in range(j):
            if lo < x[i] < hi:
                before |= 1 << x[i]
        for k in range(j + 2, n):
            if lo < x[k] < hi:
                after |= 1 << x[k]
        out.append((before, after))
    return out


def suite_patterns(max_rank=None) -> dict:
    """Fixed points of the projections are the colored-pattern avoiders."""
    checks = []
    for n in range(3, _cut(7, max_rank) + 1):
        per_perm = [
            (x, _pattern_masks(x), _firing_masks(x, True), _firing_masks(x, False))
            for x in itertools.permutations(range(1, n + 1))
        ]
        full = ((1 << n) - 1) << 1
        bad = None
        for sig in all_updown_signatures(n):
            upmask = sum(1 << i for i in sig.ups)
            downmask = full & ~upmask
            for x, masks, down_fires, up_fires in per_perm:
                m231, m312, m213, m132 = masks
                avoid_down = not (m231 & upmask) and not (m312 & downmask)
                fixed_down = all(
                    not (b & upmask) and not (a & downmask)
                    for b, a in down_fires
                )
                avoid_up = not (m213 & upmask) and not (m132 & downmask)
                fixed_up = all(
                    not (b & upmask) and not (a & downmask)
                    for b, a in up_fires
                )
                if avoid_down != fixed_down or avoid_up != fixed_up:
                    bad = (x, sig.to_string())
                    break
            if bad:
                break
        checks.append(
            _check(
                f"A n={n} all signatures",
                bad is None,
                witness=None if bad is None else str(bad),
            )
        )
    return _report("patterns", checks, family="A")


# ---------------------------------------------------------------------------
# Sublattice of class bottoms.


def suite_sublattice(family=None, max_rank=None, cap=None) -> dict:
    """Bottom elements of congruence classes are closed under join/meet."""
    checks = []
    for fam in [family] if family else ["A", "B"]:
        if fam == "A":
            ns = range(3, _cut(6, max_rank) + 1)
        elif fam == "B":
            ns = range(2, _cut(3, max_rank) + 1)
        else:
            raise ValueError(f"unsupported family {fam!r}")
        for n in ns:
            system = get_system(fam, n - 1 if fam == "A" else n)
            lattice = system.weak_order_lattice(cap=cap)
            for orientation in all_orientations(system):
                cong = cambrian_congruence(system, orientation)
                fixed = sorted({cls[0] for cls in cong.classes})
                ok, witness = lattice.is_sublattice(fixed)
                checks.append(
                    _check(
                        f"{fam} n={n} [{orientation}]",
                        ok,
                        witness=None
                        if witness is None
                        else [
                            _element_repr(system, lattice.elements[i])
                            for i in witness
                        ],
                        generating_pairs=_pairs_repr(system, orientation),
                    )
                )
    return _report("sublattice", checks, family=family or "A,B")


# ---------------------------------------------------------------------------
# B-Tamari pattern avoiders.


def suite_b_tamari(max_rank=None, cap=None) -> dict:
    """Signed-pattern avoiders equal the class bottoms of the two linear
    orientations, with the central binomial counts."""
    checks = []
    expected = {2: 6, 3: 20, 4: 70}
    for n in range(2, _cut(4, max_rank) + 1):
        system = get_system("B", n)
        lattice = system.weak_order_lattice(cap=cap)
        for variant in ("toward_s0", "away_from_s0"):
            sig = linear_signature(n, variant)
            orientation = orientation_from_edges(system, sig.orientation_edges())
            camb = cambrian_lattice(system, orientation, cap=cap)
            reps = set(camb.class_representatives)
            avoiders = {
                x for x in lattice.elements if b_tamari_membership(x, variant)
            }
            checks.append(
                _check(
                    f"B n={n} {variant}",
                    avoiders == reps and len(avoiders) == expected[n],
                    count=len(avoiders),
                    expected=expected[n],
                    generating_pairs=_pairs_repr(system, orientation),
                )
            )
    return _report("b-tamari", checks, family="B")


# ---------------------------------------------------------------------------
# Shard digraphs versus brute-force forcing.


def suite_shard(family=None, max_rank=None, cap=None) -> dict:
    """Transitive closures of the shard arrows equal the forcing relation
    computed from smallest contracting congruences."""
    checks = []
    for fam in [family] if family else ["A", "B"]:
        if fam == "A":
            ns = range(3, _cut(5, max_rank) + 1)
            digraph, to_subset = shard_digraph_a, perm_to_ji_subset
        elif fam == "B":
            ns = range(2, _cut(3, max_rank) + 1)
            digraph, to_subset = shard_digraph_b, perm_to_signed_ji
        else:
            raise ValueError(f"unsupported family {fam!r}")
        for n in ns:
            system = get_system(fam, n - 1 if fam == "A" else n)
            lattice = system.weak_order_lattice(cap=cap)
            brute = {}
            for g, contracted in forcing_arrows(lattice).items():
                a = to_subset(lattice.elements[g])
                brute[a] = frozenset(
                    to_subset(lattice.elements[h]) for h in contracted
                ) - {a}
            shard = transitive_closure_digraph(digraph(n))
            witness = None
            if shard != brute:
                for a in set(shard) | set(brute):
                    if shard.get(a) != brute.get(a):
                        witness = (
                            sorted(a),
                            sorted(map(sorted, shard.get(a, frozenset()))),
                            sorted(map(sorted, brute.get(a, frozenset()))),
                        )
                        break
            checks.append(
                _check(
                    f"{fam} n={n}",
                    shard == brute,
                    witness=None if witness is None else str(witness),
                )
            )
    return _report("shard", checks, family=family or "A,B")


# ---------------------------------------------------------------------------
# Fans.


def suite_fan(family=None, max_rank=None, cap=None, stasheff=True) -> dict:
    """Exact fan checks: simplicial tiling, dual graph, ray dictionary."""
    checks = []
    for fam in [family] if family else ["A", "B", "H3"]:
        if fam == "A":
            for n in range(3, _cut(4, max_rank) + 1):
                for sig in all_updown_signatures(n):
                    report = check_fan_a(sig)
                    ok = all(
                        report[k]
                        for k in (
                            "simplicial",
                            "tiling",
                            "consistency",
                            "dual_graph_is_hasse",
                        )
                    )
                    checks.append(
                        _check(f"A n={n} sig {sig.to_string()}", ok, **report)
                    )
            if stasheff:
                for n in range(3, _cut(7, max_rank) + 1):
                    checks.append(
                        _check(f"stasheff rays n={n}", stasheff_ray_check(n))
                    )
        elif fam == "B":
            for n in range(2, _cut(3, max_rank) + 1):
                for sig in all_symmetric_signatures(n):
                    report = check_fan_b(sig)
                    ok = all(
                        report[k]
                        for k in ("simplicial", "tiling", "dual_graph_is_hasse")
                    )
                    checks.append(
                        _check(f"B n={n} sig {_sym_sig_string(sig)}", ok, **report)
                    )
        elif fam == "H3":
            system = get_system("H3")
            f_vectors = set()
            for orientation in all_orientations(system):
                report = check_fan_h3(system, orientation)
                f_vectors.add(tuple(report["f_vector"]))
                quotient = cambrian_lattice(system, orientation).quotient
                degrees = {
                    len(quotient.lower[i]) + len(quotient.upper[i])
                    for i in range(quotient.n)
                }
                ok = (
                    all(
                        report[k]
                        for k in ("simplicial", "tiling", "dual_graph_is_hasse")
                    )
                    and report["num_cones"] == 32
                    and degrees == {3}
                )
                checks.append(
                    _check(
                        f"H3 [{orientation}]",
                        ok,
                        hasse_degrees=sorted(degrees),
                        **report,
                    )
                )
            checks.append(
                _check(
                    "H3 equal f-vectors",
                    len(f_vectors) == 1,
                    f_vectors=sorted(f_vectors),
                )
            )
        else:
            raise ValueError(f"unsupported family {fam!r}")
    return _report("fan", checks, family=family or "A,B,H3")


# ---------------------------------------------------------------------------
# Cluster suite.


def suite_cluster(max_rank=None, cap=None) -> dict:
    """Cluster counts, cluster poset isomorphisms, psi, twist, coroots."""
    checks = []
    for n in range(2, _cut(6, max_rank) + 1):
        count = len(clusters(n).clusters)
        checks.append(
            _check(
                f"cluster count n={n}",
                count == catalan(n),
                count=count,
                expected=catalan(n),
            )
        )
    for n in range(3, _cut(5, max_rank) + 1):
        system = get_system("A", n - 1)
        orientation = orientation_from_edges(
            system, alternating_signature(n).orientation_edges()
        )
        quotient = cambrian_lattice(system, orientation, cap=cap).quotient
        checks.append(
            _check(
                f"cluster poset iso A n={n}",
                poset_isomorphism(cluster_poset(n), quotient) is not None,
                generating_pairs=_pairs_repr(system, orientation),
            )
        )
    for n in range(2, _cut(3, max_rank) + 1):
        system = get_system("B", n)
        orientation = orientation_from_edges(
            system, b_bipartite_signature(n).orientation_edges()
        )
        quotient = cambrian_lattice(system, orientation, cap=cap).quotient
        checks.append(
            _check(
                f"cluster poset iso B n={n}",
                poset_isomorphism(b_cluster_poset(n), quotient) is not None,
                generating_pairs=_pairs_repr(system, orientation),
            )
        )
    for n in range(3, _cut(5, max_rank) + 1):
        ok, witness = psi_and_bipartite_iso_check(n)
        checks.append(
            _check(
                f"psi cone bijection n={n}",
                ok,
                witness=None if ok else str(witness),
            )
        )
    for n in range(2, _cut(4, max_rank) + 1):
        roots = positive_roots(n)
        bad = None
        for beta, theta in itertools.product(roots, repeat=2):
            for eps in ("+", "-"):
                if not twist_check(n, beta, theta, eps):
                    bad = (beta, theta, eps)
                    break
            if bad:
                break
        checks.append(
            _check(
                f"twist identity n={n}",
                bad is None,
                witness=None if bad is None else str(bad),
            )
        )
    for n in range(2, _cut(5, max_rank) + 1):
        missing = None
        seen = set()
        for cluster in clusters(n).clusters:
            for alpha in cluster:
                wall = cluster - {alpha}
                if wall in seen:
                    continue
                seen.add(wall)
                try:
                    nice_coroot(n, wall)
                except LookupError:
                    missing = wall
                    break
            if missing:
                break
        checks.append(
            _check(
                f"nice coroot A n={n}",
                missing is None,
                witness=None if missing is None else str(sorted(missing)),
            )
        )
    for n in range(2, _cut(4, max_rank) + 1):
        checks.append(
            _check(f"cluster refine A n={n}", cluster_refine_check(n, "A"))
        )
    for n in range(2, _cut(3, max_rank) + 1):
        checks.append(
            _check(f"cluster refine B n={n}", cluster_refine_check(n, "B"))
        )
    return _report("cluster", checks)


# ---------------------------------------------------------------------------
# Descents.


def suite_descent(family=None, max_rank=None, cap=None) -> dict:
    """Triangulation case tables reproduce left descents; class descents
    respect joins and meets in the quotient."""
    checks = []
    for fam in [family] if family else ["A", "B"]:
        if fam == "A":
            for n in range(3, _cut(6, max_rank) + 1):
                system = get_system("A", n - 1)
                lattice = system.weak_order_lattice(cap=cap)
                bad = None
                for sig in all_updown_signatures(n):
                    polygon = polygon_from_signature(sig)
                    for x in lattice.elements:
                        got = {
                            a
                            for a, _ in descent_set_of_triangulation(
                                eta(x, polygon), sig
                            )
                        }
                        if got != set(system.left_descents(x)):
                            bad = (sig.to_string(), x)
                            break
                    if bad:
                        break
                checks.append(
                    _check(
                        f"A n={n} case tables",
                        bad is None,
                        witness=None if bad is None else str(bad),
                    )
                )
            for n in range(3, _cut(5, max_rank) + 1):
                system = get_system("A", n - 1)
                for orientation in all_orientations(system):
                    ok, witness = descent_quotient_check(
                        system, orientation, cap=cap
                    )
                    checks.append(
                        _check(
                            f"A n={n} quotient descents [{orientation}]",
                            ok,
                            witness=None if witness is None else str(witness),
                            generating_pairs=_pairs_repr(system, orientation),
                        )
                    )
        elif fam == "B":
            for n in range(2, _cut(3, max_rank) + 1):
                system = get_system("B", n)
                lattice = system.weak_order_lattice(cap=cap)
                bad = None
                for sig in all_symmetric_signatures(n):
                    for x in lattice.elements:
                        got = descent_set_b(eta_b(x, sig))
                        if set(got) != set(system.left_descents(x)):
                            bad = (_sym_sig_string(sig), x)
                            break
                    if bad:
                        break
                checks.append(
                    _check(
                        f"B n={n} case tables",
                        bad is None,
                        witness=None if bad is None else str(bad),
                    )
                )
                for orientation in all_orientations(system):
                    ok, witness = descent_quotient_check(
                        system, orientation, cap=cap
                    )
                    checks.append(
                        _check(
                            f"B n={n} quotient descents [{orientation}]",
                            ok,
                            witness=None if witness is None else str(witness),
                            generating_pairs=_pairs_repr(system, orientation),
                        )
                    )
        else:
            raise ValueError(f"unsupported family {fam!r}")
    return _report("descent", checks, family=family or "A,B")


# ---------------------------------------------------------------------------
# Mobius function and atomic intervals.


def suite_mobius(family=None, max_rank=None, cap=None) -> dict:
    """Mobius values in {-1, 0, 1}, nonzero exactly on atomic intervals."""
    checks = []
    for fam in [family] if family else ["A", "B"]:
        if fam == "A":
            ns = range(3, _cut(5, max_rank) + 1)
        elif fam == "B":
            ns = range(2, _cut(3, max_rank) + 1)
        else:
            raise ValueError(f"unsupported family {fam!r}")
        for n in ns:
            system = get_system(fam, n - 1 if fam == "A" else n)
            for orientation in all_orientations(system):
                quotient = cambrian_lattice(system, orientation, cap=cap).quotient
                bad = None
                for i in range(quotient.n):
                    for j in range(quotient.n):
                        if not quotient.le(i, j):
                            continue
                        mu = quotient.mobius(i, j)
                        atomic = quotient.is_atomic_interval(i, j)
                        if mu not in (-1, 0, 1) or (mu != 0) != atomic:
                            bad = (i, j, mu, atomic)
                            break
                    if bad:
                        break
                checks.append(
                    _check(
                        f"{fam} n={n} [{orientation}]",
                        bad is None,
                        witness=None if bad is None else str(bad),
                        generating_pairs=_pairs_repr(system, orientation),
                    )
                )
    return _report("mobius", checks, family=family or "A,B")


# ---------------------------------------------------------------------------
# Orientation recovery; duality.


def _orientation_eq(a: Orientation, b: Orientation) -> bool:
    return set(a.vertices) == set(b.vertices) and set(a.edges) == set(b.edges)


def suite_iso(family=None, max_rank=None, cap=None) -> dict:
    """Recover the orientation from each quotient; dualities of the Tamari
    and B-Tamari lattices."""
    checks = []
    instances = []
    families = [family] if family else ["A", "B", "I2", "H3"]
    if "A" in families:
        instances += [
            ("A", n - 1, None, f"A n={n}")
            for n in range(3, _cut(5, max_rank) + 1)
        ]
    if "B" in families:
        instances += [
            ("B", n, None, f"B n={n}") for n in range(2, _cut(3, max_rank) + 1)
        ]
    if "I2" in families:
        instances += [("I2", None, m, f"I2({m})") for m in range(3, 9)]
    if "H3" in families:
        instances += [("H3", None, None, "H3")]
    for fam, rank, bond, label in instances:
        system = get_system(fam, rank, bond)
        for orientation in all_orientations(system):
            quotient = cambrian_lattice(system, orientation, cap=cap).quotient
            recovered = recover_orientation(
                quotient, name=system.generator_of_atom
            )
            checks.append(
                _check(
                    f"recover {label} [{orientation}]",
                    _orientation_eq(recovered, orientation),
                    recovered=str(recovered),
                    generating_pairs=_pairs_repr(system, orientation),
                )
            )
    if family in (None, "A"):
        for n in range(3, _cut(5, max_rank) + 1):
            system = get_system("A", n - 1)
            sig = UpDownSignature(n, frozenset(range(1, n + 1)))
            orientation = orientation_from_edges(system, sig.orientation_edges())
            quotient = cambrian_lattice(system, orientation, cap=cap).quotient
            checks.append(
                _check(
                    f"Tamari self-duality n={n}",
                    poset_anti_isomorphism(quotient, quotient) is not None,
                )
            )
    if family in (None, "B"):
        for n in range(2, _cut(3, max_rank) + 1):
            system = get_system("B", n)
            quotients = []
            for variant in ("toward_s0", "away_from_s0"):
                sig = linear_signature(n, variant)
                orientation = orientation_from_edges(
                    system, sig.orientation_edges()
                )
                quotients.append(
                    cambrian_lattice(system, orientation, cap=cap).quotient
                )
            checks.append(
                _check(
                    f"B-Tamari anti-isomorphism n={n}",
                    poset_anti_isomorphism(*quotients) is not None,
                )
            )
    return _report("iso", checks, family=family or "A,B,I2,H3")


SUITES = {
    "catalan": lambda family=None, max_rank=None, cap=None: suite_catalan(
        family or "A", max_rank, cap
    ),
    "congruence-eq": suite_congruence_eq,
    "sublattice": suite_sublattice,
    "patterns": lambda family=None, max_rank=None, cap=None: suite_patterns(
        max_rank
    ),
    "shard": suite_shard,
    "fan": suite_fan,
    "cluster": lambda family=None, max_rank=None, cap=None: suite_cluster(
        max_rank, cap
    ),
    "descent": suite_descent,
    "mobius": suite_mobius,
    "iso": suite_iso,
    "b-tamari": lambda family=None, max_rank=None, cap=None: suite_b_tamari(
        max_rank, cap
    ),
}


def run_suite(name: str, family=None, max_rank=None, cap=None) -> dict:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](family=family, max_rank=max_rank, cap=cap)
