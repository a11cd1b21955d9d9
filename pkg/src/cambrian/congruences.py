"""Cambrian congruences and lattices from diagram orientations.

An orientation assigns a direction to every edge of the Coxeter diagram.
Each directed edge s -> t contributes the generating pair (t, tst...)
with m(s, t) - 1 letters; the Cambrian congruence is the smallest
lattice congruence of the weak order identifying each pair, and the
Cambrian lattice is the resulting quotient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .coxeter import CoxeterSystem
from .lattices import (
    FiniteLattice,
    LatticeCongruence,
    congruence_closure,
    congruence_from_partition,
    poset_anti_isomorphism,
    poset_isomorphism,
    quotient_lattice,
)


class NotCambrianError(ValueError):
    """Raised when a lattice fails the Cambrian reconstruction shape."""


@dataclass(frozen=True)
class Orientation:
    """A direction for each diagram edge, with its bond label."""

    vertices: tuple
    edges: tuple[tuple[object, object, int], ...]

    def __post_init__(self):
        undirected = [frozenset((s, t)) for s, t, _ in self.edges]
        if len(set(undirected)) != len(undirected):
            raise ValueError("repeated diagram edge")
        for s, t, m in self.edges:
            if s not in self.vertices or t not in self.vertices or m <= 2:
                raise ValueError(f"bad edge {(s, t, m)}")

    def reverse(self) -> "Orientation":
        return Orientation(
            self.vertices, tuple((t, s, m) for s, t, m in self.edges)
        )

    def __str__(self) -> str:
        return ",".join(f"{s}>{t}" for s, t, _ in self.edges)


def diagram_edges(system: CoxeterSystem) -> list[tuple[object, object, int]]:
    """Undirected diagram edges (s, t, m) with m > 2, s before t."""
    names = system.generator_names
    out = []
    for i, s in enumerate(names):
        for t in names[i + 1 :]:
            m = system.bond_label(s, t)
            if m > 2:
                out.append((s, t, m))
    return out


def orientation_from_edges(system: CoxeterSystem, directed) -> Orientation:
    """Build an orientation from directed pairs (s, t), one per edge."""
    wanted = {frozenset((s, t)): m for s, t, m in diagram_edges(system)}
    seen = {}
    for s, t in directed:
        key = frozenset((s, t))
        if key not in wanted:
            raise ValueError(f"{s}>{t} is not a diagram edge")
        if key in seen:
            raise ValueError(f"edge {{{s},{t}}} directed twice")
        seen[key] = (s, t, wanted[key])
    missing = set(wanted) - set(seen)
    if missing:
        raise ValueError(f"undirected diagram edges remain: {sorted(map(sorted, missing))}")
    edges = tuple(seen[frozenset((s, t))] for s, t, _ in diagram_edges(system))
    return Orientation(tuple(system.generator_names), edges)


def parse_orientation(system: CoxeterSystem, text: str) -> Orientation:
    """Parse "1>2,3>2" over generator names into an orientation."""
    name_of = {str(g): g for g in system.generator_names}
    directed = []
    for part in text.split(",") if text else []:
        part = part.strip()
        if part.count(">") != 1:
            raise ValueError(f"bad edge token {part!r}")
        a, b = part.split(">")
        if a.strip() not in name_of or b.strip() not in name_of:
            raise ValueError(f"unknown generator in {part!r}")
        directed.append((name_of[a.strip()], name_of[b.strip()]))
    return orientation_from_edges(system, directed)


def all_orientations(system: CoxeterSystem) -> list[Orientation]:
    base = diagram_edges(system)
    out = []
    for flips in itertools.product([False, True], repeat=len(base)):
        directed = [
            (t, s) if flip else (s, t)
            for (s, t, _), flip in zip(base, flips)
        ]
        out.append(orientation_from_edges(system, directed))
    return out


def generating_pairs(system: CoxeterSystem, orientation: Orientation):
    """For each directed edge s -> t, the pair (t, tst... with m-1 letters)."""
    pairs = []
    for s, t, m in orientation.edges:
        word = [t if k % 2 == 0 else s for k in range(m - 1)]
        pairs.append((system.generator(t), system.from_word(word)))
    return pairs


@dataclass(frozen=True)
class CambrianLattice:
    system: CoxeterSystem
    orientation: Orientation
    congruence: LatticeCongruence
    quotient: FiniteLattice

    @property
    def class_representatives(self):
        """The minimal element of each congruence class."""
        lattice = self.congruence.lattice
        return [lattice.elements[cls[0]] for cls in self.congruence.classes]


def cambrian_congruence(
    system: CoxeterSystem, orientation: Orientation, cap=None
) -> LatticeCongruence:
    lattice = system.weak_order_lattice(cap=cap)
    pairs = [
        (lattice.index[a], lattice.index[b])
        for a, b in generating_pairs(system, orientation)
    ]
    return congruence_closure(lattice, pairs)


def cambrian_lattice(
    system: CoxeterSystem, orientation: Orientation, cap=None
) -> CambrianLattice:
    cong = cambrian_congruence(system, orientation, cap=cap)
    return CambrianLattice(system, orientation, cong, quotient_lattice(cong))


def recover_orientation(lattice: FiniteLattice, name=None) -> Orientation:
    """Reconstruct the orientation from a Cambrian lattice's atom joins.

    Vertices are the atoms, named by `name(element)` when given and by the
    atom's element value otherwise.
    """
    if name is None:
        name = lambda elt: elt
    bottom = lattice.bottom
    atoms = lattice.atoms()
    edges = []
    for s, t in itertools.combinations(atoms, 2):
        top = lattice.join(s, t)
        interval = lattice.interval(bottom, top)
        if len(interval) == 4:
            continue
        side_s = [z for z in interval if lattice.le(s, z) and z != top]
        side_t = [z for z in interval if lattice.le(t, z) and z != top]
        shape_ok = (
            len(interval) == 2 + len(side_s) + len(side_t)
            and not (set(side_s) & set(side_t))
            and all(
                lattice.le(a, b) or lattice.le(b, a)
                for side in (side_s, side_t)
                for a, b in itertools.combinations(side, 2)
            )
        )
        if not shape_ok:
            raise NotCambrianError(f"interval over atoms {s}, {t} is not two chains")
        long_atom, short_len, long_len = (
            (s, len(side_t), len(side_s))
            if len(side_s) > len(side_t)
            else (t, len(side_s), len(side_t))
        )
        if short_len != 1 or long_len < 2:
            raise NotCambrianError(
                f"interval over atoms {s}, {t} has chain lengths "
                f"{short_len + 2} and {long_len + 2}"
            )
        m = long_len + 1
        source, sink = (s, t) if long_atom == s else (t, s)
        edges.append((name(lattice.elements[source]), name(lattice.elements[sink]), m))
    return Orientation(
        tuple(name(lattice.elements[a]) for a in atoms), tuple(edges)
    )


# ---------------------------------------------------------------------------
# Isomorphism and anti-isomorphism of Cambrian lattices.


def _diagram_maps(a: Orientation, b: Orientation, reverse: bool) -> bool:
    """A vertex bijection carrying directed edges of a onto those of b."""
    eb = {(s, t): m for s, t, m in b.edges}
    for perm in itertools.permutations(b.vertices):
        phi = dict(zip(a.vertices, perm))
        image = {
            ((phi[t], phi[s]) if reverse else (phi[s], phi[t])): m
            for s, t, m in a.edges
        }
        if image == eb:
            return True
    return False


def check_iso_anti_iso(
    system: CoxeterSystem, a: Orientation, b: Orientation, cap=None
) -> dict:
    """Diagram-level decision, confirmed by lattice-level search."""
    iso = _diagram_maps(a, b, reverse=False)
    anti = _diagram_maps(a, b, reverse=True)
    la = cambrian_lattice(system, a, cap=cap).quotient
    lb = cambrian_lattice(system, b, cap=cap).quotient
    lat_iso = poset_isomorphism(la, lb) is not None
    lat_anti = poset_anti_isomorphism(la, lb) is not None
    verdict = {
        (True, True): "both",
        (True, False): "iso",
        (False, True): "anti-iso",
        (False, False): "neither",
    }[(iso, anti)]
    return {
        "diagram": verdict,
        "lattice_iso": lat_iso,
        "lattice_anti_iso": lat_anti,
        "consistent": (iso <= lat_iso) and (anti <= lat_anti),
    }


# ---------------------------------------------------------------------------
# Descent map and parabolic restriction.


def descent_quotient_check(system: CoxeterSystem, orientation: Orientation, cap=None):
    """Classwise descents respect joins (union) and meets (intersection)."""
    camb = cambrian_lattice(system, orientation, cap=cap)
    quotient = camb.quotient
    delta = [frozenset(system.left_descents(e)) for e in quotient.elements]
    for x, y in itertools.combinations_with_replacement(range(quotient.n), 2):
        j = quotient.join(x, y)
        m = quotient.meet(x, y)
        if delta[j] != delta[x] | delta[y]:
            return False, (quotient.elements[x], quotient.elements[y], "join")
        if delta[m] != delta[x] & delta[y]:
            return False, (quotient.elements[x], quotient.elements[y], "meet")
    return True, None


def parabolic_elements(system: CoxeterSystem, K) -> set:
    """The parabolic subgroup generated by K, as a set of elements."""
    seen = {system.identity()}
    frontier = [system.identity()]
    while frontier:
        w = frontier.pop()
        for name in K:
            nxt = system.right_multiply(w, name)
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def parabolic_restriction_check(
    system: CoxeterSystem, orientation: Orientation, K, cap=None
):
    """Restricting the congruence to W_K matches the sub-orientation's one."""
    K = frozenset(K)
    lattice = system.weak_order_lattice(cap=cap)
    pairs = [
        (lattice.index[a], lattice.index[b])
        for a, b in generating_pairs(system, orientation)
    ]
    cong = congruence_closure(lattice, pairs)
    members = parabolic_elements(system, K)
    member_idx = [i for i, w in enumerate(lattice.elements) if w in members]
    pos = {i: k for k, i in enumerate(member_idx)}
    covers = [
        (pos[i], pos[j])
        for i in member_idx
        for j in lattice.upper[i]
        if j in pos
    ]
    sub = FiniteLattice.from_covers(
        tuple(lattice.elements[i] for i in member_idx), covers
    )

    restricted: dict[int, list[int]] = {}
    for i in member_idx:
        restricted.setdefault(cong.class_of[i], []).append(
            sub.index[lattice.elements[i]]
        )
    restricted_cong = congruence_from_partition(sub, list(restricted.values()))

    sub_pairs = []
    for s, t, m in orientation.edges:
        if s in K and t in K:
            word = [t if k % 2 == 0 else s for k in range(m - 1)]
            sub_pairs.append(
                (sub.index[system.generator(t)], sub.index[system.from_word(word)])
            )
    sub_cong = congruence_closure(sub, sub_pairs)
    return restricted_cong.key() == sub_cong.key()
