"""The type-B polygon model: centrally symmetric triangulations.

A signed permutation of +-[n] acts on the (2n+2)-gon whose interior
vertices carry the signed labels -n..-1, 1..n; the label bridge to the
type-A machinery sends signed label i to i+n+1 for i < 0 and i+n for
i > 0, with -(n+1) at 0 and n+1 at 2n+1.  The map eta_b is eta applied
to the full notation, and always lands on a triangulation fixed by the
central symmetry.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .coxeter import (
    contains_signed_pattern,
    embed_b_in_a,
    full_notation,
    signed_ji_bounds,
    signed_ji_members_valid,
)
from .lattices import FiniteLattice
from .polygon_a import (
    PolygonQ,
    TriangulationA,
    UpDownSignature,
    _flip,
    all_triangulations,
    descent_set_of_triangulation,
    eta,
    polygon_from_signature,
)

B_TAMARI_PATTERNS = {
    "toward_s0": (
        (-2, -1),
        (2, -1),
        (-2, 3, 1),
        (-1, 2, -3),
        (1, 2, -3),
        (2, 3, 1),
    ),
    "away_from_s0": (
        (-2, 1),
        (1, -2),
        (-2, -1, -3),
        (-1, 3, -2),
        (3, -1, 2),
        (3, 1, 2),
    ),
}


@dataclass(frozen=True)
class SymmetricSignature:
    """Antisymmetric up/down marking of +-[n]: i up iff -i down."""

    n: int
    ups: frozenset[int]

    def __post_init__(self):
        values = {v for v in range(-self.n, self.n + 1) if v != 0}
        if not self.ups <= values:
            raise ValueError(f"ups outside +-[{self.n}]")
        for v in values:
            if (v in self.ups) == (-v in self.ups):
                raise ValueError(f"signature not antisymmetric at {v}")

    @classmethod
    def from_positive_ups(cls, n: int, positive_part) -> "SymmetricSignature":
        """Signature from the set of up indices among 1..n."""
        pos = frozenset(positive_part)
        ups = pos | frozenset(-i for i in range(1, n + 1) if i not in pos)
        return cls(n, ups)

    def is_up(self, i: int) -> bool:
        return i in self.ups

    def bridge(self, i: int) -> int:
        """Signed label in +-[n+1] to type-A vertex label 0..2n+1."""
        if i == -(self.n + 1):
            return 0
        if i == self.n + 1:
            return 2 * self.n + 1
        return i + self.n + 1 if i < 0 else i + self.n

    def unbridge(self, p: int) -> int:
        if p == 0:
            return -(self.n + 1)
        if p == 2 * self.n + 1:
            return self.n + 1
        return p - self.n - 1 if p <= self.n else p - self.n

    def a_signature(self) -> UpDownSignature:
        return UpDownSignature(
            2 * self.n, frozenset(self.bridge(i) for i in self.ups)
        )

    def orientation_edges(self) -> tuple[tuple[int, int], ...]:
        """Directed B-diagram edges (s, t): s_b -> s_{b-1} iff b is up."""
        out = []
        for b in range(1, self.n):
            if b in self.ups:
                out.append((b, b - 1))
            else:
                out.append((b - 1, b))
        return tuple(out)


@dataclass(frozen=True)
class TriangulationB:
    """A centrally symmetric triangulation, with signed vertex labels."""

    signature: SymmetricSignature
    base: TriangulationA

    @property
    def signed_diagonals(self) -> frozenset[tuple[int, int]]:
        sig = self.signature
        return frozenset(
            tuple(sorted((sig.unbridge(p), sig.unbridge(q))))
            for p, q in self.base.diagonals
        )

    def to_json_dict(self) -> dict:
        return {
            "n": self.signature.n,
            "ups": sorted(self.signature.ups),
            "symmetric": True,
            "diagonals": sorted([list(d) for d in self.signed_diagonals]),
        }


def _is_symmetric(tri: frozenset[tuple[int, int]], two_n: int) -> bool:
    mirror = frozenset(
        tuple(sorted((two_n + 1 - q, two_n + 1 - p))) for p, q in tri
    )
    return mirror == tri


def eta_b(x: tuple[int, ...], signature: SymmetricSignature) -> TriangulationB:
    polygon = polygon_from_signature(signature.a_signature())
    base = eta(embed_b_in_a(x), polygon)
    if not _is_symmetric(base.diagonals, 2 * signature.n):
        raise AssertionError(f"eta_b({x}) is not centrally symmetric")
    return TriangulationB(signature, base)


# ---------------------------------------------------------------------------
# Join-irreducible contraction and shard arrows.


def ji_contraction_test_b(
    n: int, members: frozenset[int], signature: SymmetricSignature
) -> bool:
    """Whether the type-B Cambrian congruence contracts the ji of signed A."""
    if not signed_ji_members_valid(n, members):
        raise ValueError(f"{sorted(members)} is not a valid signed subset")
    m, big_m = signed_ji_bounds(n, members)
    values = {v for v in range(-n, n + 1) if v != 0}
    comp = values - members
    return any(
        signature.is_up(b) for b in comp if m < b < big_m
    ) or any(not signature.is_up(b) for b in members if m < b < big_m)


def b_shard_arrow(n: int, a1: frozenset[int], a2: frozenset[int]) -> bool:
    """Forcing arrow between type-B join-irreducibles (signed subsets)."""
    for members in (a1, a2):
        if not signed_ji_members_valid(n, members):
            raise ValueError(f"{sorted(members)} is not a join-irreducible subset")
    m1, big_m1 = signed_ji_bounds(n, a1)
    m2, big_m2 = signed_ji_bounds(n, a2)
    values = frozenset(v for v in range(-n, n + 1) if v != 0)
    a2c = values - a2
    pm_a2 = frozenset(v for a in a2 for v in (a, -a))

    def window(lo, hi):
        return frozenset(v for v in values if lo < v < hi)

    def f_cond(a: int) -> bool:
        if a in a2:
            return True
        if a in a2c - {-big_m2, -m2} and -a not in (a2 & window(m2, big_m2)):
            return True
        if a in {-big_m2, -m2}:
            mid = (values - pm_a2) & window(m2, big_m2) & window(-big_m2, -m2)
            return not mid
        return False

    w1 = window(m1, big_m1)
    r1 = (a1 & w1) == (a2 & w1)
    r2 = (a1 & w1) == (frozenset(-v for v in a2c) & w1)

    if -m1 == big_m1 < big_m2 == -m2 and r1:
        return True
    if -m2 == big_m2 == big_m1 and big_m1 > m1 > 0 and r1:
        return True
    if big_m2 == big_m1 > m1 > m2 and m2 != -big_m2 and f_cond(m1) and r1:
        return True
    if big_m2 > big_m1 > m1 and m1 == m2 != -big_m2 and f_cond(big_m1) and r1:
        return True
    if -m2 == big_m1 > m1 > -big_m2 and -big_m2 != m2 and f_cond(-m1) and r2:
        return True
    if -m2 > big_m1 > m1 and m1 == -big_m2 != m2 and f_cond(-big_m1) and r2:
        return True
    return False


def shard_digraph_b(n: int) -> dict[frozenset[int], frozenset[frozenset[int]]]:
    from .coxeter import all_signed_ji_subsets

    nodes = all_signed_ji_subsets(n)
    return {
        x: frozenset(y for y in nodes if y != x and b_shard_arrow(n, x, y))
        for x in nodes
    }


# ---------------------------------------------------------------------------
# B-Tamari pattern characterization.


def b_tamari_membership(x: tuple[int, ...], variant: str) -> bool:
    if variant not in B_TAMARI_PATTERNS:
        raise ValueError(f"unknown variant {variant!r}")
    return not any(
        contains_signed_pattern(x, p) for p in B_TAMARI_PATTERNS[variant]
    )


def linear_signature(n: int, variant: str) -> SymmetricSignature:
    """The signature whose orientation is the linear one of the variant."""
    if variant == "toward_s0":
        return SymmetricSignature.from_positive_ups(n, range(1, n + 1))
    if variant == "away_from_s0":
        return SymmetricSignature.from_positive_ups(n, ())
    raise ValueError(f"unknown variant {variant!r}")


# ---------------------------------------------------------------------------
# The lattice of centrally symmetric triangulations.


def symmetric_triangulations(signature: SymmetricSignature) -> list[TriangulationB]:
    polygon = polygon_from_signature(signature.a_signature())
    return [
        TriangulationB(signature, t)
        for t in all_triangulations(polygon)
        if _is_symmetric(t.diagonals, 2 * signature.n)
    ]


def symmetric_triangulation_lattice(signature: SymmetricSignature) -> FiniteLattice:
    """Symmetric triangulations under diameter flips and symmetric flip pairs."""
    polygon = polygon_from_signature(signature.a_signature())
    two_n = 2 * signature.n
    tris = symmetric_triangulations(signature)
    index = {t.base.diagonals: i for i, t in enumerate(tris)}
    covers = []
    for i, t in enumerate(tris):
        diagonals = t.base.diagonals
        seen_orbits = set()
        for diag in diagonals:
            mirror = tuple(sorted((two_n + 1 - diag[1], two_n + 1 - diag[0])))
            orbit = frozenset({diag, mirror})
            if orbit in seen_orbits:
                continue
            seen_orbits.add(orbit)
            new = _flip(polygon, diagonals, diag)
            if mirror == diag:
                candidate = (diagonals - {diag}) | {new}
            else:
                new_mirror = tuple(sorted((two_n + 1 - new[1], two_n + 1 - new[0])))
                candidate = (diagonals - orbit) | {new, new_mirror}
            j = index.get(frozenset(candidate))
            if j is not None and polygon.slope_less(diag, new):
                covers.append((i, j))
    return FiniteLattice.from_covers(tris, covers)


# ---------------------------------------------------------------------------
# Descents of a symmetric triangulation.


def descent_set_b(tri: TriangulationB) -> frozenset[int]:
    """Left descents as generator names 0..n-1, read off the triangulation."""
    sig = tri.signature
    n = sig.n
    diagonals = tri.signed_diagonals
    out = set()
    for a in range(1, n):
        a_up = sig.is_up(a)
        b_up = sig.is_up(a + 1)
        beyond = any(d[0] == a and d[1] > a + 1 for d in diagonals)
        adjacent = (a, a + 1) in diagonals
        if not a_up and not b_up:
            is_descent = beyond
        elif not a_up and b_up:
            is_descent = adjacent
        elif a_up and b_up:
            is_descent = not beyond
        else:
            is_descent = not adjacent
        if is_descent:
            out.add(a)
    has_diameter = (-1, 1) in diagonals
    if sig.is_up(1):
        if has_diameter:
            out.add(0)
    else:
        if not has_diameter:
            out.add(0)
    return frozenset(out)


def all_symmetric_signatures(n: int):
    out = []
    for bits in itertools.product([False, True], repeat=n):
        pos = frozenset(i + 1 for i, b in enumerate(bits) if b)
        out.append(SymmetricSignature.from_positive_ups(n, pos))
    return out
