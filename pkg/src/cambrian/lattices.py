"""Finite lattices, congruences, quotients and forcing.

Lattices are stored over an internal linear extension; each element
carries its down-set and up-set as Python integer bitmasks.  With
indices respecting the order, the join of x and y is the lowest set bit
of up(x) & up(y) and the meet is the highest set bit of down(x) &
down(y); both are verified at construction instead of trusted.

Congruence closure works over the generating pairs with a union-find,
propagating x ~ y to x v z ~ y v z for join-irreducible z and to
x ^ z ~ y ^ z for meet-irreducible z.  Every element is a join of
join-irreducibles, so by induction through transitivity the result is
closed under joins and meets with arbitrary elements.
"""

from __future__ import annotations

from collections import deque
from typing import Callable, Optional, Sequence


def _lsb(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class FiniteLattice:
    """A finite lattice given by its Hasse diagram."""

    def __init__(self, elements, covers, up, down, lower, upper):
        self.elements = elements
        self.index = {e: i for i, e in enumerate(elements)}
        self.covers = covers
        self.up = up
        self.down = down
        self.lower = lower
        self.upper = upper
        self.n = len(elements)
        self.bottom = next(i for i in range(self.n) if not lower[i])
        self.top = next(i for i in range(self.n) if not upper[i])
        self._ji: Optional[list[int]] = None
        self._mi: Optional[list[int]] = None
        self._mobius_cache: dict[tuple[int, int], int] = {}

    # -- construction -------------------------------------------------------

    @classmethod
    def from_covers(cls, elements: Sequence, covers, validate: bool = True):
        """Build from elements and cover pairs (as indices into elements).

        Elements are re-ordered internally along a linear extension.
        """
        n = len(elements)
        succ = [[] for _ in range(n)]
        indeg = [0] * n
        for a, b in covers:
            succ[a].append(b)
            indeg[b] += 1
        order = [i for i in range(n) if indeg[i] == 0]
        queue = deque(order)
        while queue:
            i = queue.popleft()
            for j in succ[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    order.append(j)
                    queue.append(j)
        if len(order) != n:
            raise ValueError("cover relation contains a cycle")
        new_pos = [0] * n
        for pos, old in enumerate(order):
            new_pos[old] = pos
        new_elements = tuple(elements[old] for old in order)
        new_covers = sorted((new_pos[a], new_pos[b]) for a, b in covers)
        lower = [[] for _ in range(n)]
        upper = [[] for _ in range(n)]
        for a, b in new_covers:
            upper[a].append(b)
            lower[b].append(a)
        down = [0] * n
        for i in range(n):
            mask = 1 << i
            for a in lower[i]:
                mask |= down[a]
            down[i] = mask
        up = [0] * n
        for i in range(n - 1, -1, -1):
            mask = 1 << i
            for b in upper[i]:
                mask |= up[b]
            up[i] = mask
        bottoms = [i for i in range(n) if not lower[i]]
        tops = [i for i in range(n) if not upper[i]]
        if len(bottoms) != 1 or len(tops) != 1:
            raise ValueError(
                f"not bounded: {len(bottoms)} minimal and {len(tops)} maximal elements"
            )
        lattice = cls(new_elements, new_covers, up, down, lower, upper)
        if validate:
            lattice._validate()
        return lattice

    def _validate(self) -> None:
        # Covers must be genuine covers (no transitive edges).
        for a, b in self.covers:
            between = self.up[a] & self.down[b]
            if between != (1 << a) | (1 << b):
                raise ValueError(f"edge {a} -> {b} is not a cover")
        # Every pair needs a least upper bound; with a bottom element this
        # makes the poset a lattice (meets come for free).
        up = self.up
        n = self.n
        for i in range(n):
            ui = up[i]
            for j in range(i + 1, n):
                m = ui & up[j]
                c = m & -m
                if m & ~up[c.bit_length() - 1]:
                    raise ValueError(
                        f"elements {i}, {j} have no least upper bound"
                    )

    # -- basic queries -------------------------------------------------------

    def le(self, i: int, j: int) -> bool:
        return bool((self.up[i] >> j) & 1)

    def join(self, i: int, j: int) -> int:
        return _lsb(self.up[i] & self.up[j])

    def meet(self, i: int, j: int) -> int:
        return (self.down[i] & self.down[j]).bit_length() - 1

    def join_many(self, indices) -> int:
        mask = self.up[self.bottom]
        for i in indices:
            mask &= self.up[i]
        return _lsb(mask)

    def interval(self, i: int, j: int) -> list[int]:
        mask = self.up[i] & self.down[j]
        out = []
        while mask:
            out.append(_lsb(mask))
            mask &= mask - 1
        return out

    @property
    def join_irreducibles(self) -> list[int]:
        if self._ji is None:
            self._ji = [i for i in range(self.n) if len(self.lower[i]) == 1]
        return self._ji

    @property
    def meet_irreducibles(self) -> list[int]:
        if self._mi is None:
            self._mi = [i for i in range(self.n) if len(self.upper[i]) == 1]
        return self._mi

    def atoms(self) -> list[int]:
        return list(self.upper[self.bottom])

    def dual(self) -> "FiniteLattice":
        rev = [(self.n - 1 - b, self.n - 1 - a) for a, b in self.covers]
        return FiniteLattice.from_covers(
            tuple(reversed(self.elements)), rev, validate=False
        )

    # -- Möbius function and atomicity --------------------------------------

    def mobius(self, i: int, j: int) -> int:
        if not self.le(i, j):
            return 0
        key = (i, j)
        cached = self._mobius_cache.get(key)
        if cached is not None:
            return cached
        if i == j:
            value = 1
        else:
            value = -sum(self.mobius(i, z) for z in self.interval(i, j) if z != j)
        self._mobius_cache[key] = value
        return value

    def is_atomic_interval(self, i: int, j: int) -> bool:
        """Whether j is the join of the atoms of the interval [i, j]."""
        atoms = [a for a in self.upper[i] if self.le(a, j)]
        mask = self.up[i]
        for a in atoms:
            mask &= self.up[a]
        return _lsb(mask) == j

    # -- sublattice test -----------------------------------------------------

    def is_sublattice(self, subset: Sequence[int]):
        """Check closure of a subset under join and meet.

        Returns (True, None) or (False, witness) where witness is a tuple
        (x, y, op, result) of indices with the offending operation.
        """
        chosen = set(subset)
        items = sorted(chosen)
        for a_pos, i in enumerate(items):
            for j in items[a_pos + 1 :]:
                v = self.join(i, j)
                if v not in chosen:
                    return False, (i, j, "join", v)
                m = self.meet(i, j)
                if m not in chosen:
                    return False, (i, j, "meet", m)
        return True, None


class LatticeCongruence:
    """A lattice congruence stored as a partition with projections."""

    def __init__(self, lattice: FiniteLattice, class_of: list[int]):
        self.lattice = lattice
        relabel: dict[int, int] = {}
        self.class_of = []
        for i in range(lattice.n):
            c = class_of[i]
            if c not in relabel:
                relabel[c] = len(relabel)
            self.class_of.append(relabel[c])
        self.num_classes = len(relabel)
        self.classes: list[list[int]] = [[] for _ in range(self.num_classes)]
        for i, c in enumerate(self.class_of):
            self.classes[c].append(i)
        # Index order is a linear extension, so in an interval class the
        # first element is the class bottom and the last the class top.
        self.down_projection = [self.classes[c][0] for c in self.class_of]
        self.up_projection = [self.classes[c][-1] for c in self.class_of]

    def key(self) -> frozenset:
        return frozenset(frozenset(cls) for cls in self.classes)

    def contracted_join_irreducibles(self) -> list[int]:
        lattice = self.lattice
        return [
            g
            for g in lattice.join_irreducibles
            if self.class_of[g] == self.class_of[lattice.lower[g][0]]
        ]

    def verify(self):
        """Confirm the order-congruence conditions; returns (ok, reason)."""
        lattice = self.lattice
        for members in self.classes:
            bottom, top = members[0], members[-1]
            mask = lattice.up[bottom] & lattice.down[top]
            cls_mask = 0
            for i in members:
                if not (lattice.le(bottom, i) and lattice.le(i, top)):
                    return False, f"class of {bottom} is not an interval at {i}"
                cls_mask |= 1 << i
            if mask != cls_mask:
                return False, f"class [{bottom}, {top}] is not a full interval"
        for a, b in lattice.covers:
            if not lattice.le(
                self.down_projection[a], self.down_projection[b]
            ):
                return False, f"down projection not order preserving on {a} -> {b}"
            if not lattice.le(self.up_projection[a], self.up_projection[b]):
                return False, f"up projection not order preserving on {a} -> {b}"
        return True, None


def congruence_closure(lattice: FiniteLattice, pairs) -> LatticeCongruence:
    """Smallest lattice congruence identifying each given pair of indices."""
    parent = list(range(lattice.n))

    def find(i: int) -> int:
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    work: deque[tuple[int, int]] = deque()

    def merge(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            work.append((i, j))

    for a, b in pairs:
        merge(a, b)
    ji = lattice.join_irreducibles
    mi = lattice.meet_irreducibles
    up = lattice.up
    down = lattice.down
    while work:
        x, y = work.popleft()
        ux, uy = up[x], up[y]
        dx, dy = down[x], down[y]
        for z in ji:
            uz = up[z]
            a = ux & uz
            b = uy & uz
            if a != b:
                merge(_lsb(a), _lsb(b))
        for z in mi:
            dz = down[z]
            a = dx & dz
            b = dy & dz
            if a != b:
                merge(a.bit_length() - 1, b.bit_length() - 1)
    return LatticeCongruence(lattice, [find(i) for i in range(lattice.n)])


def congruence_from_partition(
    lattice: FiniteLattice, blocks
) -> LatticeCongruence:
    """Wrap an explicit partition (of element indices) as a congruence."""
    class_of = [-1] * lattice.n
    for c, block in enumerate(blocks):
        for i in block:
            class_of[i] = c
    if any(c < 0 for c in class_of):
        raise ValueError("partition does not cover the lattice")
    return LatticeCongruence(lattice, class_of)


def quotient_lattice(cong: LatticeCongruence, validate: bool = True) -> FiniteLattice:
    """Quotient lattice; elements are the class-bottom elements."""
    lattice = cong.lattice
    bottoms = sorted({cong.down_projection[i] for i in range(lattice.n)})
    pos = {b: k for k, b in enumerate(bottoms)}
    mask = 0
    for b in bottoms:
        mask |= 1 << b
    covers = []
    for a_pos, a in enumerate(bottoms):
        for b in bottoms:
            if b != a and lattice.le(a, b):
                between = lattice.up[a] & lattice.down[b] & mask
                if between == (1 << a) | (1 << b):
                    covers.append((a_pos, pos[b]))
    elements = tuple(lattice.elements[b] for b in bottoms)
    return FiniteLattice.from_covers(elements, covers, validate=validate)

def contraction_congruence(lattice: FiniteLattice, ji_index: int) -> LatticeCongruence:
    """Smallest congruence contracting the given join-irreducible."""
    if len(lattice.lower[ji_index]) != 1:
        raise ValueError(f"element {ji_index} is not join-irreducible")
    return congruence_closure(lattice, [(lattice.lower[ji_index][0], ji_index)])


def forcing_arrows(lattice: FiniteLattice) -> dict[int, frozenset[int]]:
    """For each join-irreducible g, the join-irreducibles contracted by Cg(g)."""
    out = {}
    for g in lattice.join_irreducibles:
        cong = contraction_congruence(lattice, g)
        out[g] = frozenset(cong.contracted_join_irreducibles())
    return out


# ---------------------------------------------------------------------------
# Poset isomorphism search (for duality and shape checks on small posets).


def _refine_signatures(lattice: FiniteLattice, rounds: int = 3):
    n = lattice.n
    sigs = [
        (
            bin(lattice.down[i]).count("1"),
            bin(lattice.up[i]).count("1"),
            len(lattice.lower[i]),
            len(lattice.upper[i]),
        )
        for i in range(n)
    ]
    for _ in range(rounds):
        keys = [
            (
                sigs[i],
                tuple(sorted(sigs[j] for j in lattice.lower[i])),
                tuple(sorted(sigs[j] for j in lattice.upper[i])),
            )
            for i in range(n)
        ]
        # Relabel by sorted key so labels are comparable across lattices.
        rank = {k: r for r, k in enumerate(sorted(set(keys)))}
        sigs = [rank[k] for k in keys]
    return sigs


def poset_isomorphism(a: FiniteLattice, b: FiniteLattice):
    """An order isomorphism a -> b as an index list, or None."""
    if a.n != b.n or len(a.covers) != len(b.covers):
        return None
    sig_a = _refine_signatures(a)
    sig_b = _refine_signatures(b)
    if sorted(sig_a) != sorted(sig_b):
        return None
    candidates = [
        [j for j in range(b.n) if sig_b[j] == sig_a[i]] for i in range(a.n)
    ]
    order = sorted(range(a.n), key=lambda i: len(candidates[i]))
    mapping = [-1] * a.n
    used = [False] * b.n

    def extend(k: int) -> bool:
        if k == a.n:
            return True
        i = order[k]
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for i2 in range(a.n):
                j2 = mapping[i2]
                if j2 < 0:
                    continue
                if a.le(i, i2) != b.le(j, j2) or a.le(i2, i) != b.le(j2, j):
                    ok = False
                    break
            if ok:
                mapping[i] = j
                used[j] = True
                if extend(k + 1):
                    return True
                mapping[i] = -1
                used[j] = False
        return False

    return mapping if extend(0) else None


def poset_anti_isomorphism(a: FiniteLattice, b: FiniteLattice):
    return poset_isomorphism(a, b.dual())
