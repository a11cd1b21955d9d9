"""Finite Coxeter systems and their weak orders.

Supported families:

* ``A`` (rank r): the symmetric group on r+1 letters, elements as
  one-line permutation tuples.
* ``B`` (rank n): signed permutations, elements as abbreviated signed
  tuples (x_1, ..., x_n) with x_{-i} = -x_i implied.
* ``I2`` (parameter m) and ``H3``: a generic engine tracking each element
  as an exact matrix in the simple-root basis together with its set of
  (positive-root) inversions.

The right weak order is generated by covers w < ws; joins and meets are
computed per family (inversion-set closure for A, an embedding into a
symmetric group for B, enumerated down-sets for the generic engine).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .fields import (
    NumberField,
    RationalField,
    identity_matrix,
    mat_mul,
)
from .lattices import FiniteLattice


class CapExceeded(Exception):
    """Raised when an enumeration would exceed the configured size cap."""


# ---------------------------------------------------------------------------
# Type A helpers: permutations of 1..n in one-line notation.


def inversion_set_a(x: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    """Left inversions of a permutation: pairs (a, b), a < b, with b first."""
    out = []
    for i, big in enumerate(x):
        for small in x[i + 1 :]:
            if small < big:
                out.append((small, big))
    return frozenset(out)


def closure_inversions(n: int, inv: set[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    """Close a pair set under (a,b),(b,c) -> (a,c) for a < b < c."""
    inv = set(inv)
    changed = True
    while changed:
        changed = False
        for a, b in list(inv):
            for c in range(b + 1, n + 1):
                if (b, c) in inv and (a, c) not in inv:
                    inv.add((a, c))
                    changed = True
    return frozenset(inv)


def perm_from_inversions(n: int, inv: frozenset[tuple[int, int]]) -> tuple[int, ...]:
    def cmp(u: int, v: int) -> int:
        if u < v:
            return 1 if (u, v) in inv else -1
        return -1 if (v, u) in inv else 1

    perm = tuple(sorted(range(1, n + 1), key=functools.cmp_to_key(cmp)))
    if inversion_set_a(perm) != inv:
        raise ValueError(f"{sorted(inv)} is not the inversion set of a permutation")
    return perm


def join_a(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    n = len(x)
    closed = closure_inversions(n, set(inversion_set_a(x)) | set(inversion_set_a(y)))
    return perm_from_inversions(n, closed)


def meet_a(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    # x -> x*w0 reverses one-line notation and is an anti-automorphism.
    rx, ry = x[::-1], y[::-1]
    return join_a(rx, ry)[::-1]


# ---------------------------------------------------------------------------
# Type B helpers: signed permutations.


def full_notation(x: tuple[int, ...]) -> tuple[int, ...]:
    """Expand abbreviated (x_1..x_n) to (x_{-n}..x_{-1}, x_1..x_n)."""
    return tuple(-v for v in reversed(x)) + tuple(x)


def _check_signed(x: tuple[int, ...]) -> int:
    n = len(x)
    if sorted(abs(v) for v in x) != list(range(1, n + 1)):
        raise ValueError(f"{x} is not a signed permutation")
    return n


def canonical_reflection(a: int, b: int) -> tuple[int, int]:
    """Canonical label of the reflection swapping values a < b (and -b, -a)."""
    return max((a, b), (-b, -a))


def inversion_set_b(x: tuple[int, ...]) -> frozenset[tuple[int, int]]:
    """Left inversions of a signed permutation, as canonical reflections."""
    full = full_notation(x)
    out = set()
    for i, big in enumerate(full):
        for small in full[i + 1 :]:
            if small < big:
                out.add(canonical_reflection(small, big))
    return frozenset(out)


def _b_value_to_a(v: int, n: int) -> int:
    return v + n + 1 if v < 0 else v + n


def _a_value_to_b(w: int, n: int) -> int:
    return w - n - 1 if w <= n else w - n


def embed_b_in_a(x: tuple[int, ...]) -> tuple[int, ...]:
    """Signed permutation of +-[n] as a permutation of 1..2n."""
    n = len(x)
    return tuple(_b_value_to_a(v, n) for v in full_notation(x))


def project_a_to_b(perm: tuple[int, ...]) -> tuple[int, ...]:
    n = len(perm) // 2
    signed = tuple(_a_value_to_b(w, n) for w in perm)
    if signed[: n] != tuple(-v for v in reversed(signed[n:])):
        raise ValueError(f"{perm} is not centrally symmetric")
    return signed[n:]


def join_b(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    # The signed permutations sit inside the symmetric group on 2n letters
    # as a sublattice of the weak order, so join there and project back.
    return project_a_to_b(join_a(embed_b_in_a(x), embed_b_in_a(y)))


def meet_b(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    nx = tuple(-v for v in x)
    ny = tuple(-v for v in y)
    return tuple(-v for v in join_b(nx, ny))


def standardize_signed(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Signed standardization: k-th smallest absolute value maps to +-k."""
    if len({abs(v) for v in seq}) != len(seq) or 0 in seq:
        raise ValueError(f"{seq} has repeated or zero absolute values")
    rank = {a: i + 1 for i, a in enumerate(sorted(abs(v) for v in seq))}
    return tuple(rank[abs(v)] if v > 0 else -rank[abs(v)] for v in seq)


def contains_signed_pattern(x: tuple[int, ...], pattern: tuple[int, ...]) -> bool:
    """Whether some subsequence of x standardizes to the signed pattern."""
    k = len(pattern)
    if k > len(x):
        return False
    return any(
        standardize_signed(sub) == pattern for sub in itertools.combinations(x, k)
    )


# ---------------------------------------------------------------------------
# Join-irreducibles as subsets (type A) and signed subsets (type B).


def ji_subset_to_perm(n: int, members: frozenset[int]) -> tuple[int, ...]:
    """Permutation of the join-irreducible labelled by A, as Ac asc + A asc."""
    a = sorted(members)
    ac = sorted(set(range(1, n + 1)) - set(members))
    if not a or not ac:
        raise ValueError("subset must be proper and nonempty")
    if a[0] > ac[-1]:
        raise ValueError(f"subset {a} has min exceeding max of complement")
    return tuple(ac) + tuple(a)


def perm_to_ji_subset(x: tuple[int, ...]) -> frozenset[int]:
    descents = [i for i in range(len(x) - 1) if x[i] > x[i + 1]]
    if len(descents) != 1:
        raise ValueError(f"{x} is not join-irreducible in the weak order")
    return frozenset(x[descents[0] + 1 :])


def ji_subset_reflection(n: int, members: frozenset[int]) -> tuple[int, int]:
    """The reflection (m, M) labelling the unique lower cover edge."""
    m = min(members)
    big_m = max(set(range(1, n + 1)) - set(members))
    return (m, big_m)


def all_ji_subsets_a(n: int) -> list[frozenset[int]]:
    out = []
    for r in range(1, n):
        for combo in itertools.combinations(range(1, n + 1), r):
            members = frozenset(combo)
            m = min(combo)
            big_m = max(set(range(1, n + 1)) - members)
            if big_m > m:
                out.append(members)
    return out


def signed_ji_members_valid(n: int, members: frozenset[int]) -> bool:
    if not members:
        return False
    if any(abs(v) > n or v == 0 for v in members):
        return False
    return not any(-v in members for v in members)


def signed_ji_bounds(n: int, members: frozenset[int]) -> tuple[int, int]:
    """(m, M) for a signed subset: m = min A; M = -m if |A| = n."""
    m = min(members)
    if len(members) == n:
        return (m, -m)
    pm = {v for a in members for v in (a, -a)}
    rest = set(range(-n, n + 1)) - {0} - pm
    return (m, max(rest))


def signed_ji_to_perm(n: int, members: frozenset[int]) -> tuple[int, ...]:
    """Abbreviated notation of the join-irreducible labelled by signed A."""
    if not signed_ji_members_valid(n, members):
        raise ValueError(f"{sorted(members)} is not a valid signed subset")
    pm = {v for a in members for v in (a, -a)}
    mid = sorted(set(range(-n, n + 1)) - {0} - pm)
    full = sorted(-v for v in members) + mid + sorted(members)
    return tuple(full[n:])


def perm_to_signed_ji(x: tuple[int, ...]) -> frozenset[int]:
    n = _check_signed(x)
    full = full_notation(x)
    descents = {i for i in range(2 * n - 1) if full[i] > full[i + 1]}
    # A is the final ascending block; its start is the last descent + 1.
    if not descents:
        raise ValueError(f"{x} is the identity, not join-irreducible")
    start = max(descents) + 1
    members = frozenset(full[start:])
    if signed_ji_to_perm(n, members) != x:
        raise ValueError(f"{x} is not join-irreducible in the weak order")
    return members


def all_signed_ji_subsets(n: int) -> list[frozenset[int]]:
    out = []
    values = [v for v in range(-n, n + 1) if v != 0]
    for r in range(1, n + 1):
        for combo in itertools.combinations(values, r):
            members = frozenset(combo)
            if not signed_ji_members_valid(n, members):
                continue
            m, big_m = signed_ji_bounds(n, members)
            if big_m > m:
                out.append(members)
    return out


# ---------------------------------------------------------------------------
# Generic engine elements.


@dataclass(frozen=True)
class GenericElement:
    """Element of a generic Coxeter system, identified by its inversion set."""

    inversions: frozenset[int]
    word: tuple[int, ...]
    matrix: tuple

    def __eq__(self, other):
        return isinstance(other, GenericElement) and self.inversions == other.inversions

    def __hash__(self):
        return hash(self.inversions)


class CoxeterSystem:
    """A finite Coxeter system with a fixed simple-generator labelling.

    Generator names: 1..r for family A, 0..n-1 for family B (0 is the
    sign-change generator), 1..2 for I2, 1..3 for H3 (bond m(1,2) = 5).
    """

    def __init__(self, family: str, rank: int, bond: Optional[int] = None):
        self.family = family
        self.rank = rank
        self.bond = bond
        if family == "A":
            self.n = rank + 1
            self.generator_names = tuple(range(1, rank + 1))
        elif family == "B":
            self.n = rank
            self.generator_names = tuple(range(rank))
        elif family == "I2":
            if bond is None or bond < 3:
                raise ValueError("I2 needs a bond label m >= 3")
            self.generator_names = (1, 2)
        elif family == "H3":
            self.generator_names = (1, 2, 3)
        else:
            raise ValueError(f"unknown family {family!r}")
        self._lattice: Optional[FiniteLattice] = None
        self._roots = None
        self._gen_matrices = None
        self._field = None

    # -- Coxeter matrix -----------------------------------------------------

    def bond_label(self, s, t) -> int:
        if s == t:
            return 1
        a, b = sorted((s, t))
        if self.family == "A":
            return 3 if b == a + 1 else 2
        if self.family == "B":
            if (a, b) == (0, 1):
                return 4
            return 3 if b == a + 1 else 2
        if self.family == "I2":
            return self.bond
        if self.family == "H3":
            if (a, b) == (1, 2):
                return 5
            if (a, b) == (2, 3):
                return 3
            return 2
        raise AssertionError

    # -- elements and multiplication ---------------------------------------

    def identity(self):
        if self.family == "A":
            return tuple(range(1, self.n + 1))
        if self.family == "B":
            return tuple(range(1, self.n + 1))
        self._init_generic()
        return GenericElement(frozenset(), (), identity_matrix(self._field, self.rank))

    def generator(self, name):
        return self.right_multiply(self.identity(), name)

    def right_multiply(self, w, name):
        if self.family == "A":
            a = name
            lst = list(w)
            lst[a - 1], lst[a] = lst[a], lst[a - 1]
            return tuple(lst)
        if self.family == "B":
            lst = list(w)
            if name == 0:
                lst[0] = -lst[0]
            else:
                lst[name - 1], lst[name] = lst[name], lst[name - 1]
            return tuple(lst)
        return self._generic_right_multiply(w, name)

    def from_word(self, word):
        w = self.identity()
        for name in word:
            w = self.right_multiply(w, name)
        return w

    def is_right_descent(self, w, name) -> bool:
        if self.family == "A":
            return w[name - 1] > w[name]
        if self.family == "B":
            if name == 0:
                return w[0] < 0
            return w[name - 1] > w[name]
        self._init_generic()
        col = self._matrix_column(w.matrix, self._gen_index(name))
        return self._root_id(tuple(self._field.neg(c) for c in col)) is not None

    def length(self, w) -> int:
        return len(self.inversion_set(w))

    def inversion_set(self, w):
        if self.family == "A":
            return inversion_set_a(w)
        if self.family == "B":
            return inversion_set_b(w)
        return w.inversions

    def left_descents(self, w) -> frozenset:
        if self.family == "A":
            inv = inversion_set_a(w)
            return frozenset(a for a in self.generator_names if (a, a + 1) in inv)
        if self.family == "B":
            inv = inversion_set_b(w)
            out = set()
            if (-1, 1) in inv:
                out.add(0)
            for a in range(1, self.n):
                if (a, a + 1) in inv:
                    out.add(a)
            return frozenset(out)
        self._init_generic()
        return frozenset(
            name
            for name in self.generator_names
            if self._simple_root_ids[self._gen_index(name)] in w.inversions
        )

    def generator_of_atom(self, w):
        """Which generator a length-one element is."""
        for name in self.generator_names:
            if w == self.generator(name):
                return name
        raise ValueError(f"{w} is not a generator")

    # -- joins and meets ----------------------------------------------------

    def join(self, x, y):
        if self.family == "A":
            return join_a(x, y)
        if self.family == "B":
            return join_b(x, y)
        lattice = self.weak_order_lattice()
        return lattice.elements[lattice.join(lattice.index[x], lattice.index[y])]

    def meet(self, x, y):
        if self.family == "A":
            return meet_a(x, y)
        if self.family == "B":
            return meet_b(x, y)
        lattice = self.weak_order_lattice()
        return lattice.elements[lattice.meet(lattice.index[x], lattice.index[y])]

    def weak_le(self, x, y) -> bool:
        return self.inversion_set(x) <= self.inversion_set(y)

    def longest_element(self):
        if self.family == "A":
            return tuple(range(self.n, 0, -1))
        if self.family == "B":
            return tuple(range(-1, -self.n - 1, -1))
        lattice = self.weak_order_lattice()
        return lattice.elements[lattice.top]

    # -- weak order enumeration ---------------------------------------------

    def weak_order_lattice(self, cap: Optional[int] = None, validate: bool = True):
        if self._lattice is not None:
            return self._lattice
        elements, covers = self._enumerate(cap)
        self._lattice = FiniteLattice.from_covers(elements, covers, validate=validate)
        return self._lattice

    def _enumerate(self, cap):
        start = self.identity()
        seen = {start: 0}
        order = [start]
        covers = []
        frontier = [start]
        while frontier:
            nxt = []
            for w in frontier:
                for name in self.generator_names:
                    if self.is_right_descent(w, name):
                        continue
                    ws = self.right_multiply(w, name)
                    if ws not in seen:
                        if cap is not None and len(order) >= cap:
                            raise CapExceeded(
                                f"weak order enumeration exceeded cap {cap}"
                            )
                        seen[ws] = len(order)
                        order.append(ws)
                        nxt.append(ws)
                    covers.append((w, ws))
            frontier = nxt
        return order, sorted(set((seen[a], seen[b]) for a, b in covers))

    # -- generic engine internals -------------------------------------------

    def _gen_index(self, name) -> int:
        return self.generator_names.index(name)

    def _init_generic(self):
        if self._roots is not None:
            return
        r = self.rank
        labels = [
            [self.bond_label(self.generator_names[i], self.generator_names[j]) for j in range(r)]
            for i in range(r)
        ]
        max_label = max(max(row) for row in labels)
        if max_label <= 3:
            field = RationalField()
        else:
            field = NumberField(max_label)
        self._field = field
        # Bilinear form B(alpha_i, alpha_j) = -cos(pi / m_ij).
        def neg_cos(m):
            if m == 1:
                return field.neg(field.one)
            if m == 2:
                return field.zero
            if m == 3:
                return field.from_rational(Fraction(-1, 2))
            if m == max_label:
                return field.scale(field.generator, Fraction(-1, 2))
            raise ValueError(f"unsupported bond label {m} alongside {max_label}")

        gram = [[neg_cos(labels[i][j]) if i != j else field.one for j in range(r)] for i in range(r)]
        self._gram = tuple(tuple(row) for row in gram)
        # Generator matrices: s_i(alpha_j) = alpha_j - 2 B(i,j) alpha_i.
        mats = []
        for i in range(r):
            rows = []
            for a in range(r):
                row = []
                for j in range(r):
                    base = field.one if a == j else field.zero
                    if a == i:
                        base = field.sub(base, field.scale(gram[i][j], Fraction(2)))
                    row.append(base)
                rows.append(tuple(row))
            mats.append(tuple(rows))
        self._gen_matrices = tuple(mats)
        # Positive roots: close the simple roots under the generators.  A
        # simple reflection permutes the positive roots other than its own.
        simples = [
            tuple(field.one if j == i else field.zero for j in range(r))
            for i in range(r)
        ]
        roots = {v: i for i, v in enumerate(simples)}
        frontier = list(simples)
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(r):
                    if v == simples[i]:
                        continue
                    image = tuple(
                        self._field_dot_row(self._gen_matrices[i], v, a)
                        for a in range(r)
                    )
                    if image not in roots:
                        roots[image] = len(roots)
                        nxt.append(image)
            frontier = nxt
        self._roots = roots
        self._root_list = sorted(roots, key=roots.get)
        self._simple_root_ids = [roots[v] for v in simples]

    def _field_dot_row(self, matrix, vec, row):
        field = self._field
        total = field.zero
        for k, vk in enumerate(vec):
            total = field.add(total, field.mul(matrix[row][k], vk))
        return total

    def _matrix_column(self, matrix, j):
        return tuple(matrix[i][j] for i in range(self.rank))

    def _root_id(self, vec):
        return self._roots.get(tuple(vec))

    def _generic_right_multiply(self, w: GenericElement, name) -> GenericElement:
        self._init_generic()
        field = self._field
        i = self._gen_index(name)
        new_matrix = mat_mul(field, w.matrix, self._gen_matrices[i])
        col = self._matrix_column(w.matrix, i)
        rid = self._root_id(col)
        if rid is not None:
            return GenericElement(
                w.inversions | {rid}, w.word + (name,), new_matrix
            )
        neg = tuple(field.neg(c) for c in col)
        rid = self._root_id(neg)
        if rid is None:
            raise AssertionError("w(alpha_s) is not a root")
        word = w.word[:-1] if w.word and w.word[-1] == name else w.word + (name,)
        return GenericElement(w.inversions - {rid}, word, new_matrix)

    @property
    def roots(self):
        self._init_generic()
        return self._root_list

    @property
    def field(self):
        self._init_generic()
        return self._field

    @property
    def gram(self):
        self._init_generic()
        return self._gram


def build_system(family: str, rank: Optional[int] = None, bond: Optional[int] = None) -> CoxeterSystem:
    """Construct a Coxeter system for family A, B, I2(m) or H3."""
    if family == "I2":
        return CoxeterSystem("I2", 2, bond)
    if family == "H3":
        return CoxeterSystem("H3", 3)
    if rank is None or rank < 1:
        raise ValueError(f"family {family} needs a positive rank")
    return CoxeterSystem(family, rank)
