"""Fans: region cones, Cambrian fan rays, cluster machinery, H3 checks.

Type-A geometry lives in the sum-zero hyperplane of an n-coordinate
space; the type-B fan is the restriction of the type-A fan of the
doubled polygon to the antisymmetric subspace; the H3 fan is built over
the exact degree-2 number field of the generic realization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .congruences import (
    Orientation,
    all_orientations,
    cambrian_lattice,
    orientation_from_edges,
)
from .coxeter import CoxeterSystem, embed_b_in_a
from .fields import RationalField, mat_vec, solve_linear
from .lattices import FiniteLattice, poset_isomorphism
from .polygon_a import (
    PolygonQ,
    TriangulationA,
    UpDownSignature,
    all_triangulations,
    eta,
    polygon_from_signature,
)
from .polygon_b import SymmetricSignature, eta_b

_RF = RationalField()


# ---------------------------------------------------------------------------
# Exact linear algebra over the rationals.


def _vec(entries) -> tuple[Fraction, ...]:
    return tuple(Fraction(e) for e in entries)


def _rank(vectors) -> int:
    rows = [list(v) for v in vectors]
    rank = 0
    cols = len(rows[0]) if rows else 0
    pivot_col = 0
    while rank < len(rows) and pivot_col < cols:
        pivot = next(
            (r for r in range(rank, len(rows)) if rows[r][pivot_col] != 0), None
        )
        if pivot is None:
            pivot_col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][pivot_col]
        for r in range(len(rows)):
            if r != rank and rows[r][pivot_col] != 0:
                f = Fraction(rows[r][pivot_col], 1) / lead
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        pivot_col += 1
    return rank


def _kernel_vector(vectors):
    """A nonzero rational vector orthogonal to all the given vectors."""
    cols = len(vectors[0])
    rows = [list(v) for v in vectors]
    pivots = {}
    rank = 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [Fraction(x, 1) / lead for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        pivots[col] = rank
        rank += 1
    free = next(c for c in range(cols) if c not in pivots)
    out = [Fraction(0)] * cols
    out[free] = Fraction(1)
    for col, r in pivots.items():
        out[col] = -rows[r][free]
    return tuple(out)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _nonneg_combo(rays, v):
    """Coefficients >= 0 with sum(lambda_i * ray_i) = v, or None."""
    matrix = [[r[i] for r in rays] for i in range(len(v))]
    sol = solve_linear(_RF, matrix, list(v))
    if sol is None:
        return None
    if any(c < 0 for c in sol):
        return None
    return tuple(sol)


# ---------------------------------------------------------------------------
# Region cones and Cambrian fan rays (type A).


@dataclass(frozen=True)
class RationalCone:
    """A pointed cone given by extreme rays, with optional facet data."""

    rays: tuple
    facets: tuple = ()


def _suffix_rays_a(x: tuple[int, ...]):
    """Extreme rays of the weak-order region of a permutation.

    The region of x is the chain p_{x_1} <= ... <= p_{x_n}; its extreme
    rays (modulo the all-ones lineality) are the projected indicators of
    the suffix value sets of the one-line notation.
    """
    n = len(x)
    out = []
    for k in range(1, n):
        members = frozenset(x[k:])
        out.append(ray_vector(n, members))
    return out


def ray_vector(n: int, members: frozenset[int]) -> tuple[Fraction, ...]:
    """Indicator of the subset, projected to the sum-zero hyperplane."""
    share = Fraction(len(members), n)
    return tuple(
        (Fraction(1) if i in members else Fraction(0)) - share
        for i in range(1, n + 1)
    )


def region_cone(x: tuple[int, ...], family: str = "A") -> RationalCone:
    if family == "A":
        facets = tuple((x[i], x[i + 1]) for i in range(len(x) - 1))
        return RationalCone(tuple(_suffix_rays_a(x)), facets)
    if family == "B":
        rays = tuple(v[len(x):] for v in _symmetric_region_rays(x))
        return RationalCone(rays)
    raise ValueError(f"unsupported family {family!r}")


def suffix_interval_subsets(n: int):
    return [frozenset(range(k + 1, n + 1)) for k in range(1, n)]


def a_kl_subset(signature: UpDownSignature, k: int, l: int) -> frozenset[int]:
    """The subset of the k,l join-irreducible fixed by the up projection."""
    n = signature.n
    if not 1 <= k <= l <= n - 1:
        raise ValueError(f"need 1 <= k <= l <= {n - 1}")
    if k == l:
        return frozenset(range(1, k + 1))
    up_part = {b for b in range(k + 1, l + 1) if signature.is_up(b)}
    lo = set() if signature.is_up(k + 1) else set(range(1, k + 1))
    hi = set(range(l + 1, n + 1)) if not signature.is_up(l) else set()
    return frozenset(lo | up_part | hi)


def fan_ray_subsets(signature: UpDownSignature) -> list[frozenset[int]]:
    n = signature.n
    subsets = suffix_interval_subsets(n)
    for k in range(1, n):
        for l in range(k, n):
            subsets.append(a_kl_subset(signature, k, l))
    if len(set(subsets)) != len(subsets):
        raise AssertionError("fan ray subsets are not distinct")
    return subsets


def cambrian_fan_rays(signature: UpDownSignature):
    """All rays of the Cambrian fan, as (vector, subset) pairs."""
    n = signature.n
    return [(ray_vector(n, a), a) for a in fan_ray_subsets(signature)]


def ray_to_diagonal(a: frozenset[int], signature: UpDownSignature):
    """The polygon diagonal whose triangulations' cones contain the ray."""
    n = signature.n

    def mu_up(i):
        return max(v for v in range(i + 1) if signature.is_up(v))

    def mu_down(i):
        return max(v for v in range(i + 1) if signature.is_down(v))

    def nu_up(i):
        return min(v for v in range(i, n + 2) if signature.is_up(v))

    def nu_down(i):
        return min(v for v in range(i, n + 2) if signature.is_down(v))

    for k in range(1, n):
        if a == frozenset(range(k + 1, n + 1)):
            return tuple(sorted((mu_up(k), nu_down(k + 1))))
    for k in range(1, n):
        for l in range(k, n):
            if a != a_kl_subset(signature, k, l):
                continue
            if k == l:
                return tuple(sorted((mu_down(k), nu_up(k + 1))))
            if signature.is_up(k + 1):
                left = mu_up(k)
            else:
                left = mu_down(k)
            if signature.is_up(l):
                right = nu_up(l + 1)
            else:
                right = nu_down(l + 1)
            return tuple(sorted((left, right)))
    raise ValueError(f"{sorted(a)} is not a ray subset for this signature")


def diagonal_ray_map(signature: UpDownSignature) -> dict:
    """Diagonal -> ray subset; a bijection onto the polygon's diagonals."""
    out = {}
    for a in fan_ray_subsets(signature):
        d = ray_to_diagonal(a, signature)
        if d in out:
            raise AssertionError(f"two ray subsets map to diagonal {d}")
        out[d] = a
    return out


# ---------------------------------------------------------------------------
# Fan verification, type A.


def _signature_orientation(system: CoxeterSystem, signature: UpDownSignature):
    return orientation_from_edges(system, signature.orientation_edges())


def check_fan_a(signature: UpDownSignature, consistency: bool = True) -> dict:
    """Verify the Cambrian fan of a type-A signature.

    Checks, in exact arithmetic, that the maximal cones indexed by the
    congruence classes are simplicial with rays matching the class
    triangulations, contain all member regions, and glue along facets in
    opposite-side pairs; the dual graph is compared with the quotient's
    Hasse diagram.
    """
    n = signature.n
    system = CoxeterSystem("A", n - 1)
    camb = cambrian_lattice(system, _signature_orientation(system, signature))
    lattice = camb.congruence.lattice
    polygon = polygon_from_signature(signature)
    d2s = diagonal_ray_map(signature)
    subsets = fan_ray_subsets(signature)
    vectors = {a: ray_vector(n, a) for a in subsets}

    class_tri = []
    tri_index = {}
    for c, members in enumerate(camb.congruence.classes):
        t = eta(lattice.elements[members[0]], polygon)
        class_tri.append(t)
        tri_index[t.diagonals] = c

    simplicial = True
    tiling = True
    consistent = True
    cone_rays = []
    for c, members in enumerate(camb.congruence.classes):
        rays = [vectors[d2s[d]] for d in sorted(class_tri[c].diagonals)]
        cone_rays.append(rays)
        if _rank(rays) != n - 1:
            simplicial = False
        for i in members:
            for v in _suffix_rays_a(lattice.elements[i]):
                if _nonneg_combo(rays, v) is None:
                    tiling = False
        if consistency:
            in_tri = {d2s[d] for d in class_tri[c].diagonals}
            for a in subsets:
                inside = _nonneg_combo(rays, vectors[a]) is not None
                if inside != (a in in_tri):
                    consistent = False

    # Facet pairing: dropping a diagonal flips to the adjacent class on
    # the opposite side of the shared wall.
    ones = tuple(Fraction(1) for _ in range(n))
    dual_edges = set()
    from .polygon_a import _flip

    for c, t in enumerate(class_tri):
        for d in t.diagonals:
            new = _flip(polygon, t.diagonals, d)
            other = tri_index.get(frozenset((t.diagonals - {d}) | {new}))
            if other is None:
                tiling = False
                continue
            dual_edges.add(frozenset((c, other)))
            shared = [vectors[d2s[x]] for x in t.diagonals if x != d]
            normal = _kernel_vector(shared + [ones])
            s1 = _dot(normal, vectors[d2s[d]])
            s2 = _dot(normal, vectors[d2s[new]])
            if s1 == 0 or s2 == 0 or (s1 > 0) == (s2 > 0):
                tiling = False

    bottoms = sorted({camb.congruence.down_projection[i] for i in range(lattice.n)})
    class_of_bottom = {b: camb.congruence.class_of[b] for b in bottoms}
    hasse_edges = set()
    for qa, qb in camb.quotient.covers:
        ca = class_of_bottom[lattice.index[camb.quotient.elements[qa]]]
        cb = class_of_bottom[lattice.index[camb.quotient.elements[qb]]]
        hasse_edges.add(frozenset((ca, cb)))
    dual_is_hasse = dual_edges == hasse_edges

    faces = set()
    for rays_t in class_tri:
        diags = sorted(rays_t.diagonals)
        for size in range(1, n):
            for combo in itertools.combinations(diags, size):
                faces.add(frozenset(combo))
    f_vector = tuple(
        sum(1 for f in faces if len(f) == size) for size in range(1, n)
    )
    return {
        "family": "A",
        "num_cones": len(class_tri),
        "simplicial": simplicial,
        "tiling": tiling,
        "consistency": consistent,
        "dual_graph_is_hasse": dual_is_hasse,
        "f_vector": f_vector,
        "num_rays": len(subsets),
    }


# ---------------------------------------------------------------------------
# Fan verification, type B (restriction to the antisymmetric subspace).


def _mirror_diagonal(d, two_n):
    return tuple(sorted((two_n + 1 - d[1], two_n + 1 - d[0])))


def _chi(v):
    """The linear map q_i -> -q_{2n+1-i} on the doubled coordinates."""
    return tuple(-x for x in reversed(v))


def _symmetrize(v):
    return tuple(a + b for a, b in zip(v, _chi(v)))


def _symmetric_region_rays(x: tuple[int, ...]):
    """Rays of the region of a signed permutation, in doubled coordinates."""
    n = len(x)
    e = embed_b_in_a(x)
    out = []
    for k in range(1, n + 1):
        members = frozenset(e[k:])
        out.append(_symmetrize(ray_vector(2 * n, members)))
    return out


def check_fan_b(signature: SymmetricSignature) -> dict:
    """Verify the type-B Cambrian fan inside the antisymmetric subspace."""
    n = signature.n
    system = CoxeterSystem("B", n)
    camb = cambrian_lattice(
        system, orientation_from_edges(system, signature.orientation_edges())
    )
    lattice = camb.congruence.lattice
    a_sig = signature.a_signature()
    d2s = diagonal_ray_map(a_sig)
    two_n = 2 * n

    def orbit_ray(d):
        return _symmetrize(ray_vector(two_n, d2s[d]))

    class_data = []
    base_index = {}
    for c, members in enumerate(camb.congruence.classes):
        t = eta_b(lattice.elements[members[0]], signature)
        orbits = sorted(
            {frozenset((d, _mirror_diagonal(d, two_n))) for d in t.base.diagonals},
            key=lambda o: sorted(o),
        )
        rays = [orbit_ray(min(o)) for o in orbits]
        class_data.append((t, orbits, rays))
        base_index[t.base.diagonals] = c

    simplicial = True
    tiling = True
    for c, members in enumerate(camb.congruence.classes):
        _, _, rays = class_data[c]
        if _rank(rays) != n:
            simplicial = False
        for i in members:
            for v in _symmetric_region_rays(lattice.elements[i]):
                if _nonneg_combo(rays, v) is None:
                    tiling = False

    dual_edges = set()
    for c, (t, orbits, rays) in enumerate(class_data):
        for j, orbit in enumerate(orbits):
            kept = t.base.diagonals - orbit
            other = next(
                (
                    c2
                    for c2, (t2, _, _) in enumerate(class_data)
                    if c2 != c and kept < t2.base.diagonals
                ),
                None,
            )
            if other is None:
                tiling = False
                continue
            dual_edges.add(frozenset((c, other)))
            shared = [r for jj, r in enumerate(rays) if jj != j]
            normal = _kernel_vector(
                [v[:n] for v in shared]
            )
            t2, orbits2, rays2 = class_data[other]
            new_orbit = next(
                o for o in orbits2 if not (o & t.base.diagonals)
            )
            s1 = _dot(normal, rays[j][:n])
            s2 = _dot(normal, orbit_ray(min(new_orbit))[:n])
            if s1 == 0 or s2 == 0 or (s1 > 0) == (s2 > 0):
                tiling = False

    bottoms = sorted({camb.congruence.down_projection[i] for i in range(lattice.n)})
    class_of_bottom = {b: camb.congruence.class_of[b] for b in bottoms}
    hasse_edges = set()
    for qa, qb in camb.quotient.covers:
        ca = class_of_bottom[lattice.index[camb.quotient.elements[qa]]]
        cb = class_of_bottom[lattice.index[camb.quotient.elements[qb]]]
        hasse_edges.add(frozenset((ca, cb)))
    dual_is_hasse = dual_edges == hasse_edges

    faces = set()
    for _, orbits, _ in class_data:
        keys = [min(o) for o in orbits]
        for size in range(1, n + 1):
            for combo in itertools.combinations(sorted(keys), size):
                faces.add(frozenset(combo))
    f_vector = tuple(
        sum(1 for f in faces if len(f) == size) for size in range(1, n + 1)
    )
    return {
        "family": "B",
        "num_cones": len(class_data),
        "simplicial": simplicial,
        "tiling": tiling,
        "dual_graph_is_hasse": dual_is_hasse,
        "f_vector": f_vector,
        "num_rays": f_vector[0],
    }


# ---------------------------------------------------------------------------
# Fan verification, H3 (exact number-field arithmetic).


def _field_normalize(field, v):
    lead = next((c for c in v if not field.is_zero(c)), None)
    if lead is None:
        raise ValueError("zero vector")
    if field.sign(lead) < 0:
        lead = field.neg(lead)
    inv = field.inv(lead)
    return tuple(field.mul(inv, c) for c in v)


def _det3(field, u, v, w):
    def m(a, b):
        return field.mul(a, b)

    def term(a, b, c):
        return m(a, m(b, c))

    pos = field.add(
        field.add(term(u[0], v[1], w[2]), term(u[1], v[2], w[0])),
        term(u[2], v[0], w[1]),
    )
    neg = field.add(
        field.add(term(u[2], v[1], w[0]), term(u[0], v[2], w[1])),
        term(u[1], v[0], w[2]),
    )
    return field.sub(pos, neg)


def check_fan_h3(system: CoxeterSystem, orientation: Orientation) -> dict:
    """Verify the Cambrian fan of an H3 orientation over its number field."""
    if system.family != "H3":
        raise ValueError("expected an H3 system")
    field = system.field
    gram = system.gram
    weights = [
        solve_linear(
            field,
            gram,
            [field.one if j == i else field.zero for j in range(3)],
        )
        for i in range(3)
    ]
    camb = cambrian_lattice(system, orientation)
    lattice = camb.congruence.lattice

    def chamber_rays(w):
        return [
            _field_normalize(field, mat_vec(field, w.matrix, weights[i]))
            for i in range(3)
        ]

    rays_of = [chamber_rays(lattice.elements[i]) for i in range(lattice.n)]

    simplicial = True
    tiling = True
    all_extreme = []
    for members in camb.congruence.classes:
        facet_count: dict = {}
        member_rays = set()
        for i in members:
            rs = rays_of[i]
            member_rays.update(rs)
            for pair in itertools.combinations(rs, 2):
                key = frozenset(pair)
                facet_count[key] = facet_count.get(key, 0) + 1
        boundary = [tuple(k) for k, cnt in facet_count.items() if cnt == 1]
        if any(cnt > 2 for cnt in facet_count.values()):
            tiling = False
        # Convexity: every member ray lies weakly on the inner side of
        # every boundary wall.
        for u, v in boundary:
            base_sign = 0
            for i in members:
                rs = rays_of[i]
                if u in rs and v in rs:
                    third = next(r for r in rs if r not in (u, v))
                    base_sign = field.sign(_det3(field, u, v, third))
                    break
            for r in member_rays:
                s = field.sign(_det3(field, u, v, r))
                if s != 0 and s != base_sign:
                    tiling = False
        # Extreme rays from the boundary cycle.
        neighbors: dict = {}
        for u, v in boundary:
            neighbors.setdefault(u, []).append(v)
            neighbors.setdefault(v, []).append(u)
        extreme = []
        for r, nbrs in neighbors.items():
            if len(nbrs) != 2:
                tiling = False
                continue
            if field.sign(_det3(field, nbrs[0], r, nbrs[1])) != 0:
                extreme.append(r)
        if len(extreme) != 3:
            simplicial = False
        else:
            for r in member_rays:
                sol = solve_linear(
                    field,
                    [[extreme[j][i] for j in range(3)] for i in range(3)],
                    list(r),
                )
                if sol is None or any(field.sign(c) < 0 for c in sol):
                    tiling = False
        all_extreme.append(extreme)

    ray_set = {r for ext in all_extreme for r in ext}
    two_faces = {
        frozenset(p) for ext in all_extreme for p in itertools.combinations(ext, 2)
    }
    # Each two-face of the complete simplicial fan is shared by exactly
    # two maximal cones, on opposite sides.
    face_owners: dict = {}
    for c, ext in enumerate(all_extreme):
        for p in itertools.combinations(ext, 2):
            face_owners.setdefault(frozenset(p), []).append(c)
    dual_edges = set()
    for face, owners in face_owners.items():
        if len(owners) != 2:
            tiling = False
            continue
        dual_edges.add(frozenset(owners))
        u, v = tuple(face)
        signs = []
        for c in owners:
            third = next(r for r in all_extreme[c] if r not in face)
            signs.append(field.sign(_det3(field, u, v, third)))
        if 0 in signs or signs[0] == signs[1]:
            tiling = False

    bottoms = sorted({camb.congruence.down_projection[i] for i in range(lattice.n)})
    class_of_bottom = {b: camb.congruence.class_of[b] for b in bottoms}
    hasse_edges = set()
    for qa, qb in camb.quotient.covers:
        ca = class_of_bottom[lattice.index[camb.quotient.elements[qa]]]
        cb = class_of_bottom[lattice.index[camb.quotient.elements[qb]]]
        hasse_edges.add(frozenset((ca, cb)))

    return {
        "family": "H3",
        "num_cones": len(all_extreme),
        "simplicial": simplicial,
        "tiling": tiling,
        "dual_graph_is_hasse": dual_edges == hasse_edges,
        "f_vector": (len(ray_set), len(two_faces), len(all_extreme)),
        "num_rays": len(ray_set),
    }


def check_fan(arg, orientation: Orientation = None) -> dict:
    if isinstance(arg, UpDownSignature):
        return check_fan_a(arg)
    if isinstance(arg, SymmetricSignature):
        return check_fan_b(arg)
    if isinstance(arg, CoxeterSystem) and arg.family == "H3":
        return check_fan_h3(arg, orientation)
    raise ValueError("unsupported fan input")


# ---------------------------------------------------------------------------
# Roots and diagonals of the alternating polygon (clusters for S_n).


def alternating_signature(n: int) -> UpDownSignature:
    return UpDownSignature(n, frozenset(range(1, n + 1, 2)))


def _neg_simple(n: int, i: int) -> tuple[int, ...]:
    return tuple(-1 if k == i else 0 for k in range(1, n))


def _alpha(n: int, i: int, j: int) -> tuple[int, ...]:
    return tuple(1 if i <= k <= j else 0 for k in range(1, n))


def all_roots_ge_minus_one(n: int):
    """Phi_{>=-1} for S_n: positive roots plus negative simples."""
    out = [_neg_simple(n, i) for i in range(1, n)]
    for i in range(1, n):
        for j in range(i, n):
            out.append(_alpha(n, i, j))
    return out


@lru_cache(maxsize=None)
def roots_and_diagonals_a(n: int):
    """The bijection Phi_{>=-1} <-> diagonals of the alternating polygon."""
    root_to_diag = {}
    for i in range(1, n):
        if i % 2 == 1:
            d = (i, i + 1)
        else:
            d = (i - 1, i + 2)
        root_to_diag[_neg_simple(n, i)] = tuple(sorted(d))
    for i in range(1, n):
        for j in range(i, n):
            lo = i if i % 2 == 0 else (0 if i == 1 else i - 2)
            if j % 2 == 0:
                hi = j + 1
            else:
                hi = n + 1 if j == n - 1 else j + 3
            root_to_diag[_alpha(n, i, j)] = tuple(sorted((lo, hi)))
    diag_to_root = {d: r for r, d in root_to_diag.items()}
    if len(diag_to_root) != len(root_to_diag):
        raise AssertionError("root-diagonal dictionary is not injective")
    return root_to_diag, diag_to_root


@lru_cache(maxsize=None)
def _polygon_positions(n: int):
    polygon = polygon_from_signature(alternating_signature(n))
    cycle = polygon.boundary_cycle()
    return polygon, {lab: pos for pos, lab in enumerate(cycle)}, cycle


def _reflect_diagonal(n: int, d, fixed_sum: int):
    polygon, pos, cycle = _polygon_positions(n)
    size = n + 2

    def ref(lab):
        return cycle[(fixed_sum - pos[lab]) % size]

    return tuple(sorted((ref(d[0]), ref(d[1]))))


def tau(n: int, eps, root):
    """The combinatorial polygon reflections tau_+ and tau_- on roots."""
    if eps in ("+", 1):
        a, b = 0, 2
    elif eps in ("-", -1):
        a, b = 1, 2
    else:
        raise ValueError(f"bad sign {eps!r}")
    r2d, d2r = roots_and_diagonals_a(n)
    if root not in r2d:
        raise ValueError(f"{root} is not in Phi_>=-1")
    _, pos, _ = _polygon_positions(n)
    d = _reflect_diagonal(n, r2d[root], pos[a] + pos[b])
    return d2r[d]


def rotation_number(n: int, root) -> int:
    """Least k with (tau_- tau_+)^k(root) a negative simple root."""
    current = root
    for k in range(2 * (n + 2)):
        if sum(current) < 0:
            return k
        current = tau(n, "-", tau(n, "+", current))
    raise AssertionError("rotation orbit misses the negative simple roots")


def compatible(n: int, beta, theta) -> bool:
    """Compatibility of two roots in Phi_{>=-1} via the tau recursion."""
    for _ in range(2 * (n + 2)):
        if sum(beta) < 0:
            i = next(k + 1 for k, c in enumerate(beta) if c)
            return theta[i - 1] == 0
        if sum(theta) < 0:
            i = next(k + 1 for k, c in enumerate(theta) if c)
            return beta[i - 1] == 0
        beta = tau(n, "-", tau(n, "+", beta))
        theta = tau(n, "-", tau(n, "+", theta))
    raise AssertionError("compatibility recursion did not terminate")


@dataclass(frozen=True)
class ClusterComplex:
    n: int
    roots: tuple
    compatible_pairs: frozenset
    clusters: tuple


def clusters(n: int) -> ClusterComplex:
    """All clusters for S_n, via triangulations of the alternating polygon."""
    polygon = polygon_from_signature(alternating_signature(n))
    _, d2r = roots_and_diagonals_a(n)
    roots = tuple(all_roots_ge_minus_one(n))
    pairs = frozenset(
        frozenset((b, t))
        for b, t in itertools.combinations(roots, 2)
        if compatible(n, b, t)
    )
    found = []
    for t in all_triangulations(polygon):
        cluster = frozenset(d2r[d] for d in t.diagonals)
        for b, t2 in itertools.combinations(cluster, 2):
            if frozenset((b, t2)) not in pairs:
                raise AssertionError("triangulation is not a compatible set")
        found.append(cluster)
    return ClusterComplex(n, roots, pairs, tuple(found))


def cluster_poset(n: int) -> FiniteLattice:
    """Clusters ordered by rotation-number comparison across flips."""
    complex_ = clusters(n)
    items = list(complex_.clusters)
    covers = []
    for i, c1 in enumerate(items):
        for j, c2 in enumerate(items):
            if i >= j or len(c1 & c2) != n - 2:
                continue
            (beta,) = tuple(c1 - c2)
            (theta,) = tuple(c2 - c1)
            rb, rt = rotation_number(n, beta), rotation_number(n, theta)
            if rb == rt:
                raise AssertionError("flip pair with equal rotation numbers")
            if rb < rt:
                covers.append((i, j))
            else:
                covers.append((j, i))
    return FiniteLattice.from_covers(tuple(items), covers)


# ---------------------------------------------------------------------------
# Brackets, the twist lemma, and nice coroots.


def b_bipartite_signature(n: int):
    """Symmetric signature whose doubled signature is alternating."""
    from .polygon_b import SymmetricSignature

    return SymmetricSignature.from_positive_ups(
        n, frozenset(i for i in range(1, n + 1) if (n + i) % 2 == 1)
    )


def b_cluster_poset(n: int) -> FiniteLattice:
    """Flip-invariant clusters of S_{2n} ordered across orbit flips.

    The diagram flip chi acts on roots by coordinate reversal; invariant
    clusters are compared through the (flip-constant) rotation numbers of
    the orbit exchanged by a flip.
    """
    m = 2 * n

    def chi_root(r):
        return tuple(reversed(r))

    invariant = [
        c for c in clusters(m).clusters
        if frozenset(chi_root(r) for r in c) == c
    ]
    covers = []
    for i, c1 in enumerate(invariant):
        for j in range(i + 1, len(invariant)):
            c2 = invariant[j]
            gone, came = c1 - c2, c2 - c1
            if not gone:
                continue
            if len({frozenset((r, chi_root(r))) for r in gone}) != 1:
                continue
            if len({frozenset((r, chi_root(r))) for r in came}) != 1:
                continue
            rb = {rotation_number(m, r) for r in gone}
            rt = {rotation_number(m, r) for r in came}
            if len(rb) != 1 or len(rt) != 1 or rb == rt:
                raise AssertionError("orbit flip with ambiguous rotation numbers")
            covers.append((i, j) if rb.pop() < rt.pop() else (j, i))
    return FiniteLattice.from_covers(tuple(invariant), covers)


def bracket(x, y) -> Fraction:
    """sum_i epsilon(i) [x : alpha_i^vee][y : alpha_i], bipartite signing."""
    return sum(
        (1 if i % 2 == 0 else -1) * a * b for i, (a, b) in enumerate(zip(x, y))
    )


def twist_check(n: int, beta_coroot, theta, eps) -> bool:
    lhs = bracket(beta_coroot, tau(n, eps, theta))
    minus = "-" if eps in ("+", 1) else "+"
    rhs = -bracket(tau(n, minus, beta_coroot), theta)
    return lhs == rhs


def positive_roots(n: int):
    return [_alpha(n, i, j) for i in range(1, n) for j in range(i, n)]


def nice_coroot(n: int, near_cluster):
    """A positive coroot bracket-orthogonal to every root of the wall."""
    for beta in sorted(positive_roots(n), key=lambda r: (sum(r), r)):
        if all(bracket(beta, alpha) == 0 for alpha in near_cluster):
            return beta
    raise LookupError("no positive coroot is orthogonal to the near-cluster")


def cluster_refine_check(n: int, family: str = "A") -> bool:
    """Walls of the cluster fan lie inside twisted-arrangement hyperplanes."""
    if family == "A":
        seen = set()
        for cluster in clusters(n).clusters:
            for alpha in cluster:
                wall = cluster - {alpha}
                if wall in seen:
                    continue
                seen.add(wall)
                nice_coroot(n, wall)
        return True
    if family == "B":
        # Fold S_{2n} by the diagram flip chi; B walls are the chi-fixed
        # restrictions of invariant cluster walls.
        m = 2 * n

        def chi_root(r):
            return tuple(reversed(r))

        invariant = [
            c for c in clusters(m).clusters
            if frozenset(chi_root(r) for r in c) == c
        ]
        from math import comb

        if len(invariant) != comb(2 * n, n):
            return False
        for cluster in invariant:
            orbits = {frozenset((r, chi_root(r))) for r in cluster}
            for orbit in orbits:
                wall = [
                    tuple(a + b for a, b in zip(r, chi_root(r)))
                    for r in cluster - orbit
                ]
                found = any(
                    all(bracket(beta, w) == 0 for w in wall)
                    for beta in positive_roots(m)
                )
                if not found:
                    return False
        return True
    raise ValueError(f"unsupported family {family!r}")


# ---------------------------------------------------------------------------
# The psi map and the bipartite fan isomorphism.


def psi(n: int, diagonal):
    a, b = sorted(diagonal)
    if b - a == 1:
        return _neg_simple(n, a)
    return _alpha(n, a + 1, b - 2)


def _fundamental_weight(n: int, i: int):
    """omega_i of S_n in sum-zero coordinates."""
    return tuple(
        (Fraction(1) if k <= i else Fraction(0)) - Fraction(i, n)
        for k in range(1, n + 1)
    )


def psi_and_bipartite_iso_check(n: int):
    """The linear alpha_i -> eps(i) omega_i map matches rays and cones."""
    signature = alternating_signature(n)
    r2d, d2r = roots_and_diagonals_a(n)
    # psi inverts the tau_- shifted dictionary.
    for root in all_roots_ge_minus_one(n):
        if psi(n, r2d[tau(n, "-", root)]) != root:
            return False, ("psi-inverse", root)
    # The linear map on rays.
    d2s = diagonal_ray_map(signature)

    def linear_image(root):
        img = [Fraction(0)] * n
        for i, c in enumerate(root, start=1):
            if c == 0:
                continue
            eps = 1 if i % 2 == 1 else -1
            w = _fundamental_weight(n, i)
            img = [x + eps * c * y for x, y in zip(img, w)]
        return tuple(img)

    for d, subset in d2s.items():
        root = psi(n, d)
        image = linear_image(root)
        target = ray_vector(n, subset)
        combo = _nonneg_combo([target], image)
        if combo is None or combo[0] <= 0:
            return False, ("ray-mismatch", d, root)
    # Cones map to cones: every triangulation's psi image is a cluster.
    polygon = polygon_from_signature(signature)
    cluster_set = set(clusters(n).clusters)
    seen = set()
    for t in all_triangulations(polygon):
        image = frozenset(psi(n, d) for d in t.diagonals)
        if image not in cluster_set or image in seen:
            return False, ("cone-mismatch", tuple(sorted(t.diagonals)))
        seen.add(image)
    if len(seen) != len(cluster_set):
        return False, ("cone-count",)
    return True, None


def stasheff_ray_check(n: int) -> bool:
    """All-up rays are the proper intervals [i,j], mapped to (i-1, j+1)."""
    signature = UpDownSignature(n, frozenset(range(1, n + 1)))
    subsets = set(fan_ray_subsets(signature))
    intervals = {
        frozenset(range(i, j + 1))
        for i in range(1, n + 1)
        for j in range(i, n + 1)
        if not (i == 1 and j == n)
    }
    if subsets != intervals:
        return False
    for a in subsets:
        i, j = min(a), max(a)
        if ray_to_diagonal(a, signature) != (i - 1, j + 1):
            return False
    return True


# ---------------------------------------------------------------------------
# JSON export.


def fan_to_json(signature: UpDownSignature) -> dict:
    n = signature.n
    subsets = fan_ray_subsets(signature)
    ray_index = {a: k for k, a in enumerate(subsets)}
    system = CoxeterSystem("A", n - 1)
    camb = cambrian_lattice(system, _signature_orientation(system, signature))
    lattice = camb.congruence.lattice
    polygon = polygon_from_signature(signature)
    d2s = diagonal_ray_map(signature)
    cones = []
    for members in camb.congruence.classes:
        t = eta(lattice.elements[members[0]], polygon)
        cones.append(sorted(ray_index[d2s[d]] for d in t.diagonals))
    return {
        "dim": n - 1,
        "lineality": [fraction_str(Fraction(1)) for _ in range(n)],
        "rays": [
            [fraction_str(c) for c in ray_vector(n, a)] for a in subsets
        ],
        "ray_subsets": [sorted(a) for a in subsets],
        "cones": cones,
        "labels": list(range(len(cones))),
    }


def fraction_str(value: Fraction) -> str:
    """Reduced "p/q" with q > 0 (always written, even for integers)."""
    return f"{value.numerator}/{value.denominator}"
