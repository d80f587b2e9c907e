"""Loday polytopes, dual fans, and Betti tables of the configuration spaces.

The stratification of the space of subspace configurations over the
standard ordinal has a polytopal shadow: each binary tree contributes an
integer point, the convex hull of those points is a realization of the
associahedron, and the dual fan records which strata collide in which
codimension.  This module computes the vertex points by three independent
routes (the descendant-count formula on binary trees, the missing basis
vectors of a torus-fixed configuration, and a Minkowski sum of interval
simplices), builds the dual fan with its wall equations, and derives the
h-vector and Betti tables from the face counts of the stratification.

All arithmetic is exact.  Extreme-point claims are certified by a small
phase-one simplex over the rationals, and fan claims by wall matching
and separating functionals, so every verification is a proof at the
scale it is run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from random import Random
from typing import Iterable, Mapping, Sequence

from .brick import random_config, stratum_dimension
from .linalg import nullspace, rank
from .trees import PlanarTree, enumerate_trees
from .zoo import euler_characteristic_real
from .zoo import real_betti as _real_betti_table

Point = tuple[int, ...]

__all__ = [
    "LatticePolytope",
    "Fan",
    "loday_vertex",
    "loday_polytope",
    "loday_via_minkowski",
    "fixed_point_config",
    "vertex_missing_basis",
    "normal_fan",
    "wall_equation",
    "fan_verify",
    "f_vector",
    "h_vector",
    "complex_betti",
    "real_betti",
    "euler_characteristic_real",
]


# -- exact linear programming ----------------------------------------------


def point_in_hull(point: Sequence[int], others: Iterable[Sequence[int]]) -> bool:
    """Decide whether point is a convex combination of the other points.

    Runs a phase-one simplex with Bland's rule over exact rationals on
    the feasibility system (combination weights sum to one and reproduce
    the point), so the answer is a certificate, not an approximation.
    """
    generators = [tuple(q) for q in others]
    if not generators:
        return False
    m = len(point) + 1
    k = len(generators)
    rows = [[Fraction(q[c]) for q in generators] for c in range(len(point))]
    rows.append([Fraction(1)] * k)
    rhs = [Fraction(x) for x in point] + [Fraction(1)]
    for r in range(m):
        if rhs[r] < 0:
            rows[r] = [-x for x in rows[r]]
            rhs[r] = -rhs[r]
    tableau = [
        rows[r] + [Fraction(1 if c == r else 0) for c in range(m)] + [rhs[r]]
        for r in range(m)
    ]
    basis = list(range(k, k + m))
    cost = [Fraction(0)] * k + [Fraction(1)] * m
    while True:
        reduced = [
            cost[j] - sum(cost[basis[r]] * tableau[r][j] for r in range(m))
            for j in range(k + m)
        ]
        enter = next((j for j in range(k + m) if reduced[j] < 0), None)
        if enter is None:
            break
        best: tuple[Fraction, int] | None = None
        for r in range(m):
            if tableau[r][enter] > 0:
                ratio = tableau[r][-1] / tableau[r][enter]
                if (
                    best is None
                    or ratio < best[0]
                    or (ratio == best[0] and basis[r] < basis[best[1]])
                ):
                    best = (ratio, r)
        if best is None:
            raise ArithmeticError("phase-one objective cannot be unbounded")
        r = best[1]
        pivot = tableau[r][enter]
        tableau[r] = [x / pivot for x in tableau[r]]
        for rr in range(m):
            if rr != r and tableau[rr][enter] != 0:
                factor = tableau[rr][enter]
                tableau[rr] = [
                    a - factor * b for a, b in zip(tableau[rr], tableau[r])
                ]
        basis[r] = enter
    objective = sum(cost[basis[r]] * tableau[r][-1] for r in range(m))
    return objective == 0


# -- lattice polytopes ------------------------------------------------------


@dataclass(frozen=True)
class LatticePolytope:
    """A lattice polytope given by the list of its integer vertices.

    The vertex list is stored sorted and without repeats; ``verify``
    certifies by exact linear programming that every listed point is an
    extreme point of the hull, so the list is exactly the vertex set.
    """

    dimension: int
    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        points = sorted({tuple(int(x) for x in v) for v in self.vertices})
        if any(len(v) != self.dimension for v in points):
            raise ValueError("every vertex must have one coordinate per axis")
        object.__setattr__(self, "dimension", int(self.dimension))
        object.__setattr__(self, "vertices", tuple(points))

    def verify(self) -> None:
        """Certify that every listed point is extreme; raise otherwise."""
        points = list(self.vertices)
        for i, p in enumerate(points):
            if point_in_hull(p, points[:i] + points[i + 1 :]):
                raise ValueError(f"{p} is in the hull of the other points")

    def to_json(self) -> str:
        payload = {
            "dimension": self.dimension,
            "vertices": [list(v) for v in self.vertices],
        }
        return json.dumps(payload, indent=2)

    def to_poly(self) -> str:
        """Plain-text form: one integer point per line."""
        return "\n".join(" ".join(str(x) for x in v) for v in self.vertices) + "\n"


# -- vertex points of the Loday realization ----------------------------------


def loday_vertex(T: PlanarTree) -> Point:
    """The integer point of a binary tree with n leaves.

    Coordinate i (one per gap between consecutive leaves) is the product
    of the leaf counts of the two children of the vertex where the paths
    to leaves i and i+1 separate.
    """
    if not T.is_binary():
        raise ValueError("vertex points are defined for binary trees")
    n = T.n_leaves
    coords = []
    for i in range(1, n):
        left_path = T.leaf_path(i)
        right_path = T.leaf_path(i + 1)
        depth = 0
        while left_path[depth] == right_path[depth]:
            depth += 1
        fork = T.subtree(left_path[:depth])
        coords.append(fork.children[0].n_leaves * fork.children[1].n_leaves)
    return tuple(coords)


def loday_polytope(n: int) -> LatticePolytope:
    """Convex hull of the points of all binary trees with n leaves."""
    if n < 2:
        raise ValueError("the polytope needs at least two leaves")
    points = {loday_vertex(T) for T in enumerate_trees(n, binary_only=True)}
    return LatticePolytope(n - 1, tuple(sorted(points)))


def loday_via_minkowski(n: int) -> LatticePolytope:
    """The same polytope as a Minkowski sum of interval simplices.

    The sum runs over all intervals [i, j] of gap indices; the summand is
    the simplex on the unit vectors e_i, ..., e_j.  Equivalently the
    result is the Newton polytope of the product of the linear forms
    t_i + ... + t_j.  A vertex for a generic direction picks the largest
    coordinate of the direction inside each interval, so sweeping all
    orderings of the coordinates enumerates every vertex exactly.
    """
    if n < 2:
        raise ValueError("the polytope needs at least two leaves")
    gaps = n - 1
    points: set[Point] = set()
    for order in permutations(range(gaps)):
        priority = [0] * gaps
        for level, g in enumerate(order):
            priority[g] = level
        total = [0] * gaps
        for i in range(gaps):
            for j in range(i, gaps):
                best = max(range(i, j + 1), key=priority.__getitem__)
                total[best] += 1
        points.add(tuple(total))
    return LatticePolytope(gaps, tuple(sorted(points)))


# -- missing basis vectors at a torus-fixed configuration --------------------


def fixed_point_config(T: PlanarTree):
    """The unique configuration in the stratum of a binary tree.

    Binary-tree strata are points: every vertex contributes a
    configuration over a two-element ordinal, which has no free
    parameters, so composing along the tree is deterministic.
    """
    if not T.is_binary():
        raise ValueError("fixed configurations are indexed by binary trees")
    return random_config(T, Random(0))


def vertex_missing_basis(T: PlanarTree) -> Point:
    """The vertex point of a binary tree from its fixed configuration.

    Start from (1, ..., 1).  For every interval [l, r] of interior
    elements, the space V over [l, r] at the fixed configuration misses
    exactly one of the gap vectors spanning its codimension-one ambient
    block; add that unit vector.  The result equals ``loday_vertex``.
    """
    if not T.is_binary():
        raise ValueError("vertex points are defined for binary trees")
    n = T.n_leaves
    coords = [1] * (n - 1)
    if n == 2:
        return tuple(coords)
    config = fixed_point_config(T)
    for l in range(2, n):
        for r in range(l, n):
            space = config.space(l, r)
            missing = [
                gap
                for gap in range(l - 1, r + 1)
                if not space.contains_vector(_unit(n - 1, gap - 1))
            ]
            if len(missing) != 1:
                raise AssertionError(
                    f"V[{l},{r}] should miss exactly one gap vector"
                )
            coords[missing[0] - 1] += 1
    return tuple(coords)


def _unit(length: int, position: int) -> list[Fraction]:
    vec = [Fraction(0)] * length
    vec[position] = Fraction(1)
    return vec


# -- the dual fan -------------------------------------------------------------


@dataclass(frozen=True)
class Fan:
    """A simplicial fan in the quotient of the gap lattice by the diagonal.

    Rays are stored as canonical integer representatives in the ambient
    gap coordinates (minimum coordinate zero, content one); all linear
    algebra happens in the rank ``rank`` quotient, obtained by
    subtracting the last coordinate.  Maximal cones are tuples of ray
    indices; ``labels`` names each cone by the text form of its binary
    tree, and ``walls`` lists the codimension-one incidences.
    """

    rank: int
    rays: tuple[Point, ...]
    maximal_cones: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "rays", tuple(tuple(int(x) for x in ray) for ray in self.rays)
        )
        object.__setattr__(
            self,
            "maximal_cones",
            tuple(tuple(sorted(cone)) for cone in self.maximal_cones),
        )
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) != len(self.maximal_cones):
            raise ValueError("one label per maximal cone")

    def quotient_ray(self, index: int) -> Point:
        """The ray in quotient coordinates (last coordinate subtracted)."""
        ray = self.rays[index]
        return tuple(x - ray[-1] for x in ray[:-1])

    def walls(self) -> tuple[tuple[int, int, tuple[int, ...]], ...]:
        """Pairs of maximal cones sharing all rays but one on each side."""
        facets: dict[frozenset[int], list[int]] = {}
        for c, cone in enumerate(self.maximal_cones):
            for drop in cone:
                facets.setdefault(frozenset(cone) - {drop}, []).append(c)
        out = []
        for shared, cones in sorted(
            facets.items(), key=lambda kv: sorted(kv[1])
        ):
            if len(cones) == 2:
                a, b = sorted(cones)
                out.append((a, b, tuple(sorted(shared))))
        return tuple(out)

    def to_json(self) -> str:
        payload = {
            "rank": self.rank,
            "rays": [list(r) for r in self.rays],
            "maximal_cones": [list(c) for c in self.maximal_cones],
            "labels": list(self.labels),
            "walls": [
                {"cones": [a, b], "shared_rays": list(shared)}
                for a, b, shared in self.walls()
            ],
        }
        return json.dumps(payload, indent=2)

    def to_poly(self) -> str:
        """Plain-text form: one integer ray representative per line."""
        return "\n".join(" ".join(str(x) for x in r) for r in self.rays) + "\n"


def _canonical_ray(vec: Sequence[int]) -> Point:
    """Shift by the diagonal so the minimum is zero, divide by content."""
    low = min(vec)
    shifted = [x - low for x in vec]
    from math import gcd

    content = 0
    for x in shifted:
        content = gcd(content, x)
    if content == 0:
        raise ValueError("a ray cannot lie on the diagonal")
    return tuple(x // content for x in shifted)


def normal_fan(n: int) -> Fan:
    """The dual fan of the Loday realization, modulo the diagonal.

    One maximal cone per binary tree; the ray of an internal edge
    spanning leaves l..r is the functional minimized on the face where
    the configuration splits there, namely the indicator of the gaps
    outside l..r-1, read modulo the diagonal.
    """
    if n < 3:
        raise ValueError("the fan is trivial below three leaves")
    rays: list[Point] = []
    index: dict[Point, int] = {}
    cones: list[tuple[int, ...]] = []
    labels: list[str] = []
    for T in enumerate_trees(n, binary_only=True):
        cone = []
        for edge in T.internal_edges():
            l, r = T.leaf_span(edge)
            ray = _canonical_ray(
                [0 if l <= g <= r - 1 else 1 for g in range(1, n)]
            )
            if ray not in index:
                index[ray] = len(rays)
                rays.append(ray)
            cone.append(index[ray])
        cones.append(tuple(sorted(cone)))
        labels.append(T.to_text())
    return Fan(n - 2, tuple(rays), tuple(cones), tuple(labels))


def wall_equation(t1: PlanarTree, t2: PlanarTree) -> tuple[int, int]:
    """Gap indices (a, b) with the wall of two adjacent trees on y_a = y_b.

    The trees must be binary and differ by a single associativity move.
    Contracting the edge where they differ leaves one vertex with three
    children spanning leaves i..j-1, j..k and k+1..m; the wall between
    their cones lies on the hyperplane y_{j-1} = y_k.
    """
    spans1 = {t1.leaf_span(e) for e in t1.internal_edges()}
    spans2 = {t2.leaf_span(e) for e in t2.internal_edges()}
    extra1 = spans1 - spans2
    extra2 = spans2 - spans1
    if len(extra1) != 1 or len(extra2) != 1:
        raise ValueError("trees must differ by one associativity move")
    span1 = extra1.pop()
    edge1 = next(e for e in t1.internal_edges() if t1.leaf_span(e) == span1)
    merged = t1.contract(edge1)
    span2 = extra2.pop()
    edge2 = next(e for e in t2.internal_edges() if t2.leaf_span(e) == span2)
    if t2.contract(edge2) != merged:
        raise ValueError("trees must contract to a common tree")
    ternary = [
        p for p in merged.vertices() if len(merged.subtree(p).children) == 3
    ]
    if len(ternary) != 1:
        raise ValueError("trees must differ by one associativity move")
    v = ternary[0]
    left = merged.leaf_span(v + (0,))
    centre = merged.leaf_span(v + (1,))
    return left[1], centre[1]


def fan_verify(fan: Fan) -> dict[str, int]:
    """Machine-check the fan axioms and the wall equations; raise on failure.

    Checks, with exact arithmetic: every maximal cone is simplicial of
    full rank in the quotient; every facet of a maximal cone is shared
    with exactly one other cone, the two lying on opposite sides of the
    facet hyperplane; the wall graph is connected (for a simplicial
    collection these facts force completeness); for every pair of cones
    the difference of their vertex points separates them with equality
    exactly on the shared rays, so intersections are faces; and every
    wall lies on its gap-equality hyperplane.
    """
    quotient = [fan.quotient_ray(i) for i in range(len(fan.rays))]
    for cone in fan.maximal_cones:
        if len(cone) != fan.rank:
            raise ValueError("maximal cones must have one ray per dimension")
        matrix = [[Fraction(x) for x in quotient[i]] for i in cone]
        if rank(matrix) != fan.rank:
            raise ValueError("maximal cones must be simplicial of full rank")

    facets: dict[frozenset[int], list[tuple[int, int]]] = {}
    for c, cone in enumerate(fan.maximal_cones):
        for drop in cone:
            facets.setdefault(frozenset(cone) - {drop}, []).append((c, drop))
    adjacency: dict[int, set[int]] = {c: set() for c in range(len(fan.maximal_cones))}
    for shared, sides in facets.items():
        if len(sides) != 2:
            raise ValueError("every wall must bound exactly two cones")
        (c1, drop1), (c2, drop2) = sides
        adjacency[c1].add(c2)
        adjacency[c2].add(c1)
        if shared:
            matrix = [[Fraction(x) for x in quotient[i]] for i in sorted(shared)]
            normals = nullspace(matrix, fan.rank)
            if len(normals) != 1:
                raise ValueError("wall spans must have corank one")
            h = normals[0]
        else:
            if fan.rank != 1:
                raise ValueError("only rank-one fans have point walls")
            h = [Fraction(1)]
        s1 = sum(a * b for a, b in zip(h, quotient[drop1]))
        s2 = sum(a * b for a, b in zip(h, quotient[drop2]))
        if s1 == 0 or s2 == 0 or (s1 > 0) == (s2 > 0):
            raise ValueError("cones must lie on opposite sides of a wall")

    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for c in frontier:
            for d in adjacency[c]:
                if d not in seen:
                    seen.add(d)
                    nxt.append(d)
        frontier = nxt
    if len(seen) != len(fan.maximal_cones):
        raise ValueError("the wall graph must be connected")

    trees = [PlanarTree.from_text(label) for label in fan.labels]
    points = [loday_vertex(T) for T in trees]
    for a in range(len(fan.maximal_cones)):
        for b in range(a + 1, len(fan.maximal_cones)):
            w = [pa - pb for pa, pb in zip(points[a], points[b])]
            shared = set(fan.maximal_cones[a]) & set(fan.maximal_cones[b])
            for c, sign in ((a, 1), (b, -1)):
                for i in fan.maximal_cones[c]:
                    s = sign * sum(x * y for x, y in zip(fan.rays[i], w))
                    if i in shared and s != 0:
                        raise ValueError("shared rays must be tight for both")
                    if i not in shared and s <= 0:
                        raise ValueError(
                            "vertex differences must separate distinct cones"
                        )

    count = 0
    for a, b, shared in fan.walls():
        ga, gb = wall_equation(trees[a], trees[b])
        for i in shared:
            if fan.rays[i][ga - 1] != fan.rays[i][gb - 1]:
                raise ValueError(f"wall of cones {a},{b} leaves y_{ga}=y_{gb}")
        count += 1
    return {
        "cones": len(fan.maximal_cones),
        "rays": len(fan.rays),
        "walls": count,
    }


# -- face counts and Betti tables ---------------------------------------------


def f_vector(n: int) -> tuple[int, ...]:
    """Face counts of the stratification: entry i counts strata of dim i."""
    if n < 2:
        raise ValueError("face counts need at least two leaves")
    counts = [0] * (n - 1)
    for T in enumerate_trees(n):
        counts[stratum_dimension(T)] += 1
    return tuple(counts)


def h_vector(n: int) -> tuple[int, ...]:
    """The h-vector: substitute t-1 into the f-polynomial."""
    f = f_vector(n)
    h = [0] * len(f)
    for i, fi in enumerate(f):
        # add fi * (t - 1)^i
        term = [0] * len(f)
        term[0] = 1
        for _ in range(i):
            nxt = [0] * len(f)
            for d in range(len(f)):
                nxt[d] -= term[d]
                if d + 1 < len(f):
                    nxt[d + 1] += term[d]
            term = nxt
        for d in range(len(f)):
            h[d] += fi * term[d]
    return tuple(h)


def complex_betti(n: int) -> tuple[int, ...]:
    """Betti numbers of the complex configuration space, by degree.

    Odd degrees vanish; degree 2k carries the h-vector entry h_k.
    """
    h = h_vector(n)
    out = [0] * (2 * (n - 2) + 1)
    for k, hk in enumerate(h):
        out[2 * k] = hk
    return tuple(out)


def real_betti(n: int) -> tuple[int, ...]:
    """Betti numbers of the real configuration space, by degree."""
    table: Mapping[int, int] = _real_betti_table(n)
    top = max(table)
    return tuple(table.get(d, 0) for d in range(top + 1))
