"""Named polytopes and the generated test corpus."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from math import gcd

from gorenstein.core.intmat import hermite_normal_form, rank
from gorenstein.core.polytope import (
    Polytope,
    lattice_basis,
    lattice_coordinates,
    normalize_polytope,
)
from gorenstein.nef import NefPartition, cayley_polytope, minkowski_sum

HALF = "1/2"


# --- basic shapes -------------------------------------------------------------


def segment(length: int) -> Polytope:
    return Polytope.from_points([(0,), (length,)], name=f"segment_{length}")


def unit_cube(d: int) -> Polytope:
    return Polytope.from_points(product((0, 1), repeat=d), name=f"unit_cube_{d}")


def standard_simplex(d: int) -> Polytope:
    pts = [tuple(int(i == j) for j in range(d)) for i in range(d)] + [(0,) * d]
    return Polytope.from_points(pts, name=f"standard_simplex_{d}")


def reflexive_square() -> Polytope:
    return Polytope.from_points(product((-1, 1), repeat=2), name="reflexive_square")


def cross_polytope(d: int) -> Polytope:
    pts = []
    for i in range(d):
        for s in (1, -1):
            pts.append(tuple(s * int(i == j) for j in range(d)))
    return Polytope.from_points(pts, name=f"cross_polytope_{d}")


def lattice_pyramid(F: Polytope) -> Polytope:
    """Pyramid of height one over F (F in a hyperplane of one more dimension)."""
    pts = [tuple(v) + (0,) for v in F.vertices] + [(0,) * F.ambient_dim + (1,)]
    return Polytope.from_points(pts, name=f"pyramid({F.name})" if F.name else None)


def free_join(F: Polytope, G: Polytope) -> Polytope:
    """Cayley polytope of F and G placed in complementary coordinates: a Z-join."""
    a, b = F.ambient_dim, G.ambient_dim
    Fp = Polytope.from_points([tuple(v) + (0,) * b for v in F.vertices])
    Gp = Polytope.from_points([(0,) * a + tuple(v) for v in G.vertices])
    name = f"join({F.name},{G.name})" if F.name and G.name else None
    return cayley_polytope([Fp, Gp], name)


def vertex_ids(P: Polytope, points, lattice_generators=None) -> frozenset[int]:
    """Indices of the given raw points among the vertices of P."""
    out = []
    for p in points:
        if lattice_generators is not None:
            q = lattice_coordinates(lattice_basis(P.ambient_dim, lattice_generators), p)
        else:
            q = tuple(int(x) for x in p)
        out.append(P.vertices.index(q))
    return frozenset(out)


# --- worked examples --------------------------------------------------------------

SEG_F = [(0, 0), (1, 0)]
SEG_G = [(0, 0), (-1, 2)]


def _cayley_raw(F, G):
    return [tuple(v) + (1,) for v in F] + [tuple(v) + (0,) for v in G]


def cayley_segments_index2():
    """Cayley polytope of two segments, with F and G as vertex-index sets."""
    raw = _cayley_raw(SEG_F, SEG_G)
    P = Polytope.from_points(raw, name="cayley_segments_index2")
    return P, vertex_ids(P, raw[:2]), vertex_ids(P, raw[2:])


def cayley_segments_nongorenstein():
    raw = _cayley_raw(SEG_F, [(0, 0), (-1, 3)])
    P = Polytope.from_points(raw, name="cayley_segments_nongorenstein")
    return P, vertex_ids(P, raw[:2]), vertex_ids(P, raw[2:])


PAR_F = [(0, 0, 0), (1, 0, 0)]
PAR_G = [(0, 0, 0), (-1, 2, 0), (0, 0, 2), (-1, 2, 2)]


def cayley_segment_parallelogram():
    """Gorenstein Cayley polytope of a segment and a non-Gorenstein parallelogram."""
    raw = _cayley_raw(PAR_F, PAR_G)
    P = Polytope.from_points(raw, name="cayley_segment_parallelogram")
    return P, vertex_ids(P, raw[:2]), vertex_ids(P, raw[2:])


def parallelogram() -> Polytope:
    return Polytope.from_points(PAR_G, name="parallelogram")


DIAMOND_F = [(1, 0, 0, 0), (0, 1, 0, 0), (-1, 0, 0, 0), (0, -1, 0, 0)]
DIAMOND_G = [(0, 0, 1, 0), (0, 0, 0, 1), (0, 0, -1, 0), (0, 0, 0, -1)]


def half_lattice(d: int, support) -> list[list]:
    gen = [HALF if i in support else 0 for i in range(d)]
    return [gen] + [[int(i == j) for j in range(d)] for i in range(d)]


def diamond_pair_halflattice():
    """Cayley polytope of two diamonds over the lattice Z^4 + (1/2,1/2,1/2,1/2)."""
    gens = half_lattice(5, {0, 1, 2, 3})
    raw = _cayley_raw(DIAMOND_F, DIAMOND_G)
    P = normalize_polytope(5, gens, raw, "diamond_pair_halflattice")
    return P, vertex_ids(P, raw[:4], gens), vertex_ids(P, raw[4:], gens)


def diamond_parts():
    """The two diamonds as polytopes in the half lattice of R^4."""
    gens = half_lattice(4, {0, 1, 2, 3})
    F = normalize_polytope(4, gens, DIAMOND_F, "diamond_f")
    G = normalize_polytope(4, gens, DIAMOND_G, "diamond_g")
    return F, G


TETRA_A = [(0, 0, 1, 0, 0, 0), (1, 0, 1, 0, 0, 0), (0, 0, 0, 0, 0, 0), (-1, 2, 0, 0, 0, 0)]
TETRA_B = [(0, 0, 0, 0, 0, 1), (0, 0, 0, 1, 0, 1), (0, 0, 0, 0, 0, 0), (0, 0, 0, -1, 2, 0)]
# the six three-dimensional faces as (a-indices, b-indices), counted from 1
TETRA_FACES = [((1, 2, 3, 4), ()), ((), (1, 2, 3, 4)), ((1, 3), (1, 3)),
               ((1, 3), (2, 4)), ((2, 4), (1, 3)), ((2, 4), (2, 4))]


def cayley_tetra_pair_7d():
    """7-dimensional Cayley polytope of two tetrahedra; returns P and its six 3-faces."""
    gens = half_lattice(7, {2, 5})
    raw_a = [tuple(v) + (1,) for v in TETRA_A]
    raw_b = [tuple(v) + (0,) for v in TETRA_B]
    P = normalize_polytope(7, gens, raw_a + raw_b, "cayley_tetra_pair_7d")
    faces = []
    for ia, ib in TETRA_FACES:
        pts = [raw_a[i - 1] for i in ia] + [raw_b[i - 1] for i in ib]
        faces.append(vertex_ids(P, pts, gens))
    return P, faces


# --- nef-partitions -------------------------------------------------------------


def square_segments_nef() -> NefPartition:
    """[-1,1]^2 as the sum of two coordinate segments through 0."""
    A = Polytope.from_points([(-1, 0), (1, 0)])
    B = Polytope.from_points([(0, -1), (0, 1)])
    return NefPartition(minkowski_sum([A, B]), (A, B))


def trivial_nef(P: Polytope) -> NefPartition:
    return NefPartition(P, (P,))


def diamond_nef() -> NefPartition:
    F, G = diamond_parts()
    return NefPartition(minkowski_sum([F, G]), (F, G))


def hexagon_triangles_nef() -> NefPartition:
    """The reflexive hexagon as a sum of two lattice triangles through 0."""
    A = Polytope.from_points([(0, 0), (1, 0), (0, 1)])
    B = Polytope.from_points([(0, 0), (-1, 0), (0, -1)])
    return NefPartition(minkowski_sum([A, B]), (A, B))


def pentagon_split_nef() -> NefPartition:
    """A reflexive pentagon as the sum of a triangle and a segment through 0."""
    A = Polytope.from_points([(0, 0), (1, 0), (0, 1)])
    B = Polytope.from_points([(0, 0), (-1, -1)])
    host = minkowski_sum([A, B])
    return NefPartition(host, (A, B))


def cube_three_segments_nef() -> NefPartition:
    parts = []
    for i in range(3):
        e = tuple(int(i == j) for j in range(3))
        parts.append(Polytope.from_points([e, tuple(-x for x in e)]))
    return NefPartition(minkowski_sum(parts), tuple(parts))


def corpus_nef_partitions() -> dict[str, NefPartition]:
    out = {
        "square_segments": square_segments_nef(),
        "trivial_square": trivial_nef(reflexive_square()),
        "diamond_halflattice": diamond_nef(),
        "hexagon_triangles": hexagon_triangles_nef(),
        "cube_three_segments": cube_three_segments_nef(),
        "pentagon_split": pentagon_split_nef(),
    }
    return out


# --- normal forms and generated corpus ---------------------------------------------


def _hnf_key(cols: list[tuple[int, ...]]) -> tuple:
    # columns are edge vectors; row operations act as GL(Z) on the lattice
    A = [list(r) for r in zip(*cols)]
    H, _ = hermite_normal_form(A)
    return tuple(tuple(r) for r in H)


def simplex_normal_form(verts) -> tuple:
    """Invariant of a lattice simplex under affine unimodular maps."""
    verts = [tuple(v) for v in verts]
    best = None
    for order in permutations(range(len(verts))):
        v0 = verts[order[0]]
        cols = [tuple(a - b for a, b in zip(verts[i], v0)) for i in order[1:]]
        key = _hnf_key(cols) if cols else ()
        if best is None or key < best:
            best = key
    return best


def polygon_normal_form(P: Polytope) -> tuple:
    """Invariant of a lattice polygon (vertices in cyclic order) under unimodular maps."""
    cyc = cyclic_vertices(P)
    n = len(cyc)
    best = None
    for start in range(n):
        for step in (1, -1):
            seq = [cyc[(start + step * k) % n] for k in range(n)]
            cols = [tuple(a - b for a, b in zip(v, seq[0])) for v in seq[1:]]
            key = _hnf_key(cols)
            if best is None or key < best:
                best = key
    return best


def cyclic_vertices(P: Polytope) -> list[tuple[int, ...]]:
    """Vertices of a full-dimensional polygon in counterclockwise order."""
    pts = sorted(P.vertices)
    return _monotone_chain(pts)


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _monotone_chain(pts):
    if len(pts) <= 2:
        return list(pts)
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _cube_symmetries(d: int):
    for perm in permutations(range(d)):
        for flips in product((False, True), repeat=d):
            yield perm, flips


@lru_cache(maxsize=None)
def grid_simplices(d: int) -> tuple[Polytope, ...]:
    """One representative per unimodular class of d-simplices with vertices in {0,1,2}^d."""
    grid = list(product(range(3), repeat=d))
    syms = list(_cube_symmetries(d))
    orbit_reps = set()
    for S in combinations(grid, d + 1):
        diffs = [[a - b for a, b in zip(p, S[0])] for p in S[1:]]
        if rank(diffs) != d:
            continue
        best = None
        for perm, flips in syms:
            img = tuple(sorted(tuple(2 - p[perm[i]] if flips[i] else p[perm[i]]
                                     for i in range(d)) for p in S))
            if best is None or img < best:
                best = img
        orbit_reps.add(best)
    classes = {}
    for S in sorted(orbit_reps):
        key = simplex_normal_form(S)
        classes.setdefault(key, S)
    out = []
    for k, (key, S) in enumerate(sorted(classes.items(), key=lambda kv: kv[1])):
        out.append(Polytope.from_points(S, name=f"grid_simplex_{d}d_{k}"))
    return tuple(out)


def _edge_distance_one(cyc) -> bool:
    n = len(cyc)
    for i in range(n):
        a, b = cyc[i], cyc[(i + 1) % n]
        # outward primitive normal of a counterclockwise edge
        nx, ny = b[1] - a[1], a[0] - b[0]
        g = gcd(nx, ny)
        if (nx * a[0] + ny * a[1]) // g != 1:
            return False
    return True


@lru_cache(maxsize=None)
def reflexive_polygons(box: int = 2) -> tuple[Polytope, ...]:
    """Reflexive polygons with vertices in [-box, box]^2, one per unimodular class."""
    pts = [p for p in product(range(-box, box + 1), repeat=2) if p != (0, 0)]
    classes = {}
    for k in range(3, 7):
        for S in combinations(pts, k):
            cyc = _monotone_chain(sorted(S))
            if len(cyc) != k:
                continue
            # counterclockwise hull: 0 strictly inside at distance 1 from every edge
            if not _edge_distance_one(cyc):
                continue
            P = Polytope.from_points(cyc)
            key = polygon_normal_form(P)
            if key not in classes:
                classes[key] = P
    out = []
    for i, (key, P) in enumerate(sorted(classes.items(), key=lambda kv: (len(kv[1].vertices),
                                                                          kv[1].vertices))):
        out.append(P.with_name(f"reflexive_polygon_{i}"))
    return tuple(out)


def worked_examples() -> list[Polytope]:
    return [cayley_segments_index2()[0], cayley_segments_nongorenstein()[0],
            cayley_segment_parallelogram()[0], parallelogram(),
            diamond_pair_halflattice()[0], cayley_tetra_pair_7d()[0], segment(2)]


def small_polytopes() -> list[Polytope]:
    return [segment(1), segment(2), unit_cube(2), unit_cube(3), standard_simplex(2),
            standard_simplex(3), reflexive_square(), cross_polytope(3),
            lattice_pyramid(reflexive_square())]
