"""Nef-partitions and their Cayley polytopes.

The Cayley polytope of P_1, ..., P_r sits in M ⊕ Z^(r-1): a vertex v of P_i
becomes (v, e_i) with the last Cayley coordinate deleted, so points of
P_r carry all-zero Cayley coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from gorenstein.core.intmat import det, rank, saturation
from gorenstein.core.polytope import Polytope, facets, lattice_points
from gorenstein.duality import dual_gorenstein
from gorenstein.ehrhart import classify, hstar_profile
from gorenstein.errors import (
    MixedLattices,
    NotGorenstein,
    SimplexNotCayleyAligned,
    TheoremViolation,
)
from gorenstein.joins import is_irreducible, join_kind, stacked_index
from gorenstein.polys import UniPoly

MAX_PARTS = 12


@dataclass(frozen=True)
class NefPartition:
    host: Polytope
    parts: tuple[Polytope, ...]

    @property
    def r(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class SpecialSimplex:
    points: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(sorted(tuple(p) for p in self.points)))


def _same_lattice(polys: Sequence[Polytope]) -> None:
    if not polys:
        raise ValueError("need at least one polytope")
    d, lat = polys[0].ambient_dim, polys[0].lattice
    for Q in polys[1:]:
        if Q.ambient_dim != d or Q.lattice != lat:
            raise MixedLattices("polytopes live in different lattices")


def minkowski_sum(parts: Sequence[Polytope]) -> Polytope:
    """Hull of all vertex sums."""
    _same_lattice(parts)
    acc = [tuple([0] * parts[0].ambient_dim)]
    for Q in parts:
        pts = {tuple(a + b for a, b in zip(p, v)) for p in acc for v in Q.vertices}
        acc = list(Polytope.from_points(pts).vertices)
    return Polytope.from_points(acc, parts[0].ambient_dim, parts[0].lattice)


def _cayley_lattice(lattice, r: int):
    if lattice is None:
        return None
    d = len(lattice)
    rows = [tuple(row) + (Fraction(0),) * (r - 1) for row in lattice]
    for i in range(r - 1):
        rows.append(tuple(Fraction(0) for _ in range(d)) +
                    tuple(Fraction(int(i == j)) for j in range(r - 1)))
    return tuple(rows)


def cayley_polytope(parts: Sequence[Polytope], name: str | None = None) -> Polytope:
    """P_1 * ... * P_r in M ⊕ Z^(r-1)."""
    _same_lattice(parts)
    r = len(parts)
    if r == 1:
        return parts[0] if name is None else parts[0].with_name(name)
    pts = []
    for i, Q in enumerate(parts):
        tail = tuple(int(i == j) for j in range(r - 1))
        pts.extend(tuple(v) + tail for v in Q.vertices)
    d = parts[0].ambient_dim
    return Polytope.from_points(pts, d + r - 1, _cayley_lattice(parts[0].lattice, r), name)


def cayley_level(x: Sequence[int], d: int, r: int) -> int | None:
    """Index i of the part whose layer contains x, or None."""
    tail = list(x[d:])
    if len(tail) != r - 1 or any(c not in (0, 1) for c in tail) or sum(tail) > 1:
        return None
    return tail.index(1) if sum(tail) == 1 else r - 1


def is_special_simplex(Q: Polytope, points: Sequence[Sequence[int]]) -> bool:
    """Lattice points of Q, affinely independent, each facet containing all but one."""
    k = len(points)
    if not all(Q.contains(p) for p in points):
        return False
    diffs = [[a - b for a, b in zip(p, points[0])] for p in points[1:]]
    if diffs and rank(diffs) != k - 1:
        return False
    for H in facets(Q):
        if sum(1 for p in points if H.value(p) == 0) != k - 1:
            return False
    return True


def dual_simplex_points(cayley: Polytope, r: int) -> list[tuple[int, ...]]:
    """e_1^*, ..., e_r^* as points of the dual Gorenstein polytope's coordinates."""
    D = cayley.ambient_dim
    d = D - (r - 1)
    fr = cayley.frame
    out = []
    for i in range(r):
        if i < r - 1:
            a = [0] * D
            a[d + i] = 1
            b = 0
        else:
            a = [0] * d + [-1] * (r - 1)
            b = 1
        # <a, origin + y @ basis> + b in local coordinates
        loc = tuple(sum(row[c] * a[c] for c in range(D)) for row in fr.basis)
        off = sum(x * y for x, y in zip(a, fr.origin)) + b
        out.append(loc + (off,))
    return out


def nef_validate(candidate: NefPartition) -> tuple[bool, str]:
    """Check a nef-partition; returns (ok, reason code)."""
    parts, host = candidate.parts, candidate.host
    try:
        _same_lattice(list(parts) + [host])
    except (MixedLattices, ValueError):
        return False, "mixed_lattices"
    d = host.ambient_dim
    zero = (0,) * d
    if any(Q.is_empty for Q in parts):
        return False, "empty_part"
    if not all(Q.contains(zero) for Q in parts):
        return False, "part_missing_origin"
    if minkowski_sum(parts).vertices != host.vertices:
        return False, "sum_mismatch"
    if not host.is_full_dimensional:
        return False, "host_not_full_dimensional"
    cls = classify(host)
    if not (cls.reflexive and cls.interior_point == zero):
        return False, "host_not_reflexive"
    r = len(parts)
    cay = cayley_polytope(parts)
    cc = classify(cay)
    if cc.gorenstein_index != r or cay.dim != d + r - 1:
        return False, "cayley_not_gorenstein"
    if r > 1:
        simplex = [zero + tuple(int(i == j) for j in range(r - 1)) for i in range(r)]
        if not is_special_simplex(cay, simplex):
            return False, "no_special_simplex"
        if not is_special_simplex(dual_gorenstein(cay).dual, dual_simplex_points(cay, r)):
            return False, "no_dual_special_simplex"
    return True, "ok"


def special_simplices(P: Polytope, r: int) -> list[SpecialSimplex]:
    """All special (r-1)-simplices among the lattice points of P."""
    pts = lattice_points(P)
    if P.dim < 1:
        return [SpecialSimplex((p,)) for p in pts] if r == 1 else []
    hs = facets(P)
    on = [[H.value(p) == 0 for H in hs] for p in pts]
    out = []
    counts = [0] * len(hs)
    chosen: list[int] = []

    def rec(start):
        left = r - len(chosen)
        if any(r - 1 - c > left for c in counts):
            return
        if left == 0:
            if all(c == r - 1 for c in counts):
                cand = [pts[i] for i in chosen]
                diffs = [[a - b for a, b in zip(p, cand[0])] for p in cand[1:]]
                if not diffs or rank(diffs) == r - 1:
                    out.append(SpecialSimplex(tuple(cand)))
            return
        for i in range(start, len(pts)):
            if any(o and c == r - 1 for o, c in zip(on[i], counts)):
                continue
            chosen.append(i)
            for k, o in enumerate(on[i]):
                counts[k] += o
            rec(i + 1)
            for k, o in enumerate(on[i]):
                counts[k] -= o
            chosen.pop()

    rec(0)
    if out and hstar_profile(P).codegree > r:
        raise TheoremViolation(f"special {r - 1}-simplex but codegree above {r}", module="nef")
    return out


def nef_from_simplex(cayley: Polytope, r: int, S: SpecialSimplex) -> NefPartition:
    """Recover the nef-partition from a Cayley-aligned special simplex."""
    if classify(cayley).gorenstein_index != r:
        raise NotGorenstein(f"Cayley polytope is not Gorenstein of index {r}")
    D = cayley.ambient_dim
    d = D - (r - 1)
    levels = [cayley_level(v, d, r) for v in cayley.vertices]
    if any(lv is None for lv in levels):
        raise SimplexNotCayleyAligned("vertices do not lie on the Cayley layers")
    slev = [cayley_level(p, d, r) for p in S.points]
    if len(S.points) != r or None in slev or sorted(slev) != list(range(r)):
        raise SimplexNotCayleyAligned("simplex points are not one per Cayley layer")
    anchor = {lv: tuple(p[:d]) for lv, p in zip(slev, S.points)}
    lat = None
    if cayley.lattice is not None:
        lat = tuple(tuple(row[:d]) for row in cayley.lattice[:d])
    parts = []
    for i in range(r):
        p = anchor[i]
        verts = [tuple(a - b for a, b in zip(v[:d], p))
                 for v, lv in zip(cayley.vertices, levels) if lv == i]
        parts.append(Polytope.from_points(verts, d, lat))
    host = minkowski_sum(parts)
    return NefPartition(host, tuple(parts))


def _check_parts(parts) -> None:
    if len(parts) > MAX_PARTS:
        raise ValueError(f"more than {MAX_PARTS} parts; raise nef.MAX_PARTS to proceed")


def _proper_subsets(r: int):
    for s in range(1, r):
        yield from combinations(range(r), s)


def nef_irreducible(P: NefPartition) -> bool:
    """No proper subset of parts sums to a polytope with 0 in its relative interior."""
    _check_parts(P.parts)
    d = P.host.ambient_dim
    zero = (0,) * d
    reducible = any(minkowski_sum([P.parts[i] for i in I]).contains(zero, relative_interior=True)
                    for I in _proper_subsets(P.r))
    via_cayley = is_irreducible(dual_gorenstein(cayley_polytope(P.parts)))
    if via_cayley == reducible:
        raise TheoremViolation("nef irreducibility disagrees with the Cayley polytope",
                               module="nef")
    return not reducible


def _set_partitions(items: list[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _span_rows(Q: Polytope) -> list[list[int]]:
    return [list(v) for v in Q.vertices if any(v)]


@dataclass
class SplitReport:
    z_split: list[list[int]] | None
    direct_sum_splits: list[list[list[int]]]
    z_join_agrees: bool
    free_sum_hstar: bool | None
    stringy_products: list[tuple[object, object]]


def split_over_Z(P: NefPartition, experiment: bool = False) -> SplitReport:
    """Coarsest direct-sum splitting of the partition over Z, if any."""
    from gorenstein.stringy import stringy_e

    _check_parts(P.parts)
    d = P.host.ambient_dim
    zero = (0,) * d
    r = P.r
    cay = cayley_polytope(P.parts)
    parts_by_size = sorted((p for p in _set_partitions(list(range(r))) if len(p) >= 2),
                           key=lambda p: (len(p), sorted(map(sorted, p))))
    found = None
    singletons_over_z = False
    direct = []
    products = []
    for blocks in parts_by_size:
        blocks = [sorted(b) for b in blocks]
        sums = [minkowski_sum([P.parts[i] for i in b]) for b in blocks]
        ok = True
        for Q in sums:
            if not Q.contains(zero, relative_interior=True):
                ok = False
                break
            c = classify(Q)
            if not (c.reflexive and c.interior_point == zero):
                ok = False
                break
        if not ok or sum(Q.dim for Q in sums) != d:
            continue
        direct.append(blocks)
        rows = []
        for Q in sums:
            W, _, k = saturation(_span_rows(Q), d)
            rows.extend(W[:k])
        over_z = abs(det(rows)) == 1
        faces = []
        for b in blocks:
            faces.append(frozenset(i for i, v in enumerate(cay.vertices)
                                   if cayley_level(v, d, r) in b))
        zj = stacked_index(cay, faces) == 1
        if len(blocks) == 2:
            zj = zj and join_kind(cay, faces[0], faces[1]).kind == "z_join"
        if zj != over_z:
            raise TheoremViolation("Z-splitting disagrees with the Z-join test", module="nef")
        if experiment and len(blocks) == 2:
            whole = stringy_e(dual_gorenstein(cay)).e_st
            pieces = [stringy_e(dual_gorenstein(cayley_polytope([P.parts[i] for i in b]))).e_st
                      for b in blocks]
            products.append((whole, pieces[0] * pieces[1]))
        if over_z and found is None:
            found = blocks
        if over_z and len(blocks) == r:
            singletons_over_z = True
    free = None
    if singletons_over_z:
        Q = Polytope.from_points([v for part in P.parts for v in part.vertices], d,
                                 P.host.lattice)
        prod = UniPoly([1])
        for part in P.parts:
            prod = prod * hstar_profile(part).hstar
        free = hstar_profile(Q).hstar == prod
    return SplitReport(found, direct, True, free, products)
