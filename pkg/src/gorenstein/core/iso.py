"""Affine unimodular equivalence of lattice polytopes by frame matching.

Exponential in the number of vertices; fine for the handful of
self-duality and biduality checks it serves.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from gorenstein.core.intmat import det, inverse, matmul, rank, transpose
from gorenstein.core.polytope import Polytope


@dataclass(frozen=True)
class IsoWitness:
    """x -> matrix @ x + translation, in the local coordinates of P and Q."""

    matrix: tuple[tuple[int, ...], ...]
    translation: tuple[int, ...]
    vertex_map: tuple[int, ...]


def _frame(verts) -> list[int]:
    e = len(verts[0])
    chosen = [0]
    rows: list[list[int]] = []
    for i in range(1, len(verts)):
        d = [a - b for a, b in zip(verts[i], verts[0])]
        if rank(rows + [d]) > len(rows):
            rows.append(d)
            chosen.append(i)
            if len(rows) == e:
                break
    return chosen


def _signatures(P: Polytope):
    facets = P.local_facets
    n = len(P.vertices)
    sig = []
    for i in range(n):
        sizes = sorted(m.bit_count() for _, _, m in facets if m >> i & 1)
        sig.append(tuple(sizes))
    return sig


def _pair_info(verts, i, j, facet_masks):
    g = 0
    for a, b in zip(verts[i], verts[j]):
        g = gcd(g, a - b)
    common = sum(1 for m in facet_masks if m >> i & 1 and m >> j & 1)
    return g, common


def lattice_isomorphic(P: Polytope, Q: Polytope) -> tuple[bool, IsoWitness | None]:
    """Whether an affine unimodular map sends P onto Q, with a witness."""
    if P.is_empty or Q.is_empty:
        return (P.is_empty and Q.is_empty), None
    if P.dim != Q.dim or len(P.vertices) != len(Q.vertices):
        return False, None
    e = P.dim
    pv, qv = P.local_vertices, Q.local_vertices
    if e == 0:
        return True, IsoWitness((), (), (0,))
    pf = [m for _, _, m in P.local_facets]
    qf = [m for _, _, m in Q.local_facets]
    if len(pf) != len(qf):
        return False, None
    ps, qs = _signatures(P), _signatures(Q)
    if sorted(ps) != sorted(qs):
        return False, None
    if P.count_points(1) != Q.count_points(1):
        return False, None

    frame = _frame(pv)
    Dp = transpose([[a - b for a, b in zip(pv[i], pv[frame[0]])] for i in frame[1:]])
    Dp_inv = inverse(Dp)
    qset = {v: i for i, v in enumerate(qv)}
    n = len(qv)
    assign: list[int] = []

    def finish():
        q0 = qv[assign[0]]
        Dq = transpose([[a - b for a, b in zip(qv[j], q0)] for j in assign[1:]])
        A = matmul(Dq, Dp_inv)
        if any(x.denominator != 1 for row in A for x in row):
            return None
        A = [[int(x) for x in row] for row in A]
        if abs(det(A)) != 1:
            return None
        p0 = pv[frame[0]]
        t = [q0[r] - sum(A[r][c] * p0[c] for c in range(e)) for r in range(e)]
        vmap = []
        for v in pv:
            img = tuple(sum(A[r][c] * v[c] for c in range(e)) + t[r] for r in range(e))
            j = qset.get(img)
            if j is None:
                return None
            vmap.append(j)
        if len(set(vmap)) != n:
            return None
        return IsoWitness(tuple(map(tuple, A)), tuple(t), tuple(vmap))

    def search(k):
        if k == len(frame):
            return finish()
        i = frame[k]
        for j in range(n):
            if j in assign or ps[i] != qs[j]:
                continue
            ok = all(_pair_info(pv, frame[s], i, pf) == _pair_info(qv, assign[s], j, qf)
                     for s in range(k))
            if not ok:
                continue
            assign.append(j)
            w = search(k + 1)
            if w is not None:
                return w
            assign.pop()
        return None

    w = search(0)
    return (w is not None), w
