"""Facet enumeration for cones and polytopes by double description.

Everything is integer: rays are kept primitive after every combination
step, so intermediate sizes stay small.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

from gorenstein.core.intmat import dot, inverse, primitive, rank

Vector = tuple[int, ...]


def _independent_rows(gens: Sequence[Vector], dim: int) -> list[int]:
    chosen: list[int] = []
    rows: list[Vector] = []
    for i, g in enumerate(gens):
        if rank(rows + [g]) > len(rows):
            chosen.append(i)
            rows.append(g)
            if len(rows) == dim:
                break
    return chosen


def cone_facets(gens: Sequence[Vector]) -> list[tuple[Vector, int]]:
    """Facet normals of the full-dimensional pointed cone spanned by ``gens``.

    Returns ``(normal, tight)`` pairs: ``normal`` is a primitive integer
    vector with ``<normal, g> >= 0`` for every generator, and ``tight`` is a
    bitmask of the generators lying on the facet.
    """
    gens = [tuple(g) for g in gens]
    dim = len(gens[0])
    base = _independent_rows(gens, dim)
    if len(base) < dim:
        raise ValueError("generators do not span the ambient space")

    inv = inverse([gens[i] for i in base])
    rays: list[Vector] = []
    for j in range(dim):
        col = [inv[i][j] for i in range(dim)]
        den = 1
        for x in col:
            den = den * x.denominator // gcd(den, x.denominator)
        rays.append(primitive([int(x * den) for x in col]))

    processed = 0
    for i in base:
        processed |= 1 << i

    def tight_mask(r: Vector, mask: int) -> int:
        out = 0
        m = mask
        while m:
            low = m & -m
            idx = low.bit_length() - 1
            if dot(gens[idx], r) == 0:
                out |= low
            m ^= low
        return out

    tights = [tight_mask(r, processed) for r in rays]

    for gi, g in enumerate(gens):
        if processed >> gi & 1:
            continue
        vals = [dot(g, r) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zer = [k for k, v in enumerate(vals) if v == 0]
        processed |= 1 << gi
        new_rays: list[Vector] = []
        new_tights: list[int] = []
        for k in pos + zer:
            new_rays.append(rays[k])
            new_tights.append(tights[k] | ((1 << gi) if vals[k] == 0 else 0))
        for p in pos:
            for q in neg:
                common = tights[p] & tights[q]
                if common.bit_count() < dim - 2:
                    continue
                if any(w != p and w != q and tights[w] & common == common
                       for w in range(len(rays))):
                    continue
                vp, vq = vals[p], vals[q]
                r = primitive([vp * b - vq * a for a, b in zip(rays[p], rays[q])])
                new_rays.append(r)
                new_tights.append(tight_mask(r, processed))
        rays, tights = new_rays, new_tights

    out = sorted(zip(rays, tights))
    return out


def polytope_facets(points: Sequence[Vector]) -> list[tuple[Vector, int, int]]:
    """Facets of a full-dimensional polytope given by (possibly redundant) points.

    Returns ``(a, b, tight)`` triples describing ``<a, x> + b >= 0``, with
    ``tight`` a bitmask over ``points``; sorted by (a, b).
    """
    lifted = [tuple(p) + (1,) for p in points]
    out = []
    for normal, tight in cone_facets(lifted):
        out.append((normal[:-1], normal[-1], tight))
    out.sort(key=lambda f: (f[0], f[1]))
    return out


def extreme_points(points: Sequence[Vector], facets: Sequence[tuple[Vector, int, int]]
                   ) -> list[int]:
    """Indices of ``points`` that are vertices, given the polytope's facets."""
    if not points:
        return []
    dim = len(points[0])
    out = []
    for i in range(len(points)):
        normals = [f[0] for f in facets if f[2] >> i & 1]
        if len(normals) >= dim and rank(normals) == dim:
            out.append(i)
    return out
