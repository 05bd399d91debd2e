"""Lattice-point enumeration kernels.

A polytope is described level by level: the rows ``ptr[j]:ptr[j+1]`` of
``A`` (zero padded to ``e`` columns), ``b`` and ``c`` are the facet
inequalities of the projection onto the first ``j+1`` coordinates, read as

    <A[r, :j+1], x> + k * b[r] + c[r] >= 0

for the k-th dilate. ``c`` carries the -1 shifts that turn strict facet
inequalities into closed ones for interior counts. Each level bounds one
coordinate given the previous ones, so the walk only visits prefixes of
points of the projected dilates.

Two interchangeable backends: a numba-compiled depth-first walk and a
vectorized numpy breadth-first expansion. Set ``GORENSTEIN_NO_NUMBA=1`` to
force the numpy path; it is also used when numba is missing or when the
coefficients could overflow int64 (the numpy path then runs on Python
ints via object arrays).
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def deco(f):
            return f
        return deco

INT64_SAFE = 2 ** 62


def backend() -> str:
    """Backend chosen by the environment: "numba" or "numpy"."""
    if not HAVE_NUMBA or os.environ.get("GORENSTEIN_NO_NUMBA", "") not in ("", "0"):
        return "numpy"
    return "numba"


@njit(cache=True)
def _bounds(A, b, c, ptr, k, x, j):
    lo = -(2 ** 62)
    hi = 2 ** 62
    for r in range(ptr[j], ptr[j + 1]):
        s = k * b[r] + c[r]
        for i in range(j):
            s += A[r, i] * x[i]
        a = A[r, j]
        if a > 0:
            v = -(s // a)
            if v > lo:
                lo = v
        elif a < 0:
            v = s // (-a)
            if v < hi:
                hi = v
        elif s < 0:
            return 1, 0
    return lo, hi


@njit(cache=True)
def _walk(A, b, c, ptr, k, out, fill):
    e = ptr.shape[0] - 1
    x = np.zeros(e, np.int64)
    hi = np.zeros(e, np.int64)
    count = 0
    lo0, hi0 = _bounds(A, b, c, ptr, k, x, 0)
    if lo0 > hi0:
        return 0
    x[0] = lo0
    hi[0] = hi0
    j = 0
    while True:
        if x[j] > hi[j]:
            j -= 1
            if j < 0:
                break
            x[j] += 1
            continue
        if j == e - 1:
            if fill:
                for v in range(x[j], hi[j] + 1):
                    for i in range(e - 1):
                        out[count, i] = x[i]
                    out[count, e - 1] = v
                    count += 1
            else:
                count += hi[j] - x[j] + 1
            x[j] = hi[j] + 1
            continue
        lo1, hi1 = _bounds(A, b, c, ptr, k, x, j + 1)
        if lo1 <= hi1:
            j += 1
            x[j] = lo1
            hi[j] = hi1
        else:
            x[j] += 1
    return count


def _expand(A, b, c, ptr, k, want_points):
    e = len(ptr) - 1
    dtype = A.dtype
    prefix = np.zeros((1, 0), dtype=dtype)
    for j in range(e):
        rows = slice(ptr[j], ptr[j + 1])
        S = prefix @ A[rows, :j].T + (k * b[rows] + c[rows])
        a = A[rows, j]
        n = prefix.shape[0]
        if n == 0:
            return 0 if not want_points else np.zeros((0, e), dtype=dtype)
        pos, neg, zero = a > 0, a < 0, a == 0
        lo = (-(S[:, pos] // a[pos])).max(axis=1)
        hi = (S[:, neg] // (-a[neg])).min(axis=1)
        ok = lo <= hi
        if zero.any():
            ok &= (S[:, zero] >= 0).all(axis=1)
        lo, hi, prefix = lo[ok], hi[ok], prefix[ok]
        counts = hi - lo + 1
        if j == e - 1 and not want_points:
            return int(counts.sum())
        counts = counts.astype(np.int64)
        total = int(counts.sum())
        starts = np.repeat(np.cumsum(counts) - counts, counts)
        offs = (np.arange(total, dtype=np.int64) - starts).astype(dtype)
        col = np.repeat(lo, counts) + offs
        prefix = np.column_stack([np.repeat(prefix, counts, axis=0), col]) if j else col.reshape(-1, 1)
    return prefix if want_points else prefix.shape[0]


def _pack(levels, k, dtype):
    e = len(levels)
    rows = sum(len(lv[1]) for lv in levels)
    A = np.zeros((rows, e), dtype=dtype)
    b = np.zeros(rows, dtype=dtype)
    c = np.zeros(rows, dtype=dtype)
    ptr = np.zeros(e + 1, dtype=np.int64)
    r = 0
    for j, (Aj, bj, cj) in enumerate(levels):
        for row, bb, cc in zip(Aj, bj, cj):
            A[r, : len(row)] = row
            b[r] = bb
            c[r] = cc
            r += 1
        ptr[j + 1] = r
    return A, b, c, ptr


def _magnitude(levels, k, coord_bound):
    worst = 0
    for Aj, bj, cj in levels:
        for row, bb, cc in zip(Aj, bj, cj):
            s = abs(k * bb) + abs(cc) + sum(abs(a) for a in row) * coord_bound
            worst = max(worst, s)
    return worst


def enumerate_levels(levels, k: int, coord_bound: int, want_points: bool,
                     which: str | None = None):
    """Count (or list) the integer points described by ``levels`` at dilation k.

    ``levels[j]`` is ``(rows, offsets, shifts)`` for coordinate j;
    ``coord_bound`` bounds |x_i| over the dilate and guards int64 overflow.
    Returns an int, or an (N, e) array of points when ``want_points``.
    """
    which = which or backend()
    safe = _magnitude(levels, k, coord_bound) < INT64_SAFE
    if not safe:
        A, b, c, ptr = _pack(levels, k, object)
        return _expand(A, b, c, ptr, k, want_points)
    A, b, c, ptr = _pack(levels, k, np.int64)
    if which == "numpy":
        return _expand(A, b, c, ptr, np.int64(k), want_points)
    n = _walk(A, b, c, ptr, np.int64(k), np.zeros((1, 1), np.int64), False)
    if not want_points:
        return int(n)
    out = np.zeros((n, len(levels)), np.int64)
    _walk(A, b, c, ptr, np.int64(k), out, True)
    return out
