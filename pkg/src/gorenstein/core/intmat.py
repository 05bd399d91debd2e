"""Exact integer and rational linear algebra on small dense matrices.

Matrices are lists of rows of Python ints (or Fractions where noted).
Sizes in this package stay below ~10x300, so plain lists beat anything
clever; all routines are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def vecmat(v: Sequence, A: Sequence[Sequence]) -> list:
    """Row vector times matrix."""
    if not A:
        return []
    n = len(A[0])
    return [sum(v[i] * A[i][j] for i in range(len(v))) for j in range(n)]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def content(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = content(v)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def det(A: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def row_echelon(A: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; returns (rref, pivot columns)."""
    M = [[Fraction(x) for x in row] for row in A]
    if not M:
        return M, []
    m, n = len(M), len(M[0])
    pivots: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return M, pivots


def rank(A: Sequence[Sequence]) -> int:
    if not A:
        return 0
    return len(row_echelon(A)[1])


def solve(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Solve A x = b over Q.

    Returns one solution (free variables set to 0) or None when the system
    is inconsistent.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    aug = [list(A[i]) + [b[i]] for i in range(m)]
    R, piv = row_echelon(aug)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv):
        x[c] = R[i][n]
    return x


def nullspace(A: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of {x : A x = 0} over Q."""
    n = len(A[0])
    R, piv = row_echelon(A)
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for i, c in enumerate(piv):
            x[c] = -R[i][f]
        basis.append(x)
    return basis


def inverse(A: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(A)
    aug = [list(A[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    R, piv = row_echelon(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R[:n]]


def inverse_unimodular(A: Sequence[Sequence[int]]) -> Matrix:
    inv = inverse(A)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


# --- Smith normal form -----------------------------------------------------


def smith_normal_form(A: Sequence[Sequence[int]], pivot: str = "min"
                      ) -> tuple[Matrix, Matrix, Matrix]:
    """Return (D, U, V) with U A V = D in Smith normal form.

    U and V are unimodular. ``pivot`` selects the pivoting rule: "min"
    takes the smallest nonzero entry of the active block, "first" the first
    nonzero entry in column-major order. Both yield the same D.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, r)) for r in A]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        cand = [(i, j) for j in range(t, n) for i in range(t, m) if D[i][j]]
        if not cand:
            break
        if pivot == "min":
            pi, pj = min(cand, key=lambda ij: (abs(D[ij[0]][ij[1]]), ij[1], ij[0]))
        elif pivot == "first":
            pi, pj = cand[0]
        else:
            raise ValueError(f"unknown pivot rule {pivot!r}")
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            changed = False
            for i in range(t + 1, m):
                while D[i][t]:
                    add_row(i, t, -(D[i][t] // D[t][t]))
                    if D[i][t]:
                        swap_rows(i, t)
                        changed = True
            for j in range(t + 1, n):
                while D[t][j]:
                    add_col(j, t, -(D[t][j] // D[t][t]))
                    if D[t][j]:
                        swap_cols(j, t)
                        changed = True
            if changed:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if D[i][j] % D[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return D, U, V


def invariant_factors(A: Sequence[Sequence[int]], pivot: str = "min") -> list[int]:
    D, _, _ = smith_normal_form(A, pivot)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


# --- Hermite normal form ---------------------------------------------------


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hermite_normal_form(A: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row-style HNF: returns (H, U) with U A = H, U unimodular.

    H is in row echelon form with positive pivots and the entries above
    each pivot reduced into [0, pivot). Zero rows sit at the bottom.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(map(int, r)) for r in A]
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            if H[i][c] == 0:
                continue
            a, b = H[r][c], H[i][c]
            g, x, y = _xgcd(a, b)
            ag, bg = a // g, b // g
            Hr, Hi = H[r], H[i]
            H[r] = [x * p + y * q for p, q in zip(Hr, Hi)]
            H[i] = [-bg * p + ag * q for p, q in zip(Hr, Hi)]
            Ur, Ui = U[r], U[i]
            U[r] = [x * p + y * q for p, q in zip(Ur, Ui)]
            U[i] = [-bg * p + ag * q for p, q in zip(Ur, Ui)]
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-v for v in H[r]]
            U[r] = [-v for v in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                H[i] = [p - q * s for p, s in zip(H[i], H[r])]
                U[i] = [p - q * s for p, s in zip(U[i], U[r])]
        r += 1
    return H, U


# --- lattices --------------------------------------------------------------


def saturation(rows: Sequence[Sequence[int]], n: int | None = None
               ) -> tuple[Matrix, Matrix, int]:
    """Saturated basis of lin(rows) ∩ Z^n with a unimodular completion.

    Returns (W, C, k): W is an n x n unimodular matrix whose first k rows
    form a basis of the saturated lattice, and C = W^{-1}, so integer
    coordinates of x in the basis W are x C.
    """
    if n is None:
        n = len(rows[0])
    if not rows:
        return identity(n), identity(n), 0
    D, _, V = smith_normal_form(rows)
    k = sum(1 for i in range(min(len(D), n)) if D[i][i])
    W = inverse_unimodular(V)
    return W, V, k


def lattice_index(rows: Sequence[Sequence[int]]) -> int:
    """Index of the Z-span of ``rows`` inside its saturation."""
    f = invariant_factors(rows)
    out = 1
    for x in f:
        out *= x
    return out


def lll_reduce(B: Sequence[Sequence[int]], delta: Fraction = Fraction(3, 4)
               ) -> tuple[Matrix, Matrix]:
    """LLL-reduce linearly independent integer rows.

    Returns (R, T) with R = T B and T unimodular. Exact rational
    Gram-Schmidt; only meant for a handful of rows.
    """
    b = [list(map(int, r)) for r in B]
    k = len(b)
    T = identity(k)
    if k <= 1:
        return b, T

    def gso():
        bs: list[list[Fraction]] = []
        mu = [[Fraction(0)] * k for _ in range(k)]
        norms = []
        for i in range(k):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = dot(b[i], bs[j]) / norms[j]
                v = [a - mu[i][j] * c for a, c in zip(v, bs[j])]
            bs.append(v)
            norms.append(dot(v, v))
        return mu, norms

    mu, norms = gso()
    i = 1
    while i < k:
        for j in range(i - 1, -1, -1):
            q = round(mu[i][j])
            if q:
                b[i] = [x - q * y for x, y in zip(b[i], b[j])]
                T[i] = [x - q * y for x, y in zip(T[i], T[j])]
                mu, norms = gso()
        if norms[i] >= (delta - mu[i][i - 1] ** 2) * norms[i - 1]:
            i += 1
        else:
            b[i], b[i - 1] = b[i - 1], b[i]
            T[i], T[i - 1] = T[i - 1], T[i]
            mu, norms = gso()
            i = max(i - 1, 1)
    return b, T
