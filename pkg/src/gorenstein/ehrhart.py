"""Ehrhart data: h*-polynomials, degree and codegree, Gorenstein classification."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from gorenstein.core.intmat import dot
from gorenstein.core.polytope import Polytope
from gorenstein.errors import DegeneratePolytope, InternalInconsistency
from gorenstein.polys import UniPoly


@dataclass(frozen=True)
class HStarProfile:
    hstar: UniPoly
    degree: int
    codegree: int
    ehrhart_counts: tuple[int, ...]

    @property
    def leading(self) -> int:
        return self.hstar[self.degree]


@dataclass(frozen=True)
class Classification:
    reflexive: bool
    gorenstein_index: int | None
    interior_point: tuple[int, ...] | None  # ambient point of rP

    @property
    def is_gorenstein(self) -> bool:
        return self.gorenstein_index is not None


def _hstar_from_counts(counts: list[int], e: int) -> UniPoly:
    # (1 - t)^(e+1) * sum f(k) t^k, keeping degrees <= e
    out = []
    for i in range(e + 1):
        out.append(sum((-1) ** j * comb(e + 1, j) * counts[i - j] for j in range(i + 1)))
    return UniPoly(out)


def hstar_profile(P: Polytope) -> HStarProfile:
    """h* of P with respect to the lattice of its affine span."""
    got = P._memo.get("hstar")
    if got is not None:
        return got
    if P.is_empty:
        prof = HStarProfile(UniPoly([1]), 0, 0, ())
        P._memo["hstar"] = prof
        return prof
    e = P.dim
    counts = [P.count_points(k) for k in range(e + 1)]
    h = _hstar_from_counts(counts, e)
    if not h.nonnegative() or h[0] != 1:
        raise InternalInconsistency(f"h* = {h} has a bad coefficient")
    deg = h.degree
    codeg = e + 1 - deg
    # direct search for the first dilate with interior points
    first = None
    for k in range(1, e + 2):
        n = P.count_points(k, interior=True)
        if n:
            first = (k, n)
            break
    if first is None or first[0] != codeg:
        raise InternalInconsistency(
            f"codegree {codeg} from h* disagrees with interior search {first}")
    if first[1] != h[deg]:
        raise InternalInconsistency(
            f"leading coefficient {h[deg]} differs from interior count {first[1]}")
    prof = HStarProfile(h, deg, codeg, tuple(counts))
    P._memo["hstar"] = prof
    return prof


def hstar(P: Polytope) -> UniPoly:
    return hstar_profile(P).hstar


def degree(P: Polytope) -> int:
    return hstar_profile(P).degree


def codegree(P: Polytope) -> int:
    return hstar_profile(P).codegree


def ehrhart_value(P: Polytope, k: int) -> int:
    """The Ehrhart polynomial of P at any integer k (negative k allowed)."""
    if P.is_empty:
        return 0
    e = P.dim
    h = hstar(P)
    total = Fraction(0)
    for i, c in enumerate(h):
        # binom(k - i + e, e) as a polynomial in k
        n = k - i + e
        num = 1
        for s in range(e):
            num *= n - s
        total += c * Fraction(num, factorial(e))
    assert total.denominator == 1
    return int(total)


def classify(P: Polytope) -> Classification:
    """Gorenstein index by the direct definition, cross-checked against palindromicity."""
    got = P._memo.get("classify")
    if got is not None:
        return got
    if P.is_empty:
        raise DegeneratePolytope("the empty polytope has no Gorenstein index")
    prof = hstar_profile(P)
    r = prof.codegree
    direct: tuple[int, ...] | None = None
    if P.dim == 0:
        direct = ()
    elif P.count_points(r, interior=True) == 1:
        (m,) = P.local_points(r, interior=True)
        if all(dot(a, m) + r * b == 1 for a, b, _ in P.local_facets):
            direct = m
    palin = prof.hstar.is_palindromic()
    if palin != (direct is not None):
        raise InternalInconsistency(
            f"direct Gorenstein test says {direct is not None}, palindromicity says {palin}")
    if direct is None:
        out = Classification(False, None, None)
    else:
        out = Classification(r == 1, r, P.frame.to_ambient(direct, r))
        P._memo["interior_local"] = direct
    P._memo["classify"] = out
    return out


def interior_point_local(P: Polytope) -> tuple[int, ...]:
    """Local coordinates of the unique interior point of rP (P Gorenstein of index r)."""
    classify(P)
    return P._memo["interior_local"]
