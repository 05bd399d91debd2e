"""Lattice polytopes, their affine lattices, facets and lattice points."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

from gorenstein.core import _kernels
from gorenstein.core.hull import extreme_points, polytope_facets
from gorenstein.core.intmat import (
    dot,
    inverse_unimodular,
    lll_reduce,
    matmul,
    saturation,
    smith_normal_form,
    transpose,
    vecmat,
)
from gorenstein.errors import (
    DegeneratePolytope,
    EmptyFace,
    NonLatticeVertex,
    RankDeficientLattice,
)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class AffineFrame:
    """Integral coordinates on the lattice of an affine subspace.

    A point x of the affine lattice is ``origin + y @ basis`` with y in Z^k;
    conversely ``y = (x - origin) @ coords``.
    """

    origin: Vector
    basis: tuple[Vector, ...]   # k rows of length d
    coords: tuple[Vector, ...]  # d rows of length k

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_local(self, x: Sequence[int]) -> Vector:
        diff = [a - b for a, b in zip(x, self.origin)]
        if not self.basis:
            return ()
        return tuple(vecmat(diff, self.coords))

    def to_ambient(self, y: Sequence[int], scale: int = 1) -> Vector:
        """Ambient point of local coordinates y inside the scale-th dilate."""
        out = [scale * o for o in self.origin]
        for yi, row in zip(y, self.basis):
            if yi:
                out = [a + yi * r for a, r in zip(out, row)]
        return tuple(out)

    def functional_to_ambient(self, a: Sequence[int], b: int) -> tuple[Vector, int]:
        """Rewrite <a, y> + b in ambient terms as <a', x> + b'."""
        amb = tuple(sum(self.coords[i][j] * a[j] for j in range(len(a)))
                    for i in range(len(self.origin)))
        return amb, b - dot(amb, self.origin)


def affine_frame(points: Sequence[Vector], reduce: bool = True) -> AffineFrame:
    """Frame of the affine lattice aff(points) ∩ Z^d, LLL-adapted to the points."""
    d = len(points[0])
    origin = tuple(points[0])
    diffs = [[a - b for a, b in zip(p, origin)] for p in points[1:]]
    diffs = [r for r in diffs if any(r)]
    if not diffs:
        return AffineFrame(origin, (), tuple(() for _ in range(d)))
    W, C, k = saturation(diffs, d)
    basis = [W[i] for i in range(k)]
    coords = [row[:k] for row in C]
    if reduce and k > 1:
        Y = [vecmat(r, coords) for r in diffs]
        _, T = lll_reduce(transpose(Y))
        # new coordinates y' = y T^t, new basis rows T^{-t} basis
        coords = matmul(coords, transpose(T))
        basis = matmul(transpose(inverse_unimodular(T)), basis)
    return AffineFrame(origin, tuple(tuple(r) for r in basis),
                       tuple(tuple(r) for r in coords))


@dataclass(frozen=True)
class Hyperplane:
    """Halfspace <normal, x> + offset >= 0 supporting a facet."""

    normal: Vector
    offset: int
    vertices: frozenset[int] = field(default=frozenset(), compare=False)

    def value(self, x: Sequence[int]) -> int:
        return dot(self.normal, x) + self.offset


@dataclass(frozen=True, eq=False)
class Polytope:
    """Lattice polytope given by its vertices in Z^d.

    ``lattice`` tags the lattice whose basis the coordinates refer to
    (None for the standard lattice); it only matters for compatibility
    checks between polytopes. Build through ``Polytope.from_points`` unless
    the vertex list is already known to be irredundant.
    """

    vertices: tuple[Vector, ...]
    ambient_dim: int
    lattice: tuple | None = None
    name: str | None = None
    _memo: dict = field(default_factory=dict, repr=False)

    def __eq__(self, other):
        if not isinstance(other, Polytope):
            return NotImplemented
        return (self.vertices == other.vertices and self.ambient_dim == other.ambient_dim
                and self.lattice == other.lattice)

    def __hash__(self):
        return hash((self.vertices, self.ambient_dim, self.lattice))

    @classmethod
    def empty(cls, ambient_dim: int, lattice=None) -> "Polytope":
        return cls((), ambient_dim, lattice)

    @classmethod
    def from_points(cls, points: Iterable[Sequence[int]], ambient_dim: int | None = None,
                    lattice=None, name: str | None = None) -> "Polytope":
        """Convex hull of integer points, reduced to sorted irredundant vertices."""
        pts = sorted({tuple(int(x) for x in p) for p in points})
        if not pts:
            if ambient_dim is None:
                raise ValueError("ambient_dim required for the empty polytope")
            return cls((), ambient_dim, lattice, name)
        d = len(pts[0])
        if len(pts) > 1:
            fr = affine_frame(pts, reduce=False)
            if fr.dim > 0:
                local = [fr.to_local(p) for p in pts]
                fac = polytope_facets(local) if fr.dim > 1 else None
                if fr.dim == 1:
                    xs = [p[0] for p in local]
                    keep = [xs.index(min(xs)), xs.index(max(xs))]
                else:
                    keep = extreme_points(local, fac)
                pts = sorted(pts[i] for i in keep)
        return cls(tuple(pts), d, lattice, name)

    def with_name(self, name: str) -> "Polytope":
        return Polytope(self.vertices, self.ambient_dim, self.lattice, name)

    # --- basic geometry -----------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @cached_property
    def frame(self) -> AffineFrame:
        if not self.vertices:
            raise DegeneratePolytope("the empty polytope has no affine frame")
        return affine_frame(self.vertices)

    @cached_property
    def dim(self) -> int:
        if not self.vertices:
            return -1
        return self.frame.dim

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    @cached_property
    def local_vertices(self) -> tuple[Vector, ...]:
        """Vertices in the coordinates of the affine frame (full-dimensional)."""
        fr = self.frame
        return tuple(fr.to_local(v) for v in self.vertices)

    @cached_property
    def local_facets(self) -> tuple[tuple[Vector, int, int], ...]:
        """Facets (a, b, vertex mask) in local coordinates: <a, y> + b >= 0."""
        e = self.dim
        if e < 1:
            return ()
        if e == 1:
            xs = [p[0] for p in self.local_vertices]
            lo, hi = min(xs), max(xs)
            m_lo = sum(1 << i for i, x in enumerate(xs) if x == lo)
            m_hi = sum(1 << i for i, x in enumerate(xs) if x == hi)
            return tuple(sorted([((1,), -lo, m_lo), ((-1,), hi, m_hi)]))
        return tuple(polytope_facets(self.local_vertices))

    def localized(self) -> "Polytope":
        """The same polytope as a full-dimensional polytope in its own lattice."""
        if self.is_empty:
            return Polytope.empty(0)
        loc = self._memo.get("localized")
        if loc is None:
            loc = Polytope(self.local_vertices, self.dim, None, self.name)
            self._memo["localized"] = loc
        return loc

    def face(self, vertex_indices: Iterable[int]) -> "Polytope":
        idx = sorted(vertex_indices)
        return Polytope(tuple(self.vertices[i] for i in idx), self.ambient_dim, self.lattice)

    def translate(self, t: Sequence[int]) -> "Polytope":
        return Polytope(tuple(tuple(a + b for a, b in zip(v, t)) for v in self.vertices),
                        self.ambient_dim, self.lattice, self.name)

    def dilate(self, k: int) -> "Polytope":
        return Polytope(tuple(tuple(k * a for a in v) for v in self.vertices),
                        self.ambient_dim, self.lattice, self.name)

    def contains(self, x: Sequence[int], relative_interior: bool = False) -> bool:
        """Membership of an integer point (optionally in the relative interior)."""
        if self.is_empty:
            return False
        fr = self.frame
        y = fr.to_local(x)
        if fr.to_ambient(y) != tuple(x):
            return False
        if self.dim == 0:
            return True
        strict = 1 if relative_interior else 0
        return all(dot(a, y) + b >= strict for a, b, _ in self.local_facets)

    # --- lattice points -------------------------------------------------------

    @cached_property
    def _levels(self):
        """Per-coordinate projection facets used by the enumeration kernels."""
        e = self.dim
        out = []
        for j in range(1, e + 1):
            proj = sorted({v[:j] for v in self.local_vertices})
            if j == 1:
                xs = [p[0] for p in proj]
                fac = [((1,), -min(xs)), ((-1,), max(xs))]
            else:
                fac = [(a, b) for a, b, _ in polytope_facets(proj)]
            out.append(fac)
        return out

    def _kernel_levels(self, interior: bool):
        levels = []
        e = self.dim
        for j, fac in enumerate(self._levels):
            shift = -1 if (interior and j == e - 1) else 0
            levels.append(([list(a) for a, _ in fac], [b for _, b in fac],
                           [shift] * len(fac)))
        return levels

    def _coord_bound(self, k: int) -> int:
        return k * max(abs(c) for v in self.local_vertices for c in v) + 1

    def count_points(self, k: int = 1, interior: bool = False, which: str | None = None) -> int:
        """Number of lattice points in kP (or its relative interior)."""
        if self.is_empty:
            return 0
        if k == 0:
            return 0 if interior else 1
        if self.dim == 0:
            return 1
        return _kernels.enumerate_levels(self._kernel_levels(interior), k,
                                         self._coord_bound(k), False, which)

    def local_points(self, k: int = 1, interior: bool = False,
                     which: str | None = None) -> list[Vector]:
        """Lattice points of kP in local coordinates."""
        if self.is_empty:
            return []
        if k == 0:
            return [] if interior else [(0,) * self.dim]
        if self.dim == 0:
            return [()]
        arr = _kernels.enumerate_levels(self._kernel_levels(interior), k,
                                        self._coord_bound(k), True, which)
        return [tuple(int(x) for x in row) for row in arr]

    def __repr__(self):
        nm = f"{self.name!r}, " if self.name else ""
        return f"Polytope({nm}dim={self.dim}, vertices={list(self.vertices)})"


def _local_to_ambient_points(P: Polytope, pts: list[Vector], k: int) -> list[Vector]:
    fr = P.frame
    return [fr.to_ambient(y, k) for y in pts]


def lattice_points(P: Polytope, k: int = 1, interior_only: bool = False) -> list[Vector]:
    """Lattice points of kP (or of its relative interior), in ambient coordinates."""
    if P.is_empty:
        return []
    if k == 0:
        return [] if interior_only else [(0,) * P.ambient_dim]
    if P.dim == 0:
        return [tuple(k * a for a in P.vertices[0])]
    return sorted(_local_to_ambient_points(P, P.local_points(k, interior_only), k))


def facets(P: Polytope) -> list[Hyperplane]:
    """Facet halfspaces with primitive normals, sorted by (normal, offset).

    For a lower-dimensional P the normals are one integral extension of
    the facet functionals on the affine span.
    """
    if P.dim < 1:
        raise DegeneratePolytope(f"facets need dim >= 1, got {P.dim}")
    out = []
    fr = P.frame
    for a, b, mask in P.local_facets:
        na, nb = fr.functional_to_ambient(a, b)
        verts = frozenset(i for i in range(len(P.vertices)) if mask >> i & 1)
        out.append(Hyperplane(na, nb, verts))
    out.sort(key=lambda h: (h.normal, h.offset))
    return out


# --- normalization ---------------------------------------------------------


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floating point coordinates are not accepted")
    return Fraction(x)


def lattice_basis(ambient_dim: int, generators: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    """A basis (rows) of the lattice generated by rational vectors."""
    gens = [[_frac(x) for x in g] for g in generators]
    if any(len(g) != ambient_dim for g in gens):
        raise RankDeficientLattice("generator length differs from ambient_dim")
    den = 1
    for g in gens:
        for x in g:
            den = den * x.denominator // gcd(den, x.denominator)
    G = [[int(x * den) for x in g] for g in gens]
    if not G:
        raise RankDeficientLattice("no generators given")
    D, _, V = smith_normal_form(G)
    diag = [D[i][i] for i in range(min(len(D), ambient_dim))]
    if len(diag) < ambient_dim or any(x == 0 for x in diag):
        raise RankDeficientLattice("lattice generators do not span the space")
    Winv = inverse_unimodular(V)
    return tuple(tuple(Fraction(diag[i] * w, den) for w in Winv[i]) for i in range(ambient_dim))


def lattice_coordinates(basis: Sequence[Sequence[Fraction]], x: Sequence) -> tuple[int, ...]:
    """Integer coordinates of x in a lattice basis; NonLatticeVertex if none."""
    from gorenstein.core.intmat import solve
    sol = solve(transpose(basis), [_frac(c) for c in x])
    if sol is None or any(s.denominator != 1 for s in sol):
        raise NonLatticeVertex(f"{[str(_frac(c)) for c in x]} is not a lattice point")
    return tuple(int(s) for s in sol)


def normalize_polytope(ambient_dim: int, lattice_generators: Sequence[Sequence] | None,
                       raw_vertices: Sequence[Sequence], name: str | None = None) -> Polytope:
    """Rewrite rational vertices in integer coordinates of the lattice they live in."""
    if lattice_generators is None:
        pts = []
        for v in raw_vertices:
            fv = [_frac(x) for x in v]
            if len(fv) != ambient_dim:
                raise NonLatticeVertex(f"vertex {v} has wrong length")
            if any(x.denominator != 1 for x in fv):
                raise NonLatticeVertex(f"{[str(x) for x in fv]} is not in Z^{ambient_dim}")
            pts.append(tuple(int(x) for x in fv))
        return Polytope.from_points(pts, ambient_dim, None, name)
    basis = lattice_basis(ambient_dim, lattice_generators)
    pts = [lattice_coordinates(basis, v) for v in raw_vertices]
    tag = basis if basis != tuple(tuple(Fraction(int(i == j)) for j in range(ambient_dim))
                                  for i in range(ambient_dim)) else None
    return Polytope.from_points(pts, ambient_dim, tag, name)


# --- face sublattices ------------------------------------------------------


@dataclass(frozen=True)
class FaceSublattice:
    """Basis of M(F) = lin(F x {1}) ∩ (M ⊕ Z)."""

    face: frozenset[int]
    basis: tuple[Vector, ...]


def face_sublattice(P: Polytope, F: Iterable[int], pivot: str = "min") -> FaceSublattice:
    """Integral basis of the linear span of the lifted vertices of a face."""
    F = frozenset(F)
    if not F:
        raise EmptyFace("M(F) is undefined for the empty face")
    lifted = [tuple(P.vertices[i]) + (1,) for i in sorted(F)]
    D, _, V = smith_normal_form(lifted, pivot)
    k = sum(1 for i in range(min(len(D), len(lifted[0]))) if D[i][i])
    W = inverse_unimodular(V)
    return FaceSublattice(F, tuple(tuple(W[i]) for i in range(k)))
