"""Gorenstein cones, dual Gorenstein polytopes and the face correspondence.

P^x lives in N ⊕ Z, where N is dual to the lattice of P's affine span (the
local coordinates of P). Its vertices are the lifted primitive facet
functionals (a, b) of P, in the same order as ``P.local_facets``; the
vertex set of a face F* is therefore a set of facet indices of P.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from gorenstein.core.faces import FaceLattice, face_lattice
from gorenstein.core.intmat import dot
from gorenstein.core.polytope import Polytope
from gorenstein.ehrhart import classify, interior_point_local
from gorenstein.errors import GorensteinHeightViolation, NotGorenstein, UnknownFace

Vector = tuple[int, ...]


@dataclass(frozen=True)
class GorensteinCone:
    generators: tuple[Vector, ...]
    height_functional: Vector


def gorenstein_cone(P: Polytope) -> GorensteinCone:
    """Cone over P x {1} in local coordinates, with its height functional."""
    gens = tuple(tuple(v) + (1,) for v in P.local_vertices)
    return GorensteinCone(gens, (0,) * P.dim + (1,))


@dataclass(frozen=True, eq=False)
class DualPair:
    """A Gorenstein polytope paired with its dual via the inclusion-reversing face bijection.

    ``face_map`` sends the vertex set of a face of ``primal`` to the vertex
    set of the corresponding face of ``dual``; ``m_interior`` is the
    interior point of the dual cone spanned by the primal generators.
    """

    primal: Polytope
    dual: Polytope
    index: int
    m_interior: Vector
    face_map: dict = field(repr=False)

    @property
    def primal_faces(self) -> FaceLattice:
        return face_lattice(self.primal)

    @property
    def dual_faces(self) -> FaceLattice:
        return face_lattice(self.dual)

    @property
    def cy_dim(self) -> int:
        return self.primal.dim + 1 - 2 * self.index

    def dual_id(self, i: int) -> int:
        """Face-lattice index of F* for the primal face with index i."""
        return self.dual_faces.id_of(self.face_map[self.primal_faces.faces[i]])

    def swapped(self) -> "DualPair":
        """The pair read from the dual side: primal P^x, dual P."""
        got = self.primal._memo.get("swapped")
        if got is not None:
            return got
        P = self.primal
        n = len(P.vertices)
        stars = [self.face_map[frozenset([i])] for i in range(n)]
        back = {}
        for G in face_lattice(self.dual).faces:
            back[G] = frozenset(i for i in range(n) if G <= stars[i])
        e = self.dual.ambient_dim
        sw = DualPair(self.dual, P, self.index, (0,) * (e - 1) + (1,), back)
        P._memo["swapped"] = sw
        return sw


def dual_gorenstein(P: Polytope) -> DualPair:
    """Dual Gorenstein polytope of P with the face bijection."""
    got = P._memo.get("dual_pair")
    if got is not None:
        return got
    cls = classify(P)
    if not cls.is_gorenstein:
        raise NotGorenstein(f"{P.name or 'polytope'} is not Gorenstein")
    r = cls.gorenstein_index
    e = P.dim
    if e == 0:
        dual = Polytope(((1,),), 1)
        fmap = {frozenset(): frozenset([0]), frozenset([0]): frozenset()}
        pair = DualPair(P, dual, r, (r,), fmap)
        P._memo["dual_pair"] = pair
        return pair
    m = interior_point_local(P)
    lifted_m = tuple(m) + (r,)
    verts = []
    facet_sets = []
    for a, b, mask in P.local_facets:
        u = tuple(a) + (b,)
        if dot(u, lifted_m) != 1:
            raise GorensteinHeightViolation(
                f"facet functional {u} has height {dot(u, lifted_m)} at m")
        verts.append(u)
        facet_sets.append(mask)
    dual = Polytope(tuple(verts), e + 1, None,
                    f"{P.name}^x" if P.name else None)
    fl = face_lattice(P)
    fmap = {}
    for F, Fm in zip(fl.faces, fl.masks):
        fmap[F] = frozenset(j for j, s in enumerate(facet_sets) if Fm & ~s == 0)
    pair = DualPair(P, dual, r, lifted_m, fmap)
    P._memo["dual_pair"] = pair
    return pair


def dual_face(pair: DualPair, F: Iterable[int]) -> frozenset[int]:
    F = frozenset(F)
    try:
        return pair.face_map[F]
    except KeyError:
        raise UnknownFace(f"{sorted(F)} is not a face of the primal polytope") from None
