"""Face lattices of lattice polytopes.

Faces are referenced by frozensets of vertex indices into ``P.vertices``.
Every face is an intersection of facets, so the lattice is generated by
closing the facet vertex sets under intersection.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable

from gorenstein.core.polytope import Polytope
from gorenstein.errors import UnknownFace
from gorenstein.posets import EulerianPoset

Face = frozenset


def _mask(face: Iterable[int]) -> int:
    m = 0
    for i in face:
        m |= 1 << i
    return m


def _unmask(m: int) -> frozenset[int]:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return frozenset(out)


class FaceLattice:
    """All faces of P, including the empty face and P itself.

    ``faces[i]`` is a frozenset of vertex indices and ``dims[i]`` its
    dimension. Faces are sorted by (dim, sorted vertex indices), so index 0
    is the empty face and the last index is P.
    """

    def __init__(self, P: Polytope, vertex_masks: list[int], dims: list[int]):
        order = sorted(range(len(vertex_masks)),
                       key=lambda i: (dims[i], sorted(_unmask(vertex_masks[i]))))
        self.polytope = P
        self.masks = [vertex_masks[i] for i in order]
        self.dims = [dims[i] for i in order]
        self.faces = [_unmask(m) for m in self.masks]
        self.index = {m: i for i, m in enumerate(self.masks)}
        n = len(self.masks)
        down = []
        for i in range(n):
            mi = self.masks[i]
            d = 0
            for j in range(n):
                if self.masks[j] & ~mi == 0:
                    d |= 1 << j
            down.append(d)
        self.down = down
        self._face_polytopes: dict[int, Polytope] = {len(self.faces) - 1: P}

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.faces) - 1

    @property
    def dim(self) -> int:
        return self.dims[-1]

    def id_of(self, face: Iterable[int]) -> int:
        """Canonical index of a face given by its vertex indices."""
        i = self.index.get(_mask(face))
        if i is None:
            raise UnknownFace(f"{sorted(face)} is not a face")
        return i

    def dim_of(self, face: Iterable[int]) -> int:
        return self.dims[self.id_of(face)]

    def is_face(self, face: Iterable[int]) -> bool:
        return _mask(face) in self.index

    def leq(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def faces_of_dim(self, k: int) -> list[frozenset[int]]:
        return [f for f, d in zip(self.faces, self.dims) if d == k]

    def f_vector(self) -> list[int]:
        """Number of faces of each dimension -1, 0, ..., dim P."""
        out = [0] * (self.dim + 2)
        for d in self.dims:
            out[d + 1] += 1
        return out

    def polytope_of(self, i: int) -> Polytope:
        """Face i as a polytope of its own (cached, so its invariants are too)."""
        got = self._face_polytopes.get(i)
        if got is None:
            got = self._face_polytopes[i] = self.polytope.face(self.faces[i])
        return got

    @cached_property
    def poset(self) -> EulerianPoset:
        return EulerianPoset([d + 1 for d in self.dims], self.down)

    def is_eulerian(self) -> bool:
        return self.poset.is_eulerian()

    def subfaces(self, i: int) -> list[int]:
        return [j for j in range(len(self.faces)) if self.down[i] >> j & 1]

    def superfaces(self, i: int) -> list[int]:
        return [j for j in range(len(self.faces)) if self.down[j] >> i & 1]

    def facet_ids(self) -> list[int]:
        return [i for i, d in enumerate(self.dims) if d == self.dim - 1]


def face_lattice(P: Polytope) -> FaceLattice:
    """Face lattice of a nonempty polytope, memoized on P."""
    fl = P._memo.get("face_lattice")
    if fl is not None:
        return fl
    n = len(P.vertices)
    full = (1 << n) - 1
    if P.dim <= 0:
        masks, dims = [0, full], [-1, P.dim]
        if P.is_empty:
            masks, dims = [0], [-1]
    else:
        facet_masks = sorted({m for _, _, m in P.local_facets})
        seen = {full}
        frontier = [full]
        while frontier:
            nxt = []
            for s in frontier:
                for f in facet_masks:
                    t = s & f
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        masks = sorted(seen, key=lambda m: (m.bit_count(), m))
        dims = []
        for i, m in enumerate(masks):
            if m == 0:
                dims.append(-1)
                continue
            below = [dims[j] for j in range(i) if masks[j] & ~m == 0]
            dims.append(max(below) + 1)
    fl = FaceLattice(P, masks, dims)
    P._memo["face_lattice"] = fl
    return fl
