"""Joins, Cayley joins and Z-joins of faces; equality faces and irreducibility."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from gorenstein.core.faces import face_lattice
from gorenstein.core.intmat import det, saturation, solve, vecmat
from gorenstein.core.iso import lattice_isomorphic
from gorenstein.core.polytope import Polytope, face_sublattice
from gorenstein.duality import DualPair, dual_gorenstein
from gorenstein.ehrhart import classify, hstar_profile
from gorenstein.errors import FacePairInvalid, NotCayleyJoin, TheoremViolation

KINDS = ("none", "join", "cayley_join", "z_join")


@dataclass(frozen=True)
class JoinCertificate:
    kind: str
    separating_functional: tuple[tuple[int, ...], int] | None  # (u, delta), local coordinates
    sublattice_index: int | None

    def at_least(self, kind: str) -> bool:
        return KINDS.index(self.kind) >= KINDS.index(kind)


def _lifted(P: Polytope, idx: Iterable[int]) -> list[tuple[int, ...]]:
    return [tuple(P.vertices[i]) + (1,) for i in sorted(idx)]


def stacked_index(P: Polytope, faces: list[frozenset]) -> int:
    """|det| of the stacked bases of M(F_1), ..., M(F_k); 0 if they do not fill M ⊕ Z."""
    L = P.localized()
    rows = []
    for F in faces:
        rows.extend(face_sublattice(L, F).basis)
    if len(rows) != L.dim + 1:
        return 0
    return abs(det(rows))


def join_kind(P: Polytope, F: Iterable[int], G: Iterable[int]) -> JoinCertificate:
    """Strongest join relation of P with respect to the faces F and G."""
    F, G = frozenset(F), frozenset(G)
    fl = face_lattice(P)
    if not F or not G or not fl.is_face(F) or not fl.is_face(G):
        raise FacePairInvalid(f"{sorted(F)} and {sorted(G)} must be nonempty faces")
    n = len(P.vertices)
    e = P.dim
    covers = (F | G) == frozenset(range(n))
    dims_ok = fl.dim_of(F) + fl.dim_of(G) == e - 1
    if not (covers and dims_ok):
        return JoinCertificate("none", None, None)
    index = stacked_index(P, [F, G])
    # (u, delta) with <u, v> - delta = 0 on F and -1 on G
    A, b = [], []
    for i in sorted(F):
        A.append(list(P.local_vertices[i]) + [-1])
        b.append(0)
    for i in sorted(G):
        A.append(list(P.local_vertices[i]) + [-1])
        b.append(-1)
    sol = solve(A, b)
    if sol is None or any(x.denominator != 1 for x in sol):
        return JoinCertificate("join", None, index)
    u = tuple(int(x) for x in sol[:-1])
    delta = int(sol[-1])
    kind = "z_join" if index == 1 else "cayley_join"
    return JoinCertificate(kind, (u, delta), index)


@dataclass(frozen=True)
class EqualityFace:
    face: frozenset
    partner: frozenset
    primal: JoinCertificate
    dual: JoinCertificate


def _codeg(P: Polytope) -> int:
    return hstar_profile(P).codegree


def _deg(P: Polytope) -> int:
    return hstar_profile(P).degree


def equality_face_ids(pair: DualPair) -> list[int]:
    """Nonempty proper faces F with codeg F + codeg F* = r."""
    fl, dl = pair.primal_faces, pair.dual_faces
    out = []
    for i in range(1, fl.top):
        j = pair.dual_id(i)
        cf = _codeg(fl.polytope_of(i))
        cd = _codeg(dl.polytope_of(j)) if j else 0
        if cf + cd == pair.index:
            out.append(i)
    return out


def equality_faces(pair: DualPair) -> list[EqualityFace]:
    """Each equality face with its constructed partner and both Cayley certificates."""
    fl, dl = pair.primal_faces, pair.dual_faces
    P, D = pair.primal, pair.dual
    n = len(P.vertices)
    out = []
    for i in equality_face_ids(pair):
        F = fl.faces[i]
        G = frozenset(range(n)) - F
        if not fl.is_face(G):
            raise TheoremViolation(f"complement of {sorted(F)} is not a face", module="joins")
        Fs, Gs = pair.face_map[F], pair.face_map[G]
        cp = join_kind(P, F, G)
        cd = join_kind(D, Fs, Gs)
        if not (cp.at_least("cayley_join") and cd.at_least("cayley_join")):
            raise TheoremViolation(
                f"equality face {sorted(F)} lacks a Cayley join certificate", module="joins")
        polys = [fl.polytope_of(i), fl.polytope_of(fl.id_of(G)),
                 dl.polytope_of(dl.id_of(Fs)), dl.polytope_of(dl.id_of(Gs))]
        if not all(classify(Q).is_gorenstein for Q in polys):
            raise TheoremViolation(f"equality face {sorted(F)}: a part is not Gorenstein",
                                   module="joins")
        pf, pg = polys[0], polys[1]
        if _codeg(P) != _codeg(pf) + _codeg(pg) or _deg(P) != _deg(pf) + _deg(pg):
            raise TheoremViolation(f"additivity fails for {sorted(F)}", module="joins")
        cy = lambda Q: _deg(Q) - _codeg(Q)  # noqa: E731
        if cy(P) != cy(pf) + cy(pg):
            raise TheoremViolation(f"CY additivity fails for {sorted(F)}", module="joins")
        out.append(EqualityFace(F, G, cp, cd))
    return out


def is_irreducible(pair: DualPair) -> bool:
    return not equality_face_ids(pair)


# --- Cayley-join face duality -------------------------------------------------


@dataclass(frozen=True)
class FaceDualityRecord:
    g_star: Polytope
    pi_g_f: Polytope
    f_star: Polytope
    pi_f_g: Polytope
    z_join: bool
    f_self_dual_to_g_star: bool | None


def quotient_image(P: Polytope, F: Iterable[int], G: Iterable[int]) -> Polytope:
    """pi_G(F): lifted vertices of F in (M ⊕ Z) / M(G), as a lattice polytope."""
    L = P.localized()
    basis = face_sublattice(L, G).basis
    W, C, k = saturation([list(b) for b in basis], L.dim + 1)
    pts = [tuple(vecmat(v, C)[k:]) for v in _lifted(L, F)]
    return Polytope.from_points(pts)


def _dual_match(A: Polytope, B: Polytope) -> bool:
    if not (classify(A).is_gorenstein and classify(B).is_gorenstein):
        return False
    return lattice_isomorphic(dual_gorenstein(A).dual, B)[0]


def cayley_face_duality(pair: DualPair, F: Iterable[int], G: Iterable[int]) -> FaceDualityRecord:
    """G* and pi_G(F) (and F* and pi_F(G)) as dual Gorenstein polytopes."""
    F, G = frozenset(F), frozenset(G)
    P = pair.primal
    cert = join_kind(P, F, G)
    if not cert.at_least("cayley_join"):
        raise NotCayleyJoin(f"P is not a Cayley join of {sorted(F)} and {sorted(G)}")
    dl = pair.dual_faces
    g_star = dl.polytope_of(dl.id_of(pair.face_map[G]))
    f_star = dl.polytope_of(dl.id_of(pair.face_map[F]))
    pi_gf = quotient_image(P, F, G)
    pi_fg = quotient_image(P, G, F)
    for a, b in ((g_star, pi_gf), (f_star, pi_fg)):
        if not _dual_match(a, b):
            raise TheoremViolation("a face dual and its quotient image are not dual Gorenstein",
                                   module="joins")
    extra = None
    if cert.kind == "z_join":
        fl = pair.primal_faces
        Fp, Gp = fl.polytope_of(fl.id_of(F)), fl.polytope_of(fl.id_of(G))
        extra = _dual_match(g_star, Fp) and _dual_match(f_star, Gp)
        if not extra:
            raise TheoremViolation("Z-join faces are not dual to the opposite stars", module="joins")
    return FaceDualityRecord(g_star, pi_gf, f_star, pi_fg, cert.kind == "z_join", extra)


# --- multiplicativity ----------------------------------------------------------


@dataclass(frozen=True)
class MultiplicativityReport:
    kind: str
    hstar: bool
    s_tilde: bool
    e_st: bool | None
    values: dict


def multiplicativity_check(pair: DualPair, F: Iterable[int], G: Iterable[int]
                           ) -> MultiplicativityReport:
    """Compare h*, S-tilde and E_st of P with the products over F and G."""
    from gorenstein.stringy import s_tilde, stringy_e

    F, G = frozenset(F), frozenset(G)
    P = pair.primal
    fl = pair.primal_faces
    cert = join_kind(P, F, G)
    Fp, Gp = fl.polytope_of(fl.id_of(F)), fl.polytope_of(fl.id_of(G))
    hp, hf, hg = hstar_profile(P).hstar, hstar_profile(Fp).hstar, hstar_profile(Gp).hstar
    sp, sf, sg = s_tilde(P), s_tilde(Fp), s_tilde(Gp)
    ep = stringy_e(pair).e_st
    e_ok = None
    values: dict = {"hstar": (hp, hf * hg), "s_tilde": (sp, sf * sg)}
    if classify(Fp).is_gorenstein and classify(Gp).is_gorenstein:
        ef = stringy_e(dual_gorenstein(Fp)).e_st
        eg = stringy_e(dual_gorenstein(Gp)).e_st
        e_ok = ep == ef * eg
        values["e_st"] = (ep, ef * eg)
    rep = MultiplicativityReport(cert.kind, hp == hf * hg, sp == sf * sg, e_ok, values)
    if cert.kind == "z_join" and not (rep.hstar and rep.s_tilde and rep.e_st):
        raise TheoremViolation("Z-join multiplicativity fails", module="joins")
    return rep

