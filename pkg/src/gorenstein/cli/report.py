"""Per-polytope report records and their JSON-lines and text renderings."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from gorenstein.core.faces import face_lattice
from gorenstein.core.iso import lattice_isomorphic
from gorenstein.core.polytope import Polytope
from gorenstein.duality import dual_gorenstein
from gorenstein.ehrhart import classify, hstar_profile
from gorenstein.errors import TheoremViolation
from gorenstein.joins import equality_faces
from gorenstein.nef import (
    NefPartition,
    cayley_polytope,
    nef_irreducible,
    nef_validate,
    split_over_Z,
)
from gorenstein.polys import BiPoly, UniPoly
from gorenstein.stringy import conjecture_report, hstar_decomposition_check, s_tilde, stringy_e

SCHEMA_VERSION = 1


def poly_json(p: UniPoly) -> list[int]:
    return p.to_list()


def bipoly_json(E: BiPoly) -> list[list[int]]:
    return [[i, j, c] for i, j, c in E.sorted_terms()]


def exact(x: Any) -> Any:
    """JSON-safe exact value: Fractions become "a/b" strings."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, dict):
        return {str(k): exact(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [exact(v) for v in x]
    return x


def _faces_json(faces) -> list[list[int]]:
    return [sorted(F) for F in faces]


# --- polytope commands -----------------------------------------------------------


def info_record(P: Polytope) -> dict:
    prof = hstar_profile(P)
    cls = classify(P)
    rec = {
        "ambient_dim": P.ambient_dim,
        "dim": P.dim,
        "n_vertices": len(P.vertices),
        "vertices": [list(v) for v in P.vertices],
        "f_vector": face_lattice(P).f_vector(),
        "hstar": poly_json(prof.hstar),
        "degree": prof.degree,
        "codegree": prof.codegree,
        "reflexive": cls.reflexive,
        "gorenstein_index": cls.gorenstein_index,
    }
    if cls.is_gorenstein:
        rec["cy_dim"] = P.dim + 1 - 2 * cls.gorenstein_index
    return rec


def hstar_record(P: Polytope) -> dict:
    prof = hstar_profile(P)
    return {"hstar": poly_json(prof.hstar), "hstar_text": str(prof.hstar),
            "degree": prof.degree, "codegree": prof.codegree,
            "ehrhart_counts": list(prof.ehrhart_counts)}


def dual_record(P: Polytope) -> dict:
    pair = dual_gorenstein(P)
    D = pair.dual
    return {"index": pair.index, "m_interior": list(pair.m_interior),
            "dual_vertices": [list(v) for v in D.vertices],
            "dual_hstar": poly_json(hstar_profile(D).hstar),
            "dual_index": classify(D).gorenstein_index,
            "self_dual": lattice_isomorphic(P, D)[0]}


def faces_record(P: Polytope) -> dict:
    fl = face_lattice(P)
    h, g = fl.poset.gh(fl.bottom, fl.top)
    return {"f_vector": fl.f_vector(), "eulerian": fl.is_eulerian(),
            "faces": [[sorted(F), d] for F, d in zip(fl.faces, fl.dims)],
            "h": poly_json(h), "g": poly_json(g)}


def stringy_record(P: Polytope) -> dict:
    pair = dual_gorenstein(P)
    rep = stringy_e(pair)
    st = s_tilde(P)
    prof = hstar_profile(P)
    return {
        "index": pair.index,
        "cy_dim": rep.cy_dim,
        "s_tilde": poly_json(st),
        "s_tilde_dual": poly_json(s_tilde(pair.dual)),
        "s_tilde_degree_equals_degree": (not st.is_zero()) and st.degree == prof.degree,
        "e_st": bipoly_json(rep.e_st),
        "e_st_text": str(rep.e_st),
        "census": _faces_json(rep.census),
        "census_count": len(rep.census),
        "contributing_faces": _faces_json(F for F, _, _ in rep.contributing_faces),
    }


def _e00(Q: Polytope) -> int:
    return stringy_e(dual_gorenstein(Q)).e_st.coefficient(0, 0)


def joins_record(P: Polytope) -> dict:
    pair = dual_gorenstein(P)
    fl, dl = pair.primal_faces, pair.dual_faces
    out = []
    for ef in equality_faces(pair):
        Fs, Gs = pair.face_map[ef.face], pair.face_map[ef.partner]
        polys = [fl.polytope_of(fl.id_of(ef.face)), fl.polytope_of(fl.id_of(ef.partner)),
                 dl.polytope_of(dl.id_of(Fs)), dl.polytope_of(dl.id_of(Gs))]
        lhs = _e00(P) * _e00(pair.dual)
        rhs = 1
        for Q in polys:
            rhs *= _e00(Q)
        out.append({
            "face": sorted(ef.face), "partner": sorted(ef.partner),
            "primal_kind": ef.primal.kind, "primal_index": ef.primal.sublattice_index,
            "dual_kind": ef.dual.kind, "dual_index": ef.dual.sublattice_index,
            "constant_term_product": [lhs, rhs],
        })
    return {"index": pair.index, "equality_faces": out, "irreducible": not out}


def irreducible_record(P: Polytope) -> dict:
    pair = dual_gorenstein(P)
    return {"index": pair.index, "irreducible": not equality_faces(pair)}


def _codegree_inequality_holds(pair) -> bool:
    fl, dl = pair.primal_faces, pair.dual_faces
    for i in range(len(fl)):
        j = pair.dual_id(i)
        cf = hstar_profile(fl.polytope_of(i)).codegree if i else 0
        cd = hstar_profile(dl.polytope_of(j)).codegree if j else 0
        if cf + cd < pair.index:
            return False
    return True


def verify_record(P: Polytope, parts: tuple[int, ...]) -> tuple[dict, bool]:
    """Proven identities are asserted; conjectural parts are reported.

    Returns the record and whether every requested conjecture part passed.
    """
    cls = classify(P)
    rec: dict[str, Any] = {"gorenstein_index": cls.gorenstein_index}
    if not hstar_decomposition_check(P):
        raise TheoremViolation("h* decomposition identity fails", module="stringy")
    if not cls.is_gorenstein:
        rec["conjecture"] = None
        return rec, True
    pair = dual_gorenstein(P)
    if not _codegree_inequality_holds(pair):
        raise TheoremViolation("codeg F + codeg F* < r for some face", module="duality")
    rep = stringy_e(pair)
    conj = conjecture_report(pair, rep, parts)
    rec.update({
        "cy_dim": rep.cy_dim,
        "e_st": bipoly_json(rep.e_st),
        "census_count": len(rep.census),
        "conjecture": {str(k): v for k, v in sorted(conj.passed.items())},
        "residuals": {str(k): exact(v) for k, v in sorted(conj.residuals.items())},
    })
    return rec, conj.all_pass


# --- nef commands ----------------------------------------------------------------


def nef_build_record(N: NefPartition) -> dict:
    ok, reason = nef_validate(N)
    rec: dict[str, Any] = {"r": N.r, "valid": ok, "reason": reason}
    if ok:
        cay = cayley_polytope(N.parts)
        rec.update({"cayley_dim": cay.dim,
                    "cayley_vertices": [list(v) for v in cay.vertices],
                    "cayley_index": classify(cay).gorenstein_index,
                    "cayley_hstar": poly_json(hstar_profile(cay).hstar)})
    return rec


def nef_irreducible_record(N: NefPartition) -> dict:
    ok, reason = nef_validate(N)
    if not ok:
        return {"valid": False, "reason": reason}
    return {"valid": True, "r": N.r, "irreducible": nef_irreducible(N)}


def nef_split_record(N: NefPartition) -> dict:
    ok, reason = nef_validate(N)
    if not ok:
        return {"valid": False, "reason": reason}
    rep = split_over_Z(N, experiment=True)
    return {
        "valid": True,
        "z_split": rep.z_split,
        "direct_sum_splits": rep.direct_sum_splits,
        "free_sum_hstar": rep.free_sum_hstar,
        "stringy_products": [[bipoly_json(a), bipoly_json(b)] for a, b in rep.stringy_products],
    }


# --- rendering -------------------------------------------------------------------


def render_json(rec: dict) -> str:
    return json.dumps(rec, sort_keys=True, separators=(",", ":"))


def _cell(v: Any) -> str:
    if isinstance(v, str):
        return v
    return json.dumps(v, sort_keys=True)


def render_text(rec: dict) -> str:
    keys = [k for k in rec if k != "schema_version"]
    width = max((len(k) for k in keys), default=0)
    lines = [f"{k.ljust(width)}  {_cell(rec[k])}" for k in keys]
    return "\n".join(lines) + "\n"
