"""Exact property checks shared by the corpus suite and the acceptance suite."""

from gorenstein import catalog
from gorenstein.core.faces import face_lattice
from gorenstein.duality import dual_gorenstein
from gorenstein.ehrhart import classify, hstar_profile
from gorenstein.stringy import conjecture_report, hstar_decomposition_check, s_tilde, stringy_e


def generated_corpus():
    polys = []
    for d in (1, 2, 3):
        polys.extend(catalog.grid_simplices(d))
    polys.extend(catalog.reflexive_polygons())
    polys.extend(catalog.worked_examples())
    return polys


def _ehrhart_failures(P):
    out = []
    prof = hstar_profile(P)
    h = prof.hstar
    if not h.nonnegative():
        out.append("h* has a negative coefficient")
    if h.is_palindromic() != classify(P).is_gorenstein:
        out.append("palindromic h* disagrees with the Gorenstein test")
    S = s_tilde(P)
    if S != S.reversed(P.dim + 1):
        out.append("S-tilde reciprocity")
    if not S.nonnegative():
        out.append("S-tilde has a negative coefficient")
    if not S.dominated_by(h):
        out.append("S-tilde exceeds h*")
    if not S.is_zero() and (S.degree > prof.degree or S.subdegree < prof.codegree):
        out.append("S-tilde degree bounds")
    if prof.degree < prof.codegree and not S.is_zero():
        out.append("S-tilde nonzero although deg < codeg")
    if not hstar_decomposition_check(P):
        out.append("h* decomposition identity")
    return out


def _poset_failures(P):
    out = []
    fl = face_lattice(P)
    po = fl.poset
    if not fl.is_eulerian():
        out.append("face lattice not Eulerian")
        return out
    for i in range(len(fl)):
        for j in range(len(fl)):
            if not fl.leq(i, j):
                continue
            if not (po.g(i, j).nonnegative() and po.g(i, j, dual=True).nonnegative()):
                out.append(f"negative g on [{i},{j}]")
            if i != j and not (po.convolution(i, j).is_zero()
                               and po.convolution(i, j, mirrored=True).is_zero()):
                out.append(f"convolution nonzero on [{i},{j}]")
    return out


def _pair_failures(P):
    out = []
    pair = dual_gorenstein(P)
    fl, dl = pair.primal_faces, pair.dual_faces
    for i in range(len(fl)):
        j = pair.dual_id(i)
        cf = hstar_profile(fl.polytope_of(i)).codegree if i else 0
        cd = hstar_profile(dl.polytope_of(j)).codegree if j else 0
        if cf + cd < pair.index:
            out.append(f"codegree inequality at face {sorted(fl.faces[i])}")
    rep = stringy_e(pair)
    E, n = rep.e_st, rep.cy_dim
    if not E.is_polynomial():
        out.append("E_st not a polynomial")
    if E.swap() != E:
        out.append("E_st not symmetric")
    if n < 0 and not E.is_zero():
        out.append("E_st nonzero for negative cy_dim")
    if not E.is_zero() and E.invert().shift(n, n) != E:
        out.append("Poincare duality")
    E_dual = stringy_e(pair.swapped()).e_st
    if E_dual.invert(u=True, v=False).shift(n, 0) * (-1) ** n != E:
        out.append("mirror law")
    if len(rep.census) != E.coefficient(0, 0):
        out.append("census count differs from E_st(0,0)")
    return out


def property_failures(P):
    """Every failed property of P, as short labels; empty means all pass."""
    out = _ehrhart_failures(P) + _poset_failures(P)
    if classify(P).is_gorenstein:
        out += _pair_failures(P)
    return out


def conjecture_failures(P):
    if not classify(P).is_gorenstein:
        return None
    rep = conjecture_report(dual_gorenstein(P))
    return rep.failures()
