import pytest
from hypothesis import given
from hypothesis import strategies as st

from gorenstein import catalog
from gorenstein.core.faces import face_lattice
from gorenstein.errors import NotComparable, NotEulerian
from gorenstein.polys import UniPoly
from gorenstein.posets import EulerianPoset, boolean_lattice, gh_poly


def _face_posets():
    return [face_lattice(P).poset for P in catalog.small_polytopes()] + \
           [face_lattice(P).poset for P in catalog.reflexive_polygons()]


def test_rank_zero_poset():
    P = EulerianPoset([0], [1])
    assert gh_poly(P) == (UniPoly([1]), UniPoly([1]))


def test_square_face_lattice():
    h, g = gh_poly(face_lattice(catalog.reflexive_square()).poset)
    assert h == UniPoly([1, 2, 1])
    assert g == UniPoly([1, 1])


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_polygon_g_polynomial(n):
    polys = {len(P.vertices): P for P in catalog.reflexive_polygons()}
    g = face_lattice(polys[n]).poset.g()
    assert g == UniPoly([1, n - 3])


def _brute_g(P: EulerianPoset, lo, hi, dual=False):
    """Direct recursion without memoization."""
    e = P.ranks[hi] - P.ranks[lo]
    if e == 0:
        return UniPoly([1])
    h = UniPoly()
    t1 = UniPoly([-1, 1])
    for x in range(len(P)):
        if not (P.leq(lo, x) and P.leq(x, hi)):
            continue
        if not dual and x != lo:
            h = h + t1 ** (P.ranks[x] - P.ranks[lo] - 1) * _brute_g(P, x, hi)
        if dual and x != hi:
            h = h + t1 ** (P.ranks[hi] - P.ranks[x] - 1) * _brute_g(P, lo, x, True)
    return (UniPoly([1, -1]) * h).truncate_below(e / 2)


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_boolean_lattice_has_trivial_g(k):
    B = boolean_lattice(k)
    assert B.is_eulerian()
    assert B.g() == UniPoly([1])
    assert _brute_g(B, B.bottom, B.top) == UniPoly([1])


def test_interval_vertex_to_square_is_a_diamond():
    fl = face_lattice(catalog.reflexive_square())
    v = fl.id_of([0])
    I = fl.poset.interval(v, fl.top)
    assert I.rank == 2 and len(I) == 4
    assert I.g() == UniPoly([1])


def test_trivial_interval_and_incomparable_pair():
    fl = face_lattice(catalog.reflexive_square())
    a, b = fl.id_of([0]), fl.id_of([1])
    assert fl.poset.interval(a, a).rank == 0
    with pytest.raises(NotComparable):
        fl.poset.interval(a, b)


def test_non_eulerian_poset_rejected():
    # a chain of length two is graded but not Eulerian
    chain = EulerianPoset([0, 1, 2], [1, 3, 7])
    assert not chain.is_eulerian()
    with pytest.raises(NotEulerian):
        gh_poly(chain)


def test_memoized_g_matches_direct_recursion():
    for poset in _face_posets():
        for lo in range(len(poset)):
            for hi in range(len(poset)):
                if poset.leq(lo, hi):
                    assert poset.g(lo, hi) == _brute_g(poset, lo, hi)
                    assert poset.g(lo, hi, True) == _brute_g(poset, lo, hi, True)


def test_g_nonnegative_and_degree_bounds_on_all_intervals():
    for poset in _face_posets():
        for lo in range(len(poset)):
            for hi in range(len(poset)):
                if not poset.leq(lo, hi):
                    continue
                e = poset.ranks[hi] - poset.ranks[lo]
                for dual in (False, True):
                    h, g = poset.gh(lo, hi, dual)
                    assert g.nonnegative()
                    if e > 0:
                        assert h.degree == e - 1
                        assert 2 * g.degree <= e - 1


def test_stanley_convolution_vanishes():
    for poset in _face_posets():
        for lo in range(len(poset)):
            for hi in range(len(poset)):
                if poset.leq(lo, hi) and lo != hi:
                    assert poset.convolution(lo, hi).is_zero()
                    assert poset.convolution(lo, hi, mirrored=True).is_zero()


@given(st.sampled_from(range(8)), st.sampled_from(range(8)))
def test_g_is_multiplicative_on_products(i, j):
    posets = [boolean_lattice(1), boolean_lattice(2)] + [
        face_lattice(P).poset for P in (catalog.reflexive_square(), catalog.segment(2),
                                        catalog.standard_simplex(2), catalog.unit_cube(3),
                                        catalog.cross_polytope(3), catalog.reflexive_polygons()[-1])]
    A, B = posets[i], posets[j]
    prod = A.product(B)
    assert prod.is_eulerian()
    assert prod.g() == A.g() * B.g()


def test_dual_poset_of_intervals_is_eulerian():
    fl = face_lattice(catalog.cross_polytope(3))
    P = fl.poset
    for lo in range(len(P)):
        I = P.interval(lo, fl.top, dualize=True)
        assert I.is_eulerian()
        assert I.g() == P.g(lo, fl.top, True)
