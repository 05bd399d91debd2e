from fractions import Fraction

import pytest

from gorenstein import catalog
from gorenstein.core.polytope import Polytope
from gorenstein.ehrhart import classify, ehrhart_value, hstar_profile
from gorenstein.polys import UniPoly


def corpus():
    return (catalog.small_polytopes() + list(catalog.grid_simplices(2))
            + list(catalog.grid_simplices(3)) + list(catalog.reflexive_polygons())
            + [catalog.cayley_segments_index2()[0], catalog.cayley_segments_nongorenstein()[0],
               catalog.cayley_segment_parallelogram()[0], catalog.parallelogram()])


def _lagrange(xs, ys, x):
    total = Fraction(0)
    for i, xi in enumerate(xs):
        term = Fraction(ys[i])
        for j, xj in enumerate(xs):
            if j != i:
                term *= Fraction(x - xj, xi - xj)
        total += term
    return total


def test_simplex_hstar_and_codegree():
    for d in range(1, 5):
        prof = hstar_profile(catalog.standard_simplex(d))
        assert prof.hstar == UniPoly([1]) and prof.codegree == d + 1
        assert classify(catalog.standard_simplex(d)).gorenstein_index == d + 1


def test_segment_length_two():
    prof = hstar_profile(catalog.segment(2))
    assert prof.hstar == UniPoly([1, 1]) and prof.ehrhart_counts == (1, 3)


def test_empty_polytope_profile():
    prof = hstar_profile(Polytope.empty(2))
    assert prof.hstar == UniPoly([1]) and prof.degree == 0 and prof.codegree == 0


def test_point_profile():
    prof = hstar_profile(Polytope.from_points([(3, 4)]))
    assert prof.hstar == UniPoly([1]) and prof.codegree == 1


def test_unit_cubes_have_index_two():
    for d in (1, 2, 3, 4):
        assert classify(catalog.unit_cube(d)).gorenstein_index == 2


def test_reflexive_square():
    c = classify(catalog.reflexive_square())
    assert c.reflexive and c.gorenstein_index == 1 and c.interior_point == (0, 0)


def test_cayley_segments_examples():
    P = catalog.cayley_segments_index2()[0]
    assert hstar_profile(P).hstar == UniPoly([1, 0, 1])
    Q = catalog.cayley_segments_nongorenstein()[0]
    assert hstar_profile(Q).hstar == UniPoly([1, 0, 2])
    assert not classify(Q).is_gorenstein


def test_parallelogram_part_and_its_cayley_polytope():
    assert not classify(catalog.parallelogram()).is_gorenstein
    P = catalog.cayley_segment_parallelogram()[0]
    assert hstar_profile(P).hstar == UniPoly([1, 3, 3, 1])
    assert classify(P).gorenstein_index == 2


def test_ehrhart_reciprocity():
    for P in corpus():
        d = P.dim
        xs = list(range(d + 1))
        ys = [ehrhart_value(P, k) for k in xs]
        for k in range(1, d + 3):
            assert P.count_points(k, interior=True) == (-1) ** d * _lagrange(xs, ys, -k)
            assert P.count_points(k) == _lagrange(xs, ys, k)


def test_profile_invariants():
    for P in corpus():
        prof = hstar_profile(P)
        h = prof.hstar
        assert h.nonnegative() and h[0] == 1 and h.degree <= P.dim
        assert prof.codegree == P.dim + 1 - prof.degree
        first = next(k for k in range(1, P.dim + 2) if P.count_points(k, interior=True))
        assert first == prof.codegree
        assert h.leading == P.count_points(prof.codegree, interior=True) if hasattr(h, "leading") \
            else h[h.degree] == P.count_points(prof.codegree, interior=True)


def test_palindromic_iff_gorenstein():
    seen = {True: 0, False: 0}
    for P in corpus():
        c = classify(P)
        h = hstar_profile(P).hstar
        assert h.is_palindromic() == c.is_gorenstein
        seen[c.is_gorenstein] += 1
        if c.is_gorenstein:
            assert h[h.degree] == 1
            assert c.gorenstein_index == hstar_profile(P).codegree
    assert seen[True] and seen[False]


@pytest.mark.parametrize("shift", [(0, 0), (5, -3)])
def test_invariant_under_unimodular_maps(shift):
    for P in catalog.reflexive_polygons()[:6]:
        Q = Polytope.from_points([(x + 2 * y + shift[0], x + 3 * y + shift[1])
                                  for x, y in P.vertices])
        assert hstar_profile(P).hstar == hstar_profile(Q).hstar
        assert classify(P).gorenstein_index == classify(Q).gorenstein_index
