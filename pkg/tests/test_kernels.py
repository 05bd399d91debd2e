import os
import subprocess
import sys

import pytest

from gorenstein import catalog
from gorenstein.core import _kernels

CASES = [(catalog.unit_cube(3), 6), (catalog.cross_polytope(3), 5),
         (catalog.standard_simplex(4), 4), (catalog.reflexive_polygons()[15], 7)]


@pytest.mark.parametrize("P,k", CASES, ids=lambda x: getattr(x, "name", str(x)))
def test_backends_agree(P, k):
    for interior in (False, True):
        a = P.count_points(k, interior, which="numba")
        b = P.count_points(k, interior, which="numpy")
        assert a == b
        pa = P.local_points(k, interior, which="numba")
        pb = P.local_points(k, interior, which="numpy")
        assert sorted(pa) == sorted(pb) and len(pa) == a


def test_half_lattice_backends_agree(diamond_pair):
    P = diamond_pair[0]
    assert P.count_points(3, which="numba") == P.count_points(3, which="numpy")


def test_large_dilates_use_exact_fallback():
    from gorenstein.core.polytope import Polytope
    P = Polytope.from_points([(0,), (2 ** 40,)])
    k = 2 ** 30
    for which in ("numba", "numpy"):
        assert P.count_points(k, which=which) == 2 ** 70 + 1
        assert P.count_points(k, interior=True, which=which) == 2 ** 70 - 1


def test_environment_flag_selects_numpy():
    env = dict(os.environ, GORENSTEIN_NO_NUMBA="1")
    code = ("from gorenstein.core import _kernels; from gorenstein import catalog;"
            "print(_kernels.backend(), catalog.unit_cube(3).count_points(4))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    assert out == ["numpy", "125"]


def test_default_backend_prefers_numba(monkeypatch):
    monkeypatch.delenv("GORENSTEIN_NO_NUMBA", raising=False)
    assert _kernels.backend() == ("numba" if _kernels.HAVE_NUMBA else "numpy")
