import pytest

from corpus_checks import conjecture_failures, generated_corpus, property_failures

CORPUS = generated_corpus()


def test_corpus_composition():
    names = [P.name for P in CORPUS]
    assert sum(n.startswith("grid_simplex") for n in names) == 37
    assert sum(n.startswith("reflexive_polygon") for n in names) == 16
    assert "cayley_tetra_pair_7d" in names


@pytest.mark.parametrize("P", CORPUS, ids=lambda P: P.name)
def test_properties(P):
    assert property_failures(P) == []


@pytest.mark.parametrize("P", CORPUS, ids=lambda P: P.name)
def test_conjecture_parts(P):
    assert conjecture_failures(P) in (None, [])
