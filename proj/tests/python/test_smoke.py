import itertools

import pytest

import hbtopo

K5 = [list(e) for e in itertools.combinations(range(5), 2)]


def test_betti_of_k5():
    assert hbtopo.betti(K5, reduced=True) == [0, 6]
    assert hbtopo.f_vector([[0, 1, 2]]) == [3, 3, 1]


def test_obstruction():
    assert hbtopo.obstruction_nonzero(K5, 2)
    assert not hbtopo.obstruction_nonzero([[0, 1, 2]], 2)
    with pytest.raises(hbtopo.BudgetExceeded):
        hbtopo.obstruction_nonzero(K5, 2, budget=10)


def test_helly_of_examples():
    assert hbtopo.helly_number(hbtopo.example("gamma", b=1, d=2)) == 4
    assert hbtopo.helly_number(hbtopo.example("interval", n=3)) == 3


def test_subdivision_and_staircases():
    tops, labels = hbtopo.barycentric_subdivision([[0, 1, 2]])
    assert len(tops) == 6 and len(labels) == 7
    assert len(hbtopo.eml_triangulation(2, 1)) == 3
    assert hbtopo.eml_flip_check(2, 2)


def test_rescale():
    pi, windows = hbtopo.rescale([2, 3], 5, [1, 2, 3, 4, 5], list(range(35)),
                                 [list(p) for p in itertools.combinations(range(1, 6), 2)])
    assert sorted(pi) == [1, 2, 3, 4, 5]
    assert all(len(w) == 5 for w in windows)


def test_build_and_verify():
    family = hbtopo.example("skeleton", n=6, k=1)
    bundle = hbtopo.build_ccm([[0, 1], [1, 2], [0, 2]], family, 1)
    assert hbtopo.verify_constrained(bundle) == []
    assert hbtopo.almost_embedding_verdict(bundle)
    with pytest.raises(hbtopo.InsufficientFamily):
        hbtopo.build_ccm(K5, family, 1)


def test_bad_input():
    with pytest.raises(ValueError):
        hbtopo.betti([[0, 0]])
