from fractions import Fraction

from corpus import corpus
from tcw.charnum import ChernVector, chern_numbers
from tcw.facevec import fan_g_vector
from tcw.obstructions import (feasible_g_for, g_vectors_with_euler, obstruction_equations,
                              obstruction_system, parity_conditions, violated_relations)


def _solved(n, g):
    return {pivot: (dict(terms), const) for pivot, terms, const in obstruction_equations(n, g)}


def test_dimension_3():
    eq = _solved(3, [1, 0])
    assert eq[(3,)] == ({}, 4)
    assert eq[(2, 1)] == ({}, 24)


def test_dimension_4():
    eq = _solved(4, [1, 0, 0])
    assert eq[(4,)] == ({}, 5)
    assert eq[(3, 1)] == ({}, 50)
    assert eq[(1, 1, 1, 1)] == ({(2, 1, 1): 4, (2, 2): 3}, -675)
    eq = _solved(4, [1, 3, 2])
    assert eq[(4,)][1] == 16 and eq[(3, 1)][1] == 64


def test_rendering():
    assert [r.render() for r in obstruction_system(3)] == ["c3 = 2*g1 + 4", "c1*c2 = 24"]
    assert all(isinstance(c, Fraction) for r in obstruction_system(5) for c in r.g_coeffs)


def test_feasible_examples():
    assert feasible_g_for(ChernVector(4, (-672, 0, 1, 50, 5))) == [(1, 0, 0)]
    assert feasible_g_for(ChernVector(4, (625, 250, 100, 50, 5))) == [(1, 0, 0)]
    assert feasible_g_for(ChernVector(4, (625, 250, 100, 50, 4))) == []
    assert g_vectors_with_euler(4, 4) == []
    assert g_vectors_with_euler(3, 8) == [(1, 2)]


def test_parity_conditions():
    assert parity_conditions(ChernVector(4, (625, 250, 100, 50, 5))) == []
    assert parity_conditions(ChernVector(4, (0, 1, 0, 0, 0))) != []


def test_corpus_relations_hold_exactly_at_own_g():
    for name, fan in corpus():
        cv = chern_numbers(fan)
        g = fan_g_vector(fan)
        assert not violated_relations(cv, g), name
        if len(g) > 1:
            other = list(g)
            other[1] += 1
            assert violated_relations(cv, other), name
        assert tuple(g) in feasible_g_for(cv), name
