from fractions import Fraction
from itertools import product

import numpy as np
from hypothesis import given, strategies as st

from corpus import corpus
from tcw.charnum import ChernVector, chern_numbers
from tcw.golden import K3, K4
from tcw.ktheory import (Congruence, ch_gamma, derive_divisibility_lattice,
                         hattori_stong_check, kappa_form, kappa_forms, kappa_mask,
                         membership_mask, same_admissible_set)
from tcw.obstructions import parity_conditions

F = Fraction


def test_ch_gamma():
    assert ch_gamma(1, 1).coeffs == {(1,): 1}
    assert ch_gamma(2, 2).coeffs == {(1, 1): 1}
    assert ch_gamma(1, 3).coeffs == {(1,): 1, (2,): F(1, 2), (3,): F(1, 6)}


def test_kappa_examples():
    assert kappa_form((), 3).beta == (0, F(1, 24), 0)
    assert kappa_form((1,), 3).beta == (F(1, 2), F(-11, 12), F(1, 2))
    assert kappa_form((1, 1, 1), 4).beta == (0, 0, 0, 1, -2)
    assert kappa_form((), 1).beta == (F(1, 2),)


def test_hattori_stong_examples():
    assert hattori_stong_check(ChernVector(3, (64, 24, 4)))[0]
    ok, failures = hattori_stong_check(ChernVector(3, (64, 24, 5)))
    assert not ok and failures
    assert hattori_stong_check(ChernVector(3, (0, 0, 0)))[0]


def test_lattices():
    assert derive_divisibility_lattice(1) == (Congruence((1,), 2),)
    assert sorted((c.row, c.modulus) for c in derive_divisibility_lattice(3)) == \
        sorted((c.row, c.modulus) for c in K3)
    assert same_admissible_set(derive_divisibility_lattice(4), K4, 5)
    assert not same_admissible_set(derive_divisibility_lattice(4), K4[1:], 5)


def test_residue_scan_dimension_3():
    lattice = derive_divisibility_lattice(3)
    for values in product(range(48), repeat=3):
        cv = ChernVector(3, values)
        assert all(c.holds(values) for c in lattice) == hattori_stong_check(cv)[0]


def test_masks_agree_on_random_points():
    rng = np.random.default_rng(3)
    pts = rng.integers(-5000, 5000, size=(20000, 5))
    assert (membership_mask(pts, derive_divisibility_lattice(4)) == kappa_mask(pts, 4)).all()


def test_corpus_fans_are_cobordism_classes():
    for name, fan in corpus():
        cv = chern_numbers(fan)
        for form in kappa_forms(fan.dim):
            assert form.evaluate(cv).denominator == 1, (name, form.omega)


@given(st.lists(st.integers(-30, 30), min_size=5, max_size=5))
def test_parities_follow_from_lattice(free):
    # on the subspace cut out by the g-relations, the lattice implies the two parities
    c12c2, c22, g1, g2, t = free
    g1, g2 = abs(g1), abs(g2)
    c4 = 3 * g1 + g2 + 5
    c1c3 = 6 * g1 - 2 * g2 + 50
    c14 = 4 * c12c2 + 3 * c22 + 3 * g1 - 3 * g2 - 675
    cv = ChernVector(4, (c14, c12c2, c22, c1c3, c4))
    if hattori_stong_check(cv)[0]:
        assert parity_conditions(cv) == []
