import random
from itertools import combinations_with_replacement

import pytest

from corpus import corpus, named
from oracles import chern_by_reduction
from tcw import ring
from tcw.charnum import chern_numbers
from tcw.constructions import (DELTA_SR_IDEAL, cpn, delta_ab, delta_stanley_reisner,
                               kleinschmidt, sigma_a)
from tcw.errors import EvaluationError, FanError
from tcw.fan import Fan
from tcw.kernels import available_backends


def test_cp2_examples():
    fan = cpn(2)
    assert ring.evaluate(fan, [0, 1]) == 1
    assert ring.evaluate(fan, [0, 0]) == 1
    assert ring.evaluate(fan, {2: 2}) == 1


def test_non_face_vanishes():
    fan = sigma_a(0)
    # u1 and u2 never share a cone
    assert ring.evaluate(fan, [0, 1, 2]) == 0
    assert ring.evaluate(fan, [0, 2, 4]) == 1


def test_minimal_nonfaces():
    assert ring.minimal_nonfaces(cpn(3)) == ((0, 1, 2, 3),)
    assert ring.minimal_nonfaces(sigma_a(2)) == ((0, 1), (2, 3), (4, 5))
    assert sorted(delta_stanley_reisner(delta_ab(1, 1))) == sorted(DELTA_SR_IDEAL)


@pytest.mark.parametrize("a", [-3, 0, 1, 4])
def test_sigma_ring_after_elimination(a):
    gens = ring.eliminate(ring.presentation(sigma_a(a)), (1, 3, 5))
    printed = [{(2, 0, 0): 1}, {(0, 2, 0): 1, (1, 1, 0): -a}, {(0, 0, 2): 1, (0, 1, 1): -1}]
    assert ring.same_ideal(gens, printed, 3, 4) == (True, True)
    wrong = [{(2, 0, 0): 1}, {(0, 2, 0): 1, (1, 1, 0): -(a + 1)}, {(0, 0, 2): 1, (0, 1, 1): -1}]
    assert not ring.same_ideal(gens, wrong, 3, 4)[0]


@pytest.mark.parametrize("a", [(0, 0), (1, 2), (3, 3)])
def test_kleinschmidt_ring_after_elimination(a):
    gens = ring.eliminate(ring.presentation(kleinschmidt(3, a)), (2, 4))
    printed = [{(3, 0): 1, (2, 1): -(a[0] + a[1])}, {(0, 2): 1}]
    assert ring.same_ideal(gens, printed, 2, 4) == (True, True)


def test_eliminate_needs_complementary_basis():
    with pytest.raises(ValueError):
        ring.eliminate(ring.presentation(cpn(3)), (0, 1))


def test_probe_independence():
    rng = random.Random(7)
    for name, fan in corpus()[::5]:
        monos = list(combinations_with_replacement(range(fan.nrays), fan.dim))
        base = ring.fixed_point_weights(fan)
        m0 = max(abs(w) for row in base for w in row)
        for mono in rng.sample(monos, min(8, len(monos))):
            values = {ring.evaluate(fan, mono, scale=s) for s in (None, 3 * m0 + 1, 97)}
            assert len(values) == 1, (name, mono)


def test_linear_relations_annihilate():
    # sum_j <e_i, r_j> v_j = 0, so multiplying it by any degree n-1 monomial gives 0
    rng = random.Random(11)
    for name, fan in corpus()[::4]:
        for _ in range(4):
            base = [rng.randrange(fan.nrays) for _ in range(fan.dim - 1)]
            for i in range(fan.dim):
                total = sum(r[i] * ring.evaluate(fan, base + [j])
                            for j, r in enumerate(fan.rays) if r[i])
                assert total == 0, (name, base, i)


def test_reduction_matches_localization():
    for name, fan in named().items():
        if fan.nrays > 9:
            continue
        assert chern_by_reduction(fan) == chern_numbers(fan).values, name


def test_backends_agree():
    fan = delta_ab(1, -1)
    monos = list(combinations_with_replacement(range(fan.nrays), 4))
    results = [list(ring.evaluate_many(fan, monos, backend=b)) for b in available_backends()]
    assert all(r == results[0] for r in results)


def test_evaluation_errors():
    fan = cpn(2)
    with pytest.raises(EvaluationError) as err:
        ring.evaluate(fan, [0])
    assert err.value.code == "BAD_DEGREE"
    with pytest.raises(EvaluationError) as err:
        ring.evaluate(fan, {5: 2})
    assert err.value.code == "BAD_MONOMIAL"
    singular = Fan(2, ((1, 0), (1, 2), (-1, -1)), ((0, 1), (1, 2), (0, 2)))
    with pytest.raises(FanError) as err:
        ring.evaluate(singular, [0, 1])
    assert err.value.code == "NOT_REGULAR"
