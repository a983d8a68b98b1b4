from itertools import product

import pytest

from corpus import corpus
from tcw.constructions import cpn, delta_ab, sigma_a
from tcw.errors import FanError
from tcw.facevec import fan_g_vector
from tcw.fan import (Fan, all_cones, closed_star, face_count_vector, is_complete,
                     is_projective, is_regular, star, star_subdivide)

CP2 = Fan(2, ((1, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2), (0, 2)))


def test_regular_examples():
    assert is_regular(cpn(3))
    assert not is_regular(Fan(2, ((1, 0), (1, 2), (-1, -1)), ((0, 1), (1, 2), (0, 2))))
    assert is_regular(sigma_a(5))


def test_complete_examples():
    assert is_complete(CP2)
    assert not is_complete(Fan(2, CP2.rays, ((0, 1), (1, 2))))
    assert is_complete(delta_ab(0, 0))


def test_overlapping_cones_rejected():
    # a pentagram: five cones winding twice around the origin
    fan = Fan(2, ((1, 0), (-2, 1), (1, -2), (0, 1), (-1, -2)),
              ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4)))
    with pytest.raises(FanError) as err:
        is_complete(fan)
    assert err.value.code == "REJECT_NON_SIMPLICIAL"
    # a ray shared by three cones is simply not complete
    fan = Fan(2, ((1, 0), (0, 1), (1, 1), (-1, -1)),
              ((0, 1), (0, 2), (1, 3), (0, 3)))
    assert not is_complete(fan)


def test_projective_examples():
    for n in range(1, 5):
        assert is_projective(cpn(n))
    assert is_projective(sigma_a(2))


def test_non_projective_complete_fan():
    # P^3 with the cone around (1,1,1) cut down by an inner triangle; the
    # annulus between the triangles is split by one diagonal per quadrilateral.
    # Only the two uniformly twisted splittings fail to be projective.
    rays = ((-1, 0, 0), (0, -1, 0), (0, 0, -1), (1, 1, 1), (0, 1, 1), (1, 0, 1), (1, 1, 0))
    w1, w2, w3 = 4, 5, 6
    core = ((0, 1, 2), (w1, w2, 3), (w2, w3, 3), (w1, w3, 3))
    quads = ([((0, w1, w2), (0, 1, w2)), ((0, 1, w1), (1, w1, w2))],
             [((1, w2, w3), (1, 2, w3)), ((1, 2, w2), (2, w2, w3))],
             [((2, w3, w1), (2, 0, w1)), ((2, 0, w3), (0, w3, w1))])
    for choice in product(range(2), repeat=3):
        cones = core + sum((quads[k][c] for k, c in enumerate(choice)), ())
        fan = Fan(3, rays, cones)
        assert is_regular(fan) and is_complete(fan)
        assert is_projective(fan) == (len(set(choice)) == 2), choice


def test_all_cones_counts():
    assert [len(c) for c in all_cones(CP2)] == [1, 3, 3]
    assert [len(c) for c in all_cones(cpn(3))] == [1, 4, 6, 4]
    assert [len(c) for c in all_cones(sigma_a(0))] == [1, 6, 12, 8]


def test_face_count_vector():
    assert face_count_vector(cpn(3)) == (4, 6, 4)
    assert face_count_vector(sigma_a(1)) == (6, 12, 8)
    assert face_count_vector(delta_ab(0, 0)) == (8, 24, 32, 16)


def test_closed_star():
    fan = cpn(3)
    sigma = fan.max_cones[0]
    assert star(fan, sigma) == [sigma]
    assert len(closed_star(fan, sigma)) == 8
    assert len(star(fan, (2, 3))) == 2
    whole = closed_star(fan, ())
    assert len(whole) == 1 + 4 + 6 + 4
    with pytest.raises(FanError) as err:
        closed_star(fan, (0, 1, 2, 3))
    assert err.value.code == "CONE_NOT_IN_FAN"


def test_star_subdivide_examples():
    fan = star_subdivide(cpn(3), (0, 1, 2))
    assert fan.rays[-1] == (1, 1, 1)
    assert len(fan.max_cones) == 6
    with pytest.raises(FanError) as err:
        star_subdivide(cpn(3), (0,))
    assert err.value.code == "DIM_TOO_SMALL"


def test_star_subdivision_preserves_regular_complete():
    for name, fan in corpus()[:30]:
        for tau in sorted(c for c in fan.faces if len(c) >= 2)[:6]:
            sub = star_subdivide(fan, tau)
            assert is_regular(sub) and is_complete(sub), (name, tau)


def test_g_vector_changes_under_subdivision():
    for name, fan in corpus():
        n = fan.dim
        if n < 3:
            continue
        g = fan_g_vector(fan)
        vertex = fan_g_vector(star_subdivide(fan, fan.max_cones[0]))
        assert vertex == [g[0], g[1] + 1] + g[2:], name
        if n >= 4:
            edge = min(c for c in fan.faces if len(c) == n - 1)
            moved = fan_g_vector(star_subdivide(fan, edge))
            assert moved[:3] == [1, g[1] + 1, g[2] + 1], name


def test_invalid_fans():
    with pytest.raises(FanError):
        Fan(2, ((1, 0), (1, 0), (0, 1)), ((0, 2), (1, 2)))
    with pytest.raises(FanError), pytest.warns(UserWarning, match="not primitive"):
        Fan(2, ((1, 0), (0, 1), (2, 2)), ((0, 1),))
    with pytest.raises(FanError), pytest.warns(UserWarning, match="not primitive"):
        Fan(2, ((1, 0), (2, 0), (0, 1)), ((0, 1), (1, 2)))
    with pytest.raises(FanError):
        Fan(2, ((0, 0), (0, 1)), ((0, 1),))


def test_json_round_trip():
    fan = delta_ab(1, 2)
    assert Fan.from_json(fan.to_json()) == fan
    with pytest.raises(FanError):
        Fan.from_json({"dim": 2})
