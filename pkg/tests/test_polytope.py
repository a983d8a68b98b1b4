import pytest

from tcw.errors import PolytopeError
from tcw.facevec import f_to_h
from tcw.fan import is_complete, is_projective, is_regular
from tcw.polytope import (PolytopeH, cube, dilate, face_counts, h_vector_by_index,
                          is_simple, is_smooth, normal_fan, prism, simplex,
                          truncate_vertex, vertices)

SQUARE = PolytopeH(2, (((1, 0), 0), ((0, 1), 0), ((-1, 0), 1), ((0, -1), 1)))
PYRAMID = PolytopeH(3, (((0, 0, 1), 0), ((1, 0, -1), 1), ((-1, 0, -1), 1),
                        ((0, 1, -1), 1), ((0, -1, -1), 1)))

SMOOTH = [simplex(3), cube(3), prism(simplex(2)), prism(simplex(3)), cube(4),
          truncate_vertex(dilate(cube(2), 2), 0), truncate_vertex(dilate(simplex(3), 3), 0)]


def test_vertex_counts():
    assert len(vertices(SQUARE)) == 4
    assert len(vertices(simplex(3))) == 4
    verts = vertices(cube(3))
    assert len(verts) == 8 and all(len(t) == 3 for _, t in verts)


def test_simple_and_smooth():
    assert is_simple(cube(3)) and is_smooth(cube(3))
    assert not is_simple(PYRAMID)
    assert is_smooth(simplex(2, 2))


def test_normal_fans():
    fan = normal_fan(simplex(3))
    assert len(fan.rays) == 4 and len(fan.max_cones) == 4
    fan = normal_fan(cube(3))
    assert len(fan.rays) == 6 and len(fan.max_cones) == 8
    pentagon = truncate_vertex(dilate(cube(2), 2), 0)
    assert len(normal_fan(pentagon).max_cones) == 5
    with pytest.raises(PolytopeError) as err:
        normal_fan(PYRAMID)
    assert err.value.code == "NOT_SIMPLE"


def test_h_vector_examples():
    assert h_vector_by_index(simplex(3), (1, 2, 4)) == [1, 1, 1, 1]
    assert h_vector_by_index(cube(3), (1, 2, 4)) == [1, 3, 3, 1]
    assert h_vector_by_index(prism(simplex(2)), (1, 3, 7)) == [1, 2, 2, 1]


def test_h_vector_independent_of_nu():
    for p in SMOOTH:
        expected = f_to_h(face_counts(p), p.dim)
        for nu in [None, tuple(5 ** k for k in range(p.dim)),
                   tuple((-3) ** k + k for k in range(p.dim)),
                   tuple(7 ** (p.dim - k) for k in range(p.dim))]:
            assert h_vector_by_index(p, nu) == expected


def test_nu_degenerate():
    with pytest.raises(PolytopeError) as err:
        h_vector_by_index(cube(2), (1, 0))
    assert err.value.code == "NU_DEGENERATE"


def test_smooth_normal_fans_are_projective():
    for p in SMOOTH:
        assert is_smooth(p)
        fan = normal_fan(p)
        assert is_regular(fan) and is_complete(fan) and is_projective(fan)


def test_bad_polytopes():
    with pytest.raises(PolytopeError) as err:
        PolytopeH(2, (((2, 0), 0),))
    assert err.value.code == "BAD_POLYTOPE"
    half_plane = PolytopeH(2, (((1, 0), 0), ((0, 1), 0), ((1, 1), 5)))
    with pytest.raises(PolytopeError) as err:
        vertices(half_plane)
    assert err.value.code == "UNBOUNDED"
    redundant = PolytopeH(2, SQUARE.facets + (((1, 1), 5),))
    with pytest.raises(PolytopeError) as err:
        vertices(redundant)
    assert err.value.code == "REDUNDANT"


def test_json_round_trip():
    p = prism(simplex(2))
    assert PolytopeH.from_json(p.to_json()) == p
