import json

import pytest

from corpus import of_dim
from tcw.charnum import chern_numbers
from tcw.constructions import (FAMILIES, FamilySpec, asymp_fan, asymp_subdivisions,
                               blowup_fixed_point, blowups, build_family, calibrate_delta,
                               cpn, delta_ab, kleinschmidt, load_delta_calibration, sigma_a)
from tcw.constructions import DELTA_LABELS
from tcw.errors import FanError
from tcw.facevec import fan_g_vector
from tcw.fan import is_complete, is_projective, is_regular, star_subdivide

GRID = [FamilySpec("cpn", (n,)) for n in (1, 2, 3, 4)] + \
    [FamilySpec("kleinschmidt", (3, a)) for a in range(3)] + \
    [FamilySpec("kleinschmidt", (3, 1, 2)), FamilySpec("kleinschmidt", (4, 0, 2)),
     FamilySpec("kleinschmidt", (4, 1, 1, 2))] + \
    [FamilySpec("sigma_a", (a,)) for a in (-2, 0, 3)] + \
    [FamilySpec("delta_ab", (a, b)) for a, b in ((0, 0), (2, -1))] + \
    [FamilySpec("asymp", (1, 0, 5, 3)), FamilySpec("sigma_a", (1,), blowups=2)]


def test_cpn():
    assert cpn(1).rays == ((1,), (-1,))
    assert chern_numbers(cpn(3)).values == (64, 24, 4)


def test_kleinschmidt_parameters():
    assert chern_numbers(kleinschmidt(3, (4,)))["c1^3"] == 86
    for a in range(4):
        for b in range(a, 4):
            assert chern_numbers(kleinschmidt(3, (a, b)))["c1^3"] == 54
    with pytest.raises(FanError) as err:
        kleinschmidt(3, (1, 2, 3))
    assert err.value.code == "PARAM_RANGE"
    with pytest.raises(FanError) as err:
        kleinschmidt(3, (2, 1))
    assert err.value.code == "PARAM_ORDER"


def test_sigma_a():
    for a in (-3, 0, 3):
        assert chern_numbers(sigma_a(a)).values == (48 + 2 * a, 24, 8)


def test_delta_ab():
    assert chern_numbers(delta_ab(2, 1))["c1^2*c2"] == 180
    assert chern_numbers(delta_ab(2, 1))["c2^2"] == 94
    assert fan_g_vector(delta_ab(-1, 2)) == [1, 3, 2]


def test_frozen_calibration_reproduces():
    cal, log = calibrate_delta()
    assert cal == load_delta_calibration()
    assert len(log["alternatives"]) == len(json.loads(json.dumps(log["alternatives"])))


def test_blowups():
    assert chern_numbers(blowup_fixed_point(cpn(3))).values == (56, 24, 6)
    assert chern_numbers(blowup_fixed_point(sigma_a(0))).values == (40, 24, 10)
    assert chern_numbers(blowups(cpn(3), 2)).values == (48, 24, 8)
    with pytest.raises(FanError) as err:
        blowup_fixed_point(cpn(3), (0, 1))
    assert err.value.code == "CONE_NOT_IN_FAN"


def test_grid_is_smooth_projective():
    for spec in GRID:
        fan = spec.build()
        assert is_regular(fan) and is_complete(fan) and is_projective(fan), spec


def test_point_blowup_delta_is_local_in_dim_4():
    deltas = set()
    for name, fan in of_dim(4)[:12]:
        before = chern_numbers(fan)
        for cone in fan.max_cones[:4]:
            deltas.add((chern_numbers(star_subdivide(fan, cone)) - before).values)
    assert deltas == {(-81, -18, -4, 6, 3)}


def test_asymp_deltas_do_not_depend_on_ab():
    v1 = DELTA_LABELS.index("v1")
    for edges, vertices in ((1, 0), (0, 2), (2, 1)):
        seen = set()
        for a, b in ((0, 0), (2, -1), (-1, 3)):
            base = delta_ab(a, b)
            moved = asymp_subdivisions(base, edges, vertices, v1)
            seen.add((chern_numbers(moved) - chern_numbers(base)).values)
        assert len(seen) == 1


@pytest.mark.parametrize("g1,g2", [(3, 2), (5, 3), (6, 2), (6, 5)])
def test_asymp_reaches_target(g1, g2):
    assert fan_g_vector(asymp_fan(0, 1, g1, g2)) == [1, g1, g2]


def test_asymp_range():
    with pytest.raises(FanError) as err:
        asymp_fan(0, 0, 3, 3)
    assert err.value.code == "PARAM_RANGE"


def test_family_specs():
    spec = FamilySpec("sigma_a", (2,), blowups=1)
    assert spec.to_json() == {"family": "sigma_a", "params": [2], "blowups": 1}
    assert spec.build() == blowups(sigma_a(2), 1)
    assert set(FAMILIES) == {s.family for s in GRID}
    with pytest.raises(FanError) as err:
        build_family("hirzebruch", (1,))
    assert err.value.code == "UNKNOWN_FAMILY"
