"""Named fan families and blow-up sequences.

Where a family is only drawn, not written down, the coordinates used here
are checked against algebraic fingerprints: the cohomology ring after
eliminating the linear relations, the Stanley-Reisner ideal, or Chern-number
formulas. The twist vector of the Delta(a, b) fan is fixed by a calibration
scan whose result ships in ``data/delta_calibration.json``.
"""
import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import combinations, product

from . import ring
from .charnum import chern_numbers
from .errors import CalibrationError, FanError, ToricError
from .facevec import fan_g_vector
from .fan import Fan, star_subdivide


class ValidationError(ToricError):
    code = "VALIDATION_FAILED"


def _unit(n, k):
    return tuple(int(i == k) for i in range(n))


def cpn(n):
    """Fan of CP^n: rays e_1..e_n and -(e_1+...+e_n), all n-subsets as cones."""
    if not 1 <= n <= 6:
        raise FanError(f"dimension {n} outside 1..6", "DIM_OUT_OF_RANGE")
    rays = [_unit(n, k) for k in range(n)] + [tuple([-1] * n)]
    labels = tuple(f"u{k + 1}" for k in range(n + 1))
    return Fan(n, tuple(rays), tuple(combinations(range(n + 1), n)), labels)


def _kleinschmidt_fan(n, a):
    r = len(a)
    rays = [_unit(n, k) for k in range(r)]
    rays.append(tuple([-1] * r + [0] * (n - r)))
    rays += [_unit(n, k + r) for k in range(n - r)]
    rays.append(tuple(list(a) + [-1] * (n - r)))
    U = range(r + 1)
    V = range(r + 1, n + 2)
    cones = [tuple(sorted((set(U) - {i}) | (set(V) - {j}))) for i in U for j in V]
    labels = tuple([f"u{k + 1}" for k in range(r + 1)] + [f"v{k + 1}" for k in range(n - r + 1)])
    return Fan(n, tuple(rays), tuple(cones), labels)


def kleinschmidt(n, a):
    """Sigma_n(a_1, ..., a_r): U = {e_1..e_r, u_{r+1}}, V = {e_{r+1}..e_n, v}.

    u_{r+1} = (-1, ..., -1, 0, ..., 0) with r entries -1 and
    v = (a_1, ..., a_r, -1, ..., -1); maximal cones omit one ray of U and
    one ray of V.
    """
    a = tuple(int(x) for x in a)
    r = len(a)
    if not 1 <= r <= n - 1:
        raise FanError(f"need 1 <= r <= n - 1, got r = {r}, n = {n}", "PARAM_RANGE")
    if any(x < 0 for x in a) or list(a) != sorted(a):
        raise FanError(f"parameters {a} must satisfy 0 <= a1 <= ... <= ar", "PARAM_ORDER")
    if n == 3:
        _validate_kleinschmidt3(a)
    return _kleinschmidt_fan(n, a)


@lru_cache(maxsize=None)
def _validate_kleinschmidt3(a):
    fan = _kleinschmidt_fan(3, a)
    if len(a) == 1:
        # Z[u2, v3] / (u2^2 - a1 u2 v3, v3^3)
        keep = (1, 4)
        printed = [{(2, 0): 1, (1, 1): -a[0]}, {(0, 3): 1}]
    else:
        # Z[u3, v2] / (u3^3 - (a1 + a2) u3^2 v2, v2^2)
        keep = (2, 4)
        printed = [{(3, 0): 1, (2, 1): -(a[0] + a[1])}, {(0, 2): 1}]
    equal, full = ring.same_ideal(ring.eliminate(ring.presentation(fan), keep), printed, 2, 4)
    if not (equal and full):
        raise ValidationError(f"X_3{a} does not reproduce its cohomology ring")
    return True


def sigma_a(a, validate=True):
    """The cube-like fan Sigma(a): one ray from each of {u1,u2}, {v1,v2}, {w1,w2}."""
    a = int(a)
    rays = ((1, 0, 0), (-1, a, 0), (0, 1, 0), (0, -1, 1), (0, 0, 1), (0, 0, -1))
    cones = tuple(product((0, 1), (2, 3), (4, 5)))
    fan = Fan(3, rays, cones, ("u1", "u2", "v1", "v2", "w1", "w2"))
    if validate:
        _validate_sigma_a(a)
    return fan


@lru_cache(maxsize=None)
def _validate_sigma_a(a):
    fan = sigma_a(a, validate=False)
    gens = ring.eliminate(ring.presentation(fan), keep=(1, 3, 5))
    # Z[u2, v2, w2] / (u2^2, v2^2 - a u2 v2, w2^2 - v2 w2)
    printed = [{(2, 0, 0): 1}, {(0, 2, 0): 1, (1, 1, 0): -a}, {(0, 0, 2): 1, (0, 1, 1): -1}]
    equal, full = ring.same_ideal(gens, printed, 3, 4)
    if not (equal and full):
        raise ValidationError(f"Sigma({a}) does not reproduce its cohomology ring")
    return True


# -- the Delta(a, b) family ------------------------------------------------------

DELTA_LABELS = ("u1", "u2", "u3", "u4", "x", "y", "v1", "v2")
DELTA_SR_IDEAL = (("u2", "y"), ("u3", "u4"), ("u4", "y"), ("v1", "v2"),
                  ("u1", "u2", "x"), ("u1", "u3", "x"))


@lru_cache(maxsize=1)
def delta_left_fan():
    """CP^3 subdivided along pos(u3, u4), then along pos(u1, u3, x)."""
    fan = cpn(3)
    fan = star_subdivide(fan, (2, 3), label="x")
    return star_subdivide(fan, (0, 2, 4), label="y")


def delta_fan_from_twist(alpha):
    """The 4-dim fan with v1 = e4 and v2 = (alpha, -1) over the left fan."""
    left = delta_left_fan()
    rays = tuple(r + (0,) for r in left.rays) + ((0, 0, 0, 1), tuple(alpha) + (-1,))
    v1, v2 = len(left.rays), len(left.rays) + 1
    cones = tuple(c + (v1,) for c in left.max_cones) + tuple(c + (v2,) for c in left.max_cones)
    return Fan(4, rays, cones, DELTA_LABELS)


def delta_stanley_reisner(fan):
    return tuple(tuple(fan.label(i) for i in s) for s in ring.minimal_nonfaces(fan))


@lru_cache(maxsize=1)
def load_delta_calibration():
    try:
        text = resources.files("tcw").joinpath("data/delta_calibration.json").read_text()
    except FileNotFoundError as exc:
        raise CalibrationError("calibration data is missing; run calibrate_delta") from exc
    return json.loads(text)


def delta_twist(a, b, calibration=None):
    cal = calibration or load_delta_calibration()
    base, sa, sb = cal["base"], cal["a_step"], cal["b_step"]
    return tuple(base[k] + a * sa[k] + b * sb[k] for k in range(3))


def delta_ab(a, b, calibration=None):
    """Y(a, b): c1^2c2 = 188 - 6a + 4b and c2^2 = 96 - a, with g = (1, 3, 2)."""
    return delta_fan_from_twist(delta_twist(int(a), int(b), calibration))


def calibrate_delta(box=3):
    """Scan alpha in [-box, box]^3 and find an integer affine map (a, b) -> alpha.

    Returns the calibration dict plus the scan log. Raises CalibrationError
    when the Chern numbers are not affine in alpha on the box or when no
    integral reparameterization exists inside it.
    """
    rng = range(-box, box + 1)
    log = []
    values = {}
    for alpha in product(rng, repeat=3):
        fan = delta_fan_from_twist(alpha)
        cv = chern_numbers(fan)
        values[alpha] = (cv["c1^2*c2"], cv["c2^2"])
        log.append({"alpha": list(alpha), "chern": cv.to_json(),
                    "g": list(fan_g_vector(fan))})
        if cv["c1*c3"] != 64 or cv["c4"] != 16 or fan_g_vector(fan) != [1, 3, 2]:
            raise CalibrationError(f"alpha = {alpha} breaks c1c3 = 64, c4 = 16 or g = (1,3,2)")
    origin = values[(0, 0, 0)]
    slopes = [tuple(values[_unit(3, k)][j] - origin[j] for k in range(3)) for j in range(2)]

    def affine(alpha, j):
        return origin[j] + sum(s * x for s, x in zip(slopes[j], alpha))

    for alpha, (p, q) in values.items():
        if (p, q) != (affine(alpha, 0), affine(alpha, 1)):
            raise CalibrationError(f"Chern numbers are not affine in alpha at {alpha}")

    def lin(alpha, j):
        return sum(s * x for s, x in zip(slopes[j], alpha))

    bases = [al for al in product(rng, repeat=3) if values[al] == (188, 96)]
    a_steps = [al for al in product(rng, repeat=3) if (lin(al, 0), lin(al, 1)) == (-6, -1)]
    b_steps = [al for al in product(rng, repeat=3) if (lin(al, 0), lin(al, 1)) == (4, 0)]
    candidates = [(b0, sa, sb) for b0 in bases for sa in a_steps for sb in b_steps]
    if not candidates:
        raise CalibrationError("no integral calibration in the scan box")
    candidates.sort()
    base, sa, sb = candidates[0]
    cal = {
        "box": box,
        "base": list(base), "a_step": list(sa), "b_step": list(sb),
        "c1^2*c2": {"constant": origin[0], "alpha_slope": list(slopes[0])},
        "c2^2": {"constant": origin[1], "alpha_slope": list(slopes[1])},
        "rule": "lexicographically least (base, a_step, b_step)",
        "alternatives": len(candidates) - 1,
    }
    return cal, {"calibration": cal, "alternatives": [list(map(list, c)) for c in candidates[1:]],
                 "scan": log}


# -- blow-ups --------------------------------------------------------------------

def blowup_fixed_point(fan, cone=None):
    """Star subdivision of a maximal cone (lexicographically first by default)."""
    if cone is None:
        cone = min(fan.max_cones)
    cone = tuple(sorted(cone))
    if cone not in fan.cone_set:
        raise FanError(f"{list(cone)} is not a maximal cone", "CONE_NOT_IN_FAN")
    return star_subdivide(fan, cone)


def blowups(fan, k):
    for _ in range(k):
        fan = blowup_fixed_point(fan)
    return fan


def asymp_subdivisions(fan, edges, vertices, through):
    """Subdivide ``edges`` 3-cones, then ``vertices`` maximal cones, all through ray ``through``.

    Every subdivided cone contains ``through``, so nothing in the closed star
    of a ray that never shares a cone with it is touched. Choices are
    lexicographically first, which makes the sequence deterministic.
    """
    n = fan.dim
    for _ in range(edges):
        cone = min(c for c in fan.faces if len(c) == n - 1 and through in c)
        fan = star_subdivide(fan, cone)
    for _ in range(vertices):
        cone = min(c for c in fan.max_cones if through in c)
        fan = star_subdivide(fan, cone)
    return fan


def asymp_fan(a, b, g1, g2):
    """Y(a, b) taken to g-vector (1, g1, g2) for 2 <= g2 <= g1 - 1."""
    if not 2 <= g2 <= g1 - 1:
        raise FanError(f"g = (1, {g1}, {g2}) is outside 2 <= g2 <= g1 - 1", "PARAM_RANGE")
    return asymp_subdivisions(delta_ab(a, b), g2 - 2, g1 - g2 - 1, DELTA_LABELS.index("v1"))


# -- family specs ------------------------------------------------------------------

FAMILIES = ("cpn", "kleinschmidt", "sigma_a", "delta_ab", "asymp")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple
    blowups: int = 0
    extra: dict = field(default_factory=dict, compare=False)

    def build(self):
        return _build(self.family, tuple(int(p) for p in self.params), self.blowups)

    def to_json(self):
        out = {"family": self.family, "params": list(self.params)}
        if self.blowups:
            out["blowups"] = self.blowups
        return out


@lru_cache(maxsize=8192)
def _build(family, params, k):
    # k-fold blow-ups are built from the cached (k - 1)-fold fan
    if k == 0:
        return build_family(family, params)
    return blowup_fixed_point(_build(family, params, k - 1))


def build_family(family, params):
    params = tuple(int(p) for p in params)
    if family == "cpn":
        (n,) = params
        return cpn(n)
    if family == "kleinschmidt":
        return kleinschmidt(params[0], params[1:])
    if family == "sigma_a":
        (a,) = params
        return sigma_a(a)
    if family == "delta_ab":
        a, b = params
        return delta_ab(a, b)
    if family == "asymp":
        a, b, g1, g2 = params
        return asymp_fan(a, b, g1, g2)
    raise FanError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}",
                   "UNKNOWN_FAMILY")


def freeze_delta_calibration(directory):
    """Write ``delta_calibration.json`` and ``delta_scan_log.json`` into ``directory``."""
    from pathlib import Path
    cal, log = calibrate_delta()
    out = Path(directory)
    (out / "delta_calibration.json").write_text(json.dumps(cal, indent=1) + "\n")
    (out / "delta_scan_log.json").write_text(json.dumps(log) + "\n")
    return cal
