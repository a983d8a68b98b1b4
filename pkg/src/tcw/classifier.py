"""Which Chern vectors are realized by smooth projective toric varieties.

Dimensions 1 to 3 are decided completely. In dimension 4 the decided
regions are g1 = 0, g1 = 1 (the six-ray fans) and 2 <= g2 <= g1 - 1; any
other query comes back as ``Unknown`` with a tag naming the open region.

Every ``Representable`` verdict carries a witness fan, and the Chern numbers
of that fan are recomputed and compared with the query before returning.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import isqrt

from . import exact
from .charnum import ChernVector, chern_numbers, todd_genus
from .constructions import (DELTA_LABELS, FamilySpec, _kleinschmidt_fan,
                            asymp_subdivisions, delta_ab)
from .errors import ToricError
from .ktheory import derive_divisibility_lattice, hattori_stong_check
from .obstructions import feasible_g_for
from .symfun import render

REPRESENTABLE = "Representable"
NOT_REPRESENTABLE = "NotRepresentable"
UNKNOWN = "Unknown"

TAG_G1_1 = "Ω₈ g₁=1 scan bound"
TAG_G1_2 = "Ω₈ g₁=2 Batyrev region"
TAG_OUTSIDE = "Ω₈ outside asymp region"

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_SUP = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def pretty(part):
    """``(2, 1, 1)`` -> ``"c₁²c₂"``."""
    out = []
    for factor in render(part).split("*"):
        base, _, exp = factor.partition("^")
        out.append("c" + base[1:].translate(_SUB) + exp.translate(_SUP))
    return "".join(out)


class WitnessMismatch(ToricError):
    code = "WITNESS_MISMATCH"


@dataclass
class Verdict:
    status: str
    reason: str
    certificate: dict = field(default_factory=dict)
    witness: FamilySpec = None
    fan: object = None
    chern: ChernVector = None
    tag: str = None

    def to_json(self, include_fan=True):
        out = {"status": self.status, "reason": self.reason}
        if self.certificate:
            out["certificate"] = self.certificate
        if self.tag:
            out["tag"] = self.tag
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
            out["recomputed"] = self.chern.to_json()
            if include_fan:
                out["fan"] = self.fan.to_json()
        return out


def _no(reason, **certificate):
    return Verdict(NOT_REPRESENTABLE, reason, certificate)


def _unknown(tag, reason, **certificate):
    return Verdict(UNKNOWN, reason, certificate, tag=tag)


def _witness(query, spec, fan, reason):
    cv = chern_numbers(fan)
    if cv != query:
        raise WitnessMismatch(f"{spec.to_json()} recomputes to {cv.to_json()}, "
                              f"not {query.to_json()}")
    return Verdict(REPRESENTABLE, reason, {}, spec, fan, cv)


def _witness_from_spec(query, spec, reason):
    return _witness(query, spec, spec.build(), reason)


def _integrality(cv):
    ok, failures = hattori_stong_check(cv)
    if ok:
        return None
    broken = [c.render(cv.n) for c in derive_divisibility_lattice(cv.n) if not c.holds(cv.values)]
    omega, value = failures[0]
    return _no("not the Chern vector of any cobordism class",
               violated=broken, kappa={"omega": list(omega), "value": str(value)})


# -- dimensions 1 to 3 ---------------------------------------------------------------

def classify_omega2(c1):
    query = ChernVector(1, (int(c1),))
    if c1 != 2:
        return _no(f"Todd genus is {Fraction(c1, 2)}, not 1",
                   violated=["c1 = 2"])
    return _witness_from_spec(query, FamilySpec("cpn", (1,)), "the only class is CP^1")


def classify_omega4(c1sq, c2):
    query = ChernVector(2, (int(c1sq), int(c2)))
    td = todd_genus(query)
    if td != 1:
        return _no(f"Todd genus is {td}, not 1", violated=["c1^2 + c2 = 12"])
    if c2 < 3:
        return _no("a smooth complete toric surface has at least 3 rays",
                   violated=["c2 >= 3"])
    spec = FamilySpec("cpn", (2,), blowups=c2 - 3)
    return _witness_from_spec(query, spec, f"{c2 - 3} blow-ups of CP^2")


def classify_omega6(c13, c1c2, c3):
    query = ChernVector.from_mapping({"c1^3": c13, "c1*c2": c1c2, "c3": c3}, n=3)
    bad = _integrality(query)
    if bad:
        return bad
    if c1c2 != 24:
        return _no("c1*c2 = 24 for every smooth projective toric 3-fold",
                   violated=["c1*c2 = 24"])
    if c3 < 4:
        return _no("c3 = 2*g1 + 4 with g1 >= 0", violated=["c3 >= 4"])
    if c3 == 4:
        if c13 != 64:
            return _no("c3 = 4 forces CP^3, and c1^3 != 64", violated=["c1^3 = 64"])
        return _witness_from_spec(query, FamilySpec("cpn", (3,)), "CP^3")
    if c3 == 6:
        a2, rem = divmod(c13 - 54, 2)
        a = isqrt(a2) if a2 >= 0 else -1
        if rem or a < 0 or a * a != a2:
            return _no("c3 = 6 forces X_3(a) or X_3(a1, a2), and c1^3 != 2a^2 + 54",
                       violated=["c1^3 = 2a^2 + 54"])
        spec = FamilySpec("kleinschmidt", (3, a))
        return _witness_from_spec(query, spec, f"X_3({a}) has c1^3 = 2*{a}^2 + 54")
    k = (c3 - 8) // 2
    a = (c13 - 48 + 8 * k) // 2
    spec = FamilySpec("sigma_a", (a,), blowups=k)
    return _witness_from_spec(query, spec, f"Sigma({a}) with {k} fixed-point blow-ups")


# -- dimension 4 ---------------------------------------------------------------------

CP4 = (625, 250, 100, 50, 5)


@lru_cache(maxsize=None)
def asymp_deltas(edges, vertices):
    """Chern change of the frozen subdivision sequence, measured on Y(0, 0)."""
    base = delta_ab(0, 0)
    moved = asymp_subdivisions(base, edges, vertices, DELTA_LABELS.index("v1"))
    return chern_numbers(moved) - chern_numbers(base)


def _asymp_witness(cv, g):
    _, g1, g2 = g
    e, v = g2 - 2, g1 - g2 - 1
    d = asymp_deltas(e, v)
    a = 96 + d["c2^2"] - cv["c2^2"]
    b4 = cv["c1^2*c2"] - d["c1^2*c2"] - 188 + 6 * a
    if b4 % 4:
        raise WitnessMismatch(f"b = {Fraction(b4, 4)} is not an integer for {cv.to_json()}")
    if (e, v) == (0, 0):
        spec = FamilySpec("delta_ab", (a, b4 // 4))
    else:
        spec = FamilySpec("asymp", (a, b4 // 4, g1, g2))
    return _witness_from_spec(cv, spec,
                              f"Y({a}, {b4 // 4}) with {e} edge and {v} vertex subdivisions")


def _monomials(nvars, degree):
    out = []
    for d in range(degree + 1):
        for combo in combinations_with_replacement(range(nvars), d):
            out.append(tuple(combo.count(i) for i in range(nvars)))
    return out


@lru_cache(maxsize=None)
def kleinschmidt_polynomials(r, degree=4, check=6):
    """Chern numbers of X_4(a_1..a_r) as polynomials in the a_i.

    Fitted by exact interpolation on the simplex of lattice points of total
    degree <= ``degree`` and then checked against direct computation on every
    weakly increasing tuple with entries <= ``check``.
    Returns ``{partition: {exponent tuple: Fraction}}``.
    """
    monos = _monomials(r, degree)
    points = monos
    values = [chern_numbers(_kleinschmidt_fan(4, p)) for p in points]
    matrix = [[_mono_value(m, p) for m in monos] for p in points]
    inv = exact.inverse(matrix)
    polys = {}
    for j, part in enumerate(values[0].partitions):
        col = [v.values[j] for v in values]
        coeffs = [sum((inv[i][k] * col[k] for k in range(len(col))), Fraction(0))
                  for i in range(len(monos))]
        polys[part] = {m: c for m, c in zip(monos, coeffs) if c}
    for p in combinations_with_replacement(range(check + 1), r):
        direct = chern_numbers(_kleinschmidt_fan(4, p))
        for part, poly in polys.items():
            if _poly_value(poly, p) != direct[part]:
                raise ArithmeticError(f"X_4{p}: fitted {render(part)} disagrees")
    return polys


def _mono_value(m, p):
    out = 1
    for e, x in zip(m, p):
        out *= x ** e
    return out


def _poly_value(poly, p):
    return sum((c * _mono_value(m, p) for m, c in poly.items()), Fraction(0))


def _active(polys, r):
    return sorted({i for poly in polys.values() for m in poly for i in range(r) if m[i]})


def _growth_bound(polys, r, active, cv):
    """Rigorous bound on max a_i from a positive definite quadratic Chern number.

    If some c_I equals const + a^T G a (no other terms) with G positive
    definite on the active variables, then |a|^2 <= (c_I - const) tr(G^-1).
    Returns ``(bound, partition)`` or ``None`` when no such c_I exists.
    """
    k = len(active)
    for part, poly in polys.items():
        const = poly.get((0,) * r, Fraction(0))
        rest = {m: c for m, c in poly.items() if any(m)}
        if not rest or any(sum(m) != 2 for m in rest):
            continue
        gram = [[Fraction(0)] * k for _ in range(k)]
        for m, c in rest.items():
            idx = [active.index(i) for i in range(r) for _ in range(m[i])]
            i, j = idx
            if i == j:
                gram[i][i] += c
            else:
                gram[i][j] += c / 2
                gram[j][i] += c / 2
        if not all(exact.det([row[:s] for row in gram[:s]]) > 0 for s in range(1, k + 1)):
            continue
        trace = sum(exact.inverse(gram)[i][i] for i in range(k))
        excess = cv[part] - const
        if excess < 0:
            return -1, part
        return isqrt(int(excess * trace)), part
    return None


def kleinschmidt_search(cv, budget=None):
    """Look for X_4(a) with the Chern vector ``cv``.

    Returns ``(spec or None, conclusive, notes)``. Without a growth
    certificate the scan runs to 2 + max|cv| and a miss is inconclusive.
    """
    notes = []
    conclusive = True
    budget = exact.work_budget() if budget is None else budget
    for r in (1, 2, 3):
        polys = kleinschmidt_polynomials(r)
        active = _active(polys, r)
        cert = _growth_bound(polys, r, active, cv) if active else (0, None)
        if cert is None:
            bound = 2 + max(abs(x) for x in cv.values)
            conclusive = False
            notes.append(f"r={r}: no growth certificate, scanned a_i <= {bound}")
        else:
            bound, part = cert
            why = f"from {render(part)}" if part else "Chern numbers do not depend on a"
            notes.append(f"r={r}: a_i <= {max(bound, 0)} ({why})")
        if bound < 0:
            continue
        if len(active) and (bound + 1) ** len(active) > budget:
            conclusive = False
            notes.append(f"r={r}: scan exceeds the work budget")
            continue
        for vals in combinations_with_replacement(range(bound + 1), len(active)):
            p = [0] * r
            it = iter(vals)
            last = 0
            for i in range(r):
                last = next(it) if i in active else last
                p[i] = last
            if all(_poly_value(poly, p) == cv[part] for part, poly in polys.items()):
                return FamilySpec("kleinschmidt", (4,) + tuple(p)), True, notes
    return None, conclusive, notes


def classify_omega8(cv):
    if not isinstance(cv, ChernVector):
        cv = ChernVector.from_mapping(cv, n=4)
    bad = _integrality(cv)
    if bad:
        return bad
    feasible = feasible_g_for(cv)
    if not feasible:
        return _no("no g-vector satisfies the g-theorem and the Chern relations",
                   violated=["c4 = 3*g1 + g2 + 5", "c1*c3 = 6*g1 - 2*g2 + 50",
                             "c1^4 = 4*c1^2*c2 + 3*c2^2 + 3*g1 - 3*g2 - 675"])
    g = feasible[0]
    cert = {"g": list(g)}
    if g[1] == 0:
        if cv.values == CP4:
            return _witness_from_spec(cv, FamilySpec("cpn", (4,)), "g1 = 0 forces CP^4")
        part = next(p for p, x, y in zip(cv.partitions, cv.values, CP4) if x != y)
        value = dict(zip(cv.partitions, CP4))[part]
        return _no(f"g₁=0 forces ℂP⁴, {pretty(part)} ≠ {value}", **cert)
    if tuple(g) == (1, 2, 3):
        return _no("no smooth projective toric variety has g = (1, 2, 3)", **cert)
    if 2 <= g[2] <= g[1] - 1:
        return _asymp_witness(cv, g)
    if g[1] == 1:
        spec, conclusive, notes = kleinschmidt_search(cv)
        cert["scan"] = notes
        if spec:
            v = _witness_from_spec(cv, spec, "X_4(" + ", ".join(map(str, spec.params[1:])) + ")")
            v.certificate = cert
            return v
        if conclusive:
            return _no("g1 = 1 and no X_4(a) has these Chern numbers", **cert)
        return _unknown(TAG_G1_1, "g1 = 1 scan was inconclusive", **cert)
    if g[1] == 2:
        return _unknown(TAG_G1_2, "g1 = 2 is not decided here", **cert)
    return _unknown(TAG_OUTSIDE, f"g = {tuple(g)} lies outside the decided regions", **cert)


def classify(cv):
    """Dispatch on the dimension of ``cv``."""
    n = cv.n
    if n == 1:
        return classify_omega2(cv["c1"])
    if n == 2:
        return classify_omega4(cv["c1^2"], cv["c2"])
    if n == 3:
        return classify_omega6(cv["c1^3"], cv["c1*c2"], cv["c3"])
    if n == 4:
        return classify_omega8(cv)
    raise ToricError(f"classification is only implemented for n <= 4, got {n}",
                     "DIM_OUT_OF_RANGE")
