"""Printed reference values and the checks that reproduce them.

Each anchor is a zero-argument callable returning ``(got, expected)``;
``selftest`` runs all of them. The congruence tables are stored as rows over
the canonical partition order (c1^n first, c_n last).
"""
from fractions import Fraction

from . import ring
from .charnum import ChernVector, chern_numbers, todd_table
from .classifier import classify_omega2, classify_omega6, classify_omega8
from .constructions import (DELTA_SR_IDEAL, blowup_fixed_point, cpn, delta_ab,
                            delta_left_fan, delta_stanley_reisner, kleinschmidt,
                            sigma_a)
from .facevec import f_to_h, fan_g_vector, h_to_g, is_valid_g, pseudopower
from .fan import face_count_vector
from .ktheory import (Congruence, ch_gamma, derive_divisibility_lattice,
                      hattori_stong_check, kappa_form, same_admissible_set)
from .obstructions import feasible_g_for, obstruction_system
from .polytope import h_vector_by_index, prism, simplex

# {c1^3 = 0 mod 2, c1c2 = 0 mod 24, c3 = 0 mod 2}
K3 = (Congruence((1, 0, 0), 2), Congruence((0, 1, 0), 24), Congruence((0, 0, 1), 2))

# the five printed relations in dimension 4
K4 = (
    Congruence((-1, 4, 3, 1, -1), 720),
    Congruence((0, 6, 0, -5, 2), 12),
    Congruence((0, 1, 0, 1, 0), 2),
    Congruence((2, -5, 0, 5, -2), 12),
    Congruence((2, 1, 0, -2, -4), 12),
)

# one relation per partition of weight < 4 with a nontrivial condition
DIV_TABLE = (
    Congruence((-1, 4, 3, 1, -1), 720),
    Congruence((2, -5, 0, 5, -2), 12),
    Congruence((0, 6, 0, -17, 14), 12),
    Congruence((14, -47, 12, 46, -28), 12),
    Congruence((0, 3, -2, -9, 12), 2),
    Congruence((4, -15, 6, 15, -12), 2),
)

COMB3 = ("c3 = 2*g1 + 4", "c1*c2 = 24")
COMB4 = ("c4 = 3*g1 + g2 + 5", "c1*c3 = 6*g1 - 2*g2 + 50",
         "c1^4 = 4*c1^2*c2 + 3*c2^2 + 3*g1 - 3*g2 - 675")


def _cv(fan):
    return chern_numbers(fan).values


def _anchors():
    a = {}
    a["cp3 chern numbers"] = lambda: (_cv(cpn(3)), (64, 24, 4))
    a["cp4 c1^4"] = lambda: (chern_numbers(cpn(4))["c1^4"], 625)
    a["cp2 v1*v2 = 1"] = lambda: (ring.evaluate(cpn(2), (0, 1)), 1)
    a["X3(a1, a2) c1^3 = 54"] = lambda: (
        {chern_numbers(kleinschmidt(3, (x, y)))["c1^3"]
         for x in range(4) for y in range(x, 4)}, {54})
    a["X3(a1) c1^3 = 2a^2 + 54"] = lambda: (
        [chern_numbers(kleinschmidt(3, (x,)))["c1^3"] for x in range(6)],
        [2 * x * x + 54 for x in range(6)])
    a["Sigma(a) chern numbers"] = lambda: (
        [_cv(sigma_a(x)) for x in (-2, 0, 3)], [(44, 24, 8), (48, 24, 8), (54, 24, 8)])
    a["Sigma(a) face counts"] = lambda: (face_count_vector(sigma_a(0)), (6, 12, 8))
    a["Sigma(a) g-vector"] = lambda: (fan_g_vector(sigma_a(0)), [1, 2])
    a["cube h-vector"] = lambda: (f_to_h([6, 12, 8]), [1, 3, 3, 1])
    a["cube g-vector"] = lambda: (h_to_g([1, 3, 3, 1]), [1, 2])
    a["blow-up of cp3"] = lambda: (_cv(blowup_fixed_point(cpn(3))), (56, 24, 6))
    a["delta left fan rays x, y"] = lambda: (delta_left_fan().rays[4:],
                                             ((-1, -1, 0), (0, -1, 1)))
    a["delta Stanley-Reisner ideal"] = lambda: (
        sorted(delta_stanley_reisner(delta_ab(0, 0))), sorted(DELTA_SR_IDEAL))
    a["Y(0, 0) chern numbers"] = lambda: (
        tuple(chern_numbers(delta_ab(0, 0))[k] for k in ("c1^2*c2", "c2^2", "c1*c3", "c4")),
        (188, 96, 64, 16))
    a["Y(2, 1) chern numbers"] = lambda: (
        tuple(chern_numbers(delta_ab(2, 1))[k] for k in ("c1^2*c2", "c2^2")), (180, 94))
    a["Y(a, b) g-vector"] = lambda: (fan_g_vector(delta_ab(1, -1)), [1, 3, 2])
    a["simplex h-vector by index"] = lambda: (h_vector_by_index(simplex(3), (1, 2, 4)),
                                              [1, 1, 1, 1])
    a["triangle prism h-vector"] = lambda: (h_vector_by_index(prism(simplex(2))), [1, 2, 2, 1])
    a["Todd row n = 3"] = lambda: (todd_table(3).row(0), {(2, 1): Fraction(1, 24)})
    a["dim 3 g-relations"] = lambda: (tuple(r.render() for r in obstruction_system(3)), COMB3)
    a["dim 4 g-relations"] = lambda: (tuple(r.render() for r in obstruction_system(4)), COMB4)
    a["pseudopower 0"] = lambda: (pseudopower(0, 2), 0)
    a["pseudopower g1 = 4, i = 1"] = lambda: (pseudopower(4, 1), 10)
    a["g = (1, 2, 3) is valid"] = lambda: (is_valid_g([1, 2, 3], 4)[0], True)
    a["ch gamma_1 in 3 roots"] = lambda: (
        ch_gamma(1, 3).coeffs,
        {(1,): 1, (2,): Fraction(1, 2), (3,): Fraction(1, 6)})
    a["kappa of the empty partition"] = lambda: (
        kappa_form((), 3).as_dict(),
        {(1, 1, 1): 0, (2, 1): Fraction(1, 24), (3,): 0})
    a["kappa {1}"] = lambda: (
        kappa_form((1,), 3).beta, (Fraction(1, 2), Fraction(-11, 12), Fraction(1, 2)))
    a["kappa {1,1,1} in dim 4"] = lambda: (kappa_form((1, 1, 1), 4).beta, (0, 0, 0, 1, -2))
    a["cp3 is a cobordism class"] = lambda: (
        hattori_stong_check(ChernVector(3, (64, 24, 4)))[0], True)
    a["odd c3 is not"] = lambda: (hattori_stong_check(ChernVector(3, (64, 24, 5)))[0], False)
    a["dim 3 divisibility lattice"] = lambda: (
        sorted((c.row, c.modulus) for c in derive_divisibility_lattice(3)),
        sorted((c.row, c.modulus) for c in K3))
    a["dim 4 lattice equals printed relations"] = lambda: (
        same_admissible_set(derive_divisibility_lattice(4), K4, 5), True)
    a["dim 4 lattice equals table rows"] = lambda: (
        same_admissible_set(derive_divisibility_lattice(4), DIV_TABLE, 5), True)
    a["(-672, 0, 1, 50, 5) passes the necessary conditions"] = lambda: (
        feasible_g_for(ChernVector(4, (-672, 0, 1, 50, 5))), [(1, 0, 0)])
    a["(-672, 0, 1, 50, 5) is not representable"] = lambda: (
        classify_omega8(ChernVector(4, (-672, 0, 1, 50, 5))).status, "NotRepresentable")
    a["cp4 is representable"] = lambda: (
        classify_omega8(ChernVector(4, (625, 250, 100, 50, 5))).status, "Representable")
    a["Omega_2 is cp1"] = lambda: (classify_omega2(2).status, "Representable")
    a["(64, 24, 4) representable"] = lambda: (classify_omega6(64, 24, 4).status, "Representable")
    a["(62, 24, 4) not representable"] = lambda: (
        classify_omega6(62, 24, 4).status, "NotRepresentable")
    a["(56, 24, 6) representable"] = lambda: (classify_omega6(56, 24, 6).status, "Representable")
    return a


ANCHORS = _anchors()


def run_selftest():
    """Returns ``{"passed": int, "failed": int, "results": [...]}``."""
    results = []
    for name, check in ANCHORS.items():
        try:
            got, expected = check()
            ok = got == expected
            detail = None if ok else f"got {got!r}, expected {expected!r}"
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append({"name": name, "ok": ok, **({"detail": detail} if detail else {})})
    passed = sum(r["ok"] for r in results)
    return {"passed": passed, "failed": len(results) - passed, "results": results}
