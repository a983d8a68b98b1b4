"""Cohomology of smooth complete toric varieties and evaluation of ray-class
monomials on the fundamental class.

Two independent evaluators are provided. :func:`evaluate` sums over torus
fixed points (one per maximal cone) in exact rationals; it always terminates.
:func:`evaluate_by_reduction` rewrites the monomial with the linear relations
until it is a squarefree cone monomial (value 1) or leaves the face complex
(value 0); it is work-bounded and serves as an oracle.
"""
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from . import exact, kernels
from .errors import BudgetExceeded, EvaluationError, FanError
from .fan import Fan, is_regular


@dataclass(frozen=True)
class RingPresentation:
    fan: Fan
    linear_forms: tuple
    nonfaces: tuple

    @property
    def nvars(self):
        return self.fan.nrays


def minimal_nonfaces(fan):
    """Minimal ray sets that do not span a cone (Stanley-Reisner generators)."""
    faces = fan.faces
    m = fan.nrays
    out = [pair for pair in combinations(range(m), 2) if pair not in faces]
    by_size = defaultdict(list)
    for f in faces:
        by_size[len(f)].append(f)
    for k in range(3, fan.dim + 2):
        for f in by_size[k - 1]:
            for j in range(f[-1] + 1, m):
                s = f + (j,)
                if s in faces:
                    continue
                if all(t in faces for t in combinations(s, k - 1)):
                    out.append(s)
    return tuple(sorted(out, key=lambda s: (len(s), s)))


def presentation(fan):
    """Linear relations (one per coordinate) and minimal non-faces."""
    forms = tuple(tuple(r[i] for r in fan.rays) for i in range(fan.dim))
    return RingPresentation(fan, forms, minimal_nonfaces(fan))


def _poly_mul(a, b):
    out = defaultdict(int)
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {e: c for e, c in out.items() if c}


def eliminate(pres, keep):
    """Rewrite the Stanley-Reisner generators in the variables ``keep``.

    The complementary rays must form a lattice basis so that the linear
    relations solve for them over the integers. Returns polynomials as
    ``{exponent tuple over keep: coefficient}``.
    """
    fan = pres.fan
    keep = list(keep)
    drop = [j for j in range(fan.nrays) if j not in keep]
    if len(drop) != fan.dim:
        raise ValueError(f"must keep exactly {fan.nrays - fan.dim} variables")
    a_drop = [[row[j] for j in drop] for row in pres.linear_forms]
    a_keep = [[row[j] for j in keep] for row in pres.linear_forms]
    inv = exact.integer_inverse(a_drop)
    k = len(keep)
    subst = {}
    for pos, j in enumerate(drop):
        coeffs = [-sum(inv[pos][i] * a_keep[i][c] for i in range(fan.dim)) for c in range(k)]
        subst[j] = {tuple(int(c == d) for d in range(k)): coeffs[c]
                    for c in range(k) if coeffs[c]}
    for c, j in enumerate(keep):
        subst[j] = {tuple(int(c == d) for d in range(k)): 1}
    gens = []
    for s in pres.nonfaces:
        poly = {(0,) * k: 1}
        for j in s:
            poly = _poly_mul(poly, subst[j])
        gens.append(poly)
    return gens


def ideal_degree_lattice(gens, nvars, degree):
    """HNF basis of the degree-``degree`` part of the ideal (over Z)."""
    monos = sorted(_monomials(nvars, degree), reverse=True)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in gens:
        gdeg = sum(next(iter(g)))
        if gdeg > degree:
            continue
        for mult in _monomials(nvars, degree - gdeg):
            row = [0] * len(monos)
            for e, c in g.items():
                row[index[tuple(x + y for x, y in zip(e, mult))]] += c
            rows.append(row)
    return exact.hermite_normal_form(rows), len(monos)


def _monomials(nvars, degree):
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def same_ideal(gens_a, gens_b, nvars, max_degree):
    """Compare two homogeneous ideals degree by degree up to ``max_degree``.

    Returns ``(equal, full_at_top)`` where ``full_at_top`` says the top degree
    part contains every monomial (so all higher degrees agree as well).
    """
    full = True
    for d in range(max_degree + 1):
        la, size = ideal_degree_lattice(gens_a, nvars, d)
        lb, _ = ideal_degree_lattice(gens_b, nvars, d)
        if la != lb:
            return False, False
        if d == max_degree:
            full = len(la) == size and all(row[i] == 1 for i, row in enumerate(la))
    return True, full


# -- evaluation ----------------------------------------------------------------

def _require_regular(fan):
    if not is_regular(fan):
        raise FanError("evaluation needs a regular fan", "NOT_REGULAR")


def as_exponents(fan, monomial):
    """Normalize a monomial to an exponent vector over the rays.

    Accepts ``{ray: exponent}``, a length-``nrays`` exponent vector, or a list
    of ray indices with repetition (complete fans have more rays than
    dimensions, so the two sequence forms never collide).
    """
    if isinstance(monomial, dict):
        items = [(int(j), int(x)) for j, x in monomial.items()]
    else:
        seq = [int(x) for x in monomial]
        if len(seq) == fan.nrays:
            items = list(enumerate(seq))
        else:
            items = [(j, 1) for j in seq]
    e = [0] * fan.nrays
    for j, x in items:
        if not 0 <= j < fan.nrays or x < 0:
            raise EvaluationError(f"bad monomial entry {j}^{x}", "BAD_MONOMIAL")
        e[j] += x
    return tuple(e)


def fixed_point_weights(fan, scale=None):
    """Integer weights <u_{sigma,i}, xi> at every fixed point.

    The probe is xi = (1, M, M^2, ...). With M larger than every dual-basis
    entry the weights are provably nonzero; a smaller user-supplied M is bumped
    until no weight vanishes.
    """
    _require_regular(fan)
    umax = max(abs(x) for basis in fan.dual_bases for row in basis for x in row)
    m = umax + 1 if scale is None else int(scale)
    while True:
        xi = [m ** k for k in range(fan.dim)]
        weights = [[exact.dot(u, xi) for u in basis] for basis in fan.dual_bases]
        if all(w != 0 for row in weights for w in row):
            return weights
        m += 1


def evaluate(fan, monomial, scale=None):
    """<monomial, fundamental class> by exact fixed-point summation."""
    e = as_exponents(fan, monomial)
    if sum(e) != fan.dim:
        raise EvaluationError(f"monomial degree {sum(e)} != {fan.dim}", "BAD_DEGREE")
    weights = fixed_point_weights(fan, scale)
    support = [j for j, x in enumerate(e) if x]
    total = Fraction(0)
    for cone, w in zip(fan.max_cones, weights):
        pos = {j: i for i, j in enumerate(cone)}
        if any(j not in pos for j in support):
            continue
        num = 1
        for j in support:
            num *= w[pos[j]] ** e[j]
        den = 1
        for x in w:
            den *= x
        total += Fraction(num, den)
    if total.denominator != 1:
        raise EvaluationError(f"fixed-point sum {total} is not an integer",
                              "NON_INTEGER_RESULT")
    return int(total)


def evaluate_many(fan, monomials, backend=None):
    """Batch evaluation through the modular fixed-point kernels."""
    rows = [as_exponents(fan, m) for m in monomials]
    for e in rows:
        if sum(e) != fan.dim:
            raise EvaluationError(f"monomial degree {sum(e)} != {fan.dim}", "BAD_DEGREE")
    weights = fixed_point_weights(fan)
    return kernels.monomial_sums(weights, fan.max_cones, fan.nrays, rows, backend)


def evaluate_by_reduction(fan, monomial, budget=None):
    """Evaluate by rewriting with the linear relations (bounded oracle).

    A repeated ray r in a monomial whose support lies in the maximal cone
    sigma is replaced using v_r = -sum_{k not in sigma} <u_{sigma,r}, v_k> v_k.
    Non-cone supports give 0, squarefree maximal cones give 1.
    """
    _require_regular(fan)
    e = as_exponents(fan, monomial)
    if sum(e) != fan.dim:
        raise EvaluationError(f"monomial degree {sum(e)} != {fan.dim}", "BAD_DEGREE")
    if budget is None:
        budget = exact.work_budget()
    memo = fan.__dict__.setdefault("_reduction_memo", {})
    faces = fan.faces
    steps = [0]
    active = set()

    def run(key):
        if key in memo:
            return memo[key]
        support = tuple(j for j, _ in key)
        if support not in faces:
            return 0
        if all(x == 1 for _, x in key):
            return 1
        steps[0] += 1
        if steps[0] > budget:
            raise BudgetExceeded("ring reduction exceeded its work budget",
                                 "ORACLE_BUDGET_EXCEEDED")
        if key in active:
            raise BudgetExceeded("ring reduction revisited a monomial",
                                 "ORACLE_BUDGET_EXCEEDED")
        active.add(key)
        exps = dict(key)
        r = next(j for j, x in key if x > 1)
        sset = set(support)
        ci = next(i for i, c in enumerate(fan.max_cones) if sset.issubset(c))
        cone = fan.max_cones[ci]
        u = fan.dual_bases[ci][cone.index(r)]
        exps[r] -= 1
        total = 0
        for k in range(fan.nrays):
            if k in cone:
                continue
            c = exact.dot(u, fan.rays[k])
            if c == 0:
                continue
            nxt = dict(exps)
            nxt[k] = nxt.get(k, 0) + 1
            total -= c * run(tuple(sorted((j, x) for j, x in nxt.items() if x)))
        active.discard(key)
        memo[key] = total
        return total

    return run(tuple((j, x) for j, x in enumerate(e) if x))
