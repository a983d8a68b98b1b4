"""Linear conditions that a g-vector forces on Chern numbers.

For a smooth projective toric variety chi^p = (-1)^p (g_0 + ... + g_p) for
p <= n/2, and chi^p is the p-th row of the Todd table applied to the Chern
numbers. Solving those rows for the preferred pivots c_n, c_1 c_{n-1}, c_1^n
(then the rest in canonical order) gives relations that are affine in g.
Nothing here is transcribed by hand; the printed low-dimensional forms are
test anchors.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import exact
from .charnum import todd_table
from .facevec import g_to_h, is_valid_g
from .symfun import format_linear, partitions, render


@dataclass(frozen=True)
class Relation:
    """``c_pivot = sum terms[q] c_q + sum_k g_coeffs[k] g_k`` with g_0 = 1."""
    pivot: tuple
    terms: tuple      # ((partition, Fraction), ...)
    g_coeffs: tuple   # Fraction per g_k, k = 0..n//2

    def rhs(self, cv, g):
        vals = cv.as_dict()
        return (sum((c * vals[q] for q, c in self.terms), Fraction(0))
                + sum((c * x for c, x in zip(self.g_coeffs, g)), Fraction(0)))

    def holds(self, cv, g):
        return cv[self.pivot] == self.rhs(cv, g)

    def render(self):
        bits = []
        for q, c in self.terms:
            bits.append((c, render(q)))
        for k, c in enumerate(self.g_coeffs[1:], start=1):
            bits.append((c, f"g{k}"))
        bits.append((self.g_coeffs[0], ""))
        return f"{render(self.pivot)} = {format_linear(bits)}"

    def to_json(self):
        return {"pivot": render(self.pivot),
                "chern": {render(q): str(c) for q, c in self.terms},
                "g": [str(c) for c in self.g_coeffs],
                "text": self.render()}


def pivot_order(n):
    parts = list(partitions(n))
    preferred = [(n,), tuple(sorted((n - 1, 1), reverse=True)), (1,) * n]
    order = []
    for p in preferred + parts:
        if p in parts and p not in order:
            order.append(p)
    return order


@lru_cache(maxsize=None)
def obstruction_system(n):
    """Relations from chi^p = T_n^p for p = 0..n//2, solved for the pivots."""
    table = todd_table(n)
    order = pivot_order(n)
    m = n // 2 + 1
    rows = []
    for p in range(m):
        t = table.row(p)
        lhs = [t.get(q, Fraction(0)) for q in order]
        rhs = [Fraction((-1) ** p) if k <= p else Fraction(0) for k in range(m)]
        rows.append(lhs + rhs)
    red, pivots = exact.rref(rows)
    if len(pivots) != m or pivots[-1] >= len(order):
        raise ArithmeticError("Todd table rows are not independent")
    out = []
    for row, pc in zip(red, pivots):
        terms = tuple((order[j], -row[j]) for j in range(len(order))
                      if j not in pivots and row[j] != 0)
        out.append(Relation(order[pc], terms, tuple(row[len(order):])))
    return tuple(out)


def obstruction_equations(n, g):
    """Relations with g substituted: ``[(pivot, terms, constant)]``."""
    g = list(g)
    if len(g) != n // 2 + 1:
        raise ValueError(f"g-vector in dimension {n} needs {n // 2 + 1} entries")
    return [(r.pivot, r.terms, sum((c * x for c, x in zip(r.g_coeffs, g)), Fraction(0)))
            for r in obstruction_system(n)]


def violated_relations(cv, g):
    return [r for r in obstruction_system(cv.n) if not r.holds(cv, g)]


def parity_conditions(cv):
    """The two congruences that survive on the n = 4 relation subspace."""
    if cv.n != 4:
        return []
    bad = []
    if cv["c1^2*c2"] % 2:
        bad.append("c1^2*c2 = 0 mod 2")
    if (cv["c1^2*c2"] + 2 * cv["c2^2"] + cv["c1*c3"]) % 4:
        bad.append("c1^2*c2 + 2*c2^2 + c1*c3 = 0 mod 4")
    return bad


def g_vectors_with_euler(n, euler):
    """Every g-theorem-valid g whose h-vector sums to ``euler`` (= c_n)."""
    m = n // 2
    weights = [n + 1 - 2 * k for k in range(m + 1)]
    budget = euler - weights[0]
    out = []
    if budget < 0:
        return out

    def rec(g, left):
        k = len(g)
        if k > m:
            if left == 0 and is_valid_g(g, n)[0]:
                out.append(tuple(g))
            return
        for x in range(left // weights[k] + 1):
            rec(g + [x], left - x * weights[k])

    rec([1], budget)
    return sorted(out)


def feasible_g_for(cv):
    """g-vectors compatible with the Chern numbers.

    A candidate must satisfy the g-theorem and every relation; in dimension 4
    the two parity conditions must hold as well (they do not depend on g).
    """
    if parity_conditions(cv):
        return []
    found = []
    for g in g_vectors_with_euler(cv.n, cv[(cv.n,)]):
        if not violated_relations(cv, g):
            found.append(g)
    return found


def h_of(g, n):
    return g_to_h(list(g), n)
