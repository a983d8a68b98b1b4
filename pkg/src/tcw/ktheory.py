"""K-theory Chern numbers and Hattori-Stong integrality.

ch gamma_k is taken to be sigma_k(e^{x_1}-1, ..., e^{x_n}-1); exterior
powers are never built. For a partition omega, s_omega(gamma) is the
polynomial in gamma_1, gamma_2, ... that expresses the monomial symmetric
function m_omega through elementary symmetric functions, and

    kappa_omega[M] = < ch s_omega(gamma) * Td(M), [M] >

is a rational combination of Chern numbers. A vector of integers is the
Chern vector of a complex cobordism class exactly when every kappa_omega of
weight <= n is an integer.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product
from math import gcd, lcm

import numpy as np

from . import exact
from .charnum import todd_class
from .symfun import (SymmetricSeries, exp_minus_one, format_linear,
                     monomial_to_elementary, partitions, render)


def ch_gamma(k, n, degree=None):
    degree = n if degree is None else degree
    return SymmetricSeries.elementary_of(k, exp_minus_one(degree), n, degree)


@lru_cache(maxsize=None)
def s_polynomial(omega):
    """m_omega in elementary symmetric functions, in |omega| variables."""
    if not omega:
        return {(): Fraction(1)}
    return monomial_to_elementary({tuple(omega): 1}, sum(omega))


@dataclass(frozen=True)
class KappaForm:
    omega: tuple
    n: int
    beta: tuple   # Fraction per partition of n, canonical order

    def evaluate(self, cv):
        return sum((b * v for b, v in zip(self.beta, cv.values)), Fraction(0))

    def as_dict(self):
        return dict(zip(partitions(self.n), self.beta))

    def render(self):
        return format_linear([(b, render(p)) for p, b in zip(partitions(self.n), self.beta)])


@lru_cache(maxsize=None)
def kappa_form(omega, n):
    omega = tuple(sorted(omega, reverse=True))
    if sum(omega) > n:
        raise ValueError(f"weight of {omega} exceeds {n}")
    total = SymmetricSeries(n, n)
    gammas = {}
    for mu, coeff in s_polynomial(omega).items():
        term = SymmetricSeries.one(n, n)
        for k in mu:
            if k not in gammas:
                gammas[k] = ch_gamma(k, n)
            term = term * gammas[k]
        total = total + term.scale(coeff)
    top = (total * todd_class(n)).to_elementary(n)
    return KappaForm(omega, n, tuple(top.get(p, Fraction(0)) for p in partitions(n)))


def all_omegas(n):
    return [w for m in range(n + 1) for w in partitions(m)]


def kappa_forms(n):
    return [kappa_form(w, n) for w in all_omegas(n)]


def hattori_stong_check(cv):
    """Returns ``(ok, failures)``; failures list ``(omega, kappa value)``."""
    failures = []
    for form in kappa_forms(cv.n):
        value = form.evaluate(cv)
        if value.denominator != 1:
            failures.append((form.omega, value))
    return not failures, failures


@dataclass(frozen=True)
class Congruence:
    row: tuple
    modulus: int

    def holds(self, values):
        return sum(a * b for a, b in zip(self.row, values)) % self.modulus == 0

    def render(self, n):
        lhs = format_linear([(a, render(p)) for p, a in zip(partitions(n), self.row)])
        return f"{lhs} = 0 mod {self.modulus}"

    def to_json(self, n):
        return {"row": list(self.row), "modulus": self.modulus, "text": self.render(n)}


def _denominator(rows):
    return reduce(lcm, (x.denominator for r in rows for x in r), 1)


def dual_lattice(rational_rows, dim, scale=None):
    """HNF of ``scale * (Z^dim + span_Z rational_rows)``.

    The admissible set {c : r . c in Z for all rows} is the dual of that
    lattice, so two admissible sets agree iff these HNFs agree at a common
    scale.
    """
    rows = [[Fraction(x) for x in r] for r in rational_rows]
    d = scale if scale is not None else _denominator(rows)
    gens = [[d * int(i == j) for j in range(dim)] for i in range(dim)]
    for r in rows:
        scaled = [x * d for x in r]
        if any(x.denominator != 1 for x in scaled):
            raise ValueError("scale does not clear the denominators")
        gens.append([int(x) for x in scaled])
    return exact.hermite_normal_form(gens), d


def congruences_from_dual(hnf, d):
    out = []
    for h in hnf:
        g = reduce(gcd, h, d)
        mod = d // g
        if mod == 1:
            continue
        out.append(Congruence(tuple((x // g) % mod for x in h), mod))
    return out


def congruence_rows(congruences):
    return [[Fraction(a, c.modulus) for a in c.row] for c in congruences]


@lru_cache(maxsize=None)
def derive_divisibility_lattice(n):
    """Congruences cutting out the Chern vectors of cobordism classes."""
    rows = [f.beta for f in kappa_forms(n)]
    hnf, d = dual_lattice(rows, len(partitions(n)))
    return tuple(congruences_from_dual(hnf, d))


def same_admissible_set(cong_a, cong_b, dim):
    """Compare two congruence systems through their dual lattices."""
    ra, rb = congruence_rows(cong_a), congruence_rows(cong_b)
    d = lcm(_denominator(ra), _denominator(rb))
    return dual_lattice(ra, dim, d)[0] == dual_lattice(rb, dim, d)[0]


def admissible_basis(congruences, dim):
    """HNF basis of {c in Z^dim : every congruence holds}.

    Computed as the dual of the scaled dual lattice: if B is a basis of
    d * L*, then d * B^{-T} is a basis of L.
    """
    hnf, d = dual_lattice(congruence_rows(congruences), dim)
    inv = exact.inverse(hnf)
    basis = [[inv[j][i] * d for j in range(dim)] for i in range(dim)]
    if any(x.denominator != 1 for r in basis for x in r):
        raise ArithmeticError("dual basis is not integral")
    return exact.hermite_normal_form([[int(x) for x in r] for r in basis])


def coset_transversal(basis):
    """Representatives of Z^dim / L for an upper-triangular HNF basis of L.

    Returns an int64 array with one row per coset (the index of L).
    """
    dim = len(basis)
    diag = [basis[i][i] for i in range(dim)]
    grids = np.array(list(product(*[range(x) for x in diag])), dtype=np.int64)
    return grids.reshape(-1, dim)


def membership_mask(points, congruences):
    pts = np.asarray(points, dtype=np.int64)
    ok = np.ones(len(pts), dtype=bool)
    for c in congruences:
        ok &= (pts @ np.array(c.row, dtype=np.int64)) % c.modulus == 0
    return ok


def kappa_mask(points, n):
    pts = np.asarray(points, dtype=np.int64)
    ok = np.ones(len(pts), dtype=bool)
    for form in kappa_forms(n):
        d = _denominator([form.beta])
        row = np.array([int(b * d) for b in form.beta], dtype=np.int64)
        ok &= (pts @ row) % d == 0
    return ok
