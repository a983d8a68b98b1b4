"""Chern numbers of toric varieties and the generalized Todd genus.

The total Chern class of a smooth complete toric variety is prod_j (1 + v_j)
over the ray classes. At the fixed point of a maximal cone sigma the ray
classes outside sigma restrict to zero and those inside restrict to the
weights w_sigma, so c_k restricts to e_k(w_sigma) and the Chern number c_I
is sum_sigma prod_j e_{I_j}(w_sigma) / e_n(w_sigma). That sum is what the
compiled kernel computes. The termwise expansion of prod c_{I_j} into ray
monomials is kept as ``method="monomials"``.
"""
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import kernels, ring
from .errors import EvaluationError
from .symfun import (SymmetricSeries, format_linear, monomial_to_elementary, parse,
                     partitions, render, todd_coefficients)


@dataclass(frozen=True)
class ChernVector:
    """Chern numbers of a class in complex dimension ``n``.

    ``values`` follows the canonical partition order of
    :func:`tcw.symfun.partitions`.
    """
    n: int
    values: tuple

    def __post_init__(self):
        if not 1 <= self.n <= 6:
            raise ValueError(f"dimension {self.n} outside 1..6")
        vals = tuple(int(v) for v in self.values)
        if len(vals) != len(partitions(self.n)):
            raise ValueError(f"expected {len(partitions(self.n))} Chern numbers, "
                             f"got {len(vals)}")
        object.__setattr__(self, "values", vals)

    @property
    def partitions(self):
        return partitions(self.n)

    def __getitem__(self, key):
        if isinstance(key, str):
            key = parse(key)
        return self.values[self.partitions.index(tuple(key))]

    def as_dict(self):
        return dict(zip(self.partitions, self.values))

    def to_json(self):
        return {render(p): v for p, v in zip(self.partitions, self.values)}

    @classmethod
    def from_mapping(cls, mapping, n=None):
        """Build from ``{"c1^2*c2": 4, ...}`` or ``{(2, 1, 1): 4, ...}``."""
        parsed = {}
        for k, v in mapping.items():
            part = parse(k) if isinstance(k, str) else tuple(k)
            if int(v) != v:
                raise ValueError(f"Chern number {k} = {v} is not an integer")
            parsed[part] = int(v)
        weights = {sum(p) for p in parsed}
        if n is None:
            if len(weights) != 1:
                raise ValueError("cannot infer the dimension from the keys")
            n = weights.pop()
        expected = set(partitions(n))
        if set(parsed) != expected:
            missing = sorted(render(p) for p in expected - set(parsed))
            extra = sorted(render(p) for p in set(parsed) - expected)
            raise ValueError(f"Chern keys do not match dimension {n}: "
                             f"missing {missing}, unexpected {extra}")
        return cls(n, tuple(parsed[p] for p in partitions(n)))

    def __add__(self, other):
        return ChernVector(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        return ChernVector(self.n, tuple(a - b for a, b in zip(self.values, other.values)))


def chern_numbers(fan, method="localization", backend=None):
    """All Chern numbers of the toric variety of a complete regular fan."""
    parts = partitions(fan.dim)
    if method == "localization":
        weights = ring.fixed_point_weights(fan)
        values = kernels.chern_sums(weights, parts, backend)
    elif method == "monomials":
        values = _by_monomials(fan, parts, backend)
    else:
        raise ValueError(f"unknown method {method!r}")
    if values[-1] != len(fan.max_cones):
        raise EvaluationError("Euler characteristic differs from the cone count",
                              "NON_INTEGER_RESULT")
    return ChernVector(fan.dim, tuple(values))


def _by_monomials(fan, parts, backend):
    m = fan.nrays
    faces = fan.faces
    classes = {}
    for k in range(1, fan.dim + 1):
        # non-faces vanish in the ring, so c_k is a sum over k-cones
        classes[k] = [c for c in faces if len(c) == k]
    monos = {}
    rows = []
    for part in parts:
        poly = {(0,) * m: 1}
        for k in part:
            nxt = defaultdict(int)
            for e, c in poly.items():
                for cone in classes[k]:
                    f = list(e)
                    for j in cone:
                        f[j] += 1
                    support = tuple(j for j, x in enumerate(f) if x)
                    if support in faces:
                        nxt[tuple(f)] += c
            poly = {e: c for e, c in nxt.items() if c}
        rows.append(poly)
        for e in poly:
            monos.setdefault(e, len(monos))
    exps = sorted(monos, key=monos.get)
    vals = ring.evaluate_many(fan, exps, backend) if exps else []
    table = dict(zip(exps, vals))
    return [sum(c * table[e] for e, c in poly.items()) for poly in rows]


@dataclass(frozen=True)
class ToddTable:
    """Rows ``T_n^p`` (p = 0..n) as ``{partition: Fraction}`` in Chern classes."""
    n: int
    rows: tuple

    def row(self, p):
        return self.rows[p]

    def apply(self, cv):
        if cv.n != self.n:
            raise ValueError("dimension mismatch")
        vals = cv.as_dict()
        return tuple(sum((c * vals[k] for k, c in row.items()), Fraction(0))
                     for row in self.rows)

    def matrix(self):
        return [[row.get(p, Fraction(0)) for p in partitions(self.n)] for row in self.rows]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def genus_series(n):
    """Coefficients q_k(y) of Q(y, x) = x(1+y)/(1-e^{-x(1+y)}) - yx, as lists in y."""
    b = todd_coefficients(n)
    q = [[Fraction(1)]]
    for k in range(1, n + 1):
        poly = [b[k] * comb(k, i) for i in range(k + 1)]  # b_k (1+y)^k
        if k == 1:
            poly[1] -= 1
        q.append(poly)
    return tuple(tuple(p) for p in q)


@lru_cache(maxsize=None)
def todd_table(n):
    """Expand prod_k Q(y, x_k) to degree n and split the result by powers of y.

    In orbit-sum form the coefficient of m_lam is prod_j q_{lam_j}(y), since
    q_0 = 1. Each power of y is then rewritten in the Chern basis.
    """
    if not 1 <= n <= 6:
        raise ValueError(f"dimension {n} outside 1..6")
    q = genus_series(n)
    by_power = [dict() for _ in range(n + 1)]
    for lam in partitions(n):
        poly = [Fraction(1)]
        for k in lam:
            poly = _poly_mul(poly, q[k])
        for p, c in enumerate(poly):
            if c:
                by_power[p][lam] = c
    rows = tuple(monomial_to_elementary(m, n) for m in by_power)
    return ToddTable(n, rows)


def todd_class(n, degree=None):
    """Todd class prod_i x_i / (1 - e^{-x_i}) as a symmetric series."""
    degree = n if degree is None else degree
    return SymmetricSeries.product_of(todd_coefficients(degree), n, degree)


def generalized_todd_genus(cv):
    """Coefficients of T[M] = sum_p T_n^p[M] y^p, constant term first."""
    return todd_table(cv.n).apply(cv)


def todd_genus(cv):
    return generalized_todd_genus(cv)[0]


def chi_y_from_g(g, n):
    """chi^p = (-1)^p h_p with h rebuilt from g by partial sums and symmetry."""
    from .facevec import g_to_h
    return [(-1) ** p * h for p, h in enumerate(g_to_h(g, n))]


def chi_y_from_h(h):
    return [(-1) ** p * x for p, x in enumerate(h)]


def format_y_polynomial(coeffs):
    names = ["" if p == 0 else "y" if p == 1 else f"y^{p}" for p in range(len(coeffs))]
    return format_linear(list(zip(coeffs, names)))
