"""Truncated symmetric power series in n formal Chern roots.

A series is stored in orbit-sum form: the key ``lam`` (a partition with at
most n parts) stands for the monomial symmetric function m_lam, the sum of
all distinct permutations of x^lam. Everything is exact over ``Fraction``.

Partitions are weakly decreasing tuples. The canonical order of the
partitions of n is lexicographic on those tuples, so for n = 4 it is
(1,1,1,1), (2,1,1), (2,2), (3,1), (4).
"""
from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod


@lru_cache(maxsize=None)
def partitions(n, max_part=None):
    """Partitions of ``n`` in canonical (lexicographic) order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(sorted(out))


def canonical(part):
    return tuple(sorted((int(p) for p in part if p), reverse=True))


def conjugate(part):
    if not part:
        return ()
    return tuple(sum(1 for p in part if p > i) for i in range(part[0]))


def render(part, letter="c"):
    """``(2, 1, 1)`` -> ``"c1^2*c2"``; factors ascend by part."""
    if not part:
        return "1"
    counts = Counter(part)
    bits = []
    for k in sorted(counts):
        e = counts[k]
        bits.append(f"{letter}{k}" if e == 1 else f"{letter}{k}^{e}")
    return "*".join(bits)


def parse(key, letter="c"):
    """Inverse of :func:`render`. Accepts any factor order and repeats."""
    key = key.replace(" ", "")
    if key == "1":
        return ()
    parts = []
    for factor in key.split("*"):
        base, _, exp = factor.partition("^")
        if not base.startswith(letter) or not base[len(letter):].isdigit():
            raise ValueError(f"bad Chern monomial {key!r}")
        k = int(base[len(letter):])
        e = int(exp) if exp else 1
        if k < 1 or e < 1:
            raise ValueError(f"bad Chern monomial {key!r}")
        parts.extend([k] * e)
    return canonical(parts)


def format_linear(terms):
    """Render ``[(coeff, name), ...]`` as ``"3*c1^2 - c2 + 5"``; ``""`` names a constant."""
    out = []
    for c, name in terms:
        if c == 0:
            continue
        mag = abs(c)
        body = str(mag) if not name else (name if mag == 1 else f"{mag}*{name}")
        out.append(("-" if c < 0 else "+", body))
    if not out:
        return "0"
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    return " ".join([text] + [f"{s} {b}" for s, b in out[1:]])


def _orbit(lam, n):
    return set(permutations(lam + (0,) * (n - len(lam))))


@lru_cache(maxsize=None)
def _orbit_size(lam, n):
    counts = Counter(lam + (0,) * (n - len(lam)))
    return factorial(n) // prod(factorial(c) for c in counts.values())


@lru_cache(maxsize=None)
def _mono_product(alpha, beta, n):
    """m_alpha * m_beta in n variables, as ``{gamma: int coefficient}``."""
    rep = beta + (0,) * (n - len(beta))
    hits = Counter()
    for a in _orbit(alpha, n):
        hits[canonical(x + y for x, y in zip(a, rep))] += 1
    size_b = _orbit_size(beta, n)
    return {g: c * size_b // _orbit_size(g, n) for g, c in hits.items()}


class SymmetricSeries:
    """Symmetric series in ``n`` roots truncated above total degree ``degree``."""

    __slots__ = ("n", "degree", "coeffs")

    def __init__(self, n, degree=None, coeffs=None):
        self.n = n
        self.degree = n if degree is None else degree
        self.coeffs = {}
        for lam, c in (coeffs or {}).items():
            lam = canonical(lam)
            if len(lam) > n or sum(lam) > self.degree or c == 0:
                continue
            self.coeffs[lam] = self.coeffs.get(lam, 0) + Fraction(c)
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}

    @classmethod
    def one(cls, n, degree=None):
        return cls(n, degree, {(): 1})

    @classmethod
    def product_of(cls, series, n, degree=None):
        """prod_i f(x_i) for a one-variable series ``f = sum series[k] x^k``."""
        degree = n if degree is None else degree
        f = [Fraction(c) for c in series] + [Fraction(0)] * (degree + 1)
        out = {}
        for d in range(degree + 1):
            for lam in partitions(d):
                if len(lam) <= n:
                    out[lam] = prod(f[p] for p in lam) * f[0] ** (n - len(lam))
        return cls(n, degree, out)

    @classmethod
    def elementary_of(cls, k, series, n, degree=None):
        """sigma_k(f(x_1), ..., f(x_n)) for a series ``f`` with zero constant term."""
        degree = n if degree is None else degree
        f = [Fraction(c) for c in series] + [Fraction(0)] * (degree + 1)
        if f[0] != 0:
            raise ValueError("series must have zero constant term")
        out = {}
        if k <= n:
            for d in range(k, degree + 1):
                for lam in partitions(d):
                    if len(lam) == k:
                        out[lam] = prod(f[p] for p in lam)
        return cls(n, degree, out)

    def _like(self, coeffs):
        return SymmetricSeries(self.n, self.degree, coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return self._like(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return self._like({k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, SymmetricSeries):
            return self.scale(other)
        if other.n != self.n:
            raise ValueError("series in different numbers of roots")
        out = defaultdict(Fraction)
        for a, ca in self.coeffs.items():
            da = sum(a)
            for b, cb in other.coeffs.items():
                if da + sum(b) > self.degree:
                    continue
                for g, m in _mono_product(a, b, self.n).items():
                    out[g] += ca * cb * m
        return self._like(out)

    __rmul__ = scale

    def __pow__(self, k):
        out = SymmetricSeries.one(self.n, self.degree)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (isinstance(other, SymmetricSeries) and self.n == other.n
                and self.degree == other.degree and self.coeffs == other.coeffs)

    def homogeneous(self, d):
        return {k: v for k, v in self.coeffs.items() if sum(k) == d}

    def to_elementary(self, d):
        """Degree-``d`` part in the basis e_mu = prod e_{mu_j}."""
        return monomial_to_elementary(self.homogeneous(d), self.n)

    def __repr__(self):
        terms = " + ".join(f"{v}*m{k}" for k, v in sorted(self.coeffs.items()))
        return f"SymmetricSeries(n={self.n}, degree={self.degree}: {terms or 0})"


@lru_cache(maxsize=None)
def elementary_in_monomials(mu, n):
    """e_mu expanded in monomial symmetric functions of n variables."""
    mu = canonical(mu)
    d = sum(mu)
    acc = SymmetricSeries.one(n, d)
    for k in mu:
        acc = acc * SymmetricSeries(n, d, {(1,) * k: 1})
    return tuple(sorted(acc.coeffs.items()))


def monomial_to_elementary(poly, n):
    """Rewrite a homogeneous ``{lam: coeff}`` (monomial basis) in e-basis.

    Leading-term elimination: the lexicographically largest m_lam present is
    the leading term of e_{lam'}, so subtracting that multiple strictly
    lowers the leading term.
    """
    work = {canonical(k): Fraction(v) for k, v in poly.items() if v}
    out = {}
    while work:
        lam = max(work)
        c = work[lam]
        mu = conjugate(lam)
        if len(lam) > n:
            raise ValueError(f"m{lam} vanishes in {n} variables")
        out[mu] = out.get(mu, 0) + c
        for g, m in elementary_in_monomials(mu, n):
            v = work.get(g, 0) - c * m
            if v:
                work[g] = v
            else:
                work.pop(g, None)
    return {canonical(k): v for k, v in out.items() if v}


def series_inverse(a, order):
    """Coefficients of 1/a(z) up to ``z^order`` (requires a[0] != 0)."""
    a = [Fraction(x) for x in a] + [Fraction(0)] * (order + 1)
    out = [1 / a[0]]
    for k in range(1, order + 1):
        out.append(-sum(a[j] * out[k - j] for j in range(1, k + 1)) / a[0])
    return out


@lru_cache(maxsize=None)
def todd_coefficients(order):
    """Coefficients of z / (1 - e^{-z})."""
    inv = [Fraction((-1) ** k, factorial(k + 1)) for k in range(order + 1)]
    return tuple(series_inverse(inv, order))


def exp_minus_one(order):
    return [Fraction(0)] + [Fraction(1, factorial(k)) for k in range(1, order + 1)]
