"""Exact integer and rational linear algebra used across the package.

Everything here works on plain Python ``int`` and ``fractions.Fraction`` so
that determinants, inverses and lattice computations never overflow or round.
"""
import os
from fractions import Fraction
from functools import reduce
from math import gcd

from .errors import BudgetExceeded

DEFAULT_BUDGET = 200_000


def work_budget(default=DEFAULT_BUDGET):
    """Work cap for the bounded oracles, overridable through ``TCW_BUDGET``."""
    raw = os.environ.get("TCW_BUDGET")
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value > 0 else default


def vector_gcd(v):
    return reduce(gcd, (abs(int(x)) for x in v), 0)


def primitive(v):
    """Return ``(v / g, g)`` with ``g`` the gcd of the entries."""
    g = vector_gcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(int(x) // g for x in v), g


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def det(matrix):
    """Bareiss fraction-free determinant of a square integer matrix."""
    m = [list(map(int, row)) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def rref(matrix):
    """Reduced row echelon form over Q. Returns ``(rows, pivot_columns)``."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix):
    return len(rref(matrix)[1])


def inverse(matrix):
    """Inverse of a square rational matrix (``None`` if singular)."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        return None
    return [row[n:] for row in red]


def adjugate(matrix):
    """Integer adjugate: ``adjugate(m) @ m == det(m) * I``."""
    n = len(matrix)
    if n == 1:
        return [[1]]
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(matrix) if k != i]
            out[j][i] = (-1) ** (i + j) * det(minor)
    return out


def integer_inverse(matrix):
    """Inverse of a unimodular integer matrix, as integer rows."""
    inv = inverse(matrix)
    if inv is None:
        raise ValueError("matrix is singular")
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def solve(matrix, rhs):
    """Solve the square system ``matrix @ x = rhs`` over Q (``None`` if singular)."""
    inv = inverse(matrix)
    if inv is None:
        return None
    return [sum(a * Fraction(b) for a, b in zip(row, rhs)) for row in inv]


def transpose(matrix):
    return [list(col) for col in zip(*matrix)]


def hermite_normal_form(rows):
    """Row-style Hermite normal form of the lattice spanned by integer ``rows``.

    The result is the unique upper-triangular basis with positive pivots and
    entries above each pivot reduced into ``[0, pivot)``; zero rows dropped.
    """
    a = [list(map(int, r)) for r in rows if any(r)]
    if not a:
        return []
    ncols = len(a[0])
    out = []
    col = 0
    while a and col < ncols:
        nz = [r for r in a if r[col] != 0]
        if not nz:
            col += 1
            continue
        zero = [r for r in a if r[col] == 0]
        # Euclid on the column until a single nonzero entry is left
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            rest = []
            for r in nz[1:]:
                q = r[col] // piv[col]
                r = [x - q * y for x, y in zip(r, piv)]
                if r[col] != 0:
                    rest.append(r)
                elif any(r):
                    zero.append(r)
            nz = [piv] + rest
        piv = nz[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        a = zero
        col += 1
    for i in range(len(out)):
        c = next(j for j, x in enumerate(out[i]) if x != 0)
        for k in range(i):
            q = out[k][c] // out[i][c]
            if q:
                out[k] = [x - q * y for x, y in zip(out[k], out[i])]
    return out


def fm_feasible(a_rows, b, budget=None):
    """Decide whether ``A x >= b`` has a rational solution.

    Fourier-Motzkin elimination with Chernikov's redundancy rule. Raises
    ``BudgetExceeded`` (code ``SIZE_LIMIT``) when the working system grows past
    ``budget`` rows.
    """
    if budget is None:
        budget = work_budget()
    nvars = len(a_rows[0]) if a_rows else 0
    # each row: (coeffs, rhs, frozenset of ancestor ids)
    system = []
    for i, (row, rhs) in enumerate(zip(a_rows, b)):
        system.append(_normalize_row(list(row), Fraction(rhs), frozenset([i])))
    system = _dedupe(system)
    eliminated = 0
    remaining = set(range(nvars))
    while remaining:
        # cheapest variable first
        def cost(v):
            pos = sum(1 for r in system if r[0][v] > 0)
            neg = sum(1 for r in system if r[0][v] < 0)
            return pos * neg - pos - neg

        v = min(sorted(remaining), key=cost)
        remaining.discard(v)
        eliminated += 1
        pos = [r for r in system if r[0][v] > 0]
        neg = [r for r in system if r[0][v] < 0]
        new = [r for r in system if r[0][v] == 0]
        if len(pos) * len(neg) + len(new) > budget:
            raise BudgetExceeded(
                f"Fourier-Motzkin system would exceed {budget} rows")
        for p_row in pos:
            for n_row in neg:
                anc = p_row[2] | n_row[2]
                if len(anc) > eliminated + 1:
                    continue
                cp, cn = p_row[0][v], -n_row[0][v]
                coeffs = [cn * x + cp * y for x, y in zip(p_row[0], n_row[0])]
                rhs = cn * p_row[1] + cp * n_row[1]
                new.append(_normalize_row(coeffs, rhs, anc))
        system = _dedupe(new)
        if len(system) > budget:
            raise BudgetExceeded(
                f"Fourier-Motzkin system exceeded {budget} rows")
    return all(rhs <= 0 for _, rhs, _ in system)


def _normalize_row(coeffs, rhs, anc):
    fr = [Fraction(c) for c in coeffs] + [Fraction(rhs)]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = vector_gcd(ints[:-1])
    if g > 1:
        ints = [x // g for x in ints[:-1]] + [Fraction(ints[-1], g)]
    return tuple(ints[:-1]), Fraction(ints[-1]), anc


def _dedupe(system):
    best = {}
    for coeffs, rhs, anc in system:
        if not any(coeffs):
            if rhs > 0:
                return [(coeffs, rhs, anc)]
            continue
        cur = best.get(coeffs)
        if cur is None or rhs > cur[1] or (rhs == cur[1] and len(anc) < len(cur[2])):
            best[coeffs] = (coeffs, rhs, anc)
    return list(best.values())
