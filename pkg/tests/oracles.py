"""Independent reference implementations used only by the tests."""
from collections import Counter
from itertools import combinations, product
from math import comb, isqrt

from tcw import ring
from tcw.symfun import partitions


def chern_by_reduction(fan):
    """c_I from the total Chern class prod_j (1 + v_j), evaluated by ring reduction.

    Shares nothing with the localization path: c_k is the k-th elementary
    symmetric polynomial in the ray classes, products are expanded into ray
    monomials, and each monomial is rewritten with the linear relations.
    """
    n, m = fan.dim, fan.nrays
    e = {k: [Counter({s: 1}) for s in combinations(range(m), k)] for k in range(1, n + 1)}
    out = []
    for part in partitions(n):
        poly = Counter({(): 1})
        for k in part:
            nxt = Counter()
            for mono, c in poly.items():
                for term in e[k]:
                    (s,) = term
                    nxt[tuple(sorted(mono + s))] += c
            poly = nxt
        total = 0
        for mono, c in poly.items():
            exps = [0] * m
            for j in mono:
                exps[j] += 1
            total += c * ring.evaluate_by_reduction(fan, exps)
        out.append(total)
    return tuple(out)


def ob3_statement(c13, c1c2, c3):
    """The dimension-3 theorem read literally, on Hattori-Stong valid triples."""
    if c1c2 != 24 or c3 < 4 or c3 % 2:
        return False
    if c3 == 4:
        return c13 == 64
    if c3 == 6:
        for a in range(0, isqrt(max(c13, 0)) + 2):
            if 2 * a * a + 54 == c13:
                return True
        return False
    return True


def k3_valid(c13, c1c2, c3):
    return c13 % 2 == 0 and c1c2 % 24 == 0 and c3 % 2 == 0


def face_counts_brute(fan):
    """f_k by enumerating every subset of every maximal cone."""
    seen = set()
    for cone in fan.max_cones:
        for k in range(1, fan.dim + 1):
            seen.update(combinations(cone, k))
    counts = Counter(len(s) for s in seen)
    return tuple(counts[k] for k in range(1, fan.dim + 1))


def h_from_f_brute(f, n):
    """h from sum_i h_i t^i = sum_k f_{k-1} t^k (1 - t)^{n-k}."""
    coeffs = [0] * (n + 1)
    fk = [1] + list(f)
    for k in range(n + 1):
        for j in range(n - k + 1):
            coeffs[k + j] += fk[k] * comb(n - k, j) * (-1) ** j
    return coeffs


def lattice_points(box, dim):
    return product(range(-box, box + 1), repeat=dim)
