"""f-, h- and g-vectors of simple polytopes and the g-theorem.

Indexing follows the polytope side: ``f[k]`` counts faces of dimension
n-k-1, which for a normal fan is the number of (k+1)-cones, and f_{-1} = 1
is implicit. The defining identity is

    sum_k h_k t^(n-k) = sum_k f_{k-1} (t-1)^(n-k).
"""
from math import comb

from .errors import FaceVectorError


def f_to_h(f, n=None):
    f = list(f)
    n = len(f) if n is None else n
    if len(f) != n:
        raise ValueError(f"f-vector of a {n}-polytope needs {n} entries")
    ff = [1] + f  # ff[k] = f_{k-1}
    return [sum((-1) ** (i - k) * comb(n - k, i - k) * ff[k] for k in range(i + 1))
            for i in range(n + 1)]


def h_to_f(h):
    n = len(h) - 1
    return [sum(comb(n - i, k - i) * h[i] for i in range(k + 1)) for k in range(1, n + 1)]


def h_to_g(h):
    if not is_symmetric(h):
        raise FaceVectorError(f"h-vector {list(h)} is not symmetric")
    n = len(h) - 1
    return [h[0]] + [h[k] - h[k - 1] for k in range(1, n // 2 + 1)]


def g_to_h(g, n):
    """Partial sums of g for the lower half, then h_k = h_{n-k}."""
    g = list(g)
    if len(g) != n // 2 + 1:
        raise ValueError(f"g-vector in dimension {n} needs {n // 2 + 1} entries")
    h = [0] * (n + 1)
    acc = 0
    for k in range(n // 2 + 1):
        acc += g[k]
        h[k] = acc
    for k in range(n // 2 + 1, n + 1):
        h[k] = h[n - k]
    if h[0] != 1:
        # h_0 = h_n = 1 for every complete simplicial fan
        raise FaceVectorError(f"g_0 = {g[0]} gives h_0 = h_{n} != 1")
    return h


def g_to_f(g, n):
    return h_to_f(g_to_h(g, n))


def is_symmetric(h):
    return all(h[k] == h[len(h) - 1 - k] for k in range(len(h)))


def binomial_expansion(a, i):
    """Greedy a = C(a_i, i) + C(a_{i-1}, i-1) + ... with a_i > a_{i-1} > ... >= j >= 1.

    Returns the list of pairs ``(a_k, k)``.
    """
    if a < 0 or i < 1:
        raise ValueError("needs a >= 0 and i >= 1")
    out = []
    k = i
    while a > 0 and k >= 1:
        top = k
        while comb(top + 1, k) <= a:
            top += 1
        out.append((top, k))
        a -= comb(top, k)
        k -= 1
    return out


def pseudopower(a, i):
    """a^<i>: shift every binomial C(a_k, k) of the i-expansion to C(a_k + 1, k + 1)."""
    return sum(comb(top + 1, k + 1) for top, k in binomial_expansion(a, i))


def is_valid_g(g, n):
    """Check the g-theorem conditions. Returns ``(ok, reason)``."""
    g = list(g)
    if len(g) != n // 2 + 1:
        return False, f"length {len(g)} != {n // 2 + 1}"
    if g[0] != 1:
        return False, "g0 != 1"
    if len(g) > 1 and g[1] < 0:
        return False, "g1 < 0"
    for k in range(1, len(g) - 1):
        if g[k + 1] < 0:
            return False, f"g{k + 1} < 0"
        bound = pseudopower(g[k], k)
        if g[k + 1] > bound:
            return False, f"g{k + 1} = {g[k + 1]} > g{k}^<{k}> = {bound}"
    return True, "ok"


def fan_h_vector(fan):
    from .fan import face_count_vector
    return f_to_h(face_count_vector(fan), fan.dim)


def fan_g_vector(fan):
    return h_to_g(fan_h_vector(fan))
