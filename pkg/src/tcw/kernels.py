"""Exact torus-fixed-point sums on top of the modular kernels.

Each sum is an integer (it is a degree-n class evaluated on the fundamental
class), so it is recovered from residues modulo several primes by the
Chinese remainder theorem once their product exceeds twice an a-priori bound
on its absolute value. One extra prime cross-checks the reconstruction; a
mismatch means the sum was not an integer, which only happens on invalid
fans.

The per-prime loops run in the compiled ``_kernels`` extension when it is
importable and in ``_kernels_py`` otherwise. ``TCW_PURE_PYTHON=1`` forces the
pure-Python path.
"""
import os
from math import comb, prod

import numpy as np

from . import _kernels_py
from .errors import EvaluationError

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_LIMIT = 1 << 31
_MAX_WEIGHT = 1 << 30


def available_backends():
    names = ["python"]
    if _compiled is not None:
        names.insert(0, "cython")
    return names


def get_backend(name=None):
    if name is None:
        if os.environ.get("TCW_PURE_PYTHON") or _compiled is None:
            return _kernels_py
        return _compiled
    if name == "python":
        return _kernels_py
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernels are not built")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


backend = get_backend()
IMPLEMENTATION = backend.IMPLEMENTATION


def _is_prime(n):
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for n < 3.4e14
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes():
    n = _LIMIT - 1
    while True:
        if _is_prime(n):
            yield n
        n -= 2


_PRIME_CACHE = []


def _prime(i):
    if len(_PRIME_CACHE) <= i:
        gen = _primes()
        _PRIME_CACHE.clear()
        _PRIME_CACHE.extend(next(gen) for _ in range(max(i + 1, 2 * len(_PRIME_CACHE), 8)))
    return _PRIME_CACHE[i]


def _crt_run(weights, bound, call, backend_name):
    kern = get_backend(backend_name)
    w = np.asarray(weights, dtype=object)
    wmax = max((abs(int(x)) for x in w.flat), default=0)
    if wmax >= _MAX_WEIGHT:
        raise EvaluationError("fixed-point weights exceed the modular kernel range",
                              "SIZE_LIMIT")
    w64 = np.ascontiguousarray(np.array(weights, dtype=np.int64))
    modulus = 1
    value = None
    i = 0
    while modulus <= 2 * bound:
        p = _prime(i)
        i += 1
        res = [int(x) for x in call(kern, np.mod(w64, p), p)]
        if value is None:
            value, modulus = res, p
        else:
            # combine x = value (mod modulus), x = res (mod p)
            inv = pow(modulus, -1, p)
            value = [v + modulus * ((r - v) * inv % p) for v, r in zip(value, res)]
            modulus *= p
    half = modulus // 2
    value = [v - modulus if v > half else v for v in value]
    check = _prime(i)
    res = call(kern, np.mod(w64, check), check)
    for v, r in zip(value, res):
        if v % check != int(r):
            raise EvaluationError("fixed-point sum is not an integer", "NON_INTEGER_RESULT")
    return value


def chern_sums(weights, partitions, backend=None):
    """Exact ``sum_sigma prod_j e_{I_j}(w_sigma) / e_n(w_sigma)`` per partition.

    ``weights`` is a (cones x n) integer matrix of fixed-point weights.
    """
    if not partitions:
        return []
    n = len(weights[0])
    width = max(len(p) for p in partitions)
    parts = np.zeros((len(partitions), width), dtype=np.int64)
    for q, part in enumerate(partitions):
        parts[q, :len(part)] = part
    wmax = max(abs(int(x)) for row in weights for x in row)
    degree = max(sum(p) for p in partitions)
    coeff = max(prod(comb(n, k) for k in part) for part in partitions)
    bound = len(weights) * coeff * wmax ** degree

    def call(kern, w, p):
        return kern.chern_residues(w, parts, p)

    return _crt_run(weights, bound, call, backend)


def monomial_sums(weights, cones, nrays, exponent_rows, backend=None):
    """Exact localization sums of ray-class monomials.

    ``cones[c]`` lists the ray indices of cone ``c`` in weight-column order;
    ``exponent_rows`` are length-``nrays`` exponent vectors.
    """
    if not exponent_rows:
        return []
    positions = np.full((len(cones), nrays), -1, dtype=np.int64)
    for c, cone in enumerate(cones):
        for col, j in enumerate(cone):
            positions[c, j] = col
    exps = np.ascontiguousarray(np.array(exponent_rows, dtype=np.int64).reshape(
        len(exponent_rows), nrays))
    wmax = max(abs(int(x)) for row in weights for x in row)
    degree = max(int(sum(r)) for r in exponent_rows)
    bound = len(weights) * wmax ** degree

    def call(kern, w, p):
        return kern.monomial_residues(w, positions, exps, p)

    return _crt_run(weights, bound, call, backend)
