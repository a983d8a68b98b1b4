"""Pure-Python twin of the compiled fixed-point kernels (same signatures)."""
import numpy as np

IMPLEMENTATION = "python"


def chern_residues(weights, parts, p):
    p = int(p)
    parts = [[int(k) for k in row if k] for row in parts.tolist()]
    out = [0] * len(parts)
    for row in weights.tolist():
        e = [1] + [0] * len(row)
        for i, w in enumerate(row):
            for k in range(i + 1, 0, -1):
                e[k] = (e[k] + e[k - 1] * w) % p
        inv = pow(e[-1], p - 2, p)
        for q, part in enumerate(parts):
            acc = inv
            for k in part:
                acc = acc * e[k] % p
            out[q] = (out[q] + acc) % p
    return np.array(out, dtype=np.int64)


def monomial_residues(weights, positions, exponents, p):
    p = int(p)
    exps = [[(j, int(x)) for j, x in enumerate(row) if x] for row in exponents.tolist()]
    out = [0] * len(exps)
    for row, pos in zip(weights.tolist(), positions.tolist()):
        den = 1
        for w in row:
            den = den * w % p
        inv = pow(den, p - 2, p)
        for q, terms in enumerate(exps):
            acc = inv
            for j, ex in terms:
                col = pos[j]
                if col < 0:
                    acc = 0
                    break
                acc = acc * pow(row[col], ex, p) % p
            out[q] = (out[q] + acc) % p
    return np.array(out, dtype=np.int64)
