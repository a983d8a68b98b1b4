"""Lattice polytopes in H-representation.

A facet ``(a, b)`` is the half-space <a, x> >= -b with ``a`` a primitive
inward normal. Vertices are found by brute force over n-subsets of facets,
which is exact and fine for the small polytopes the package deals with.
"""
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import lcm

from . import exact
from .errors import PolytopeError
from .fan import Fan, face_count_vector


@dataclass(frozen=True)
class PolytopeH:
    dim: int
    facets: tuple   # ((normal tuple, offset int), ...)

    def __post_init__(self):
        facets = []
        for normal, offset in self.facets:
            normal = tuple(int(x) for x in normal)
            if len(normal) != self.dim:
                raise PolytopeError(f"normal {normal} has wrong length", "BAD_POLYTOPE")
            if exact.vector_gcd(normal) != 1:
                raise PolytopeError(f"normal {normal} is not primitive", "BAD_POLYTOPE")
            facets.append((normal, int(offset)))
        object.__setattr__(self, "facets", tuple(facets))

    @property
    def normals(self):
        return [a for a, _ in self.facets]

    def contains(self, x):
        return all(exact.dot(a, x) >= -b for a, b in self.facets)

    def to_json(self):
        return {"dim": self.dim,
                "facets": [{"normal": list(a), "offset": b} for a, b in self.facets]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        try:
            facets = [(f["normal"], f["offset"]) for f in data["facets"]]
            return cls(int(data["dim"]), tuple(facets))
        except (KeyError, TypeError) as exc:
            raise PolytopeError(f"malformed polytope JSON: {exc}", "BAD_JSON") from exc

    @cached_property
    def vertex_data(self):
        return _enumerate_vertices(self)

    @cached_property
    def edges(self):
        return _edges(self)


def _bounded(p):
    """No nonzero d with A d >= 0 (the recession cone is trivial)."""
    rows = [list(a) for a in p.normals]
    for k in range(p.dim):
        for sign in (1, -1):
            extra = [sign * int(i == k) for i in range(p.dim)]
            if exact.fm_feasible(rows + [extra], [0] * len(rows) + [1]):
                return False
    return True


def _enumerate_vertices(p):
    n = p.dim
    if len(p.facets) < n + 1:
        raise PolytopeError("fewer than n + 1 facets", "DEGENERATE")
    if not _bounded(p):
        raise PolytopeError("polytope is unbounded", "UNBOUNDED")
    found = {}
    for subset in combinations(range(len(p.facets)), n):
        a = [p.facets[i][0] for i in subset]
        x = exact.solve(a, [-p.facets[i][1] for i in subset])
        if x is None:
            continue
        x = tuple(x)
        if x in found or not p.contains(x):
            continue
        tight = frozenset(i for i, (nrm, b) in enumerate(p.facets)
                          if exact.dot(nrm, x) == -b)
        found[x] = tight
    verts = sorted(found.items())
    if len(verts) < n + 1 or exact.rank([[c - d for c, d in zip(v, verts[0][0])]
                                         for v, _ in verts[1:]]) < n:
        raise PolytopeError("polytope is not full-dimensional", "DEGENERATE")
    for i, (normal, _) in enumerate(p.facets):
        on = [v for v, tight in verts if i in tight]
        if len(on) < n or exact.rank([[c - d for c, d in zip(v, on[0])]
                                      for v in on[1:]]) < n - 1:
            raise PolytopeError(f"facet {i} is redundant", "REDUNDANT")
    return verts


def vertices(p):
    """``[(point as Fractions, frozenset of incident facet indices)]``."""
    return p.vertex_data


def _edges(p):
    verts = p.vertex_data
    out = []
    for i, j in combinations(range(len(verts)), 2):
        common = verts[i][1] & verts[j][1]
        if exact.rank([p.facets[k][0] for k in common]) != p.dim - 1:
            continue
        if any(common <= verts[k][1] for k in range(len(verts)) if k not in (i, j)):
            continue
        out.append((i, j))
    return out


def _edge_direction(p, i, j):
    """Primitive integer direction of the edge from vertex i to vertex j."""
    u, v = p.vertex_data[i][0], p.vertex_data[j][0]
    diff = [b - a for a, b in zip(u, v)]
    den = lcm(*(x.denominator for x in diff))
    return exact.primitive([int(x * den) for x in diff])[0]


def is_simple(p):
    return all(len(tight) == p.dim for _, tight in p.vertex_data)


def is_smooth(p):
    if not is_simple(p):
        return False
    for i in range(len(p.vertex_data)):
        dirs = [_edge_direction(p, i, b if a == i else a)
                for a, b in p.edges if i in (a, b)]
        if len(dirs) != p.dim or abs(exact.det(dirs)) != 1:
            return False
    return True


def normal_fan(p):
    if not is_simple(p):
        raise PolytopeError("normal fan needs a simple polytope", "NOT_SIMPLE")
    cones = [tuple(sorted(tight)) for _, tight in p.vertex_data]
    return Fan(p.dim, tuple(p.normals), tuple(cones))


def default_nu(p):
    m = 1 + max(abs(x) for a, b in p.edges for x in _edge_direction(p, a, b))
    return tuple(m ** k for k in range(p.dim))


def h_vector_by_index(p, nu=None):
    """Count vertices by in-degree under the height function <nu, .>.

    The number of vertices of in-degree q is h_{n-q}.
    """
    if not is_simple(p):
        raise PolytopeError("index count needs a simple polytope", "NOT_SIMPLE")
    nu = default_nu(p) if nu is None else tuple(nu)
    heights = [exact.dot(nu, v) for v, _ in p.vertex_data]
    indeg = [0] * len(heights)
    for a, b in p.edges:
        if heights[a] == heights[b]:
            raise PolytopeError(f"nu = {nu} is perpendicular to an edge", "NU_DEGENERATE")
        indeg[b if heights[b] > heights[a] else a] += 1
    h = [0] * (p.dim + 1)
    for q in indeg:
        h[p.dim - q] += 1
    return h


def face_counts(p):
    """f-vector (f_0 = facets, ..., f_{n-1} = vertices) of a simple polytope."""
    return list(face_count_vector(normal_fan(p)))


# -- small constructors --------------------------------------------------------

def simplex(n, scale=1):
    facets = [(tuple(int(i == k) for i in range(n)), 0) for k in range(n)]
    facets.append((tuple([-1] * n), scale))
    return PolytopeH(n, tuple(facets))


def cube(n, scale=1):
    facets = []
    for k in range(n):
        e = tuple(int(i == k) for i in range(n))
        facets.append((e, 0))
        facets.append((tuple(-x for x in e), scale))
    return PolytopeH(n, tuple(facets))


def prism(base, height=1):
    """base x [0, height]."""
    n = base.dim + 1
    facets = [(a + (0,), b) for a, b in base.facets]
    facets.append(((0,) * (n - 1) + (1,), 0))
    facets.append(((0,) * (n - 1) + (-1,), height))
    return PolytopeH(n, tuple(facets))


def dilate(p, k):
    return PolytopeH(p.dim, tuple((a, b * k) for a, b in p.facets))


def truncate_vertex(p, index):
    """Cut vertex ``index`` at lattice distance one along each edge.

    For a smooth vertex the new facet normal is the sum of the incident
    normals, matching the star subdivision of the vertex cone.
    """
    point, tight = p.vertex_data[index]
    normal = tuple(sum(p.facets[i][0][k] for i in tight) for k in range(p.dim))
    offset = -exact.dot(normal, point) - 1
    if Fraction(offset).denominator != 1:
        raise PolytopeError("vertex is not a lattice point", "BAD_TRUNCATION")
    cut = PolytopeH(p.dim, p.facets + ((exact.primitive(normal)[0], int(offset)),))
    try:
        cut.vertex_data
    except PolytopeError as exc:
        raise PolytopeError(f"truncation is too deep: {exc}", "BAD_TRUNCATION") from exc
    return cut
