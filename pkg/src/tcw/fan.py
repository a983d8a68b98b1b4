"""Simplicial integer fans: validation, face enumeration, completeness,
projectivity and regular star subdivision.

A fan is stored as primitive integer rays plus the list of maximal cones,
each a sorted tuple of ray indices. Only the maximal cones are stored; every
other cone is a subset of one of them.
"""
import warnings
from collections import defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import gcd

from . import exact
from .errors import FanError

MAX_DIM = 6
MAX_RAYS = 64
MAX_CONES = 4096


@dataclass(frozen=True, eq=False)
class Fan:
    dim: int
    rays: tuple
    max_cones: tuple
    labels: tuple = field(default=None)

    def __post_init__(self):
        n = int(self.dim)
        if n < 1 or n > MAX_DIM:
            raise FanError(f"dimension {n} outside 1..{MAX_DIM}", "DIM_OUT_OF_RANGE")
        rays = []
        for r in self.rays:
            r = tuple(int(x) for x in r)
            if len(r) != n:
                raise FanError(f"ray {r} has length {len(r)} != {n}", "BAD_RAY")
            if not any(r):
                raise FanError("zero ray", "BAD_RAY")
            p, g = exact.primitive(r)
            if g != 1:
                warnings.warn(f"ray {r} is not primitive; using {p}", stacklevel=3)
            rays.append(p)
        if len(set(rays)) != len(rays):
            raise FanError("duplicate rays", "DUPLICATE_RAY")
        if len(rays) > MAX_RAYS:
            raise FanError(f"more than {MAX_RAYS} rays", "SIZE_LIMIT")
        cones = []
        for c in self.max_cones:
            c = tuple(sorted(int(i) for i in c))
            if len(c) != n or len(set(c)) != n:
                raise FanError(f"maximal cone {c} must have {n} distinct rays", "BAD_CONE")
            if c[0] < 0 or c[-1] >= len(rays):
                raise FanError(f"cone {c} references a missing ray", "BAD_CONE")
            cones.append(c)
        if len(set(cones)) != len(cones):
            raise FanError("duplicate maximal cones", "DUPLICATE_CONE")
        if len(cones) > MAX_CONES:
            raise FanError(f"more than {MAX_CONES} maximal cones", "SIZE_LIMIT")
        used = {i for c in cones for i in c}
        if used != set(range(len(rays))):
            raise FanError("every ray must lie in a maximal cone", "UNUSED_RAY")
        labels = self.labels
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != len(rays):
                raise FanError("labels must match rays", "BAD_LABELS")
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "rays", tuple(rays))
        object.__setattr__(self, "max_cones", tuple(sorted(cones)))
        object.__setattr__(self, "labels", labels)
        for c, d in zip(self.max_cones, self.determinants):
            if d == 0:
                raise FanError(f"cone {c} is not simplicial (rays dependent)",
                               "REJECT_NON_SIMPLICIAL")

    # -- basic data ---------------------------------------------------------

    @property
    def nrays(self):
        return len(self.rays)

    def cone_matrix(self, cone):
        """Rays of ``cone`` as matrix columns."""
        return exact.transpose([self.rays[i] for i in cone])

    @cached_property
    def determinants(self):
        return tuple(exact.det(self.cone_matrix(c)) for c in self.max_cones)

    @cached_property
    def cone_set(self):
        return frozenset(self.max_cones)

    @cached_property
    def faces(self):
        """Every cone of the fan as a frozenset of sorted index tuples."""
        out = set()
        for c in self.max_cones:
            for k in range(len(c) + 1):
                out.update(combinations(c, k))
        return frozenset(out)

    def is_cone(self, indices):
        return tuple(sorted(indices)) in self.faces

    @cached_property
    def dual_bases(self):
        """Per maximal cone, the rows u_i with <u_i, v_j> = delta_ij on the cone.

        Integer rows for regular fans, Fractions otherwise.
        """
        out = []
        for c, d in zip(self.max_cones, self.determinants):
            adj = exact.adjugate([list(r) for r in self.cone_matrix(c)])
            if abs(d) == 1:
                inv = tuple(tuple(x * d for x in row) for row in adj)
            else:
                inv = tuple(tuple(Fraction(x, d) for x in row) for row in adj)
            out.append(inv)
        return tuple(out)

    @cached_property
    def walls(self):
        """Map each (n-1)-face to the maximal cones containing it."""
        w = defaultdict(list)
        for ci, c in enumerate(self.max_cones):
            for t in combinations(c, self.dim - 1):
                w[t].append(ci)
        return dict(w)

    def label(self, i):
        return self.labels[i] if self.labels else f"v{i + 1}"

    # -- serialization ------------------------------------------------------

    def to_json(self):
        out = {"dim": self.dim,
               "rays": [list(r) for r in self.rays],
               "max_cones": [list(c) for c in self.max_cones]}
        if self.labels:
            out["labels"] = list(self.labels)
        return out

    @classmethod
    def from_json(cls, data):
        try:
            return cls(int(data["dim"]), tuple(map(tuple, data["rays"])),
                       tuple(map(tuple, data["max_cones"])), data.get("labels"))
        except (KeyError, TypeError) as exc:
            raise FanError(f"malformed fan JSON: {exc}", "BAD_JSON") from exc

    # -- equality up to ray reordering --------------------------------------

    def _key(self):
        cones = frozenset(frozenset(self.rays[i] for i in c) for c in self.max_cones)
        return self.dim, frozenset(self.rays), cones

    def __eq__(self, other):
        if not isinstance(other, Fan):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Fan(dim={self.dim}, rays={self.nrays}, max_cones={len(self.max_cones)})"


def is_regular(fan):
    """Every maximal cone is spanned by a lattice basis."""
    return all(abs(d) == 1 for d in fan.determinants)


def _contains(fan, ci, point):
    """Barycentric coordinates of ``point`` in maximal cone ``ci``."""
    u = fan.dual_bases[ci]
    return [sum(Fraction(a) * b for a, b in zip(row, point)) for row in u]


def is_complete(fan):
    """Decide whether the cones cover R^n.

    Pseudomanifold + connectivity + opposite sides across every wall make the
    fan a covering of the sphere with constant multiplicity; the point
    location probes then pin that multiplicity to one. Raises
    ``REJECT_NON_SIMPLICIAL`` when cones overlap in their interiors.
    """
    n = fan.dim
    if n == 1:
        signs = sorted(fan.rays[c[0]][0] for c in fan.max_cones)
        return signs == [-1, 1]
    walls = fan.walls
    if any(len(v) != 2 for v in walls.values()):
        return False
    adj = defaultdict(list)
    for a, b in walls.values():
        adj[a].append(b)
        adj[b].append(a)
    seen = {0}
    todo = deque([0])
    while todo:
        a = todo.popleft()
        for b in adj[a]:
            if b not in seen:
                seen.add(b)
                todo.append(b)
    if len(seen) != len(fan.max_cones):
        return False
    for tau, (a, b) in walls.items():
        i = next(k for k in fan.max_cones[a] if k not in tau)
        j = next(k for k in fan.max_cones[b] if k not in tau)
        base = [fan.rays[k] for k in tau]
        da = exact.det(exact.transpose(base + [fan.rays[i]]))
        db = exact.det(exact.transpose(base + [fan.rays[j]]))
        if (da > 0) == (db > 0):
            raise FanError(f"cones {fan.max_cones[a]} and {fan.max_cones[b]} fold "
                           "over their common wall", "REJECT_NON_SIMPLICIAL")
    for point in _probe_points(fan):
        hits = 0
        generic = True
        for ci in range(len(fan.max_cones)):
            lam = _contains(fan, ci, point)
            if all(x >= 0 for x in lam):
                hits += 1
                if any(x == 0 for x in lam):
                    generic = False
        if hits == 0 and generic:
            return False
        if hits > 1 and generic:
            raise FanError("maximal cones overlap in their interiors",
                           "REJECT_NON_SIMPLICIAL")
    return True


def _probe_points(fan):
    n = fan.dim
    scale = 1 + 2 * max(abs(x) for r in fan.rays for x in r)
    for c in fan.max_cones:
        yield [sum(fan.rays[i][k] for i in c) for k in range(n)]
    for r in fan.rays:
        for k in range(n):
            for s in (1, -1):
                p = [scale * x for x in r]
                p[k] += s
                yield p


def _require_complete_regular(fan):
    if not is_regular(fan):
        raise FanError("fan is not regular", "NOT_REGULAR")
    if not is_complete(fan):
        raise FanError("fan is not complete", "NOT_COMPLETE")


def wall_inequalities(fan):
    """Strict-convexity rows ``a . h > 0`` on support-function values ``h``.

    For adjacent cones tau+{i} and tau+{j}, write v_j in the basis of tau+{i};
    convexity across the wall is  -mu_i h_i + h_j - sum_{k in tau} mu_k h_k > 0.
    """
    rows = []
    for tau, (a, b) in sorted(fan.walls.items()):
        sa = fan.max_cones[a]
        i = next(k for k in sa if k not in tau)
        j = next(k for k in fan.max_cones[b] if k not in tau)
        mu = _contains(fan, a, fan.rays[j])
        row = [Fraction(0)] * fan.nrays
        for pos, k in enumerate(sa):
            row[k] -= mu[pos]
        row[j] += 1
        den = 1
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
        rows.append([int(x * den) for x in row])
    return rows


def is_projective(fan, budget=None):
    """Whether a strictly convex piecewise-linear support function exists.

    Support values on the first maximal cone are pinned to zero (this removes
    the global linear functions); the remaining system ``A h >= 1`` is decided
    by Fourier-Motzkin elimination.
    """
    _require_complete_regular(fan)
    if fan.dim == 1:
        return True
    pinned = set(fan.max_cones[0])
    free = [k for k in range(fan.nrays) if k not in pinned]
    rows = [[row[k] for k in free] for row in wall_inequalities(fan)]
    return exact.fm_feasible(rows, [1] * len(rows), budget=budget)


def all_cones(fan):
    """All cones grouped by cardinality 0..n (lists of sorted index tuples)."""
    out = [[] for _ in range(fan.dim + 1)]
    for c in sorted(fan.faces):
        out[len(c)].append(c)
    for group in out:
        group.sort()
    return out


def face_count_vector(fan):
    """``(f_0, ..., f_{n-1})`` with ``f_k`` the number of (k+1)-cones."""
    cones = all_cones(fan)
    return tuple(len(cones[k + 1]) for k in range(fan.dim))


def _check_cone(fan, tau):
    tau = tuple(sorted(int(i) for i in tau))
    if tau not in fan.faces:
        raise FanError(f"{list(tau)} is not a cone of the fan", "CONE_NOT_IN_FAN")
    return tau


def star(fan, tau):
    """Maximal cones containing ``tau``."""
    tau = _check_cone(fan, tau)
    s = set(tau)
    return [c for c in fan.max_cones if s.issubset(c)]


def closed_star(fan, tau):
    """All cones contained in some cone that contains ``tau``, sorted."""
    out = set()
    for c in star(fan, tau):
        for k in range(len(c) + 1):
            out.update(combinations(c, k))
    return sorted(out, key=lambda c: (len(c), c))


def star_subdivide(fan, tau, label=None):
    """Regular star subdivision along ``tau``: adds the ray sum of ``tau``.

    Each maximal cone sigma containing tau is replaced by the cones
    (sigma - {t}) + {x} for t in tau. The new ray gets the last index.
    """
    tau = _check_cone(fan, tau)
    if len(tau) < 2:
        raise FanError("star subdivision needs a cone of dimension >= 2", "DIM_TOO_SMALL")
    x, _ = exact.primitive([sum(fan.rays[i][k] for i in tau) for k in range(fan.dim)])
    if x in fan.rays:
        raise FanError(f"subdivision ray {x} already present", "BAD_SUBDIVISION")
    new_index = fan.nrays
    s = set(tau)
    cones = []
    for c in fan.max_cones:
        if s.issubset(c):
            for t in tau:
                cones.append(tuple(sorted([i for i in c if i != t] + [new_index])))
        else:
            cones.append(c)
    labels = None
    if fan.labels:
        labels = fan.labels + (label or f"x{new_index + 1}",)
    return Fan(fan.dim, fan.rays + (x,), tuple(cones), labels)

