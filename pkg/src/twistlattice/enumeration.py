"""Integral vectors of fixed square in rational cones, Dirichlet domains,
orbit representatives and walls meeting a cone.

All scans are over explicit coordinate boxes derived from exact bounds, so
the results are complete for the stated inputs.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import ceil, floor, isqrt

from . import intlinalg as la
from .cones import (add_halfspaces, cone_from_generators, contains, generator_coefficients,
                    in_positive_cone, intersect, rational_positive_cone, same_cone)
from .errors import (BudgetExceeded, DimensionMismatch, InvalidParameter, NotInPositiveCone,
                     NotStabilized, UnboundedRegion, WrongSignature)
from .lattice import check_isometry, gram_vector, inner

DEFAULT_MAX_POINTS = 5_000_000
DEFAULT_WORD_RADIUS = 3


@dataclass(frozen=True)
class EnumerationBudget:
    coefficient_bound: Fraction
    box: tuple
    max_points: int = DEFAULT_MAX_POINTS

    @property
    def points(self):
        total = 1
        for lo, hi in self.box:
            total *= max(0, hi - lo + 1)
        return total


def _check_hyperbolic(L):
    if L.signature != (1, L.rank - 1):
        raise WrongSignature(f"signature {L.signature} is not (1, {L.rank - 1})")


def _pairing_matrix(L, gens):
    return [[inner(L, a, b) for b in gens] for a in gens]


def _check_in_closed_positive_cone(L, gens, b):
    for i, g in enumerate(gens):
        if b[i][i] < 0:
            raise UnboundedRegion(f"generator {g} has negative square")
        for j in range(i):
            if b[i][j] < 0:
                raise UnboundedRegion(f"generators {gens[j]} and {g} pair negatively; "
                                      "cone is not in one closed positive cone")


def enumeration_budget(c, d, max_points=DEFAULT_MAX_POINTS):
    """Box containing every integral x in ``c`` with (x, x) = d.

    For a nonnegative combination x = sum a_i x_i of generators, each
    a_i <= d n M with M the largest generator pairing; the box is the
    coordinate hull of the zonotope {sum a_i x_i : 0 <= a_i <= d n M}.
    Returns None when M = 0 (the cone holds no vector of positive square).
    """
    L = c.ambient
    _check_hyperbolic(L)
    gens = list(c.generators)
    b = _pairing_matrix(L, gens)
    _check_in_closed_positive_cone(L, gens, b)
    m = max((x for row in b for x in row), default=0)
    if m == 0:
        return None
    bound = Fraction(d * len(gens) * m)
    box = []
    for k in range(L.rank):
        lo = sum(min(0, bound * g[k]) for g in gens)
        hi = sum(max(0, bound * g[k]) for g in gens)
        box.append((floor(lo), ceil(hi)))
    return EnumerationBudget(bound, tuple(box), max_points)


def _solve_coordinate(gram, t, prefix, d):
    """Integer values of coordinate t making the norm equal d, given the others."""
    n = len(gram)
    a = gram[t][t]
    bb = 2 * sum(gram[i][t] * prefix[i] for i in range(n) if i != t)
    cc = sum(prefix[i] * gram[i][j] * prefix[j] for i in range(n) for j in range(n)
             if i != t and j != t) - d
    if a:
        disc = bb * bb - 4 * a * cc
        if disc < 0:
            return None
        s = isqrt(disc)
        if s * s != disc:
            return ()
        out = set()
        for num in (-bb + s, -bb - s):
            if num % (2 * a) == 0:
                out.add(num // (2 * a))
        return tuple(sorted(out))
    if bb:
        return (-cc // bb,) if cc % bb == 0 else ()
    return None if cc else "all"


def _scan_chunk(args):
    gram, box, t, d, ineqs, eqs, first_range = args
    n = len(gram)
    others = [k for k in range(n) if k != t]
    ranges = [range(box[k][0], box[k][1] + 1) for k in others]
    if others:
        ranges[0] = range(*first_range)
    found = []
    lo_t, hi_t = box[t]
    for vals in product(*ranges):
        x = [0] * n
        for k, val in zip(others, vals):
            x[k] = val
        sol = _solve_coordinate(gram, t, x, d)
        if sol is None or sol == ():
            continue
        cands = range(lo_t, hi_t + 1) if sol == "all" else sol
        for val in cands:
            if not lo_t <= val <= hi_t:
                continue
            x[t] = val
            if all(la.dot(e, x) == 0 for e in eqs) and all(la.dot(f, x) >= 0 for f in ineqs):
                found.append(tuple(x))
    return found


def scan_box(L, box, d, c, workers=1):
    """All integral x in ``box`` and in ``c`` with (x, x) = d, sorted.

    One coordinate is solved from the norm equation; the rest are scanned.
    ``workers`` > 1 splits the scan over processes; output does not depend on it.
    """
    n = L.rank
    gram = [list(r) for r in L.gram]
    t = next((k for k in range(n) if gram[k][k]), n - 1)
    ineqs, eqs = c.hrep()
    ineqs = [list(f) for f in ineqs]
    eqs = [list(e) for e in eqs]
    others = [k for k in range(n) if k != t]
    if not others:
        chunks = [(0, 1)]
    else:
        lo, hi = box[others[0]]
        count = max(1, min(workers * 4, hi - lo + 1))
        step = -(-(hi - lo + 1) // count)
        chunks = [(s, min(s + step, hi + 1)) for s in range(lo, hi + 1, step)]
    jobs = [(gram, box, t, d, ineqs, eqs, ch) for ch in chunks]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_chunk, jobs))
    else:
        parts = [_scan_chunk(j) for j in jobs]
    return sorted({v for part in parts for v in part})


def vectors_of_square_in_cone(c, d, L=None, workers=1, max_points=DEFAULT_MAX_POINTS):
    """Every integral v in the closed cone ``c`` with (v, v) = d."""
    L = L or c.ambient
    if L != c.ambient:
        raise DimensionMismatch("cone lives in a different lattice")
    if d < 1:
        raise InvalidParameter("square must be a positive integer")
    budget = enumeration_budget(c, d, max_points)
    if budget is None:
        return []
    n = L.rank
    t = next((k for k in range(n) if L.gram[k][k]), n - 1)
    scanned = 1
    for k, (lo, hi) in enumerate(budget.box):
        if k != t:
            scanned *= hi - lo + 1
    if scanned > budget.max_points:
        raise BudgetExceeded(f"box needs {scanned} scan points, budget {budget.max_points}")
    return scan_box(L, budget.box, d, c, workers)


def coefficient_bound_holds(c, v, d):
    """Check the generator-coordinate bound a_i <= d n M for one vector."""
    L = c.ambient
    gens = list(c.generators)
    m = max(inner(L, a, b) for a in gens for b in gens)
    coeffs = generator_coefficients(c, v)
    if coeffs is None:
        return False
    return all(a <= d * len(gens) * m for a in coeffs)


# ---------------------------------------------------------------------------
# groups generated by isometries


@dataclass(frozen=True)
class GeneratedGroup:
    ambient: object
    generators: tuple
    word_radius: int = DEFAULT_WORD_RADIUS


def _int_inverse(m):
    inv = la.inverse(m)
    if any(x.denominator != 1 for row in inv for x in row):
        raise DimensionMismatch(f"matrix {m} is not unimodular")
    return la.mat_key([[int(x) for x in row] for row in inv])


def generated_group(L, gens, word_radius=DEFAULT_WORD_RADIUS):
    """Isometry group generated by ``gens``; inverses are added automatically."""
    mats = []
    for m in gens:
        m = check_isometry(L, m)
        for x in (m, _int_inverse(m)):
            if x not in mats:
                mats.append(x)
    ident = la.mat_key(la.identity(L.rank))
    mats = sorted(x for x in mats if x != ident)
    if word_radius < 1:
        raise InvalidParameter("word radius must be positive")
    return GeneratedGroup(L, tuple(mats), word_radius)


def word_ball(g, radius):
    """Matrices expressible as words of length <= radius, with their shortest length."""
    ident = la.mat_key(la.identity(g.ambient.rank))
    ball = {ident: 0}
    frontier = [ident]
    for r in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for s in g.generators:
                y = la.mat_key(la.mat_mul(s, x))
                if y not in ball:
                    ball[y] = r
                    nxt.append(y)
        frontier = nxt
    return ball


@dataclass(frozen=True)
class DirichletDomain:
    """Polyhedral domain {x : (gx, y) >= (x, y)} with its certificate.

    ``radius`` is the word radius at which the cone was computed;
    ``checked_radius`` is the larger radius that reproduced it.
    """

    cone: object
    base: tuple
    radius: int
    checked_radius: int
    cuts: tuple

    def certificate(self):
        return {"radius": self.radius, "checked_radius": self.checked_radius,
                "stabilized": True, "cuts": [list(f) for f in self.cuts]}


def _check_group_component(g, y, p):
    L = p.ambient
    if not in_positive_cone(p, y):
        raise NotInPositiveCone(f"base point {tuple(y)} is not in the positive cone")
    for s in g.generators:
        gy = la.mat_vec(s, y)
        if inner(L, gy, y) <= 0:
            raise NotInPositiveCone(f"generator {s} moves the base point to the other component")


def _domain_at(g, y, p, radius):
    L = p.ambient
    gy = gram_vector(L, y)
    ball = sorted(word_ball(g, radius))
    cuts = set()
    for m in ball:
        # (m x, y) - (x, y) = x . (m^T G y - G y)
        f = tuple(sum(m[i][j] * gy[i] for i in range(L.rank)) - gy[j] for j in range(L.rank))
        if any(f):
            cuts.add(la.primitive(f))
    approx = rational_positive_cone(p)
    if approx is None:
        approx = cone_from_generators(L, [la.mat_vec(m, y) for m in ball])
    cuts = tuple(sorted(cuts))
    return add_halfspaces(approx, cuts), cuts


def dirichlet_domain(g, y, p, word_radius=None):
    """Dirichlet domain of the group at base point ``y``, certified by stabilization.

    The domain at radius r uses every word of length <= r; it is accepted
    once radius r + 1 gives the same cone. The ambient positive cone enters
    as an inner polyhedral approximation: the exact closed positive cone when
    it is rational (rank 2 with rational isotropic lines), else the cone
    spanned by the images of ``y``.
    """
    y = tuple(y)
    _check_group_component(g, y, p)
    limit = word_radius or g.word_radius
    prev = None
    for r in range(1, limit + 1):
        cone, cuts = _domain_at(g, y, p, r)
        if prev is not None and same_cone(prev[0], cone):
            return DirichletDomain(prev[0].reduced(), y, r - 1, r, prev[1])
        prev = (cone, cuts)
    if not g.generators and prev is not None:
        return DirichletDomain(prev[0].reduced(), y, 1, 1, prev[1])
    raise NotStabilized(f"domain still changing at word radius {limit}")


def reduce_to_domain(x, g, y, p, max_steps=100_000):
    """Move ``x`` by generators while (x, y) strictly drops.

    Returns ``(image, word)`` where ``word`` lists generator indices in the
    order applied. For integral x in the positive cone the pairing is a
    positive integer, so this terminates.
    """
    L = p.ambient
    x = tuple(x)
    word = []
    for _ in range(max_steps):
        cur = inner(L, x, y)
        best = None
        for i, s in enumerate(g.generators):
            z = la.mat_vec(s, x)
            val = inner(L, z, y)
            if val < cur and (best is None or (val, z) < best[:2]):
                best = (val, z, i)
        if best is None:
            return x, word
        x = best[1]
        word.append(best[2])
    raise NotStabilized("descent did not terminate")


def orbit_representatives(d, g, y, p, L=None, word_radius=None, workers=1):
    """Norm-d vectors of the Dirichlet domain, one per word-ball orbit.

    Returns ``(representatives, domain)``.
    """
    L = L or p.ambient
    domain = dirichlet_domain(g, y, p, word_radius)
    found = vectors_of_square_in_cone(domain.cone, d, L, workers)
    radius = word_radius or g.word_radius
    ball = list(word_ball(g, radius))
    index = {v: i for i, v in enumerate(found)}
    parent = list(range(len(found)))

    def root(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, v in enumerate(found):
        for m in ball:
            j = index.get(la.mat_vec(m, v))
            if j is not None:
                a, b = root(i), root(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    reps = sorted({found[root(i)] for i in range(len(found))})
    return reps, domain


def word_equivalent(a, b, g, radius):
    b = tuple(b)
    return any(la.mat_vec(m, a) == b for m in word_ball(g, radius))


# ---------------------------------------------------------------------------
# walls


def _canonical_sign(v):
    first = next(x for x in v if x)
    return tuple(v) if first > 0 else tuple(-x for x in v)


def wall_box(P, N):
    """Coordinate box containing every v with -N < (v, v) < 0 and v-perp meeting P.

    For h in P with (v, h) = 0, Cauchy-Schwarz on the negative definite
    h-perp gives (v, g_i)^2 < N n M^2 / m for every generator g_i, with M the
    largest pairing and m the smallest square among generators. With
    h0 = sum g_i the positive definite form Q(v) = 2 (v, h0)^2/(h0, h0) - (v, v)
    is then below R = 2 n^2 B^2/(h0, h0) + N, which bounds each coordinate.
    Returns ``(box, pairing_bound_squared)``.
    """
    L = P.ambient
    _check_hyperbolic(L)
    gens = list(P.generators)
    if not gens:
        raise UnboundedRegion("empty cone")
    b = _pairing_matrix(L, gens)
    _check_in_closed_positive_cone(L, gens, b)
    mmin = min(b[i][i] for i in range(len(gens)))
    if mmin == 0:
        raise UnboundedRegion("a generator lies on the null cone")
    n = len(gens)
    big_m = max(x for row in b for x in row)
    b2 = Fraction(N * n * big_m * big_m, mmin)
    h0 = tuple(sum(g[k] for g in gens) for k in range(L.rank))
    hh = inner(L, h0, h0)
    gh = gram_vector(L, h0)
    q = [[Fraction(2 * gh[i] * gh[j], hh) - L.gram[i][j] for j in range(L.rank)]
         for i in range(L.rank)]
    qinv = la.inverse(q)
    r = Fraction(2 * n * n) * b2 / hh + N
    box = []
    for k in range(L.rank):
        lim = r * qinv[k][k]
        bound = isqrt(floor(lim)) + 1
        box.append((-bound, bound))
    return tuple(box), b2


def walls_meeting_cone(P, N, L=None, max_points=DEFAULT_MAX_POINTS):
    """Primitive v with -N < (v, v) < 0 whose hyperplane meets P away from 0.

    One vector per +/- pair, first nonzero coordinate positive, sorted.
    """
    L = L or P.ambient
    box, b2 = wall_box(P, N)
    total = 1
    for lo, hi in box:
        total *= hi - lo + 1
    if total > max_points:
        raise BudgetExceeded(f"wall box has {total} points, budget {max_points}")
    gens = list(P.generators)
    gram_gens = [gram_vector(L, g) for g in gens]
    out = set()
    for v in product(*(range(lo, hi + 1) for lo, hi in box)):
        if not any(v):
            continue
        first = next(x for x in v if x)
        if first < 0:
            continue
        vals = [la.dot(gg, v) for gg in gram_gens]
        if any(x * x >= b2 for x in vals):
            continue
        nv = inner(L, v, v)
        if not -N < nv < 0:
            continue
        if la.content(v) != 1:
            continue
        if min(vals) <= 0 <= max(vals):
            out.add(_canonical_sign(v))
    return sorted(out)
