"""Orbits of roots under a finite group, and the Coxeter type of each orbit.

An orbit whose reflections generate a finite group is either pairwise
orthogonal (type A1^r) or a perfect matching of roots with
(E, E) = -2 (E, E') (type A2^r). The longest element of a single component
(one root, or one matched pair) is the reflection in the component's sum.
"""

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from . import intlinalg as la
from .errors import (ActionDoesNotPreserveRoots, EqualRoots, NotInPositiveCone,
                     SignIncoherentOrbit, UnequalNorms)
from .cones import in_positive_cone
from .lattice import gram_vector, inner
from .reflections import Root, make_root, reflection

INFINITE = math.inf


class OrbitCase(enum.Enum):
    A = "A"
    B = "B"
    INFINITE = "INFINITE"


def _line(v):
    v = la.primitive(v)
    return v if next(x for x in v if x) > 0 else tuple(-x for x in v)


@dataclass(frozen=True)
class RootOrbit:
    ambient: object
    roots: tuple
    action: object
    sign_coherent: bool


def root_orbits(roots, action):
    """Partition roots into orbits of ``action``, comparing roots up to sign."""
    roots = list(roots)
    if not roots:
        return []
    L = roots[0].ambient
    by_line = {}
    for r in roots:
        by_line.setdefault(_line(r.vector), r)
    keys = sorted(by_line)
    exact = {r.vector for r in by_line.values()}
    seen = set()
    orbits = []
    for k in keys:
        if k in seen:
            continue
        base = by_line[k].vector
        members = set()
        coherent = True
        for m in action.matrices:
            img = la.mat_vec(m, base)
            line = _line(img)
            if line not in by_line:
                raise ActionDoesNotPreserveRoots(f"{base} is sent to {img}, not a listed root")
            members.add(line)
        for line in members:
            v = by_line[line].vector
            for m in action.matrices:
                img = la.mat_vec(m, v)
                if _line(img) not in members:
                    raise ActionDoesNotPreserveRoots(f"orbit of {base} is not closed")
                if img not in exact:
                    coherent = False
        seen |= members
        orbit_roots = tuple(sorted((by_line[line] for line in members), key=lambda r: r.vector))
        orbits.append(RootOrbit(L, orbit_roots, action, coherent))
    return orbits


def roots_from_vectors(L, vectors):
    return [make_root(L, v) for v in vectors]


def order_from_pairings(beta, alpha):
    """Order of r1 r2 for roots with common square ``beta`` and pairing ``alpha``.

    The product acts on span(E1, E2) with trace 4 alpha^2/beta^2 - 2; finite
    rational orders are 2 (alpha = 0) and 3 (4 alpha^2 = beta^2).
    """
    if beta >= 0:
        raise UnequalNorms("roots must have negative square")
    if alpha == 0:
        return 2
    if 4 * alpha * alpha == beta * beta:
        return 3
    return INFINITE


def pair_order(e1, e2):
    L = e1.ambient
    v1, v2 = e1.vector, e2.vector
    if _line(v1) == _line(v2):
        raise EqualRoots(f"{v1} and {v2} span the same line")
    beta = inner(L, v1, v1)
    if inner(L, v2, v2) != beta:
        raise UnequalNorms(f"squares {beta} and {inner(L, v2, v2)} differ")
    return order_from_pairings(beta, inner(L, v1, v2))


def restricted_product(beta, alpha):
    """Matrix of r1 r2 on span(E1, E2) in the basis (E1, E2)."""
    t = Fraction(-2 * alpha, beta)
    r1 = [[-1, t], [0, 1]]
    r2 = [[1, 0], [t, -1]]
    return la.mat_mul(r1, r2)


def rational_reflection(L, v):
    """Reflection matrix in v over Q (no integrality requirement)."""
    n = inner(L, v, v)
    gv = gram_vector(L, v)
    k = L.rank
    return tuple(tuple(Fraction(int(i == j)) - Fraction(2 * gv[j], n) * v[i] for j in range(k))
                 for i in range(k))


def _as_int_matrix(m):
    if all(Fraction(x).denominator == 1 for row in m for x in row):
        return tuple(tuple(int(x) for x in row) for row in m)
    return None


def _blocks(L, vecs, case):
    """Coxeter components of the orbit: singletons (case A) or matched pairs (case B)."""
    if case is OrbitCase.A:
        return [(v,) for v in vecs]
    blocks, used = [], set()
    for v in vecs:
        if v in used:
            continue
        w = next(u for u in vecs if u != v and inner(L, u, v))
        used |= {v, w}
        blocks.append((v, w))
    return blocks


def _longest_element(L, vecs, case):
    """Product of the longest elements of the components: r_E, or r_E r_E' r_E."""
    out = la.identity(L.rank)
    for block in _blocks(L, vecs, case):
        mats = [reflection(Root(L, v)) for v in block]
        if len(block) == 2:
            mats = [mats[0], mats[1], mats[0]]
        for m in mats:
            out = la.mat_mul(out, m)
    return la.mat_key(out)


@dataclass(frozen=True)
class OrbitReport:
    """Coxeter analysis of one root orbit.

    ``longest_element`` is the longest element of the orbit's Coxeter system,
    built from the individual reflections. ``sum_reflection`` is the
    reflection in ``composite_root`` (None when not integral);
    ``longest_is_sum_reflection`` records whether the two agree, which happens
    exactly when the orbit has a single component.
    """

    orbit: RootOrbit
    case: OrbitCase
    beta: int
    composite_root: tuple = None
    longest_element: tuple = None
    sum_reflection: tuple = None
    components: int = 0

    @property
    def finite(self):
        return self.case is not OrbitCase.INFINITE

    @property
    def longest_is_sum_reflection(self):
        return self.finite and self.longest_element == self.sum_reflection

    def to_json(self):
        out = {
            "roots": [list(r.vector) for r in self.orbit.roots],
            "size": len(self.orbit.roots),
            "finite": self.finite,
            "case": self.case.value,
            "beta": self.beta,
            "sign_coherent": self.orbit.sign_coherent,
        }
        if self.finite:
            out["components"] = self.components
            out["composite_root"] = list(self.composite_root)
            out["longest_element"] = [list(r) for r in self.longest_element]
            out["longest_is_sum_reflection"] = self.longest_is_sum_reflection
        return out


def analyze_orbit(orbit):
    L = orbit.ambient
    vecs = [r.vector for r in orbit.roots]
    beta = inner(L, vecs[0], vecs[0])
    for v in vecs[1:]:
        if inner(L, v, v) != beta:
            raise UnequalNorms(f"orbit roots have squares {beta} and {inner(L, v, v)}")
    k = len(vecs)
    alpha = [[inner(L, vecs[i], vecs[j]) for j in range(k)] for i in range(k)]
    degree = [sum(1 for j in range(k) if j != i and alpha[i][j]) for i in range(k)]
    case = OrbitCase.INFINITE
    if all(x == 0 for x in degree):
        case = OrbitCase.A
    elif all(x == 1 for x in degree):
        pair_alphas = {alpha[i][j] for i in range(k) for j in range(k) if i != j and alpha[i][j]}
        if all(-2 * a == beta for a in pair_alphas):
            case = OrbitCase.B
        elif all(4 * a * a == beta * beta for a in pair_alphas):
            raise SignIncoherentOrbit("matched roots pair negatively; flip the partner signs")
    if case is OrbitCase.INFINITE:
        return OrbitReport(orbit, case, beta)
    c = tuple(sum(v[i] for v in vecs) for i in range(L.rank))
    return OrbitReport(
        orbit, case, beta, c,
        longest_element=_longest_element(L, vecs, case),
        sum_reflection=_as_int_matrix(rational_reflection(L, c)),
        components=len(_blocks(L, vecs, case)),
    )


def invariant_generators(reports):
    """Longest elements of the finite orbits.

    Returns ``(generators, skipped)``; skipped lists the infinite reports.
    """
    gens = [r.longest_element for r in reports if r.finite]
    skipped = [r for r in reports if not r.finite]
    return gens, skipped


def invariant_chamber_test(lam, reports, p=None):
    """(lam, E) >= 0 for every root E of every finite orbit."""
    if p is not None and not in_positive_cone(p, lam):
        raise NotInPositiveCone(f"{tuple(lam)} is not in the positive cone")
    for rep in reports:
        if not rep.finite:
            continue
        L = rep.orbit.ambient
        if any(inner(L, lam, r.vector) < 0 for r in rep.orbit.roots):
            return False
    return True
