"""Exact rational polyhedral cones.

A cone is stored by generators (primitive integer vectors, sorted, no
duplicates). The half-space description ``{x : f.x >= 0 for f in ineqs,
e.x = 0 for e in eqs}`` is computed on demand by facet enumeration; the
inverse direction goes through the dual cone. Functionals are coefficient
rows for the standard dot product, not lattice vectors.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import isqrt

from . import intlinalg as la
from .errors import (DimensionMismatch, EmptyInput, NotInPositiveCone, WrongSignature,
                     ZeroGenerator)
from .lattice import gram_vector, inner


def _normalize(vectors):
    out = set()
    for v in vectors:
        if not any(v):
            raise ZeroGenerator(f"zero generator {tuple(v)}")
        out.add(la.primitive(v))
    return tuple(sorted(out))


def _facets(gens, n):
    """Half-space description of cone(gens) in Q^n: (inequalities, equations)."""
    gens = [tuple(g) for g in gens]
    if not gens:
        return (), tuple(la.hnf_rows(la.integer_kernel([], n)))
    basis, _ = la.rref(gens)
    k = len(basis)
    eqs = tuple(la.hnf_rows(la.integer_kernel([list(g) for g in gens]))) if k < n else ()
    ineqs = set()
    for sub in combinations(range(len(gens)), k - 1):
        t = [gens[i] for i in sub]
        if k > 1 and la.rank(t) != k - 1:
            continue
        # functionals on the span, written in the span basis and vanishing on t
        rows = [[la.dot(ti, b) for b in basis] for ti in t]
        null = la.rational_nullspace(rows, k)
        if len(null) != 1:
            continue
        y = null[0]
        f = tuple(sum(y[j] * basis[j][i] for j in range(k)) for i in range(n))
        vals = [la.dot(f, g) for g in gens]
        if all(x >= 0 for x in vals):
            ineqs.add(la.primitive(f))
        elif all(x <= 0 for x in vals):
            ineqs.add(la.primitive([-x for x in f]))
    return tuple(sorted(ineqs)), eqs


def _generators_of(ineqs, eqs, n):
    """Generators of {x : ineqs.x >= 0, eqs.x = 0} via the dual cone."""
    dual = [tuple(f) for f in ineqs] + [tuple(e) for e in eqs] + [tuple(-x for x in e) for e in eqs]
    dual = [f for f in dual if any(f)]
    rays, lines = _facets(dual, n)
    gens = list(rays) + list(lines) + [tuple(-x for x in e) for e in lines]
    return _normalize(gens) if gens else ()


@dataclass(frozen=True)
class RationalCone:
    ambient: object
    generators: tuple
    _hrep: list = field(default_factory=list, compare=False, repr=False)

    @property
    def dim_ambient(self):
        return self.ambient.rank

    def hrep(self):
        if not self._hrep:
            self._hrep.append(_facets(self.generators, self.dim_ambient))
        return self._hrep[0]

    @property
    def halfspaces(self):
        return self.hrep()[0]

    @property
    def equations(self):
        return self.hrep()[1]

    @property
    def dimension(self):
        return la.rank(list(self.generators)) if self.generators else 0

    def reduced(self):
        """Same cone, generated by its extreme rays (and lineality, if any)."""
        ineqs, eqs = self.hrep()
        return cone_from_halfspaces(self.ambient, ineqs, eqs)

    def is_pointed(self):
        rows = [list(f) for f in self.halfspaces + self.equations]
        return la.rank(rows) == self.dim_ambient if rows else self.dim_ambient == 0

    def to_json(self):
        return {"generators": [list(g) for g in self.generators]}


def cone_from_generators(ambient, gens):
    gens = [tuple(g) for g in gens]
    for g in gens:
        if len(g) != ambient.rank:
            raise DimensionMismatch(f"generator {g} in rank {ambient.rank}")
    return RationalCone(ambient, _normalize(gens))


def cone_from_halfspaces(ambient, ineqs, eqs=()):
    n = ambient.rank
    for f in list(ineqs) + list(eqs):
        if len(f) != n:
            raise DimensionMismatch(f"functional {tuple(f)} in rank {n}")
    gens = _generators_of(ineqs, eqs, n)
    return RationalCone(ambient, gens)


def same_cone(a, b):
    return a.hrep() == b.hrep()


def contains(c, v, strict=False):
    """Membership in the closed cone; ``strict`` asks for the relative interior."""
    if len(v) != c.dim_ambient:
        raise DimensionMismatch(f"vector of length {len(v)} in rank {c.dim_ambient}")
    ineqs, eqs = c.hrep()
    if any(la.dot(e, v) != 0 for e in eqs):
        return False
    if strict:
        return all(la.dot(f, v) > 0 for f in ineqs) and (any(v) or not c.generators)
    return all(la.dot(f, v) >= 0 for f in ineqs)


def contains_by_generators(c, v):
    """Membership decided from generators alone (Caratheodory subsets)."""
    if len(v) != c.dim_ambient:
        raise DimensionMismatch(f"vector of length {len(v)} in rank {c.dim_ambient}")
    if not any(v):
        return True
    gens = list(c.generators)
    n = c.dim_ambient
    for k in range(1, min(len(gens), n) + 1):
        for sub in combinations(gens, k):
            cols = la.transpose([list(s) for s in sub])
            if la.rank(list(sub)) != k:
                continue
            lam = la.solve_rational(cols, list(v))
            if lam is not None and all(x >= 0 for x in lam):
                return True
    return False


def generator_coefficients(c, v):
    """A nonnegative rational combination of the generators equal to ``v``, or None."""
    gens = list(c.generators)
    n = c.dim_ambient
    if not any(v):
        return tuple(Fraction(0) for _ in gens)
    for k in range(1, min(len(gens), n) + 1):
        for sub in combinations(range(len(gens)), k):
            vecs = [gens[i] for i in sub]
            if la.rank(vecs) != k:
                continue
            lam = la.solve_rational(la.transpose([list(s) for s in vecs]), list(v))
            if lam is not None and all(x >= 0 for x in lam):
                out = [Fraction(0)] * len(gens)
                for i, x in zip(sub, lam):
                    out[i] = x
                return tuple(out)
    return None


def intersect(a, b):
    ia, ea = a.hrep()
    ib, eb = b.hrep()
    return cone_from_halfspaces(a.ambient, tuple(ia) + tuple(ib), tuple(ea) + tuple(eb))


def add_halfspaces(c, functionals):
    ineqs, eqs = c.hrep()
    return cone_from_halfspaces(c.ambient, tuple(ineqs) + tuple(tuple(f) for f in functionals), eqs)


@dataclass(frozen=True)
class PositiveConeRef:
    """One component of {v : (v, v) > 0}, picked out by a reference vector."""

    ambient: object
    reference: tuple


def positive_cone(ambient, reference):
    if ambient.signature != (1, ambient.rank - 1):
        raise WrongSignature(f"signature {ambient.signature} is not (1, {ambient.rank - 1})")
    reference = tuple(reference)
    if inner(ambient, reference, reference) <= 0:
        raise NotInPositiveCone(f"reference {reference} has nonpositive square")
    return PositiveConeRef(ambient, reference)


def in_positive_cone(p, v):
    L = p.ambient
    if L.signature != (1, L.rank - 1):
        raise WrongSignature(f"signature {L.signature} is not (1, {L.rank - 1})")
    return inner(L, v, v) > 0 and inner(L, v, p.reference) > 0


def in_closed_positive_cone(p, v):
    L = p.ambient
    return inner(L, v, v) >= 0 and inner(L, v, p.reference) >= 0


def rational_positive_cone(p):
    """The closed positive cone when it is rational polyhedral, else None.

    Only rank 2 with rational isotropic lines qualifies.
    """
    L = p.ambient
    if L.rank != 2:
        return None
    (a, b), (_, c) = L.gram
    disc = b * b - a * c
    s = _isqrt_exact(disc)
    if s is None:
        return None
    if a != 0:
        nulls = [(-b + s, a), (-b - s, a)]
    else:
        nulls = [(1, 0), (c, -2 * b)]
    rays = []
    for v in nulls:
        if inner(L, v, p.reference) < 0:
            v = tuple(-x for x in v)
        rays.append(v)
    return cone_from_generators(L, rays)


def _isqrt_exact(n):
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def subdivide(c, walls):
    """Split ``c`` by the hyperplanes inner(., w) = 0 into closed subcones.

    Each returned cell has the dimension of ``c`` and lies in one closed
    half-space of every wall; cells overlap only along walls.
    """
    L = c.ambient
    cells = [c.reduced()]
    for w in walls:
        if len(w) != L.rank:
            raise DimensionMismatch(f"wall {tuple(w)} in rank {L.rank}")
        if not any(w):
            raise ZeroGenerator("zero wall vector")
        f = gram_vector(L, w)
        nxt = []
        for cell in cells:
            vals = [la.dot(f, g) for g in cell.generators]
            if all(x >= 0 for x in vals) or all(x <= 0 for x in vals):
                nxt.append(cell)
                continue
            nxt.append(add_halfspaces(cell, [f]))
            nxt.append(add_halfspaces(cell, [tuple(-x for x in f)]))
        cells = nxt
    return sorted(cells, key=lambda k: k.generators)


def chamber_components(c, walls):
    """Closures of the connected components of ``c`` minus the wall hyperplanes."""
    L = c.ambient
    for w in walls:
        f = gram_vector(L, w)
        if all(la.dot(f, g) == 0 for g in c.generators):
            return []
    return subdivide(c, walls)


def galois_average(vectors):
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise EmptyInput("cannot average an empty list")
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise DimensionMismatch("vectors of different lengths")
    k = len(vectors)
    return tuple(Fraction(sum(v[i] for v in vectors), k) for i in range(n))
