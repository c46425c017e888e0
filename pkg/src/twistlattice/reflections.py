"""Reflections in negative-norm roots and walking into the fundamental chamber."""

from dataclasses import dataclass
from fractions import Fraction

from . import intlinalg as la
from .cones import in_positive_cone
from .errors import (DimensionMismatch, NonIntegralReflection, NotARoot, NotInPositiveCone,
                     WalkDiverged)
from .lattice import gram_vector, inner

DEFAULT_ITERATION_CAP = 10_000


@dataclass(frozen=True)
class Root:
    ambient: object
    vector: tuple

    @property
    def norm(self):
        return inner(self.ambient, self.vector, self.vector)


def make_root(L, v):
    v = tuple(int(x) for x in v)
    if len(v) != L.rank:
        raise DimensionMismatch(f"root {v} in rank {L.rank}")
    n = inner(L, v, v)
    if n >= 0:
        raise NotARoot(f"root {v} has square {n}")
    if any((2 * x) % n for x in gram_vector(L, v)):
        raise NonIntegralReflection(f"reflection in {v} is not integral")
    return Root(L, v)


def reflection(r):
    """Matrix of x -> x - 2 (x, v)/(v, v) v."""
    L, v = r.ambient, r.vector
    n = r.norm
    gv = gram_vector(L, v)
    if any((2 * x) % n for x in gv):
        raise NonIntegralReflection(f"reflection in {v} is not integral")
    k = L.rank
    return tuple(tuple(int(i == j) - (2 * gv[j] // n) * v[i] for j in range(k)) for i in range(k))


def reflect(r, x):
    """Image of a (possibly rational) vector under the reflection in ``r``."""
    L, v = r.ambient, r.vector
    c = 2 * inner(L, x, v)
    n = r.norm
    if all(isinstance(t, int) for t in x) and c % n == 0:
        q = c // n
    else:
        q = Fraction(c, n)
    return tuple(xi - q * vi for xi, vi in zip(x, v))


@dataclass(frozen=True)
class WallSystem:
    """Finite set of roots; the chamber is {x : (x, r) >= 0 for every root r}.

    Roots are kept in canonical (sorted) order; walk words index into it.
    """

    ambient: object
    roots: tuple

    @property
    def vectors(self):
        return tuple(r.vector for r in self.roots)


def wall_system(L, vectors):
    seen = {}
    for v in vectors:
        r = make_root(L, v)
        key = la.primitive(r.vector)
        if key in seen and seen[key].vector != r.vector:
            continue
        seen.setdefault(key, r)
    roots = sorted(seen.values(), key=lambda r: r.vector)
    return WallSystem(L, tuple(roots))


def is_in_chamber(x, walls):
    L = walls.ambient
    if len(x) != L.rank:
        raise DimensionMismatch(f"vector of length {len(x)} in rank {L.rank}")
    return all(inner(L, x, r.vector) >= 0 for r in walls.roots)


def pairings(x, walls):
    return [inner(walls.ambient, x, r.vector) for r in walls.roots]


def chamber_walk(x, walls, p, iteration_cap=DEFAULT_ITERATION_CAP):
    """Reflect ``x`` until it pairs nonnegatively with every root.

    Each step uses the lowest-index violated root. Returns ``(image, word)``
    where applying ``reflection(walls.roots[i])`` for i in ``word``, in order,
    sends ``x`` to ``image``.
    """
    x = tuple(x)
    if len(x) != walls.ambient.rank:
        raise DimensionMismatch(f"vector of length {len(x)} in rank {walls.ambient.rank}")
    if not in_positive_cone(p, x):
        raise NotInPositiveCone(f"{x} is not in the positive cone of {p.reference}")
    word = []
    L = walls.ambient
    vecs = walls.vectors
    for step in range(iteration_cap + 1):
        bad = next((i for i, v in enumerate(vecs) if inner(L, x, v) < 0), None)
        if bad is None:
            return x, word
        if step == iteration_cap:
            break
        x = reflect(walls.roots[bad], x)
        word.append(bad)
    raise WalkDiverged(f"no chamber reached after {iteration_cap} reflections")


def apply_word(walls, word, x):
    for i in word:
        x = reflect(walls.roots[i], x)
    return x
