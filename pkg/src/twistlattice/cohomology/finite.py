"""H^1 with finite coefficients, by exhaustive cocycle search."""

from itertools import product

from ..errors import InvalidAction
from ..groups import FiniteGroup, is_automorphism
from .core import (GammaGroup, check_action_on, conjugate_cocycle, extend_from_generators,
                   trivial_cocycle)


class FiniteGammaGroup(GammaGroup):
    """Finite group (table) with Gamma acting by element permutations."""

    def __init__(self, gamma, group, perms):
        self.gamma = gamma
        self.group = group
        self.perms = tuple(tuple(p) for p in perms)
        self.identity = group.identity

    def mul(self, a, b):
        return self.group.table[a][b]

    def inv(self, a):
        return self.group.inv(a)

    def act(self, g, x):
        return self.perms[g][x]

    @property
    def elements(self):
        return self.group.elements


def finite_action(gamma, group, perms):
    if not isinstance(group, FiniteGroup) or len(perms) != gamma.order:
        raise InvalidAction("need one permutation of G per element of Gamma")
    for p in perms:
        if not is_automorphism(group, p):
            raise InvalidAction(f"{p} is not an automorphism of G")
    G = FiniteGammaGroup(gamma, group, perms)
    check_action_on(G, [x for x in group.elements][:1])
    for a in gamma.elements:
        for b in gamma.elements:
            ab = G.perms[gamma.mul(a, b)]
            if any(ab[x] != G.perms[a][G.perms[b][x]] for x in group.elements):
                raise InvalidAction(f"sigma is not a homomorphism at ({a}, {b})")
    return G


def trivial_finite_action(gamma, group):
    ident = tuple(group.elements)
    return FiniteGammaGroup(gamma, group, [ident] * gamma.order)


def cocycles_finite(G):
    """All cocycles Gamma -> G, found by assigning values on generators."""
    gens = G.gamma.generators()
    out = []
    for values in product(G.group.elements, repeat=len(gens)):
        c = extend_from_generators(G, gens, values)
        if c is not None:
            out.append(c)
    return sorted(set(out))


def cohomology_classes(G, cocycles=None):
    """Partition of the cocycle set into classes, each sorted; trivial class first."""
    cocycles = cocycles_finite(G) if cocycles is None else cocycles
    remaining = set(cocycles)
    classes = []
    for c in sorted(cocycles):
        if c not in remaining:
            continue
        orbit = {conjugate_cocycle(G, b, c) for b in G.group.elements}
        remaining -= orbit
        classes.append(sorted(orbit))
    triv = trivial_cocycle(G)
    classes.sort(key=lambda cls: (triv not in cls, cls[0]))
    return classes


def h1_finite(G):
    """One cocycle per class of H^1(Gamma, G); the trivial cocycle comes first.

    Representatives are the lexicographically smallest cocycle of each class
    (the trivial class is represented by the trivial cocycle).
    """
    classes = cohomology_classes(G)
    triv = trivial_cocycle(G)
    return [triv if triv in cls else cls[0] for cls in classes]
