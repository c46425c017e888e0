"""Groups with an action of a finite group, cocycles and twisting.

Conventions: a cocycle is a tuple ``c`` indexed by the elements of Gamma
with c(gh) = c(g) * sigma_g(c(h)); the class of ``c`` is its orbit under
(b . c)(g) = b^-1 * c(g) * sigma_g(b).
"""

from ..errors import InvalidAction, NotACocycle


class GammaGroup:
    """A group with an action of the finite group ``gamma``.

    Subclasses supply ``identity``, ``mul``, ``inv`` and ``act(g, x)``,
    the image of ``x`` under the element of index ``g``.
    """

    gamma = None
    identity = None

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def act(self, g, x):
        raise NotImplementedError

    def prod(self, *xs):
        out = self.identity
        for x in xs:
            out = self.mul(out, x)
        return out


class TwistedGammaGroup(GammaGroup):
    """Same group, action g -> c(g) sigma_g(-) c(g)^-1."""

    def __init__(self, base, cocycle):
        self.base = base
        self.cocycle = tuple(cocycle)
        self.gamma = base.gamma
        self.identity = base.identity

    def mul(self, a, b):
        return self.base.mul(a, b)

    def inv(self, a):
        return self.base.inv(a)

    def act(self, g, x):
        c = self.cocycle[g]
        return self.base.mul(self.base.mul(c, self.base.act(g, x)), self.base.inv(c))

    def __getattr__(self, name):
        # structural data (tables, ranks, datum) comes from the untwisted group
        return getattr(self.base, name)


def is_cocycle(G, c):
    gam = G.gamma
    if len(c) != gam.order or c[gam.identity] != G.identity:
        return False
    for a in gam.elements:
        for b in gam.elements:
            if c[gam.mul(a, b)] != G.mul(c[a], G.act(a, c[b])):
                return False
    return True


def check_cocycle(G, c):
    if not is_cocycle(G, c):
        raise NotACocycle(f"{c} violates the cocycle identity")
    return tuple(c)


def conjugate_cocycle(G, b, c):
    """(b . c)(g) = b^-1 c(g) sigma_g(b)."""
    bi = G.inv(b)
    return tuple(G.mul(G.mul(bi, c[g]), G.act(g, b)) for g in G.gamma.elements)


def trivial_cocycle(G):
    return tuple(G.identity for _ in G.gamma.elements)


def extend_from_generators(G, gens, values):
    """The cocycle taking ``values`` on ``gens``, or None if there is none.

    Uses c(x s) = c(x) sigma_x(c(s)) along a breadth-first spanning tree and
    then checks the full identity.
    """
    gam = G.gamma
    c = {gam.identity: G.identity}
    frontier = [gam.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for s, v in zip(gens, values):
                y = gam.mul(x, s)
                if y not in c:
                    c[y] = G.mul(c[x], G.act(x, v))
                    nxt.append(y)
        frontier = nxt
    if len(c) != gam.order:
        raise InvalidAction("generators do not generate Gamma")
    full = tuple(c[g] for g in gam.elements)
    if any(full[s] != v for s, v in zip(gens, values)):
        return None
    return full if is_cocycle(G, full) else None


def multiply_cocycles(G, d, c):
    """Pointwise product d(g) c(g)."""
    return tuple(G.mul(x, y) for x, y in zip(d, c))


def untwist(G, c):
    """The map d -> d c^-1 from cocycles of G to cocycles of the c-twist."""
    return lambda d: tuple(G.mul(x, G.inv(y)) for x, y in zip(d, c))


def twist_action(G, c):
    """``G`` with the action twisted by the cocycle ``c``."""
    check_cocycle(G, c)
    return TwistedGammaGroup(G, c)


def check_action_on(G, sample):
    """Verify the action on a finite sample: sigma_e = id, sigma_gh = sigma_g sigma_h,
    and each sigma_g is multiplicative."""
    gam = G.gamma
    for x in sample:
        if G.act(gam.identity, x) != x:
            raise InvalidAction(f"identity of Gamma moves {x}")
        for a in gam.elements:
            for b in gam.elements:
                if G.act(gam.mul(a, b), x) != G.act(a, G.act(b, x)):
                    raise InvalidAction(f"action is not a homomorphism at ({a}, {b})")
    for a in gam.elements:
        for x in sample:
            for y in sample:
                if G.act(a, G.mul(x, y)) != G.mul(G.act(a, x), G.act(a, y)):
                    raise InvalidAction(f"sigma_{a} is not multiplicative")
