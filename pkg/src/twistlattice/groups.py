"""Finite groups as multiplication tables, and their actions on lattices."""

from dataclasses import dataclass
from itertools import product

from . import intlinalg as la
from .errors import InvalidGroup, NotAnIsometry


@dataclass(frozen=True)
class FiniteGroup:
    """Group on ``range(order)`` given by ``table[a][b] = a*b``."""

    table: tuple
    identity: int = 0
    name: str = ""

    @property
    def order(self):
        return len(self.table)

    @property
    def elements(self):
        return range(len(self.table))

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self._inverses[a]

    @property
    def _inverses(self):
        e = self.identity
        cache = self.__dict__.get("_inv_cache")
        if cache is None:
            cache = tuple(next(b for b in self.elements if self.table[a][b] == e) for a in self.elements)
            object.__setattr__(self, "_inv_cache", cache)
        return cache

    def power(self, a, k):
        if k < 0:
            a, k = self.inv(a), -k
        r = self.identity
        while k:
            if k & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            k >>= 1
        return r

    def element_order(self, a):
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def generators(self):
        """A small generating set, chosen greedily by element index."""
        gens = []
        span = {self.identity}
        for g in self.elements:
            if g in span:
                continue
            gens.append(g)
            span = self.closure(gens)
            if len(span) == self.order:
                break
        return gens

    def closure(self, gens):
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def is_abelian(self):
        t = self.table
        return all(t[a][b] == t[b][a] for a in self.elements for b in self.elements)


def make_group(table, identity=0, name=""):
    t = tuple(tuple(int(x) for x in row) for row in table)
    n = len(t)
    if n == 0 or any(len(row) != n for row in t):
        raise InvalidGroup("table must be a nonempty square")
    if not 0 <= identity < n:
        raise InvalidGroup("identity index out of range")
    for row in t:
        if sorted(row) != list(range(n)):
            raise InvalidGroup("each row must be a permutation")
    for col in zip(*t):
        if sorted(col) != list(range(n)):
            raise InvalidGroup("each column must be a permutation")
    if any(t[identity][a] != a or t[a][identity] != a for a in range(n)):
        raise InvalidGroup("identity does not act trivially")
    for a, b, c in product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise InvalidGroup(f"not associative at ({a}, {b}, {c})")
    return FiniteGroup(t, identity, name)


def group_from_closure(gens, mul, identity, name="", limit=100000):
    """Table of the group generated by hashable ``gens`` under ``mul``.

    Returns ``(group, elements)``; ``elements[i]`` is the element with index i,
    the identity is index 0 and the rest follow in breadth-first order.
    """
    elements = [identity]
    index = {identity: 0}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
                    if len(elements) > limit:
                        raise InvalidGroup(f"generated group exceeds {limit} elements")
        frontier = nxt
    table = tuple(tuple(index[mul(a, b)] for b in elements) for a in elements)
    return FiniteGroup(table, 0, name), elements


def _perm_mul(p, q):
    # apply q first, then p
    return tuple(p[i] for i in q)


def permutation_group(gens, name=""):
    n = len(gens[0])
    return group_from_closure([tuple(g) for g in gens], _perm_mul, tuple(range(n)), name)


def cyclic(n):
    return FiniteGroup(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), 0, f"C{n}")


def dihedral(n):
    """Dihedral group of order 2n."""
    if n == 2:
        # Klein four; the polygon action degenerates for n = 2
        return permutation_group([(1, 0, 3, 2), (2, 3, 0, 1)], "D2")[0]
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return permutation_group([rot, ref], f"D{n}")[0]


def symmetric(n):
    if n == 1:
        return cyclic(1)
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return permutation_group(gens, f"S{n}")[0]


def alternating(n):
    gens = [tuple([1, 2, 0] + list(range(3, n)))]
    if n > 3:
        gens.append(tuple(list(range(1, n)) + [0]) if n % 2 else tuple([0] + list(range(2, n)) + [1]))
    return permutation_group(gens, f"A{n}")[0]


def _quat_mul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def quaternion():
    return group_from_closure([(0, 1, 0, 0), (0, 0, 1, 0)], _quat_mul, (1, 0, 0, 0), "Q8")[0]


def direct_product(g, h):
    ng, nh = g.order, h.order
    table = tuple(
        tuple(g.table[a // nh][b // nh] * nh + h.table[a % nh][b % nh] for b in range(ng * nh))
        for a in range(ng * nh)
    )
    return FiniteGroup(table, g.identity * nh + h.identity, f"{g.name}x{h.name}")


def is_automorphism(g, perm):
    t = g.table
    if sorted(perm) != list(g.elements):
        return False
    return all(perm[t[a][b]] == t[perm[a]][perm[b]] for a in g.elements for b in g.elements)


def inner_automorphism(g, x):
    """The permutation y -> x y x^-1."""
    xi = g.inv(x)
    return tuple(g.mul(g.mul(x, y), xi) for y in g.elements)


def automorphisms(g):
    """All automorphisms of a small group, as element permutations.

    Found by mapping a generating set to tuples of elements of equal order
    and checking the induced map; adequate for orders up to a few dozen.
    """
    gens = g.generators()
    words = _words_from_generators(g, gens)
    result = []
    cands = [[y for y in g.elements if g.element_order(y) == g.element_order(x)] for x in gens]
    for images in product(*cands):
        perm = [None] * g.order
        ok = True
        for y, word in words.items():
            z = g.identity
            for k in word:
                z = g.mul(z, images[k])
            perm[y] = z
        if len(set(perm)) != g.order:
            ok = False
        if ok and is_automorphism(g, perm):
            result.append(tuple(perm))
    return sorted(result)


def _words_from_generators(g, gens):
    words = {g.identity: ()}
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for k, s in enumerate(gens):
                y = g.mul(x, s)
                if y not in words:
                    words[y] = words[x] + (k,)
                    nxt.append(y)
        frontier = nxt
    return words


def homomorphisms_to_automorphisms(gamma, g, auts=None):
    """All homomorphisms gamma -> Aut(g), each as a tuple of permutations indexed by gamma."""
    auts = automorphisms(g) if auts is None else auts
    gens = gamma.generators()
    words = _words_from_generators(gamma, gens)
    out = []
    ident = tuple(g.elements)
    for images in product(auts, repeat=len(gens)):
        sigma = [None] * gamma.order
        for x, word in words.items():
            p = ident
            for k in word:
                p = _perm_mul(p, images[k])
            sigma[x] = p
        if all(sigma[gamma.mul(a, b)] == _perm_mul(sigma[a], sigma[b])
               for a in gamma.elements for b in gamma.elements):
            out.append(tuple(sigma))
    return out


@dataclass(frozen=True)
class FiniteGroupAction:
    """A finite group acting on a lattice: ``matrices[i]`` is the image of element i."""

    group: FiniteGroup
    matrices: tuple

    def act(self, i, v):
        return la.mat_vec(self.matrices[i], v)


def action_from_generators(L, gens, limit=10000):
    """Close a list of isometry matrices under multiplication."""
    from .lattice import check_isometry

    mats = [check_isometry(L, m) for m in gens]
    n = L.rank
    ident = la.mat_key(la.identity(n))
    group, elements = group_from_closure(
        mats, lambda a, b: la.mat_key(la.mat_mul(a, b)), ident, "action", limit
    )
    return FiniteGroupAction(group, tuple(elements))


def action_from_table(L, table, matrices):
    from .lattice import check_isometry

    g = make_group(table)
    mats = tuple(check_isometry(L, m) for m in matrices)
    if len(mats) != g.order:
        raise InvalidGroup("need one matrix per group element")
    for a in g.elements:
        for b in g.elements:
            if la.mat_key(la.mat_mul(mats[a], mats[b])) != mats[g.mul(a, b)]:
                raise NotAnIsometry(f"matrices do not respect the table at ({a}, {b})")
    return FiniteGroupAction(g, mats)
