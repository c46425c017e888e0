"""H^1 with almost abelian coefficients.

A group G is given in normal form: elements are triples (q, k, v) meaning
(k, v) * s(q), where G0 = K x| Z^r has product
(k1, v1)(k2, v2) = (k1 * alpha^v1(k2), v1 + v2), Q = G/G0 is finite and
s is a section with s(q1) s(q2) = f(q1, q2) s(q1 q2). Conjugation by s(q)
acts on G0 through theta_q(k, 0) = (phi_q(k), 0) and
theta_q(1, e_i) = (kappa_{q,i}, A_q e_i).

The computation works with a Gamma-stable normal subgroup N of G0 (G0
itself when it is stable, else the intersection of its Gamma-translates):
classes of the finite quotient G/N, then for each class c the fiber, found
from the c-twisted action on N through its lattice quotient L and its
finite kernel K_N. Equivalence of candidate cocycles is decided exactly.
"""

import random
from dataclasses import dataclass, field
from itertools import product

from .. import intlinalg as la
from ..errors import InvalidAction, InvalidExtensionDatum, LiftSearchExhausted
from ..groups import FiniteGroup, _perm_mul, is_automorphism
from .core import (GammaGroup, TwistedGammaGroup, conjugate_cocycle, extend_from_generators,
                   is_cocycle, trivial_cocycle)
from .finite import FiniteGammaGroup, h1_finite
from .free_abelian import FreeAbelianGammaGroup, h1_free_abelian

SAMPLE_TRIPLES = 20_000


def _perm_power(p, k):
    n = len(p)
    if k < 0:
        inv = [0] * n
        for i, x in enumerate(p):
            inv[x] = i
        p, k = tuple(inv), -k
    out = tuple(range(n))
    while k:
        if k & 1:
            out = _perm_mul(out, p)
        p = _perm_mul(p, p)
        k >>= 1
    return out


def _perm_order(p):
    k, x, ident = 1, tuple(p), tuple(range(len(p)))
    while x != ident:
        x = _perm_mul(x, p)
        k += 1
    return k


@dataclass(frozen=True)
class AlmostAbelianGroup:
    """Extension datum; see the module docstring for the meaning of each field.

    ``shift[i]`` is alpha_i as a permutation of K, ``factor[q1][q2]`` is the
    G0 element (k, v) of f(q1, q2).
    """

    kernel: FiniteGroup
    rank: int
    shift: tuple
    quotient: FiniteGroup
    q_on_kernel: tuple
    q_on_lattice: tuple
    q_kappa: tuple
    factor: tuple
    _orders: tuple = field(default=(), compare=False, repr=False)

    @property
    def identity(self):
        return (self.quotient.identity, self.kernel.identity, (0,) * self.rank)

    def _alpha(self, v, k):
        for i, e in enumerate(v):
            if e:
                k = _perm_power(self.shift[i], e % self._orders[i])[k]
        return k

    def g0_mul(self, a, b):
        (k1, v1), (k2, v2) = a, b
        return (self.kernel.mul(k1, self._alpha(v1, k2)), tuple(x + y for x, y in zip(v1, v2)))

    def g0_inv(self, a):
        k, v = a
        nv = tuple(-x for x in v)
        return (self._alpha(nv, self.kernel.inv(k)), nv)

    def g0_pow(self, a, n):
        if n < 0:
            a, n = self.g0_inv(a), -n
        out = (self.kernel.identity, (0,) * self.rank)
        while n:
            if n & 1:
                out = self.g0_mul(out, a)
            a = self.g0_mul(a, a)
            n >>= 1
        return out

    def theta(self, q, a):
        k, v = a
        out = (self.q_on_kernel[q][k], (0,) * self.rank)
        for i, e in enumerate(v):
            if e:
                out = self.g0_mul(out, self.g0_pow(self._lattice_image(q, i), e))
        return out

    def _lattice_image(self, q, i):
        a = self.q_on_lattice[q]
        return (self.q_kappa[q][i], tuple(a[j][i] for j in range(self.rank)))

    def mul(self, x, y):
        q1, k1, v1 = x
        q2, k2, v2 = y
        g = self.g0_mul((k1, v1), self.theta(q1, (k2, v2)))
        g = self.g0_mul(g, self.factor[q1][q2])
        return (self.quotient.mul(q1, q2),) + g

    def inv(self, x):
        q, k, v = x
        Q = self.quotient
        qi = Q.inv(q)
        s_inv = self.mul((qi, self.kernel.identity, (0,) * self.rank),
                         (Q.identity,) + self.g0_inv(self.factor[q][qi]))
        return self.mul(s_inv, (Q.identity,) + self.g0_inv((k, v)))

    def power(self, x, n):
        if n < 0:
            x, n = self.inv(x), -n
        out = self.identity
        while n:
            if n & 1:
                out = self.mul(out, x)
            x = self.mul(x, x)
            n >>= 1
        return out

    def kernel_element(self, k):
        return (self.quotient.identity, k, (0,) * self.rank)

    def lattice_element(self, v):
        return (self.quotient.identity, self.kernel.identity, tuple(v))

    def section(self, q):
        return (q, self.kernel.identity, (0,) * self.rank)

    def generators(self):
        K, Q = self.kernel, self.quotient
        unit = [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]
        return ([self.kernel_element(k) for k in K.generators()]
                + [self.lattice_element(e) for e in unit]
                + [self.section(q) for q in Q.generators()])

    def sample(self):
        """Finite set of elements with small lattice part, used for checks."""
        unit = [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]
        vs = [(0,) * self.rank] + unit + [tuple(-x for x in e) for e in unit]
        return [(q, k, v) for q in self.quotient.elements for k in self.kernel.elements for v in vs]


def _sampled_triples(elements, limit):
    n = len(elements)
    if n ** 3 <= limit:
        return product(elements, repeat=3)
    rng = random.Random(0)
    return ((rng.choice(elements), rng.choice(elements), rng.choice(elements)) for _ in range(limit))


def make_almost_abelian(kernel, rank, shift, quotient, q_on_kernel, q_on_lattice, q_kappa,
                        factor, sample_limit=SAMPLE_TRIPLES):
    K, Q = kernel, quotient
    e_k, e_q = K.identity, Q.identity
    shift = tuple(tuple(p) for p in shift)
    if len(shift) != rank:
        raise InvalidExtensionDatum("need one kernel automorphism per lattice generator")
    for p in shift:
        if not is_automorphism(K, p):
            raise InvalidExtensionDatum(f"{p} is not an automorphism of K")
    for a in shift:
        for b in shift:
            if _perm_mul(a, b) != _perm_mul(b, a):
                raise InvalidExtensionDatum("lattice generators must act by commuting automorphisms")
    if len(q_on_kernel) != Q.order or len(q_on_lattice) != Q.order or len(q_kappa) != Q.order:
        raise InvalidExtensionDatum("need data for every element of Q")
    q_on_kernel = tuple(tuple(p) for p in q_on_kernel)
    for p in q_on_kernel:
        if not is_automorphism(K, p):
            raise InvalidExtensionDatum(f"{p} is not an automorphism of K")
    mats = tuple(la.mat_key(m) if rank else () for m in q_on_lattice)
    for m in mats:
        if rank and (len(m) != rank or abs(la.det(m)) != 1):
            raise InvalidExtensionDatum("lattice action must be invertible over the integers")
    kappa = tuple(tuple(int(x) for x in row) for row in q_kappa)
    if any(len(row) != rank for row in kappa):
        raise InvalidExtensionDatum("kappa needs one kernel element per lattice generator")
    fac = tuple(tuple((int(k), tuple(int(x) for x in v)) for k, v in row) for row in factor)
    if len(fac) != Q.order or any(len(row) != Q.order for row in fac):
        raise InvalidExtensionDatum("factor set must be |Q| x |Q|")
    zero = (e_k, (0,) * rank)
    if any(fac[e_q][q] != zero or fac[q][e_q] != zero for q in Q.elements):
        raise InvalidExtensionDatum("factor set must be normalized at the identity")
    if (q_on_kernel[e_q] != tuple(K.elements) or kappa[e_q] != (e_k,) * rank
            or (rank and mats[e_q] != la.mat_key(la.identity(rank)))):
        raise InvalidExtensionDatum("the identity of Q must act trivially")
    orders = tuple(_perm_order(p) for p in shift)
    G = AlmostAbelianGroup(K, rank, shift, Q, q_on_kernel, mats, kappa, fac, orders)
    elems = G.sample()
    for x, y, z in _sampled_triples(elems, sample_limit):
        if G.mul(G.mul(x, y), z) != G.mul(x, G.mul(y, z)):
            raise InvalidExtensionDatum(f"product is not associative at {x}, {y}, {z}")
    for x in elems:
        if G.mul(x, G.inv(x)) != G.identity or G.mul(G.inv(x), x) != G.identity:
            raise InvalidExtensionDatum(f"inverse of {x} is wrong")
    for k in K.elements:
        for x in elems:
            conj = G.mul(G.mul(x, G.kernel_element(k)), G.inv(x))
            if conj[0] != e_q or any(conj[2]):
                raise InvalidExtensionDatum("K is not normal")
    return G


class AlmostAbelianGammaGroup(GammaGroup):
    """Almost abelian group with Gamma acting by automorphisms.

    The action is fixed by images of the generators of the normal form:
    ``kernel_images[g][k]``, ``lattice_images[g][i]`` (image of e_i) and
    ``section_images[g][q]``.
    """

    def __init__(self, gamma, datum, kernel_images, lattice_images, section_images):
        self.gamma = gamma
        self.datum = datum
        self.kernel_images = kernel_images
        self.lattice_images = lattice_images
        self.section_images = section_images
        self.identity = datum.identity

    def mul(self, a, b):
        return self.datum.mul(a, b)

    def inv(self, a):
        return self.datum.inv(a)

    def act(self, g, x):
        D = self.datum
        q, k, v = x
        out = self.kernel_images[g][k]
        for i, e in enumerate(v):
            if e:
                out = D.mul(out, D.power(self.lattice_images[g][i], e))
        return D.mul(out, self.section_images[g][q])


def _element(x):
    q, k, v = x
    return (int(q), int(k), tuple(int(t) for t in v))


def almost_abelian_action(gamma, datum, kernel_images, lattice_images, section_images,
                          sample_limit=SAMPLE_TRIPLES):
    n = gamma.order
    D = datum
    try:
        ki = tuple(tuple(_element(x) for x in row) for row in kernel_images)
        li = tuple(tuple(_element(x) for x in row) for row in lattice_images)
        si = tuple(tuple(_element(x) for x in row) for row in section_images)
    except (TypeError, ValueError) as exc:
        raise InvalidAction(f"malformed action image: {exc}") from None
    if len(ki) != n or len(li) != n or len(si) != n:
        raise InvalidAction("need images for every element of Gamma")
    for g in range(n):
        if (len(ki[g]) != D.kernel.order or len(li[g]) != D.rank
                or len(si[g]) != D.quotient.order):
            raise InvalidAction(f"images for Gamma element {g} have the wrong shape")
        for x in ki[g] + li[g] + si[g]:
            if (not 0 <= x[0] < D.quotient.order or not 0 <= x[1] < D.kernel.order
                    or len(x[2]) != D.rank):
                raise InvalidAction(f"{x} is not an element of G")
    G = AlmostAbelianGammaGroup(gamma, D, ki, li, si)
    elems = D.sample()
    e = gamma.identity
    if any(G.act(e, x) != x for x in elems):
        raise InvalidAction("identity of Gamma must act trivially")
    for a in gamma.elements:
        for b in gamma.elements:
            ab = gamma.mul(a, b)
            for x in elems:
                if G.act(ab, x) != G.act(a, G.act(b, x)):
                    raise InvalidAction(f"action is not a homomorphism at ({a}, {b})")
    pairs = list(product(elems, repeat=2))
    if len(pairs) > sample_limit:
        pairs = random.Random(1).sample(pairs, sample_limit)
    for a in gamma.elements:
        for x, y in pairs:
            if G.act(a, D.mul(x, y)) != D.mul(G.act(a, x), G.act(a, y)):
                raise InvalidAction(f"sigma_{a} does not respect the product at {x}, {y}")
    return G


@dataclass
class StableCore:
    """A Gamma-stable normal subgroup N of G0 with everything needed to compute in it.

    ``section[i]`` lifts element i of G/N; ``kernel`` lists K intersected with N;
    ``lattice`` is a basis of the image L of N in Z^r and ``lattice_section[j]``
    an element of N over ``lattice[j]``.
    """

    quotient: FiniteGroup
    section: list
    kernel: list
    lattice: list
    lattice_section: list
    stable: bool
    _project: object = field(repr=False, default=None)

    def project(self, x):
        return self._project(x)

    @property
    def index(self):
        return self.quotient.order


def _closure_with_preimages(gens, mul, lift_mul, identity):
    """Breadth-first closure of image generators, tracking one preimage of each image."""
    images, pre = [identity[0]], [identity[1]]
    index = {identity[0]: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for i in frontier:
            for img, x in gens:
                y = mul(images[i], img)
                if y not in index:
                    index[y] = len(images)
                    images.append(y)
                    pre.append(lift_mul(pre[i], x))
                    nxt.append(index[y])
        frontier = nxt
    return images, pre, index


def stable_core(G):
    """G0 if every sigma_g preserves it, else the intersection of its translates."""
    D = G.datum
    Q, K, r = D.quotient, D.kernel, D.rank
    unit = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    probes = [D.kernel_element(k) for k in K.elements] + [D.lattice_element(e) for e in unit]
    stable = all(G.act(g, x)[0] == Q.identity for g in G.gamma.elements for x in probes)
    if stable:
        return StableCore(
            quotient=Q,
            section=[D.section(q) for q in Q.elements],
            kernel=[D.kernel_element(k) for k in K.elements],
            lattice=unit,
            lattice_section=[D.lattice_element(e) for e in unit],
            stable=True,
            _project=lambda x: x[0],
        )

    gam = G.gamma

    def psi(x):
        return tuple(G.act(g, x)[0] for g in gam.elements)

    def pmul(a, b):
        return tuple(Q.mul(x, y) for x, y in zip(a, b))

    gens = [(psi(x), x) for x in D.generators()]
    ident = (tuple(Q.identity for _ in gam.elements), D.identity)
    images, section, index = _closure_with_preimages(gens, pmul, D.mul, ident)
    table = tuple(tuple(index[pmul(a, b)] for b in images) for a in images)
    quotient = FiniteGroup(table, 0, "G/N")
    e_img = images[0]
    kernel = [D.kernel_element(k) for k in K.elements if psi(D.kernel_element(k)) == e_img]
    kernel_images = {psi(D.kernel_element(k)) for k in K.elements}
    m = quotient.order
    vecs = [tuple(m * x for x in e) for e in unit]
    for v in product(range(m), repeat=r):
        if any(v) and psi(D.lattice_element(v)) in kernel_images:
            vecs.append(v)
    basis = la.hnf_rows(vecs) if r else []
    lattice_section = []
    for b in basis:
        x = D.lattice_element(b)
        target = psi(x)
        k = next(k for k in K.elements
                 if pmul(psi(D.kernel_element(k)), target) == e_img)
        lattice_section.append(D.mul(D.kernel_element(k), x))
    return StableCore(quotient, section, kernel, basis, lattice_section, False,
                      lambda x: index[psi(x)])


class _NormalPart:
    """Arithmetic in N under a fixed Gamma-action ``tau`` on G."""

    def __init__(self, tau, core):
        self.tau = tau
        self.core = core
        self.D = tau.datum
        self.rl = len(core.lattice)
        self.basis_t = la.transpose(core.lattice) if self.rl else []
        self.kernel_index = {x: i for i, x in enumerate(core.kernel)}
        self.matrices = [self._lattice_matrix(g) for g in tau.gamma.elements]
        self.fixed = self._stacked()
        self.fixed_basis = la.integer_kernel(self.fixed, self.rl) if self.rl else []

    def coords(self, x):
        if not self.rl:
            return ()
        y = la.solve_integer(self.basis_t, list(x[2]))
        if y is None:
            raise InvalidAction(f"{x} does not lie over the lattice of N")
        return tuple(y)

    def lift(self, y):
        D = self.D
        out = D.identity
        for n_j, c in zip(self.core.lattice_section, y):
            if c:
                out = D.mul(out, D.power(n_j, c))
        return out

    def _lattice_matrix(self, g):
        cols = [self.coords(self.tau.act(g, n)) for n in self.core.lattice_section]
        return la.transpose(cols) if cols else []

    def _stacked(self):
        rows = []
        for m in self.matrices:
            for i in range(self.rl):
                rows.append([m[i][j] - int(i == j) for j in range(self.rl)])
        return rows

    def lattice_group(self):
        return FreeAbelianGammaGroup(self.tau.gamma, self.rl, self.matrices)

    def twisted_kernel(self, c):
        """K_N with the action twisted by ``c``, as a finite Gamma-group."""
        D, ks, idx = self.D, self.core.kernel, self.kernel_index
        table = tuple(tuple(idx[D.mul(a, b)] for b in ks) for a in ks)
        group = FiniteGroup(table, idx[D.identity], "K_N")
        tw = TwistedGammaGroup(self.tau, c)
        perms = [tuple(idx[tw.act(g, k)] for k in ks) for g in self.tau.gamma.elements]
        return FiniteGammaGroup(self.tau.gamma, group, perms)

    def equivalent(self, e1, e2):
        """Whether N-valued cocycles e1, e2 are conjugate by an element of N."""
        if e1 == e2:
            return True
        tau = self.tau
        if self.rl:
            rhs = [x for a, b in zip(e1, e2) for x in
                   (p - q for p, q in zip(self.coords(b), self.coords(a)))]
            x0 = la.solve_integer(self.fixed, rhs)
            if x0 is None:
                return False
            start = conjugate_cocycle(tau, self.lift(x0), e1)
        else:
            start = tuple(e1)
        gens = list(self.core.kernel) + [self.lift(f) for f in self.fixed_basis]
        gens += [self.D.inv(x) for x in gens]
        seen = {start}
        frontier = [start]
        while frontier:
            nxt = []
            for c in frontier:
                if c == e2:
                    return True
                for b in gens:
                    d = conjugate_cocycle(tau, b, c)
                    if d not in seen:
                        seen.add(d)
                        nxt.append(d)
            frontier = nxt
        return False


def _fixed_quotient_elements(tau, core):
    """Elements of G/N fixed by the induced action of ``tau``."""
    return [i for i, s in enumerate(core.section)
            if all(core.project(tau.act(g, s)) == i for g in tau.gamma.elements)]


def _search_values(core, normal, radius):
    """Elements of N ordered by the size of their lattice coordinates."""
    D = normal.D
    ys = sorted(product(range(-radius, radius + 1), repeat=normal.rl),
                key=lambda y: (max(map(abs, y), default=0), y))
    return [D.mul(k, normal.lift(y)) for y in ys for k in core.kernel]


def _lattice_offsets(G, core, normal, cbar):
    """Lattice parts of a lift of ``cbar`` modulo K_N, or None when no lift exists.

    Writing c(g) = n_g s(cbar(g)) and reducing modulo K_N, the cocycle
    identity becomes l_ab = l_a + P_a l_b + t_ab in the lattice of N, an
    affine system over the integers.
    """
    D, gam, rl = G.datum, G.gamma, normal.rl
    n = gam.order
    if not rl:
        return {g: () for g in gam.elements}
    sec = core.section
    pmats = []
    for a in gam.elements:
        s, si = sec[cbar[a]], D.inv(sec[cbar[a]])
        cols = [normal.coords(D.mul(D.mul(s, G.act(a, x)), si)) for x in core.lattice_section]
        pmats.append(la.transpose(cols))
    rows, rhs = [], []
    for a in gam.elements:
        for b in gam.elements:
            ab = gam.mul(a, b)
            t = D.mul(D.mul(sec[cbar[a]], G.act(a, sec[cbar[b]])), D.inv(sec[cbar[ab]]))
            tv = normal.coords(t)
            for i in range(rl):
                row = [0] * (n * rl)
                row[ab * rl + i] += 1
                row[a * rl + i] -= 1
                for j in range(rl):
                    row[b * rl + j] -= pmats[a][i][j]
                rows.append(row)
                rhs.append(tv[i])
    sol = la.solve_integer(rows, rhs)
    if sol is None:
        return None
    return {g: tuple(sol[g * rl:(g + 1) * rl]) for g in gam.elements}


@dataclass
class AlmostAbelianH1:
    """Class representatives and the data certifying that they are complete.

    ``unresolved`` lists classes of G/N (as cocycles on the quotient) for
    which no lift to G was found within the search radius; when it is empty
    the list of representatives is exact. ``obstructed`` lists classes that
    provably have no lift, already modulo K_N.
    """

    representatives: list
    quotient_classes: list
    fiber_sizes: list
    unresolved: list
    core: StableCore
    bound: int
    obstructed: list = field(default_factory=list)

    @property
    def exact(self):
        return not self.unresolved

    def certificate(self):
        return {
            "exact": self.exact,
            "classes": len(self.representatives),
            "normal_subgroup_stable": self.core.stable,
            "index": self.core.index,
            "kernel_order": len(self.core.kernel),
            "lattice_rank": len(self.core.lattice),
            "quotient_classes": len(self.quotient_classes),
            "fiber_sizes": list(self.fiber_sizes),
            "unresolved": len(self.unresolved),
            "obstructed": len(self.obstructed),
            "bound": self.bound,
        }


def _h1_normal(tau, core):
    """tau-cocycles with values in N, one per class of H^1(Gamma, N)."""
    normal = _NormalPart(tau, core)
    gens = tau.gamma.generators()
    lat = h1_free_abelian(normal.lattice_group())
    out = []
    for z in lat.representatives:
        lifted = None
        for ks in product(core.kernel, repeat=len(gens)):
            values = [tau.mul(k, normal.lift(z[s])) for k, s in zip(ks, gens)]
            lifted = extend_from_generators(tau, gens, values)
            if lifted is not None:
                break
        if lifted is None:
            continue
        fibre = h1_finite(normal.twisted_kernel(lifted))
        for e in fibre:
            out.append(tuple(tau.mul(core.kernel[e[g]], lifted[g]) for g in tau.gamma.elements))
    return out, normal


def _equivalent_in_g(core, normal, e1, e2):
    """Whether tau-cocycles e1, e2 with values in N are conjugate in G."""
    tau = normal.tau
    for i in _fixed_quotient_elements(tau, core):
        shifted = conjugate_cocycle(tau, core.section[i], e1)
        if normal.equivalent(shifted, e2):
            return True
    return False


def h1_almost_abelian(G, lift_radius=2, strict=False):
    """Representatives of H^1(Gamma, G); the trivial cocycle comes first."""
    core = stable_core(G)
    D = G.datum
    gam = G.gamma
    perms = [tuple(core.project(G.act(g, s)) for s in core.section) for g in gam.elements]
    qbar = FiniteGammaGroup(gam, core.quotient, perms)
    gens = gam.generators()
    reps, fibers, unresolved, obstructed, qclasses = [], [], [], [], []
    plain = _NormalPart(G, core)
    search = None
    for cbar in h1_finite(qbar):
        qclasses.append(cbar)
        if cbar == trivial_cocycle(qbar):
            c = trivial_cocycle(G)
        else:
            offsets = _lattice_offsets(G, core, plain, cbar)
            if offsets is None:
                obstructed.append(cbar)
                fibers.append(0)
                continue
            if search is None:
                search = _search_values(core, plain, lift_radius)
            centres = [D.mul(plain.lift(offsets[s]), core.section[cbar[s]]) for s in gens]
            c = None
            for ns in product(search, repeat=len(gens)):
                values = [D.mul(n, x) for n, x in zip(ns, centres)]
                c = extend_from_generators(G, gens, values)
                if c is not None:
                    break
            if c is None:
                if strict:
                    raise LiftSearchExhausted(
                        f"no lift of quotient class {cbar} within radius {lift_radius}")
                unresolved.append(cbar)
                fibers.append(0)
                continue
        tau = TwistedGammaGroup(G, c)
        candidates, normal = _h1_normal(tau, core)
        distinct = []
        for e in candidates:
            if not any(_equivalent_in_g(core, normal, d, e) for d in distinct):
                distinct.append(e)
        fibers.append(len(distinct))
        reps.extend(tuple(D.mul(x, y) for x, y in zip(e, c)) for e in distinct)
    for x in reps:
        assert is_cocycle(G, x)
    bound = h1_cardinality_bound(gam.order, D.quotient.order, D.kernel.order, D.rank,
                                 stable_subgroup=core.stable)
    return AlmostAbelianH1(reps, qclasses, fibers, unresolved, core, bound, obstructed)


def h1_cardinality_bound(gamma_order, index, kernel_order, rank, stable_subgroup=True):
    """Upper bound for |H^1(Gamma, G)|.

    Counts cocycles layer by layer: at most index^(n-1) on the finite
    quotient, |K|^(n-1) on the finite kernel and n^(r(n-1)) classes on the
    lattice layer (n-torsion, at most r(n-1) generators), with n = |Gamma|.
    When G0 is not Gamma-stable the quotient by the stable core has index
    at most index^n, which replaces ``index``.
    """
    n = gamma_order
    if n == 1:
        return 1
    idx = index if stable_subgroup else index ** n
    return idx ** (n - 1) * kernel_order ** (n - 1) * n ** (rank * (n - 1))
