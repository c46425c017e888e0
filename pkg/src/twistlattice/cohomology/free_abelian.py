"""H^1 with coefficients in Z^r, by integer linear algebra.

Cocycles form the lattice Z1 = kernel of the linear system
x_{ab} = x_a + A_a x_b inside Z^{|Gamma| r}; coboundaries are the image
of b -> ((A_g - I) b)_g. The quotient is read off a Smith normal form.
"""

from dataclasses import dataclass, field
from itertools import product

from .. import intlinalg as la
from ..errors import BudgetExceeded, InvalidAction
from .core import GammaGroup, check_action_on


class FreeAbelianGammaGroup(GammaGroup):
    """Z^r with Gamma acting through integer matrices."""

    def __init__(self, gamma, rank, matrices):
        self.gamma = gamma
        self.rank = rank
        self.matrices = tuple(la.mat_key(m) for m in matrices)
        self.identity = (0,) * rank

    def mul(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def inv(self, a):
        return tuple(-x for x in a)

    def act(self, g, x):
        return tuple(la.mat_vec(self.matrices[g], x))


def free_abelian_action(gamma, matrices, rank=None):
    matrices = [[[int(x) for x in row] for row in m] for m in matrices]
    if len(matrices) != gamma.order:
        raise InvalidAction("need one matrix per element of Gamma")
    r = rank if rank is not None else (len(matrices[0]) if matrices else 0)
    for m in matrices:
        if len(m) != r or any(len(row) != r for row in m):
            raise InvalidAction(f"action matrices must be {r} x {r}")
        if r and abs(la.det(m)) != 1:
            raise InvalidAction("action matrix is not invertible over the integers")
    G = FreeAbelianGammaGroup(gamma, r, matrices)
    basis = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    check_action_on(G, basis or [G.identity])
    return G


def _flatten(c):
    return [x for v in c for x in v]


def _unflatten(x, n, r):
    return tuple(tuple(x[g * r:(g + 1) * r]) for g in range(n))


def _coboundary_matrix(G):
    """Rows stacking A_g - I over g; maps b to the flattened coboundary of b."""
    r = G.rank
    rows = []
    for m in G.matrices:
        for i in range(r):
            rows.append([m[i][j] - int(i == j) for j in range(r)])
    return rows


def _cocycle_system(G):
    gam, r = G.gamma, G.rank
    rows = []
    for a in gam.elements:
        m = G.matrices[a]
        for b in gam.elements:
            ab = gam.mul(a, b)
            for i in range(r):
                row = [0] * (gam.order * r)
                row[ab * r + i] += 1
                row[a * r + i] -= 1
                for j in range(r):
                    row[b * r + j] -= m[i][j]
                rows.append(row)
    return rows


@dataclass
class FreeAbelianH1:
    """H^1(Gamma, Z^r) = direct sum of Z/d for d in ``divisors``.

    ``representatives`` lists one cocycle per class, trivial first, ordered
    by the class coordinates.
    """

    group: FreeAbelianGammaGroup
    divisors: list
    representatives: list
    cocycle_basis: list = field(repr=False)
    _u: list = field(repr=False, default=None)
    _diag: list = field(repr=False, default=None)

    @property
    def order(self):
        out = 1
        for d in self.divisors:
            out *= d
        return out

    def class_of(self, c):
        """Coordinates of the class of ``c`` in the product of Z/d."""
        if not self.divisors:
            return ()
        zmat = la.transpose(self.cocycle_basis)
        y = la.solve_integer(zmat, _flatten(c))
        if y is None:
            raise InvalidAction(f"{c} is not a cocycle")
        uy = la.mat_vec(self._u, y)
        return tuple(uy[i] % d for i, d in enumerate(self._diag) if d > 1)

    def same_class(self, c1, c2):
        return self.class_of(c1) == self.class_of(c2)


def is_coboundary(G, c):
    """Whether ``c`` = (A_g - I) b for some integer b."""
    if G.rank == 0:
        return True
    return la.solve_integer(_coboundary_matrix(G), _flatten(c)) is not None


def h1_free_abelian(G, max_representatives=100_000):
    gam, r = G.gamma, G.rank
    n = gam.order
    if r == 0:
        triv = tuple(() for _ in gam.elements)
        return FreeAbelianH1(G, [], [triv], [])
    basis = la.integer_kernel(_cocycle_system(G), n * r)
    triv = _unflatten([0] * (n * r), n, r)
    if not basis:
        return FreeAbelianH1(G, [], [triv], basis)
    zmat = la.transpose(basis)
    cob = _coboundary_matrix(G)
    cols = []
    for i in range(r):
        bi = [row[i] for row in cob]
        y = la.solve_integer(zmat, bi)
        cols.append(y)
    bc = la.transpose(cols)
    d, u, _ = la.smith_normal_form(bc)
    m = len(basis)
    diag = [d[i][i] if i < r else 0 for i in range(m)]
    if any(x == 0 for x in diag):
        # impossible for finite Gamma: H^1 is killed by |Gamma|
        raise InvalidAction("cohomology has a free part; the action is not a finite group action")
    inv_u = [[int(x) for x in row] for row in la.inverse(u)]
    live = [i for i, x in enumerate(diag) if x > 1]
    total = 1
    for i in live:
        total *= diag[i]
    if total > max_representatives:
        raise BudgetExceeded(f"H^1 has {total} classes, above {max_representatives}")
    reps = []
    for ks in product(*(range(diag[i]) for i in live)):
        kvec = [0] * m
        for i, k in zip(live, ks):
            kvec[i] = k
        y = la.mat_vec(inv_u, kvec)
        reps.append(_unflatten(la.mat_vec(zmat, y), n, r))
    return FreeAbelianH1(G, [diag[i] for i in live], reps, basis, u, diag)
