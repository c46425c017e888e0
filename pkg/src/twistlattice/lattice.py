"""Integral lattices: Gram forms, signatures, isometries, fixed sublattices."""

from dataclasses import dataclass, field
from fractions import Fraction

from . import intlinalg as la
from .errors import Degenerate, DimensionMismatch, NotAnIsometry, NotSymmetric


@dataclass(frozen=True)
class Lattice:
    """Free abelian group of finite rank with an integral symmetric form."""

    gram: tuple
    signature: tuple = field(compare=False)
    det: int = field(compare=False)

    @property
    def rank(self):
        return len(self.gram)

    def inner(self, v, w):
        return inner(self, v, w)

    def norm(self, v):
        return inner(self, v, v)

    def to_json(self):
        return {"rank": self.rank, "gram": [list(r) for r in self.gram]}


def make_lattice(gram):
    rows = [list(r) for r in gram]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise DimensionMismatch("gram must be a nonempty square matrix")
    for r in rows:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                raise DimensionMismatch("gram entries must be integers")
    for i in range(n):
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetric(f"gram[{i}][{j}] != gram[{j}][{i}]")
    d = la.det(rows)
    if d == 0:
        raise Degenerate("gram has zero determinant")
    return Lattice(tuple(tuple(r) for r in rows), signature_of(rows), d)


def signature_of(gram):
    """(positive, negative) inertia via rational congruence diagonalization."""
    a = [[Fraction(x) for x in row] for row in gram]
    n = len(a)
    diag = []
    size = n
    while size:
        k = next((i for i in range(size) if a[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in range(size) for j in range(size) if a[i][j] != 0), None)
            if pair is None:
                diag.extend([Fraction(0)] * size)
                break
            i, j = pair
            # x_i -> x_i + x_j makes the (i, i) entry 2 a_ij != 0
            for r in range(size):
                a[r][i] += a[r][j]
            for c in range(size):
                a[i][c] += a[j][c]
            k = i
        piv = a[k][k]
        diag.append(piv)
        rest = [r for r in range(size) if r != k]
        a = [[a[r][c] - a[r][k] * a[k][c] / piv for c in rest] for r in rest]
        size -= 1
    pos = sum(1 for x in diag if x > 0)
    neg = sum(1 for x in diag if x < 0)
    return (pos, neg)


def _check_vec(L, v):
    if len(v) != L.rank:
        raise DimensionMismatch(f"vector of length {len(v)} in a rank {L.rank} lattice")


def inner(L, v, w):
    _check_vec(L, v)
    _check_vec(L, w)
    g = L.gram
    return sum(v[i] * g[i][j] * w[j] for i in range(L.rank) for j in range(L.rank) if v[i] and w[j])


def gram_vector(L, v):
    """The functional x -> inner(x, v) as a coefficient row."""
    _check_vec(L, v)
    return tuple(sum(L.gram[i][j] * v[j] for j in range(L.rank)) for i in range(L.rank))


def is_isometry(L, m):
    if len(m) != L.rank or any(len(r) != L.rank for r in m):
        raise DimensionMismatch("isometry candidate must be rank x rank")
    return la.mat_eq(la.mat_mul(la.mat_mul(la.transpose(m), L.gram), m), L.gram)


def check_isometry(L, m):
    if not is_isometry(L, m):
        raise NotAnIsometry(f"matrix {m} does not preserve the form")
    return tuple(tuple(r) for r in m)


def apply(m, v):
    return la.mat_vec(m, v)


def fixed_sublattice(L, matrices):
    """Saturated basis of the vectors fixed by every matrix in ``matrices``.

    ``matrices`` may be a FiniteGroupAction or any iterable of isometries.
    """
    mats = list(getattr(matrices, "matrices", matrices))
    n = L.rank
    stacked = []
    for m in mats:
        check_isometry(L, m)
        for i in range(n):
            stacked.append([m[i][j] - int(i == j) for j in range(n)])
    if not stacked:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    kernel = la.integer_kernel(stacked)
    return la.hnf_rows(kernel)
