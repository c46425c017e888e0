"""Exact integer and rational matrix routines.

Matrices are lists of rows; vectors are tuples or lists. Entries are ``int``
or ``fractions.Fraction``. Nothing here touches floating point.
"""

from fractions import Fraction
from math import gcd


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(row) for row in zip(*a)]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def mat_eq(a, b):
    return all(list(r) == list(s) for r, s in zip(a, b)) and len(a) == len(b)


def mat_key(a):
    return tuple(tuple(row) for row in a)


def det(a):
    """Determinant by Bareiss fraction-free elimination (exact for ints)."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                if isinstance(num, int) and isinstance(prev, int):
                    m[i][j] = num // prev
                else:
                    m[i][j] = Fraction(num) / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rref(a):
    """Reduced row echelon form over Q. Returns (rows, pivot_columns)."""
    m = [[Fraction(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m[:r], pivots


def rank(a):
    if not a:
        return 0
    return len(rref(a)[1])


def rational_nullspace(a, ncols=None):
    """Basis of {x in Q^n : a x = 0}, one vector per free column."""
    if not a:
        n = ncols or 0
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    n = len(a[0])
    rows, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve_rational(a, b):
    """One solution of a x = b over Q, or None when inconsistent."""
    n = len(a[0])
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    rows, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(rows, pivots):
        x[p] = row[n]
    return tuple(x)


def inverse(a):
    n = len(a)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in rows]


def primitive(v):
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in ints)


def content(v):
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def smith_normal_form(a):
    """Smith normal form with transforms.

    Returns ``(d, u, v)`` with ``u * a * v == d``, ``u`` and ``v`` unimodular,
    ``d`` diagonal with nonnegative entries ``d[i][i] | d[i+1][i+1]``.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    d = [[int(x) for x in row] for row in a]
    u = identity(m)
    v = identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):
        # row_dst += f * row_src
        d[dst] = [x + f * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for row in d:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    t = 0
    while t < min(m, n):
        nonzero = [(abs(d[i][j]), i, j) for i in range(t, m) for j in range(t, n) if d[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            changed = False
            for i in range(t + 1, m):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    add_row(t, i, -q)
                    if d[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, n):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    add_col(t, j, -q)
                    if d[t][j]:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if d[i][j] % d[t][t]), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return d, u, v


def elementary_divisors(a):
    d, _, _ = smith_normal_form(a)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i]]


def integer_kernel(a, ncols=None):
    """Saturated basis of {x in Z^n : a x = 0}.

    Columns of the right SNF transform belonging to zero pivots span the
    kernel and, being part of a unimodular matrix, are primitive together.
    """
    if not a:
        n = ncols or 0
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    n = len(a[0])
    d, _, v = smith_normal_form(a)
    r = sum(1 for i in range(min(len(d), n)) if d[i][i])
    return [tuple(v[i][j] for i in range(n)) for j in range(r, n)]


def solve_integer(a, b):
    """One integer solution of a x = b, or None."""
    m = len(a)
    n = len(a[0])
    d, u, v = smith_normal_form(a)
    ub = mat_vec(u, b)
    y = [0] * n
    for i in range(m):
        di = d[i][i] if i < n else 0
        if di == 0:
            if ub[i] != 0:
                return None
        else:
            if ub[i] % di:
                return None
            y[i] = ub[i] // di
    return mat_vec(v, y)


def hnf_rows(vectors):
    """Canonical row Hermite normal form of the lattice spanned by ``vectors``.

    Pivots positive, entries above each pivot reduced into [0, pivot).
    Zero rows dropped, so the result is a basis.
    """
    rows = [list(map(int, v)) for v in vectors]
    if not rows:
        return []
    n = len(rows[0])
    out = []
    col = 0
    while rows and col < n:
        rows = [r for r in rows if any(r)]
        live = [r for r in rows if r[col]]
        if not live:
            col += 1
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            p = live[0]
            nxt = [p]
            for r in live[1:]:
                q = r[col] // p[col]
                r2 = [x - q * y for x, y in zip(r, p)]
                nxt.append(r2)
            live = [r for r in nxt if r[col]]
            rest = [r for r in nxt if not r[col]]
            rows = [r for r in rows if not r[col]] + rest
        p = live[0]
        if p[col] < 0:
            p = [-x for x in p]
        out.append(p)
        rows = [r for r in rows if not r[col]]
        col += 1
    for i, p in enumerate(out):
        c = next(j for j, x in enumerate(p) if x)
        for k in range(i):
            q = out[k][c] // p[c]
            if q:
                out[k] = [x - q * y for x, y in zip(out[k], p)]
    return [tuple(r) for r in out]


def saturate(vectors, n):
    """Basis of (span_Q(vectors)) intersected with Z^n, in row HNF."""
    if not vectors:
        return []
    ann = integer_kernel([list(v) for v in vectors])
    if not ann:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return hnf_rows(integer_kernel([list(w) for w in ann], n))
