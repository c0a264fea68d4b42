"""Exact linear algebra over the ground field, plus a mod-p rank backend.

Matrices are plain lists of rows of Scalars.  Everything here is exact;
the mod-p routines only ever produce certified *lower* bounds for ranks
(used elsewhere in a squeeze against exact upper bounds).
"""

import numpy as np
from gmpy2 import mpq

from .field import ONE, ZERO, Scalar


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = [[ZERO] * m for _ in range(n)]
    for i in range(n):
        row = a[i]
        acc = out[i]
        for t in range(k):
            c = row[t]
            if not c:
                continue
            brow = b[t]
            for j in range(m):
                if brow[j]:
                    acc[j] = acc[j] + c * brow[j]
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        acc = ZERO
        for c, x in zip(row, v):
            if c and x:
                acc = acc + c * x
        out.append(acc)
    return out


def rref(rows):
    """Reduced row echelon form; returns (new_rows, pivot_columns)."""
    mat = [list(r) for r in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c].inv()
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat, pivots


def rank(rows):
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows):
    """Basis of the right nullspace {v : rows @ v = 0}."""
    if not rows:
        return []
    ncols = len(rows[0])
    mat, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -mat[r][f]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution of rows @ v = rhs, or None if inconsistent."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    mat, pivots = rref(aug)
    if ncols in pivots:
        return None
    v = [ZERO] * ncols
    for r, p in enumerate(pivots):
        v[p] = mat[r][ncols]
    return v


def intersect(basis_a, basis_b):
    """Basis of span(basis_a) & span(basis_b)."""
    if not basis_a or not basis_b:
        return []
    ncols = len(basis_a[0])
    # solve sum s_i a_i - sum t_j b_j = 0: columns are the a's then b's.
    rows = []
    for c in range(ncols):
        rows.append([v[c] for v in basis_a] + [-v[c] for v in basis_b])
    out = []
    for sol in nullspace(rows):
        vec = [ZERO] * ncols
        for coeff, a in zip(sol[: len(basis_a)], basis_a):
            if coeff:
                for c in range(ncols):
                    vec[c] = vec[c] + coeff * a[c]
        if any(vec):
            out.append(vec)
    # independent by construction of the nullspace basis only if the a's
    # are independent; reduce to be safe.
    reduced, pivots = rref(out) if out else ([], [])
    return [reduced[i] for i in range(len(pivots))]


def charpoly(mat):
    """Characteristic polynomial det(T*I - mat), ascending coefficients.

    Faddeev-LeVerrier: exact over a field of characteristic zero.
    """
    n = len(mat)
    coeffs = [ONE]  # descending: T^n first
    m = identity(n)
    for k in range(1, n + 1):
        m = mat_mul(mat, m)
        tr = ZERO
        for i in range(n):
            tr = tr + m[i][i]
        c = -tr / k
        coeffs.append(c)
        if k < n:
            for i in range(n):
                m[i][i] = m[i][i] + c
    return list(reversed(coeffs))


# -- mod-p backend ---------------------------------------------------------

class PrimeEmbedding:
    """A prime p with an embedding of F into Z/p.

    Requires a root w of T^2 - T + 1 mod p (so p = 1 mod 6) such that
    2 - w is a quadratic residue with root s; then x -> w, t -> s.
    """

    def __init__(self, p, w, s):
        self.p, self.w, self.s = p, w, s

    def reduce(self, scalar):
        a, b, c, d = scalar.coeffs
        p, w, s = self.p, self.w, self.s
        out = 0
        for q, mult in ((a, 1), (b, w), (c, s), (d, w * s % p)):
            den = int(q.denominator) % p
            if den == 0:
                raise ZeroDivisionError(f"denominator of {q} vanishes mod {p}")
            out += int(q.numerator) % p * pow(den, -1, p) % p * mult
        return out % p

    def __repr__(self):
        return f"PrimeEmbedding(p={self.p}, w={self.w}, s={self.s})"


def good_primes(count, start=100003):
    """The first `count` primes >= start admitting an embedding of F."""
    import sympy

    found = []
    p = start - 1
    while len(found) < count:
        p = int(sympy.nextprime(p))
        if p % 6 != 1:
            continue
        w = None
        for r in sympy.nthroot_mod(p - 3, 2, p, all_roots=True) or []:
            # roots of T^2 - T + 1: (1 +- sqrt(-3)) / 2
            cand = (1 + r) * pow(2, -1, p) % p
            if (cand * cand - cand + 1) % p == 0:
                w = cand
                break
        if w is None:
            continue
        target = (2 - w) % p
        roots = sympy.nthroot_mod(target, 2, p, all_roots=True) or []
        if not roots:
            # the other root of T^2 - T + 1 may work instead
            w2 = (1 - w) % p
            roots = sympy.nthroot_mod((2 - w2) % p, 2, p, all_roots=True) or []
            if roots:
                w = w2
        if roots:
            found.append(PrimeEmbedding(p, int(w), int(roots[0])))
    return found


def rank_mod_p(rows, emb):
    """Rank of the reduction of a Scalar matrix mod emb.p (int64 numpy)."""
    if not rows:
        return 0
    p = emb.p
    mat = np.array(
        [[emb.reduce(x) for x in row] for row in rows], dtype=np.int64
    )
    return rank_int_mod_p(mat, p)


def rank_int_mod_p(mat, p):
    """Row-reduction rank of an int64 numpy matrix mod p (p^2 < 2^63)."""
    mat = np.mod(mat, p)
    nrows, ncols = mat.shape
    r = 0
    for c in range(ncols):
        nz = np.nonzero(mat[r:, c])[0]
        if nz.size == 0:
            continue
        pivot = r + int(nz[0])
        if pivot != r:
            mat[[r, pivot]] = mat[[pivot, r]]
        inv = pow(int(mat[r, c]), -1, p)
        mat[r] = mat[r] * inv % p
        below = mat[r + 1:, c]
        sel = np.nonzero(below)[0]
        if sel.size:
            mat[r + 1 + sel] = (
                mat[r + 1 + sel] - np.outer(below[sel], mat[r])
            ) % p
        r += 1
        if r == nrows:
            break
    return r
