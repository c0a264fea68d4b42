"""Simple modules over the double and Yetter-Drinfeld module catalogs.

Two parallel catalogs, one for each 24-dimensional algebra:

  * over H: 24 one-dimensional and 120 two-dimensional structures, the
    latter indexed by `lambda_params()`;
  * over K: 24 one-dimensional and 120 two-dimensional structures, the
    latter indexed by `theta_params()`.

Each catalog entry is a `YDModule` (action matrices per generator plus a
coaction table) with an exact verifier `check_yd`.  The H-side entries
correspond to modules over the 576-dimensional double fixture: the same
parameters feed `double_character`/`double_module`, and
`yd_to_double_module` rebuilds the double action from a Yetter-Drinfeld
structure by pairing the coaction against the dual-group functionals;
equality of the two is a strong cross-check of both catalogs.

`braiding` produces the induced braiding matrix c(u (x) v) =
u_(-1).v (x) u_(0); closed-form matrices for comparison and the braid
equation checker live here too, as do categorical duals (`dual_yd`) and
exact isomorphism tests.
"""

from dataclasses import dataclass

from .field import ONE, Scalar, THETA, XI, ZERO, find_roots, xi_pow
from .fixtures import dense, dual_group_elements, dual_skew_element, fixture
from .hopf import _invert_sparse_matrix
from .linalg import identity, mat_mul, nullspace, rank
from .rewrite import NCPolynomial

THETA_INV = THETA.inv()

_MINUS_ONE = -ONE


def sign(n):
    return _MINUS_ONE if n % 2 else ONE


# ---------------------------------------------------------------------------
# parameter sets


def lambda_params():
    """Parameters of the two-dimensional simple modules over the double
    (equivalently the H-side two-dimensional Yetter-Drinfeld catalog)."""
    out = []
    for i in range(6):
        for j in range(6):
            for k in range(2):
                for iota in range(2):
                    if (j + 3 * k - 3 * (iota + 1)) % 6 != 0:
                        out.append((i, j, k, iota))
    return out


def theta_params():
    """Parameters of the K-side two-dimensional Yetter-Drinfeld catalog."""
    out = []
    for i in range(6):
        for j in range(6):
            for k in range(2):
                for iota in range(2):
                    if (3 * i - j) % 6 != 0:
                        out.append((i, j, k, iota))
    return out


def character_params():
    """Parameters of the one-dimensional catalog entries (both sides)."""
    return [(i, j, k) for i in range(2) for j in range(2) for k in range(6)]


# ---------------------------------------------------------------------------
# modules over the double


@dataclass
class DoubleModule:
    """Finite-dimensional module over the presented double: one matrix per
    generator letter, columns index the domain basis."""

    params: tuple
    dim: int
    action: dict

    @property
    def name(self):
        return "M%s" % (self.params,)


def double_character(i, j, k):
    one = lambda s: [[s]]
    return DoubleModule((i, j, k), 1, {
        "g": one(sign(i)),
        "h": one(sign(j)),
        "x": one(ZERO),
        "a": one(xi_pow(k)),
        "b": one(ZERO),
        "c": one(ZERO),
        "d": one(sign(i + j) * xi_pow(k)),
    })


def double_module(i, j, k, iota):
    x1 = THETA_INV * xi_pow(1 - i) * (xi_pow(j) * sign(k) - sign(iota))
    x2 = -THETA * xi_pow(i - 1) * (xi_pow(j) * sign(k) + sign(iota))
    s = sign(iota + 1)
    return DoubleModule((i, j, k, iota), 2, {
        "a": [[s * xi_pow(i), ZERO], [ZERO, s * xi_pow(i - 1)]],
        "d": [[xi_pow(i), ZERO], [ZERO, -xi_pow(i - 1)]],
        "b": [[ZERO, sign(iota)], [ZERO, ZERO]],
        "c": [[ZERO, ONE], [ZERO, ZERO]],
        "g": [[xi_pow(j), ZERO], [ZERO, xi_pow(j)]],
        "h": [[sign(k), ZERO], [ZERO, sign(k + 1)]],
        "x": [[ZERO, x1], [x2, ZERO]],
    })


def double_module_list():
    mods = [double_character(*p) for p in character_params()]
    mods.extend(double_module(*p) for p in lambda_params())
    return mods


def _word_matrix(action, word, dim):
    out = identity(dim)
    for ch in word:
        out = mat_mul(out, action[ch])
    return out


def _poly_matrix(action, poly, dim):
    out = [[ZERO] * dim for _ in range(dim)]
    for word, coeff in poly.terms.items():
        m = _word_matrix(action, word, dim)
        for r in range(dim):
            for c in range(dim):
                if m[r][c]:
                    out[r][c] = out[r][c] + coeff * m[r][c]
    return out


def check_module(alg, mod):
    """Every defining relation of the presented algebra holds on the module."""
    failures = []
    names = {alg.alphabet.char(n): n for n in alg.alphabet.names}
    action = {ch: mod.action[name] for ch, name in names.items()}
    for lhs, rhs in alg.system.rules.items():
        left = _word_matrix(action, lhs, mod.dim)
        right = _poly_matrix(action, rhs, mod.dim)
        if left != right:
            failures.append("%s: relation %s fails"
                            % (mod.name, alg.alphabet.format_word(lhs)))
    return failures


def action_algebra_rank(mod):
    """Dimension of the algebra generated by the action matrices.

    Equal to dim^2 exactly when the module is absolutely simple."""
    dim = mod.dim
    mats = [identity(dim)]
    rows = [[m[r][c] for r in range(dim) for c in range(dim)] for m in mats]
    current = rank([row[:] for row in rows])
    frontier = mats
    while frontier:
        nxt = []
        for m in frontier:
            for gen in mod.action.values():
                cand = mat_mul(m, gen)
                row = [cand[r][c] for r in range(dim) for c in range(dim)]
                probe = rows + [row]
                newrank = rank([rr[:] for rr in probe])
                if newrank > current:
                    rows.append(row)
                    current = newrank
                    nxt.append(cand)
        if current == dim * dim:
            return current
        frontier = nxt
    return current


def is_absolutely_simple(mod):
    return action_algebra_rank(mod) == mod.dim * mod.dim


def _trace(m):
    total = ZERO
    for i in range(len(m)):
        total = total + m[i][i]
    return total


def module_fingerprint(mod, words=("g", "h", "a", "d", "ha", "hd", "ad", "xx")):
    vals = [str(mod.dim)]
    for w in words:
        vals.append(str(_trace(_word_matrix(mod.action, w, mod.dim))))
    return tuple(vals)


def _intertwiners(act1, act2, dim1, dim2, letters):
    """Basis of {T : T rho1(l) = rho2(l) T for all letters l}."""
    rows = []
    for l in letters:
        m1, m2 = act1[l], act2[l]
        for r in range(dim2):
            for c in range(dim1):
                row = [ZERO] * (dim1 * dim2)
                for t in range(dim1):
                    row[r * dim1 + t] = row[r * dim1 + t] + m1[t][c]
                for t in range(dim2):
                    row[t * dim1 + c] = row[t * dim1 + c] - m2[r][t]
                rows.append(row)
    return nullspace(rows)


def _invertible_member(sols, dim1, dim2):
    if dim1 != dim2:
        return None
    for flat in sols:
        mat = [[flat[r * dim1 + c] for c in range(dim1)] for r in range(dim1)]
        if rank([row[:] for row in mat]) == dim1:
            return mat
    return None


def double_modules_isomorphic(m1, m2):
    if m1.dim != m2.dim:
        return False
    letters = sorted(m1.action)
    sols = _intertwiners(m1.action, m2.action, m1.dim, m2.dim, letters)
    return _invertible_member(sols, m1.dim, m2.dim) is not None


def pairwise_distinct(mods, isomorphic):
    """Indices of isomorphic pairs (empty when all are pairwise distinct).

    Modules are bucketed by trace fingerprint first; the exact intertwiner
    search runs only inside buckets."""
    buckets = {}
    for n, mod in enumerate(mods):
        buckets.setdefault(module_fingerprint(mod), []).append(n)
    bad = []
    for members in buckets.values():
        for s, n1 in enumerate(members):
            for n2 in members[s + 1:]:
                if isomorphic(mods[n1], mods[n2]):
                    bad.append((n1, n2))
    return bad


# ---------------------------------------------------------------------------
# Yetter-Drinfeld structures


@dataclass
class YDModule:
    """Module-comodule over one of the presented fixtures.

    action: generator name -> dim x dim matrix (columns index the basis).
    coaction: per basis index m, a list of (coeff, word, n) triples meaning
    delta(v_m) = sum coeff * word (x) v_n, with irreducible words.
    """

    algebra: str
    kind: str
    params: tuple
    dim: int
    action: dict
    coaction: list

    @property
    def name(self):
        return "%s[%s]%s" % (self.kind, self.algebra, (self.params,))

    def fx(self):
        return fixture(self.algebra)


def _parse_compact(fx, text):
    """Words in catalog data are concatenated single-letter names."""
    if text in ("", "1"):
        return ""
    if all(ch in fx.alphabet._name for ch in text):
        return text
    return fx.alphabet.parse_word(text)


def _normalize_coaction(fx, coaction):
    out = []
    for entries in coaction:
        acc = {}
        for coeff, text, n in entries:
            red = fx.system.reduce_word(_parse_compact(fx, text))
            for w, c in red.terms.items():
                key = (w, n)
                s = acc.get(key, ZERO) + coeff * c
                if s:
                    acc[key] = s
                elif key in acc:
                    del acc[key]
        out.append(sorted(((c, w, n) for (w, n), c in acc.items()),
                          key=lambda t: (t[2], t[1])))
    return out


def make_yd(algebra, kind, params, dim, action, coaction):
    fx = fixture(algebra)
    return YDModule(algebra, kind, params, dim, action,
                    _normalize_coaction(fx, coaction))


def _char_action(fx, mod):
    return {fx.alphabet.char(name): m for name, m in mod.action.items()}


def check_yd(mod):
    """Exact Yetter-Drinfeld verification: module relations, comodule
    axioms, and the compatibility delta(l.v) = l1 v(-1) S(l3) (x) l2 v(0)
    for every generator l and basis vector v."""
    fx = mod.fx()
    failures = []
    action = _char_action(fx, mod)
    for lhs, rhs in fx.system.rules.items():
        if _word_matrix(action, lhs, mod.dim) != _poly_matrix(action, rhs, mod.dim):
            failures.append("%s: module relation %s fails"
                            % (mod.name, fx.alphabet.format_word(lhs)))

    for m in range(mod.dim):
        total = [ZERO] * mod.dim
        for coeff, w, n in mod.coaction[m]:
            total[n] = total[n] + coeff * fx.counit_word(w)
        if any(total[n] != (ONE if n == m else ZERO) for n in range(mod.dim)):
            failures.append("%s: comodule counit fails at v%d" % (mod.name, m))
        lhs = {}
        rhs = {}
        for coeff, w, n in mod.coaction[m]:
            for (w1, w2), c2 in fx.delta_word(w).items():
                key = (w1, w2, n)
                s = lhs.get(key, ZERO) + coeff * c2
                if s:
                    lhs[key] = s
                elif key in lhs:
                    del lhs[key]
            for c2, w2, n2 in mod.coaction[n]:
                key = (w, w2, n2)
                s = rhs.get(key, ZERO) + coeff * c2
                if s:
                    rhs[key] = s
                elif key in rhs:
                    del rhs[key]
        if lhs != rhs:
            failures.append("%s: comodule coassociativity fails at v%d"
                            % (mod.name, m))

    for ch, mat in action.items():
        dl = fx.delta_gen[ch]
        triples = {}
        for (u, w2), c in dl.items():
            for (u1, u2), c2 in fx.delta_word(u).items():
                key = (u1, u2, w2)
                s = triples.get(key, ZERO) + c * c2
                if s:
                    triples[key] = s
                elif key in triples:
                    del triples[key]
        for m in range(mod.dim):
            left = {}
            for r in range(mod.dim):
                if not mat[r][m]:
                    continue
                for coeff, w, n in mod.coaction[r]:
                    key = (w, n)
                    s = left.get(key, ZERO) + mat[r][m] * coeff
                    if s:
                        left[key] = s
                    elif key in left:
                        del left[key]
            right = {}
            for (u1, u2, u3), cd in triples.items():
                su3 = fx.antipode_word(u3)
                mid = _word_matrix(action, u2, mod.dim)
                for coeff, w, n in mod.coaction[m]:
                    for r in range(mod.dim):
                        if not mid[r][n]:
                            continue
                        scale = cd * coeff * mid[r][n]
                        alg = fx.system.poly_mult(
                            fx.system.mult(u1, w), su3)
                        for term, c3 in alg.terms.items():
                            key = (term, r)
                            s = right.get(key, ZERO) + scale * c3
                            if s:
                                right[key] = s
                            elif key in right:
                                del right[key]
            if left != right:
                failures.append(
                    "%s: compatibility fails for %s at v%d"
                    % (mod.name, fx.alphabet._name[ch], m))
    return failures


def braiding(mod):
    """Braiding c(v_i (x) v_j) = (i's coaction word).v_j (x) v_i0, as a
    dim^2 x dim^2 matrix on the row-major tensor basis."""
    fx = mod.fx()
    dim = mod.dim
    action = _char_action(fx, mod)
    out = [[ZERO] * (dim * dim) for _ in range(dim * dim)]
    for i in range(dim):
        for coeff, w, n in mod.coaction[i]:
            m = _word_matrix(action, w, dim)
            for j in range(dim):
                for r in range(dim):
                    if m[r][j]:
                        out[r * dim + n][i * dim + j] = \
                            out[r * dim + n][i * dim + j] + coeff * m[r][j]
    return out


def kron(a, b):
    na, nb = len(a), len(b)
    out = [[ZERO] * (na * nb) for _ in range(na * nb)]
    for i in range(na):
        for j in range(na):
            if not a[i][j]:
                continue
            for k in range(nb):
                for l in range(nb):
                    if b[k][l]:
                        out[i * nb + k][j * nb + l] = a[i][j] * b[k][l]
    return out


def braid_equation_holds(c, dim):
    eye = identity(dim)
    c12 = kron(c, eye)
    c23 = kron(eye, c)
    return mat_mul(mat_mul(c12, c23), c12) == mat_mul(mat_mul(c23, c12), c23)


# ---------------------------------------------------------------------------
# the H-side catalog


def h_one_dim(i, j, k):
    val = xi_pow(k)
    return make_yd("H", "point", (i, j, k), 1, {
        "a": [[val]],
        "b": [[ZERO]],
        "c": [[ZERO]],
        "d": [[sign(i + j) * val]],
    }, [[(ONE, "d" * j + "a" * ((3 * i - j) % 6), 0)]])


def h_two_dim(i, j, k, iota):
    x1 = THETA_INV * xi_pow(1 - i) * (xi_pow(j) * sign(k) - sign(iota))
    x2 = -THETA * xi_pow(i - 1) * (xi_pow(j) * sign(k) + sign(iota))
    s = sign(iota + 1)
    action = {
        "a": [[s * xi_pow(i), ZERO], [ZERO, s * xi_pow(i - 1)]],
        "d": [[xi_pow(i), ZERO], [ZERO, -xi_pow(i - 1)]],
        "b": [[ZERO, sign(iota)], [ZERO, ZERO]],
        "c": [[ZERO, ONE], [ZERO, ZERO]],
    }
    ap = lambda n: "a" * (n % 6)
    if k == 0:
        coaction = [
            [(ONE, ap(j), 0), (THETA_INV * x2, "b" + ap(j - 1), 1)],
            [(ONE, "d" + ap(j - 1), 1), (THETA_INV * x1, "c" + ap(j - 1), 0)],
        ]
    else:
        coaction = [
            [(ONE, "d" + ap(j - 1), 0), (THETA_INV * x2, "c" + ap(j - 1), 1)],
            [(ONE, ap(j), 1), (THETA_INV * x1, "b" + ap(j - 1), 0)],
        ]
    return make_yd("H", "V", (i, j, k, iota), 2, action, coaction)


def h_catalog():
    mods = [h_one_dim(*p) for p in character_params()]
    mods.extend(h_two_dim(*p) for p in lambda_params())
    return mods


def h_one_dim_braiding_scalar(i, j, k):
    return sign(i * (j + k) + j)


def h_braiding_closed_form(i, j, k, iota):
    """The H-side two-dimensional braiding on basis (v1v1, v1v2, v2v1, v2v2)."""
    z = [[ZERO] * 4 for _ in range(4)]
    if k == 0:
        q11 = sign((iota + 1) * j) * xi_pow(i * j)
        q12 = sign(j * iota) * xi_pow((i + 2) * j)
        extra = q11 + sign((j - 1) * iota) * xi_pow((i + 2) * j)
        q21 = sign((iota + 1) * (j - 1)) * xi_pow(i * j)
        q22 = sign((j - 1) * iota) * xi_pow((i + 2) * j)
        low = (ONE - XI * XI).inv() * sign(iota * (j - 1)) * \
            xi_pow((j - 2) * i + 2 * j - 1) * (xi_pow(j) - sign(iota))
    else:
        q11 = sign((j - 1) * (iota + 1)) * xi_pow(i * j)
        q12 = sign((j - 1) * iota) * xi_pow((i + 2) * j)
        extra = q11 + sign(j * iota) * xi_pow((i + 2) * j)
        q21 = sign((iota + 1) * j) * xi_pow(i * j)
        q22 = sign(j * iota) * xi_pow((i + 2) * j)
        low = (ONE - XI * XI).inv() * sign(j * iota) * \
            xi_pow(2 * j + 2 + i * j + 4 * i) * (xi_pow(j) + sign(iota))
    z[0][0] = q11
    z[2][1] = q12
    z[1][1] = extra
    z[1][2] = q21
    z[3][3] = q22
    z[0][3] = low
    return z


# ---------------------------------------------------------------------------
# the K-side catalog


def k_one_dim(i, j, k):
    return make_yd("K", "point", (i, j, k), 1, {
        "a": [[xi_pow(k)]],
        "b": [[ZERO]],
        "c": [[sign(i)]],
    }, [[(ONE, "c" * j + "a" * ((3 * k) % 6), 0)]])


def k_two_dim(i, j, k, iota):
    action = {
        "a": [[xi_pow(i), ZERO], [ZERO, xi_pow(i + 1)]],
        "b": [[ZERO, ONE], [ZERO, ZERO]],
        "c": [[sign(k), ZERO], [ZERO, sign(k)]],
    }
    ap = lambda n: "a" * (n % 6)
    ci = "c" * iota
    coaction = [
        [(ONE, ci + ap(-j), 0),
         (xi_pow(4) * (xi_pow(4 * i) - xi_pow(i + j)), ci + "b" + ap(-1 - j), 1)],
        [(ONE, ci + ap(3 - j), 1),
         (xi_pow(2 * i) + xi_pow(j - i), ci + "b" + ap(2 - j), 0)],
    ]
    return make_yd("K", "W", (i, j, k, iota), 2, action, coaction)


def k_catalog():
    mods = [k_one_dim(*p) for p in character_params()]
    mods.extend(k_two_dim(*p) for p in theta_params())
    return mods


def k_one_dim_braiding_scalar(i, j, k):
    return sign(i * j + k)


def k_braiding_closed_form(i, j, k, iota):
    """The K-side two-dimensional braiding on basis (e1e1, e1e2, e2e1, e2e2)."""
    s = sign(k * iota)
    z = [[ZERO] * 4 for _ in range(4)]
    z[0][0] = s * xi_pow(-i * j)
    z[2][1] = s * xi_pow(-j * (i + 1))
    z[1][1] = s * (xi_pow(-i * j) + xi_pow((3 - j) * (i + 1)))
    z[1][2] = s * xi_pow(i * (3 - j))
    z[3][3] = s * xi_pow((3 - j) * (i + 1))
    z[0][3] = s * (xi_pow(4 * i - i * j + 2 - j) + xi_pow(i - i * j + 2))
    return z


# ---------------------------------------------------------------------------
# graded-algebra realizations of the same braided vector spaces


def gr_a_one_dim(i, j, k):
    return make_yd("grA", "point", (i, j, k), 1, {
        "g": [[sign(i)]],
        "h": [[sign(j)]],
        "x": [[ZERO]],
    }, [[(ONE, "g" * ((-k) % 6) + "h" * ((i + j) % 2), 0)]])


def gr_a_two_dim(i, j, k, iota):
    x2 = -THETA * xi_pow(i - 1) * (xi_pow(j) * sign(k) + sign(iota))
    action = {
        "g": [[xi_pow(-j), ZERO], [ZERO, xi_pow(-j)]],
        "h": [[sign(k), ZERO], [ZERO, sign(k + 1)]],
        "x": [[ZERO, ZERO], [sign(k) * x2 * xi_pow(-j), ZERO]],
    }
    gp = lambda n: "g" * (n % 6)
    if iota == 0:
        coaction = [
            [(ONE, gp(-3 - i) + "h", 0)],
            [(ONE, gp(-2 - i), 1),
             (xi_pow(1 - i) * THETA_INV, gp(-3 - i) + "hx", 0)],
        ]
    else:
        coaction = [
            [(ONE, gp(-i), 0)],
            [(ONE, gp(-i + 1) + "h", 1),
             (-xi_pow(1 - i) * THETA_INV, gp(-i) + "x", 0)],
        ]
    return make_yd("grA", "V", (i, j, k, iota), 2, action, coaction)


def gr_a_prime_two_dim(i, j, k, iota, root=XI):
    """K-side realization over the graded dual-side algebra; `root` is the
    square root of xi^2 used in the pairing normalization."""
    action = {
        "g": [[xi_pow(-j), ZERO], [ZERO, xi_pow(3 - j)]],
        "h": [[sign(iota), ZERO], [ZERO, sign(iota)]],
        "x": [[ZERO, ZERO],
              [root * xi_pow(1 + i - j) * (sign(i) - xi_pow(j)), ZERO]],
    }
    gp = lambda n: "g" * (n % 6)
    hk = "h" * k
    coaction = [
        [(ONE, gp(i) + hk, 0)],
        [(ONE, gp(i + 1) + hk, 1),
         (root.inv() * sign(i + 1) * xi_pow(-i - 1), gp(i) + hk + "x", 0)],
    ]
    return make_yd("grA_prime", "W", (i, j, k, iota), 2, action, coaction)


# ---------------------------------------------------------------------------
# duals and isomorphism


_sinv_cache = {}


def _sinv_poly(name, word):
    """S^{-1} of a basis word, as a reduced polynomial."""
    if name not in _sinv_cache:
        h = dense(name)
        fx = fixture(name)
        cols = _invert_sparse_matrix(h.antipode, h.dim)
        table = []
        for col in cols:
            table.append(NCPolynomial({fx.basis[i]: c for i, c in col.items()}))
        _sinv_cache[name] = table
    fx = fixture(name)
    return _sinv_cache[name][fx.word_index[word]]


def dual_yd(mod):
    """Left dual: (l.f)(v) = f(S(l).v); coaction transposed through S^{-1}."""
    fx = mod.fx()
    dim = mod.dim
    action = _char_action(fx, mod)
    new_action = {}
    for name in mod.action:
        ch = fx.alphabet.char(name)
        m = _poly_matrix(action, fx.antipode_gen[ch], dim)
        new_action[name] = [[m[c][r] for c in range(dim)] for r in range(dim)]
    new_coaction = [[] for _ in range(dim)]
    for m in range(dim):
        for coeff, w, n in mod.coaction[m]:
            for term, c2 in _sinv_poly(mod.algebra, w).terms.items():
                new_coaction[n].append((coeff * c2, term, m))
    return make_yd(mod.algebra, mod.kind + "*", mod.params, dim,
                   new_action, new_coaction)


def yd_isomorphic(m1, m2):
    """Exact test for an invertible map respecting action and coaction."""
    if m1.algebra != m2.algebra or m1.dim != m2.dim:
        return False
    fx = m1.fx()
    dim = m1.dim
    act1 = _char_action(fx, m1)
    act2 = _char_action(fx, m2)
    rows = []
    for l in act1:
        a1, a2 = act1[l], act2[l]
        for r in range(dim):
            for c in range(dim):
                row = [ZERO] * (dim * dim)
                for t in range(dim):
                    row[r * dim + t] = row[r * dim + t] + a1[t][c]
                    row[t * dim + c] = row[t * dim + c] - a2[r][t]
                rows.append(row)
    words = set()
    for table in (m1.coaction, m2.coaction):
        for entries in table:
            for _, w, _n in entries:
                words.add(w)
    co1 = [{(w, n): co for co, w, n in entries} for entries in m1.coaction]
    co2 = [{(w, n): co for co, w, n in entries} for entries in m2.coaction]
    for w in sorted(words):
        for r in range(dim):
            for c in range(dim):
                # coefficient of w (x) v_r in delta(T v_c) minus (id (x) T) delta(v_c)
                row = [ZERO] * (dim * dim)
                for t in range(dim):
                    row[t * dim + c] = row[t * dim + c] + co2[t].get((w, r), ZERO)
                    row[r * dim + t] = row[r * dim + t] - co1[c].get((w, t), ZERO)
                rows.append(row)
    sols = nullspace(rows)
    return _invertible_member(sols, dim, dim) is not None


def _reshape_rows_to_pairs(m, dim):
    """R[(r,i)][(n,j)] = M[(r,n)][(i,j)]; M = T (x) T exactly when R is a
    nonzero symmetric matrix of rank one (R = vec(T) vec(T)^T up to scale)."""
    n2 = dim * dim
    out = [[ZERO] * n2 for _ in range(n2)]
    for r in range(dim):
        for n in range(dim):
            for i in range(dim):
                for j in range(dim):
                    out[r * dim + i][n * dim + j] = m[r * dim + n][i * dim + j]
    return out


def _rank_one_vector(r):
    """For symmetric rank-one R return u with R proportional to u u^T."""
    n = len(r)
    pivot = None
    for a in range(n):
        for b in range(n):
            if r[a][b]:
                pivot = (a, b)
                break
        if pivot:
            break
    if pivot is None:
        return None
    a, b = pivot
    u = list(r[a])
    scale = r[a][b]
    for i in range(n):
        for j in range(n):
            if r[i][j] * scale != r[i][b] * r[a][j]:
                return None
    return u


def _kron_candidate(m, c1, c2, dim):
    r = _reshape_rows_to_pairs(m, dim)
    u = _rank_one_vector(r)
    if u is None:
        return None
    t = [[u[a * dim + b] for b in range(dim)] for a in range(dim)]
    if rank([row[:] for row in t]) != dim:
        return None
    tt = kron(t, t)
    if mat_mul(tt, c1) == mat_mul(c2, tt):
        return t
    return None


def braided_spaces_isomorphic(c1, c2, dim):
    """Search for invertible T with (T (x) T) c1 = c2 (T (x) T).

    The intertwining condition is linear in M = T (x) T, so the solution
    space is computed exactly; Kronecker squares inside it correspond to
    symmetric rank-one matrices after reshaping, found here for solution
    spaces of dimension up to two per line (singletons, then pencils whose
    two-by-two minors give polynomial conditions on the mixing ratio).
    Returns the witness T, or None when no such T exists, and raises when
    the search space is too big to decide."""
    n2 = dim * dim
    rows = []
    for r in range(n2):
        for c in range(n2):
            row = [ZERO] * (n2 * n2)
            for t in range(n2):
                row[r * n2 + t] = row[r * n2 + t] + c1[t][c]
                row[t * n2 + c] = row[t * n2 + c] - c2[r][t]
            rows.append(row)
    sols = nullspace(rows)
    if not sols:
        return None
    mats = [[[s[r * n2 + c] for c in range(n2)] for r in range(n2)]
            for s in sols]
    for m in mats:
        t = _kron_candidate(m, c1, c2, dim)
        if t is not None:
            return t
    for a in range(len(mats)):
        ra = _reshape_rows_to_pairs(mats[a], dim)
        for b in range(a + 1, len(mats)):
            rb = _reshape_rows_to_pairs(mats[b], dim)
            # minors of (ra + s rb) as quadratics in s
            polys = []
            for i in range(n2):
                for j in range(n2):
                    for k in range(i, n2):
                        for l in range(j, n2):
                            c0 = ra[i][j] * ra[k][l] - ra[i][l] * ra[k][j]
                            c1_ = ra[i][j] * rb[k][l] + rb[i][j] * ra[k][l] \
                                - ra[i][l] * rb[k][j] - rb[i][l] * ra[k][j]
                            c2_ = rb[i][j] * rb[k][l] - rb[i][l] * rb[k][j]
                            if c0 or c1_ or c2_:
                                polys.append([c0, c1_, c2_])
            if not polys:
                continue
            for s in find_roots(polys[0]):
                cand = [[mats[a][r][c] + s * mats[b][r][c]
                         for c in range(n2)] for r in range(n2)]
                t = _kron_candidate(cand, c1, c2, dim)
                if t is not None:
                    return t
    if len(mats) > 2:
        raise ValueError("braided isomorphism search is undecided")
    return None


# ---------------------------------------------------------------------------
# bridge between the double and the H-side catalog


def yd_to_double_module(mod):
    """Rebuild a module over the double from an H-side Yetter-Drinfeld
    structure: the dual-group generators act through the coaction."""
    fxh = fixture("H")
    gt, ht = dual_group_elements()
    xt = {i: THETA * c for i, c in dual_skew_element().items()}
    action = dict(mod.action)
    for name, functional in (("g", gt), ("h", ht), ("x", xt)):
        m = [[ZERO] * mod.dim for _ in range(mod.dim)]
        for col in range(mod.dim):
            for coeff, w, n in mod.coaction[col]:
                val = functional.get(fxh.word_index[w])
                if val:
                    m[n][col] = m[n][col] + coeff * val
        action[name] = m
    return DoubleModule(mod.params, mod.dim, action)
