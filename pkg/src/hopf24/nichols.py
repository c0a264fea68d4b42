"""Nichols algebras of small braided vector spaces, exactly.

A braided vector space is a pair (V, c) with c a solution of the braid
equation on V (x) V.  The Nichols algebra B(V) is the quotient of the
tensor algebra T(V) by the graded kernel of the quantum symmetrizers

    S_n = sum over the symmetric group of the braided lifts M(w),

and its graded dimensions are the ranks of the S_n.  This module computes
those ranks exactly, certifies finite presentations of B(V) against the
symmetrizer kernel, and provides the skew derivations and braided shuffle
coproducts used to manipulate relations.

Tensors are sparse dicts mapping index words (tuples over range(dim)) to
field scalars.
"""

from collections import Counter
from dataclasses import dataclass, field

from .field import ONE, ZERO, Scalar, order_of_root_of_unity, xi_pow
from .linalg import identity, mat_mul, rank_int_mod_p
from .rewrite import Alphabet, NCPolynomial, RewritingSystem
from .roots import classify_param
from .yd import (braiding, h_one_dim, h_one_dim_braiding_scalar, h_two_dim,
                 k_one_dim, k_one_dim_braiding_scalar, k_two_dim, sign)

HILBERT_CAP = 12


# ---------------------------------------------------------------------------
# sparse tensors


def acc_term(out, word, coeff):
    cur = out.get(word)
    if cur is None:
        if coeff:
            out[word] = coeff
        return
    cur = cur + coeff
    if cur:
        out[word] = cur
    else:
        del out[word]


def t_add(a, b):
    out = dict(a)
    for word, coeff in b.items():
        acc_term(out, word, coeff)
    return out


def t_scale(t, s):
    if not s:
        return {}
    return {word: coeff * s for word, coeff in t.items()}


def word_tensor(word, coeff=ONE):
    return {tuple(word): coeff} if coeff else {}


def tensor_degree(t):
    if not t:
        return None
    return len(next(iter(t)))


class BraidedSpace:
    """A dimension and a braiding matrix on the row-major tensor basis.

    Column i*dim + j of the matrix is c(x_i (x) x_j) expanded over the
    basis x_r (x) x_n (row r*dim + n).
    """

    def __init__(self, dim, matrix):
        self.dim = dim
        self.matrix = matrix
        cols = {}
        for i in range(dim):
            for j in range(dim):
                col = i * dim + j
                entries = []
                for r in range(dim):
                    for n in range(dim):
                        v = matrix[r * dim + n][col]
                        if v:
                            entries.append((r, n, v))
                cols[(i, j)] = tuple(entries)
        self._cols = cols

    @classmethod
    def from_module(cls, mod):
        return cls(mod.dim, braiding(mod))

    @classmethod
    def diagonal(cls, labels):
        """Diagonal braiding c(x_i (x) x_j) = q_ij x_j (x) x_i."""
        dim = len(labels)
        mat = [[ZERO] * (dim * dim) for _ in range(dim * dim)]
        for i in range(dim):
            for j in range(dim):
                mat[j * dim + i][i * dim + j] = labels[i][j]
        return cls(dim, mat)

    def elementary(self, t, k):
        """Apply the braiding at slot k (1-based: tensor factors k-1, k)."""
        cols = self._cols
        out = {}
        a = k - 1
        for word, coeff in t.items():
            pre, post = word[:a], word[k + 1:]
            for r, n, v in cols[(word[a], word[k])]:
                acc_term(out, pre + (r, n) + post, coeff * v)
        return out


def ascending_block(space, t, start, n):
    """id + c_start + c_{start+1} c_start + ... on slots start..n-1."""
    acc = dict(t)
    cur = t
    for k in range(start, n):
        cur = space.elementary(cur, k)
        for word, coeff in cur.items():
            acc_term(acc, word, coeff)
    return acc


def descending_block(space, t, start, n):
    """id + c_start + c_start c_{start+1} + ... on slots start..n-1."""
    cur = t
    for k in range(n - 1, start - 1, -1):
        cur = t_add(t, space.elementary(cur, k))
    return cur


def symmetrize(space, t):
    """Quantum symmetrizer S_n on a degree-homogeneous sparse tensor."""
    n = tensor_degree(t)
    if n is None or n <= 1:
        return dict(t)
    cur = t
    for start in range(n - 1, 0, -1):
        cur = ascending_block(space, cur, start, n)
    return cur


def in_symmetrizer_kernel(space, t):
    return not symmetrize(space, t)


# ---------------------------------------------------------------------------
# dense forms and the permutation-sum oracle


def word_index(space, word):
    idx = 0
    for ch in word:
        idx = idx * space.dim + ch
    return idx


def basis_words(dim, n):
    words = [()]
    for _ in range(n):
        words = [w + (i,) for w in words for i in range(dim)]
    return words


def dense_symmetrizer(space, n):
    size = space.dim ** n
    mat = [[Scalar()] * size for _ in range(size)]
    for col, word in enumerate(basis_words(space.dim, n)):
        for w, coeff in symmetrize(space, {word: ONE}).items():
            mat[word_index(space, w)][col] = coeff
    return mat


def elementary_dense(space, n, k):
    size = space.dim ** n
    mat = [[Scalar()] * size for _ in range(size)]
    for col, word in enumerate(basis_words(space.dim, n)):
        for w, coeff in space.elementary({word: ONE}, k).items():
            mat[word_index(space, w)][col] = coeff
    return mat


def matsumoto_symmetrizer(space, n):
    """S_n as the sum of braided lifts over all n! permutations.

    Lifts are built along reduced words: starting from the identity,
    right multiplication by the transposition s_k (which must increase
    the length) multiplies the lift by the k-th elementary braiding.
    Independent of the staircase recursion in `symmetrize`.
    """
    size = space.dim ** n
    elems = {k: elementary_dense(space, n, k) for k in range(1, n)}
    start = tuple(range(n))
    lifts = {start: identity(size)}
    queue = [start]
    while queue:
        nxt = []
        for w in queue:
            for k in range(1, n):
                if w[k - 1] < w[k]:
                    w2 = w[:k - 1] + (w[k], w[k - 1]) + w[k + 1:]
                    if w2 not in lifts:
                        lifts[w2] = mat_mul(lifts[w], elems[k])
                        nxt.append(w2)
        queue = nxt
    total = [[Scalar()] * size for _ in range(size)]
    for mat in lifts.values():
        for r in range(size):
            row, mrow = total[r], mat[r]
            for c in range(size):
                if mrow[c]:
                    row[c] = row[c] + mrow[c]
    return total


# ---------------------------------------------------------------------------
# graded dimensions


@dataclass
class HilbertResult:
    """Graded dimensions of B(V), one entry per degree starting at 0."""

    dims: list
    finite: bool

    @property
    def total(self):
        return sum(self.dims) if self.finite else None

    def __repr__(self):
        tail = "" if self.finite else ", ..."
        return f"HilbertResult({self.dims}{tail})"


def _echelon_insert(pivots, vec):
    """Reduce `vec` against `pivots` (word -> normalized row); return the
    pivot word if independent, else None.  Mutates `pivots` on success."""
    vec = dict(vec)
    while vec:
        head = min(vec)
        row = pivots.get(head)
        if row is None:
            inv = vec[head].inv()
            pivots[head] = {w: c * inv for w, c in vec.items()}
            return head
        f = vec[head]
        for w, c in row.items():
            acc_term(vec, w, -f * c)
    return None


def hilbert_function(space, cap=HILBERT_CAP):
    """Exact graded dimensions of B(V) up to degree `cap`.

    Works down the column spaces of the symmetrizers: the degree-n space
    is spanned by the ascending staircase applied to x_i (x) w over a
    basis w of the degree-(n-1) space.  A zero degree makes every higher
    degree zero, so the result is flagged finite.
    """
    dims = [1]
    if cap == 0:
        return HilbertResult(dims, False)
    level = [{(i,): ONE} for i in range(space.dim)]
    dims.append(space.dim)
    for n in range(2, cap + 1):
        pivots = {}
        kept = []
        for i in range(space.dim):
            for t in level:
                cand = ascending_block(
                    space, {(i,) + w: c for w, c in t.items()}, 1, n)
                if _echelon_insert(pivots, cand) is not None:
                    kept.append(cand)
        dims.append(len(kept))
        level = kept
        if not kept:
            return HilbertResult(dims, True)
    return HilbertResult(dims, False)


def symmetrizer_rank_mod_p(space, n, emb):
    """Rank of S_n over Z/p via the embedding; a lower bound for the
    exact rank, so a positive value certifies B(V)_n != 0."""
    import numpy as np

    p = emb.p
    d = space.dim
    braid = np.array(
        [[emb.reduce(x) for x in row] for row in space.matrix],
        dtype=np.int64)
    size = d ** n
    elems = {}
    for k in range(1, n):
        left = np.eye(d ** (k - 1), dtype=np.int64)
        right = np.eye(d ** (n - k - 1), dtype=np.int64)
        elems[k] = np.kron(np.kron(left, braid), right) % p
    total = np.eye(size, dtype=np.int64)
    for start in range(n - 1, 0, -1):
        block = np.eye(size, dtype=np.int64)
        cur = np.eye(size, dtype=np.int64)
        for k in range(start, n):
            cur = elems[k] @ cur % p
            block = (block + cur) % p
        total = block @ total % p
    return rank_int_mod_p(total, p)


# ---------------------------------------------------------------------------
# skew derivations and shuffle coproducts


def skew_derivation(space, t, i):
    """d_i(t): pair the first tensor slot with x_i* after the descending
    staircase.  S_n t = 0 iff S_{n-1} d_i t = 0 for every i."""
    n = tensor_degree(t)
    if n is None or n == 0:
        return {}
    staired = descending_block(space, t, 1, n)
    out = {}
    for word, coeff in staired.items():
        if word[0] == i:
            acc_term(out, word[1:], coeff)
    return out


def in_kernel_by_derivations(space, t):
    n = tensor_degree(t)
    if n is None:
        return True
    if n <= 1:
        return not t
    return all(
        in_kernel_by_derivations(space, skew_derivation(space, t, i))
        for i in range(space.dim))


def shuffle_coproduct(space, t):
    """Braided shuffle coproduct T(V) -> T(V) (x) T(V) of a homogeneous
    tensor, as a dict (left word, right word) -> scalar."""
    out = {}
    for word, coeff in t.items():
        state = {((), ()): coeff}
        for letter in word:
            nxt = {}
            for (lw, rw), s in state.items():
                acc_term(nxt, (lw, rw + (letter,)), s)
                block = {rw + (letter,): s}
                for slot in range(len(rw), 0, -1):
                    block = space.elementary(block, slot)
                for bw, bc in block.items():
                    acc_term(nxt, (lw + (bw[0],), bw[1:]), bc)
            state = nxt
        for key, s in state.items():
            acc_term(out, key, s)
    return out


def coproduct_component(delta, i):
    """The (i, n-i) component of a shuffle coproduct dict."""
    return {key: c for key, c in delta.items() if len(key[0]) == i}


def primitive_in_tensor_algebra(space, t):
    delta = shuffle_coproduct(space, t)
    return all(key[0] == () or key[1] == () for key in delta)


def primitive_in_nichols(space, t):
    """True when every mixed shuffle component dies under S_i (x) S_{n-i},
    i.e. the class of t is primitive in B(V) (x) B(V)."""
    n = tensor_degree(t)
    if n is None:
        return True
    delta = shuffle_coproduct(space, t)
    memo = {}

    def sym(word):
        if word not in memo:
            memo[word] = symmetrize(space, {word: ONE})
        return memo[word]

    for i in range(1, n):
        acc = {}
        for (lw, rw), c in coproduct_component(delta, i).items():
            for w1, c1 in sym(lw).items():
                for w2, c2 in sym(rw).items():
                    acc_term(acc, (w1, w2), c * c1 * c2)
        if acc:
            return False
    return True


# ---------------------------------------------------------------------------
# certified presentations


@dataclass
class PresentationCertificate:
    total: int
    by_degree: dict
    kernel_ok: bool
    confluent: bool
    failures: list = field(default_factory=list)

    @property
    def valid(self):
        return self.kernel_ok and self.confluent

    def __bool__(self):
        return self.valid


class NicholsPresentation:
    """A rewriting system presenting B(V), with composite letters.

    `expand` sends each letter name to its index word in V, so rules can
    use products such as G = v2 v1 as single letters with their own spot
    in the monomial order.  `degrees` records tensor degrees per letter.
    """

    def __init__(self, space, system, degrees, expand):
        self.space = space
        self.system = system
        alpha = system.alphabet
        self.degrees = {alpha.char(n): d for n, d in degrees.items()}
        self.expand = {alpha.char(n): tuple(w) for n, w in expand.items()}

    def word_degree(self, word):
        return sum(self.degrees[ch] for ch in word)

    def word_to_tensor(self, word, coeff=ONE):
        flat = ()
        for ch in word:
            flat += self.expand[ch]
        return {flat: coeff}

    def poly_to_tensor(self, poly):
        out = {}
        for word, coeff in poly.terms.items():
            flat = ()
            for ch in word:
                flat += self.expand[ch]
            acc_term(out, flat, coeff)
        return out

    def rule_tensors(self):
        out = {}
        for lhs, rhs in self.system.rules.items():
            t = self.word_to_tensor(lhs)
            for word, coeff in self.poly_to_tensor(rhs).items():
                acc_term(t, word, -coeff)
            out[lhs] = t
        return out

    def normal_words(self):
        return self.system.irreducible_monomials()

    def certify(self):
        """Check the two halves of the dimension certificate.

        Every rule tensor in ker S makes B(V) a quotient of the presented
        algebra; an empty overlap check makes the irreducible monomials a
        basis of the presented algebra.  Together they give an upper
        bound for dim B(V) that exact Hilbert data can meet.
        """
        failures = []
        for lhs, t in self.rule_tensors().items():
            if symmetrize(self.space, t):
                failures.append(
                    f"rule at {self.system.alphabet.format_word(lhs)} "
                    "is not in the symmetrizer kernel")
        issues = self.system.overlap_check()
        words = self.normal_words()
        by_degree = Counter(self.word_degree(w) for w in words)
        return PresentationCertificate(
            total=len(words),
            by_degree=dict(sorted(by_degree.items())),
            kernel_ok=not failures,
            confluent=not issues,
            failures=failures + [str(x) for x in issues],
        )


def nichols_dim_by_relations(pres):
    """Dimension of B(V) from a certified presentation; None when the
    certificate fails."""
    cert = pres.certify()
    return cert.total if cert.valid else None


def words_of_degree(alphabet, degrees, n):
    deg = {alphabet.char(name): d for name, d in degrees.items()}
    out = []
    level = [("", 0)]
    while level:
        nxt = []
        for word, total in level:
            for ch, d in deg.items():
                if total + d == n:
                    out.append(word + ch)
                elif total + d < n:
                    nxt.append((word + ch, total + d))
        level = nxt
    return out


def derive_presentation_rule(space, system, degrees, expand, lhs_text):
    """Find the rewrite of `lhs` forced by the symmetrizer kernel.

    Solves S(lhs) as a combination of S(u) over the irreducible words u
    of the same tensor degree that precede lhs in the monomial order;
    the difference is then a valid new rule with lhs as leading word.
    """
    alpha = system.alphabet
    lhs = alpha.parse_word(lhs_text)
    deg = {alpha.char(name): d for name, d in degrees.items()}
    expand_ch = {alpha.char(name): tuple(w) for name, w in expand.items()}

    def to_tensor(word):
        flat = ()
        for ch in word:
            flat += expand_ch[ch]
        return {flat: ONE}

    n = sum(deg[ch] for ch in lhs)
    key = alpha.word_key(lhs)
    cands = [w for w in words_of_degree(alpha, degrees, n)
             if w != lhs and system.is_irreducible(w)
             and alpha.word_key(w) < key]
    cands.sort(key=alpha.word_key)
    target = symmetrize(space, to_tensor(lhs))
    columns = [symmetrize(space, to_tensor(w)) for w in cands]
    support = sorted(set(target) | {w for col in columns for w in col})
    from .linalg import solve
    rows = [[col.get(w, Scalar()) for col in columns] for w in support]
    rhs = [target.get(w, Scalar()) for w in support]
    sol = solve(rows, rhs) if support else [Scalar()] * len(cands)
    if sol is None:
        raise ValueError(
            f"{alpha.format_word(lhs)} is independent in the symmetrizer "
            "image; no rule exists at this leading word")
    terms = {w: c for w, c in zip(cands, sol) if c}
    return NCPolynomial(terms)


# ---------------------------------------------------------------------------
# catalogued presentations


def _poly(alpha, terms):
    out = {}
    for coeff, text in terms:
        if coeff:
            acc = out
            w = alpha.parse_word(text)
            acc[w] = acc.get(w, Scalar()) + coeff
    return NCPolynomial(out)


def _pair_alphabet(first, second):
    return Alphabet((first, second), {first: 1, second: 1})


def _braided_pair_presentation(space, names, rules_text):
    alpha = _pair_alphabet(*names)
    rules = {alpha.parse_word(lhs): _poly(alpha, terms)
             for lhs, terms in rules_text}
    system = RewritingSystem(alpha, rules)
    degrees = {names[0]: 1, names[1]: 1}
    expand = {names[0]: (1,), names[1]: (0,)}
    return NicholsPresentation(space, system, degrees, expand)


def _big_class_presentation(space, gens, rules_fn, derive_square=False):
    """Rank-two presentation with the composite letter G = second first."""
    low, high = gens
    alpha = Alphabet((low, "G", high), {low: 1, "G": 3, high: 2})
    degrees = {low: 1, "G": 2, high: 1}
    expand = {low: (0,), "G": (1, 0), high: (1,)}
    rules = {alpha.parse_word(lhs): _poly(alpha, terms)
             for lhs, terms in rules_fn(alpha)}
    system = RewritingSystem(alpha, rules)
    if derive_square:
        rhs = derive_presentation_rule(
            space, system, degrees, expand, "G G")
        system = system.with_rule(alpha.parse_word("G G"), rhs)
    return NicholsPresentation(space, system, degrees, expand)


def presentation_h(i, j, k, iota):
    """Certified presentation of B(V) for a two-dimensional module in one
    of the six finite families on the H side."""
    labels = classify_param("H", (i, j, k, iota))
    case = next((lab[1] for lab in labels if lab in
                 ("Λ1", "Λ2", "Λ3", "Λ4", "Λ5", "Λ6")), None)
    if case is None:
        raise ValueError(f"no finite presentation at {(i, j, k, iota)}")
    space = BraidedSpace.from_module(h_two_dim(i, j, k, iota))
    si, sk = sign(iota), sign(k)

    if case == "1":
        g1 = si * (ONE - xi_pow(2 * j)) * xi_pow(4) / (ONE + xi_pow(5))
        g2 = (ONE - xi_pow(4 * j)) * xi_pow(4) / (ONE + xi_pow(5))

        def rules(alpha):
            return [
                ("v2 v1", [(ONE, "G")]),
                ("G v1", [(-xi_pow(2 * j), "v1 v1 v2"),
                          (-si * xi_pow(-2 * j), "v1 G")]),
                ("v2 G", [(-ONE, "v1 v2 v2"), (-si, "G v2")]),
                ("v2 v2 v2", [(-g1, "v1 v1 v2"), (-g2, "v1 G")]),
                ("v1 v1 v1", []),
                ("G G", [(si, "v1 v1 v2 v2")]),
            ]
        return _big_class_presentation(space, ("v1", "v2"), rules)

    if case == "2":
        beta = si * xi_pow(2 * j) + sk * xi_pow(j)

        def rules(alpha):
            return [
                ("v2 v1", [(ONE, "G")]),
                ("v1 v1 v1", []),
                ("G v1", [(-xi_pow(2 * j), "v1 v1 v2"),
                          (-sk * xi_pow(j), "v1 G")]),
                ("v2 G", [(-beta, "G v2"), (ONE, "v1 v2 v2")]),
                ("v2 v2 v2 v2 v2 v2", []),
                ("G G", [(-beta, "v1 v1 v2 v2"),
                         (Scalar(-2), "v1 G v2")]),
            ]
        return _big_class_presentation(space, ("v1", "v2"), rules)

    if case == "3":
        alpha_c = sign(k + iota) * xi_pow(-j)
        beta = si + sk * xi_pow(-j)
        g1 = si * xi_pow(1 - 2 * j) / (ONE + xi_pow(5))
        g2 = sign(k + iota) * xi_pow(1 - j) / (ONE + xi_pow(5))

        def rules(alpha):
            return [
                ("v2 v1", [(ONE, "G")]),
                ("v1 v1 v1 v1 v1 v1", []),
                ("G v1", [(-alpha_c, "v1 v1 v2"), (-beta, "v1 G")]),
                ("v2 G", [(si * (xi_pow(1) + xi_pow(2)) / 3, "v1 v1 v1"),
                          (-ONE, "v1 v2 v2"), (-si, "G v2")]),
                ("v2 v2 v2", [(-g1, "v1 v1 v2"), (-g2, "v1 G")]),
            ]
        return _big_class_presentation(
            space, ("v1", "v2"), rules, derive_square=True)

    if case == "4":
        return _braided_pair_presentation(space, ("v2", "v1"), [
            ("v1 v2", [(-si, "v2 v1")]),
            ("v1 v1", []),
            ("v2 v2", []),
        ])

    if case == "5":
        order = order_of_root_of_unity(sign(k + iota - 1) * xi_pow(-j))
        return _braided_pair_presentation(space, ("v2", "v1"), [
            ("v1 v2", [(-sk * xi_pow(5 * j), "v2 v1")]),
            ("v1 v1", []),
            ("v2 " * order, []),
        ])

    order = order_of_root_of_unity(sign(iota + 1 + k) * xi_pow(j))
    return _braided_pair_presentation(space, ("v2", "v1"), [
        ("v1 v2", [(-si, "v2 v1")]),
        ("v2 v2", [(-si * xi_pow(2 + 4 * i) / (ONE - xi_pow(2)),
                    "v1 v1")]),
        ("v1 " * order, []),
    ])


def presentation_k(i, j, k, iota):
    """Certified presentation of B(W) for a two-dimensional module in one
    of the six finite families on the K side."""
    labels = classify_param("K", (i, j, k, iota))
    case = next((lab[1] for lab in labels if lab in
                 ("Θ1", "Θ2", "Θ3", "Θ4", "Θ5", "Θ6")), None)
    if case is None:
        raise ValueError(f"no finite presentation at {(i, j, k, iota)}")
    space = BraidedSpace.from_module(k_two_dim(i, j, k, iota))
    skl = sign(k * iota)

    if case == "1":
        def rules(alpha):
            return [
                ("e2 e1", [(ONE, "G")]),
                ("G e1", [(-xi_pow(j), "e1 G"),
                          (-xi_pow(2 * j), "e1 e1 e2")]),
                ("e2 G", [(-ONE, "e1 e2 e2"), (-sign(j), "G e2")]),
                ("e2 e2 e2", [(-sign(j), "e1 e1 e2"),
                              (-sign(j), "G e1"), (-ONE, "e1 G")]),
                ("e1 e1 e1", []),
                ("G G", [(sign(j), "e1 e1 e2 e2")]),
            ]
        return _big_class_presentation(space, ("e1", "e2"), rules)

    if case == "2":
        def rules(alpha):
            return [
                ("e2 e1", [(ONE, "G")]),
                ("G e1", [(-skl * xi_pow(-j), "e1 e1 e2"),
                          (-(xi_pow(-j) + skl), "e1 G")]),
                ("e2 G", [(-skl, "e1 e1 e1"), (-skl, "G e2"),
                          (-ONE, "e1 e2 e2")]),
                ("e2 e2 e2", [(-skl, "e1 e1 e2"), (-ONE, "e1 G"),
                              (-skl, "G e1")]),
                ("e1 e1 e1 e1 e1 e1", []),
            ]
        return _big_class_presentation(
            space, ("e1", "e2"), rules, derive_square=True)

    if case == "3":
        def rules(alpha):
            return [
                ("e2 e1", [(ONE, "G")]),
                ("G e1", [(-xi_pow(j), "e1 G"),
                          (-xi_pow(2 * j), "e1 e1 e2")]),
                ("e2 G", [(-(xi_pow(j) - skl * xi_pow(2 * j)), "G e2"),
                          (ONE, "e1 e2 e2")]),
                ("e2 e2 e2 e2 e2 e2", []),
                ("e1 e1 e1", []),
            ]
        return _big_class_presentation(
            space, ("e1", "e2"), rules, derive_square=True)

    if case == "4":
        return _braided_pair_presentation(space, ("e2", "e1"), [
            ("e1 e2", [(-sign(j), "e2 e1")]),
            ("e1 e1", []),
            ("e2 e2", []),
        ])

    if case == "5":
        order = order_of_root_of_unity(sign(i) * xi_pow(-j))
        return _braided_pair_presentation(space, ("e2", "e1"), [
            ("e1 e2", [(-xi_pow(-j), "e2 e1")]),
            ("e1 e1", []),
            ("e2 " * order, []),
        ])

    order = order_of_root_of_unity(sign(i) * xi_pow(j))
    return _braided_pair_presentation(space, ("e2", "e1"), [
        ("e1 e2", [(sign(i), "e2 e1")]),
        ("e2 e2", [(-xi_pow(i - 1), "e1 e1")]),
        ("e1 " * order, []),
    ])


def character_presentation(side, i, j, k):
    """Presentation of the rank-one Nichols algebra of a character whose
    braiding scalar is -1; dimension two."""
    if side == "H":
        q = h_one_dim_braiding_scalar(i, j, k)
        mod = h_one_dim(i, j, k)
    else:
        q = k_one_dim_braiding_scalar(i, j, k)
        mod = k_one_dim(i, j, k)
    if q != -ONE:
        raise ValueError(f"character {(i, j, k)} has infinite Nichols rank")
    space = BraidedSpace.from_module(mod)
    alpha = Alphabet(("v",), {"v": 1})
    system = RewritingSystem(
        alpha, {alpha.parse_word("v v"): NCPolynomial.zero()})
    return NicholsPresentation(space, system, {"v": 1}, {"v": (0,)})


def presentation_for(side, params):
    if len(params) == 3:
        return character_presentation(side, *params)
    if side == "H":
        return presentation_h(*params)
    if side == "K":
        return presentation_k(*params)
    raise ValueError(f"unknown algebra side {side!r}")
