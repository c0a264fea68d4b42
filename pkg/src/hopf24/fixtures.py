"""The two 24-dimensional Hopf algebra families and their relatives.

Each algebra is given by a confluent rewriting presentation together with
coproduct, counit and antipode values on generators.  `PresentedHopf`
extends those values to all basis words (the coproduct by folding inside
the tensor square, the antipode as an anti-homomorphism) and carries a
tiered verifier: confluence certifies associativity and the basis, rule
compatibility certifies that the coproduct and counit are multiplicative,
and coassociativity, counit and antipode identities are checked on every
basis element.  Algebras of dimension at most 64 also materialize to dense
structure-constant form for the exhaustive checks in `hopf`.

Available fixtures:

    H         24-dimensional, generators a, b, c, d
    K         24-dimensional, generators a, b, c
    A         24-dimensional group-cross-polynomial form, isomorphic to
              the dual of H
    A_prime   24-dimensional, isomorphic to the dual of K
    A1        12-dimensional subalgebra of A_prime generated by g, x
    C         12-dimensional subalgebra of K generated by a, b
    grA       associated graded algebra of A (x becomes nilpotent)
    grA_prime associated graded algebra of A_prime
    D         576-dimensional Drinfeld double of H with the opposite
              coproduct, by presentation

Parameterized families, selected as fixture(name, params, mu):

    C, params (i,j,k,iota), mu
              432-dimensional one-parameter deformation of the
              bosonization of the rank-two braided vector space attached
              to those parameters over H; mu = 0 is the bosonization
    B, params, mu
              the analogous family over K
"""

from __future__ import annotations

from .field import ONE, Scalar, THETA, XI, ZERO, xi_pow
from .hopf import DoubleContext, HopfAlgebraData, cop, dual, mult_vec
from .rewrite import (Alphabet, NCPolynomial, RewritingSystem,
                      derive_rule_from_zero)

_XI4 = xi_pow(4)
_XI5 = xi_pow(5)


class PresentedHopf:
    """Hopf algebra presented by a confluent rewriting system."""

    def __init__(self, name, system, delta_gen, counit_gen, antipode_gen,
                 expected_dim=None):
        self.name = name
        self.system = system
        self.alphabet = system.alphabet
        self.delta_gen = delta_gen
        self.counit_gen = counit_gen
        self.antipode_gen = antipode_gen
        self.basis = system.irreducible_monomials()
        if expected_dim is not None and len(self.basis) != expected_dim:
            raise ValueError("%s: found %d basis words, expected %d"
                             % (name, len(self.basis), expected_dim))
        self.word_index = {w: i for i, w in enumerate(self.basis)}
        self._delta_memo = {"": {("", ""): ONE}}
        self._antipode_memo = {"": NCPolynomial.one()}

    @property
    def dim(self):
        return len(self.basis)

    # -- structure maps on words ------------------------------------------

    def tensor_mult(self, u, v):
        out = {}
        for (a1, b1), c1 in u.items():
            for (a2, b2), c2 in v.items():
                coeff = c1 * c2
                left = self.system.mult(a1, a2)
                right = self.system.mult(b1, b2)
                for wl, cl in left.terms.items():
                    for wr, cr in right.terms.items():
                        key = (wl, wr)
                        s = out.get(key, ZERO) + coeff * cl * cr
                        if s:
                            out[key] = s
                        elif key in out:
                            del out[key]
        return out

    def delta_word(self, word):
        got = self._delta_memo.get(word)
        if got is not None:
            return got
        out = self.tensor_mult(self.delta_word(word[:-1]), self.delta_gen[word[-1]])
        self._delta_memo[word] = out
        return out

    def delta_poly(self, poly):
        out = {}
        for word, c in poly.terms.items():
            for key, c2 in self.delta_word(word).items():
                s = out.get(key, ZERO) + c * c2
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return out

    def counit_word(self, word):
        total = ONE
        for ch in word:
            total = total * self.counit_gen[ch]
            if not total:
                return ZERO
        return total

    def counit_poly(self, poly):
        total = ZERO
        for word, c in poly.terms.items():
            total = total + c * self.counit_word(word)
        return total

    def antipode_word(self, word):
        got = self._antipode_memo.get(word)
        if got is not None:
            return got
        out = self.system.poly_mult(self.antipode_gen[word[-1]],
                                    self.antipode_word(word[:-1]))
        self._antipode_memo[word] = out
        return out

    # -- dense form and verification ---------------------------------------

    def to_hopf_data(self, force=False):
        if self.dim > 64 and not force:
            raise ValueError("%s: %d-dimensional, too large to materialize"
                             % (self.name, self.dim))
        labels = [self.alphabet.format_word(w) for w in self.basis]
        mult = {}
        for i, wi in enumerate(self.basis):
            for j, wj in enumerate(self.basis):
                prod = self.system.mult(wi, wj)
                entry = {self.word_index[w]: c for w, c in prod.terms.items()}
                if entry:
                    mult[(i, j)] = entry
        unit = {self.word_index[""]: ONE}
        comult = []
        for w in self.basis:
            row = [(c, self.word_index[w1], self.word_index[w2])
                   for (w1, w2), c in self.delta_word(w).items()]
            row.sort(key=lambda t: (t[1], t[2]))
            comult.append(row)
        counit = [self.counit_word(w) for w in self.basis]
        antipode = []
        for w in self.basis:
            img = self.antipode_word(w)
            antipode.append({self.word_index[u]: c for u, c in img.terms.items()})
        return HopfAlgebraData(labels, mult, unit, comult, counit, antipode)

    def verify(self):
        """Tiered exact verification; returns a list of failure strings.

        Empty overlap diagnostics certify associativity and the monomial
        basis; coproduct/counit compatibility with every rewrite rule
        certifies multiplicativity; coassociativity, the counit axiom and
        both antipode convolution identities are checked on each basis word.
        """
        failures = []
        for word, diff in self.system.overlap_check():
            failures.append("%s: unresolved overlap at %s: %s"
                            % (self.name, self.alphabet.format_word(word),
                               self.system.format_poly(diff)))
        if failures:
            return failures

        for lhs, rhs in self.system.rules.items():
            left = {("", ""): ONE}
            for ch in lhs:
                left = self.tensor_mult(left, self.delta_gen[ch])
            right = self.delta_poly(rhs)
            if left != right:
                failures.append("%s: coproduct breaks on rule %s" %
                                (self.name, self.alphabet.format_word(lhs)))
            if self.counit_word(lhs) != self.counit_poly(rhs):
                failures.append("%s: counit breaks on rule %s" %
                                (self.name, self.alphabet.format_word(lhs)))

        for w in self.basis:
            dw = self.delta_word(w)
            lhs = {}
            rhs = {}
            for (u, v), c in dw.items():
                for (u1, u2), c2 in self.delta_word(u).items():
                    key = (u1, u2, v)
                    s = lhs.get(key, ZERO) + c * c2
                    if s:
                        lhs[key] = s
                    elif key in lhs:
                        del lhs[key]
                for (v1, v2), c2 in self.delta_word(v).items():
                    key = (u, v1, v2)
                    s = rhs.get(key, ZERO) + c * c2
                    if s:
                        rhs[key] = s
                    elif key in rhs:
                        del rhs[key]
            if lhs != rhs:
                failures.append("%s: coassociativity fails at %s"
                                % (self.name, self.alphabet.format_word(w)))
            left_counit = NCPolynomial.zero()
            right_counit = NCPolynomial.zero()
            for (u, v), c in dw.items():
                left_counit = left_counit + NCPolynomial({v: c * self.counit_word(u)})
                right_counit = right_counit + NCPolynomial({u: c * self.counit_word(v)})
            if left_counit != NCPolynomial.word(w) or right_counit != NCPolynomial.word(w):
                failures.append("%s: counit axiom fails at %s"
                                % (self.name, self.alphabet.format_word(w)))
            conv_left = NCPolynomial.zero()
            conv_right = NCPolynomial.zero()
            for (u, v), c in dw.items():
                conv_left = conv_left + c * self.system.poly_mult(
                    self.antipode_word(u), NCPolynomial.word(v))
                conv_right = conv_right + c * self.system.poly_mult(
                    NCPolynomial.word(u), self.antipode_word(v))
            want = NCPolynomial({"": self.counit_word(w)})
            if conv_left != want or conv_right != want:
                failures.append("%s: antipode identity fails at %s"
                                % (self.name, self.alphabet.format_word(w)))
        return failures


def _build(name, names, weights, rules, delta, counit, antipode, expected_dim):
    alpha = Alphabet(names, weights)

    def word(text):
        return alpha.parse_word(text)

    def poly(terms):
        out = NCPolynomial.zero()
        for c, text in terms:
            out = out + NCPolynomial({word(text): _scal(c)})
        return out

    compiled = {word(lhs): poly(rhs) for lhs, rhs in rules}
    system = RewritingSystem(alpha, compiled)
    delta_gen = {}
    for gen, terms in delta.items():
        tp = {}
        for c, left, right in terms:
            lred = system.reduce_word(word(left))
            rred = system.reduce_word(word(right))
            for wl, cl in lred.terms.items():
                for wr, cr in rred.terms.items():
                    key = (wl, wr)
                    s = tp.get(key, ZERO) + _scal(c) * cl * cr
                    if s:
                        tp[key] = s
                    elif key in tp:
                        del tp[key]
        delta_gen[alpha.char(gen)] = tp
    counit_gen = {alpha.char(g): _scal(c) for g, c in counit.items()}
    antipode_gen = {alpha.char(g): system.reduce(poly(terms))
                    for g, terms in antipode.items()}
    return PresentedHopf(name, system, delta_gen, counit_gen, antipode_gen,
                         expected_dim)


def _scal(c):
    return c if isinstance(c, Scalar) else Scalar(c)


def _fixture_h():
    rules = [
        ("a b", [(XI, "b a")]),
        ("a c", [(XI, "c a")]),
        ("a d", [(ONE, "d a")]),
        ("b b", []),
        ("c c", []),
        ("b c", []),
        ("c b", []),
        ("b d", [(ONE, "c a")]),
        ("c d", [(ONE, "b a")]),
        ("d b", [(-XI, "c a")]),
        ("d c", [(-XI, "b a")]),
        ("d d", [(ONE, "a a")]),
        ("a a a a a a", [(ONE, "1")]),
    ]
    delta = {
        "a": [(ONE, "a", "a"), (ONE, "b", "c")],
        "b": [(ONE, "a", "b"), (ONE, "b", "d")],
        "c": [(ONE, "c", "a"), (ONE, "d", "c")],
        "d": [(ONE, "d", "d"), (ONE, "c", "b")],
    }
    counit = {"a": ONE, "b": ZERO, "c": ZERO, "d": ONE}
    antipode = {
        "a": [(ONE, "a a a a a")],
        "b": [(-_XI5, "c a a a a")],
        "c": [(_XI5, "b a a a a")],
        "d": [(ONE, "d a a a a")],
    }
    return _build("H", ["d", "c", "b", "a"], {"d": 0, "c": 1, "b": 1, "a": 0},
                  rules, delta, counit, antipode, 24)


def _fixture_k():
    rules = [
        ("a b", [(_XI5, "b a")]),
        ("a c", [(ONE, "c a")]),
        ("b c", [(ONE, "c b")]),
        ("b b", []),
        ("c c", [(ONE, "1")]),
        ("a a a a a a", [(ONE, "1")]),
    ]
    delta = {
        "a": [(ONE, "a", "a"), (_XI4 + _XI5, "b", "b a a a")],
        "b": [(ONE, "b", "a a a a"), (ONE, "a", "b")],
        "c": [(ONE, "c", "c")],
    }
    counit = {"a": ONE, "b": ZERO, "c": ONE}
    antipode = {
        "a": [(ONE, "a a a a a")],
        "b": [(_XI4, "b a")],
        "c": [(ONE, "c")],
    }
    return _build("K", ["c", "b", "a"], {"c": 0, "b": 1, "a": 0},
                  rules, delta, counit, antipode, 24)


def _fixture_c():
    rules = [
        ("a b", [(_XI5, "b a")]),
        ("b b", []),
        ("a a a a a a", [(ONE, "1")]),
    ]
    delta = {
        "a": [(ONE, "a", "a"), (_XI4 + _XI5, "b", "b a a a")],
        "b": [(ONE, "b", "a a a a"), (ONE, "a", "b")],
    }
    counit = {"a": ONE, "b": ZERO}
    antipode = {
        "a": [(ONE, "a a a a a")],
        "b": [(_XI4, "b a")],
    }
    return _build("C", ["b", "a"], {"b": 1, "a": 0},
                  rules, delta, counit, antipode, 12)


def _group_cross_rules(x_square):
    return [
        ("g g g g g g", [(ONE, "1")]),
        ("h h", [(ONE, "1")]),
        ("h g", [(ONE, "g h")]),
        ("x g", [(ONE, "g x")]),
        ("x h", [(-ONE, "h x")]),
        ("x x", x_square),
    ]


def _fixture_a(graded=False):
    rules = _group_cross_rules([] if graded else [(ONE, "1"), (-ONE, "g g")])
    delta = {
        "g": [(ONE, "g", "g")],
        "h": [(ONE, "h", "h")],
        "x": [(ONE, "x", "1"), (ONE, "g h", "x")],
    }
    counit = {"g": ONE, "h": ONE, "x": ZERO}
    antipode = {
        "g": [(ONE, "g g g g g")],
        "h": [(ONE, "h")],
        "x": [(-ONE, "g g g g g h x")],
    }
    return _build("grA" if graded else "A", ["g", "h", "x"],
                  {"g": 0, "h": 0, "x": 1}, rules, delta, counit, antipode, 24)


def _fixture_a_prime(graded=False):
    rules = [
        ("g g g g g g", [(ONE, "1")]),
        ("h h", [(ONE, "1")]),
        ("h g", [(ONE, "g h")]),
        ("x g", [(-ONE, "g x")]),
        ("x h", [(ONE, "h x")]),
        ("x x", [] if graded else [(ONE, "1"), (-ONE, "g g")]),
    ]
    delta = {
        "g": [(ONE, "g", "g")],
        "h": [(ONE, "h", "h")],
        "x": [(ONE, "x", "1"), (ONE, "g", "x")],
    }
    counit = {"g": ONE, "h": ONE, "x": ZERO}
    antipode = {
        "g": [(ONE, "g g g g g")],
        "h": [(ONE, "h")],
        "x": [(-ONE, "g g g g g x")],
    }
    return _build("grA_prime" if graded else "A_prime", ["g", "h", "x"],
                  {"g": 0, "h": 0, "x": 1}, rules, delta, counit, antipode, 24)


def _fixture_a1():
    rules = [
        ("g g g g g g", [(ONE, "1")]),
        ("x g", [(-ONE, "g x")]),
        ("x x", [(ONE, "1"), (-ONE, "g g")]),
    ]
    delta = {
        "g": [(ONE, "g", "g")],
        "x": [(ONE, "x", "1"), (ONE, "g", "x")],
    }
    counit = {"g": ONE, "x": ZERO}
    antipode = {
        "g": [(ONE, "g g g g g")],
        "x": [(-ONE, "g g g g g x")],
    }
    return _build("A1", ["g", "x"], {"g": 0, "x": 1},
                  rules, delta, counit, antipode, 12)


def _fixture_double():
    theta_xi5 = THETA * _XI5
    rules = [
        # relations of H
        ("a b", [(XI, "b a")]),
        ("a c", [(XI, "c a")]),
        ("a d", [(ONE, "d a")]),
        ("b b", []),
        ("c c", []),
        ("b c", []),
        ("c b", []),
        ("b d", [(ONE, "c a")]),
        ("c d", [(ONE, "b a")]),
        ("d b", [(-XI, "c a")]),
        ("d c", [(-XI, "b a")]),
        ("d d", [(ONE, "a a")]),
        ("a a a a a a", [(ONE, "1")]),
        # relations of the dual copy
        ("g g g g g g", [(ONE, "1")]),
        ("h h", [(ONE, "1")]),
        ("h g", [(ONE, "g h")]),
        ("x g", [(ONE, "g x")]),
        ("x h", [(-ONE, "h x")]),
        ("x x", [(ONE, "1"), (-ONE, "g g")]),
        # the two copies commute up to signs on the grouplikes
        ("a g", [(ONE, "g a")]),
        ("a h", [(ONE, "h a")]),
        ("b g", [(ONE, "g b")]),
        ("b h", [(-ONE, "h b")]),
        ("c g", [(ONE, "g c")]),
        ("c h", [(-ONE, "h c")]),
        ("d g", [(ONE, "g d")]),
        ("d h", [(ONE, "h d")]),
        # straightening x past the matrix generators
        ("a x", [(_XI5, "x a"), (-theta_xi5, "c"), (theta_xi5, "g h b")]),
        ("b x", [(_XI5, "x b"), (-theta_xi5, "d"), (theta_xi5, "g h a")]),
        ("c x", [(-_XI5, "x c"), (-theta_xi5, "g h d"), (theta_xi5, "a")]),
        ("d x", [(-_XI5, "x d"), (-theta_xi5, "g h c"), (theta_xi5, "b")]),
    ]
    delta = {
        # opposite coproduct on the algebra copy
        "a": [(ONE, "a", "a"), (ONE, "c", "b")],
        "b": [(ONE, "b", "a"), (ONE, "d", "b")],
        "c": [(ONE, "a", "c"), (ONE, "c", "d")],
        "d": [(ONE, "d", "d"), (ONE, "b", "c")],
        # opposite coproduct on the dual copy
        "g": [(ONE, "g", "g")],
        "h": [(ONE, "h", "h")],
        "x": [(ONE, "1", "x"), (ONE, "x", "g h")],
    }
    counit = {"a": ONE, "b": ZERO, "c": ZERO, "d": ONE,
              "g": ONE, "h": ONE, "x": ZERO}
    antipode = {
        "a": [(ONE, "a a a a a")],
        "b": [(_XI5, "c a a a a")],
        "c": [(-_XI5, "b a a a a")],
        "d": [(ONE, "d a a a a")],
        "g": [(ONE, "g g g g g")],
        "h": [(ONE, "h")],
        "x": [(ONE, "g g g g g h x")],
    }
    return _build("D", ["g", "h", "x", "d", "c", "b", "a"],
                  {"g": 0, "h": 0, "x": 2, "d": 0, "c": 1, "b": 1, "a": 0},
                  rules, delta, counit, antipode, 576)


# ---------------------------------------------------------------------------
# one-parameter deformations of the bosonizations over H and K
#
# Each deformed algebra is 432-dimensional: a rank-two braided sector with a
# composite letter for the product of the two braided generators, over the
# full 24-dimensional host.  The cubic relations acquire scalar tails in mu;
# at mu = 0 the algebra is the plain bosonization.  All coefficients live in
# Q(xi), so the deformations are theta-free.


LIFTING_PARAMS = {
    "C": ((2, 2, 0, 0), (2, 4, 0, 0), (2, 1, 1, 0), (2, 5, 1, 0)),
    "B": ((1, 2, 0, 0), (1, 4, 0, 0), (1, 2, 0, 1), (1, 4, 0, 1)),
}


def _translate_poly(poly, src, dst):
    """Re-letter a polynomial between alphabets sharing letter names."""
    out = {}
    for w, c in poly.terms.items():
        nw = dst.parse_word(src.format_word(w))
        out[nw] = out.get(nw, ZERO) + c
    return NCPolynomial(out)


def _square_mult(system, s1, s2):
    """Multiply two tensor-square elements legwise, reducing both legs."""
    out = {}
    for (a1, b1), c1 in s1.items():
        for (a2, b2), c2 in s2.items():
            scale = c1 * c2
            left = system.mult(a1, a2)
            for wl, cl in left.terms.items():
                right = system.mult(b1, b2)
                for wr, cr in right.terms.items():
                    key = (wl, wr)
                    s = out.get(key, ZERO) + scale * cl * cr
                    if s:
                        out[key] = s
                    elif key in out:
                        del out[key]
    return out


def _a_word(n, prefix=""):
    """Normal word c-prefix + a^n (exponent mod 6) as rule text."""
    n %= 6
    text = " ".join([prefix] * bool(prefix) + ["a"] * n)
    return text if text else "1"


def _lifting_core(host, vnames, vweights, cross, vrules, cubic_fn,
                  square_lhs, square_seed_fn):
    """Shared assembly for the deformed bosonizations.

    Stages: host rules re-lettered into the combined alphabet, literal
    straightening rules for host letters past the braided generators, the
    braided-sector rules, then the two cubic rules pre-reduced through the
    partial system, mechanically derived straightening rules for the
    composite letter, and finally the composite-square rule solved from an
    associativity overlap.
    """
    halpha = host.system.alphabet
    names = list(vnames) + list(halpha.names)
    weights = dict(vweights)
    weights.update({n: 0 for n in halpha.names})
    alpha = Alphabet(names, weights)
    word = alpha.parse_word

    def poly(terms):
        out = NCPolynomial.zero()
        for c, text in terms:
            out = out + NCPolynomial({word(text): _scal(c)})
        return out

    rules = {word(halpha.format_word(lhs)): _translate_poly(rhs, halpha, alpha)
             for lhs, rhs in host.system.rules.items()}
    for lhs, rhs in cross + vrules:
        rules[word(lhs)] = poly(rhs)
    stage = RewritingSystem(alpha, dict(rules))
    composite = vnames[1]
    low, high = vnames[2], vnames[0]
    for f in halpha.names:
        lhs = "%s %s" % (f, composite)
        rules[word(lhs)] = stage.reduce_word(word("%s %s %s" % (f, low, high)))
    for lhs, rhs_terms in cubic_fn():
        rules[word(lhs)] = stage.reduce(poly(rhs_terms))
    partial = RewritingSystem(alpha, dict(rules))
    seed = square_seed_fn(partial, poly)
    square_rhs = derive_rule_from_zero(partial, seed, word(square_lhs))
    system = partial.with_rule(word(square_lhs), square_rhs)
    return alpha, system, poly


def _lifting_hopf(name, host, alpha, system, poly, coact):
    """Coproduct, counit and antipode assembly on top of `_lifting_core`.

    `coact` maps each braided generator name to its coaction terms
    (coefficient, host word text, target generator name); the coproduct of a
    generator v is v (x) 1 plus those terms, the composite letter gets the
    legwise product, and antipodes come from the convolution identity
    S(v) = -sum S(w) v_n over the coaction terms.
    """
    halpha = host.system.alphabet
    word = alpha.parse_word
    delta_gen = {}
    counit_gen = {}
    antipode_gen = {}
    for hname in halpha.names:
        hch = halpha.char(hname)
        ch = alpha.char(hname)
        delta_gen[ch] = {
            (word(halpha.format_word(l)), word(halpha.format_word(r))): c
            for (l, r), c in host.delta_gen[hch].items()}
        counit_gen[ch] = host.counit_gen[hch]
        antipode_gen[ch] = _translate_poly(host.antipode_gen[hch],
                                           halpha, alpha)
    for vname, terms in coact.items():
        tp = {(word(vname), ""): ONE}
        acc = NCPolynomial.zero()
        for c, gtext, target in terms:
            c = _scal(c)
            key = (word(gtext), word(target))
            tp[key] = tp.get(key, ZERO) + c
            sg = host.antipode_word(halpha.parse_word(gtext))
            sg = _translate_poly(sg, halpha, alpha).scale(c)
            acc = acc - system.poly_mult(sg, poly([(ONE, target)]))
        ch = alpha.char(vname)
        delta_gen[ch] = tp
        counit_gen[ch] = ZERO
        antipode_gen[ch] = system.reduce(acc)
    lname, hname2 = sorted(coact)
    cname = next(n for n in alpha.names
                 if n not in coact and n not in halpha.names)
    low, high = alpha.char(lname), alpha.char(hname2)
    ch = alpha.char(cname)
    delta_gen[ch] = _square_mult(system, delta_gen[low], delta_gen[high])
    counit_gen[ch] = ZERO
    antipode_gen[ch] = system.reduce(system.poly_mult(
        antipode_gen[high], antipode_gen[low]))
    return PresentedHopf(name, system, delta_gen, counit_gen, antipode_gen,
                         432)


def _lifting_c(i, j, k, iota, mu):
    host = fixture("H")
    cross = [
        ("a v1", [(_XI5, "v1 a")]),
        ("a v2", [(_XI4, "v2 a"), (ONE, "v1 c")]),
        ("b v1", [(_XI5, "v1 b")]),
        ("b v2", [(_XI4, "v2 b"), (ONE, "v1 d")]),
        ("c v1", [(xi_pow(2), "v1 c")]),
        ("c v2", [(_XI4, "v2 c"), (ONE, "v1 a")]),
        ("d v1", [(xi_pow(2), "v1 d")]),
        ("d v2", [(_XI4, "v2 d"), (ONE, "v1 b")]),
    ]
    vrules = [
        ("v1 v2", [(ONE, "v12")]),
        ("v1 v1 v1", []),
        ("v1 v12", [(-xi_pow(-4 * j), "v12 v1"),
                    (-xi_pow(-2 * j), "v2 v1 v1")]),
    ]
    gamma1 = (ONE - xi_pow(2 * j)) * _XI4 * (ONE + _XI5).inv()
    gamma2 = (ONE - xi_pow(4 * j)) * _XI4 * (ONE + _XI5).inv()
    group_word = _a_word(-1, "d") if k == 0 else _a_word(3)
    tail_word = _a_word(-1, "b") if k == 0 else _a_word(2, "c")

    def cubic():
        return [
            ("v2 v2 v2", [(-gamma1, "v1 v12"), (-gamma2, "v12 v1"),
                          (mu, "1"), (-mu, group_word)]),
            ("v12 v2", [(-ONE, "v2 v12"), (-ONE, "v2 v2 v1"),
                        (_scal(-2) * mu * _XI4, tail_word)]),
        ]

    def square_seed(partial, poly):
        x_rhs = partial.rules[partial.alphabet.parse_word("v1 v12")]
        z_rhs = partial.rules[partial.alphabet.parse_word("v12 v2")]
        return (partial.poly_mult(x_rhs, poly([(ONE, "v2")]))
                - partial.poly_mult(poly([(ONE, "v1")]), z_rhs))

    alpha, system, poly = _lifting_core(
        host, ("v2", "v12", "v1"), {"v2": 2, "v12": 3, "v1": 1},
        cross, vrules, cubic, "v12 v12", square_seed)
    if k == 0:
        coact = {
            "v1": [(ONE, _a_word(j), "v1"),
                   (-XI * (ONE + xi_pow(j)), _a_word(j - 1, "b"), "v2")],
            "v2": [(ONE, _a_word(j - 1, "d"), "v2"),
                   (-(ONE - xi_pow(2)).inv() * _XI5 * (ONE - xi_pow(j)),
                    _a_word(j - 1, "c"), "v1")],
        }
    else:
        coact = {
            "v1": [(ONE, _a_word(j - 1, "d"), "v1"),
                   (-XI * (ONE - xi_pow(j)), _a_word(j - 1, "c"), "v2")],
            "v2": [(ONE, _a_word(j), "v2"),
                   (-(ONE - xi_pow(2)).inv() * _XI5 * (ONE + xi_pow(j)),
                    _a_word(j - 1, "b"), "v1")],
        }
    name = "C(%d,%d,%d,%d;mu=%s)" % (i, j, k, iota, mu)
    return _lifting_hopf(name, host, alpha, system, poly, coact)


def _lifting_b(i, j, k, iota, mu):
    host = fixture("K")
    cross = [
        ("a e1", [(XI, "e1 a")]),
        ("a e2", [(xi_pow(2), "e2 a"), (_XI4 + _XI5, "e1 b a a a")]),
        ("b e1", [(XI, "e1 b")]),
        ("b e2", [(xi_pow(2), "e2 b"), (ONE, "e1 a a a a")]),
        ("c e1", [(ONE, "e1 c")]),
        ("c e2", [(ONE, "e2 c")]),
    ]
    vrules = [
        ("e1 e2", [(ONE, "e12")]),
        ("e1 e1 e1", []),
        ("e1 e12", [(-xi_pow(-2 * j), "e2 e1 e1"),
                    (-xi_pow(-j), "e12 e1")]),
    ]
    prefix = "c" if iota else ""
    group_word = _a_word(3, prefix)
    tail = ("c b" if iota else "b") + " a a a a a"

    def cubic():
        return [
            ("e2 e2 e2", [(-ONE, "e1 e12"), (-ONE, "e2 e1 e1"),
                          (-ONE, "e12 e1"), (mu, "1"), (-mu, group_word)]),
            ("e12 e2", [(-ONE, "e2 e2 e1"), (-ONE, "e2 e12"),
                        (_scal(-2) * xi_pow(2) * mu, tail)]),
        ]

    def square_seed(partial, poly):
        x_rhs = partial.rules[partial.alphabet.parse_word("e1 e12")]
        z_rhs = partial.rules[partial.alphabet.parse_word("e12 e2")]
        return (partial.poly_mult(x_rhs, poly([(ONE, "e2")]))
                - partial.poly_mult(poly([(ONE, "e1")]), z_rhs))

    alpha, system, poly = _lifting_core(
        host, ("e2", "e12", "e1"), {"e2": 2, "e12": 3, "e1": 1},
        cross, vrules, cubic, "e12 e12", square_seed)
    coact = {
        "e1": [(ONE, _a_word(-j, prefix), "e1"),
               (_XI4 * (xi_pow(4 * i) - xi_pow(i + j)),
                _a_word(-1 - j, prefix + " b" if prefix else "b"), "e2")],
        "e2": [(ONE, _a_word(3 - j, prefix), "e2"),
               (xi_pow(2 * i) + xi_pow(j - i),
                _a_word(2 - j, prefix + " b" if prefix else "b"), "e1")],
    }
    name = "B(%d,%d,%d,%d;mu=%s)" % (i, j, k, iota, mu)
    return _lifting_hopf(name, host, alpha, system, poly, coact)


_BUILDERS = {
    "H": _fixture_h,
    "K": _fixture_k,
    "C": _fixture_c,
    "A": lambda: _fixture_a(False),
    "grA": lambda: _fixture_a(True),
    "A_prime": lambda: _fixture_a_prime(False),
    "grA_prime": lambda: _fixture_a_prime(True),
    "A1": _fixture_a1,
    "D": _fixture_double,
}

FIXTURE_NAMES = sorted(_BUILDERS)

_presented_cache = {}
_dense_cache = {}


def fixture(name, params=None, mu=0):
    """Presented fixture by name; see the module docstring for the list.

    With `params` (and optional `mu`), `name` selects a deformation family:
    fixture("C", (2,4,0,0), mu=1) is the 432-dimensional deformed
    bosonization over H at those parameters, and likewise "B" over K.
    """
    if params is not None:
        if name not in LIFTING_PARAMS:
            raise ValueError("no parameterized family %r; families: %s"
                             % (name, ", ".join(sorted(LIFTING_PARAMS))))
        params = tuple(params)
        if params not in LIFTING_PARAMS[name]:
            raise ValueError(
                "parameters %r are not liftable for %r; legal sets: %s"
                % (params, name,
                   ", ".join(str(p) for p in LIFTING_PARAMS[name])))
        key = (name, params, str(_scal(mu)))
        if key not in _presented_cache:
            build = _lifting_c if name == "C" else _lifting_b
            _presented_cache[key] = build(*params, _scal(mu))
        return _presented_cache[key]
    if name not in _BUILDERS:
        raise KeyError("unknown fixture %r; available: %s"
                       % (name, ", ".join(FIXTURE_NAMES)))
    if name not in _presented_cache:
        _presented_cache[name] = _BUILDERS[name]()
    return _presented_cache[name]


def dense(name):
    """Dense structure-constant form; `H_dual` and `C_dual` are also known."""
    if name not in _dense_cache:
        if name.endswith("_dual"):
            _dense_cache[name] = dual(dense(name[:-5]))
        else:
            _dense_cache[name] = fixture(name).to_hopf_data()
    return _dense_cache[name]


# ---------------------------------------------------------------------------
# distinguished elements and isomorphisms


def _word_index(name, text):
    fx = fixture(name)
    return fx.word_index[fx.alphabet.parse_word(text)]


def dual_group_elements():
    """Images in the dual of H of the generators g, h of the group of
    characters: sparse vectors over the dual basis."""
    g = {}
    h = {}
    for i in range(6):
        ai = _word_index("H", " ".join(["a"] * i) if i else "1")
        dai = _word_index("H", " ".join(["d"] + ["a"] * i))
        g[ai] = xi_pow(i)
        g[dai] = xi_pow(i + 1)
        h[ai] = ONE
        h[dai] = -ONE
    return g, h


def dual_skew_element():
    """The skew-primitive functional paired with the b and c lines of H."""
    x = {}
    for i in range(6):
        bai = _word_index("H", " ".join(["b"] + ["a"] * i))
        cai = _word_index("H", " ".join(["c"] + ["a"] * i))
        x[bai] = ONE
        x[cai] = ONE
    return x


def psi_columns():
    """The isomorphism from A onto the dual of H, as sparse matrix columns."""
    hd = dense("H_dual")
    gt, ht = dual_group_elements()
    xt = {i: THETA * c for i, c in dual_skew_element().items()}
    images = {"g": gt, "h": ht, "x": xt}
    return _fold_morphism("A", hd, images)


def phi_columns():
    """The isomorphism from A1 onto the dual of C."""
    cd = dense("C_dual")
    g = {}
    for l in range(6):
        g[_word_index("C", " ".join(["a"] * l) if l else "1")] = xi_pow(-l % 6)
    x = {}
    for l in range(6):
        x[_word_index("C", " ".join(["b"] + ["a"] * l))] = XI
    return _fold_morphism("A1", cd, images={"g": g, "x": x})


def _fold_morphism(src_name, dst_data, images):
    fx = fixture(src_name)
    char_images = {fx.alphabet.char(name): vec for name, vec in images.items()}
    columns = {}
    memo = {"": dict(dst_data.unit)}

    def image(word):
        if word not in memo:
            memo[word] = mult_vec(dst_data, image(word[:-1]), char_images[word[-1]])
        return memo[word]

    for i, w in enumerate(fx.basis):
        columns[i] = image(w)
    return columns


def k_tensor_factorization():
    """K splits as C tensor the group algebra of its central grouplike c.

    Returns (tensor algebra, matrix columns from K)."""
    from .hopf import group_algebra, tensor_hopf
    cd = dense("C")
    z2 = group_algebra([2])
    t = tensor_hopf(cd, z2)
    cidx = {lab: i for i, lab in enumerate(cd.basis_labels)}
    k = dense("K")
    columns = {}
    for i, lab in enumerate(k.basis_labels):
        letters = [] if lab == "1" else lab.split(" ")
        n = letters.count("c")
        rest = " ".join(ch for ch in letters if ch != "c") or "1"
        flat = cidx[rest] * z2.dim + n
        columns[i] = {flat: ONE}
    return t, columns


def a_prime_tensor_factorization():
    """A_prime splits as A1 tensor the group algebra of h."""
    from .hopf import group_algebra, tensor_hopf
    a1 = dense("A1")
    z2 = group_algebra([2])
    t = tensor_hopf(a1, z2)
    a1idx = {lab: i for i, lab in enumerate(a1.basis_labels)}
    ap = dense("A_prime")
    columns = {}
    for i, lab in enumerate(ap.basis_labels):
        letters = [] if lab == "1" else lab.split(" ")
        n = letters.count("h")
        rest = " ".join(ch for ch in letters if ch != "h") or "1"
        flat = a1idx[rest] * z2.dim + n
        columns[i] = {flat: ONE}
    return t, columns


def graded_cocycle(h_exp_sign=1):
    """The multiplication-twisting 2-cocycle on the graded form of A.

    On basis words g^j h^k x^i (x) g^n h^l x^m the value is
    eps (x) eps + zeta with zeta = (-1)^(i l) when i + m = 2 and 0 else.
    """
    gra = dense("grA")
    exps = []
    for lab in gra.basis_labels:
        letters = [] if lab == "1" else lab.split(" ")
        exps.append((letters.count("x"), letters.count("h")))
    sigma = {}
    for i1 in range(gra.dim):
        for i2 in range(gra.dim):
            xdeg1, hdeg1 = exps[i1]
            xdeg2, hdeg2 = exps[i2]
            val = gra.counit[i1] * gra.counit[i2]
            if xdeg1 + xdeg2 == 2:
                zeta = -ONE if (xdeg1 * hdeg2) % 2 else ONE
                val = val + h_exp_sign * zeta
            if val:
                sigma[(i1, i2)] = val
    return sigma


# ---------------------------------------------------------------------------
# the double, cross-checked against the pairing formula


def double_context():
    """Lazy double of H with the opposite coproduct."""
    return DoubleContext(cop(dense("H")))


def double_generator_images():
    """Generator letters of the presented double as elements of the lazy
    double: pairs (dual index, algebra index) with coefficients."""
    fx = fixture("D")
    h = dense("H")
    unit_b = None
    for i, _ in h.unit.items():
        unit_b = i
    eps_dual = {i: h.counit[i] for i in range(h.dim) if h.counit[i]}
    gt, ht = dual_group_elements()
    xt = {i: THETA * c for i, c in dual_skew_element().items()}

    out = {}
    for name, vec in (("g", gt), ("h", ht), ("x", xt)):
        out[fx.alphabet.char(name)] = {(i, unit_b): c for i, c in vec.items()}
    for name in ("a", "b", "c", "d"):
        j = _word_index("H", name)
        out[fx.alphabet.char(name)] = {(i, j): c for i, c in eps_dual.items()}
    return out


def double_cross_check():
    """Check every defining relation of the presented double inside the
    pairing-formula double; returns a list of failure strings."""
    fx = fixture("D")
    ctx = double_context()
    images = double_generator_images()
    unit = ctx.unit()

    def eval_word(word):
        acc = unit
        for ch in word:
            acc = ctx.mult(acc, images[ch])
        return acc

    failures = []
    for lhs, rhs in fx.system.rules.items():
        left = eval_word(lhs)
        right = {}
        for word, c in rhs.terms.items():
            for key, c2 in eval_word(word).items():
                s = right.get(key, ZERO) + c * c2
                if s:
                    right[key] = s
                elif key in right:
                    del right[key]
        if left != right:
            failures.append("relation %s does not hold in the double"
                            % fx.alphabet.format_word(lhs))
    return failures
