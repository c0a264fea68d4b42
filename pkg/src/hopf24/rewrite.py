"""Noncommutative rewriting over the exact ground field.

Words are strings of single internal characters, one per declared letter.
The monomial order compares (total letter weight, number of weight-zero
letters with more = bigger, reverse-lexicographic reading right-to-left
with earlier-declared letters bigger).  It is a well-order compatible
with concatenation, so any rule set whose right sides are strictly below
the left side terminates; resolving all overlap and inclusion ambiguities
then certifies unique normal forms (diamond lemma), which simultaneously
proves that the irreducible words form a basis of the presented algebra
and that its induced product is associative.
"""

import sys

from .field import ONE, Scalar, ZERO

sys.setrecursionlimit(max(sys.getrecursionlimit(), 100000))

_CHAR_POOL = (
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789"
)


class Alphabet:
    """Ordered letters with weights; earlier in `names` = bigger."""

    def __init__(self, names, weights):
        if len(set(names)) != len(names):
            raise ValueError("duplicate letter names")
        self.names = tuple(names)
        self.weights = dict(weights)
        used = set()
        self._char = {}
        for name in names:
            if len(name) == 1 and name not in used:
                ch = name
            else:
                ch = next(c for c in _CHAR_POOL if c not in used
                          and c not in names)
            used.add(ch)
            self._char[name] = ch
        self._name = {ch: name for name, ch in self._char.items()}
        n = len(names)
        self._rank = {self._char[name]: n - i for i, name in enumerate(names)}
        self._weight = {self._char[name]: weights[name] for name in names}

    def char(self, name):
        return self._char[name]

    def parse_word(self, text):
        text = text.strip()
        if text in ("", "1"):
            return ""
        out = []
        for tok in text.split():
            if tok not in self._char:
                raise ValueError(f"unknown letter {tok!r}")
            out.append(self._char[tok])
        return "".join(out)

    def format_word(self, word):
        if not word:
            return "1"
        return " ".join(self._name[ch] for ch in word)

    def word_weight(self, word):
        return sum(self._weight[ch] for ch in word)

    def word_key(self, word):
        weight = 0
        zeros = 0
        for ch in word:
            w = self._weight[ch]
            weight += w
            if w == 0:
                zeros += 1
        return (weight, zeros, tuple(self._rank[ch] for ch in reversed(word)))


class NCPolynomial:
    """Finite F-linear combination of words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for word, coeff in terms.items():
                if not isinstance(coeff, Scalar):
                    coeff = Scalar(coeff)
                if coeff:
                    data[word] = data.get(word, ZERO) + coeff
        self.terms = {w: c for w, c in data.items() if c}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({"": ONE})

    @classmethod
    def word(cls, w, coeff=ONE):
        return cls({w: coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, NCPolynomial) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            acc = out.get(w, ZERO) + c
            if acc:
                out[w] = acc
            elif w in out:
                del out[w]
        p = NCPolynomial.__new__(NCPolynomial)
        p.terms = out
        return p

    def __neg__(self):
        p = NCPolynomial.__new__(NCPolynomial)
        p.terms = {w: -c for w, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        if not s:
            return NCPolynomial.zero()
        p = NCPolynomial.__new__(NCPolynomial)
        p.terms = {w: c * s for w, c in self.terms.items()}
        return p

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                acc = out.get(w, ZERO) + c1 * c2
                if acc:
                    out[w] = acc
                elif w in out:
                    del out[w]
        p = NCPolynomial.__new__(NCPolynomial)
        p.terms = out
        return p

    def __rmul__(self, s):
        if isinstance(s, (int, Scalar)):
            return self.scale(s if isinstance(s, Scalar) else Scalar(s))
        return NotImplemented

    def __repr__(self):
        return f"NCPolynomial({self.terms!r})"


class RewritingSystem:
    """A terminating rule set over an alphabet, with memoized reduction."""

    def __init__(self, alphabet, rules):
        self.alphabet = alphabet
        self.rules = {}
        for lhs, rhs in rules.items():
            if not lhs:
                raise ValueError("empty left side")
            if not isinstance(rhs, NCPolynomial):
                rhs = NCPolynomial(rhs)
            lkey = alphabet.word_key(lhs)
            for w in rhs.terms:
                if alphabet.word_key(w) >= lkey:
                    raise ValueError(
                        f"rule {alphabet.format_word(lhs)} -> ... not "
                        f"decreasing at term {alphabet.format_word(w)}"
                    )
            self.rules[lhs] = rhs
        self._by_first = {}
        for lhs in self.rules:
            self._by_first.setdefault(lhs[0], []).append(lhs)
        for group in self._by_first.values():
            group.sort(key=len, reverse=True)
        self._memo = {}

    # -- reduction -------------------------------------------------------

    def _leftmost_match(self, word):
        for i in range(len(word)):
            group = self._by_first.get(word[i])
            if not group:
                continue
            for lhs in group:
                if word.startswith(lhs, i):
                    return i, lhs
        return None

    def reduce_word(self, word):
        memo = self._memo
        got = memo.get(word)
        if got is not None:
            return got
        hit = self._leftmost_match(word)
        if hit is None:
            out = NCPolynomial.word(word)
        else:
            i, lhs = hit
            prefix, suffix = word[:i], word[i + len(lhs):]
            acc = {}
            for term, coeff in self.rules[lhs].terms.items():
                for w, c in self.reduce_word(prefix + term + suffix).terms.items():
                    new = acc.get(w, ZERO) + coeff * c
                    if new:
                        acc[w] = new
                    elif w in acc:
                        del acc[w]
            out = NCPolynomial.__new__(NCPolynomial)
            out.terms = acc
        memo[word] = out
        return out

    def reduce(self, poly):
        acc = NCPolynomial.zero()
        for w, c in poly.terms.items():
            acc = acc + self.reduce_word(w).scale(c)
        return acc

    def mult(self, w1, w2):
        return self.reduce_word(w1 + w2)

    def poly_mult(self, p, q):
        return self.reduce(p * q)

    def is_irreducible(self, word):
        return self._leftmost_match(word) is None

    # -- diamond lemma ----------------------------------------------------

    def overlap_check(self):
        """All unresolved ambiguities; empty means confluent."""
        bad = []
        items = sorted(self.rules.items())
        for l1, r1 in items:
            for l2, r2 in items:
                for k in range(1, min(len(l1), len(l2))):
                    if l1[-k:] != l2[:k]:
                        continue
                    tail = l2[k:]
                    head = l1[:-k] if k < len(l1) else ""
                    route1 = self.reduce(r1 * NCPolynomial.word(tail))
                    route2 = self.reduce(NCPolynomial.word(head) * r2)
                    if route1 != route2:
                        bad.append((l1 + tail, route1 - route2))
                if l1 != l2 and len(l2) < len(l1):
                    start = 0
                    while True:
                        i = l1.find(l2, start)
                        if i < 0:
                            break
                        start = i + 1
                        route1 = self.reduce(r1)
                        route2 = self.reduce(
                            NCPolynomial.word(l1[:i]) * r2
                            * NCPolynomial.word(l1[i + len(l2):])
                        )
                        if route1 != route2:
                            bad.append((l1, route1 - route2))
        return bad

    # -- normal forms -----------------------------------------------------

    def irreducible_monomials(self, cap=200000, max_weight=None):
        """All irreducible words (sorted by the monomial order).

        Raises ValueError when more than `cap` words are found, which for
        our systems signals an infinite algebra rather than a big one.
        """
        letters = [self.alphabet.char(n) for n in self.alphabet.names]
        out = []
        level = [""]
        lhss = list(self.rules)
        while level:
            out.extend(level)
            if len(out) > cap:
                raise ValueError(f"more than {cap} irreducible words")
            nxt = []
            for word in level:
                for ch in letters:
                    cand = word + ch
                    if max_weight is not None and \
                            self.alphabet.word_weight(cand) > max_weight:
                        continue
                    if any(cand.endswith(lhs) for lhs in lhss):
                        continue
                    nxt.append(cand)
            level = nxt
        out.sort(key=self.alphabet.word_key)
        return out

    def with_rule(self, lhs, rhs):
        rules = dict(self.rules)
        rules[lhs] = rhs
        return RewritingSystem(self.alphabet, rules)

    # -- text forms ---------------------------------------------------------

    def format_poly(self, poly):
        if not poly:
            return "0"
        words = sorted(poly.terms, key=self.alphabet.word_key, reverse=True)
        parts = []
        for w in words:
            coeff = poly.terms[w]
            body = self.alphabet.format_word(w)
            if coeff == ONE and w:
                parts.append(body)
            elif not w:
                parts.append(f"({coeff})")
            else:
                parts.append(f"({coeff}) {body}")
        return " + ".join(parts)

    def parse_poly(self, text):
        return parse_poly_text(text, self.alphabet)

    def rules_text(self):
        lines = []
        for lhs in sorted(self.rules, key=self.alphabet.word_key):
            lines.append(
                f"{self.alphabet.format_word(lhs)} -> "
                f"{self.format_poly(self.rules[lhs])}"
            )
        return "\n".join(lines) + "\n"


def parse_poly_text(text, alphabet):
    text = text.strip()
    if text == "0":
        return NCPolynomial.zero()
    # split into signed terms at parenthesis depth zero
    terms = []
    depth = 0
    cur = ""
    sign = 1
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-":
            if cur.strip():
                terms.append((sign, cur.strip()))
            cur = ""
            sign = 1 if ch == "+" else -1
        else:
            cur += ch
    if cur.strip():
        terms.append((sign, cur.strip()))
    out = {}
    for sign, term in terms:
        if term.startswith("("):
            close = term.index(")")
            coeff = Scalar.from_text(term[1:close])
            rest = term[close + 1:].strip()
        else:
            coeff = ONE
            rest = term
        word = alphabet.parse_word(rest) if rest else ""
        coeff = coeff if sign > 0 else -coeff
        out[word] = out.get(word, ZERO) + coeff
    return NCPolynomial(out)


def parse_rules_text(text, alphabet):
    """Rule files: one `LHS -> RHS` per line; # comments and blanks skipped."""
    rules = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "->" not in line:
            raise ValueError(f"line {lineno}: missing '->'")
        left, right = line.split("->", 1)
        lhs = alphabet.parse_word(left)
        rules[lhs] = parse_poly_text(right, alphabet)
    return rules


def derive_rule_from_zero(system, zero_poly, target_word):
    """Solve a reduced zero-identity for a missing rule.

    `zero_poly` must vanish in the intended algebra.  After reduction by
    the partial system, every occurrence of `target_word` must be the
    whole word; the identity is then solved for it.
    """
    red = system.reduce(zero_poly)
    alpha = None
    rest = {}
    for w, c in red.terms.items():
        if target_word in w:
            if w != target_word:
                raise ValueError(
                    f"seed leaves embedded target inside "
                    f"{system.alphabet.format_word(w)}"
                )
            alpha = c
        else:
            rest[w] = c
    if alpha is None or not alpha:
        raise ValueError("seed does not determine the target word")
    return NCPolynomial(rest).scale(-alpha.inv())
