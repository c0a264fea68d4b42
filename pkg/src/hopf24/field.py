"""Ground field for every exact computation in this package.

F = Q(x)[t] / (t^2 - (2 - x)) where x^2 = x - 1, so x is a primitive
sixth root of unity and t is a square root of 2 - x = 1 - x^2.  An
element is stored as four rational coordinates on the basis
(1, x, t, x*t), with gmpy2.mpq components.

    >>> str(XI**2 - XI + 1)
    '0'
    >>> str(THETA**2 + XI**2)
    '1'

The canonical text form of an element is "a + b*x + c*t + d*x*t" with
zero terms omitted, e.g. "1/2 + x" or "-5/2*t + 3*x*t".
"""

from gmpy2 import is_square, isqrt, mpq, mpz


class NotRootOfUnity(ValueError):
    """Raised when an element is not a root of unity of small order."""


class Scalar:
    """An element of F, immutable, hashable, with exact arithmetic."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, a=0, b=0, c=0, d=0):
        if isinstance(a, str):
            self.coeffs = Scalar.from_text(a).coeffs
        else:
            self.coeffs = (mpq(a), mpq(b), mpq(c), mpq(d))
        self._hash = None

    # -- ring structure -------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.coeffs
        e, f, g, h = other.coeffs
        return Scalar(a + e, b + f, c + g, d + h)

    __radd__ = __add__

    def __neg__(self):
        a, b, c, d = self.coeffs
        return Scalar(-a, -b, -c, -d)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.coeffs
        e, f, g, h = other.coeffs
        return Scalar(a - e, b - f, c - g, d - h)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a1, b1, c1, d1 = self.coeffs
        a2, b2, c2, d2 = other.coeffs
        # Structure constants of the basis (1, x, t, x*t):
        #   x*x = x - 1,  x*t = x*t,  x*(x*t) = -t + x*t,
        #   t*t = 2 - x,  t*(x*t) = 1 + x,  (x*t)*(x*t) = -1 + 2x.
        return Scalar(
            a1 * a2 - b1 * b2 + 2 * c1 * c2 + c1 * d2 + d1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + b1 * b2 - c1 * c2 + c1 * d2 + d1 * c2
            + 2 * d1 * d2,
            a1 * c2 + c1 * a2 - b1 * d2 - d1 * b2,
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2 + b1 * d2 + d1 * b2,
        )

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse; raises ZeroDivisionError at zero."""
        a, b, c, d = self.coeffs
        if not (a or b or c or d):
            raise ZeroDivisionError("inverse of zero in F")
        # Write self = p + q*t over Q(x) and clear t first:
        #   1/(p + q*t) = (p - q*t) / (p^2 - q^2*(2-x)),
        # then clear x with the Q(x)-conjugate u + v*x -> (u+v) - v*x,
        # whose product with the original is the rational u^2 + u*v + v^2.
        p, q = (a, b), (c, d)
        two_minus_x = (mpq(2), mpq(-1))
        n = _qx_sub(_qx_mul(p, p), _qx_mul(two_minus_x, _qx_mul(q, q)))
        u, v = n
        norm = u * u + u * v + v * v
        nc = ((u + v) / norm, -v / norm)
        pp = _qx_mul(p, nc)
        qq = _qx_mul(q, nc)
        return Scalar(pp[0], pp[1], -qq[0], -qq[1])

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons and hashing ----------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __bool__(self):
        a, b, c, d = self.coeffs
        return bool(a or b or c or d)

    def is_rational(self):
        return self.coeffs[1:] == (0, 0, 0)

    # -- text ------------------------------------------------------------

    def __str__(self):
        parts = []
        for coeff, sym in zip(self.coeffs, ("", "x", "t", "x*t")):
            if coeff == 0:
                continue
            mag = abs(coeff)
            if sym and mag == 1:
                body = sym
            elif sym:
                body = f"{mag}*{sym}"
            else:
                body = f"{mag}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    @staticmethod
    def from_text(text):
        """Parse the canonical text form back into a Scalar."""
        text = text.strip()
        if not text:
            raise ValueError("empty scalar text")
        # Normalize so every term is prefixed by a sign, then split.
        norm = text.replace("- ", "-").replace("+ ", "+").replace(" ", "")
        terms, cur = [], ""
        for ch in norm:
            if ch in "+-" and cur and cur[-1] not in "+-/*":
                terms.append(cur)
                cur = ch
            else:
                cur += ch
        terms.append(cur)
        coeffs = [mpq(0)] * 4
        for term in terms:
            if not term or term in "+-":
                raise ValueError(f"bad scalar term in {text!r}")
            sign = mpq(1)
            if term[0] == "+":
                term = term[1:]
            elif term[0] == "-":
                sign = mpq(-1)
                term = term[1:]
            factors = term.split("*")
            if factors and factors[0] not in ("x", "t"):
                coeff = sign * mpq(factors[0])
                factors = factors[1:]
            else:
                coeff = sign
            symbols = tuple(factors)
            index = {(): 0, ("x",): 1, ("t",): 2, ("x", "t"): 3}.get(symbols)
            if index is None:
                raise ValueError(f"bad scalar term {term!r} in {text!r}")
            coeffs[index] += coeff
        return Scalar(*coeffs)


def _coerce(value):
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, type(mpq(0)), type(mpz(0)))):
        return Scalar(value)
    return NotImplemented


# -- Q(x) pair helpers (internal): pairs (u, v) represent u + v*x --------

def _qx_mul(p, q):
    u, v = p
    s, t = q
    # x*x = x - 1
    return (u * s - v * t, u * t + v * s + v * t)


def _qx_sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


ZERO = Scalar(0)
ONE = Scalar(1)
XI = Scalar(0, 1)
THETA = Scalar(0, 0, 1)

_XI_POWERS = (
    Scalar(1),            # x^0
    Scalar(0, 1),         # x^1
    Scalar(-1, 1),        # x^2 = x - 1
    Scalar(-1),           # x^3
    Scalar(0, -1),        # x^4
    Scalar(1, -1),        # x^5
)


def xi_pow(k):
    """x**k for any integer k (period six)."""
    return _XI_POWERS[k % 6]


def order_of_root_of_unity(s, bound=12):
    """Least n >= 1 with s**n == 1, searching n <= bound.

    Raises NotRootOfUnity when no such n exists within the bound; the
    roots of unity inside F are exactly {+-x^k}, of order at most six,
    so the default bound has slack.
    """
    acc = s
    for n in range(1, bound + 1):
        if acc == ONE:
            return n
        acc = acc * s
    raise NotRootOfUnity(f"{s} has no power equal to 1 up to {bound}")


def _rat_sqrt(q):
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    if not (is_square(num) and is_square(den)):
        return None
    return mpq(isqrt(num), isqrt(den))


def _qx_sqrt(u, v):
    """Square root of u + v*x inside Q(x), or None."""
    if u == 0 and v == 0:
        return (mpq(0), mpq(0))
    if v == 0:
        r = _rat_sqrt(u)
        if r is not None:
            return (r, mpq(0))
        # remaining shape: (r - 2r*x)^2 = -3 r^2
        r2 = _rat_sqrt(-u / 3)
        if r2 is not None:
            return (r2, -2 * r2)
        return None
    n = _rat_sqrt(u * u + u * v + v * v)
    if n is None:
        return None
    for root in (n, -n):
        k = (u + root) / v
        den = 2 * k + 1
        if den == 0:
            continue
        s2 = v / den
        s = _rat_sqrt(s2)
        if s is None:
            continue
        r = k * s
        if (r * r - s * s, 2 * r * s + s * s) == (u, v):
            return (r, s)
    return None


def sqrt_in_field(s):
    """A square root of s inside F, or None when no square root exists."""
    s = _coerce(s)
    a, b, c, d = s.coeffs
    if c == 0 and d == 0:
        got = _qx_sqrt(a, b)
        if got is not None:
            return Scalar(got[0], got[1])
        # try q*t with q in Q(x): q^2 = (a + b*x)/(2 - x)
        q2 = Scalar(a, b) / (2 - XI)
        if q2.coeffs[2] == 0 and q2.coeffs[3] == 0:
            got = _qx_sqrt(q2.coeffs[0], q2.coeffs[1])
            if got is not None:
                return Scalar(0, 0, got[0], got[1])
        return None
    # General case r = p + q*t with p, q in Q(x), both nonzero:
    #   p^2 + q^2*(2-x) = a + b*x     and     2*p*q = c + d*x,
    # so p^2 and q^2*(2-x) are the roots of
    #   P^2 - (a + b*x)*P + (c + d*x)^2*(2-x)/4,
    # whose discriminant (p^2 - q^2*(2-x))^2 is a perfect square in Q(x)
    # whenever a root exists.
    u = Scalar(a, b)
    w = Scalar(c, d)
    disc = u * u - w * w * (2 - XI)
    ds_pair = _qx_sqrt(disc.coeffs[0], disc.coeffs[1])
    if ds_pair is None:
        return None
    ds = Scalar(ds_pair[0], ds_pair[1])
    for sign in (ONE, -ONE):
        p2 = (u + sign * ds) / 2
        got = _qx_sqrt(p2.coeffs[0], p2.coeffs[1])
        if got is None:
            continue
        p = Scalar(got[0], got[1])
        if not p:
            continue
        q = w / (2 * p)
        cand = p + q * THETA
        if cand * cand == s:
            return cand
    return None


# -- polynomials over F (ascending coefficient lists) ---------------------

def poly_eval(coeffs, point):
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * point + c
    return acc


def _poly_mul(p, q):
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return out


def _quadratic_roots(a, b, c):
    """Roots in F of a*T^2 + b*T + c with a invertible."""
    disc = b * b - 4 * a * c
    ds = sqrt_in_field(disc)
    if ds is None:
        return []
    inv2a = (2 * a).inv()
    if not ds:
        return [-b * inv2a]
    return [(-b + ds) * inv2a, (-b - ds) * inv2a]


def _rational_poly_roots_in_field(coeffs):
    """Roots in F of a monic irreducible-over-Q polynomial (ascending,
    rational Scalar coefficients).  Degrees 3 and >4 cannot contribute:
    element degrees over Q divide [F:Q] = 4."""
    deg = len(coeffs) - 1
    if deg == 1:
        return [-coeffs[0]]
    if deg == 2:
        return _quadratic_roots(coeffs[2], coeffs[1], coeffs[0])
    if deg != 4:
        return []
    a0 = coeffs[0].coeffs[0]
    a1 = coeffs[1].coeffs[0]
    a2 = coeffs[2].coeffs[0]
    a3 = coeffs[3].coeffs[0]
    # depress: T = y - a3/4
    p = a2 - 3 * a3 * a3 / 8
    q = a1 - a3 * a2 / 2 + a3 ** 3 / 8
    r = a0 - a3 * a1 / 4 + a3 * a3 * a2 / 16 - 3 * a3 ** 4 / 256
    shift = Scalar(-a3 / 4)
    roots = []
    if q == 0:
        for z in _quadratic_roots(ONE, Scalar(p), Scalar(r)):
            y = sqrt_in_field(z)
            if y is not None:
                roots.extend([y + shift, -y + shift])
        return roots
    # factor the depressed quartic as (y^2+u*y+s)(y^2-u*y+t): u^2 = w is a
    # rational root of the cubic resolvent w^3 + 2p w^2 + (p^2-4r) w - q^2.
    import sympy

    W = sympy.symbols("W")
    resolvent = sympy.Poly(
        W ** 3 + 2 * _to_sympy(p) * W ** 2
        + (_to_sympy(p) ** 2 - 4 * _to_sympy(r)) * W - _to_sympy(q) ** 2,
        W,
    )
    for w_root in resolvent.all_roots():
        if not w_root.is_rational:
            continue
        w = mpq(int(w_root.p), int(w_root.q))
        if w == 0:
            continue
        u = sqrt_in_field(Scalar(w))
        if u is None:
            continue
        for uu in (u, -u):
            s = (Scalar(p + w) - Scalar(q) / uu) / 2
            roots.extend(y + shift for y in _quadratic_roots(ONE, uu, s))
    return roots


def _to_sympy(q):
    import sympy

    return sympy.Rational(int(q.numerator), int(q.denominator))


def find_roots(coeffs):
    """All roots in F of the polynomial sum(coeffs[k] * T**k).

    The norm of the polynomial down to Q is factored over Q (sympy), and
    each irreducible factor's possible roots in F are extracted by
    radicals; every candidate is verified against the original
    polynomial, so the result is exact.
    """
    coeffs = [_coerce(c) for c in coeffs]
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if len(coeffs) <= 1:
        return []
    roots = []
    if not coeffs[0]:
        roots.append(ZERO)
        while coeffs and not coeffs[0]:
            coeffs.pop(0)
    if len(coeffs) <= 1:
        return roots
    # norm down to Q: clear t with the t-conjugate, then x with the
    # x-conjugate (x -> 1 - x, valid on t-free scalars).
    pbar = [Scalar(c.coeffs[0], c.coeffs[1], -c.coeffs[2], -c.coeffs[3])
            for c in coeffs]
    q = _poly_mul(coeffs, pbar)
    assert all(c.coeffs[2] == 0 and c.coeffs[3] == 0 for c in q)
    qs = [Scalar(c.coeffs[0] + c.coeffs[1], -c.coeffs[1]) for c in q]
    npoly = _poly_mul(q, qs)
    assert all(c.is_rational() for c in npoly)

    import sympy

    T = sympy.symbols("T")
    expr = sum(_to_sympy(c.coeffs[0]) * T ** k for k, c in enumerate(npoly))
    _, factors = sympy.Poly(expr, T).factor_list()
    seen = {str(r) for r in roots}
    for factor, _mult in factors:
        monic = factor.monic()
        flist = [Scalar(mpq(int(c.p), int(c.q)))
                 for c in reversed(monic.all_coeffs())]
        for cand in _rational_poly_roots_in_field(flist):
            if str(cand) not in seen and not poly_eval(coeffs, cand):
                seen.add(str(cand))
                roots.append(cand)
    return roots
