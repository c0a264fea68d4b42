"""Tests for the ground field F = Q(x)[t]/(t^2 - (2-x)), x^2 = x - 1.

Expected values below are frozen from hand computation in the basis
(1, x, t, x*t):

    x*x     = -1 + x          t*t     = 2 - x
    x*t     = x*t             t*(x*t) = 1 + x
    (x*t)^2 = -1 + 2x         x^3     = -1,  x^6 = 1
    (2-x)^(-1) = (1+x)/3      t^(-1)  = (1/3)*t + (1/3)*x*t
"""

import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from hopf24.field import (
    ONE,
    THETA,
    XI,
    ZERO,
    NotRootOfUnity,
    Scalar,
    find_roots,
    order_of_root_of_unity,
    sqrt_in_field,
    xi_pow,
)


def rationals():
    return st.builds(mpq, st.integers(-30, 30), st.integers(1, 12))


def scalars():
    return st.builds(Scalar, rationals(), rationals(), rationals(), rationals())


class TestArithmetic:
    def test_basis_products(self):
        assert XI * XI == Scalar(-1, 1, 0, 0)
        assert XI * THETA == Scalar(0, 0, 0, 1)
        assert THETA * THETA == Scalar(2, -1, 0, 0)
        assert THETA * (XI * THETA) == Scalar(1, 1, 0, 0)
        assert (XI * THETA) * (XI * THETA) == Scalar(-1, 2, 0, 0)
        assert XI * (XI * THETA) == Scalar(0, 0, -1, 1)

    def test_xi_is_primitive_sixth_root(self):
        assert XI ** 2 == XI - 1
        assert XI ** 3 == -ONE
        assert XI ** 6 == ONE
        assert XI ** 5 * XI == ONE
        for k in range(6):
            assert xi_pow(k) == XI ** k
        assert xi_pow(-1) == XI ** 5
        assert xi_pow(13) == XI

    def test_theta_squared(self):
        assert THETA ** 2 == 2 - XI
        assert THETA ** 2 == 1 - XI ** 2

    def test_inverse(self):
        u = 1 - XI ** 2
        assert u.inv() * u == ONE
        assert (2 - XI).inv() == Scalar(mpq(1, 3), mpq(1, 3), 0, 0)
        assert THETA.inv() == Scalar(0, 0, mpq(1, 3), mpq(1, 3))
        assert THETA.inv() * THETA == ONE
        with pytest.raises(ZeroDivisionError):
            ZERO.inv()

    def test_int_interop(self):
        assert XI + 1 == 1 + XI
        assert 2 * THETA == THETA + THETA
        assert (XI - XI) == ZERO
        assert XI / XI == ONE
        assert 1 / THETA == THETA.inv()
        assert -XI == ZERO - XI

    def test_theta_outside_rational_cyclotomic_part(self):
        # [F : Q(x)] = 2: the norm of 2-x down to Q is 3, not a rational
        # square, so t itself has a nonzero t-component and no expression
        # in 1 and x alone.
        a, b, c, d = THETA.coeffs
        assert (c, d) != (0, 0)
        assert sqrt_in_field(Scalar(3)) is None

    @given(scalars(), scalars(), scalars())
    @settings(max_examples=60)
    def test_ring_axioms(self, u, v, w):
        assert (u + v) * w == u * w + v * w
        assert (u * v) * w == u * (v * w)
        assert u * v == v * u
        assert u + v == v + u
        assert u - u == ZERO
        assert u * ONE == u

    @given(scalars())
    @settings(max_examples=60)
    def test_multiplicative_inverse(self, u):
        if u == ZERO:
            with pytest.raises(ZeroDivisionError):
                u.inv()
        else:
            assert u * u.inv() == ONE


class TestText:
    def test_canonical_forms(self):
        assert str(ZERO) == "0"
        assert str(ONE) == "1"
        assert str(XI) == "x"
        assert str(THETA) == "t"
        assert str(XI * THETA) == "x*t"
        assert str(-XI) == "-x"
        assert str(Scalar(mpq(1, 2)) + XI) == "1/2 + x"
        assert str(1 - XI) == "1 - x"
        assert str(Scalar(0, 0, mpq(-5, 2), 3)) == "-5/2*t + 3*x*t"

    def test_parse(self):
        assert Scalar.from_text("0") == ZERO
        assert Scalar.from_text("1 - x") == 1 - XI
        assert Scalar.from_text("-5/2*t + 3*x*t") == Scalar(0, 0, mpq(-5, 2), 3)
        assert Scalar.from_text("x*t") == XI * THETA

    @given(scalars())
    @settings(max_examples=60)
    def test_round_trip(self, u):
        assert Scalar.from_text(str(u)) == u


class TestRootsOfUnity:
    def test_orders(self):
        assert order_of_root_of_unity(ONE) == 1
        assert order_of_root_of_unity(-ONE) == 2
        assert order_of_root_of_unity(XI) == 6
        assert order_of_root_of_unity(XI ** 2) == 3
        assert order_of_root_of_unity(XI ** 4) == 3
        assert order_of_root_of_unity(-XI) == 3
        assert order_of_root_of_unity(-(XI ** 2)) == 6

    def test_non_roots(self):
        with pytest.raises(NotRootOfUnity):
            order_of_root_of_unity(THETA)
        with pytest.raises(NotRootOfUnity):
            order_of_root_of_unity(Scalar(2))
        with pytest.raises(NotRootOfUnity):
            order_of_root_of_unity(ZERO)


class TestSquareRoots:
    def test_known_square_roots(self):
        assert sqrt_in_field(2 - XI) in (THETA, -THETA)
        assert sqrt_in_field(XI - 1) in (XI, -XI)
        assert sqrt_in_field(Scalar(4)) in (Scalar(2), Scalar(-2))
        assert sqrt_in_field(Scalar(-3)) in (2 * XI - 1, 1 - 2 * XI)
        assert sqrt_in_field(ZERO) == ZERO

    def test_known_non_squares(self):
        assert sqrt_in_field(Scalar(3)) is None
        assert sqrt_in_field(XI) is None  # would be a primitive 12th root
        assert sqrt_in_field(Scalar(2)) is None
        assert sqrt_in_field(THETA) is None

    @given(scalars())
    @settings(max_examples=40)
    def test_square_then_root(self, u):
        r = sqrt_in_field(u * u)
        assert r is not None and r * r == u * u


class TestPolynomialRoots:
    def test_quadratic(self):
        # T^2 - (2-x) has the two roots +-t.
        roots = find_roots([-(2 - XI), ZERO, ONE])
        assert sorted(map(str, roots)) == sorted(map(str, [THETA, -THETA]))

    def test_sixth_roots_of_unity(self):
        # T^6 - 1 splits completely.
        roots = find_roots([-ONE, ZERO, ZERO, ZERO, ZERO, ZERO, ONE])
        assert len(roots) == 6
        assert set(map(str, roots)) == {str(xi_pow(k)) for k in range(6)}

    def test_no_roots(self):
        assert find_roots([Scalar(-3), ZERO, ONE]) == []
        assert find_roots([Scalar(2), ZERO, ONE]) == []

    def test_cube_roots_of_unity(self):
        roots = find_roots([ONE, ONE, ONE])
        assert set(map(str, roots)) == {str(xi_pow(2)), str(xi_pow(4))}

    def test_irreducible_quartic_with_roots(self):
        # T^4 - 3T^2 + 3 is irreducible over Q (Eisenstein at 3) and has
        # exactly the two roots +-t inside the field.
        poly = [Scalar(3), ZERO, Scalar(-3), ZERO, ONE]
        roots = find_roots(poly)
        assert sorted(map(str, roots)) == sorted(map(str, [THETA, -THETA]))

    def test_mixed_product(self):
        # (T - x*t)(T - 2) expanded.
        xt = XI * THETA
        poly = [2 * xt, -(xt + 2), ONE]
        roots = find_roots(poly)
        assert set(map(str, roots)) == {str(xt), "2"}

    @given(st.lists(scalars(), min_size=1, max_size=3))
    @settings(max_examples=10, deadline=None)
    def test_constructed_linear_factors(self, given_roots):
        poly = [ONE]  # ascending coefficients
        for r in given_roots:
            shifted = [ZERO] + poly  # T * poly
            poly = [shifted[i] - r * (poly[i] if i < len(poly) else ZERO)
                    for i in range(len(shifted))]
        found = find_roots(poly)
        assert {str(r) for r in given_roots} <= {str(r) for r in found}
