"""Tests for the dense Hopf-algebra layer on hand-frozen toy examples.

The 4-dimensional Taft algebra at q = -1 (generators g, x with g^2 = 1,
x^2 = 0, x g = -g x, Delta g = g (x) g, Delta x = x (x) 1 + g (x) x) is
small enough that every structure constant below was computed by hand:

    basis (1, g, x, gx)
    S(x) = -gx, S(gx) = x, grouplikes {1, g},
    P_{g,1} = span{x, g - 1}.
"""

import pytest

from hopf24.field import ONE, Scalar, XI, ZERO
from hopf24.hopf import (
    HopfAlgebraData,
    check_morphism,
    convolution_antipode,
    cop,
    drinfeld_double,
    dual,
    from_json,
    group_algebra,
    grouplikes,
    skew_primitives,
    taft_algebra,
    tensor_hopf,
    to_json,
    twist_by_cocycle,
    verify_axioms,
)


@pytest.fixture(scope="module")
def taft():
    return taft_algebra(2, -ONE)


class TestToyAxioms:
    def test_group_algebra_axioms(self):
        rep = verify_axioms(group_algebra([2]))
        assert rep.ok, rep.failures
        rep = verify_axioms(group_algebra([2, 3]))
        assert rep.ok, rep.failures

    def test_taft_structure_constants(self, taft):
        labels = taft.basis_labels
        assert labels == ["1", "g", "x", "g x"]
        idx = {lab: i for i, lab in enumerate(labels)}
        g, x, gx = idx["g"], idx["x"], idx["g x"]
        assert taft.mult[(g, g)] == {0: ONE}
        assert taft.mult[(g, x)] == {gx: ONE}
        assert taft.mult[(x, g)] == {gx: -ONE}
        assert taft.mult.get((x, x), {}) == {}
        assert taft.mult[(gx, g)] == {x: -ONE}
        assert taft.comult[gx] == [(ONE, 0, gx), (ONE, gx, g)]
        assert taft.counit == [ONE, ONE, ZERO, ZERO]
        assert taft.antipode[x] == {gx: -ONE}
        assert taft.antipode[gx] == {x: ONE}

    def test_taft_axioms(self, taft):
        rep = verify_axioms(taft)
        assert rep.ok, rep.failures

    def test_detects_broken_mult(self, taft):
        broken = taft.replace_mult_entry((2, 1), {3: ONE})  # x g = +gx: wrong
        rep = verify_axioms(broken)
        assert not rep.ok
        assert rep.failures

    def test_taft_at_sixth_root(self):
        rep = verify_axioms(taft_algebra(6, XI))
        assert rep.ok, rep.failures


class TestDuality:
    def test_dual_axioms(self, taft):
        rep = verify_axioms(dual(taft))
        assert rep.ok, rep.failures

    def test_double_dual_is_identity(self, taft):
        assert to_json(dual(dual(taft))) == to_json(taft)

    def test_cop_axioms(self, taft):
        rep = verify_axioms(cop(taft))
        assert rep.ok, rep.failures


class TestGrouplikes:
    def test_taft_grouplikes(self, taft):
        gl = grouplikes(taft)
        assert len(gl) == 2
        shapes = {tuple(str(v.get(i, ZERO)) for i in range(4)) for v in gl}
        assert shapes == {("1", "0", "0", "0"), ("0", "1", "0", "0")}

    def test_dual_of_group_algebra_has_all_characters(self):
        gl = grouplikes(dual(group_algebra([6])))
        assert len(gl) == 6

    def test_skew_primitives(self, taft):
        g = {1: ONE}
        one = {0: ONE}
        space = skew_primitives(taft, g, one)
        assert len(space) == 2
        # x itself lies in the span
        def in_span(vec, basis):
            from hopf24.linalg import rank
            rows = [[b.get(i, ZERO) for i in range(taft.dim)] for b in basis]
            return rank(rows) == rank(rows + [[vec.get(i, ZERO) for i in range(taft.dim)]])
        assert in_span({2: ONE}, space)
        assert in_span({0: -ONE, 1: ONE}, space)
        assert not in_span({3: ONE}, space)


class TestAntipodeSolving:
    def test_convolution_antipode_matches(self, taft):
        assert convolution_antipode(taft) == taft.antipode

    def test_convolution_antipode_group(self):
        ga = group_algebra([5])
        assert convolution_antipode(ga) == ga.antipode


class TestConstructions:
    def test_tensor(self, taft):
        t = tensor_hopf(group_algebra([2]), group_algebra([2]))
        rep = verify_axioms(t)
        assert rep.ok, rep.failures
        assert len(grouplikes(t)) == 4

    def test_trivial_twist_is_identity(self, taft):
        sigma = {
            (i, j): taft.counit[i] * taft.counit[j]
            for i in range(taft.dim)
            for j in range(taft.dim)
        }
        assert to_json(twist_by_cocycle(taft, sigma)) == to_json(taft)

    def test_double_of_group_algebra(self):
        d = drinfeld_double(group_algebra([2]))
        assert d.dim == 4
        rep = verify_axioms(d)
        assert rep.ok, rep.failures

    def test_double_of_taft(self, taft):
        d = drinfeld_double(taft)
        assert d.dim == 16
        rep = verify_axioms(d)
        assert rep.ok, rep.failures

    def test_double_of_cyclic_group(self):
        d = drinfeld_double(group_algebra([6]))
        assert d.dim == 36
        rep = verify_axioms(d, samples=400)
        assert rep.ok, rep.failures

    def test_double_of_taft_grouplikes(self, taft):
        d = drinfeld_double(taft)
        assert len(grouplikes(d)) == 4


class TestMorphismsAndJson:
    def test_identity_morphism(self, taft):
        ident = {i: {i: ONE} for i in range(taft.dim)}
        rep = check_morphism(taft, taft, ident)
        assert rep.ok and rep.bijective

    def test_broken_morphism(self, taft):
        swap = dict(enumerate([{0: ONE}, {1: ONE}, {3: ONE}, {2: ONE}]))
        rep = check_morphism(taft, taft, swap)
        assert not rep.ok

    def test_json_round_trip(self, taft):
        blob = to_json(taft)
        again = to_json(from_json(blob))
        assert blob == again
