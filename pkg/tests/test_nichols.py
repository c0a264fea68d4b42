import pytest

from hopf24.field import ONE, Scalar, xi_pow
from hopf24.linalg import good_primes, rank
from hopf24.nichols import (BraidedSpace, coproduct_component,
                            dense_symmetrizer, derive_presentation_rule,
                            hilbert_function, in_kernel_by_derivations,
                            in_symmetrizer_kernel, matsumoto_symmetrizer,
                            nichols_dim_by_relations, presentation_for,
                            presentation_h, primitive_in_nichols,
                            primitive_in_tensor_algebra, shuffle_coproduct,
                            skew_derivation, symmetrizer_rank_mod_p)
from hopf24.rewrite import Alphabet, RewritingSystem
from hopf24.roots import class_params, expected_nichols_dimension
from hopf24.yd import (character_params, h_one_dim_braiding_scalar,
                       h_two_dim, k_one_dim_braiding_scalar, k_two_dim,
                       lambda_params, sign, theta_params)

MINUS = -ONE


def space_h(*p):
    return BraidedSpace.from_module(h_two_dim(*p))


def space_k(*p):
    return BraidedSpace.from_module(k_two_dim(*p))


def clean(d):
    return {w: c for w, c in d.items() if c}


def check_table(space, table):
    for word, (d1, d2) in table:
        assert skew_derivation(space, {word: ONE}, 0) == clean(d1), word
        assert skew_derivation(space, {word: ONE}, 1) == clean(d2), word


# ---------------------------------------------------------------------------
# symmetrizers


def test_symmetrizer_matches_permutation_sum():
    spaces = [
        space_h(2, 1, 1, 0),
        space_k(1, 2, 0, 0),
        BraidedSpace.diagonal([[xi_pow(2), MINUS], [xi_pow(1), -xi_pow(4)]]),
        BraidedSpace.diagonal([[MINUS, ONE, xi_pow(3)],
                               [xi_pow(5), MINUS, ONE],
                               [ONE, xi_pow(2), xi_pow(4)]]),
    ]
    for space in spaces:
        for n in (2, 3):
            assert dense_symmetrizer(space, n) == \
                matsumoto_symmetrizer(space, n)
    two = BraidedSpace.diagonal([[MINUS, xi_pow(5)], [ONE, -xi_pow(2)]])
    assert dense_symmetrizer(two, 4) == matsumoto_symmetrizer(two, 4)


def test_symmetrizer_rank_matches_graded_dimension():
    space = space_h(2, 1, 1, 0)
    hil = hilbert_function(space, cap=6)
    for n in (2, 3, 4):
        assert rank(dense_symmetrizer(space, n)) == hil.dims[n]
    emb = good_primes(1)[0]
    for n in (2, 3, 4, 5, 6):
        assert symmetrizer_rank_mod_p(space, n, emb) == hil.dims[n]


# ---------------------------------------------------------------------------
# Hilbert series


def test_hilbert_series_first_family():
    hil = hilbert_function(space_h(2, 1, 1, 0), cap=8)
    assert hil.finite
    assert hil.dims == [1, 2, 4, 4, 4, 2, 1, 0]
    assert hil.total == 18
    assert nichols_dim_by_relations(presentation_h(2, 1, 1, 0)) == 18


def test_hilbert_series_small_cases():
    hil = hilbert_function(space_h(*class_params("H", "Λ4")[0]))
    assert hil.dims == [1, 2, 1, 0] and hil.total == 4
    one = BraidedSpace.diagonal([[MINUS]])
    assert hilbert_function(one).dims == [1, 1, 0]
    part = hilbert_function(space_h(2, 1, 1, 0), cap=3)
    assert not part.finite and part.dims == [1, 2, 4, 4]


def test_infinite_family_detection():
    p = (5, 1, 0, 1)
    assert expected_nichols_dimension("H", p) is None
    space = space_h(*p)
    hil = hilbert_function(space, cap=5)
    assert not hil.finite
    assert all(d > 0 for d in hil.dims)
    emb = good_primes(1)[0]
    assert symmetrizer_rank_mod_p(space, 6, emb) > 0


# ---------------------------------------------------------------------------
# skew derivations and shuffle coproducts


def test_derivation_kernel_criterion_matches_direct():
    pres = presentation_h(2, 1, 1, 0)
    space = pres.space
    seen = 0
    for t in pres.rule_tensors().values():
        if not t:
            continue
        assert in_symmetrizer_kernel(space, t)
        assert in_kernel_by_derivations(space, t)
        seen += 1
    assert seen >= 4
    for word in [(0, 1), (0, 0, 1), (1, 1), (1, 1, 1)]:
        t = {word: ONE}
        assert in_kernel_by_derivations(space, t) == \
            in_symmetrizer_kernel(space, t)


def test_shuffle_coproduct_outer_components():
    space = space_h(2, 1, 1, 0)
    t = {(0, 0, 1): ONE, (1, 0, 0): xi_pow(2)}
    delta = shuffle_coproduct(space, t)
    assert coproduct_component(delta, 0) == \
        {((), w): c for w, c in t.items()}
    assert coproduct_component(delta, 3) == \
        {(w, ()): c for w, c in t.items()}


def test_first_shuffle_component_is_sum_of_derivations():
    for space in (space_h(2, 1, 1, 0), space_k(1, 2, 0, 0)):
        for word in [(0, 1), (1, 1, 0), (1, 1, 1), (0, 1, 1, 0)]:
            t = {word: ONE}
            got = coproduct_component(shuffle_coproduct(space, t), 1)
            expect = {}
            for i in range(space.dim):
                for w, c in skew_derivation(space, t, i).items():
                    expect[((i,), w)] = c
            assert got == expect


def test_derivative_table_first_family_v_side():
    for p in class_params("H", "Λ1"):
        i, j, k, iota = p
        a = (sign(iota) * xi_pow(-2 * j) + sign(iota + 1) * xi_pow(2 * j)) \
            * xi_pow(4) / (ONE + xi_pow(5))
        si = sign(iota)
        check_table(space_h(*p), [
            ((0, 0, 0), ({}, {})),
            ((0, 0, 1),
             ({(0, 1): ONE, (1, 0): sign(iota + 1) * xi_pow(-2 * j)},
              {(0, 0): xi_pow(2 * j)})),
            ((0, 1, 0), ({(0, 1): sign(iota + 1) * xi_pow(-2 * j)},
                         {(0, 0): si * xi_pow(-2 * j)})),
            ((1, 0, 0), ({(1, 0): si}, {(0, 0): ONE})),
            ((1, 1, 1), ({(0, 1): (ONE + xi_pow(4 * j)) * a,
                          (1, 0): sign(iota + 1) * xi_pow(2 * j) * a}, {})),
            ((0, 1, 1), ({(0, 0): a * xi_pow(2 * j), (1, 1): -xi_pow(4 * j)},
                         {(0, 1): sign(iota + 1)})),
            ((1, 1, 0), ({(0, 0): a, (1, 1): xi_pow(4 * j)},
                         {(1, 0): -xi_pow(2 * j)})),
            ((1, 0, 1), ({(0, 0): si * xi_pow(-2 * j) * a},
                         {(0, 1): ONE, (1, 0): si * xi_pow(2 * j)})),
        ])


def test_derivative_table_first_family_e_side():
    for p in class_params("K", "Θ1"):
        i, j, k, iota = p
        si = sign(i)
        check_table(space_k(*p), [
            ((0, 0, 0), ({}, {})),
            ((0, 0, 1), ({(0, 1): ONE, (1, 0): -xi_pow(-j * (i + 1))},
                         {(0, 0): xi_pow(-2 * j * (i + 1))})),
            ((0, 1, 0), ({(0, 1): si * xi_pow(-2 * i * j)},
                         {(0, 0): xi_pow(-j * (i + 1))})),
            ((1, 0, 0), ({(1, 0): sign(i + 1)}, {(0, 0): ONE})),
            ((1, 1, 1),
             ({(0, 1): -xi_pow(-2 * i * j) * (si * ONE + xi_pow(-j)),
               (1, 0): xi_pow(-2 * i * j) * (ONE + si * xi_pow(-j))}, {})),
            ((0, 1, 1),
             ({(1, 1): -xi_pow(-2 * i * j),
               (0, 0): xi_pow(-2 * i * j) * (si * ONE + xi_pow(-j))},
              {(0, 1): xi_pow(-j * (i + 1))
               * (ONE + xi_pow(-2 * i * j))})),
            ((1, 1, 0),
             ({(0, 0): xi_pow(-i * j) * (si * ONE + xi_pow(-j)),
               (1, 1): xi_pow(-2 * i * j)},
              {(1, 0): ONE + xi_pow(-2 * j)})),
            ((1, 0, 1),
             ({(0, 0): xi_pow(-j * (i + 1))
               * (xi_pow(-j * (i + 1)) + si * xi_pow(-i * j))},
              {(0, 1): ONE, (1, 0): sign(i * j) * xi_pow(-j)})),
        ])


# ---------------------------------------------------------------------------
# primitivity


def test_rule_tensors_are_primitive():
    for side, p in (("H", (2, 1, 1, 0)), ("K", (4, 1, 0, 1))):
        pres = presentation_for(side, p)
        for t in pres.rule_tensors().values():
            if t:
                assert primitive_in_nichols(pres.space, t)
        assert not primitive_in_nichols(pres.space, {(0, 1): ONE})


def test_primitive_in_tensor_algebra():
    minus = BraidedSpace.diagonal([[MINUS]])
    plus = BraidedSpace.diagonal([[ONE]])
    square = {(0, 0): ONE}
    assert primitive_in_tensor_algebra(minus, square)
    assert not primitive_in_tensor_algebra(plus, square)
    assert primitive_in_tensor_algebra(plus, {(0,): ONE})


# ---------------------------------------------------------------------------
# rule derivation and closed forms


def test_derived_square_rule_matches_closed_form_first_family():
    for p in class_params("H", "Λ1"):
        pres = presentation_h(*p)
        alpha = pres.system.alphabet
        lhs = alpha.parse_word("G G")
        derived = derive_presentation_rule(
            pres.space, pres.system, {"v1": 1, "G": 2, "v2": 1},
            {"v1": (0,), "G": (1, 0), "v2": (1,)}, "G G")
        assert derived.terms == pres.system.rules[lhs].terms
        assert derived.terms == \
            {alpha.parse_word("v1 v1 v2 v2"): sign(p[3])}


def test_derive_rule_raises_when_no_rule_exists():
    space = BraidedSpace.diagonal([[ONE]])
    alpha = Alphabet(("v",), {"v": 1})
    system = RewritingSystem(alpha, {})
    with pytest.raises(ValueError):
        derive_presentation_rule(space, system, {"v": 1}, {"v": (0,)}, "v v")


def test_third_family_square_has_no_uniform_closed_form():
    members = class_params("H", "Λ3")
    assert len(members) == 8
    agree = []
    for p in members:
        j = p[1]
        pres = presentation_h(*p)
        alpha = pres.system.alphabet
        rule = pres.system.rules[alpha.parse_word("G G")]
        assert rule.terms[alpha.parse_word("v1 G v2")] == \
            Scalar(-2) * xi_pow(2 * j)
        attempt = {
            (1, 0, 1, 0): ONE,
            (0, 0, 1, 1): xi_pow(2 * j) + xi_pow(2 * j + 1),
            (0, 1, 0, 1): Scalar(2) * xi_pow(2 * j),
        }
        if in_symmetrizer_kernel(pres.space, attempt):
            agree.append(p)
    assert agree == [(2, 2, 1, 0), (2, 5, 0, 0), (5, 2, 1, 0)]


def test_third_family_cubic_coefficient_e_side():
    members = class_params("K", "Θ3")
    assert len(members) == 8
    swapped_ok = []
    for p in members:
        i, j, k, iota = p
        space = space_k(*p)
        skl = sign(k * iota)

        def tensor(c):
            return {(1, 1, 0): ONE, (1, 0, 1): c, (0, 1, 1): MINUS}

        assert in_symmetrizer_kernel(
            space, tensor(xi_pow(j) - skl * xi_pow(2 * j)))
        if in_symmetrizer_kernel(
                space, tensor(xi_pow(2 * j) - skl * xi_pow(j))):
            swapped_ok.append(p)
    assert swapped_ok == [p for p in members if p[2] * p[3] == 1]
    assert len(swapped_ok) == 2


def test_sixth_family_commutation_sign_e_side():
    members = class_params("K", "Θ6")
    assert len(members) == 12
    unsigned_ok = []
    for p in members:
        space = space_k(*p)
        assert in_symmetrizer_kernel(
            space, {(0, 1): ONE, (1, 0): -sign(p[0])})
        if in_symmetrizer_kernel(space, {(0, 1): ONE, (1, 0): MINUS}):
            unsigned_ok.append(p)
    assert unsigned_ok == [p for p in members if p[0] == 2]
    assert len(unsigned_ok) == 8


# ---------------------------------------------------------------------------
# the full catalog


def test_certified_dimensions_match_hilbert_everywhere():
    for side, domain in (("H", lambda_params()), ("K", theta_params())):
        checked = 0
        for p in domain:
            expect = expected_nichols_dimension(side, p)
            if expect is None:
                continue
            pres = presentation_for(side, p)
            cert = pres.certify()
            assert cert.valid, (side, p, cert.failures)
            hil = hilbert_function(pres.space, cap=10)
            assert hil.finite, (side, p)
            assert cert.total == hil.total == expect, (side, p)
            assert hil.dims == \
                [cert.by_degree.get(n, 0) for n in range(len(hil.dims))]
            checked += 1
        assert checked == 58


def test_rank_one_catalog():
    for side, scalar_of in (("H", h_one_dim_braiding_scalar),
                            ("K", k_one_dim_braiding_scalar)):
        finite = 0
        for p in character_params():
            if scalar_of(*p) == MINUS:
                pres = presentation_for(side, p)
                cert = pres.certify()
                assert cert.valid and cert.total == 2
                assert hilbert_function(pres.space).dims == [1, 1, 0]
                finite += 1
            else:
                with pytest.raises(ValueError):
                    presentation_for(side, p)
        assert finite == 12
