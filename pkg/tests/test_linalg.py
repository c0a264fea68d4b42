"""Tests for exact linear algebra over F and the mod-p rank backend."""

from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from hopf24.field import ONE, THETA, XI, ZERO, Scalar, find_roots
from hopf24.linalg import (
    PrimeEmbedding,
    charpoly,
    good_primes,
    identity,
    intersect,
    mat_mul,
    mat_vec,
    nullspace,
    rank,
    rank_mod_p,
    rref,
    solve,
)


def small_scalars():
    ints = st.integers(-4, 4)
    return st.builds(
        lambda a, b, c, d: Scalar(a, b, c, d), ints, ints, ints, ints
    )


def small_matrices(max_n=4):
    return st.integers(2, max_n).flatmap(
        lambda n: st.lists(
            st.lists(small_scalars(), min_size=n, max_size=n),
            min_size=2,
            max_size=4,
        )
    )


class TestEchelon:
    def test_rank_known(self):
        assert rank([[XI, ONE], [XI * XI, XI]]) == 1
        assert rank([[XI, ONE], [ONE, XI]]) == 2
        assert rank([[ZERO, ZERO], [ZERO, ZERO]]) == 0
        assert rank(identity(5)) == 5

    def test_nullspace_known(self):
        # rows of rank 1: x*v1 + v2 = 0 has nullspace spanned by (1, -x).
        ns = nullspace([[XI, ONE], [XI * XI, XI]])
        assert len(ns) == 1
        v = ns[0]
        assert [XI * v[0] + v[1]] == [ZERO]

    def test_solve(self):
        mat = [[XI, ONE], [ONE, THETA]]
        rhs = [ONE + XI, THETA + ONE]
        sol = solve(mat, rhs)
        assert sol is not None
        assert mat_vec(mat, sol) == rhs
        assert solve([[ONE, ONE], [ONE, ONE]], [ZERO, ONE]) is None

    @given(small_matrices())
    @settings(max_examples=30, deadline=None)
    def test_rank_nullity(self, rows):
        ncols = len(rows[0])
        ns = nullspace(rows)
        assert rank(rows) + len(ns) == ncols
        for v in ns:
            assert all(c == ZERO for c in mat_vec(rows, v))

    def test_intersect(self):
        e1 = [ONE, ZERO, ZERO]
        e2 = [ZERO, ONE, ZERO]
        e3 = [ZERO, ZERO, ONE]
        plane_a = [e1, e2]
        plane_b = [[ONE, ONE, ZERO], e3]
        meet = intersect(plane_a, plane_b)
        assert len(meet) == 1
        v = meet[0]
        # the line spanned by (1, 1, 0)
        assert v[2] == ZERO and v[0] == v[1] and v[0] != ZERO


class TestCharpoly:
    def test_diagonal(self):
        mat = [[XI, ZERO], [ZERO, THETA]]
        # (T - x)(T - t) = T^2 - (x+t) T + x*t
        assert charpoly(mat) == [XI * THETA, -(XI + THETA), ONE]

    def test_companion_of_sixth_root(self):
        # companion matrix of T^2 - T + 1; eigenvalues are x and x^5.
        mat = [[ZERO, -ONE], [ONE, ONE]]
        cp = charpoly(mat)
        assert cp == [ONE, -ONE, ONE]
        assert set(map(str, find_roots(cp))) == {str(XI), str(XI ** 5)}

    @given(small_matrices(max_n=3))
    @settings(max_examples=20, deadline=None)
    def test_cayley_hamilton(self, rows):
        n = len(rows)
        if len(rows[0]) != n:
            rows = [r[:n] for r in rows[:len(rows[0])]]
            n = len(rows)
        cp = charpoly(rows)
        acc = [[ZERO] * n for _ in range(n)]
        power = identity(n)
        for c in cp:
            for i in range(n):
                for j in range(n):
                    acc[i][j] = acc[i][j] + c * power[i][j]
            power = mat_mul(power, rows)
        assert all(entry == ZERO for row in acc for entry in row)


class TestModP:
    def test_good_primes_satisfy_constraints(self):
        for emb in good_primes(3):
            p, w, s = emb.p, emb.w, emb.s
            assert (w * w - w + 1) % p == 0
            assert (s * s - (2 - w)) % p == 0

    def test_embedding_is_ring_map(self):
        emb = good_primes(1)[0]
        u = Scalar(mpq(1, 2), 3, mpq(-2, 5), 1)
        v = Scalar(2, mpq(7, 3), 0, mpq(1, 6))
        assert emb.reduce(u * v) == emb.reduce(u) * emb.reduce(v) % emb.p
        assert emb.reduce(u + v) == (emb.reduce(u) + emb.reduce(v)) % emb.p
        assert emb.reduce(ONE) == 1

    def test_rank_mod_p_matches_exact_on_full_rank(self):
        emb = good_primes(1)[0]
        mat = [[XI, ONE, THETA], [ONE, THETA, XI], [THETA, XI, ONE]]
        r = rank(mat)
        assert rank_mod_p(mat, emb) == r

    @given(small_matrices())
    @settings(max_examples=30, deadline=None)
    def test_rank_mod_p_lower_bound(self, rows):
        emb = good_primes(1)[0]
        assert rank_mod_p(rows, emb) <= rank(rows)
