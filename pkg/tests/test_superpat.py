import math
from fractions import Fraction

import pytest

from oracles import brute_contains, order_type, witness_ok
from superpatterns.majorize import xi, zeta
from superpatterns.perm import (
    avoids,
    chessboard,
    column_runs,
    contains,
    enumerate_class,
    row_runs,
    standardize,
)
from superpatterns.strahler import (
    complete_binary_tree,
    is_tree_shaped,
    strahler_of_tree,
    strahler_upper_bound,
    tree_augment,
    tree_of_permutation,
    tree_pattern_permutation,
)
from superpatterns.superpat import (
    SuperpatternSpec,
    augment,
    build,
    embed_into_mu,
    embed_into_strahler_superpattern,
    mu,
    mu_board,
    mu_length,
    strahler_superpattern,
    strahler_superpattern_length,
    superpattern_213_132,
    superpattern_213_3412,
    unimodal_superpattern,
)

S213 = [(2, 1, 3)]


def covers(host, forbidden, n):
    return all(contains(host, p) is not None for p in enumerate_class(n, forbidden))


class TestMu:
    def test_small_values(self):
        assert mu(0) == ()
        assert mu(1) == (1,)
        assert mu(2) == (2, 3, 1)
        assert mu(3) == (2, 5, 3, 4, 1)
        assert len(mu(6)) == 15

    @pytest.mark.parametrize("n", range(1, 60))
    def test_size_formula(self, n):
        exact = Fraction(n * n, 4) + n + Fraction((-1) ** n - 1, 8)
        assert exact.denominator == 1
        assert len(mu(n)) == mu_length(n) == exact

    @pytest.mark.parametrize("n", range(3, 10))
    def test_board_recursion(self, n):
        b = chessboard(mu(n))
        assert b == mu_board(n)
        assert (b.ncols, b.nrows) == (n, n)
        assert b[n, 1] == 1 and b[n - 1, 2] == 2
        assert all(b[i, 2] == 1 for i in range(1, n - 1))
        assert all(b[c, 1] == 0 for c in range(1, n))
        inner = chessboard(mu(n - 2))
        for c in range(1, n + 1):
            for r in range(3, n + 1):
                expect = inner[c, r - 2] if c <= n - 2 else 0
                assert b[c, r] == expect

    def test_embed_case_one_example(self):
        # the i-th entry goes to the i-th entry of the second row
        assert embed_into_mu((3, 2, 1), 3) == (2, 3, 5)
        assert witness_ok(mu(3), (3, 2, 1), (2, 4, 5))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_embed_exhaustive(self, n):
        host = mu(n)
        for p in enumerate_class(n, S213):
            assert witness_ok(host, p, embed_into_mu(p, n)), p

    def test_embed_identity(self):
        for n in range(1, 9):
            p = tuple(range(1, n + 1))
            assert witness_ok(mu(n), p, embed_into_mu(p))

    def test_embed_rejects_213(self):
        with pytest.raises(ValueError):
            embed_into_mu((2, 1, 3))
        with pytest.raises(ValueError):
            embed_into_mu((1, 2), 3)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_row_column_sub_superpattern(self, n):
        host = mu(n)
        cols = column_runs(host)
        rows = row_runs(host)
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                sub = [
                    v
                    for k, v in enumerate(host)
                    if n - j + 1 <= cols[k] <= n - i + 1 and i <= rows[v - 1] <= j
                ]
                assert covers(standardize(sub), S213, j - i + 1), (n, i, j)


class TestLinearConstructions:
    def test_unimodal_examples(self):
        assert unimodal_superpattern(1) == (1,)
        assert unimodal_superpattern(3) == (1, 3, 5, 4, 2)
        assert unimodal_superpattern(4) == (1, 3, 5, 7, 6, 4, 2)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_unimodal_covers(self, n):
        members = list(enumerate_class(n, [(2, 1, 3), (3, 1, 2)]))
        assert len(members) == 2 ** (n - 1)
        host = unimodal_superpattern(n)
        assert len(host) == 2 * n - 1
        assert all(contains(host, p) is not None for p in members)

    def test_diagonal_examples(self):
        assert superpattern_213_132(1) == (1,)
        assert superpattern_213_132(2) == (4, 1, 2, 3)
        assert len(superpattern_213_132(7)) == 17

    @pytest.mark.parametrize("n", range(1, 9))
    def test_diagonal_board_and_cover(self, n):
        host = superpattern_213_132(n)
        b = chessboard(host)
        assert (b.ncols, b.nrows) == (n, n)
        assert {(c, r): v for c, r, v in b.nonzero()} == {(i, n + 1 - i): xi(i) for i in range(1, n + 1)}
        assert len(host) == zeta(n) <= n * math.log2(n) + n
        assert covers(host, [(2, 1, 3), (1, 3, 2)], n)

    def test_3412_examples(self):
        assert superpattern_213_3412(3) == (2, 5, 3, 1, 4)
        assert len(superpattern_213_3412(4)) == 8
        with pytest.raises(ValueError):
            superpattern_213_3412(2)

    @pytest.mark.parametrize("n", range(3, 8))
    def test_3412_board_and_cover(self, n):
        host = superpattern_213_3412(n)
        assert len(host) == 3 * n - 4
        b = chessboard(host)
        assert b.ncols == b.nrows == 2 * n - 3
        centre = {(c - (n - 3), r - (n - 3)): v for c, r, v in b.nonzero() if n - 2 <= c <= n and n - 2 <= r <= n}
        assert centre == {(c, r): v for c, r, v in chessboard((2, 5, 3, 1, 4)).nonzero()}
        assert covers(host, [(2, 1, 3), (3, 4, 1, 2)], n)

    def test_25314_covers_all_of_s3(self):
        assert covers((2, 5, 3, 1, 4), [], 3)


class TestStrahlerSuperpattern:
    def test_base_cases(self):
        assert strahler_superpattern(0, 3) == ()
        assert strahler_superpattern(3, 2) == (2, 5, 3, 1, 4)
        assert strahler_superpattern(2, 2) == (2, 3, 1)
        with pytest.raises(ValueError):
            strahler_superpattern(3, 1)

    @pytest.mark.parametrize("n", range(3, 30))
    def test_s2_is_3n_minus_4(self, n):
        assert strahler_superpattern(n, 2) == superpattern_213_3412(n)

    @pytest.mark.parametrize("n, s", [(n, s) for n in range(0, 40) for s in (2, 3, 4)])
    def test_length_formula(self, n, s):
        assert len(strahler_superpattern(n, s)) == strahler_superpattern_length(n, s)

    def test_recursive_layout(self):
        # 1, then P(xi_n, s-1), P(n-1, s), P(xi_n, s-1) from top-left to bottom-right
        n, s = 6, 3
        host = strahler_superpattern(n, s)
        side = strahler_superpattern(xi(n), s - 1)
        inner = strahler_superpattern(n - 1, s)
        assert host[0] == 1
        a, b = 1, 1 + len(side)
        c = b + len(inner)
        blocks = [host[a:b], host[b:c], host[c:]]
        assert [standardize(x) for x in blocks] == [side, inner, side]
        assert min(blocks[0]) > max(blocks[1]) and min(blocks[1]) > max(blocks[2])

    @pytest.mark.parametrize("n", range(1, 8))
    def test_p_n_2_covers_class(self, n):
        host = strahler_superpattern(n, 2)
        for p in enumerate_class(n, [(2, 1, 3), (3, 4, 1, 2)]):
            assert witness_ok(host, p, embed_into_strahler_superpattern(p, n, 2))

    def test_p_4_3_contains_low_strahler_members(self):
        # tree-shaped permutations have odd length, so read the length-4
        # case through the real parts of the augmentations
        host = strahler_superpattern(4, 3)
        members = [p for p in enumerate_class(4, S213) if strahler_upper_bound(p) <= 3]
        assert len(members) == 14
        for p in members:
            assert contains(host, p) is not None
            aug = tree_augment(p).perm
            assert contains(strahler_superpattern(len(aug), 3), aug) is not None

    def test_tree_shaped_lengths_are_odd(self):
        for m in range(1, 9):
            shaped = [p for p in enumerate_class(m, S213) if is_tree_shaped(p)]
            assert bool(shaped) == (m % 2 == 1)

    @pytest.mark.parametrize("s", [3, 4])
    def test_tree_shaped_embeddings(self, s):
        for m in range(1, 11):
            host = strahler_superpattern(m, s)
            for p in enumerate_class(m, S213):
                if is_tree_shaped(p) and strahler_of_tree(tree_of_permutation(p)) <= s:
                    assert witness_ok(host, p, embed_into_strahler_superpattern(p, m, s)), p

    def test_complete_binary_tree_height_two(self):
        p = tree_pattern_permutation(complete_binary_tree(2))
        assert len(p) == 7 and strahler_of_tree(tree_of_permutation(p)) == 3
        assert witness_ok(strahler_superpattern(7, 3), p, embed_into_strahler_superpattern(p, 7, 3))

    def test_rejects_high_strahler(self):
        p = tree_pattern_permutation(complete_binary_tree(2))
        with pytest.raises(ValueError):
            embed_into_strahler_superpattern(p, 7, 2)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_augmentations_embed(self, n):
        for p in enumerate_class(n, S213):
            aug = tree_augment(p)
            s = max(2, strahler_upper_bound(p))
            m = len(aug.perm)
            w = embed_into_strahler_superpattern(aug.perm, m, s)
            assert witness_ok(strahler_superpattern(m, s), aug.perm, w)

    @pytest.mark.parametrize("s", [3, 4])
    def test_growth_doubling(self, s):
        for n in range(8, 257):
            big = strahler_superpattern_length(2 * n, s)
            small = strahler_superpattern_length(n, s)
            assert big <= 2 * small * (1 + math.log2(2 * n)) / max(1, math.log2(n)), n

    @pytest.mark.parametrize("s", [3, 4, 5])
    def test_growth_doubling_polylog(self, s):
        # n log^(s-1) n growth: doubling n multiplies by about 2 (log 2n / log n)^(s-1)
        for n in range(8, 257):
            big = strahler_superpattern_length(2 * n, s)
            small = strahler_superpattern_length(n, s)
            factor = ((1 + math.log2(2 * n)) / max(1, math.log2(n))) ** (s - 1)
            assert big <= 2 * small * factor, n

    def test_large_n_builds(self):
        host = strahler_superpattern(600, 3)
        assert len(host) == strahler_superpattern_length(600, 3)
        assert host[0] == 1


class TestAugment:
    @pytest.mark.parametrize(
        "sigma, expected", [((), (1, 3, 2)), ((1,), (1, 4, 3, 2)), ((2, 3, 1), (1, 6, 4, 5, 3, 2))]
    )
    def test_examples(self, sigma, expected):
        assert augment(sigma) == expected

    def test_properties(self):
        for n in range(0, 7):
            for sigma in enumerate_class(n, []):
                a = augment(sigma)
                assert len(a) == n + 3
                assert a[0] == 1 and a[1] == n + 3 and a[-1] == 2
                assert order_type(a[2:-1]) == tuple(sigma) if n else True
                assert brute_contains(a, sigma) is not None


class TestDispatch:
    def test_build(self):
        assert build("213", 2) == (2, 3, 1)
        assert build("213-312", 3) == unimodal_superpattern(3)
        assert build("strahler", 3, 2) == (2, 5, 3, 1, 4)
        assert SuperpatternSpec("213-3412", 4).build() == superpattern_213_3412(4)

    @pytest.mark.parametrize("args", [("nope", 3, None), ("strahler", 3, 1), ("213", -1, None)])
    def test_spec_rejects(self, args):
        with pytest.raises(ValueError):
            SuperpatternSpec(*args)
