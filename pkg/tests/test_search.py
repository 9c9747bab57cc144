from itertools import permutations
from math import factorial

import pytest

from superpatterns.search import (
    SYMMETRIES,
    Budget,
    brute_force_minimal_length,
    class_symmetries,
    confirm_staged,
    confirm_staged_n6,
    find_superpattern,
    inverse_rsk,
    is_superpattern,
    minimal_superpattern_length,
    missing_patterns,
    partitions,
    rsk_shape,
    spot_check_prunes,
    standard_tableaux,
)
from superpatterns.superpat import mu

S213 = [(2, 1, 3)]
NEAR_LINEAR = [(2, 1, 3), (1, 3, 2), (3, 4, 1, 2), (4, 2, 3, 1)]


def longest_monotone(p, sign):
    best = [1] * len(p)
    for j in range(len(p)):
        for i in range(j):
            if sign * (p[j] - p[i]) > 0:
                best[j] = max(best[j], best[i] + 1)
    return max(best, default=0)


class TestIsSuperpattern:
    def test_examples(self):
        assert is_superpattern(mu(4), S213, 4)
        assert not is_superpattern((1, 2, 3), S213, 3)
        assert missing_patterns((1, 2, 3), S213, 3)[-1] == (3, 2, 1)
        assert is_superpattern((2, 5, 3, 1, 4), [], 3)


class TestTableaux:
    @pytest.mark.parametrize("n", range(0, 7))
    def test_inverse_rsk_is_a_bijection(self, n):
        seen = set()
        for shape in partitions(n):
            tabs = standard_tableaux(shape)
            for p_tab in tabs:
                for q_tab in tabs:
                    sigma = inverse_rsk(p_tab, q_tab)
                    assert rsk_shape(sigma) == shape
                    seen.add(sigma)
        assert len(seen) == factorial(n)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_shape_gives_longest_monotone_subsequences(self, n):
        for p in permutations(range(1, n + 1)):
            shape = rsk_shape(p)
            assert shape[0] == longest_monotone(p, 1)
            assert len(shape) == longest_monotone(p, -1)


class TestSymmetries:
    def test_213_only_inverse(self):
        assert class_symmetries(((2, 1, 3),)) == ["inverse"]

    def test_symmetries_preserve_class(self):
        fs = tuple(sorted(map(tuple, NEAR_LINEAR)))
        for name in class_symmetries(fs):
            f = SYMMETRIES[name]
            assert {f(p) for p in fs} == set(fs)


class TestMinimal:
    @pytest.mark.parametrize("n, length", [(1, 1), (2, 3), (3, 5), (4, 8)])
    def test_213_small(self, n, length):
        res = minimal_superpattern_length(S213, n)
        assert res.status == "determined" and res.answer == length
        assert is_superpattern(res.witness, S213, n) and len(res.witness) == length

    @pytest.mark.slow
    def test_213_n5(self):
        res = minimal_superpattern_length(S213, 5)
        assert res.answer == 11

    @pytest.mark.parametrize("n", [3, 4])
    def test_near_linear_class_is_3n_minus_4(self, n):
        res = minimal_superpattern_length(NEAR_LINEAR, n)
        assert res.answer == 3 * n - 4
        assert brute_force_minimal_length(NEAR_LINEAR, n) == 3 * n - 4

    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize(
        "forbidden",
        [S213, [(2, 1, 3), (3, 1, 2)], [(1, 2, 3)], [(1, 2, 3), (3, 2, 1)], []],
        ids=["213", "213-312", "123", "123-321", "all"],
    )
    def test_agrees_with_brute_force(self, n, forbidden):
        # the unrestricted and 123-321 cases exercise the larger symmetry groups
        res = minimal_superpattern_length(forbidden, n)
        assert res.answer == brute_force_minimal_length(forbidden, n)

    def test_no_shorter_superpattern_exists(self):
        witness, _, exhausted = find_superpattern(S213, 4, 7)
        assert witness is None and exhausted

    def test_deterministic(self):
        a = minimal_superpattern_length(S213, 4, workers=1)
        b = minimal_superpattern_length(S213, 4, workers=1)
        assert (a.answer, a.nodes, a.witness) == (b.answer, b.nodes, b.witness)

    def test_parallel_matches_serial(self):
        a = minimal_superpattern_length(S213, 4, workers=1)
        b = minimal_superpattern_length(S213, 4, workers=2)
        assert a.answer == b.answer

    def test_node_budget_is_indeterminate(self):
        res = minimal_superpattern_length(S213, 5, Budget(nodes=10))
        assert res.status == "indeterminate" and res.answer is None
        assert res.to_dict()["indeterminate"] is True

    def test_time_budget_is_indeterminate(self):
        res = minimal_superpattern_length(S213, 5, Budget(seconds=0.01))
        assert res.status == "indeterminate"

    @pytest.mark.longrun
    def test_213_n6(self):
        assert minimal_superpattern_length(S213, 6).answer == 15


class TestStaged:
    @pytest.mark.parametrize("n, length", [(2, 2), (3, 4), (4, 7)])
    def test_small_stages(self, n, length):
        res = confirm_staged(S213, n, length)
        assert res.status == "determined" and res.answer == 1

    def test_stage_refutes_at_optimal_length(self):
        res = confirm_staged(S213, 4, 8)
        assert res.answer == 0 and is_superpattern(res.witness, S213, 4)

    @pytest.mark.slow
    def test_n5_rehearsal(self):
        res = confirm_staged(S213, 5, 10)
        assert res.answer == 1

    @pytest.mark.longrun
    def test_n6(self):
        assert confirm_staged_n6().answer == 1


def test_pruned_candidates_recheck():
    assert spot_check_prunes(S213, 4, 8, samples=100) == 100
    assert spot_check_prunes(S213, 3, 5, samples=100) == 100
