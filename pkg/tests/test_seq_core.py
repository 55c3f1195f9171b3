import concurrent.futures

import pytest
from hypothesis import given, strategies as st

from fibsums import seq_core
from fibsums.seq_core import PrefixTable, TableTooLargeError, a, fib, partial_sums, table

from paper_tables import TABLE1


class TestFib:
    def test_base_values(self):
        assert fib(1) == 1
        assert fib(2) == 1
        assert fib(12) == 144

    def test_recurrence_oracle(self):
        # independent iteration of the recurrence from 1, 1
        seq = [1, 1]
        while len(seq) < 30:
            seq.append(seq[-1] + seq[-2])
        assert fib(30) == seq[29] == 832040

    @pytest.mark.parametrize("n", [0, -1, -10])
    def test_rejects_nonpositive(self, n):
        with pytest.raises(ValueError):
            fib(n)


class TestPartialSums:
    def test_empty(self):
        assert partial_sums([]) == []

    def test_fibonacci_prefix(self):
        assert partial_sums([1, 1, 2, 3, 5]) == [1, 2, 4, 7, 12]

    def test_second_iteration(self):
        assert partial_sums([1, 2, 4, 7]) == [1, 3, 7, 14]

    @given(st.lists(st.integers(min_value=0, max_value=10**9)))
    def test_length_preserving_and_nondecreasing(self, xs):
        out = partial_sums(xs)
        assert len(out) == len(xs)
        assert all(out[i] <= out[i + 1] for i in range(len(out) - 1))

    @given(st.lists(st.integers()))
    def test_elementwise_definition(self, xs):
        out = partial_sums(xs)
        assert out == [sum(xs[: j + 1]) for j in range(len(xs))]


class TestA:
    def test_golden_cells(self):
        assert a(0, 7) == 13
        assert a(5, 12) == 14323
        assert a(4, 8) == 674

    def test_zero_convention(self):
        assert a(3, 0) == 0
        assert a(0, -5) == 0
        assert a(7, -1) == 0

    @given(st.integers(min_value=1, max_value=60))
    def test_row_zero_is_fibonacci(self, n):
        assert a(0, n) == fib(n)

    @given(st.integers(min_value=0, max_value=15), st.integers(min_value=1, max_value=40))
    def test_definitional_sum(self, k, n):
        assert a(k + 1, n) == sum(a(k, m) for m in range(1, n + 1))

    @given(st.integers(min_value=0, max_value=200))
    def test_first_two_columns(self, k):
        assert a(k, 1) == 1
        assert a(k, 2) == k + 1

    def test_cold_and_warm_caches_agree(self):
        warm = [a(k, n) for k in range(6) for n in range(1, 13)]
        cold = PrefixTable()
        assert warm == [cold.value(k, n) for k in range(6) for n in range(1, 13)]

    def test_rejects_negative_k(self):
        with pytest.raises(ValueError):
            a(-1, 3)


class TestTable:
    def test_matches_golden_grid(self):
        assert table(5, 12).grid(5, 12) == TABLE1

    def test_single_row(self):
        assert table(0, 5).grid(0, 5) == [[1, 1, 2, 3, 5]]

    def test_single_column(self):
        assert table(2, 1).grid(2, 1) == [[1], [1], [1]]

    def test_resource_guard(self):
        with pytest.raises(TableTooLargeError, match="table too large"):
            table(10**4, 10**4)

    def test_guard_override_argument(self):
        with pytest.raises(TableTooLargeError):
            table(3, 3, max_cells=10)
        assert table(3, 3, max_cells=16).grid(3, 3) == [
            [1, 1, 2],
            [1, 2, 4],
            [1, 3, 7],
            [1, 4, 11],
        ]

    def test_guard_env_override(self, monkeypatch):
        monkeypatch.setenv(seq_core.MAX_CELLS_ENV, "5")
        with pytest.raises(TableTooLargeError):
            table(2, 2)
        monkeypatch.setenv(seq_core.MAX_CELLS_ENV, "100")
        assert table(2, 2).grid(2, 2) == [[1, 1], [1, 2], [1, 3]]

    def test_rejects_bad_bounds(self):
        with pytest.raises(ValueError):
            table(-1, 5)
        with pytest.raises(ValueError):
            table(2, 0)


def test_concurrent_readers_see_consistent_values():
    fresh = PrefixTable()
    expected = {(k, n): a(k, n) for k in range(20) for n in range(1, 80)}

    def probe(seed):
        out = {}
        for k in range(seed % 20, 20):
            for n in range(1, 80):
                out[(k, n)] = fresh.value(k, n)
        return out

    with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
        for result in pool.map(probe, range(16)):
            for key, value in result.items():
                assert value == expected[key]
