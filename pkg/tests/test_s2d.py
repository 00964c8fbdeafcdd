import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sdcma.errors import CountMismatch, IndexOutOfRange, InvalidGeometry, RowOutOfRange
from sdcma.s2d import (
    S2DStrategy,
    SubspaceLayout,
    format_strategy,
    global_to_subspace,
    make_strategy,
    parse_strategy,
    project_all,
    project_subspace,
    reconstruct_symbols,
    subspace_to_global,
)


class TestStrategy:
    @pytest.mark.parametrize(
        "g, P, text",
        [(2, 3, "[1 2;2 3]"), (3, 3, "[1 2;2 3;3 1]"), (5, 5, "[1 2;2 3;3 4;4 5;5 1]")],
    )
    def test_table_rows(self, g, P, text):
        s = make_strategy(g, P)
        assert format_strategy(s) == text
        assert parse_strategy(text, P) == s

    def test_single_group(self):
        assert make_strategy(1, 2).rows == ((1, 2),)

    @pytest.mark.parametrize("g, P", [(3, 2), (4, 3), (1, 1), (0, 3)])
    def test_invalid_geometry(self, g, P):
        with pytest.raises(InvalidGeometry):
            make_strategy(g, P)

    def test_row_validation(self):
        with pytest.raises(InvalidGeometry):
            S2DStrategy(3, ((1, 1),))
        with pytest.raises(RowOutOfRange):
            S2DStrategy(3, ((1, 4),))

    def test_every_dimension_carries_two_groups(self):
        for g in (3, 4, 5, 7):
            counts = np.zeros(g, int)
            for row in make_strategy(g, g).rows:
                for d in row:
                    counts[d - 1] += 1
            assert np.all(counts == 2)


class TestIndexing:
    @pytest.mark.parametrize(
        "M, P, expect", [(4, 3, (2, 1)), (6, 3, (2, 3)), (7, 3, (3, 1)), (9, 3, (3, 3)), (1, 5, (1, 1))]
    )
    def test_examples(self, M, P, expect):
        assert global_to_subspace(M, P) == expect

    @pytest.mark.parametrize("P", [2, 3, 5])
    def test_recomposition_exhaustive(self, P):
        for M in range(1, 10_001):
            i, m = global_to_subspace(M, P)
            assert 1 <= m <= P
            assert (i - 1) * P + m == M
            assert subspace_to_global(i, m, P) == M

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            global_to_subspace(0, 3)

    def test_layout(self):
        lay = SubspaceLayout(512, 3)
        assert (lay.count, lay.residual) == (170, 2)
        assert lay.count * lay.P + lay.residual == lay.N


class TestScatterGather:
    def test_direct_placement(self):
        lay = SubspaceLayout(3, 3)
        np.testing.assert_array_equal(reconstruct_symbols([[5.0, 7.0]], (1, 2), lay), [5, 7, 0])
        np.testing.assert_array_equal(reconstruct_symbols([[5.0, 7.0]], (2, 3), lay), [0, 5, 7])

    def test_wrapped_row(self):
        lay = SubspaceLayout(9, 3)
        sym = np.array([[1.0, 2.0], [3.0, 4.0], [5.0, 6.0]])
        frame = reconstruct_symbols(sym, (3, 1), lay)
        np.testing.assert_array_equal(frame, [2, 0, 1, 4, 0, 3, 6, 0, 5])

    def test_residual_dimensions_stay_zero(self):
        lay = SubspaceLayout(8, 3)
        frame = reconstruct_symbols(np.ones((2, 2)), (1, 3), lay)
        np.testing.assert_array_equal(frame[6:], 0)

    def test_project_reads_row(self):
        lay = SubspaceLayout(3, 3)
        np.testing.assert_array_equal(project_subspace([1.0, 2.0, 0.0], 1, (2, 3), lay), [2, 0])

    def test_errors(self):
        lay = SubspaceLayout(9, 3)
        with pytest.raises(CountMismatch):
            reconstruct_symbols(np.ones((2, 2)), (1, 2), lay)
        with pytest.raises(RowOutOfRange):
            reconstruct_symbols(np.ones((3, 2)), (1, 4), lay)
        with pytest.raises(IndexOutOfRange):
            project_subspace(np.zeros(9), 4, (1, 2), lay)

    @settings(max_examples=60, deadline=None)
    @given(
        P=st.integers(2, 6),
        N=st.integers(6, 40),
        data=st.data(),
    )
    def test_gather_inverts_scatter(self, P, N, data):
        lay = SubspaceLayout(max(N, P), P)
        row = tuple(data.draw(st.permutations(range(1, P + 1)))[:2])
        sym = np.random.default_rng(N * 7 + P).standard_normal((lay.count, 2))
        frame = reconstruct_symbols(sym, row, lay)
        np.testing.assert_array_equal(project_all(frame, row, lay), sym)
        # at most two non-zero dimensions per subspace
        blocks = frame[: lay.count * P].reshape(lay.count, P)
        assert np.all(np.count_nonzero(blocks, axis=1) <= 2)

    def test_batched_frames(self):
        lay = SubspaceLayout(12, 3)
        sym = np.random.default_rng(0).standard_normal((5, 4, 2))
        frames = reconstruct_symbols(sym, (2, 3), lay)
        assert frames.shape == (5, 12)
        np.testing.assert_array_equal(project_all(frames, (2, 3), lay), sym)
