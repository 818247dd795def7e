import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussfano import GradedMatrix, SplittingType, dual_splitting, hilbert_function, kernel_free_basis
from gaussfano.p1mod import S
from gaussfano.ring import Polynomial


def gm(rows, cols, entries):
    return GradedMatrix.from_strings(rows, cols, entries)


class TestHilbertFunction:
    def test_column(self):
        assert hilbert_function(gm((1, 1), (2,), [["s"], ["0"]]), 2) == 3

    def test_zero(self):
        assert hilbert_function(gm((1, 1), (2,), [["0"], ["0"]]), 1) == 2

    @pytest.mark.parametrize("d", [-1, 0, 3])
    def test_identity(self, d):
        assert hilbert_function(gm((0,), (0,), [["1"]]), d) == 0


class TestKernel:
    def test_koszul_row(self):
        K = kernel_free_basis(gm((-2,), (-1, -1), [["-t", "s"]]))
        assert K.col_degrees == (0,)
        assert [str(K.entries[i][0]) for i in range(2)] == ["s", "t"]

    def test_row_with_zero(self):
        K = kernel_free_basis(gm((-2,), (-1, -1), [["s", "0"]]))
        assert K.col_degrees == (-1,)
        assert [str(K.entries[i][0]) for i in range(2)] == ["0", "1"]

    def test_zero_row(self):
        K = kernel_free_basis(gm((-2,), (-1, -1), [["0", "0"]]))
        assert K.col_degrees == (-1, -1)
        assert (gm((-2,), (-1, -1), [["0", "0"]]) @ K).is_zero()

    def test_injective(self):
        K = kernel_free_basis(gm((0,), (0,), [["1"]]))
        assert K.shape[1] == 0


class TestDualSplitting:
    def test_cone_ruling(self):
        assert dual_splitting(gm((1, 1), (2,), [["s"], ["0"]])) == [1]

    def test_quadric_ruling(self):
        assert dual_splitting(gm((1, 1), (2,), [["-t"], ["s"]])) == [0]

    def test_zero_column(self):
        assert dual_splitting(gm((1, 1), (2,), [["0"], ["0"]])) == [1, 1]

    def test_unit_relation(self):
        assert dual_splitting(gm((1, 1), (1,), [["1"], ["0"]])) == [1]

    def test_redundant_column(self):
        phi = gm((1, 1, 1), (2, 3), [["s", "t^2"], ["t", "0"], ["0", "s^2"]])
        extra = [phi.entries[i][0] * S("s*t") + phi.entries[i][1] * S("t") for i in range(3)]
        wider = GradedMatrix((1, 1, 1), (2, 3, 4), [list(phi.entries[i]) + [extra[i]] for i in range(3)])
        assert dual_splitting(wider) == dual_splitting(phi)


def test_splitting_type_value():
    a = SplittingType([-1, 1, 1])
    assert a.degrees == (1, 1, -1)
    assert a.rank == 3 and a.degree == 1
    assert a == [1, 1, -1] and a == SplittingType((1, -1, 1))
    assert str(a) == "O(1) ⊕ O(1) ⊕ O(-1)"
    assert a.to_json() == [1, 1, -1]


def test_degree_mismatch_rejected():
    with pytest.raises(ValueError):
        gm((1, 1), (2,), [["s^2"], ["0"]])


def test_composition_and_transpose_keep_degrees():
    phi = gm((1, 1), (2, 3), [["s", "t^2"], ["t", "s*t"]])
    psi = gm((2, 3), (4,), [["s^2"], ["t"]])
    prod = phi @ psi
    assert prod.row_degrees == (1, 1) and prod.col_degrees == (4,)
    dual = phi.transpose_dual()
    assert dual.row_degrees == (-2, -3) and dual.col_degrees == (-1, -1)


@st.composite
def graded_matrices(draw):
    nrows = draw(st.integers(1, 3))
    ncols = draw(st.integers(1, 3))
    rows = tuple(draw(st.lists(st.integers(0, 1), min_size=nrows, max_size=nrows)))
    cols = tuple(draw(st.lists(st.integers(1, 3), min_size=ncols, max_size=ncols)))
    entries = []
    for r in rows:
        row = []
        for c in cols:
            d = c - r
            coeffs = draw(st.lists(st.integers(-2, 2), min_size=d + 1, max_size=d + 1))
            row.append(Polynomial.from_dict(S, {(d - i, i): a for i, a in enumerate(coeffs)}))
        entries.append(row)
    return GradedMatrix(rows, cols, entries)


@settings(max_examples=60, deadline=None)
@given(graded_matrices())
def test_kernel_and_rank_accounting(phi):
    K = kernel_free_basis(phi)
    assert (phi @ K).is_zero()
    assert K.shape[1] == phi.shape[1] - phi.generic_rank()
    split = dual_splitting(phi)
    assert split.rank == phi.shape[0] - phi.generic_rank()
