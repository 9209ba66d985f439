import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gtsq.matrices import (
    Orientation,
    adjacency_matrix,
    all_orientations,
    delete_principal,
    distance_matrix,
    exp_distance,
    exp_distance_qt,
    is_hermitian,
    laplacian,
    matrix_csv,
    q_laplacian,
    qt_laplacian,
)
from gtsq.trees import path_tree, star_tree
from strategies import labelled_trees, real_q

complex_q = st.complex_numbers(min_magnitude=0.1, max_magnitude=3.0, allow_nan=False, allow_infinity=False)


def _scaled_residual(a, b, target):
    return np.max(np.abs(a @ b - target)) / max(1.0, np.abs(a).sum(1).max() * np.abs(b).sum(1).max())


@given(labelled_trees())
def test_laplacian_is_d_minus_a(t):
    a = adjacency_matrix(t)
    assert np.array_equal(laplacian(t), np.diag(a.sum(1)) - a)


@given(labelled_trees())
def test_q_zero_is_identity(t):
    assert np.array_equal(q_laplacian(t, 0.0), np.eye(t.n))


@given(labelled_trees(min_n=2), real_q)
def test_ed_times_q_laplacian(t, q):
    ed, lap = exp_distance(t, q), q_laplacian(t, q)
    assert _scaled_residual(ed, lap, (1 - q * q) * np.eye(t.n)) <= 1e-12


@given(labelled_trees(min_n=2, max_n=7), complex_q, complex_q, st.data())
def test_ed_qt_times_qt_laplacian(t, q, tt, data):
    flags = data.draw(st.lists(st.booleans(), min_size=t.n - 1, max_size=t.n - 1))
    o = Orientation.from_flags(t, flags)
    ed, lap = exp_distance_qt(t, q, tt, o), qt_laplacian(t, q, tt, o)
    assert _scaled_residual(ed, lap, (1 - q * tt) * np.eye(t.n)) <= 1e-12


@given(labelled_trees(min_n=2), complex_q)
def test_qt_laplacian_hermitian_when_t_is_conjugate(t, q):
    assert is_hermitian(qt_laplacian(t, q, q.conjugate()))


@given(labelled_trees(min_n=2), real_q)
def test_qt_laplacian_reduces_to_q_laplacian(t, q):
    m = qt_laplacian(t, q, q)
    assert np.array_equal(m.real, q_laplacian(t, q))
    assert not m.imag.any()


def test_orientation_must_cover_the_tree():
    t = path_tree(3)
    with pytest.raises(ValueError):
        qt_laplacian(t, 1j, -1j, Orientation(((0, 1),)))
    with pytest.raises(ValueError):
        Orientation(((0, 1), (1, 0)))


def test_all_orientations_count():
    assert len(list(all_orientations(star_tree(5)))) == 16


def test_distance_and_exp_distance_on_path():
    t = path_tree(4)
    d = distance_matrix(t)
    assert d[0, 3] == 3 and d[1, 2] == 1
    assert exp_distance(t, 0.5)[0, 3] == 0.125


def test_delete_principal_keeps_order():
    m = np.arange(16.0).reshape(4, 4)
    assert np.array_equal(delete_principal(m, [1]), m[np.ix_([0, 2, 3], [0, 2, 3])])
    with pytest.raises(ValueError):
        delete_principal(m, range(4))
    with pytest.raises(ValueError):
        delete_principal(m, [7])


def test_matrix_csv_is_exact():
    m = q_laplacian(path_tree(3), 0.1)
    rows = [list(map(float, r.split(","))) for r in matrix_csv(m).splitlines()]
    assert np.array_equal(np.array(rows), m)
    assert "j" in matrix_csv(qt_laplacian(path_tree(2), 1j, -1j))
