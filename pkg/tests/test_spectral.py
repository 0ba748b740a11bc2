import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from graph_frames import decompose, gft, igft, laplacian
from graph_frames.errors import ConvergenceFailure, DimensionMismatch
from graph_frames.graph import GraphOperator
from graph_frames.spectral import dump_spectrum, eigen_clusters, load_spectrum

from conftest import random_complex, random_connected_graph

S2 = 1 / np.sqrt(2)


def test_star_eigenvalues(star):
    np.testing.assert_allclose(star.eigenvalues, [0, 1, 1, 4], atol=1e-10)
    assert star.source_kind == "laplacian"


def test_p2_by_hand(p2):
    # det([[1-x, -1], [-1, 1-x]]) = x (x - 2)
    np.testing.assert_allclose(p2.eigenvalues, [0, 2], atol=1e-12)
    np.testing.assert_allclose(p2.eigenvectors, [[S2, S2], [S2, -S2]], atol=1e-12)


def test_sign_convention(star):
    X = star.eigenvectors
    np.testing.assert_allclose(X[:, 0], [0.5] * 4, atol=1e-15)
    np.testing.assert_allclose(X[:, 3], np.array([3, -1, -1, -1]) / np.sqrt(12), atol=1e-15)
    assert np.all(X[np.argmax(np.abs(X) > 1e-8, axis=0), range(4)] > 0)


def test_zero_matrix():
    b = decompose(GraphOperator("adjacency", np.zeros((3, 3))))
    np.testing.assert_array_equal(b.eigenvalues, 0)
    np.testing.assert_allclose(b.eigenvectors.T @ b.eigenvectors, np.eye(3), atol=1e-12)


def test_invariants_on_random_graphs(rng):
    for _ in range(20):
        b = decompose(laplacian(random_connected_graph(rng, int(rng.integers(2, 40)))))
        assert np.all(np.diff(b.eigenvalues) >= 0)
        assert b.ortho_residual() <= 1e-10
        assert b.eigen_residual() <= 1e-10


def test_repeated_eigenspace_orthonormal(star):
    idx = star.clusters()[1]
    assert list(idx) == [1, 2]
    block = star.eigenvectors[:, idx]
    np.testing.assert_allclose(block.T @ block, np.eye(2), atol=1e-12)


def test_eigen_clusters():
    groups = eigen_clusters(np.array([0, 1, 1 + 1e-14, 4]), 1e-10)
    assert [list(g) for g in groups] == [[0], [1, 2], [3]]


def test_convergence_failure(monkeypatch, star_graph):
    def broken(_):
        raise np.linalg.LinAlgError("Eigenvalues did not converge")

    monkeypatch.setattr(np.linalg, "eigh", broken)
    with pytest.raises(ConvergenceFailure):
        decompose(laplacian(star_graph))


def test_gft_of_delta(star):
    for i in range(4):
        d = np.zeros(4)
        d[i] = 1
        np.testing.assert_allclose(gft(star, d), star.eigenvectors[i].conj(), atol=1e-15)


def test_gft_of_eigenvector(star):
    np.testing.assert_allclose(gft(star, star.eigenvectors[:, 0]), [1, 0, 0, 0], atol=1e-15)


def test_p2_transform_pair(p2):
    c = gft(p2, [1, 0])
    np.testing.assert_allclose(np.abs(c), [S2, S2], atol=1e-15)
    np.testing.assert_allclose(c, p2.eigenvectors[0], atol=1e-15)
    np.testing.assert_allclose(igft(p2, c), [1, 0], atol=1e-15)


def test_igft_of_unit_coefficient(star):
    for l in range(4):
        e = np.zeros(4)
        e[l] = 1
        np.testing.assert_allclose(igft(star, e), star.eigenvectors[:, l], atol=1e-15)


def test_dimension_mismatch(star):
    with pytest.raises(DimensionMismatch):
        gft(star, [1, 2, 3])
    with pytest.raises(DimensionMismatch):
        igft(star, np.ones(5))


def test_dump_roundtrip(star):
    back = load_spectrum(dump_spectrum(star))
    np.testing.assert_array_equal(back.eigenvalues, star.eigenvalues)
    np.testing.assert_array_equal(back.eigenvectors, star.eigenvectors)
    assert back.source_kind == "laplacian"
    np.testing.assert_allclose(back.matrix, star.matrix, atol=1e-14)


def test_rotated_basis_is_valid(star):
    t = 0.7
    q = np.array([[np.cos(t), -np.sin(t)], [np.sin(t), np.cos(t)]])
    r = star.rotated([1, 2], q)
    assert not np.allclose(r.eigenvectors, star.eigenvectors)
    assert r.ortho_residual() < 1e-12 and r.eigen_residual() < 1e-12
    with pytest.raises(ValueError):
        star.rotated([2, 3], q)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_parseval_and_reconstruction(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 65))
    b = decompose(laplacian(random_connected_graph(rng, n))) if n > 1 else decompose(
        GraphOperator("laplacian", np.zeros((1, 1))))
    f, g = random_complex(rng, n), random_complex(rng, n)
    lhs = np.vdot(g, f)
    rhs = np.vdot(gft(b, g), gft(b, f))
    assert abs(lhs - rhs) <= 1e-10 * np.linalg.norm(f) * np.linalg.norm(g)
    assert np.abs(igft(b, gft(b, f)) - f).max() <= 1e-12 * np.linalg.norm(f)
    c = random_complex(rng, n)
    assert np.abs(gft(b, igft(b, c)) - c).max() <= 1e-12 * np.linalg.norm(c)
