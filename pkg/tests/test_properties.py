"""Randomised invariants. Each example draws a seed and builds its own graph."""

import numpy as np
from hypothesis import given, settings, strategies as st

from graph_frames import (
    Graph,
    convolve,
    decompose,
    dual_frames_check,
    frame_bounds_oracle,
    laplacian,
    linear_independence_check,
    multi_generator_frame_bounds,
    onb_translates_check,
    translates_matrix,
    wavelet_frame_check,
)
from graph_frames.frames import DEFAULT_TOL, commutation_residual, frame_operator_matrix
from graph_frames.operators import SpectralKernel, multiplier_matrix, signal_from_coefficients as sig
from graph_frames.spectral import gft

from conftest import random_basis, random_complex

seeds = st.integers(0, 2**32 - 1)
fast = settings(max_examples=40, deadline=None)


@fast
@given(seeds)
def test_convolution_algebra(seed):
    rng = np.random.default_rng(seed)
    b = random_basis(rng)
    f, g, h = (random_complex(rng, b.n) for _ in range(3))
    alpha = complex(*rng.standard_normal(2))
    fg = convolve(b, f, g)
    scale = 1e-10 * (1 + np.abs(fg).max())
    assert np.abs(convolve(b, alpha * f, g) - alpha * fg).max() <= scale * (1 + abs(alpha))
    assert np.abs(convolve(b, f, alpha * g) - alpha * fg).max() <= scale * (1 + abs(alpha))
    assert np.abs(convolve(b, g, f) - fg).max() <= scale
    assert np.abs(convolve(b, f, g + h) - fg - convolve(b, f, h)).max() <= 1e-10 * (
        1 + np.abs(convolve(b, f, g + h)).max())
    assert np.abs(multiplier_matrix(b, gft(b, g)) @ f - fg).max() <= scale


@fast
@given(seeds, st.integers(1, 3))
def test_frame_bounds_criterion_equals_oracle(seed, M):
    rng = np.random.default_rng(seed)
    b = random_basis(rng)
    gens = [random_complex(rng, b.n) for _ in range(M)]
    r = multi_generator_frame_bounds(b, gens)
    orc = frame_bounds_oracle(np.column_stack([translates_matrix(b, g) for g in gens]))
    assert abs(r.criterion_bounds.lower - orc.lower) <= 1e-8 * (1 + orc.upper)
    assert abs(r.criterion_bounds.upper - orc.upper) <= 1e-8 * (1 + orc.upper)
    assert r.agreement


@fast
@given(seeds, st.sampled_from([-10.0, 10.0, 0.0, 0.01, -0.01]))
def test_onb_verdicts_agree_near_threshold(seed, offset):
    rng = np.random.default_rng(seed)
    b = random_basis(rng)
    mags = np.full(b.n, 1 / np.sqrt(b.n))
    mags[rng.integers(0, b.n)] += offset * DEFAULT_TOL
    r = onb_translates_check(b, sig(b, mags * np.exp(1j * rng.uniform(0, 2 * np.pi, b.n))))
    assert r.verdict == ("onb" if abs(offset) < 1 else "not_onb")
    assert r.details["oracle_verdict"] == r.verdict


@fast
@given(seeds)
def test_dual_criterion_matches_reconstruction(seed):
    rng = np.random.default_rng(seed)
    b = random_basis(rng)
    M = int(rng.integers(1, 4))
    G = random_complex(rng, b.n, M)
    # choose duals with sum_s conj(g_s) h_s = 1/N, via a least-norm solution per l
    H = G / (b.n * np.sum(np.abs(G) ** 2, axis=1, keepdims=True))
    gens = [sig(b, G[:, s]) for s in range(M)]
    duals = [sig(b, H[:, s]) for s in range(M)]
    r = dual_frames_check(b, gens, duals)
    assert r.verdict == "dual_pair" and r.agreement
    assert r.details["standard_basis_residual"] <= 1e-9

    l = int(rng.integers(0, b.n))
    H[l, 0] += 1e-3 / np.conj(G[l, 0]) * np.exp(1j * rng.uniform(0, 6))
    bad = dual_frames_check(b, gens, [sig(b, H[:, s]) for s in range(M)])
    assert bad.verdict == "not_dual" and bad.agreement
    assert bad.details["standard_basis_residual"] >= 1e-6


@fast
@given(seeds)
def test_commutation_of_frame_operator(seed):
    rng = np.random.default_rng(seed)
    b = random_basis(rng)
    g = random_complex(rng, b.n)
    S = frame_operator_matrix(b, [g])
    f = random_complex(rng, b.n)
    assert commutation_residual(b, S, f) <= 1e-9 * np.linalg.norm(f)


@fast
@given(seeds)
def test_independence_witness_has_nonzero_coefficients(seed):
    rng = np.random.default_rng(seed)
    b = random_basis(rng)
    gh = random_complex(rng, b.n)
    gh[rng.random(b.n) < 0.4] = 0
    m = int(rng.integers(1, b.n + 1))
    r = linear_independence_check(b, sig(b, gh), m)
    if r.verdict == "independent":
        assert r.witnesses is not None and len(r.witnesses) == m
        assert all(abs(gh[l - 1]) > DEFAULT_TOL for l in r.witnesses)
    if np.count_nonzero(gh) < m:
        assert r.verdict == "dependent"


@fast
@given(seeds, st.integers(3, 7))
def test_wavelet_reports_rotation_invariant(seed, n):
    # complete graph: eigenvalue n with multiplicity n - 1
    rng = np.random.default_rng(seed)
    g = Graph.from_edges(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])
    b = decompose(laplacian(g))
    q, _ = np.linalg.qr(rng.standard_normal((n - 1, n - 1)))
    other = b.rotated(np.arange(1, n), q)
    k = SpectralKernel(tuple(rng.standard_normal(3)))
    J = rng.uniform(0.1, 3, int(rng.integers(1, 4)))
    r1, r2 = wavelet_frame_check(b, k, J), wavelet_frame_check(other, k, J)
    assert r1.verdict == r2.verdict
    # criterion bounds only see eigenvalues; oracle bounds carry eps * ||S|| roundoff
    assert r1.criterion_bounds == r2.criterion_bounds
    a, c = r1.oracle_bounds, r2.oracle_bounds
    tol = 1e-9 * (1 + a.upper)
    assert abs(a.lower - c.lower) <= tol and abs(a.upper - c.upper) <= tol
