"""Frame-theoretic checks for systems of generalized translates.

Every check decides its property twice: once from a spectral criterion that
only looks at GFT coefficients of the generators, and once from a dense
vertex-domain oracle built out of the actual translate vectors (Gram
matrices, frame operators, singular values, reconstruction residuals).
Both outcomes go into the returned :class:`FrameReport`.

Thresholds are chosen so that each oracle tests the same quantity as its
criterion. For example the translate matrix ``U = [T_1 g ... T_N g]`` equals
``sqrt(N) g_hat(A)``, whose singular values are ``sqrt(N) |g_hat(lambda_l)|``,
so the orthonormal-basis oracle thresholds ``max |sigma - 1|`` at
``sqrt(N) * tol``.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .errors import (
    EmptyScaleSet,
    EmptySystem,
    GeneratorCountMismatch,
    IndexOutOfRange,
    NumericalFailure,
    SingularFrameOperator,
)
from .operators import SpectralKernel, check_scales, kernel_eval, modulate, translate
from .spectral import SpectralBasis, _check_len, gft, igft

DEFAULT_TOL = 1e-9
AGREEMENT_RTOL = 1e-8

VERDICTS = (
    "frame", "not_frame",
    "onb", "not_onb",
    "biorthogonal", "not_biorthogonal",
    "independent", "dependent",
    "orthonormal", "not_orthonormal",
    "dual_pair", "not_dual",
)


@dataclass(frozen=True)
class FrameBounds:
    lower: float
    upper: float

    def __post_init__(self):
        if self.lower < 0 or self.upper < self.lower:
            raise ValueError(f"invalid frame bounds ({self.lower}, {self.upper})")

    def to_dict(self) -> dict:
        return {"A": self.lower, "B": self.upper}

    @classmethod
    def from_dict(cls, d: dict) -> "FrameBounds":
        return cls(float(d["A"]), float(d["B"]))


@dataclass
class FrameReport:
    system: str
    verdict: str
    criterion_bounds: FrameBounds
    oracle_bounds: FrameBounds
    agreement: bool
    max_deviation: float
    per_eigenvalue_energy: list = field(default_factory=list)
    witnesses: list | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    def to_dict(self) -> dict:
        return {
            "system": self.system,
            "criterion_bounds": self.criterion_bounds.to_dict(),
            "oracle_bounds": self.oracle_bounds.to_dict(),
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "per_eigenvalue_energy": [float(x) for x in self.per_eigenvalue_energy],
            "max_deviation": float(self.max_deviation),
            "agreement": bool(self.agreement),
            "details": _jsonable(self.details),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "FrameReport":
        return cls(
            system=d["system"],
            verdict=d["verdict"],
            criterion_bounds=FrameBounds.from_dict(d["criterion_bounds"]),
            oracle_bounds=FrameBounds.from_dict(d["oracle_bounds"]),
            agreement=bool(d["agreement"]),
            max_deviation=float(d["max_deviation"]),
            per_eigenvalue_energy=list(d.get("per_eigenvalue_energy", [])),
            witnesses=d.get("witnesses"),
            details=dict(d.get("details", {})),
        )

    @classmethod
    def from_json(cls, text: str) -> "FrameReport":
        return cls.from_dict(json.loads(text))


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    return obj


def frame_threshold(upper: float, tol: float | None = None) -> float:
    """Scale-aware zero test for the lower frame bound."""
    return tol if tol is not None else 1e-10 * (upper + 1)


def _bounds_agree(crit: FrameBounds, orc: FrameBounds) -> tuple[bool, float]:
    dev = max(abs(crit.lower - orc.lower), abs(crit.upper - orc.upper))
    ok = (abs(crit.lower - orc.lower) <= AGREEMENT_RTOL * (1 + orc.lower)
          and abs(crit.upper - orc.upper) <= AGREEMENT_RTOL * (1 + orc.upper))
    return ok, dev


def _criterion_bounds(n: int, energy: np.ndarray) -> FrameBounds:
    return FrameBounds(n * float(energy.min()), n * float(energy.max()))


def _count(basis: SpectralBasis, m: int | None) -> int:
    m = basis.n if m is None else int(m)
    if not 1 <= m <= basis.n:
        raise IndexOutOfRange(f"translate count {m} outside 1..{basis.n}")
    return m


# --- oracles -----------------------------------------------------------------

def translates_matrix(basis: SpectralBasis, g, m: int | None = None) -> np.ndarray:
    """``N x m`` matrix whose column ``i`` is ``T_{i+1} g``."""
    m = _count(basis, m)
    g = _check_len(basis, g, "generator")
    return np.column_stack([translate(basis, g, i) for i in range(1, m + 1)])


def frame_bounds_oracle(vectors) -> FrameBounds:
    """Extreme eigenvalues of ``S = sum_k v_k v_k^*``.

    ``vectors`` is a sequence of equal-length vectors or a matrix whose
    columns are the vectors.
    """
    if isinstance(vectors, np.ndarray) and vectors.ndim == 2:
        V = vectors
    else:
        vectors = list(vectors)
        if not vectors:
            raise EmptySystem("no vectors given")
        V = np.column_stack(vectors)
    if V.shape[1] == 0:
        raise EmptySystem("no vectors given")
    return _bounds_from_operator(V @ V.conj().T)


def _bounds_from_operator(S: np.ndarray) -> FrameBounds:
    S = (S + S.conj().T) / 2
    ev = np.linalg.eigvalsh(S)
    hi = max(float(ev[-1]), 0.0)
    return FrameBounds(min(max(float(ev[0]), 0.0), hi), hi)


def frame_operator_matrix(basis: SpectralBasis, gens: Sequence) -> np.ndarray:
    """``S = sum_{i,s} (T_i g_s)(T_i g_s)^*`` assembled from the translates."""
    S = np.zeros((basis.n, basis.n), dtype=complex)
    for g in gens:
        U = translates_matrix(basis, g)
        S += U @ U.conj().T
    return S


# --- single-generator checks -------------------------------------------------

def _single_bounds(basis, g_hat, U):
    energy = np.abs(g_hat) ** 2
    crit = _criterion_bounds(basis.n, energy)
    orc = frame_bounds_oracle(U)
    ok, dev = _bounds_agree(crit, orc)
    return energy, crit, orc, ok, dev


def onb_translates_check(basis: SpectralBasis, g, tol: float = DEFAULT_TOL) -> FrameReport:
    """Is ``{T_i g}`` an orthonormal basis? Criterion: ``|g_hat| == 1/sqrt(N)``."""
    n = basis.n
    g_hat = gft(basis, g)
    crit_dev = float(np.max(np.abs(np.abs(g_hat) - 1 / math.sqrt(n))))
    crit_ok = crit_dev <= tol

    U = translates_matrix(basis, g)
    sigma = np.linalg.svd(U, compute_uv=False)
    oracle_dev = float(np.max(np.abs(sigma - 1))) / math.sqrt(n)
    oracle_ok = oracle_dev <= tol
    gram_dev = float(np.abs(U.conj().T @ U - np.eye(n)).max())

    energy, crit, orc, bounds_ok, dev = _single_bounds(basis, g_hat, U)
    return FrameReport(
        system=f"translates {{T_i g : 1<=i<={n}}}",
        verdict="onb" if crit_ok else "not_onb",
        criterion_bounds=crit,
        oracle_bounds=orc,
        agreement=bounds_ok and crit_ok == oracle_ok,
        max_deviation=dev,
        per_eigenvalue_energy=list(energy),
        details={
            "criterion_deviation": crit_dev,
            "oracle_singular_value_deviation": oracle_dev,
            "oracle_verdict": "onb" if oracle_ok else "not_onb",
            "gram_deviation": gram_dev,
        },
    )


def biorthogonality_check(basis: SpectralBasis, g, h, tol: float = DEFAULT_TOL) -> FrameReport:
    """Are ``{T_i g}`` and ``{T_i h}`` biorthogonal? Criterion: ``N conj(g_hat) h_hat == 1``."""
    n = basis.n
    g_hat, h_hat = gft(basis, g), gft(basis, h)
    crit_dev = float(np.max(np.abs(n * g_hat.conj() * h_hat - 1)))
    crit_ok = crit_dev <= tol

    Ug, Uh = translates_matrix(basis, g), translates_matrix(basis, h)
    # cross[i, j] = <T_i g, T_j h>
    cross = Ug.T @ Uh.conj()
    resid = cross - np.eye(n)
    oracle_dev = float(np.linalg.norm(resid, 2))
    oracle_ok = oracle_dev <= tol

    energy, crit, orc, bounds_ok, dev = _single_bounds(basis, g_hat, Ug)
    return FrameReport(
        system=f"translates {{T_i g}} vs {{T_i h}}, N={n}",
        verdict="biorthogonal" if crit_ok else "not_biorthogonal",
        criterion_bounds=crit,
        oracle_bounds=orc,
        agreement=bounds_ok and crit_ok == oracle_ok,
        max_deviation=dev,
        per_eigenvalue_energy=list(energy),
        details={
            "criterion_deviation": crit_dev,
            "oracle_cross_gram_norm_deviation": oracle_dev,
            "oracle_verdict": "biorthogonal" if oracle_ok else "not_biorthogonal",
            "cross_gram_max_entry_deviation": float(np.abs(resid).max()),
        },
    )


def _numerical_rank(sigma: np.ndarray, tol: float, scale: float | None = None) -> int:
    scale = sigma.max(initial=0.0) if scale is None else scale
    if scale == 0:
        return 0
    return int(np.sum(sigma > tol * scale))


def independence_witness(basis: SpectralBasis, g_hat, m: int, tol: float = DEFAULT_TOL):
    """Indices ``l_1 < ... < l_m`` (1-based) giving a nonsingular ``m x m`` minor.

    Works on the ``m x N`` matrix ``B[i, l] = g_hat(l) conj(chi_l(i))`` and
    greedily keeps each column, in index order, that raises the numerical
    rank. This yields the lexicographically smallest column basis. Columns
    with ``|g_hat(l)| <= tol`` are never selected. Returns ``None`` if fewer
    than ``m`` columns qualify.
    """
    g_hat = np.asarray(g_hat)
    B = basis.eigenvectors[:m, :].conj() * g_hat
    scale = np.linalg.norm(B, 2)
    chosen = []
    for l in range(basis.n):
        if abs(g_hat[l]) <= tol:
            continue
        trial = chosen + [l]
        sigma = np.linalg.svd(B[:, trial], compute_uv=False)
        if _numerical_rank(sigma, tol, scale) == len(trial):
            chosen = trial
            if len(chosen) == m:
                return [l + 1 for l in chosen]
    return None


def linear_independence_check(basis: SpectralBasis, g, m: int, tol: float = DEFAULT_TOL) -> FrameReport:
    """Is ``{T_1 g, ..., T_m g}`` linearly independent?

    The verdict comes from the numerical rank of the translate matrix. The
    spectral side is only partially decisive: all ``g_hat`` nonzero implies
    independence, fewer than ``m`` nonzero coefficients implies dependence.
    """
    m = _count(basis, m)
    g_hat = gft(basis, g)
    nonzero = int(np.sum(np.abs(g_hat) > tol))
    sufficient = nonzero == basis.n
    if sufficient:
        crit_verdict = "independent"
    elif nonzero < m:
        crit_verdict = "dependent"
    else:
        crit_verdict = None

    Um = translates_matrix(basis, g, m)
    sigma = np.linalg.svd(Um, compute_uv=False)
    rank = _numerical_rank(sigma, tol)
    verdict = "independent" if rank == m else "dependent"
    witnesses = independence_witness(basis, g_hat, m, tol) if verdict == "independent" else None

    U = Um if m == basis.n else translates_matrix(basis, g)
    energy, crit, orc, bounds_ok, dev = _single_bounds(basis, g_hat, U)
    consistent = crit_verdict in (None, verdict)
    if verdict == "independent":
        consistent = consistent and witnesses is not None
    return FrameReport(
        system=f"translates {{T_i g : 1<=i<={m}}}, N={basis.n}",
        verdict=verdict,
        criterion_bounds=crit,
        oracle_bounds=orc,
        agreement=bounds_ok and consistent,
        max_deviation=dev,
        per_eigenvalue_energy=list(energy),
        witnesses=witnesses,
        details={
            "rank": rank,
            "m": m,
            "nonzero_coefficients": nonzero,
            "sufficient_condition": sufficient,
            "criterion_verdict": crit_verdict,
            "bounds_refer_to": "full translate system",
        },
    )


def orthonormal_subsystem_check(basis: SpectralBasis, g, m: int, tol: float = DEFAULT_TOL) -> FrameReport:
    """Is ``{T_1 g, ..., T_m g}`` orthonormal?

    Decided from the singular values of the ``N x m`` translate matrix. When
    exactly ``m`` coefficients are nonzero, the magnitude identity
    ``|g_hat(l_k)| = 1 / (sqrt(N) sqrt(sum_{q<=m} |chi_{l_k}(q)|^2))`` is
    evaluated as well and its residual reported.
    """
    m = _count(basis, m)
    n = basis.n
    g_hat = gft(basis, g)
    Um = translates_matrix(basis, g, m)
    sigma = np.linalg.svd(Um, compute_uv=False)
    oracle_dev = float(np.max(np.abs(sigma - 1))) / math.sqrt(n)
    orthonormal = oracle_dev <= tol
    gram_dev = float(np.abs(Um.conj().T @ Um - np.eye(m)).max())

    sufficient = float(np.max(np.abs(np.abs(g_hat) - 1 / math.sqrt(n)))) <= tol
    support = np.flatnonzero(np.abs(g_hat) > tol)
    formula_residual = None
    if support.size == m:
        mass = np.sum(np.abs(basis.eigenvectors[:m, support]) ** 2, axis=0)
        with np.errstate(divide="ignore"):
            predicted = 1 / (math.sqrt(n) * np.sqrt(mass))
        formula_residual = float(np.max(np.abs(np.abs(g_hat[support]) - predicted)))

    consistent = not (sufficient and not orthonormal)
    if orthonormal and formula_residual is not None:
        consistent = consistent and formula_residual <= math.sqrt(n) * tol

    U = Um if m == n else translates_matrix(basis, g)
    energy, crit, orc, bounds_ok, dev = _single_bounds(basis, g_hat, U)
    return FrameReport(
        system=f"translates {{T_i g : 1<=i<={m}}}, N={n}",
        verdict="orthonormal" if orthonormal else "not_orthonormal",
        criterion_bounds=crit,
        oracle_bounds=orc,
        agreement=bounds_ok and consistent,
        max_deviation=dev,
        per_eigenvalue_energy=list(energy),
        witnesses=[int(l) + 1 for l in support] if support.size == m else None,
        details={
            "m": m,
            "gram_deviation": gram_dev,
            "singular_value_deviation": oracle_dev,
            "sufficient_condition": sufficient,
            "unique_subcollection": bool(support.size == m),
            "formula_residual": formula_residual,
            "bounds_refer_to": "full translate system",
        },
    )


# --- frames with several generators ------------------------------------------

def _frame_report(basis, system, energy, vectors_or_S, *, tol=None, details=None, is_operator=False):
    crit = _criterion_bounds(basis.n, np.asarray(energy, dtype=float))
    orc = _bounds_from_operator(vectors_or_S) if is_operator else frame_bounds_oracle(vectors_or_S)
    ok, dev = _bounds_agree(crit, orc)
    is_frame = crit.lower > frame_threshold(crit.upper, tol)
    oracle_frame = orc.lower > frame_threshold(orc.upper, tol)
    details = dict(details or {})
    details["oracle_verdict"] = "frame" if oracle_frame else "not_frame"
    return FrameReport(
        system=system,
        verdict="frame" if is_frame else "not_frame",
        criterion_bounds=crit,
        oracle_bounds=orc,
        agreement=ok,
        max_deviation=dev,
        per_eigenvalue_energy=list(energy),
        details=details,
    )


def multi_generator_frame_bounds(basis: SpectralBasis, gens: Sequence, tol: float | None = None) -> FrameReport:
    """Frame bounds of ``{T_i g_s}``: ``N min_l / max_l sum_s |g_s_hat(lambda_l)|^2``."""
    gens = list(gens)
    if not gens:
        raise EmptySystem("need at least one generator")
    G_hat = np.column_stack([gft(basis, g) for g in gens])
    energy = np.sum(np.abs(G_hat) ** 2, axis=1)
    S = frame_operator_matrix(basis, gens)
    return _frame_report(
        basis, f"translates {{T_i g_s}}, N={basis.n}, M={len(gens)}", energy, S,
        tol=tol, is_operator=True, details={"coefficients": "index-based"},
    )


def wavelet_energy(basis: SpectralBasis, k: SpectralKernel, scales) -> np.ndarray:
    """``sum_{s in J} |k(s lambda_l)|^2``; depends on the eigenvalues only."""
    lam = basis.eigenvalues
    return sum(np.abs(np.asarray(kernel_eval(k, s * lam), dtype=complex)) ** 2 for s in scales)


def wavelet_frame_check(basis: SpectralBasis, k: SpectralKernel, scales, tol: float | None = None) -> FrameReport:
    """Frame test for the spectral graph wavelet system ``{T_i D_s g : s in J}``."""
    scales = check_scales(scales)
    if not scales:
        raise EmptyScaleSet("scale set is empty")
    gens = [igft(basis, np.asarray(kernel_eval(k, s * basis.eigenvalues), dtype=complex)) for s in scales]
    energy = wavelet_energy(basis, k, scales)
    S = frame_operator_matrix(basis, gens)
    return _frame_report(
        basis, f"wavelet {{T_i D_s g}}, N={basis.n}, J={list(scales)}", energy, S,
        tol=tol, is_operator=True,
        details={"coefficients": "kernel", "scales": list(scales)},
    )


def modulation_energy(basis: SpectralBasis, g) -> np.ndarray:
    """``sum_n |chi_l(n)|^2 |g(n)|^2`` for every ``l``."""
    g = _check_len(basis, g, "generator")
    return (np.abs(basis.eigenvectors) ** 2).T @ (np.abs(g) ** 2)


def modulation_frame_check(basis: SpectralBasis, g, tol: float | None = None) -> FrameReport:
    """Frame test for ``{T_i M_s g : 1 <= i, s <= N}``."""
    energy = modulation_energy(basis, g)
    gens = [modulate(basis, g, s) for s in range(1, basis.n + 1)]
    S = frame_operator_matrix(basis, gens)
    return _frame_report(
        basis, f"modulated translates {{T_i M_s g}}, N={basis.n}", energy, S,
        tol=tol, is_operator=True, details={"coefficients": "index-based"},
    )


def reconstruction_operator(basis: SpectralBasis, gens: Sequence, duals: Sequence) -> np.ndarray:
    """``R`` with ``R f = sum_{i,s} <f, T_i g_s> T_i h_s``."""
    R = np.zeros((basis.n, basis.n), dtype=complex)
    for g, h in zip(gens, duals):
        R += translates_matrix(basis, h) @ translates_matrix(basis, g).conj().T
    return R


def dual_frames_check(basis: SpectralBasis, gens: Sequence, duals: Sequence,
                      tol: float = DEFAULT_TOL, seed: int = 0) -> FrameReport:
    """Do ``{T_i g_s}`` and ``{T_i h_s}`` form dual frames?

    Criterion: ``sum_s conj(g_s_hat) h_s_hat == 1/N``. Oracle: reconstruct
    the standard basis and a random basis through the two systems.
    """
    gens, duals = list(gens), list(duals)
    if len(gens) != len(duals):
        raise GeneratorCountMismatch(f"{len(gens)} generators vs {len(duals)} duals")
    if not gens:
        raise EmptySystem("need at least one generator")
    n = basis.n
    G_hat = np.column_stack([gft(basis, g) for g in gens])
    H_hat = np.column_stack([gft(basis, h) for h in duals])
    cross = np.sum(G_hat.conj() * H_hat, axis=1)
    crit_dev = float(np.max(np.abs(cross - 1 / n)))
    crit_ok = crit_dev <= tol

    R = reconstruction_operator(basis, gens, duals)
    resid = R - np.eye(n)
    oracle_norm = float(np.linalg.norm(resid, 2))
    oracle_ok = oracle_norm <= n * tol
    rng = np.random.default_rng(seed)
    F = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    F /= np.linalg.norm(F, axis=0)
    std_resid = float(np.linalg.norm(resid, axis=0).max())
    rand_resid = float(np.linalg.norm(resid @ F, axis=0).max())

    energy = np.sum(np.abs(G_hat) ** 2, axis=1)
    crit = _criterion_bounds(n, energy)
    orc = _bounds_from_operator(frame_operator_matrix(basis, gens))
    bounds_ok, dev = _bounds_agree(crit, orc)
    return FrameReport(
        system=f"translates {{T_i g_s}} vs {{T_i h_s}}, N={n}, M={len(gens)}",
        verdict="dual_pair" if crit_ok else "not_dual",
        criterion_bounds=crit,
        oracle_bounds=orc,
        agreement=bounds_ok and crit_ok == oracle_ok,
        max_deviation=dev,
        per_eigenvalue_energy=list(energy),
        details={
            "criterion_deviation": crit_dev,
            "reconstruction_operator_norm_deviation": oracle_norm,
            "standard_basis_residual": std_resid,
            "random_basis_residual": rand_resid,
            "oracle_verdict": "dual_pair" if oracle_ok else "not_dual",
        },
    )


# --- canonical duals -----------------------------------------------------------

def canonical_dual_coefficients(g_hat, n: int) -> np.ndarray:
    g_hat = np.asarray(g_hat, dtype=complex)
    return g_hat / (n * np.abs(g_hat) ** 2)


def commutation_residual(basis: SpectralBasis, S: np.ndarray, f) -> float:
    """``max_i ||S T_i f - T_i S f||_inf``."""
    f = np.asarray(f, dtype=complex)
    Sf = S @ f
    return max(
        float(np.abs(S @ translate(basis, f, i) - translate(basis, Sf, i)).max())
        for i in range(1, basis.n + 1)
    )


def canonical_dual_verification(basis: SpectralBasis, g, h, tol: float = DEFAULT_TOL) -> dict:
    """Residuals tying the closed-form dual ``h`` to the assembled frame operator."""
    g = np.asarray(g, dtype=complex)
    S = frame_operator_matrix(basis, [g])
    Sinv_g = np.linalg.solve(S, g)
    Sinv_T = np.linalg.solve(S, translates_matrix(basis, g))
    T_h = translates_matrix(basis, h)
    report = dual_frames_check(basis, [g], [h], tol)
    return {
        "inverse_residual": float(np.abs(Sinv_g - h).max()),
        "commutation_residual": float(np.abs(Sinv_T - T_h).max(axis=0).max()),
        "dual_verdict": report.verdict,
        "reconstruction_residual": report.details["standard_basis_residual"],
    }


def canonical_dual_generator(basis: SpectralBasis, g, tol: float = DEFAULT_TOL, verify: bool = True) -> np.ndarray:
    """Generator ``h = S^{-1} g`` of the canonical dual ``{T_i h}``.

    Computed in closed form, ``h_hat = g_hat / (N |g_hat|^2)``. With
    ``verify`` the result is cross-checked against a numerically inverted
    frame operator, translate-wise, and through the duality test.
    """
    g = _check_len(basis, g, "generator")
    g_hat = gft(basis, g)
    if np.min(np.abs(g_hat)) <= tol:
        raise SingularFrameOperator(
            f"min |g_hat| = {np.min(np.abs(g_hat)):.3g} <= {tol:g}; the translates are not a frame")
    h = igft(basis, canonical_dual_coefficients(g_hat, basis.n))
    if verify:
        v = canonical_dual_verification(basis, g, h, tol)
        scale = max(1.0, float(np.abs(h).max()) * math.sqrt(basis.n))
        if v["dual_verdict"] != "dual_pair":
            raise NumericalFailure(f"canonical dual fails the duality test: {v}")
        if v["inverse_residual"] > 1e-8 * scale or v["commutation_residual"] > 1e-9 * scale:
            raise NumericalFailure(f"canonical dual disagrees with S^-1: {v}")
    return h


def shift_invariance_residual(basis: SpectralBasis, g, coeffs, k: int) -> float:
    """Distance from ``T_k f`` to ``span{T_i g}`` for ``f = sum_i coeffs_i T_i g``."""
    if not 1 <= int(k) <= basis.n:
        raise IndexOutOfRange(f"vertex index {k} outside 1..{basis.n}")
    U = translates_matrix(basis, g)
    f = U @ _check_len(basis, coeffs, "coefficient vector")
    t = translate(basis, f, k)
    x, *_ = np.linalg.lstsq(U, t, rcond=None)
    return float(np.linalg.norm(U @ x - t))
