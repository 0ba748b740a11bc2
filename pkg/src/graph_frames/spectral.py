"""Eigendecomposition of a symmetric graph operator and the graph Fourier pair."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceFailure, DimensionMismatch, MalformedLine
from .graph import GraphOperator

DEFAULT_TOL = 1e-10


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class SpectralBasis:
    """Ascending eigenvalues and orthonormal eigenvectors (as columns) of ``matrix``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray = field(repr=False)
    source_kind: str
    matrix: np.ndarray = field(repr=False)
    ortho_tol: float = DEFAULT_TOL

    def __post_init__(self):
        for name in ("eigenvalues", "eigenvectors", "matrix"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]

    def eigen_residual(self) -> float:
        """max_l ||A chi_l - lambda_l chi_l||_inf / (1 + |lambda_l|)."""
        R = self.matrix @ self.eigenvectors - self.eigenvectors * self.eigenvalues
        return float(np.max(np.abs(R).max(axis=0) / (1 + np.abs(self.eigenvalues))))

    def ortho_residual(self) -> float:
        X = self.eigenvectors
        return float(np.abs(X.conj().T @ X - np.eye(self.n)).max())

    def clusters(self, tol: float | None = None) -> list[np.ndarray]:
        """Index groups of numerically repeated eigenvalues."""
        return eigen_clusters(self.eigenvalues, self.ortho_tol if tol is None else tol)

    def rotated(self, indices, q: np.ndarray) -> "SpectralBasis":
        """Return a basis whose columns ``indices`` are replaced by ``X[:, indices] @ q``.

        ``indices`` must lie inside one eigenvalue cluster and ``q`` must be
        orthogonal, otherwise the result is not a valid decomposition.
        """
        indices = np.asarray(indices)
        lam = self.eigenvalues[indices]
        scale = 1 + np.abs(self.eigenvalues).max()
        if np.ptp(lam) > self.ortho_tol * scale:
            raise ValueError("rotation indices span distinct eigenvalues")
        X = np.array(self.eigenvectors)
        X[:, indices] = X[:, indices] @ q
        out = SpectralBasis(self.eigenvalues, X, self.source_kind, self.matrix, self.ortho_tol)
        _validate(out, self.ortho_tol)
        return out


def eigen_clusters(eigenvalues: np.ndarray, tol: float) -> list[np.ndarray]:
    lam = np.asarray(eigenvalues)
    if lam.size == 0:
        return []
    gap = tol * (1 + np.abs(lam).max())
    groups, start = [], 0
    for k in range(1, lam.size + 1):
        if k == lam.size or lam[k] - lam[k - 1] > gap:
            groups.append(np.arange(start, k))
            start = k
    return groups


def _validate(basis: SpectralBasis, tol: float) -> None:
    if basis.ortho_residual() > tol:
        raise ConvergenceFailure(f"eigenvectors not orthonormal to {tol:g}")
    if basis.eigen_residual() > tol:
        raise ConvergenceFailure(f"eigen residual exceeds {tol:g}")


def decompose(op: GraphOperator, tol: float = DEFAULT_TOL) -> SpectralBasis:
    """Symmetric eigendecomposition with eigenspace re-orthonormalization.

    Column signs are fixed so that the first entry of each eigenvector whose
    magnitude exceeds ``1e-8`` times the column maximum is positive.

    Raises :class:`ConvergenceFailure` if LAPACK does not converge or the
    result misses the residual or orthonormality bounds at ``tol``.
    """
    A = np.asarray(op.matrix, dtype=float)
    try:
        lam, X = np.linalg.eigh(A)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    for idx in eigen_clusters(lam, tol):
        if idx.size > 1:
            q, _ = np.linalg.qr(X[:, idx])
            X[:, idx] = q
    _fix_signs(X)
    basis = SpectralBasis(lam, X, op.kind, A, tol)
    _validate(basis, tol)
    return basis


def _fix_signs(X: np.ndarray) -> None:
    mag = np.abs(X)
    first = np.argmax(mag > 1e-8 * mag.max(axis=0), axis=0)
    signs = np.sign(X[first, np.arange(X.shape[1])])
    signs[signs == 0] = 1
    X *= signs


def _check_len(basis: SpectralBasis, v, what: str) -> np.ndarray:
    v = np.asarray(v)
    if v.shape[:1] != (basis.n,):
        raise DimensionMismatch(f"{what} has length {v.shape[:1]}, expected {basis.n}")
    return v


def gft(basis: SpectralBasis, f) -> np.ndarray:
    """Coefficients ``<f, chi_l>``; works column-wise on a 2-D ``f``."""
    f = _check_len(basis, f, "signal")
    return basis.eigenvectors.conj().T @ f


def igft(basis: SpectralBasis, c) -> np.ndarray:
    c = _check_len(basis, c, "coefficient vector")
    return basis.eigenvectors @ c


def dump_spectrum(basis: SpectralBasis) -> str:
    """``lambda:`` line followed by the rows of the eigenvector matrix."""
    fmt = lambda xs: " ".join(f"{x:.17g}" for x in xs)  # noqa: E731
    lines = [f"kind: {basis.source_kind}", "lambda: " + fmt(basis.eigenvalues)]
    lines += [fmt(row) for row in basis.eigenvectors]
    return "\n".join(lines) + "\n"


def load_spectrum(text: str, matrix: np.ndarray | None = None) -> SpectralBasis:
    """Inverse of :func:`dump_spectrum`.

    Without ``matrix`` the operator is rebuilt as ``X diag(lambda) X^T``.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    kind = "laplacian"
    if lines and lines[0].startswith("kind:"):
        kind = lines.pop(0).split(":", 1)[1].strip()
    if not lines or not lines[0].startswith("lambda:"):
        raise MalformedLine("spectral dump must contain a 'lambda:' line")
    try:
        lam = np.array([float(t) for t in lines[0].split(":", 1)[1].split()])
        X = np.array([[float(t) for t in ln.split()] for ln in lines[1:]])
    except ValueError as exc:
        raise MalformedLine(f"bad spectral dump entry: {exc}") from None
    if X.shape != (lam.size, lam.size):
        raise MalformedLine(f"eigenvector block has shape {X.shape}, expected {(lam.size,) * 2}")
    if matrix is None:
        matrix = (X * lam) @ X.T
        matrix = (matrix + matrix.T) / 2
    return SpectralBasis(lam, X, kind, matrix)
