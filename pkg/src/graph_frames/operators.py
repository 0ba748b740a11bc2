"""Generalized convolution, translation, modulation and dilation on a graph.

All vertex and eigen indices in this module's public API are 1-based.
Signals are plain complex numpy vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import DuplicateAbscissa, IndexOutOfRange, MalformedLine
from .spectral import SpectralBasis, _check_len, gft, igft


def _index(basis: SpectralBasis, i: int, what: str = "vertex") -> int:
    if not 1 <= int(i) <= basis.n:
        raise IndexOutOfRange(f"{what} index {i} outside 1..{basis.n}")
    return int(i) - 1


def delta(n: int, i: int) -> np.ndarray:
    """Kronecker delta at vertex ``i`` (1-based)."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"vertex index {i} outside 1..{n}")
    d = np.zeros(n, dtype=complex)
    d[i - 1] = 1
    return d


def signal_from_coefficients(basis: SpectralBasis, coeffs) -> np.ndarray:
    """Signal with prescribed GFT coefficients (one per eigenpair index)."""
    return igft(basis, np.asarray(coeffs, dtype=complex))


def convolve(basis: SpectralBasis, f, g) -> np.ndarray:
    f = _check_len(basis, f, "f")
    g = _check_len(basis, g, "g")
    return igft(basis, gft(basis, f) * gft(basis, g))


def multiplier_matrix(basis: SpectralBasis, coeffs) -> np.ndarray:
    """``chi diag(coeffs) chi^*``; ``multiplier_matrix(gft(g)) @ f == f * g``."""
    X = basis.eigenvectors
    coeffs = _check_len(basis, coeffs, "coefficient vector")
    return (X * coeffs) @ X.conj().T


def translate(basis: SpectralBasis, f, i: int) -> np.ndarray:
    """``T_i f = sqrt(N) (f * delta_i)``, computed in the spectral domain."""
    k = _index(basis, i)
    f = _check_len(basis, f, "f")
    delta_hat = basis.eigenvectors[k, :].conj()
    return math.sqrt(basis.n) * igft(basis, gft(basis, f) * delta_hat)


def modulate(basis: SpectralBasis, f, i: int) -> np.ndarray:
    """Pointwise product of ``f`` with the ``i``-th eigenvector."""
    k = _index(basis, i, "eigenvector")
    f = _check_len(basis, f, "f")
    return basis.eigenvectors[:, k] * np.asarray(f, dtype=complex)


@dataclass(frozen=True)
class SpectralKernel:
    """Polynomial ``sum_k c_k x^k`` used as a function on the complex plane."""

    coefficients: tuple

    def __post_init__(self):
        c = tuple(complex(x) if np.iscomplexobj(x) else float(x) for x in self.coefficients)
        if not c:
            raise ValueError("kernel needs at least one coefficient")
        object.__setattr__(self, "coefficients", c)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, z):
        return kernel_eval(self, z)


def kernel_eval(k: SpectralKernel, z):
    """Horner evaluation; ``z`` may be a scalar or an array."""
    acc = 0
    for c in reversed(k.coefficients):
        acc = acc * z + c
    return acc * np.ones_like(z) if np.ndim(z) else acc


def kernel_from_lagrange(points: Sequence[tuple[float, complex]]) -> SpectralKernel:
    """Interpolating polynomial through ``(x, y)`` pairs, built from the Lagrange basis."""
    xs = [float(x) for x, _ in points]
    ys = [y for _, y in points]
    if not xs:
        raise ValueError("need at least one interpolation point")
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa(f"abscissae are not pairwise distinct: {xs}")
    complex_y = any(np.iscomplexobj(y) and complex(y).imag != 0 for y in ys)
    coeffs = np.zeros(len(xs), dtype=complex if complex_y else float)
    for k, (xk, yk) in enumerate(zip(xs, ys)):
        others = xs[:k] + xs[k + 1:]
        basis_poly = P.polyfromroots(others) if others else np.array([1.0])
        denom = math.prod(xk - xj for xj in others)
        yk = complex(yk) if complex_y else float(np.real(yk))
        coeffs[: basis_poly.size] += yk * basis_poly / denom
    return SpectralKernel(tuple(coeffs))


def check_scales(scales: Iterable[float]) -> tuple[float, ...]:
    out = tuple(float(s) for s in scales)
    for s in out:
        if not (math.isfinite(s) and s > 0):
            raise ValueError(f"scale {s} is not a finite positive real")
    return out


def dilate_to_signal(basis: SpectralBasis, k: SpectralKernel, s: float) -> np.ndarray:
    """Signal whose GFT coefficient ``l`` is ``k(s * lambda_l)``."""
    (s,) = check_scales([s])
    coeffs = np.asarray(kernel_eval(k, s * basis.eigenvalues), dtype=complex)
    return igft(basis, coeffs)


def _parse_number(token: str) -> complex | float:
    token = token.strip()
    try:
        return float(token)
    except ValueError:
        pass
    try:
        return complex(token.replace("i", "j"))
    except ValueError:
        raise MalformedLine(f"bad numeric token {token!r}") from None


def parse_kernel(text: str) -> SpectralKernel:
    """Read ``poly: c0 c1 ...`` or ``lagrange: x1 y1; x2 y2; ...``.

    Complex tokens may be written ``a+bi`` or ``a+bj``. ``#`` starts a comment.
    """
    body = " ".join(ln.split("#", 1)[0] for ln in text.splitlines()).strip()
    head, sep, rest = body.partition(":")
    head = head.strip().lower()
    if not sep or head not in ("poly", "lagrange"):
        raise MalformedLine("kernel text must start with 'poly:' or 'lagrange:'")
    if head == "poly":
        coeffs = [_parse_number(t) for t in rest.split()]
        if not coeffs:
            raise MalformedLine("'poly:' needs at least one coefficient")
        return SpectralKernel(tuple(coeffs))
    points = []
    for chunk in rest.split(";"):
        if not chunk.strip():
            continue
        tokens = chunk.split()
        if len(tokens) != 2:
            raise MalformedLine(f"lagrange point {chunk.strip()!r} is not 'x y'")
        x = _parse_number(tokens[0])
        if isinstance(x, complex):
            raise MalformedLine(f"abscissa {tokens[0]!r} must be real")
        points.append((x, _parse_number(tokens[1])))
    if not points:
        raise MalformedLine("'lagrange:' needs at least one point")
    return kernel_from_lagrange(points)


def format_kernel(k: SpectralKernel) -> str:
    def tok(c):
        if isinstance(c, complex):
            return f"{c.real:.17g}{c.imag:+.17g}i"
        return f"{c:.17g}"

    return "poly: " + " ".join(tok(c) for c in k.coefficients) + "\n"
