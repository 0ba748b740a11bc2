"""Command-line front end for frame checks on graph translates.

Exit codes: 0 success or positive verdict, 1 negative verdict, 2 usage or
I/O error, 3 parse error, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateAbscissa,
    EmptyScaleSet,
    GraphParseError,
    IndexOutOfRange,
    NumericalFailure,
)
from .frames import (
    DEFAULT_TOL,
    FrameReport,
    canonical_dual_generator,
    dual_frames_check,
    linear_independence_check,
    modulation_frame_check,
    multi_generator_frame_bounds,
    onb_translates_check,
    orthonormal_subsystem_check,
    wavelet_frame_check,
)
from .graph import connectivity_check, graph_operator, laplacian, parse_edge_list
from .operators import kernel_eval, parse_kernel, _parse_number
from .spectral import decompose, dump_spectrum, igft

log = logging.getLogger("graph_frames")

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_PARSE, EXIT_NUMERIC = 0, 1, 2, 3, 4

STAR_EDGES = "1 2\n1 3\n1 4\n"
STAR_LAPLACIAN = [[3, -1, -1, -1], [-1, 1, 0, 0], [-1, 0, 1, 0], [-1, 0, 0, 1]]
STAR_EIGENVALUES = [0.0, 1.0, 1.0, 4.0]
STAR_KERNEL_POINTS = [(0.0, 1.0), (1.0, 1.0), (4.0, 0.0)]
STAR_KERNEL_COEFFS = [1.0, 1 / 12, -1 / 12]
STAR_SPECTRAL_VALUES = [1.0, 1.0, 1.0, 0.0]


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    graph_path: str | None = None
    n: int | None = None
    operator_kind: str = "laplacian"
    kernel_path: str | None = None
    ghat: list = field(default_factory=list)
    hhat: list = field(default_factory=list)
    signal: str | None = None
    scales: list | None = None
    m: int | None = None
    check: str = "frame"
    tol: float = DEFAULT_TOL
    output: str = "json"

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        scales = None
        if getattr(ns, "scales", None) is not None:
            scales = parse_scales(ns.scales)
        return cls(
            command=ns.command,
            graph_path=getattr(ns, "graph", None),
            n=getattr(ns, "n", None),
            operator_kind=getattr(ns, "operator", "laplacian"),
            kernel_path=getattr(ns, "kernel", None),
            ghat=getattr(ns, "ghat", None) or [],
            hhat=getattr(ns, "hhat", None) or [],
            signal=getattr(ns, "signal", None),
            scales=scales,
            m=getattr(ns, "m", None),
            check=getattr(ns, "check", "frame"),
            tol=ns.tol,
            output=ns.output,
        )


def parse_scales(text: str) -> list[float]:
    tokens = [t for t in text.replace(";", ",").split(",") if t.strip()]
    if not tokens:
        raise UsageError("scale list is empty")
    try:
        scales = [float(t) for t in tokens]
    except ValueError:
        raise UsageError(f"bad scale list {text!r}") from None
    if any(not (s > 0 and np.isfinite(s)) for s in scales):
        raise UsageError("scales must be finite positive reals")
    return scales


def parse_vector(text: str, n: int, what: str) -> np.ndarray:
    tokens = [t for t in text.split(",") if t.strip()]
    v = np.array([_parse_number(t) for t in tokens], dtype=complex)
    if v.size != n:
        raise UsageError(f"{what} has {v.size} entries, graph has {n} vertices")
    return v


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def load_basis(cfg: RunConfig):
    if cfg.graph_path is None:
        raise UsageError("--graph is required")
    g = parse_edge_list(_read(cfg.graph_path), cfg.n)
    conn = connectivity_check(g)
    if not conn.connected:
        log.warning("graph has %d connected components", conn.components)
    op = graph_operator(g, cfg.operator_kind)
    return g, decompose(op, min(cfg.tol, 1e-10))


def _generators(cfg: RunConfig, basis, which: str = "ghat") -> list:
    """Generators as vertex-domain signals, from --ghat lists or --kernel."""
    lists = getattr(cfg, which)
    if lists:
        return [igft(basis, parse_vector(t, basis.n, f"--{which}")) for t in lists]
    if which == "ghat" and cfg.kernel_path:
        k = parse_kernel(_read(cfg.kernel_path))
        return [igft(basis, np.asarray(kernel_eval(k, basis.eigenvalues), dtype=complex))]
    return []


def _emit(cfg: RunConfig, payload: dict, out) -> None:
    if cfg.output == "json":
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        for key, value in payload.items():
            out.write(f"{key}: {_fmt(value)}\n")


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}={_fmt(v)}" for k, v in value.items()) + "}"
    if isinstance(value, list):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return str(value)


def _verdict_exit(report: FrameReport) -> int:
    negative = report.verdict.startswith("not_") or report.verdict == "dependent"
    return EXIT_NEGATIVE if negative else EXIT_OK


def cmd_spectrum(cfg: RunConfig, out=sys.stdout) -> int:
    g, basis = load_basis(cfg)
    if cfg.output == "text":
        out.write(dump_spectrum(basis))
        out.write(f"eigen_residual: {basis.eigen_residual():.3e}\n")
        out.write(f"ortho_residual: {basis.ortho_residual():.3e}\n")
        return EXIT_OK
    _emit(cfg, {
        "operator": basis.source_kind,
        "n": basis.n,
        "eigenvalues": [float(x) for x in basis.eigenvalues],
        "eigen_residual": basis.eigen_residual(),
        "ortho_residual": basis.ortho_residual(),
        "components": connectivity_check(g).components,
    }, out)
    return EXIT_OK


def cmd_translates(cfg: RunConfig, out=sys.stdout) -> int:
    _, basis = load_basis(cfg)
    gens = _generators(cfg, basis)
    if not gens:
        raise UsageError("translates needs --ghat or --kernel")
    if cfg.check == "frame":
        report = multi_generator_frame_bounds(basis, gens)
    elif len(gens) != 1:
        raise UsageError(f"--check {cfg.check} takes a single generator")
    elif cfg.check == "onb":
        report = onb_translates_check(basis, gens[0], cfg.tol)
    elif cfg.check == "independence":
        report = linear_independence_check(basis, gens[0], cfg.m or basis.n, cfg.tol)
    else:
        report = orthonormal_subsystem_check(basis, gens[0], cfg.m or basis.n, cfg.tol)
    _emit(cfg, report.to_dict(), out)
    return _verdict_exit(report)


def cmd_wavelet(cfg: RunConfig, out=sys.stdout) -> int:
    if not cfg.scales:
        raise UsageError("wavelet needs a non-empty --scales list")
    if not cfg.kernel_path:
        raise UsageError("wavelet needs --kernel")
    _, basis = load_basis(cfg)
    k = parse_kernel(_read(cfg.kernel_path))
    report = wavelet_frame_check(basis, k, cfg.scales)
    _emit(cfg, report.to_dict(), out)
    return _verdict_exit(report)


def cmd_modulation(cfg: RunConfig, out=sys.stdout) -> int:
    _, basis = load_basis(cfg)
    if cfg.signal is not None:
        g = parse_vector(cfg.signal, basis.n, "--signal")
    else:
        gens = _generators(cfg, basis)
        if len(gens) != 1:
            raise UsageError("modulation needs --signal, or a single --ghat/--kernel generator")
        g = gens[0]
    report = modulation_frame_check(basis, g)
    _emit(cfg, report.to_dict(), out)
    return _verdict_exit(report)


def cmd_dual(cfg: RunConfig, out=sys.stdout) -> int:
    _, basis = load_basis(cfg)
    gens = _generators(cfg, basis)
    if not gens:
        raise UsageError("dual needs --ghat or --kernel")
    duals = _generators(cfg, basis, "hhat")
    if not duals:
        if len(gens) != 1:
            raise UsageError("give --hhat for every generator, or a single generator to get its canonical dual")
        duals = [canonical_dual_generator(basis, gens[0], cfg.tol)]
    report = dual_frames_check(basis, gens, duals, cfg.tol)
    _emit(cfg, report.to_dict(), out)
    return _verdict_exit(report)


def star_example(scales=(0.5, 1.5)) -> tuple[list[dict], FrameReport]:
    """Rebuild the four-vertex star example and check each reproduced fact."""
    from .operators import kernel_from_lagrange

    g = parse_edge_list(STAR_EDGES, 4)
    op = laplacian(g)
    basis = decompose(op)
    k = kernel_from_lagrange(STAR_KERNEL_POINTS)
    coeffs = np.real_if_close(np.asarray(k.coefficients, dtype=complex))
    values = np.asarray(kernel_eval(k, basis.eigenvalues), dtype=complex)
    report = wavelet_frame_check(basis, k, scales)

    def fact(name, passed, value, tol):
        return {"fact": name, "passed": bool(passed), "value": value, "tol": tol}

    facts = [
        fact("laplacian", np.array_equal(op.matrix, STAR_LAPLACIAN),
             op.matrix.tolist(), 0.0),
        fact("eigenvalues", np.allclose(basis.eigenvalues, STAR_EIGENVALUES, rtol=0, atol=1e-10),
             [float(x) for x in basis.eigenvalues], 1e-10),
        fact("kernel_coefficients",
             coeffs.size == 3 and np.allclose(coeffs, STAR_KERNEL_COEFFS, rtol=0, atol=1e-12),
             [float(np.real(c)) for c in coeffs], 1e-12),
        fact("kernel_on_spectrum", np.allclose(values, STAR_SPECTRAL_VALUES, rtol=0, atol=1e-12),
             [float(np.real(v)) for v in values], 1e-12),
        fact("criterion_oracle_agreement", report.agreement, report.max_deviation, 1e-8),
    ]
    return facts, report


def cmd_star_example(cfg: RunConfig, out=sys.stdout) -> int:
    scales = cfg.scales or [0.5, 1.5]
    facts, report = star_example(scales)
    if cfg.output == "json":
        json.dump({"facts": facts, "report": report.to_dict()}, out, indent=2)
        out.write("\n")
    else:
        for f in facts:
            out.write(f"{'PASS' if f['passed'] else 'FAIL'} {f['fact']}: {_fmt(f['value'])}\n")
        b, o = report.criterion_bounds, report.oracle_bounds
        out.write(f"J={_fmt(list(scales))} verdict: {report.verdict}\n")
        out.write(f"criterion bounds: A={b.lower:.12g} B={b.upper:.12g}\n")
        out.write(f"oracle bounds:    A={o.lower:.12g} B={o.upper:.12g}\n")
    return EXIT_OK if all(f["passed"] for f in facts) else EXIT_NEGATIVE


COMMANDS = {
    "spectrum": cmd_spectrum,
    "translates": cmd_translates,
    "wavelet": cmd_wavelet,
    "modulation": cmd_modulation,
    "dual": cmd_dual,
    "star-example": cmd_star_example,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="criterion tolerance (default %(default)g)")
    common.add_argument("--output", choices=("json", "text"), default="json", help="report format")

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--graph", metavar="PATH", help="edge list, lines 'i j [w]', 1-based")
    graph.add_argument("--n", type=int, help="vertex count if the file has no 'n N' header")
    graph.add_argument("--operator", choices=("laplacian", "adjacency"), default="laplacian",
                       help="symmetric operator defining the spectrum")

    gen = argparse.ArgumentParser(add_help=False)
    src = gen.add_mutually_exclusive_group()
    src.add_argument("--kernel", metavar="PATH", help="kernel file, 'poly: c0 c1 ...' or 'lagrange: x y; ...'")
    src.add_argument("--ghat", action="append", metavar="LIST",
                     help="comma-separated GFT coefficients; repeat for several generators")

    parser = argparse.ArgumentParser(prog="graph-frames", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("spectrum", parents=[common, graph])
    p = sub.add_parser("translates", parents=[common, graph, gen])
    p.add_argument("--check", choices=("frame", "onb", "independence", "orthonormal"), default="frame",
                   help="property to test")
    p.add_argument("--m", type=int, help="use translates T_1..T_m (default N)")
    p = sub.add_parser("wavelet", parents=[common, graph])
    p.add_argument("--kernel", metavar="PATH", help="kernel file")
    p.add_argument("--scales", metavar="CSV", help="comma-separated dilation scales")
    p = sub.add_parser("modulation", parents=[common, graph, gen])
    p.add_argument("--signal", metavar="LIST", help="comma-separated vertex values of g")
    p = sub.add_parser("dual", parents=[common, graph, gen])
    p.add_argument("--hhat", action="append", metavar="LIST",
                   help="dual GFT coefficients, one per --ghat; omit for the canonical dual")
    p = sub.add_parser("star-example", parents=[common])
    p.add_argument("--scales", metavar="CSV", help="dilation scales (default 0.5,1.5)")
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = RunConfig.from_args(ns)
        return COMMANDS[cfg.command](cfg, out)
    except (UsageError, DimensionMismatch, EmptyScaleSet) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphParseError, DuplicateAbscissa) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except IndexOutOfRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalFailure as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
