"""Graph Fourier analysis and frames of generalized translates on undirected graphs."""

from .errors import *  # noqa: F401,F403
from .frames import (
    FrameBounds,
    FrameReport,
    biorthogonality_check,
    canonical_dual_generator,
    dual_frames_check,
    frame_bounds_oracle,
    frame_operator_matrix,
    linear_independence_check,
    modulation_frame_check,
    multi_generator_frame_bounds,
    onb_translates_check,
    orthonormal_subsystem_check,
    shift_invariance_residual,
    translates_matrix,
    wavelet_frame_check,
)
from .graph import (
    Graph,
    GraphOperator,
    adjacency,
    connectivity_check,
    laplacian,
    parse_edge_list,
    serialize_edge_list,
)
from .operators import (
    SpectralKernel,
    convolve,
    delta,
    dilate_to_signal,
    kernel_eval,
    kernel_from_lagrange,
    modulate,
    parse_kernel,
    translate,
)
from .spectral import SpectralBasis, decompose, gft, igft

__version__ = "0.1.0"
