"""Fast Fourier and fast wavelet transforms as matrix factorizations,
dilation-equation solvers, filter conditions, joint spectral radius bounds,
and a coefficient-thresholding compression harness."""

from .compress import (
    Basis,
    CompressionResult,
    DecayProfile,
    compress_in_basis,
    contest_report,
    decay_profile,
    parse_basis,
    step_signal,
)
from .dilation import (
    MatrixPair,
    ScalingFunctionSamples,
    dilation_residual,
    dyadic_matrices,
    integer_values,
    partition_of_unity_error,
    phi_hat,
    refine,
    vector_at,
    wavelet_samples,
)
from .errors import (
    ConditionOFailedError,
    DegenerateFilterError,
    InsufficientDataError,
    InvalidFilterError,
    InvalidInputError,
    InvalidLengthError,
    NoSolutionError,
    NotApplicableError,
    WaveletError,
)
from .fft import ComplexSpectrum, OpCount, dft_naive, fft_factors, fft_forward, fft_inverse, fourier_matrix
from .filters import (
    ConditionReport,
    FilterCoefficients,
    accuracy_order,
    check_conditions,
    check_orthogonality,
    check_sums,
    lawton_test,
    make_filter,
    symbol_eval,
    wavelet_coefficients,
    wavelet_shift,
)
from .fwt import (
    PacketTree,
    Pyramid2D,
    PyramidCoefficients,
    analyze,
    analyze_2d,
    fwt_opcount,
    haar_factors,
    haar_matrix,
    packet_analyze,
    packet_synthesize,
    synthesize,
    synthesize_2d,
)
from .jsr import HolderInterval, JsrEstimate, holder_estimate, jsr_bounds, reduced_pair

__version__ = "0.1.0"
