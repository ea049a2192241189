"""Numerical laboratory for generalized Li coefficients of L-functions.

Computes the coefficients by independent routes (critical-line zero sums,
arithmetic binomial sums over Laurent data, counting-function integrals),
evaluates the related criterion integrals, and exposes the asymptotic
normalizations whose boundedness expresses GRH numerically.
"""

from ._kernels import active_backend, available_backends, use_backend
from .descriptors import (
    FunctionDescriptor,
    GammaFactor,
    build_descriptor,
    load_descriptor,
    preset_descriptor,
    preset_names,
    save_descriptor,
    zeta_descriptor,
)
from .errors import (
    DescriptorError,
    FetchError,
    LabelNotFoundError,
    LaurentError,
    LiLabError,
    MalformedResponseError,
    TableError,
    UnsupportedOperationError,
)
from .ingest import (
    ZeroSource,
    fetch_remote_zeros,
    load_bundled_zeros,
    parse_ordinates,
    serialize_ordinates,
)
from .li import (
    LiEvaluation,
    archimedean_sum,
    asymptotic_residual,
    growth_model,
    li_arithmetic,
    li_decomposition,
    li_general_sum,
    li_zero_sum,
)
from .special import cheb_T, cheb_U, g_oscillator, log_gamma, polygamma
from .stieltjes import (
    LaurentData,
    bound_scan,
    load_laurent,
    logderiv_coefficients,
    make_laurent,
    nonarchimedean_sum,
    zeta_laurent,
)
from .volchkov import IntegralReport, asymptotic_scan, i2, i3, volchkov_integral
from .zeros import (
    OffLineZero,
    OffLineZeroSet,
    ZeroTable,
    count_zeros,
    make_zero_table,
    s_function,
    smooth_count,
    tail_density,
)

__version__ = "0.1.0"
