"""Four routes to the generalized Li coefficients.

Route one sums the oscillator profile over tabulated critical-line ordinates
and corrects for the truncated tail with a smooth zero-density model. Route
two evaluates the exact per-zero contribution for synthetic zero sets that may
lie off the critical line. Route three is arithmetic: binomial sums over the
Laurent-derived constants plus gamma-factor polygamma sums, conjugated. Route
four assembles the coefficient from the counting-function integrals.

The growth model (degree/2) n log n + c n and its normalized residual are the
asymptotic face of GRH: bounded residuals over a long n range are the
numerical stand-in for the criterion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels, volchkov
from .descriptors import FunctionDescriptor
from .errors import LaurentError, TableError, UnsupportedOperationError
from .quadrature import integrate
from .special import cheb_T, polygamma
from .stieltjes import LaurentData, binomial_row, logderiv_coefficients, nonarchimedean_sum
from .zeros import OffLineZeroSet, ZeroTable, check_table, pair_weight, tail_density

__all__ = [
    "LiEvaluation",
    "li_zero_sum",
    "li_general_sum",
    "li_arithmetic",
    "archimedean_sum",
    "li_decomposition",
    "asymptotic_residual",
    "growth_model",
    "concavity_threshold",
    "pair_profile",
]

_ROUTES = ("zero_sum", "general_sum", "arithmetic", "decomposition")


@dataclass
class LiEvaluation:
    n: int
    route: str
    value: float                   # real part of the coefficient
    complex_value: complex = None  # arithmetic route only
    truncation_height: float = None
    tail_bound: float = 0.0

    def __post_init__(self):
        if self.route not in _ROUTES:
            raise ValueError(f"unknown route {self.route!r}")
        if self.tail_bound < 0.0:
            raise ValueError("tail_bound must be nonnegative")


def _parity(n: int) -> float:
    """1 - (-1)^n: the value of the oscillator profile at ordinate zero."""
    return 0.0 if n % 2 == 0 else 2.0


def _check_n(n: int):
    if n < 1 or int(n) != n:
        raise ValueError(f"order must be a positive integer, got {n}")


def tail_correction(descriptor: FunctionDescriptor, height: float, n: int):
    """Integral of the oscillator against the smooth zero density above `height`.

    Returns (correction, bound). The integrand decays like n^2 log x / x^2;
    the upper limit doubles geometrically until the integrand drops below
    1e-16, and the returned bound is a 10% haircut on the correction
    (the density model's own error is far smaller than the correction).
    """
    _check_n(n)
    if descriptor.r == 0:
        raise UnsupportedOperationError(
            "tail correction undefined for a descriptor without gamma factors"
        )
    backend = _kernels.active_backend()

    def integrand(x):
        return backend.g_values(x, n) * (
            (descriptor.degree / math.pi) * (np.log(x) + 1.0)
            + 2.0 * descriptor.count_slope
            + 2.0 * descriptor.count_log_coeff / x
        )

    upper = 2.0 * height
    while float(integrand(np.asarray([upper]))[0]) > 1e-16 and upper < 1e30:
        upper *= 2.0
    knots = []
    x = height
    while x < upper:
        knots.append(x)
        x *= 2.0
    # rough scale of the tail sets the absolute quadrature tolerance
    rough = (n * n / (2.0 * height)) * (
        (math.log(height) + 2.0) / math.pi + 2.0 * abs(descriptor.count_slope)
    )
    result = integrate(
        integrand, height, upper, points=knots, atol=max(1e-15, 1e-8 * rough)
    )
    correction = result.value
    return correction, 0.1 * abs(correction) + result.error


def li_zero_sum(
    descriptor: FunctionDescriptor,
    table: ZeroTable,
    n: int,
    *,
    include_tail: bool = True,
) -> LiEvaluation:
    """Sum the oscillator profile over the table, all zeros taken on-line.

    Real zeros contribute the profile's ordinate-zero value (2 for odd n,
    0 for even). With include_tail the smooth-density tail correction above
    the coverage height is added and its 10% haircut reported as the bound.
    """
    _check_n(n)
    check_table(descriptor, table)
    if len(table) == 0:
        raise TableError("zero table is empty")
    backend = _kernels.active_backend()
    core = backend.osc_sum(table.phases(), table.multiplicities.astype(np.float64), n)
    value = pair_weight(table) * core + _parity(n) * descriptor.siegel_zero_count
    bound = 0.0
    if include_tail and descriptor.r > 0:
        correction, bound = tail_correction(descriptor, table.coverage_height, n)
        value += correction
    return LiEvaluation(
        n=n,
        route="zero_sum",
        value=value,
        truncation_height=table.coverage_height,
        tail_bound=bound,
    )


def pair_profile(n: int, sigma: float, gamma: float) -> float:
    """Per-zero factor g of the general sum: 1 - g is the zero's contribution.

    g(sigma, gamma) = (((sigma-1)^2+gamma^2)/(sigma^2+gamma^2))^(n/2)
                      * T_n((sigma(sigma-1)+gamma^2)/sqrt(product of both)).
    Reduces to 1 - (oscillator profile) on the critical line.
    """
    _check_n(n)
    a = (sigma - 1.0) ** 2 + gamma * gamma
    b = sigma * sigma + gamma * gamma
    if a == 0.0 or b == 0.0:
        raise ValueError("zeros at s = 0 or s = 1 are not admissible")
    arg = (sigma * (sigma - 1.0) + gamma * gamma) / math.sqrt(a * b)
    arg = min(1.0, max(-1.0, arg))
    return (a / b) ** (0.5 * n) * cheb_T(n, arg)


def li_general_sum(zeros: OffLineZeroSet, n: int) -> float:
    """Exact finite-sum real part over a symmetry-closed synthetic zero set."""
    _check_n(n)
    return math.fsum(
        z.multiplicity * (1.0 - pair_profile(n, z.sigma, z.gamma)) for z in zeros.zeros
    )


def archimedean_sum(descriptor: FunctionDescriptor, n: int) -> complex:
    """Gamma-factor side of the arithmetic route (log-scale term included)."""
    _check_n(n)
    return n * math.log(descriptor.q_scale) + volchkov.gamma_shift_sum(descriptor, n)


def li_arithmetic(
    descriptor: FunctionDescriptor, laurent: LaurentData, n: int
) -> LiEvaluation:
    """Assemble the coefficient from Laurent data and gamma factors.

    The binomial/constants sum plus the archimedean sum gives the coefficient
    at -n; conjugation gives the one at +n. Exact up to function-evaluation
    accuracy, so the reported tail bound is zero.
    """
    _check_n(n)
    if laurent.pole_order != descriptor.polar_order:
        raise LaurentError(
            f"Laurent pole order {laurent.pole_order} does not match "
            f"descriptor polar order {descriptor.polar_order}"
        )
    gammas = logderiv_coefficients(laurent)
    if len(gammas) < n:
        raise LaurentError(f"insufficient coefficients: need {n}, have {len(gammas)}")
    lam_minus = nonarchimedean_sum(gammas, descriptor.polar_order, n) + archimedean_sum(
        descriptor, n
    )
    cv = lam_minus.conjugate()
    return LiEvaluation(
        n=n, route="arithmetic", value=cv.real, complex_value=cv, tail_bound=0.0
    )


def li_decomposition(
    descriptor: FunctionDescriptor,
    table: ZeroTable,
    n: int,
    *,
    s_cap: float = None,
) -> LiEvaluation:
    """Assemble the coefficient from the counting-function integral pieces.

    value = n log Q + (1-(-1)^n)(2m - N(0)) + (polygamma part) + (integral
    against the fluctuation term), the last contributing the tail bound.
    """
    _check_n(n)
    kwargs = {} if s_cap is None else {"s_cap": s_cap}
    rep = volchkov.i3(descriptor, table, n, **kwargs)
    value = (
        n * math.log(descriptor.q_scale)
        + _parity(n) * (2.0 * descriptor.polar_order - descriptor.siegel_zero_count)
        + volchkov.i2(descriptor, n)
        + rep.value
    )
    return LiEvaluation(
        n=n,
        route="decomposition",
        value=value,
        truncation_height=rep.truncation_height,
        tail_bound=rep.tail_bound,
    )


def growth_model(descriptor: FunctionDescriptor, n: int) -> float:
    """(degree/2) n log n + c n: the GRH-equivalent growth of the coefficients."""
    _check_n(n)
    return 0.5 * descriptor.degree * n * math.log(n) + descriptor.li_linear_coeff * n


def asymptotic_residual(
    descriptor: FunctionDescriptor, evaluation: LiEvaluation
) -> float:
    """(value - growth model) / (sqrt(n) log n); bounded under GRH."""
    if descriptor.r == 0:
        raise UnsupportedOperationError(
            "growth model undefined for a descriptor without gamma factors"
        )
    n = evaluation.n
    if n < 2:
        raise ValueError("residual defined for n >= 2")
    return (evaluation.value - growth_model(descriptor, n)) / (
        math.sqrt(n) * math.log(n)
    )


def concavity_threshold(
    n: int,
    *,
    gamma_grid=None,
    sigma_grid=None,
) -> float:
    """Smallest grid ordinate beyond which the pair-sum concavity test holds.

    Scans a gamma grid; for each gamma checks, on a sigma grid, that the two
    members of a reflected pair contribute no more than twice the critical-line
    value. Returns the first gamma from which every larger grid value passes.
    Grid-resolution diagnostic only, no exactness claim.
    """
    _check_n(n)
    if gamma_grid is None:
        gamma_grid = np.geomspace(0.05, 20.0 * n, 600)
    if sigma_grid is None:
        sigma_grid = np.linspace(0.02, 0.98, 49)
    passing = []
    for gamma in gamma_grid:
        ok = True
        center = 1.0 - pair_profile(n, 0.5, float(gamma))
        for sigma in sigma_grid:
            lhs = (1.0 - pair_profile(n, float(sigma), float(gamma))) + (
                1.0 - pair_profile(n, 1.0 - float(sigma), float(gamma))
            )
            if lhs > 2.0 * center + 1e-14:
                ok = False
                break
        passing.append(ok)
    # first index from which all later grid points pass
    idx = len(passing)
    for i in range(len(passing) - 1, -1, -1):
        if not passing[i]:
            break
        idx = i
    if idx == len(passing):
        return math.inf
    return float(gamma_grid[idx])
