"""Zero tables, zero counting, and the fluctuation function.

A ZeroTable stores positive ordinates with multiplicities. For a symmetric
table (conjugate-symmetric zero set, the usual case for real Dirichlet
coefficients) each listed ordinate stands for the pair at +gamma and -gamma
and is double-counted; a non-symmetric table lists each zero separately via
its |ordinate| and multiplicities. Real zeros in (0,1) are not part of the
table; they are carried by the descriptor (siegel_zero_count).

The counting function N(T) counts zeros with |ordinate| <= T including the
descriptor's real zeros; its smooth companion is the gamma-factor formula

    2 m + (2 T log Q) / pi + (1/pi) Im sum_j [lg(lam(1/2+iT)+mu) + lg(lam(1/2+iT)+conj mu)]

and the fluctuation S(T) is their difference.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .descriptors import FunctionDescriptor
from .errors import TableError, UnsupportedOperationError

__all__ = [
    "ZeroTable",
    "OffLineZero",
    "OffLineZeroSet",
    "make_zero_table",
    "count_zeros",
    "smooth_count",
    "smooth_count_many",
    "s_function",
    "tail_density",
]


@dataclass
class ZeroTable:
    label: str
    ordinates: np.ndarray          # float64, strictly increasing, > 0
    multiplicities: np.ndarray     # int64, >= 1
    ordinate_strings: tuple        # decimal strings exactly as parsed (round-trip)
    symmetric: bool                # ordinates stand for conjugate pairs
    coverage_height: float         # table is complete up to this height
    _phases: np.ndarray = field(default=None, repr=False, compare=False)
    _mult_prefix: np.ndarray = field(default=None, repr=False, compare=False)

    def __len__(self):
        return len(self.ordinates)

    def phases(self):
        """arctan(1/(2 gamma)) per ordinate, cached."""
        if self._phases is None:
            self._phases = _kernels.active_backend().phases(self.ordinates)
        return self._phases

    def mult_prefix(self):
        """Cumulative multiplicities, cached."""
        if self._mult_prefix is None:
            self._mult_prefix = np.cumsum(self.multiplicities)
        return self._mult_prefix

    def total_multiplicity(self) -> int:
        return int(self.mult_prefix()[-1]) if len(self.ordinates) else 0


def make_zero_table(
    label: str,
    ordinates,
    multiplicities=None,
    *,
    symmetric: bool = True,
    coverage_height: float = None,
    ordinate_strings=None,
) -> ZeroTable:
    """Build a validated ZeroTable from floats or decimal strings."""
    if ordinate_strings is None:
        ordinate_strings = tuple(
            o if isinstance(o, str) else repr(float(o)) for o in ordinates
        )
    ords = np.asarray([float(o) for o in ordinates], dtype=np.float64)
    if multiplicities is None:
        mults = np.ones(len(ords), dtype=np.int64)
    else:
        mults = np.asarray(multiplicities, dtype=np.int64)
    if len(mults) != len(ords):
        raise TableError("ordinates and multiplicities differ in length")
    if len(ords) and not np.all(ords > 0.0):
        raise TableError("ordinates must be positive")
    if len(ords) > 1 and not np.all(np.diff(ords) > 0.0):
        raise TableError("ordinates must be strictly increasing")
    if len(mults) and not np.all(mults >= 1):
        raise TableError("multiplicities must be >= 1")
    if coverage_height is None:
        coverage_height = float(ords[-1]) if len(ords) else 0.0
    if len(ords) and ords[-1] > coverage_height:
        raise TableError("ordinates exceed the declared coverage height")
    return ZeroTable(
        label=label,
        ordinates=ords,
        multiplicities=mults,
        ordinate_strings=tuple(ordinate_strings),
        symmetric=bool(symmetric),
        coverage_height=float(coverage_height),
    )


def check_table(descriptor: FunctionDescriptor, table: ZeroTable) -> None:
    """A symmetric table requires conjugate-symmetric zeros (real coefficients)."""
    if table.symmetric and not descriptor.real_coefficients:
        raise TableError(
            "symmetric table paired with a descriptor whose coefficients are not real"
        )


def pair_weight(table: ZeroTable) -> float:
    return 2.0 if table.symmetric else 1.0


def count_zeros(table: ZeroTable, descriptor: FunctionDescriptor, height: float) -> int:
    """Number of zeros with |ordinate| <= height, plus the real zeros.

    Right-continuous: an ordinate equal to `height` is included.
    """
    check_table(descriptor, table)
    if height < 0.0:
        raise TableError("height must be >= 0")
    if height > table.coverage_height:
        raise TableError(
            f"height {height:g} exceeds table coverage {table.coverage_height:g}"
        )
    idx = bisect.bisect_right(table.ordinates, height)
    base = int(table.mult_prefix()[idx - 1]) if idx else 0
    return int(pair_weight(table)) * base + descriptor.siegel_zero_count


def smooth_count(descriptor: FunctionDescriptor, height: float) -> float:
    """Smooth (gamma-factor) companion of the zero count at one height."""
    return float(smooth_count_many(descriptor, np.asarray([height], dtype=np.float64))[0])


def smooth_count_many(descriptor: FunctionDescriptor, heights) -> np.ndarray:
    """Vectorized smooth count over an array of heights."""
    t = np.asarray(heights, dtype=np.float64)
    lg = _kernels.active_backend().log_gamma_arr
    acc = np.zeros(t.shape, dtype=np.float64)
    for gf in descriptor.gamma_factors:
        mu = complex(gf.mu)
        z = gf.lam * (0.5 + 1j * t)
        acc += np.imag(lg(z + mu))
        acc += np.imag(lg(z + mu.conjugate()))
    return (
        2.0 * descriptor.polar_order
        + (2.0 * math.log(descriptor.q_scale) / math.pi) * t
        + acc / math.pi
    )


def s_function(table: ZeroTable, descriptor: FunctionDescriptor, height: float) -> float:
    """Fluctuation S(T) = N(T) - smooth count at T."""
    return count_zeros(table, descriptor, height) - smooth_count(descriptor, height)


def tail_density(descriptor: FunctionDescriptor, height: float) -> float:
    """Derivative in T of the smooth two-sided count main terms.

    (degree/pi) (log T + 1) + 2 count_slope + 2 count_log_coeff / T.
    Unsupported for degree-zero descriptors (no growth model).
    """
    if descriptor.degree == 0.0:
        raise UnsupportedOperationError(
            "tail density undefined for a descriptor without gamma factors"
        )
    if height <= 0.0:
        raise ValueError("height must be positive")
    return (
        (descriptor.degree / math.pi) * (math.log(height) + 1.0)
        + 2.0 * descriptor.count_slope
        + 2.0 * descriptor.count_log_coeff / height
    )


# ---------------------------------------------------------------------------
# off-line zero sets (synthetic experiments)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OffLineZero:
    sigma: float          # real part in [0, 1]
    gamma: float          # imaginary part (any sign)
    multiplicity: int = 1


@dataclass
class OffLineZeroSet:
    """Finite synthetic zero set, closed under sigma -> 1 - sigma."""

    zeros: tuple

    def __post_init__(self):
        zs = tuple(
            z if isinstance(z, OffLineZero) else OffLineZero(*z) for z in self.zeros
        )
        self.zeros = zs
        for z in zs:
            if not (0.0 <= z.sigma <= 1.0):
                raise TableError(f"sigma must lie in [0, 1], got {z.sigma}")
            if z.multiplicity < 1:
                raise TableError("multiplicity must be >= 1")
        # closure under the functional-equation reflection
        weights = {}
        for z in zs:
            weights[(round(z.sigma, 12), round(z.gamma, 12))] = (
                weights.get((round(z.sigma, 12), round(z.gamma, 12)), 0) + z.multiplicity
            )
        for (sig, gam), w in weights.items():
            mirror = (round(1.0 - sig, 12), gam)
            if weights.get(mirror, 0) != w:
                raise TableError(
                    f"zero set not closed under sigma -> 1-sigma at sigma={sig}, gamma={gam}"
                )
