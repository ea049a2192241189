"""Special-function evaluations used throughout the package.

Chebyshev polynomials of both kinds, the oscillator profile built from them,
and the gamma family (log-gamma, digamma, higher derivatives) on the right
half-plane. The gamma family uses upward recurrence until the argument leaves
a fixed radius, then a Bernoulli asymptotic series; the radius and series
length are fixed constants chosen so the stated accuracy targets hold on the
tested domain (relative 1e-12 for log-gamma, 1e-13 for digamma/polygamma,
derivative orders up to ~40).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .constants import EULER_GAMMA  # noqa: F401  (re-exported)

# Bernoulli numbers B_2, B_4, ..., B_24
_BERNOULLI = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
]

# |z| must exceed this (after shifting) before the asymptotic series is used;
# for derivative order k the radius grows to _SHIFT_RADIUS + k
_SHIFT_RADIUS = 12.0

_MAX_ORDER = 120  # factorial growth caps the usable derivative order


@dataclass(frozen=True)
class ChebEval:
    """Degree/argument pair for a Chebyshev evaluation.

    The trigonometric path requires |x| <= 1; the recurrence path (used
    automatically outside that interval) accepts any real x.
    """

    n: int
    x: float

    def t(self) -> float:
        return cheb_T(self.n, self.x)

    def u(self) -> float:
        return cheb_U(self.n, self.x)


def _as_array(x):
    arr = np.asarray(x, dtype=np.float64)
    return arr, arr.ndim == 0


def cheb_T(n: int, x):
    """Chebyshev polynomial of the first kind.

    Trigonometric form on |x| <= 1; three-term recurrence outside (where the
    relative accuracy degrades with n, as usual for the recurrence).
    Accepts scalars or arrays.
    """
    if n < 0:
        raise ValueError("order must be >= 0")
    arr, scalar = _as_array(x)
    arr1 = np.atleast_1d(arr)
    out = np.empty_like(arr1)
    inside = np.abs(arr1) <= 1.0
    if inside.any():
        out[inside] = np.cos(n * np.arccos(arr1[inside]))
    if (~inside).any():
        xo = arr1[~inside]
        tkm1 = np.ones_like(xo)
        tk = xo.copy()
        if n == 0:
            out[~inside] = tkm1
        elif n == 1:
            out[~inside] = tk
        else:
            for _ in range(n - 1):
                tkm1, tk = tk, 2.0 * xo * tk - tkm1
            out[~inside] = tk
    return float(out[0]) if scalar else out.reshape(arr.shape)


def cheb_U(n: int, x):
    """Chebyshev polynomial of the second kind.

    sin((n+1) theta)/sin(theta) on |x| < 1, exact endpoint values at |x| = 1,
    three-term recurrence outside. Accepts scalars or arrays.
    """
    if n < 0:
        raise ValueError("order must be >= 0")
    arr, scalar = _as_array(x)
    arr1 = np.atleast_1d(arr)
    out = np.empty_like(arr1)
    # the sine quotient drowns in argument rounding once sin(theta) is tiny,
    # so hand a narrow band around the endpoints to the recurrence as well
    inside = np.abs(arr1) < 1.0 - 1e-9
    if inside.any():
        theta = np.arccos(arr1[inside])
        out[inside] = np.sin((n + 1) * theta) / np.sin(theta)
    outside = ~inside
    if outside.any():
        xo = arr1[outside]
        ukm1 = np.ones_like(xo)
        uk = 2.0 * xo
        if n == 0:
            out[outside] = ukm1
        elif n == 1:
            out[outside] = uk
        else:
            for _ in range(n - 1):
                ukm1, uk = uk, 2.0 * xo * uk - ukm1
            out[outside] = uk
    return float(out[0]) if scalar else out.reshape(arr.shape)


def g_oscillator(n: int, x):
    """2 sin^2(n arctan(1/(2x))) for x >= 0 (scalar or array).

    Equals 1 - T_n((4x^2-1)/(4x^2+1)) but stays fully accurate for large x,
    where the raw Chebyshev form loses everything to cancellation. Decays
    like n^2/x^2 once x >> n.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    arr, scalar = _as_array(x)
    if np.any(arr < 0.0):
        raise ValueError("domain is x >= 0")
    vals = _kernels.active_backend().g_values(np.atleast_1d(arr), n)
    return float(vals[0]) if scalar else vals.reshape(arr.shape)


def log_gamma(z):
    """Principal-branch log-gamma, continuous on Re z > 0 (scalar or array)."""
    arr = np.asarray(z, dtype=np.complex128)
    scalar = arr.ndim == 0
    arr1 = np.atleast_1d(arr)
    if np.any(arr1.real <= 0.0):
        raise ValueError("domain is Re z > 0")
    vals = _kernels.active_backend().log_gamma_arr(arr1)
    return complex(vals[0]) if scalar else vals.reshape(arr.shape)


def polygamma(k: int, z) -> complex:
    """k-th derivative of digamma at z (k = 0 gives digamma itself).

    Scalar only; Re z > 0 required. Upward recurrence pushes |z| beyond
    a radius growing with k, then the Bernoulli series is summed with an
    adaptive cutoff (stop on relative 1e-17 or on the first growing term).
    """
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    if k > _MAX_ORDER:
        raise ValueError(f"derivative order above {_MAX_ORDER} is not supported")
    w = complex(z)
    if w.real <= 0.0:
        raise ValueError("domain is Re z > 0")
    radius = _SHIFT_RADIUS + k
    acc = 0.0 + 0.0j
    sign_shift = 1.0 if k % 2 == 0 else -1.0  # (-1)^(k+1) k! / z^(k+1) per step
    kfac = float(math.factorial(k))
    while abs(w) < radius:
        if k == 0:
            acc -= 1.0 / w
        else:
            acc -= sign_shift * kfac / w ** (k + 1)
        w += 1.0

    if k == 0:
        r2 = 1.0 / (w * w)
        ser = 0.0 + 0.0j
        zp = r2
        for m, b in enumerate(_BERNOULLI, start=1):
            term = b / (2.0 * m) * zp
            ser += term
            if abs(term) < 1e-17 * abs(ser):
                break
            zp *= r2
        return acc + cmath.log(w) - 0.5 / w - ser

    # k >= 1: (-1)^(k-1) [ (k-1)!/z^k + k!/(2 z^(k+1)) + sum_m B_2m P_m / z^(2m+k) ]
    km1fac = float(math.factorial(k - 1))
    zk = w ** (-k)
    s = km1fac * zk + kfac / 2.0 * zk / w
    p = float(math.factorial(k + 1)) / 2.0  # P_1 = (k+1)!/2!
    zp = zk / (w * w)
    prev = math.inf
    for m, b in enumerate(_BERNOULLI, start=1):
        term = b * p * zp
        mag = abs(term)
        if mag > prev:
            break
        s += term
        if mag < 1e-17 * abs(s):
            break
        prev = mag
        p *= (2.0 * m + k) * (2.0 * m + k + 1.0) / ((2.0 * m + 1.0) * (2.0 * m + 2.0))
        zp /= w * w
    sign = 1.0 if (k - 1) % 2 == 0 else -1.0
    return acc + sign * s
