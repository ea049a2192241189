"""Hot numerical kernels: numba-compiled fast path with a pure-numpy fallback.

The backend is selected once at import from the LILAB_BACKEND environment
variable: "numba", "numpy", or "auto" (the default; prefers numba when it is
importable). `use_backend` switches at runtime for benchmarks and tests.

Every kernel exists in both variants with identical semantics:

    phases(ordinates)             arctan(1/(2 x)) per ordinate
    osc_sum(phases, mults, n)     compensated sum of mult * 2 sin^2(n phi)
    g_values(x, n)                2 sin^2(n arctan(1/(2x))) elementwise
    w_values(x, n)                4 n sin(2 n arctan(1/(2x))) / (4x^2+1)
    log_gamma_arr(z)              principal log-gamma on Re z > 0, elementwise

The numpy osc_sum uses math.fsum (exact accumulation); the numba variant uses
Neumaier compensation. Both bound the summation error far below the other
error terms tracked by callers.
"""

from __future__ import annotations

import math
import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)

# Stirling series coefficients B_{2m} / (2m (2m-1)) for log-gamma
_STIRLING = np.array([
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    77683.0 / 5796.0,
    -236364091.0 / 1506960.0,
])

# the asymptotic series is applied once |z| exceeds this radius
_SHIFT_RADIUS = 12.0


# ---------------------------------------------------------------------------
# numpy backend
# ---------------------------------------------------------------------------

def _np_phases(ordinates):
    return np.arctan2(0.5, ordinates)


def _np_osc_sum(phases, mults, n):
    s = np.sin(n * phases)
    return math.fsum(mults * (2.0 * s * s))


def _np_g_values(x, n):
    ph = np.arctan2(0.5, x)
    s = np.sin(n * ph)
    return 2.0 * s * s


def _np_w_values(x, n):
    ph = np.arctan2(0.5, x)
    return 4.0 * n * np.sin(2.0 * n * ph) / (4.0 * x * x + 1.0)


def _np_log_gamma_arr(z):
    z = np.asarray(z, dtype=np.complex128)
    w = z.copy()
    shift = np.zeros(z.shape, dtype=np.complex128)
    mask = np.abs(w) < _SHIFT_RADIUS
    while mask.any():
        shift[mask] += np.log(w[mask])
        w[mask] += 1.0
        mask = np.abs(w) < _SHIFT_RADIUS
    r = 1.0 / w
    r2 = r * r
    ser = np.zeros(z.shape, dtype=np.complex128)
    for c in _STIRLING[::-1]:
        ser = ser * r2 + c
    out = (w - 0.5) * np.log(w) - w + _LOG_SQRT_2PI + ser * r
    return out - shift


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

@njit(cache=True)
def _nb_phases(ordinates):
    out = np.empty(ordinates.shape[0])
    for i in range(ordinates.shape[0]):
        out[i] = math.atan2(0.5, ordinates[i])
    return out


@njit(cache=True)
def _nb_osc_sum(phases, mults, n):
    s = 0.0
    c = 0.0
    for i in range(phases.shape[0]):
        t = math.sin(n * phases[i])
        term = 2.0 * t * t * mults[i]
        tot = s + term
        if abs(s) >= abs(term):
            c += (s - tot) + term
        else:
            c += (term - tot) + s
        s = tot
    return s + c


@njit(cache=True)
def _nb_g_values(x, n):
    out = np.empty(x.shape[0])
    for i in range(x.shape[0]):
        t = math.sin(n * math.atan2(0.5, x[i]))
        out[i] = 2.0 * t * t
    return out


@njit(cache=True)
def _nb_w_values(x, n):
    out = np.empty(x.shape[0])
    for i in range(x.shape[0]):
        xi = x[i]
        out[i] = 4.0 * n * math.sin(2.0 * n * math.atan2(0.5, xi)) / (4.0 * xi * xi + 1.0)
    return out


@njit(cache=True)
def _nb_log_gamma_scalar(z, stirling):
    shift = 0.0 + 0.0j
    w = z
    while abs(w) < _SHIFT_RADIUS:
        shift += np.log(w)
        w += 1.0
    r = 1.0 / w
    r2 = r * r
    ser = 0.0 + 0.0j
    for k in range(stirling.shape[0] - 1, -1, -1):
        ser = ser * r2 + stirling[k]
    return (w - 0.5) * np.log(w) - w + _LOG_SQRT_2PI + ser * r - shift


@njit(cache=True)
def _nb_log_gamma_arr(z, stirling):
    out = np.empty(z.shape[0], dtype=np.complex128)
    for i in range(z.shape[0]):
        out[i] = _nb_log_gamma_scalar(z[i], stirling)
    return out


def _nb_log_gamma_entry(z):
    z = np.ascontiguousarray(np.atleast_1d(np.asarray(z, dtype=np.complex128)))
    return _nb_log_gamma_arr(z, _STIRLING)


# ---------------------------------------------------------------------------
# backend selection
# ---------------------------------------------------------------------------

class Backend:
    """Bundle of kernel callables for one implementation."""

    def __init__(self, name, phases, osc_sum, g_values, w_values, log_gamma_arr):
        self.name = name
        self.phases = phases
        self.osc_sum = osc_sum
        self.g_values = g_values
        self.w_values = w_values
        self.log_gamma_arr = log_gamma_arr


NUMPY_BACKEND = Backend(
    "numpy", _np_phases, _np_osc_sum, _np_g_values, _np_w_values, _np_log_gamma_arr
)

if HAVE_NUMBA:
    NUMBA_BACKEND = Backend(
        "numba",
        lambda o: _nb_phases(np.ascontiguousarray(o)),
        lambda p, m, n: _nb_osc_sum(
            np.ascontiguousarray(p), np.ascontiguousarray(m, dtype=np.float64), n
        ),
        lambda x, n: _nb_g_values(np.ascontiguousarray(np.atleast_1d(x), dtype=np.float64), n),
        lambda x, n: _nb_w_values(np.ascontiguousarray(np.atleast_1d(x), dtype=np.float64), n),
        _nb_log_gamma_entry,
    )
else:  # pragma: no cover
    NUMBA_BACKEND = None


def _resolve(name):
    if name == "numpy":
        return NUMPY_BACKEND
    if name == "numba":
        if NUMBA_BACKEND is None:
            raise RuntimeError("numba backend requested but numba is not importable")
        return NUMBA_BACKEND
    if name == "auto":
        return NUMBA_BACKEND if NUMBA_BACKEND is not None else NUMPY_BACKEND
    raise ValueError(f"unknown backend {name!r} (expected numba, numpy or auto)")


_ACTIVE = _resolve(os.environ.get("LILAB_BACKEND", "auto"))


def active_backend():
    return _ACTIVE


def use_backend(name):
    """Switch the active backend ("numba", "numpy", "auto"); returns it."""
    global _ACTIVE
    _ACTIVE = _resolve(name)
    return _ACTIVE


def available_backends():
    names = ["numpy"]
    if NUMBA_BACKEND is not None:
        names.insert(0, "numba")
    return names
