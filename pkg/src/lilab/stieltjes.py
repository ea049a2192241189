"""Laurent data at s = 1 and the power-series engine built on it.

Given the expansion F(s) = (s-1)^(-m) * sum c_k (s-1)^k of a function with a
pole of order m at s = 1, the logarithmic derivative F'/F(s) + m/(s-1) is
analytic at s = 1; its Taylor coefficients are the generalized Euler constants
of that function. They feed the binomial sums of the arithmetic route and the
growth-bound scan whose boundedness is the arithmetic face of GRH.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources

from .errors import LaurentError

__all__ = [
    "LaurentData",
    "make_laurent",
    "logderiv_coefficients",
    "nonarchimedean_sum",
    "bound_scan",
    "binomial_row",
    "zeta_stieltjes_constants",
    "zeta_laurent",
    "laurent_from_json",
    "laurent_to_json",
    "load_laurent",
]


@dataclass(frozen=True)
class LaurentData:
    """Coefficients c_0..c_K with F(s) = (s-1)^(-pole_order) sum c_k (s-1)^k."""

    pole_order: int
    coefficients: tuple      # complex c_0..c_K
    truncation_order: int    # K

    def validate(self):
        if self.pole_order < 0:
            raise LaurentError(f"pole order must be >= 0, got {self.pole_order}")
        if len(self.coefficients) != self.truncation_order + 1:
            raise LaurentError("coefficient count does not match truncation order")
        if self.truncation_order < 1:
            raise LaurentError("need at least two coefficients (truncation order >= 1)")
        if self.coefficients[0] == 0:
            raise LaurentError("degenerate Laurent data: leading coefficient is zero")


def make_laurent(pole_order: int, coefficients) -> LaurentData:
    data = LaurentData(
        pole_order=int(pole_order),
        coefficients=tuple(complex(c) for c in coefficients),
        truncation_order=len(tuple(coefficients)) - 1,
    )
    data.validate()
    return data


def logderiv_coefficients(data: LaurentData) -> list:
    """Taylor coefficients g_0..g_{K-1} of F'/F(s) + m/(s-1) at s = 1.

    With H(u) = sum c_k u^k (so F = u^(-m) H at u = s-1), the pole part
    cancels and F'/F + m/u = H'/H. Series division of H' by H gives
        (k+1) c_{k+1} = sum_{i<=k} g_i c_{k-i},
    solved for g_k in increasing k.
    """
    data.validate()
    c = data.coefficients
    K = data.truncation_order
    g = []
    for k in range(K):
        acc = (k + 1) * c[k + 1]
        for i in range(k):
            acc -= g[i] * c[k - i]
        g.append(acc / c[0])
    return g


def binomial_row(n: int, upto: int) -> list:
    """C(n, 0..upto) by the multiplicative recurrence, in floating point."""
    row = [1.0]
    for l in range(1, upto + 1):
        row.append(row[-1] * (n - l + 1) / l)
    return row


def nonarchimedean_sum(gammas, m_F: int, n: int) -> complex:
    """m_F + sum_{l=1}^{n} C(n,l) g_{l-1} over the log-derivative coefficients."""
    if n < 1:
        raise LaurentError(f"order must be a positive integer, got {n}")
    if len(gammas) < n:
        raise LaurentError(
            f"insufficient coefficients: need {n}, have {len(gammas)}"
        )
    binom = binomial_row(n, n)
    acc = complex(m_F)
    for l in range(1, n + 1):
        acc += binom[l] * complex(gammas[l - 1])
    return acc


def bound_scan(gammas, m_F: int, n_max: int):
    """Normalized growth |Re S_NA - m_F| / (sqrt(n) log n) for n = 1..n_max.

    The denominator uses log(n+1) at n = 1 so the first entry is finite;
    boundedness of the sequence is the criterion of interest.
    """
    if n_max < 1:
        raise LaurentError(f"n_max must be a positive integer, got {n_max}")
    if len(gammas) < n_max:
        raise LaurentError(
            f"insufficient coefficients: need {n_max}, have {len(gammas)}"
        )
    out = []
    for n in range(1, n_max + 1):
        s_na = nonarchimedean_sum(gammas, m_F, n)
        denom = math.sqrt(n) * (math.log(n) if n > 1 else math.log(n + 1))
        out.append((n, abs(s_na.real - m_F) / denom))
    return out


# ---------------------------------------------------------------------------
# bundled zeta data and the external file format
# ---------------------------------------------------------------------------


def zeta_stieltjes_constants() -> list:
    """The bundled classical constants gamma_0, gamma_1, ... as floats."""
    text = resources.files("lilab.data").joinpath("stieltjes_zeta.json").read_text()
    doc = json.loads(text)
    return [float(s) for s in doc["constants"]]


def zeta_laurent() -> LaurentData:
    """Laurent data of the zeta function at s = 1 from the bundled constants.

    zeta(s) = 1/(s-1) + sum_k (-1)^k gamma_k (s-1)^k / k!  translates to
    c_0 = 1 and c_k = (-1)^(k-1) gamma_{k-1} / (k-1)!.
    """
    gammas = zeta_stieltjes_constants()
    coeffs = [1.0 + 0.0j]
    fact = 1.0
    for k, g in enumerate(gammas):
        if k > 0:
            fact *= k
        coeffs.append((-1.0) ** k * g / fact)
    return make_laurent(1, coeffs)


def laurent_from_json(text: str) -> LaurentData:
    """Parse the external Laurent format.

    JSON document with keys pole_order (integer) and coefficients (array of
    {re, im} objects, c_0 first). Unknown keys are rejected.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LaurentError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise LaurentError("Laurent document must be a JSON object")
    extra = set(doc) - {"pole_order", "coefficients"}
    if extra:
        raise LaurentError(f"unknown keys in Laurent document: {sorted(extra)}")
    missing = {"pole_order", "coefficients"} - set(doc)
    if missing:
        raise LaurentError(f"missing keys in Laurent document: {sorted(missing)}")
    coeffs = []
    for i, entry in enumerate(doc["coefficients"]):
        if not isinstance(entry, dict) or set(entry) != {"re", "im"}:
            raise LaurentError(f"coefficient {i} must be an object with keys re, im")
        coeffs.append(complex(float(entry["re"]), float(entry["im"])))
    return make_laurent(int(doc["pole_order"]), coeffs)


def laurent_to_json(data: LaurentData) -> str:
    doc = {
        "pole_order": data.pole_order,
        "coefficients": [
            {"re": complex(c).real, "im": complex(c).imag} for c in data.coefficients
        ],
    }
    return json.dumps(doc, indent=2)


def load_laurent(path) -> LaurentData:
    with open(path, "r", encoding="utf-8") as fh:
        return laurent_from_json(fh.read())
