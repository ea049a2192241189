"""Descriptors of the L-functions under study.

A descriptor carries the raw analytic data of the completed function: the
gamma-factor parameters (lam_j, mu_j), the scale factor Q, the order of the
pole at s = 1, whether the Dirichlet coefficients are real, and the number of
real zeros in (0, 1). Derived constants (degree, conductor, the smooth
zero-count coefficients, and the linear coefficient of the Li growth model)
are computed once at construction and are pure functions of the raw fields.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .constants import EULER_GAMMA, LOG_2PI
from .errors import DescriptorError

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class GammaFactor:
    lam: float  # scale of the gamma factor, > 0
    mu: complex  # shift; must satisfy Re(lam + 2 mu) > 0

    def validate(self):
        if not (self.lam > 0.0):
            raise DescriptorError(f"gamma-factor scale must be positive, got {self.lam}")
        if not (complex(self.mu).real > -0.25):
            raise DescriptorError(
                f"gamma-factor shift must satisfy Re(mu) > -1/4, got mu={self.mu}"
            )
        if not (self.lam + 2.0 * complex(self.mu).real > 0.0):
            raise DescriptorError(
                f"gamma factor violates Re(lam + 2 mu) > 0: lam={self.lam}, mu={self.mu}"
            )


@dataclass(frozen=True)
class FunctionDescriptor:
    name: str                      # preset or user-chosen label
    gamma_factors: tuple           # GammaFactor entries (possibly empty)
    q_scale: float                 # scale factor Q > 0 of the completed function
    polar_order: int               # order m >= 0 of the pole at s = 1
    real_coefficients: bool        # Dirichlet coefficients all real
    siegel_zero_count: int         # number of real zeros in (0, 1), counted once each
    degree: float                  # 2 sum(lam_j)
    conductor: float               # (2 pi)^degree Q^2 prod lam^(2 lam)
    count_slope: float             # coefficient of T in the smooth zero count
    count_log_coeff: float         # coefficient of log T in the smooth zero count
    li_linear_coeff: float         # linear coefficient of the Li growth model
    root_number: complex = None    # unimodular metadata; no operation consumes it

    @property
    def r(self) -> int:
        return len(self.gamma_factors)


def build_descriptor(
    name: str,
    gamma_factors,
    q_scale: float,
    polar_order: int,
    real_coefficients: bool,
    siegel_zero_count: int = 0,
    root_number: complex = None,
) -> FunctionDescriptor:
    """Validate raw fields and compute the derived constants.

    Deterministic: the derived values are plain float expressions of the raw
    fields, so rebuilding from stored raw fields reproduces them bit-for-bit.
    """
    factors = tuple(
        gf if isinstance(gf, GammaFactor) else GammaFactor(float(gf[0]), complex(gf[1]))
        for gf in gamma_factors
    )
    for gf in factors:
        gf.validate()
    if not (q_scale > 0.0):
        raise DescriptorError(f"q_scale must be positive, got {q_scale}")
    if polar_order < 0 or int(polar_order) != polar_order:
        raise DescriptorError(f"polar_order must be a nonnegative integer, got {polar_order}")
    if siegel_zero_count < 0 or int(siegel_zero_count) != siegel_zero_count:
        raise DescriptorError(
            f"siegel_zero_count must be a nonnegative integer, got {siegel_zero_count}"
        )
    if root_number is not None and abs(abs(complex(root_number)) - 1.0) > 1e-9:
        raise DescriptorError(f"root number must be unimodular, got {root_number}")

    degree = 2.0 * math.fsum(gf.lam for gf in factors)
    lam_prod_log = math.fsum(2.0 * gf.lam * math.log(gf.lam) for gf in factors)
    conductor = (2.0 * math.pi) ** degree * q_scale**2 * math.exp(lam_prod_log)
    count_slope = (math.log(conductor) - degree * (LOG_2PI + 1.0)) / (2.0 * math.pi)
    count_log_coeff = math.fsum(complex(gf.mu).imag for gf in factors) / math.pi
    li_linear_coeff = (degree / 2.0) * (EULER_GAMMA - 1.0) + 0.5 * (
        lam_prod_log + 2.0 * math.log(q_scale)
    )
    return FunctionDescriptor(
        name=name,
        gamma_factors=factors,
        q_scale=float(q_scale),
        polar_order=int(polar_order),
        real_coefficients=bool(real_coefficients),
        siegel_zero_count=int(siegel_zero_count),
        degree=degree,
        conductor=conductor,
        count_slope=count_slope,
        count_log_coeff=count_log_coeff,
        li_linear_coeff=li_linear_coeff,
        root_number=None if root_number is None else complex(root_number),
    )


def zeta_descriptor() -> FunctionDescriptor:
    """Riemann zeta: one gamma factor (1/2, 0), Q = pi^(-1/2), simple pole."""
    return build_descriptor(
        name="zeta",
        gamma_factors=[GammaFactor(0.5, 0.0 + 0.0j)],
        q_scale=math.pi ** -0.5,
        polar_order=1,
        real_coefficients=True,
        siegel_zero_count=0,
    )


def dirichlet_descriptor(modulus: int, odd: bool, name: str = "") -> FunctionDescriptor:
    """Descriptor shape of a real primitive Dirichlet character L-function."""
    a = 1.0 if odd else 0.0
    return build_descriptor(
        name=name or f"dirichlet-{modulus}" + ("-odd" if odd else "-even"),
        gamma_factors=[GammaFactor(0.5, a / 2.0 + 0.0j)],
        q_scale=math.sqrt(modulus / math.pi),
        polar_order=0,
        real_coefficients=True,
        siegel_zero_count=0,
    )


def automorphic_descriptor(name: str, arch_conductor: float, shifts, real_coefficients: bool = True) -> FunctionDescriptor:
    """Descriptor with N gamma factors (1/2, k_j/2) and Q = sqrt(Qpi) pi^(-N/2)."""
    ks = [complex(k) for k in shifts]
    return build_descriptor(
        name=name,
        gamma_factors=[GammaFactor(0.5, k / 2.0) for k in ks],
        q_scale=math.sqrt(arch_conductor) * math.pi ** (-len(ks) / 2.0),
        polar_order=0,
        real_coefficients=real_coefficients,
        siegel_zero_count=0,
    )


_PRESETS = {
    "zeta": zeta_descriptor,
    "dirichlet-chi4": lambda: dirichlet_descriptor(4, odd=True, name="dirichlet-chi4"),
    "delta": lambda: automorphic_descriptor("delta", 1.0, [5.5, 6.5]),
}


def preset_descriptor(name: str) -> FunctionDescriptor:
    try:
        factory = _PRESETS[name]
    except KeyError:
        raise DescriptorError(
            f"unknown preset {name!r}; known presets: {sorted(_PRESETS)}"
        ) from None
    return factory()


def preset_names():
    return sorted(_PRESETS)


# ---------------------------------------------------------------------------
# JSON round trip
# ---------------------------------------------------------------------------

_RAW_KEYS = {
    "schema_version",
    "name",
    "gamma_factors",
    "q_scale",
    "polar_order",
    "real_coefficients",
    "siegel_zero_count",
}


def descriptor_to_json(d: FunctionDescriptor) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "name": d.name,
        "gamma_factors": [
            {"lambda": gf.lam, "mu_re": complex(gf.mu).real, "mu_im": complex(gf.mu).imag}
            for gf in d.gamma_factors
        ],
        "q_scale": d.q_scale,
        "polar_order": d.polar_order,
        "real_coefficients": d.real_coefficients,
        "siegel_zero_count": d.siegel_zero_count,
    }
    return json.dumps(doc, indent=2)


def descriptor_from_json(text: str) -> FunctionDescriptor:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DescriptorError(f"descriptor JSON does not parse: {exc}") from exc
    if not isinstance(doc, dict):
        raise DescriptorError("descriptor JSON must be an object")
    unknown = set(doc) - _RAW_KEYS
    if unknown:
        raise DescriptorError(f"unknown descriptor keys: {sorted(unknown)}")
    missing = _RAW_KEYS - set(doc)
    if missing:
        raise DescriptorError(f"missing descriptor keys: {sorted(missing)}")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise DescriptorError(
            f"unsupported schema_version {doc['schema_version']} (expected {SCHEMA_VERSION})"
        )
    factors = []
    for gf in doc["gamma_factors"]:
        extra = set(gf) - {"lambda", "mu_re", "mu_im"}
        if extra:
            raise DescriptorError(f"unknown gamma-factor keys: {sorted(extra)}")
        factors.append(GammaFactor(float(gf["lambda"]), complex(gf["mu_re"], gf["mu_im"])))
    return build_descriptor(
        name=str(doc["name"]),
        gamma_factors=factors,
        q_scale=float(doc["q_scale"]),
        polar_order=int(doc["polar_order"]),
        real_coefficients=bool(doc["real_coefficients"]),
        siegel_zero_count=int(doc["siegel_zero_count"]),
    )


def load_descriptor(path) -> FunctionDescriptor:
    with open(path, "r", encoding="utf-8") as f:
        return descriptor_from_json(f.read())


def save_descriptor(d: FunctionDescriptor, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(descriptor_to_json(d) + "\n")


def describe(d: FunctionDescriptor) -> str:
    """Human-readable one-stop summary (used by the CLI)."""
    lines = [
        f"descriptor {d.name}",
        "  gamma factors : "
        + ", ".join(f"(lam={gf.lam:g}, mu={complex(gf.mu)})" for gf in d.gamma_factors),
        f"  q_scale       : {d.q_scale!r}",
        f"  polar_order   : {d.polar_order}",
        f"  real coeffs   : {d.real_coefficients}",
        f"  siegel zeros  : {d.siegel_zero_count}",
        f"  degree        : {d.degree!r}",
        f"  conductor     : {d.conductor!r}",
        f"  count_slope   : {d.count_slope!r}",
        f"  count_log     : {d.count_log_coeff!r}",
        f"  li_linear     : {d.li_linear_coeff!r}",
    ]
    return "\n".join(lines)
