"""Exact truncated q-series over Q and cyclotomic fields, with an identity verifier."""
from .catalog import catalog_names, named_series
from .constants import efund_constants, phi_constants
from .constructors import (
    PeriodicSeq,
    ProductSpec,
    bilateral_theta,
    cubic_theta,
    eisenstein,
    epq_family,
    eta_quotient,
    lambert,
    pochhammer,
)
from .identities import CheckResult, IdentityCheck, run
from .ring import CycElement, cyc_arith, cyclotomic_polynomial, embed, to_float, trig_value
from .series import PrecisionError, QSeries, is_zero_to, monomial

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "CycElement",
    "IdentityCheck",
    "PeriodicSeq",
    "PrecisionError",
    "ProductSpec",
    "QSeries",
    "bilateral_theta",
    "catalog_names",
    "cubic_theta",
    "cyc_arith",
    "cyclotomic_polynomial",
    "efund_constants",
    "eisenstein",
    "embed",
    "epq_family",
    "eta_quotient",
    "is_zero_to",
    "lambert",
    "monomial",
    "named_series",
    "phi_constants",
    "pochhammer",
    "run",
    "to_float",
    "trig_value",
]
