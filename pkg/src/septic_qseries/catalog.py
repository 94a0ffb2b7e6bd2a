"""Catalog of the named series used throughout the identity checks.

``named_series(name, order)`` returns the series exact below q**order.  Names:

    septic.a septic.b septic.c          theta sums over exponent denominator 56
    x y z                               eta-product forms (canonical)
    x.theta y.theta z.theta             theta-quotient forms
    x.lambert y.lambert z.lambert       Lambert forms with period-7 coefficients
    P7 E2 E4 E6 E4_7 E6_7               Eisenstein series (P7 = E2(q^7))
    quintic.A quintic.B quintic.P       quintic theta functions, P = E2(q^5)
    cubic.a cubic.b cubic.c cubic.P     cubic theta functions
    sigma Z X j7 D1 D2 D3               level-7 auxiliaries
    theta1.K  theta1.K.sum  (K=1,2,3)   theta_1(K pi tau | q^7), product / sum form
    theta1prime7                        theta_1'(q^7) = 2 q^(7/8) (q^7;q^7)^3
    logderiv1 logderiv2 logderiv3       theta_1'/theta_1 (K pi tau | q^7)
    e_p/N  P_p/N  Q_p/N                 the trigonometric Lambert family
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache

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
from .ring import CycElement, jacobi_symbol
from .series import PrecisionError, QSeries

__all__ = ["CATALOG", "SEPTIC_SEQUENCES", "catalog_names", "named_series", "with_margin"]

I4 = CycElement.zeta(4)

# residues 0..6 of the Lambert coefficients of x, y, z
SEPTIC_SEQUENCES = {
    "x": (0, 1, -1, -2, 2, 1, -1),
    "y": (0, 1, -2, 1, -1, 2, -1),
    "z": (0, 2, 1, 1, -1, -1, -2),
}

_PRODUCT_SPECS = {
    "x": ProductSpec(((7, 7, 2), (2, 7, 1), (5, 7, 1), (3, 7, -2), (4, 7, -2)), shift=1),
    "y": ProductSpec(((7, 7, 2), (1, 7, 1), (6, 7, 1), (2, 7, -2), (5, 7, -2)), shift=1),
    "z": ProductSpec(((7, 7, 2), (3, 7, 1), (4, 7, 1), (1, 7, -2), (6, 7, -2))),
    "Z": ProductSpec(((1, 1, 7), (7, 7, -1))),
    "X": ProductSpec(((7, 7, 4), (1, 1, -4)), shift=1),
    "j7": ProductSpec(((1, 1, 4), (7, 7, -4)), shift=-1),
}


def with_margin(build, order, margin=1, step=2):
    """Call ``build(order + margin)`` until the result reaches ``order``, then truncate.

    For quantities built through inverses, whose precision loss is easier to
    measure than to predict.
    """
    order = Fraction(order)
    margin = Fraction(margin)
    for _ in range(12):
        s = build(order + margin)
        if s.order >= order:
            return s.truncate(order)
        margin += max(Fraction(step), order - s.order)
    raise PrecisionError(f"could not reach order {order}")


def _septic_theta(which, order):
    if which == "a":
        return -bilateral_theta(196, 140, 25, 56, order)
    if which == "b":
        return bilateral_theta(196, 84, 9, 56, order)
    return bilateral_theta(196, 28, 1, 56, order)


def _xyz_theta(which, order):
    a, b, c = (lambda o, w=w: _septic_theta(w, o) for w in "abc")
    num, den, sign = {"x": (b, c, 1), "y": (a, b, -1), "z": (c, a, 1)}[which]

    def build(o):
        pre = pochhammer(7, 7, 1, o) ** 3
        s = pre * num(o) * den(o).inverse() ** 2
        return s.shift(49).scale(sign).reduce_denom()

    return with_margin(build, order)


def _quintic(which, order):
    o = Fraction(order)
    eta = pochhammer(1, 1, 1, o).pow_rational(-3, 5)
    if which == "A":
        s = bilateral_theta(5, -3, 0, 2, o).reduce_denom()
        return (eta * s).lift_denom(5).shift(1).truncate(o)
    s = bilateral_theta(5, -1, 0, 2, o).reduce_denom()
    return eta * s


def _theta1_product(k, order):
    # i q^((7-4k)/8) (q^k; q^7)(q^(7-k); q^7)(q^7; q^7), exponents over 8
    spec = ProductSpec(((8 * k, 7, 1), (8 * (7 - k), 7, 1), (56, 7, 1)), denom=8, shift=7 - 4 * k)
    return eta_quotient(spec, order).scale(I4)


def _theta1_sum(k, order):
    # -i q^(7/8) sum (-1)^n q^(7 n(n+1)/2) q^(k(2n+1)/2), exponents over 8
    return bilateral_theta(28, 28 + 8 * k, 7 + 4 * k, 8, order).scale(-I4)


def _geometric(N, n_idx, coeffs, weight):
    """Add weight * q^N/(1 - q^N) to coeffs (N != 0), as a power series."""
    if N > 0:
        e = N
        while e < n_idx:
            coeffs[e] = coeffs.get(e, 0) + weight
            e += N
    else:
        # q^N/(1-q^N) = -1/(1 - q^|N|)
        e = 0
        while e < n_idx:
            coeffs[e] = coeffs.get(e, 0) - weight
            e += -N


def _logderiv(k, order):
    """theta_1'/theta_1 at z = k pi tau with nome q^7, via e^(2iz) = q^k."""
    n_idx = int(Fraction(order).__ceil__())
    coeffs = {0: 1}
    n = 1
    while 7 * n + k < n_idx:
        _geometric(7 * n + k, n_idx, coeffs, -2)
        n += 1
    n = 0
    while 7 * n - k < n_idx:
        _geometric(7 * n - k, n_idx, coeffs, 2)
        n += 1
    return QSeries.from_coeffs(coeffs, prec=n_idx).scale(I4)


def _septic_lambert(which, order):
    body = lambert(PeriodicSeq(SEPTIC_SEQUENCES[which]), order=order)
    return body + 1 if which == "z" else body


def _sigma(order):
    chi = PeriodicSeq(jacobi_symbol(n, 7) for n in range(7))
    return lambert(chi, order=order).scale(2) + 1


def _eta(name):
    return lambda order: eta_quotient(_PRODUCT_SPECS[name], order)


def _d_series(r):
    return lambda order: lambert(PeriodicSeq([1]), s=1, a=r, m=7, order=order) + lambert(
        PeriodicSeq([1]), s=1, a=7 - r, m=7, order=order)


CATALOG = {
    "septic.a": lambda o: _septic_theta("a", o),
    "septic.b": lambda o: _septic_theta("b", o),
    "septic.c": lambda o: _septic_theta("c", o),
    "x": _eta("x"),
    "y": _eta("y"),
    "z": _eta("z"),
    "x.theta": lambda o: _xyz_theta("x", o),
    "y.theta": lambda o: _xyz_theta("y", o),
    "z.theta": lambda o: _xyz_theta("z", o),
    "x.lambert": lambda o: _septic_lambert("x", o),
    "y.lambert": lambda o: _septic_lambert("y", o),
    "z.lambert": lambda o: _septic_lambert("z", o),
    "E2": lambda o: eisenstein(2, 1, o),
    "E4": lambda o: eisenstein(4, 1, o),
    "E6": lambda o: eisenstein(6, 1, o),
    "P7": lambda o: eisenstein(2, 7, o),
    "E4_7": lambda o: eisenstein(4, 7, o),
    "E6_7": lambda o: eisenstein(6, 7, o),
    "quintic.A": lambda o: _quintic("A", o),
    "quintic.B": lambda o: _quintic("B", o),
    "quintic.P": lambda o: eisenstein(2, 5, o),
    "cubic.a": lambda o: cubic_theta("a", o),
    "cubic.b": lambda o: cubic_theta("b", o),
    "cubic.c": lambda o: cubic_theta("c", o),
    "cubic.P": lambda o: lambert(PeriodicSeq([1, Fraction(-1, 2), Fraction(-1, 2)]), s=1, order=o).scale(-6) + 1,
    "sigma": _sigma,
    "Z": _eta("Z"),
    "X": _eta("X"),
    "j7": _eta("j7"),
    "D1": _d_series(1),
    "D2": _d_series(2),
    "D3": _d_series(3),
    "theta1.1": lambda o: _theta1_product(1, o),
    "theta1.2": lambda o: _theta1_product(2, o),
    "theta1.3": lambda o: _theta1_product(3, o),
    "theta1.1.sum": lambda o: _theta1_sum(1, o),
    "theta1.2.sum": lambda o: _theta1_sum(2, o),
    "theta1.3.sum": lambda o: _theta1_sum(3, o),
    "theta1prime7": lambda o: eta_quotient(ProductSpec(((56, 7, 3),), denom=8, shift=7), o).scale(2),
    "logderiv1": lambda o: _logderiv(1, o),
    "logderiv2": lambda o: _logderiv(2, o),
    "logderiv3": lambda o: _logderiv(3, o),
}

_FAMILY = re.compile(r"^([ePQ])_(-?\d+)/(\d+)$")


def catalog_names():
    return sorted(CATALOG) + ["e_p/N", "P_p/N", "Q_p/N"]


@lru_cache(maxsize=256)
def _cached(name, order):
    if name in CATALOG:
        return CATALOG[name](order)
    m = _FAMILY.match(name)
    if m:
        return epq_family(m.group(1), Fraction(int(m.group(2)), int(m.group(3))), order=order)
    raise KeyError(name)


def named_series(name: str, order) -> QSeries:
    """Build the catalog series ``name`` exact below q**order."""
    order = Fraction(order)
    if name not in CATALOG and not _FAMILY.match(name):
        raise KeyError(f"unknown series {name!r}")
    return _cached(name, order)
