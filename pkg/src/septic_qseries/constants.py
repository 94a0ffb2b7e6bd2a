"""Exact constants relating x, y, z to the e_{k/7} family.

Everything here lives in Q(zeta_28): every angle involved is a multiple of
pi/14.  Each closed-form constant is recomputed independently from a finite
sine transform of the period-7 Lambert coefficients and the two routes must
agree exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .catalog import SEPTIC_SEQUENCES, named_series
from .constructors import PeriodicSeq, invert_lambert
from .ring import CycElement, trig_value

__all__ = [
    "LEVEL",
    "QUADRATICS",
    "ConstantMismatch",
    "SepticConstants",
    "closed_form_constants",
    "delta",
    "dft_constants",
    "dft_sine",
    "efund_constants",
    "kappa",
    "lam",
    "mu",
    "phi_constants",
    "recover_logderiv_tables",
]

LEVEL = 28


class ConstantMismatch(AssertionError):
    """Two independent derivations of a constant disagree."""


def _trig(kind, num, den):
    return trig_value(kind, num, den, LEVEL)


def _q(r):
    return CycElement.from_rational(r, LEVEL)


def dft_sine(seq: PeriodicSeq, level: int = LEVEL) -> list[CycElement]:
    """Sine coefficients l_m = (2/P) sum_k seq(k) sin(2 pi m k / P), m = 1..(P-1)/2.

    For an odd sequence, seq(n) = sum_m l_m sin(2 pi m n / P).
    """
    if not seq.is_odd():
        raise ValueError("sine transform needs an odd sequence")
    P = seq.period
    out = []
    for m in range(1, (P - 1) // 2 + 1):
        acc = _q(0) if level == LEVEL else CycElement.from_rational(0, level)
        for k in range(P):
            v = seq(k)
            if v:
                acc = acc + trig_value("sin", 2 * m * k, P, level) * v
        out.append(acc * Fraction(2, P))
    return out


def closed_form_constants() -> dict[str, list[CycElement]]:
    """The nine coefficients as closed trigonometric expressions."""
    s = lambda a, b: _trig("sin", a, b)
    c = lambda a, b: _trig("cos", a, b)
    csc = lambda a, b: _trig("csc", a, b)
    alphas = [
        (1 - 3 * c(3, 14) * csc(1, 7)) * Fraction(1, 14),
        (1 + 6 * s(3, 14)) * Fraction(1, 14),
        (1 - 6 * s(1, 14)) * Fraction(1, 14),
    ]
    betas = [
        (4 - csc(1, 14) * (2 + csc(3, 14))) * Fraction(1, 56),
        (1 + 4 * s(3, 14) - 2 * c(1, 7)) * Fraction(1, 14),
        (2 - 4 * s(1, 14) + csc(3, 14)) * Fraction(1, 28),
    ]
    gammas = [
        (4 + csc(1, 14) * (3 + csc(3, 14))) * Fraction(1, 28),
        (1 - 5 * s(3, 14) + 3 * c(1, 7)) * Fraction(1, 7),
        (4 + 8 * s(1, 14) - 3 * csc(3, 14)) * Fraction(1, 28),
    ]
    return {"x": alphas, "y": betas, "z": gammas}


def dft_constants() -> dict[str, list[CycElement]]:
    """The nine coefficients as l_j / (4 tan(j pi / 7))."""
    out = {}
    for name, values in SEPTIC_SEQUENCES.items():
        ells = dft_sine(PeriodicSeq(values))
        out[name] = [ell / (_trig("tan", j, 7) * 4) for j, ell in enumerate(ells, start=1)]
    return out


# coefficient tables of the quadratics (xx, yy, zz, xy, xz, yz) in the log-derivatives
QUADRATICS = {
    "x": {"xx": -7, "yy": 5, "zz": 5, "xy": -52, "xz": 0, "yz": -20},
    "y": {"xx": 5, "yy": -7, "zz": 5, "xy": 0, "xz": 20, "yz": -52},
    "z": {"xx": 5, "yy": 5, "zz": -7, "xy": -20, "xz": 52, "yz": 0},
}


def delta(alpha, n):
    return 16 * _trig("tan", alpha.numerator, alpha.denominator) ** 2 * _trig(
        "sin", n * alpha.numerator, alpha.denominator) ** 2


def lam(alpha, n):
    return 16 * _trig("tan", alpha.numerator, alpha.denominator) ** 2 * _trig(
        "cos", 2 * n * alpha.numerator, alpha.denominator)


def kappa(alpha, n):
    t = _trig("tan", alpha.numerator, alpha.denominator) * _trig("tan", 2 * alpha.numerator, alpha.denominator)
    return 8 * t * _trig("sin", n * alpha.numerator, alpha.denominator) ** 2


def mu(alpha, n):
    t = _trig("tan", alpha.numerator, alpha.denominator) * _trig("tan", 2 * alpha.numerator, alpha.denominator)
    return 4 * t * (4 * _trig("cos", 2 * n * alpha.numerator, alpha.denominator)
                    + _trig("cos", 4 * n * alpha.numerator, alpha.denominator))


@dataclass(frozen=True)
class SepticConstants:
    alphas: tuple
    betas: tuple
    gammas: tuple
    ells: dict = field(default_factory=dict)
    phis: dict = field(default_factory=dict)
    seq_a: dict = field(default_factory=dict)
    seq_b: dict = field(default_factory=dict)


def efund_constants() -> SepticConstants:
    """Closed forms checked against the sine-transform route, exactly."""
    closed = closed_form_constants()
    derived = dft_constants()
    for name in ("x", "y", "z"):
        for j, (u, v) in enumerate(zip(closed[name], derived[name]), start=1):
            if u != v:
                raise ConstantMismatch(f"{name} coefficient {j}: closed form {u} != transform {v}")
    ells = {name: tuple(dft_sine(PeriodicSeq(v))) for name, v in SEPTIC_SEQUENCES.items()}
    return SepticConstants(tuple(closed["x"]), tuple(closed["y"]), tuple(closed["z"]), ells=ells)


def phi_bundle(which: str, consts: dict[str, list[CycElement]] | None = None) -> list[CycElement]:
    """Coefficients of e1^2, e2^2, e3^2, e1 e2, e2 e3, e1 e3 in a quadratic of x, y, z.

    Obtained by substituting x = sum alpha_j e_{j/7} (and likewise y, z) into
    the quadratic with coefficient table ``QUADRATICS[which]``.
    """
    consts = consts or closed_form_constants()
    Q = QUADRATICS[which]
    cols = [[consts[v][j] for v in "xyz"] for j in range(3)]

    def bilinear(u, w):
        x1, y1, z1 = u
        x2, y2, z2 = w
        return (Q["xx"] * x1 * x2 + Q["yy"] * y1 * y2 + Q["zz"] * z1 * z2
                + Fraction(Q["xy"], 2) * (x1 * y2 + y1 * x2)
                + Fraction(Q["xz"], 2) * (x1 * z2 + z1 * x2)
                + Fraction(Q["yz"], 2) * (y1 * z2 + z1 * y2))

    squares = [bilinear(cols[j], cols[j]) for j in range(3)]
    cross = [2 * bilinear(cols[0], cols[1]), 2 * bilinear(cols[1], cols[2]), 2 * bilinear(cols[0], cols[2])]
    return squares + cross


# the cross term e_{r/7} e_{s/7} equals e_alpha e_{1-2 alpha} for this alpha
# (using e_{1-beta} = e_beta): e1 e2 <- 1/7, e2 e3 <- 2/7, e1 e3 <- 3/7
_CROSS_ALPHA = (Fraction(1, 7), Fraction(2, 7), Fraction(3, 7))


@lru_cache(maxsize=None)
def phi_constants(which: str = "x"):
    """Phi_1..Phi_6 and the period-7 sequences a_n, b_n with

        quadratic(e) = sum Phi + sum a_n n q^n/(1-q^n) + sum b_n q^n/(1-q^n)^2.

    Returns (phis, seq_a, seq_b, phi_sum); seq_a and seq_b are rational.
    """
    phis = phi_bundle(which)
    seq_a, seq_b = [], []
    for n in range(7):
        a = _q(0)
        b = _q(0)
        for k in range(3):
            al = Fraction(k + 1, 7)
            a = a + phis[k] * delta(al, n)
            b = b + phis[k] * lam(al, n)
        for r in range(3):
            al = _CROSS_ALPHA[r]
            a = a + phis[3 + r] * kappa(al, n)
            b = b + phis[3 + r] * mu(al, n)
        for label, v in (("a", a), ("b", b)):
            if not v.is_rational():
                raise ConstantMismatch(f"{label}_{n} for the {which}-quadratic is not rational: {v}")
        seq_a.append(a.to_rational())
        seq_b.append(b.to_rational())
    total = sum(phis, _q(0))
    return tuple(phis), PeriodicSeq(seq_a), PeriodicSeq(seq_b), total


def recover_logderiv_tables(order: int = 29) -> dict[str, tuple]:
    """Period-7 tables f, g, h read off from theta(w)/w for w = x, y, z.

    theta(w)/w = c + sum t(n) n q^n/(1-q^n); returns {name: (c, (t(0), ..., t(6)))}
    after checking that t is 7-periodic on 1..order-1.
    """
    out = {}
    for name in "xyz":
        w = named_series(name, order + 2)
        ld = (w.theta() * w.inverse()).truncate(order)
        vals = invert_lambert(ld, s=1)
        table = tuple(vals[(r - 1) % 7 if r else 6] for r in range(7))
        for n, v in enumerate(vals, start=1):
            if v != table[n % 7]:
                raise ConstantMismatch(f"{name}: table entry at n={n} is {v}, not {table[n % 7]}")
        out[name] = (ld.coefficients(0, 1)[0], table)
    return out
