"""Builders for products, theta sums, Lambert series and Eisenstein series.

Every builder takes ``order``, an exponent bound in powers of q (an int or a
Fraction), and returns a series exact below q**order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .ring import CycElement, euler_phi, trig_value
from .series import QSeries, _scalar_parts, ser_pow, substitute_power

__all__ = [
    "PeriodicSeq",
    "ProductFactor",
    "ProductSpec",
    "bernoulli",
    "bilateral_theta",
    "cubic_theta",
    "eisenstein",
    "epq_family",
    "eta_quotient",
    "lambert",
    "invert_lambert",
    "lambert_coefficients",
    "pochhammer",
]


def _index_bound(order, D) -> int:
    """Smallest index count covering every exponent below ``order``."""
    return math.ceil(Fraction(order) * D)


@dataclass(frozen=True)
class PeriodicSeq:
    """A sequence with period ``len(values)``; ``values[0]`` is residue 0."""

    values: tuple

    def __init__(self, values):
        vals = tuple(values)
        if not vals:
            raise ValueError("a periodic sequence needs at least one value")
        object.__setattr__(self, "values", vals)

    @property
    def period(self) -> int:
        return len(self.values)

    def __call__(self, n: int):
        return self.values[n % len(self.values)]

    @property
    def level(self) -> int:
        for v in self.values:
            if isinstance(v, CycElement) and v.level != 1:
                return v.level
        return 1

    def map(self, fn) -> "PeriodicSeq":
        return PeriodicSeq(fn(v) for v in self.values)

    @classmethod
    def from_function(cls, fn: Callable[[int], object], period: int) -> "PeriodicSeq":
        return cls(fn(n) for n in range(period))

    def is_odd(self) -> bool:
        p = self.period
        return all(self(k) == -self(p - k) for k in range(p))


# -- products ------------------------------------------------------------------

def pochhammer(j: int, m: int, D: int = 1, order=10) -> QSeries:
    """(q^(j/D); q^m)_inf, multiplying every factor that matters below q**order."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if j < 0:
        raise ValueError("offset must be nonnegative")
    n = _index_bound(order, D)
    c = [0] * n
    if n:
        c[0] = 1
    step = m * D
    e = j
    while e < n:
        if e == 0:
            c = [0] * n
            break
        # multiply in place by (1 - q^(e/D))
        for i in range(n - 1, e - 1, -1):
            if c[i - e]:
                c[i] -= c[i - e]
        e += step
    return QSeries(1, D, 0, n, 1, c)


@dataclass(frozen=True)
class ProductFactor:
    offset: int
    modulus: int
    exponent: int


@dataclass(frozen=True)
class ProductSpec:
    """q^(shift/D) * prod (q^(offset/D); q^modulus)_inf ^ exponent."""

    factors: tuple
    denom: int = 1
    shift: int = 0

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(
            f if isinstance(f, ProductFactor) else ProductFactor(*f) for f in self.factors))
        for f in self.factors:
            if f.modulus < 1:
                raise ValueError("modulus must be positive")
            if f.offset == 0 and f.exponent < 0:
                raise ValueError("a factor (1; q^m) vanishes and cannot be inverted")


def eta_quotient(spec: ProductSpec, order) -> QSeries:
    """Expand a product of Pochhammer powers below q**order."""
    D = spec.denom
    rel = Fraction(order) - Fraction(spec.shift, D)
    result = None
    for f in spec.factors:
        base = pochhammer(f.offset, f.modulus, D, max(rel, 0))
        term = ser_pow(base, f.exponent)
        result = term if result is None else result * term
    if result is None:
        result = QSeries.from_coeffs([1], prec=max(_index_bound(rel, D), 0), denom=D)
    return result.shift(spec.shift)


# -- theta sums ---------------------------------------------------------------

def _quadratic_range(A, B, C, bound):
    """Integers n with A n^2 + B n + C < bound, widened by a margin of 2."""
    disc = B * B - 4 * A * (C - bound)
    if disc < 0:
        return range(0)
    r = math.isqrt(disc) + 1
    lo = (-B - r) // (2 * A) - 2
    hi = (-B + r) // (2 * A) + 2
    return range(lo, hi + 1)


def bilateral_theta(A: int, B: int, C: int, D: int, order, sign=None) -> QSeries:
    """Sum over all integers n of s(n) q^((A n^2 + B n + C)/D).

    ``sign`` maps n to a coefficient; the default is (-1)^n.
    """
    if A <= 0:
        raise ValueError("the quadratic must open upwards")
    if sign is None:
        sign = lambda n: -1 if n % 2 else 1
    n_idx = _index_bound(order, D)
    terms = {}
    for n in _quadratic_range(A, B, C, n_idx):
        e = A * n * n + B * n + C
        if e < n_idx:
            terms[e] = terms.get(e, 0) + sign(n)
    if not terms:
        return QSeries.zero(n_idx, D)
    return QSeries.from_coeffs(terms, prec=n_idx, denom=D)


def cubic_theta(kind: str, order) -> QSeries:
    """The cubic theta functions a, b, c as double sums over the hexagonal lattice."""
    if kind not in ("a", "b", "c"):
        raise ValueError(f"unknown cubic theta function {kind!r}")
    D = 3 if kind == "c" else 1
    n_idx = _index_bound(order, D)
    bound = math.isqrt(max(4 * n_idx // (3 * D), 0)) + 3
    if kind in ("a", "c"):
        counts = {}
        for n in range(-bound, bound + 1):
            for m in range(-bound, bound + 1):
                if kind == "a":
                    e = n * n + n * m + m * m
                else:
                    # (n+1/3)^2 + (n+1/3)(m+1/3) + (m+1/3)^2, scaled by 3
                    e = 3 * (n * n + n * m + m * m + n + m) + 1
                if e < n_idx:
                    counts[e] = counts.get(e, 0) + 1
        return QSeries.from_coeffs(counts, prec=n_idx, denom=D) if counts else QSeries.zero(n_idx, D)
    # b: weights omega^(n-m) accumulated in Q(zeta_3) = Q(omega)
    acc = {}
    for n in range(-bound, bound + 1):
        for m in range(-bound, bound + 1):
            e = n * n + n * m + m * m
            if e < n_idx:
                row = acc.setdefault(e, [0, 0, 0])
                row[(n - m) % 3] += 1
    # omega^2 = -1 - omega
    coeffs = {e: CycElement(3, [r[0] - r[2], r[1] - r[2]]) for e, r in acc.items()}
    series = QSeries.from_coeffs(coeffs, prec=n_idx, level=3)
    try:
        return series.demote()
    except ValueError as exc:
        raise ArithmeticError(f"cubic b(q) came out irrational: {exc}") from exc


# -- Lambert series -----------------------------------------------------------

def lambert_coefficients(seq, s: int, p: int, a: int, m: int, n_idx: int, level: int):
    """Integer rows and common denominator of sum seq(n) n^s q^(a n)/(1 - q^(m n))^p."""
    if p not in (1, 2):
        raise ValueError("pole power must be 1 or 2")
    d = euler_phi(level)
    parts = [_scalar_parts(v, level) for v in seq.values]
    den = 1
    for pd, _ in parts:
        den = den * pd // math.gcd(den, pd)
    vecs = [[x * (den // pd) for x in pn] for pd, pn in parts]
    nums = [0] * (n_idx * d)
    P = seq.period
    n = 1
    while a * n < n_idx:
        vec = vecs[n % P]
        if any(vec):
            w = n ** s
            e = a * n
            k = 1
            step = m * n
            while e < n_idx:
                mult = w * (k if p == 2 else 1)
                base = e * d
                for j, x in enumerate(vec):
                    if x:
                        nums[base + j] += mult * x
                e += step
                k += 1
        n += 1
    return den, nums


def lambert(seq, s: int = 0, p: int = 1, a: int = 1, m: int = 1, order=10) -> QSeries:
    """sum_{n>=1} seq(n) n^s q^(a n) / (1 - q^(m n))^p, exact below q**order."""
    if not isinstance(seq, PeriodicSeq):
        seq = PeriodicSeq(seq) if isinstance(seq, (list, tuple)) else PeriodicSeq([seq])
    level = seq.level
    n_idx = _index_bound(order, 1)
    den, nums = lambert_coefficients(seq, s, p, a, m, n_idx, level)
    return QSeries(level, 1, 0, n_idx, den, nums)


def invert_lambert(series: QSeries, s: int = 1, count: int | None = None):
    """Recover f(1..count) from a series 1 + sum f(n) n^s q^n/(1-q^n).

    The constant term is ignored; coefficients are c_N = sum_{d|N} f(d) d^s.
    """
    count = series.prec - 1 if count is None else count
    c = series.coefficients(0, count + 1)
    f = [None] * (count + 1)
    for N in range(1, count + 1):
        acc = c[N]
        for d in range(1, N):
            if N % d == 0:
                acc = acc - f[d] * d ** s
        f[N] = acc / Fraction(N ** s)
    return f[1:]


# -- Eisenstein series --------------------------------------------------------

@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2."""
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(math.comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return b[n]


def eisenstein_constant(k: int) -> Fraction:
    """2/zeta(1-k) for even k, using zeta(1-k) = -B_k/k."""
    return Fraction(2) / (-bernoulli(k) / k)


def eisenstein(k: int, j: int = 1, order=10) -> QSeries:
    """E_k(q^j) = 1 + (2/zeta(1-k)) sum sigma_{k-1}(n) q^(j n)."""
    if k < 2 or k % 2:
        raise ValueError(f"unsupported weight {k}")
    inner = math.ceil(Fraction(order) / j)
    series = lambert(PeriodicSeq([1]), s=k - 1, order=inner).scale(eisenstein_constant(k)) + 1
    return substitute_power(series, j)


# -- the e, P, Q family ---------------------------------------------------------

def _default_level(N):
    return math.lcm(4, 2 * N)


def epq_family(kind: str, alpha, level: int | None = None, order=10) -> QSeries:
    """e_alpha, P_alpha or Q_alpha with coefficients in Q(zeta_level).

    e = 1 + 4 tan(pi a) sum sin(2 n pi a) q^n/(1-q^n)
    P = 1 - 8 sin^2(pi a) sum cos(2 n pi a) n q^n/(1-q^n)
    Q = 1 - 8 tan(pi a) sin^2(pi a) sum sin(2 n pi a) n^2 q^n/(1-q^n)
    """
    alpha = Fraction(alpha)
    if alpha.denominator == 1:
        raise ValueError("alpha must not be an integer")
    p, N = alpha.numerator, alpha.denominator
    if level is None:
        level = _default_level(N)
    if kind == "e":
        seq = PeriodicSeq.from_function(lambda n: trig_value("sin", 2 * n * p, N, level), N)
        pref = trig_value("tan", p, N, level) * 4
        s = 0
    elif kind == "P":
        seq = PeriodicSeq.from_function(lambda n: trig_value("cos", 2 * n * p, N, level), N)
        pref = trig_value("sin", p, N, level) ** 2 * (-8)
        s = 1
    elif kind == "Q":
        seq = PeriodicSeq.from_function(lambda n: trig_value("sin", 2 * n * p, N, level), N)
        pref = trig_value("tan", p, N, level) * trig_value("sin", p, N, level) ** 2 * (-8)
        s = 2
    else:
        raise ValueError(f"unknown family member {kind!r}")
    body = lambert(seq, s=s, order=order).to_level(level)
    return body.scale(pref) + 1
