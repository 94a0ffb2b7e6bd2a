"""Truncated Laurent-Puiseux series in q^(1/D) with exact coefficients.

A :class:`QSeries` knows its coefficients exactly for exponent indices
``lo <= k < prec`` (the exponent of index k is k/D).  Everything at or above
``prec`` is unknown, and every operation computes the precision its result is
guaranteed to, so a residual can never look like zero merely because
information was dropped along the way.

Storage is dense: a common positive denominator ``den`` and a flat list of
integer numerators, d = phi(level) of them per exponent index.  Level 1 is the
rational field.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from . import kernel
from .ring import CycElement, LevelError, euler_phi, normalize_level

__all__ = [
    "PrecisionError",
    "QSeries",
    "ZeroTest",
    "is_zero_to",
    "monomial",
    "ser_add",
    "ser_inv",
    "ser_mul",
    "ser_neg",
    "ser_pow",
    "ser_pow_rational",
    "substitute_power",
    "theta_op",
]


class PrecisionError(ArithmeticError):
    """A coefficient beyond the known precision was requested."""


@dataclass(frozen=True)
class ZeroTest:
    ok: bool
    order: Fraction
    exponent: Fraction | None = None
    coefficient: object = None

    def __bool__(self):
        return self.ok


def _scalar_parts(c, level):
    """(den, numerators) of a scalar embedded at ``level``."""
    if isinstance(c, CycElement):
        if c.level != level:
            if c.level == 1:
                c = CycElement.from_rational(c.coords[0], level)
            elif level == 1:
                raise LevelError("cannot place a cyclotomic scalar in a rational series")
            else:
                raise LevelError(f"level mismatch: {c.level} vs {level}")
        coords = c.coords
    else:
        coords = [Fraction(c)] + [Fraction(0)] * (euler_phi(level) - 1)
    den = 1
    for x in coords:
        den = den * x.denominator // math.gcd(den, x.denominator)
    return den, [x.numerator * (den // x.denominator) for x in coords]


def _scalar_level(c):
    return c.level if isinstance(c, CycElement) else 1


class QSeries:
    """An immutable truncated series sum c_k q^(k/D), lo <= k < prec."""

    __slots__ = ("level", "denom", "lo", "prec", "den", "nums")

    def __init__(self, level, denom, lo, prec, den, nums, _normalized=False):
        if denom < 1:
            raise ValueError("exponent denominator must be positive")
        if lo > prec:
            raise ValueError("lo must not exceed prec")
        self.level = normalize_level(level)
        self.denom = denom
        self.lo = lo
        self.prec = prec
        self.den = den
        self.nums = nums
        if not _normalized:
            self._normalize()
        elif type(nums) is not tuple:
            self.nums = tuple(nums)

    def _normalize(self):
        d = euler_phi(self.level)
        nums = self.nums
        n = self.prec - self.lo
        if len(nums) > n * d:
            nums = nums[:n * d]
        elif len(nums) < n * d:
            nums = list(nums) + [0] * (n * d - len(nums))
        # strip leading zero rows so that lo is the true valuation
        start = 0
        total = len(nums)
        while start < total and not any(nums[start:start + d]):
            start += d
        if start:
            nums = nums[start:]
            self.lo += start // d
        g = math.gcd(self.den, *nums) if nums else self.den
        if g > 1:
            nums = [x // g for x in nums]
            self.den //= g
        if not nums:
            self.den = 1
        self.nums = tuple(nums)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs, lo=0, prec=None, denom=1, level=None):
        """Build from a sequence (starting at index ``lo``) or a dict index -> scalar."""
        if isinstance(coeffs, dict):
            items = coeffs
            if prec is None:
                raise ValueError("prec is required for dict input")
            lo = min(items, default=prec) if items else prec
            lo = min(lo, prec)
        else:
            items = {lo + i: c for i, c in enumerate(coeffs)}
            if prec is None:
                prec = lo + len(coeffs)
        if level is None:
            level = 1
            for c in items.values():
                if isinstance(c, CycElement) and c.level != 1:
                    level = c.level
                    break
        level = normalize_level(level)
        d = euler_phi(level)
        parts = {k: _scalar_parts(c, level) for k, c in items.items() if lo <= k < prec}
        den = 1
        for pd, _ in parts.values():
            den = den * pd // math.gcd(den, pd)
        nums = [0] * ((prec - lo) * d)
        for k, (pd, pn) in parts.items():
            f = den // pd
            base = (k - lo) * d
            for j, x in enumerate(pn):
                nums[base + j] = x * f
        return cls(level, denom, lo, prec, den, nums)

    @classmethod
    def zero(cls, prec, denom=1, level=1):
        return cls(level, denom, prec, prec, 1, ())

    # -- inspection --------------------------------------------------------

    @property
    def order(self) -> Fraction:
        """Exponent bound: coefficients are exact below q**order."""
        return Fraction(self.prec, self.denom)

    @property
    def valuation(self) -> Fraction | None:
        return None if self.lo == self.prec else Fraction(self.lo, self.denom)

    @property
    def width(self):
        return euler_phi(self.level)

    def is_rational(self):
        return self.level == 1

    def coeff_index(self, k: int):
        """Coefficient of q^(k/D); rational series give a Fraction."""
        if k >= self.prec:
            raise PrecisionError(f"index {k} is beyond precision {self.prec} (denominator {self.denom})")
        if k < self.lo:
            return Fraction(0) if self.level == 1 else CycElement.from_rational(0, self.level)
        d = self.width
        row = self.nums[(k - self.lo) * d:(k - self.lo + 1) * d]
        if self.level == 1:
            return Fraction(row[0], self.den)
        return CycElement(self.level, [Fraction(x, self.den) for x in row])

    def __getitem__(self, exponent):
        """Coefficient of q**exponent (exponent may be a Fraction)."""
        if Fraction(exponent) >= self.order:
            raise PrecisionError(f"q^{exponent} is beyond the known order {self.order}")
        e = Fraction(exponent) * self.denom
        if e.denominator != 1:
            return Fraction(0) if self.level == 1 else CycElement.from_rational(0, self.level)
        return self.coeff_index(int(e))

    def items(self):
        """Yield (exponent, coefficient) for nonzero known coefficients."""
        d = self.width
        for i in range(self.prec - self.lo):
            if any(self.nums[i * d:(i + 1) * d]):
                k = self.lo + i
                yield Fraction(k, self.denom), self.coeff_index(k)

    def coefficients(self, start=None, stop=None):
        """Coefficients for indices start..stop-1 (defaults: 0 and prec)."""
        start = 0 if start is None else start
        stop = self.prec if stop is None else stop
        return [self.coeff_index(k) for k in range(start, stop)]

    def __repr__(self):
        terms = []
        for e, c in list(self.items())[:6]:
            terms.append(f"({c})*q^{e}")
        body = " + ".join(terms) if terms else "0"
        return f"QSeries[{body} + O(q^{self.order}); level={self.level}]"

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self.level, self.denom, self.lo, self.prec, self.den, self.nums) == (
            other.level, other.denom, other.lo, other.prec, other.den, other.nums)

    def __hash__(self):
        return hash((self.level, self.denom, self.lo, self.prec, self.den, self.nums))

    # -- change of representation -----------------------------------------

    def lift_denom(self, denom: int) -> "QSeries":
        """Re-express over exponent denominator ``denom`` (a multiple of D)."""
        if denom == self.denom:
            return self
        if denom % self.denom:
            raise ValueError(f"{denom} is not a multiple of {self.denom}")
        t = denom // self.denom
        d = self.width
        n = self.prec - self.lo
        nums = [0] * (n * t * d)
        for i in range(n):
            nums[i * t * d:i * t * d + d] = self.nums[i * d:(i + 1) * d]
        return QSeries(self.level, denom, self.lo * t, self.prec * t, self.den, nums)

    def reduce_denom(self) -> "QSeries":
        """Smallest exponent denominator able to hold every nonzero term.

        The precision becomes ceil(prec/g) in the new units, which never claims
        more than was known.
        """
        d = self.width
        g = self.denom
        for i in range(self.prec - self.lo):
            if any(self.nums[i * d:(i + 1) * d]):
                g = math.gcd(g, self.lo + i)
                if g == 1:
                    return self
        if g <= 1:
            return self
        new = {}
        for i in range(self.prec - self.lo):
            row = self.nums[i * d:(i + 1) * d]
            if any(row):
                new[(self.lo + i) // g] = row
        prec = -((-self.prec) // g)
        lo = min(new) if new else prec
        nums = [0] * ((prec - lo) * d)
        for k, row in new.items():
            nums[(k - lo) * d:(k - lo + 1) * d] = row
        return QSeries(self.level, self.denom // g, lo, prec, self.den, nums)

    def to_level(self, level: int) -> "QSeries":
        """Embed into Q(zeta_level); only rational series can change level."""
        level = normalize_level(level)
        if level == self.level:
            return self
        if self.level != 1:
            raise LevelError(f"cannot move a level-{self.level} series to level {level}")
        d = euler_phi(level)
        nums = [0] * (len(self.nums) * d)
        nums[::d] = self.nums
        return QSeries(level, self.denom, self.lo, self.prec, self.den, nums, _normalized=True)

    def demote(self) -> "QSeries":
        """Return the same series over Q, failing if any coefficient is irrational."""
        if self.level == 1:
            return self
        d = self.width
        for i in range(len(self.nums) // d):
            if any(self.nums[i * d + 1:(i + 1) * d]):
                raise ValueError(f"coefficient at index {self.lo + i} is not rational")
        return QSeries(1, self.denom, self.lo, self.prec, self.den, list(self.nums[::d]))

    def truncate(self, order) -> "QSeries":
        """Forget everything at or above q**order."""
        prec = math.ceil(Fraction(order) * self.denom)
        if prec >= self.prec:
            return self
        lo = min(self.lo, prec)
        return QSeries(self.level, self.denom, lo, prec, self.den, self.nums[:(prec - lo) * self.width])

    # -- arithmetic --------------------------------------------------------

    def _common(self, other):
        """Bring other (series or scalar) to a compatible series pair."""
        if not isinstance(other, QSeries):
            return None
        a, b = self, other
        if a.level != b.level:
            if a.level == 1:
                a = a.to_level(b.level)
            elif b.level == 1:
                b = b.to_level(a.level)
            else:
                raise LevelError(f"incompatible cyclotomic levels {a.level} and {b.level}")
        if a.denom != b.denom:
            D = a.denom * b.denom // math.gcd(a.denom, b.denom)
            a, b = a.lift_denom(D), b.lift_denom(D)
        return a, b

    def _add_scalar(self, c):
        level = self.level
        if _scalar_level(c) != 1 and level == 1:
            return self.to_level(_scalar_level(c))._add_scalar(c)
        if self.prec <= 0:
            return self
        return self + QSeries.from_coeffs({0: c}, prec=self.prec, denom=self.denom, level=level)

    def __add__(self, other):
        if isinstance(other, (int, _RationalABC, CycElement)):
            return self._add_scalar(other)
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        d = a.width
        prec = min(a.prec, b.prec)
        lo = min(a.lo, b.lo, prec)
        den = a.den * b.den // math.gcd(a.den, b.den)
        fa, fb = den // a.den, den // b.den
        nums = [0] * ((prec - lo) * d)
        for s, f in ((a, fa), (b, fb)):
            off = (s.lo - lo) * d
            stop = min(len(s.nums), (prec - s.lo) * d) if s.lo < prec else 0
            for i in range(stop):
                x = s.nums[i]
                if x:
                    nums[off + i] += x * f
        return QSeries(a.level, a.denom, lo, prec, den, nums)

    __radd__ = __add__

    def __neg__(self):
        return QSeries(self.level, self.denom, self.lo, self.prec, self.den, [-x for x in self.nums], _normalized=True)

    def __sub__(self, other):
        if isinstance(other, (int, _RationalABC, CycElement)):
            return self._add_scalar(-other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "QSeries":
        """Multiply by a scalar."""
        lvl = _scalar_level(c)
        s = self
        if lvl != 1 and s.level == 1:
            s = s.to_level(lvl)
        cden, cnums = _scalar_parts(c, s.level)
        d = s.width
        if d == 1:
            nums = [x * cnums[0] for x in s.nums]
        else:
            nums = kernel.conv_naive(s.nums, s.prec - s.lo, cnums, 1, s.level, s.prec - s.lo)
        return QSeries(s.level, s.denom, s.lo, s.prec, s.den * cden, nums)

    def __mul__(self, other):
        if isinstance(other, (int, _RationalABC, CycElement)):
            return self.scale(other)
        pair = self._common(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        lo = a.lo + b.lo
        prec = min(a.prec + b.lo, b.prec + a.lo)
        n_out = prec - lo
        na, nb = a.prec - a.lo, b.prec - b.lo
        if n_out <= 0 or na == 0 or nb == 0:
            return QSeries.zero(prec, a.denom, a.level)
        nums = kernel.conv(a.nums, na, b.nums, nb, a.level, n_out)
        return QSeries(a.level, a.denom, lo, prec, a.den * b.den, nums)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC, CycElement)):
            if isinstance(other, CycElement):
                return self.scale(other.inverse())
            return self.scale(1 / Fraction(other))
        if not isinstance(other, QSeries):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if not isinstance(e, int):
            e = Fraction(e)
            return self.pow_rational(e.numerator, e.denominator)
        return ser_pow(self, e)

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^(k/D) exactly (precision moves with the series)."""
        return QSeries(self.level, self.denom, self.lo + k, self.prec + k, self.den, self.nums, _normalized=True)

    def inverse(self) -> "QSeries":
        return ser_inv(self)

    def pow_rational(self, a: int, b: int) -> "QSeries":
        return ser_pow_rational(self, a, b)

    def theta(self) -> "QSeries":
        return theta_op(self)

    def substitute(self, j: int) -> "QSeries":
        return substitute_power(self, j)

    def is_zero_to(self, order) -> ZeroTest:
        order = Fraction(order)
        return is_zero_to(self, order.numerator, order.denominator)


# -- module-level operations -------------------------------------------------

def monomial(c, k: int, D: int = 1, prec: int | None = None) -> QSeries:
    """c * q^(k/D) + O(q^(prec/D))."""
    if prec is None:
        prec = k + 1
    if prec <= k:
        raise ValueError("prec must exceed the monomial's exponent index")
    return QSeries.from_coeffs({k: c}, prec=prec, denom=D, level=_scalar_level(c))


def ser_add(f: QSeries, g: QSeries) -> QSeries:
    return f + g


def ser_mul(f: QSeries, g: QSeries) -> QSeries:
    return f * g


def ser_neg(f: QSeries) -> QSeries:
    return -f


def _leading_scalar(f: QSeries):
    return f.coeff_index(f.lo)


def _newton_inverse(den, nums, n, level):
    """Inverse of the unit series nums/den (constant term 1) to n rows.

    Returns (den', nums') and uses doubling g <- g*(2 - f*g).
    """
    d = euler_phi(level)
    one = [1] + [0] * (d - 1)
    gden, g = 1, list(one)
    m = 1
    while m < n:
        m2 = min(2 * m, n)
        fg = kernel.conv(nums, min(n, len(nums) // d), g, m, level, m2)
        # 2 - f*g, with f*g over denominator den*gden
        fd = den * gden
        corr = [-x for x in fg]
        corr[0] += 2 * fd
        g = kernel.conv(g, m, corr, m2, level, m2)
        gden = gden * fd
        gcd = math.gcd(gden, *g)
        if gcd > 1:
            g = [x // gcd for x in g]
            gden //= gcd
        m = m2
    return gden, g


def ser_inv(f: QSeries) -> QSeries:
    """Multiplicative inverse; the leading monomial is factored out first."""
    if f.lo == f.prec:
        raise ZeroDivisionError("series is zero on its whole known range")
    n = f.prec - f.lo
    lead = _leading_scalar(f)
    inv_lead = (1 / lead) if not isinstance(lead, CycElement) else lead.inverse()
    unit = f.shift(-f.lo).scale(inv_lead)
    gden, g = _newton_inverse(unit.den, list(unit.nums), n, f.level)
    out = QSeries(f.level, f.denom, 0, n, gden, g).scale(inv_lead)
    return out.shift(-f.lo)


def ser_pow(f: QSeries, e: int) -> QSeries:
    """Integer power by repeated squaring."""
    if e < 0:
        return ser_pow(ser_inv(f), -e)
    if e == 0:
        if f.lo < 0:
            raise PrecisionError("0th power of a Laurent series has undefined precision here")
        return QSeries.from_coeffs({0: 1}, prec=max(f.prec - f.lo, 1), denom=f.denom, level=f.level)
    result = None
    base = f
    while e:
        if e & 1:
            result = base if result is None else result * base
        e >>= 1
        if e:
            base = base * base
    return result


def ser_pow_rational(f: QSeries, a: int, b: int) -> QSeries:
    """The power f^(a/b) of a series with constant term exactly 1.

    The result g has constant term 1 and satisfies b*f*g' = a*f'*g, which
    gives the recurrence g_n = (1/(b n)) sum_{k=1..n} (a k - b (n-k)) f_k g_{n-k}.
    """
    if b <= 0:
        raise ValueError("denominator of the exponent must be positive")
    if f.lo != 0 or f.coeff_index(0) != 1:
        raise ValueError("rational powers need a series with constant term exactly 1")
    n = f.prec
    fc = f.coefficients(0, n)
    one = fc[0]
    g = [one]
    for m in range(1, n):
        acc = 0
        for k in range(1, m + 1):
            fk = fc[k]
            if fk:
                acc = acc + fk * g[m - k] * (a * k - b * (m - k))
        g.append(acc * Fraction(1, b * m))
    return QSeries.from_coeffs(g, lo=0, prec=n, denom=f.denom, level=f.level)


def theta_op(f: QSeries) -> QSeries:
    """The operator q d/dq: the coefficient at q^(k/D) is multiplied by k/D."""
    d = f.width
    nums = [x * (f.lo + i // d) for i, x in enumerate(f.nums)]
    return QSeries(f.level, f.denom, f.lo, f.prec, f.den * f.denom, nums)


def substitute_power(f: QSeries, j: int) -> QSeries:
    """q -> q^j; index k becomes j*k and the precision scales by j."""
    if j < 1:
        raise ValueError("substitution power must be a positive integer")
    if j == 1:
        return f
    d = f.width
    n = f.prec - f.lo
    nums = [0] * (n * j * d)
    for i in range(n):
        nums[i * j * d:i * j * d + d] = f.nums[i * d:(i + 1) * d]
    return QSeries(f.level, f.denom, f.lo * j, f.prec * j, f.den, nums[:((f.prec - f.lo) * j) * d])


def is_zero_to(f: QSeries, order_num: int, order_den: int = 1) -> ZeroTest:
    """Whether every coefficient below q^(order_num/order_den) vanishes.

    Asking for more than the series knows raises :class:`PrecisionError`.
    """
    order = Fraction(order_num, order_den)
    if order > f.order:
        raise PrecisionError(f"requested order {order} exceeds known precision {f.order}")
    if f.lo < f.prec and Fraction(f.lo, f.denom) < order:
        return ZeroTest(False, order, Fraction(f.lo, f.denom), f.coeff_index(f.lo))
    return ZeroTest(True, order)
