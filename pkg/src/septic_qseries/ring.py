"""Exact coefficient rings: rationals and cyclotomic fields Q(zeta_M).

Rationals are plain :class:`fractions.Fraction` values.  An element of
Q(zeta_M) is stored as its coordinate vector in the power basis
1, zeta, ..., zeta^(phi(M)-1), always reduced modulo the M-th cyclotomic
polynomial, so equality is exact coordinatewise comparison.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

import mpmath

__all__ = [
    "CycElement",
    "LevelError",
    "PoleError",
    "cyc_arith",
    "cyclotomic_polynomial",
    "embed",
    "euler_phi",
    "jacobi_symbol",
    "to_float",
    "trig_value",
]


class LevelError(ValueError):
    """Operands live in different cyclotomic fields, or the level is too small."""


class PoleError(ZeroDivisionError):
    """A trigonometric function was requested at one of its poles."""


# -- integer polynomials (lists of coefficients, lowest degree first) -------

def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polydivmod(a, b):
    """Quotient and remainder of a by b over Q (b nonzero, trimmed)."""
    a = list(a)
    lead = b[-1]
    q = [0] * max(len(a) - len(b) + 1, 1)
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = Fraction(a[-1]) / lead
        if c.denominator == 1:
            c = c.numerator
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        a.pop()
    return _trim(q), a


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    result, n, p = m, m, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, lowest degree first.

    Computed by dividing x^m - 1 by Phi_d for every proper divisor d of m.
    """
    if m < 1:
        raise ValueError(f"cyclotomic level must be positive, got {m}")
    p = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            q, r = _polydivmod(p, list(cyclotomic_polynomial(d)))
            assert not r, "exact division failed"
            p = q
    return tuple(int(c) for c in p)


@lru_cache(maxsize=None)
def reduction_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Row k gives zeta_m^k in the power basis, for 0 <= k < max(m, 2*phi(m) - 1)."""
    phi = cyclotomic_polynomial(m)
    d = len(phi) - 1
    rows = []
    cur = [1] + [0] * (d - 1)
    for _ in range(max(m, 2 * d - 1)):
        rows.append(tuple(cur))
        # multiply by zeta, then fold the top coefficient using the monic Phi_m
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(d):
                cur[i] -= top * phi[i]
    return tuple(rows)


def normalize_level(m: int) -> int:
    """Q(zeta_2) = Q(zeta_1) = Q; both are represented by level 1."""
    return 1 if m in (1, 2) else m


def _reduce(vec, m):
    """Reduce a polynomial in zeta_m (any length) to phi(m) coordinates."""
    d = euler_phi(m)
    if len(vec) <= d:
        return list(vec) + [0] * (d - len(vec))
    out = list(vec[:d])
    table = reduction_table(m)
    for k in range(d, len(vec)):
        c = vec[k]
        if c:
            for i, r in enumerate(table[k % m] if k >= len(table) else table[k]):
                if r:
                    out[i] += c * r
    return out


class CycElement:
    """An element of the cyclotomic field Q(zeta_level)."""

    __slots__ = ("level", "coords", "_hash")

    def __init__(self, level: int, coords):
        level = normalize_level(level)
        d = euler_phi(level)
        coords = [Fraction(c) for c in coords]
        if len(coords) != d:
            coords = _reduce(coords, level) if len(coords) > d else coords + [Fraction(0)] * (d - len(coords))
        self.level = level
        self.coords = tuple(coords)
        self._hash = None

    # construction helpers
    @classmethod
    def zeta(cls, level: int, k: int = 1) -> "CycElement":
        """zeta_level**k."""
        if level == 2:
            return cls(1, [(-1) ** (k % 2)])
        level = normalize_level(level)
        return cls(level, reduction_table(level)[k % level])

    @classmethod
    def from_rational(cls, r, level: int) -> "CycElement":
        d = euler_phi(normalize_level(level))
        return cls(level, [Fraction(r)] + [0] * (d - 1))

    # predicates
    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coords[0]

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, CycElement):
            if other.level != self.level:
                if other.level == 1:
                    return CycElement.from_rational(other.coords[0], self.level)
                if self.level == 1:
                    return other
                raise LevelError(f"level mismatch: {self.level} vs {other.level}")
            return other
        if isinstance(other, (int, _RationalABC)):
            return CycElement.from_rational(other, self.level)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.level == 1 and o.level != 1:
            return o + self
        return CycElement(self.level, [a + b for a, b in zip(self.coords, o.coords)])

    __radd__ = __add__

    def __neg__(self):
        return CycElement(self.level, [-a for a in self.coords])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.level == 1 and o.level != 1:
            return o * self
        if o.is_rational():
            c = o.coords[0]
            return CycElement(self.level, [a * c for a in self.coords])
        return CycElement(self.level, _reduce(_polymul(list(self.coords), list(o.coords)), self.level))

    __rmul__ = __mul__

    def inverse(self) -> "CycElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.is_rational():
            return CycElement.from_rational(1 / self.coords[0], self.level)
        # extended Euclid: s*a + t*Phi = g, with g a nonzero constant
        a = _trim(list(self.coords))
        b = list(cyclotomic_polynomial(self.level))
        s0, s1 = [Fraction(1)], [Fraction(0)]
        r0, r1 = a, b
        while len(r1) > 0:
            q, r = _polydivmod(r0, r1)
            r0, r1 = r1, r
            prod = _polymul(q, s1) if q and s1 else [0]
            n = max(len(s0), len(prod))
            s0, s1 = s1, [
                (s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0) for i in range(n)
            ]
        g = Fraction(r0[0])
        return CycElement(self.level, _reduce([c / g for c in s0], self.level))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycElement.from_rational(1, self.level)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CycElement):
            if other.level == self.level:
                return self.coords == other.coords
            return self.is_rational() and other.is_rational() and self.coords[0] == other.coords[0]
        if isinstance(other, (int, _RationalABC)):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coords[0]) if self.is_rational() else hash((self.level, self.coords))
        return self._hash

    def __repr__(self):
        return f"CycElement({self.level}, {[str(c) for c in self.coords]})"

    def __str__(self):
        if self.is_rational():
            return str(self.coords[0])
        terms = []
        for k, c in enumerate(self.coords):
            if c:
                mono = "1" if k == 0 else (f"z{self.level}" if k == 1 else f"z{self.level}^{k}")
                terms.append(f"({c})*{mono}" if k else f"{c}")
        return " + ".join(terms)

    def to_json(self):
        return {"level": self.level, "coords": [str(c) for c in self.coords]}


def embed(r, level: int) -> CycElement:
    """Embed a rational into Q(zeta_level)."""
    return CycElement.from_rational(r, level)


def cyc_arith(a: CycElement, b: CycElement, kind: str) -> CycElement:
    """Field arithmetic with a strict same-level requirement."""
    if a.level != b.level:
        raise LevelError(f"level mismatch: {a.level} vs {b.level}")
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "div":
        if b.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        return a / b
    raise ValueError(f"unknown operation {kind!r}")


def trig_value(kind: str, numerator: int, denominator: int, level: int) -> CycElement:
    """Exact value of sin, cos, tan, cot or csc at pi*numerator/denominator."""
    if denominator <= 0:
        raise ValueError("denominator must be positive")
    angle = Fraction(numerator, denominator)
    if level % 4 or level % (2 * angle.denominator):
        raise LevelError(
            f"level {level} cannot hold trig values at pi*{angle}; need 4 | M and {2 * angle.denominator} | M"
        )
    k = angle.numerator * level // (2 * angle.denominator)
    zk = CycElement.zeta(level, k % level)
    zmk = CycElement.zeta(level, (-k) % level)
    i = CycElement.zeta(level, level // 4)
    cos = (zk + zmk) * Fraction(1, 2)
    sin = (zk - zmk) * i * Fraction(-1, 2)
    if kind == "cos":
        return cos
    if kind == "sin":
        return sin
    if kind == "tan":
        if cos.is_zero():
            raise PoleError(f"tan has a pole at pi*{angle}")
        return sin / cos
    if kind == "cot":
        if sin.is_zero():
            raise PoleError(f"cot has a pole at pi*{angle}")
        return cos / sin
    if kind == "csc":
        if sin.is_zero():
            raise PoleError(f"csc has a pole at pi*{angle}")
        return sin.inverse()
    raise ValueError(f"unknown trig function {kind!r}")


def to_float(a, embedding: int = 1, dps: int = 40) -> mpmath.mpc:
    """Complex approximation sending zeta_M to exp(2*pi*i*embedding/M).

    For display only; verification never looks at these numbers.
    """
    if not isinstance(a, CycElement):
        with mpmath.workdps(dps):
            return mpmath.mpc(mpmath.mpf(Fraction(a).numerator) / Fraction(a).denominator)
    m = a.level
    if math.gcd(embedding, m) != 1:
        raise ValueError(f"embedding index {embedding} is not coprime to {m}")
    with mpmath.workdps(dps + 10):
        total = mpmath.mpc(0)
        for k, c in enumerate(a.coords):
            if c:
                val = mpmath.mpf(c.numerator) / c.denominator
                if k == 0:
                    total += val
                else:
                    total += val * mpmath.expjpi(mpmath.mpf(2 * embedding * k) / m)
    with mpmath.workdps(dps):
        return +total


def jacobi_symbol(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("n must be odd and positive")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0
