from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, strategies as st

from septic_qseries.ring import (
    CycElement,
    LevelError,
    PoleError,
    cyc_arith,
    cyclotomic_polynomial,
    embed,
    euler_phi,
    jacobi_symbol,
    to_float,
    trig_value,
)
from strategies import cyc_elements, small_fraction


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        for j, v in enumerate(b):
            out[i + j] += u * v
    return out


def test_cyclotomic_small():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)


def test_cyclotomic_28_matches_sympy():
    x = sympy.symbols("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(28, x), x).all_coeffs()[::-1]
    phi28 = cyclotomic_polynomial(28)
    assert list(phi28) == [int(c) for c in expected]
    assert len(phi28) - 1 == 12 == euler_phi(28)


@pytest.mark.parametrize("m", range(1, 61))
def test_divisor_product_is_x_pow_m_minus_one(m):
    prod = [1]
    for d in range(1, m + 1):
        if m % d == 0:
            prod = _poly_mul(prod, cyclotomic_polynomial(d))
    assert prod == [-1] + [0] * (m - 1) + [1]


@pytest.mark.parametrize("m", [3, 4, 5, 7, 12, 14, 28, 56])
def test_zeta_is_a_root(m):
    phi = cyclotomic_polynomial(m)
    z = CycElement.zeta(m)
    acc = CycElement.from_rational(0, m)
    for k, c in enumerate(phi):
        acc = acc + z ** k * c
    assert acc.is_zero()
    assert z ** m == 1


def test_zeta4_squared():
    i = CycElement.zeta(4)
    assert cyc_arith(i, i, "mul") == CycElement.from_rational(-1, 4)


def test_primitive_seventh_roots_sum():
    s = sum((CycElement.zeta(7, k) for k in range(1, 7)), CycElement.from_rational(0, 7))
    assert s == -1


def test_self_division():
    a = CycElement(28, [Fraction(k, 3) for k in range(12)])
    assert cyc_arith(a, a, "div") == 1


def test_level_mismatch_and_zero_division():
    with pytest.raises(LevelError):
        cyc_arith(CycElement.zeta(4), CycElement.zeta(12), "add")
    with pytest.raises(ZeroDivisionError):
        cyc_arith(CycElement.zeta(4), embed(0, 4), "div")


def test_trig_examples():
    assert trig_value("cos", 2, 3, 12) == Fraction(-1, 2)
    assert trig_value("sin", 1, 2, 4) == 1
    assert trig_value("tan", 1, 7, 28) * trig_value("cot", 1, 7, 28) == 1


def test_trig_errors():
    with pytest.raises(PoleError):
        trig_value("cot", 0, 1, 4)
    with pytest.raises(PoleError):
        trig_value("tan", 1, 2, 4)
    with pytest.raises(LevelError):
        trig_value("sin", 1, 7, 12)
    with pytest.raises(LevelError):
        trig_value("sin", 1, 2, 2)


def test_embed_and_float():
    assert (embed(Fraction(3, 2), 28) - embed(Fraction(3, 2), 28)).is_zero()
    assert to_float(CycElement.zeta(28) ** 28) == 1
    with mpmath.workdps(40):
        v = to_float(trig_value("cos", 2, 7, 28))
        assert abs(v - mpmath.cos(2 * mpmath.pi / 7)) < mpmath.mpf(10) ** -35
        assert abs(v.real - mpmath.mpf("0.62348980185873353052500488400423981063")) < mpmath.mpf(10) ** -35
        # -0.2225 is cos(4 pi / 7)
        w = to_float(trig_value("cos", 4, 7, 28))
        assert abs(w.real + mpmath.mpf("0.22252093395631440428890256449679475947")) < mpmath.mpf(10) ** -35


def test_to_float_embedding_checks():
    with pytest.raises(ValueError):
        to_float(CycElement.zeta(28), embedding=2)
    # a Galois conjugate embedding
    with mpmath.workdps(40):
        v = to_float(CycElement.zeta(28), embedding=3)
        assert abs(v - mpmath.expjpi(mpmath.mpf(6) / 28)) < mpmath.mpf(10) ** -35


def test_json_and_str():
    a = CycElement(4, [Fraction(1, 2), -3])
    assert a.to_json() == {"level": 4, "coords": ["1/2", "-3"]}
    assert "z4" in str(a)


@pytest.mark.parametrize("n", [3, 5, 7, 11, 15, 21])
def test_jacobi_symbol_matches_sympy(n):
    for a in range(-n, 2 * n):
        assert jacobi_symbol(a, n) == sympy.jacobi_symbol(a % n, n)


# -- properties -------------------------------------------------------------------

@st.composite
def same_level_triple(draw):
    m = draw(st.sampled_from((3, 4, 7, 12, 28)))
    return tuple(draw(cyc_elements(m)) for _ in range(3))


@given(same_level_triple())
def test_field_axioms(t):
    a, b, c = t
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inverse() == 1


@st.composite
def angle(draw):
    m = draw(st.sampled_from((4, 8, 12, 20, 28, 56)))
    b = draw(st.sampled_from([d for d in range(1, m + 1) if m % (2 * d) == 0]))
    a = draw(st.integers(-3 * b, 3 * b))
    return a, b, m


@given(angle())
def test_pythagoras_and_tan(t):
    a, b, m = t
    s, c = trig_value("sin", a, b, m), trig_value("cos", a, b, m)
    assert s * s + c * c == 1
    if not c.is_zero():
        assert trig_value("tan", a, b, m) == s / c


@given(small_fraction, small_fraction, st.sampled_from((3, 4, 7, 28)))
def test_embed_homomorphism(r, s, m):
    assert embed(r, m) + embed(s, m) == embed(r + s, m)
    assert embed(r, m) * embed(s, m) == embed(r * s, m)
    assert (embed(r, m) == embed(s, m)) == (r == s)


@given(same_level_triple())
def test_to_float_is_multiplicative(t):
    a, b, _ = t
    with mpmath.workdps(30):
        lhs = to_float(a * b, dps=30)
        rhs = to_float(a, dps=30) * to_float(b, dps=30)
        assert abs(lhs - rhs) < mpmath.mpf(10) ** -20 * (1 + abs(rhs))
