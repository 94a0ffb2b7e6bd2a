from fractions import Fraction

import pytest

from septic_qseries.catalog import SEPTIC_SEQUENCES
from septic_qseries.constants import (
    ConstantMismatch,
    closed_form_constants,
    delta,
    dft_constants,
    dft_sine,
    efund_constants,
    kappa,
    lam,
    mu,
    phi_constants,
    recover_logderiv_tables,
)
from septic_qseries.constructors import PeriodicSeq
from septic_qseries.ring import CycElement, trig_value


def test_dft_of_zero():
    assert all(v.is_zero() for v in dft_sine(PeriodicSeq([0] * 7)))


def test_dft_rejects_non_odd():
    with pytest.raises(ValueError):
        dft_sine(PeriodicSeq([0, 1, 1, 1, 1, 1, 1]))


@pytest.mark.parametrize("name", "xyz")
def test_dft_reconstructs_sequence(name):
    seq = SEPTIC_SEQUENCES[name]
    ells = dft_sine(PeriodicSeq(seq))
    for n in range(7):
        value = sum((ells[m - 1] * trig_value("sin", 2 * m * n, 7, 28) for m in (1, 2, 3)),
                    CycElement.from_rational(0, 28))
        assert value == seq[n]


def test_closed_forms_equal_transforms():
    closed, derived = closed_form_constants(), dft_constants()
    for name in "xyz":
        assert closed[name] == derived[name]
    consts = efund_constants()
    assert consts.alphas == tuple(closed["x"])


def test_alpha2_closed_form():
    a2 = closed_form_constants()["x"][1]
    assert a2 == (1 + 6 * trig_value("sin", 3, 14, 28)) / 14


def test_gamma1_closed_form():
    g1 = closed_form_constants()["z"][0]
    csc = lambda a, b: 1 / trig_value("sin", a, b, 28)  # noqa: E731
    assert g1 == (4 + csc(1, 14) * (3 + csc(3, 14))) / 28


@pytest.mark.parametrize("name,total", [("x", 0), ("y", 0), ("z", 1)])
def test_constant_terms(name, total):
    # x, y vanish at q = 0, z = 1 + ...; each e_{j/7} starts with 1
    assert sum(closed_form_constants()[name], CycElement.from_rational(0, 28)) == total


def test_quadratic_tables_x():
    phis, a, b, total = phi_constants("x")
    assert a.values == (0, 37, 25, 61, 61, 25, 37)
    assert b.values == (222,) + (-37,) * 6
    assert total == 5
    assert len(phis) == 6 and all(p.level == 28 for p in phis)


@pytest.mark.parametrize("name,a_vals,total", [
    ("y", (0, 25, 61, 37, 37, 61, 25), 5),
    ("z", (0, 61, 37, 25, 25, 37, 61), -7),
])
def test_quadratic_tables_y_z(name, a_vals, total):
    _, a, b, s = phi_constants(name)
    assert a.values == a_vals
    assert b.values == (222,) + (-37,) * 6
    assert s == total
    assert all(isinstance(v, Fraction) for v in a.values + b.values)


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("fn", [delta, lam, kappa, mu])
def test_trig_sequences_are_7_periodic(fn, k):
    alpha = Fraction(k, 7)
    vals = [fn(alpha, n) for n in range(22)]
    assert all(vals[n] == vals[n % 7] for n in range(22))


def test_logderiv_tables():
    tables = recover_logderiv_tables()
    assert tables["x"] == (1, (-2, 0, -1, 2, 2, -1, 0))
    assert tables["y"] == (1, (-2, -1, 2, 0, 0, 2, -1))
    assert tables["z"] == (0, (-2, 2, 0, -1, -1, 0, 2))


def test_mismatch_is_an_assertion():
    assert issubclass(ConstantMismatch, AssertionError)
