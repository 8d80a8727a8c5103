import random

import pytest

from formcalc.errors import UnderResolvedError
from formcalc.forms import Space
from formcalc.homotopy import homotopy_H
from formcalc.oracle import QuadratureRule, agree, fd_d_at, h_minus_at, h_plus_at, quad_H_at, symbolic_at
from formcalc.dolbeault import h_minus, h_plus
from formcalc.polynomial import GaussRat
from formcalc.randforms import complex_corpus, real_corpus


@pytest.mark.parametrize("q", [1, 2, 5, 16])
def test_quadrature_exactness(q):
    rule = QuadratureRule.gauss_legendre(q)
    for m in range(rule.exact_degree + 1):
        got = rule.integrate(lambda t: t ** m)
        assert abs(got - 1 / (m + 1)) <= 1e-14 * (1 / (m + 1))


def test_quad_area_form():
    sp = Space.real(2)
    got = quad_H_at(sp.dx(0, 1), (2, 3))
    assert got[(1,)] == pytest.approx(1.0, rel=1e-12)
    assert got[(0,)] == pytest.approx(-1.5, rel=1e-12)


def test_quad_x_dy_value():
    sp = Space.real(2)
    w = sp.dx(1) * sp.var(0)
    assert quad_H_at(w, (2, 3))[()] == pytest.approx(3.0, rel=1e-12)


def test_quad_zero_degree():
    sp = Space.real(2)
    assert quad_H_at(sp.function(sp.var(0) ** 2), (1, 1)) == {}


def test_under_resolved():
    sp = Space.real(1)
    w = sp.dx(0) * sp.var(0) ** 9
    with pytest.raises(UnderResolvedError):
        quad_H_at(w, (1,), QuadratureRule.gauss_legendre(2))
    quad_H_at(w, (1,), QuadratureRule.gauss_legendre(5))


def test_default_rule_escalates():
    sp = Space.real(1)
    w = sp.dx(0) * sp.var(0) ** 40
    assert agree(quad_H_at(w, (1.1,)), symbolic_at(homotopy_H(w), (1.1,)))


def test_oracle_agrees_real():
    rng = random.Random(0)
    for w in real_corpus(8, 50):
        for _ in range(3):
            pt = tuple(rng.uniform(-2, 2) for _ in range(w.space.dim))
            assert agree(quad_H_at(w, pt), symbolic_at(homotopy_H(w), pt))


def test_oracle_agrees_complex():
    rng = random.Random(1)
    for w in complex_corpus(9, 30):
        pt = tuple(complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(w.space.dim))
        assert agree(h_plus_at(w, pt), symbolic_at(h_plus(w), pt))
        assert agree(h_minus_at(w, pt), symbolic_at(h_minus(w), pt))


def test_oracle_exact_point_complex():
    sp = Space.complex(1)
    w = sp.dx(0) * sp.var(1)
    pt = (GaussRat(1, 2),)
    assert agree(quad_H_at(w, pt), symbolic_at(homotopy_H(w), pt))


def test_agree_tolerances():
    assert agree({(): 1.0}, {(): 1.0 + 1e-12})
    assert not agree({(): 1.0}, {(): 1.0 + 1e-6})
    assert agree({(): 1e-13}, {})
    assert not agree({(): 1e-9}, {})


def test_fd_examples():
    sp = Space.real(2)
    x, y = sp.var(0), sp.var(1)
    assert fd_d_at(sp.function(x * x * y), (1, 2), 1e-4) < 1e-6
    assert fd_d_at(sp.function(sp.const(7)), (1, 2), 1e-4) < 1e-12
    s1 = Space.real(1)
    assert fd_d_at(s1.function(s1.var(0) ** 5), (2,), 1e-4) < 1e-5


def test_fd_rejects_bad_step():
    sp = Space.real(1)
    with pytest.raises(ValueError):
        fd_d_at(sp.dx(0), (0,), 0)
