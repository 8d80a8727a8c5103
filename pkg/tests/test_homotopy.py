import random
from fractions import Fraction

import pytest

from formcalc.errors import PreconditionError
from formcalc.forms import Space, eval_at_base, ext_d, interior
from formcalc.homotopy import (
    EIGENVECTOR, NOT_EIGENVECTOR, ZERO, decompose, homotopy_H, is_antiexact, oscillator_apply,
    oscillator_classify, potential,
)
from formcalc.randforms import random_form, real_corpus

F = Fraction
H, d = homotopy_H, ext_d


@pytest.fixture
def r2():
    return Space.real(2)


def test_h_of_x_dy(r2):
    x, y = r2.var(0), r2.var(1)
    assert H(r2.dx(1) * x) == r2.function(x * y * F(1, 2))


def test_h_of_area_form(r2):
    x, y = r2.var(0), r2.var(1)
    assert H(r2.dx(0, 1)) == (r2.dx(1) * x - r2.dx(0) * y) * F(1, 2)


def test_h_of_function_is_zero(r2):
    assert not H(r2.function(r2.var(0) ** 3 + 1))


def test_h_shifted_base():
    # H(dx) at x0 = 3 is x - 3
    sp = Space.real(1, (3,))
    assert H(sp.dx(0)) == sp.function(sp.coordinate(0) - 3)


def test_invariance_small_corpus():
    for w in real_corpus(11, 60):
        assert d(H(w)) + H(d(w)) + eval_at_base(w) == w


def test_decompose_total():
    for w in real_corpus(3, 40):
        r = decompose(w)
        assert r.total() == w
        assert is_antiexact(r.antiexact)
        assert not d(r.exact)


def test_is_antiexact(r2):
    x, y = r2.var(0), r2.var(1)
    assert is_antiexact(r2.dx(1) * x - r2.dx(0) * y)
    assert not is_antiexact(r2.dx(0))
    assert is_antiexact(r2.function(x))
    assert not is_antiexact(r2.function(x + 1))
    assert is_antiexact(r2.zero(1))


def test_potential(r2):
    x, y = r2.var(0), r2.var(1)
    closed = r2.dx(0) * y + r2.dx(1) * x
    assert d(potential(closed)) == closed


def test_potential_not_closed(r2):
    with pytest.raises(PreconditionError) as info:
        potential(r2.dx(1) * r2.var(0))
    assert info.value.residual == r2.dx(0, 1)


def test_potential_of_function_rejected(r2):
    with pytest.raises(PreconditionError):
        potential(r2.function(r2.var(0)))


def test_oscillator_apply_is_hd_minus_dh(r2):
    w = r2.dx(1) * r2.var(0)
    assert oscillator_apply(w) == H(d(w)) - d(H(w))


def test_classify_table():
    sp = Space.real(3, (1, F(1, 2), -2))
    rng = random.Random(5)
    for _ in range(20):
        mu = random_form(rng, sp, rng.randint(0, 1), max_degree=3)
        exact = d(H(d(mu))) if mu.degree else d(mu)
        if exact:
            assert oscillator_classify(exact).eigenvalue == -1
        anti = H(random_form(rng, sp, 2, max_degree=3))
        if anti:
            assert oscillator_classify(anti).eigenvalue == 1
    f = sp.function(sp.var(0) * sp.var(2))
    assert oscillator_classify(f).eigenvalue == 1
    v = oscillator_classify(sp.function(sp.const(3)))
    assert v.kind == NOT_EIGENVECTOR and v.witness
    top = sp.dx(0, 1, 2) * (sp.var(1) ** 2 + 1)
    assert oscillator_classify(top).eigenvalue == -1
    assert oscillator_classify(sp.zero(1)).kind == ZERO


def test_classify_mixed_has_witness(r2):
    x = r2.var(0)
    w = r2.dx(1) * x  # exact part + antiexact part
    v = oscillator_classify(w)
    assert v.kind == NOT_EIGENVECTOR
    assert v.witness == oscillator_apply(w) - w * v.lam
    assert v.kind != EIGENVECTOR and str(v) == NOT_EIGENVECTOR


def test_interior_of_h_vanishes():
    for w in real_corpus(4, 40):
        assert not interior(w.space.radial(), H(w))


def test_h_squared_1000():
    for w in real_corpus(200, 1000):
        assert not H(H(w))


def test_projectors_idempotent():
    for w in real_corpus(201, 200):
        if w.degree:
            dh, hd = d(H(w)), H(d(w))
            assert d(H(dh)) == dh
            assert H(d(hd)) == hd


def test_ladder_identities():
    for w in real_corpus(202, 200):
        assert d(H(d(w))) == d(w)
        assert H(d(H(w))) == H(w)


def test_ladder_eigenstate_maps():
    rng = random.Random(203)
    for _ in range(100):
        n = rng.randint(2, 4)
        sp = Space.real(n, tuple(F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)))
        k = rng.randint(1, n - 1)
        mu = H(random_form(rng, sp, k + 1, max_degree=4))  # antiexact, degree k
        if d(mu):
            assert oscillator_classify(d(mu)).eigenvalue == -1
        omega = d(random_form(rng, sp, k - 1, max_degree=4))  # exact, degree k < n
        if H(omega):
            assert oscillator_classify(H(omega)).eigenvalue == 1


def test_h_and_d_invert_on_summands():
    rng = random.Random(204)
    for _ in range(100):
        n = rng.randint(2, 4)
        sp = Space.real(n, tuple(F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)))
        k = rng.randint(2, n)
        alpha = H(random_form(rng, sp, k, max_degree=4))  # antiexact, degree k-1 >= 1
        assert H(d(alpha)) == alpha
        eps = d(random_form(rng, sp, k - 1, max_degree=4))  # exact, degree k >= 1
        assert d(H(eps)) == eps
