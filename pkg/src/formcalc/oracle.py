"""Floating-point cross-checks for the exact engine.

``quad_H_at`` integrates the homotopy integrand

    t -> t^(k-1) * K _| omega(x0 + t (x - x0))

with Gauss-Legendre quadrature on [0, 1], evaluating the coefficients of
omega at the moved point directly.  It shares no code with the exact
per-degree rule in :mod:`formcalc.homotopy`.  ``fd_d_at`` compares the
exact exterior derivative with central finite differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UnderResolvedError
from .exterior_basis import wedge_direction
from .forms import FULL, MINUS, PLUS, Form, RadialField, ext_d
from .polynomial import REAL, GaussRat, expand_point

DEFAULT_ORDER = 16
REL_TOL = 1e-9
ABS_TOL = 1e-12


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre rule on [0, 1]; exact for polynomials of degree <= 2*order - 1."""

    order: int
    nodes: tuple
    weights: tuple

    @classmethod
    def gauss_legendre(cls, order: int = DEFAULT_ORDER) -> "QuadratureRule":
        if order < 1:
            raise ValueError("quadrature order must be >= 1")
        x, w = np.polynomial.legendre.leggauss(order)
        return cls(order, tuple(float(t) for t in (x + 1) / 2), tuple(float(v) for v in w / 2))

    @property
    def exact_degree(self) -> int:
        return 2 * self.order - 1

    def integrate(self, f):
        return sum(w * f(t) for t, w in zip(self.nodes, self.weights))


def _num(c):
    if type(c) is GaussRat:
        return complex(c)
    return float(c)


def _poly_value(poly, values):
    total = 0.0
    for e, c in poly.terms.items():
        term = _num(c)
        for v, k in zip(values, e):
            if k:
                term *= v ** k
        total += term
    return total


def _shifted(omega: Form, point):
    sp = omega.space
    x = [_num(c) for c in expand_point(point, sp.mode, sp.dim)] if _exact_point(point) \
        else _float_point(point, sp)
    x0 = [_num(c) for c in sp.full_base]
    return [a - b for a, b in zip(x, x0)]


def _exact_point(point) -> bool:
    return not any(isinstance(c, (float, complex)) for c in point)


def _float_point(point, sp):
    pt = list(point)
    if sp.mode == REAL:
        if len(pt) != sp.dim:
            raise DomainError(f"point has {len(pt)} entries, expected {sp.dim}")
        return [float(c) for c in pt]
    if len(pt) != sp.dim:
        raise DomainError(f"point has {len(pt)} entries, expected {sp.dim}")
    z = [complex(c) for c in pt]
    return z + [c.conjugate() for c in z]


def required_order(omega: Form) -> int:
    """Smallest order integrating the integrand of ``omega`` exactly."""
    k = omega.degree or 0
    m = max(omega.max_coefficient_degree(), 0)
    return max(1, math.ceil((m + k) / 2))


def quad_H_at(omega: Form, point, rule: QuadratureRule | None = None, part: str = FULL) -> dict:
    """Coefficients of (H omega)(point) by quadrature, keyed by basis term.

    ``part`` selects K, K+ or K- (the latter two in complex mode).  With no
    rule the default 16-node rule is used, escalated when the degree bound
    requires it; an explicit rule that is too coarse raises
    :class:`UnderResolvedError`.
    """
    K = RadialField(omega.space, part)
    need = required_order(omega)
    if rule is None:
        rule = QuadratureRule.gauss_legendre(max(DEFAULT_ORDER, need))
    elif rule.order < need:
        raise UnderResolvedError(
            f"order {rule.order} rule cannot integrate degree {2 * need - 1} integrand; need order >= {need}")
    out: dict = {}
    k = omega.degree
    if not k:
        return out
    dirs = set(K.directions)
    u = _shifted(omega, point)
    for t, c in omega.terms.items():
        integral = rule.integrate(lambda tq: _poly_value(c, [tq * ui for ui in u]) * tq ** (k - 1))
        for pos, j in enumerate(t):
            if j not in dirs:
                continue
            key = t[:pos] + t[pos + 1:]
            val = (-1) ** pos * u[j] * integral
            out[key] = out.get(key, 0.0) + val
    return out


def h_plus_at(omega: Form, point, rule: QuadratureRule | None = None) -> dict:
    return quad_H_at(omega, point, rule, PLUS)


def h_minus_at(omega: Form, point, rule: QuadratureRule | None = None) -> dict:
    return quad_H_at(omega, point, rule, MINUS)


def symbolic_at(omega: Form, point) -> dict:
    """Form coefficients at ``point`` as floats (exact evaluation for exact points)."""
    if _exact_point(point):
        return {t: _num(v) for t, v in omega.at(point).items()}
    u = _shifted(omega, point)
    return {t: _poly_value(c, u) for t, c in omega.terms.items()}


def agree(numeric: dict, exact: dict, rel: float = REL_TOL, abs_tol: float = ABS_TOL) -> bool:
    """Componentwise closeness of two coefficient dictionaries."""
    for t in set(numeric) | set(exact):
        a, b = numeric.get(t, 0.0), exact.get(t, 0.0)
        if abs(a - b) > max(rel * max(abs(a), abs(b)), abs_tol):
            return False
    return True


def fd_d_at(omega: Form, point, step: float = 1e-4) -> float:
    """Max deviation between finite-difference d(omega) and exact d(omega) at ``point``.

    Partial derivatives are taken in the shifted variables, each one
    perturbed independently (in complex mode v and vbar are independent).
    """
    if step <= 0:
        raise ValueError("step must be positive")
    u = _shifted(omega, point)
    numeric: dict = {}
    for t, c in omega.terms.items():
        for j in range(omega.space.nvars):
            sign, target = wedge_direction(j, t)
            if not sign:
                continue
            up, down = list(u), list(u)
            up[j] += step
            down[j] -= step
            deriv = (_poly_value(c, up) - _poly_value(c, down)) / (2 * step)
            numeric[target] = numeric.get(target, 0.0) + sign * deriv
    exact = ext_d(omega)
    exact_vals = {t: _poly_value(c, u) for t, c in exact.terms.items()}
    keys = set(numeric) | set(exact_vals)
    return max((abs(numeric.get(t, 0.0) - exact_vals.get(t, 0.0)) for t in keys), default=0.0)
