"""Randomized identity suite run by ``formcalc verify``.

Each check is a predicate on one random form; the suite reports, per check,
how many cases ran and how many failed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .dolbeault import (
    complexify, del_, delbar, h_minus, h_plus, invariance_sum, invariance_terms, realify,
    subcomplex_check,
)
from .forms import Form, Space, ext_d, eval_at_base, interior, wedge
from .homotopy import EIGENVECTOR, homotopy_H, is_antiexact, oscillator_classify
from .oracle import agree, fd_d_at, quad_H_at, symbolic_at
from .polynomial import COMPLEX, GaussRat
from .randforms import (
    antiholomorphic_form, complex_corpus, holomorphic_form, random_form, random_rational, random_space,
    real_corpus,
)

H, d = homotopy_H, ext_d


@dataclass
class CheckResult:
    name: str
    cases: int
    failures: int

    @property
    def passed(self) -> bool:
        return self.failures == 0


# -- real-mode checks ------------------------------------------------------------------

def _invariance(w):
    return d(H(w)) + H(d(w)) + eval_at_base(w) == w


def _projectors(w):
    if not w.degree:
        return True
    dh, hd = d(H(w)), H(d(w))
    return d(H(dh)) == dh and H(d(hd)) == hd


def _ladder_eigen(w):
    # H w is antiexact; d H w is exact.  Both should be eigenvectors when nonzero.
    ok = True
    mu = H(w)
    lowered = d(mu)
    if lowered:
        v = oscillator_classify(lowered)
        ok &= v.kind == EIGENVECTOR and v.eigenvalue == -1
    raised = H(lowered)
    if raised:
        v = oscillator_classify(raised)
        ok &= v.kind == EIGENVECTOR and v.eigenvalue == 1
    return ok


def _identity_on_summands(w):
    alpha = H(d(w))  # antiexact, same degree as w
    eps = d(H(w))    # exact
    ok = True
    if alpha and alpha.degree >= 1:
        ok &= H(d(alpha)) == alpha
    if eps and eps.degree >= 1:
        ok &= d(H(eps)) == eps
    return ok


def _pair(w, rng):
    k = rng.randint(0, w.space.nvars - (w.degree or 0))
    return random_form(rng, w.space, k, max_degree=3)


def _leibniz(w, rng):
    b = _pair(w, rng)
    sign = -1 if w.degree % 2 else 1
    return d(wedge(w, b)) == _sum(w, wedge(d(w), b), wedge(w, d(b)) * sign)


def _anticommute(w, rng):
    b = _pair(w, rng)
    sign = -1 if (w.degree * (b.degree or 0)) % 2 else 1
    return wedge(w, b) == wedge(b, w) * sign


def _antiderivation(w, rng):
    b = _pair(w, rng)
    K = w.space.radial()
    sign = -1 if w.degree % 2 else 1
    return interior(K, wedge(w, b)) == _sum(w, wedge(interior(K, w), b), wedge(w, interior(K, b)) * sign)


def _sum(like: Form, *forms: Form) -> Form:
    """Add forms whose zero members may carry no common degree."""
    out = like.space.zero()
    for f in forms:
        if f:
            out = out + f
    return out


REAL_CHECKS: list[tuple[str, Callable]] = [
    ("d d = 0", lambda w: not d(d(w))),
    ("H H = 0", lambda w: not H(H(w))),
    ("dH + Hd + s* = I", _invariance),
    ("dH, Hd idempotent (k>0)", _projectors),
    ("H omega antiexact", lambda w: is_antiexact(H(w))),
    ("d H d = d", lambda w: d(H(d(w))) == d(w)),
    ("H d H = H", lambda w: H(d(H(w))) == H(w)),
    ("ladder eigenstates", _ladder_eigen),
    ("Hd = I on A, dH = I on E", _identity_on_summands),
]

REAL_PAIR_CHECKS: list[tuple[str, Callable]] = [
    ("graded Leibniz", _leibniz),
    ("wedge anticommutativity", _anticommute),
    ("K _| antiderivation", _antiderivation),
]


# -- complex-mode checks ---------------------------------------------------------------

def _eight_terms(w):
    return invariance_sum(invariance_terms(w)) == w - eval_at_base(w)


def _realify(w):
    r = realify(w)
    return (complexify(r) == w and d(r) == realify(d(w))
            and H(r) == realify(_sum(w, h_plus(w), h_minus(w))))


COMPLEX_CHECKS: list[tuple[str, Callable]] = [
    ("del del = 0", lambda w: not del_(del_(w))),
    ("delbar delbar = 0", lambda w: not delbar(delbar(w))),
    ("del delbar + delbar del = 0", lambda w: del_(delbar(w)) == -delbar(del_(w))),
    ("d = del + delbar", lambda w: d(w) == _sum(w, del_(w), delbar(w))),
    ("H+ H+ = 0", lambda w: not h_plus(h_plus(w))),
    ("H- H- = 0", lambda w: not h_minus(h_minus(w))),
    ("H+ H- + H- H+ = 0", lambda w: h_plus(h_minus(w)) == -h_minus(h_plus(w))),
    ("H = H+ + H-", lambda w: H(w) == _sum(w, h_plus(w), h_minus(w))),
    ("eight-term invariance", _eight_terms),
    ("conj H+ = H- conj", lambda w: h_plus(w).conjugate() == h_minus(w.conjugate())),
    ("realify/complexify", _realify),
]


def _cross_terms_needed() -> bool:
    # zbar dz: H+ delbar and delbar H+ are nonzero individually and cancel in the sum
    sp = Space(COMPLEX, 1, (0,))
    w = sp.dx(0) * sp.var(1)
    terms = invariance_terms(w)
    pair_sum = terms["H+del"] + terms["delH+"]
    return bool(terms["H+delbar"]) and bool(terms["delbarH+"]) and pair_sum != w \
        and invariance_sum(terms) == w


def _subcomplex_holo(rng, space):
    return subcomplex_check(holomorphic_form(rng, space, rng.randint(0, space.dim))).ok


def _subcomplex_anti(rng, space):
    return subcomplex_check(antiholomorphic_form(rng, space, rng.randint(0, space.dim))).ok


# -- numeric checks --------------------------------------------------------------------

def _random_point(rng, space):
    if space.mode == COMPLEX:
        return tuple(GaussRat(random_rational(rng, 2, 3), random_rational(rng, 2, 3)) for _ in range(space.dim))
    return tuple(random_rational(rng, 2, 3) for _ in range(space.dim))


def quad_agrees(w: Form, rng: random.Random, points: int = 5) -> bool:
    parts = [("full", H)]
    if w.space.is_complex:
        parts += [("plus", h_plus), ("minus", h_minus)]
    for part, op in parts:
        exact = op(w)
        for _ in range(points):
            pt = _random_point(rng, w.space)
            if not agree(quad_H_at(w, pt, part=part), symbolic_at(exact, pt)):
                return False
    return True


def fd_agrees(w: Form, rng: random.Random) -> bool:
    # sample within 1/2 of the base point so the O(step^2) truncation term stays below the bound
    offset = _random_point(rng, w.space)
    pt = tuple(b + o / 4 for b, o in zip(w.space.base, offset))
    return fd_d_at(w, pt, 1e-4) < 1e-6


# -- driver ------------------------------------------------------------------------------

def run_suite(count: int = 100, seed: int = 0, numeric: bool = False) -> list[CheckResult]:
    results = []
    real = real_corpus(seed, count)
    for name, check in REAL_CHECKS:
        results.append(CheckResult(name, len(real), sum(1 for w in real if not check(w))))
    rng = random.Random(seed + 1)
    for name, check in REAL_PAIR_CHECKS:
        results.append(CheckResult(name, len(real), sum(1 for w in real if not check(w, rng))))

    cplx = complex_corpus(seed + 2, count)
    for name, check in COMPLEX_CHECKS:
        results.append(CheckResult(name, len(cplx), sum(1 for w in cplx if not check(w))))

    rng = random.Random(seed + 3)
    for name, check in (("H+ del + del H+ = I - s* on (p,0)", _subcomplex_holo),
                        ("H- delbar + delbar H- = I - s* on (0,q)", _subcomplex_anti)):
        fails = 0
        for _ in range(count):
            space = random_space(rng, COMPLEX, rng.randint(1, 2))
            fails += not check(rng, space)
        results.append(CheckResult(name, count, fails))

    results.append(CheckResult("eight terms do not reduce to pairs", 1, int(not _cross_terms_needed())))

    if numeric:
        rng = random.Random(seed + 4)
        quad_forms = real[: max(1, count // 2)] + cplx[: max(1, count // 4)]
        results.append(CheckResult("quadrature oracle = H", len(quad_forms),
                                   sum(1 for w in quad_forms if not quad_agrees(w, rng))))
        fd_forms = [w for w in real if w.max_coefficient_degree() <= 5]
        results.append(CheckResult("finite differences = d", len(fd_forms),
                                   sum(1 for w in fd_forms if not fd_agrees(w, rng))))
    return results


def format_table(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = [f"{'identity'.ljust(width)}  cases  failed  result"]
    for r in results:
        lines.append(f"{r.name.ljust(width)}  {r.cases:5d}  {r.failures:6d}  {'PASS' if r.passed else 'FAIL'}")
    return "\n".join(lines)
