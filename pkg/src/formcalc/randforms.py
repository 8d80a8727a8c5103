"""Seeded random forms for property checks and the ``verify`` command."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .forms import Form, Space
from .polynomial import COMPLEX, REAL, GaussRat, Poly


def random_rational(rng: random.Random, bound: int = 5, max_den: int = 4, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))
        if q or not nonzero:
            return q


def random_scalar(rng: random.Random, complex_coeffs: bool, nonzero: bool = True):
    if not complex_coeffs:
        return random_rational(rng, nonzero=nonzero)
    while True:
        z = GaussRat(random_rational(rng), random_rational(rng))
        if z or not nonzero:
            return z


def random_poly(rng: random.Random, nvars: int, max_degree: int = 5, max_terms: int = 4,
                complex_coeffs: bool = False, variables=None) -> Poly:
    """Sparse random polynomial using only ``variables`` (default: all)."""
    variables = list(range(nvars)) if variables is None else list(variables)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * nvars
        budget = rng.randint(0, max_degree)
        for _ in range(budget):
            if variables:
                exps[rng.choice(variables)] += 1
        terms[tuple(exps)] = random_scalar(rng, complex_coeffs)
    return Poly(nvars, terms)


def random_base(rng: random.Random, mode: str, dim: int) -> tuple:
    if mode == REAL:
        return tuple(random_rational(rng, bound=3, max_den=3) for _ in range(dim))
    return tuple(GaussRat(random_rational(rng, 3, 3), random_rational(rng, 3, 3)) for _ in range(dim))


def random_space(rng: random.Random, mode: str, dim: int, zero_base: bool = False) -> Space:
    base = (0,) * dim if zero_base else random_base(rng, mode, dim)
    return Space(mode, dim, base)


def random_form(rng: random.Random, space: Space, degree: int, max_degree: int = 5,
                max_terms: int = 3, labels=None, variables=None, complex_coeffs: bool | None = None) -> Form:
    """Nonzero random form of the given degree.

    ``labels`` restricts the differentials used, ``variables`` the
    coefficient variables.
    """
    if complex_coeffs is None:
        complex_coeffs = space.is_complex
    labels = list(range(space.nvars)) if labels is None else list(labels)
    basis = list(combinations(labels, degree))
    if not basis:
        return space.zero(degree)
    while True:
        chosen = rng.sample(basis, min(len(basis), rng.randint(1, max_terms)))
        terms = {t: random_poly(rng, space.nvars, max_degree, 4, complex_coeffs, variables) for t in chosen}
        f = Form(space, terms)
        if f:
            return f


def random_bidegree_form(rng: random.Random, space: Space, p: int, q: int, max_degree: int = 4,
                         max_terms: int = 3) -> Form:
    """Random complex form of pure bidegree (p, q)."""
    n = space.dim
    basis = [a + b for a in combinations(range(n), p) for b in combinations(range(n, 2 * n), q)]
    if not basis:
        return space.zero(p + q)
    while True:
        chosen = rng.sample(basis, min(len(basis), rng.randint(1, max_terms)))
        f = Form(space, {t: random_poly(rng, space.nvars, max_degree, 4, True) for t in chosen})
        if f:
            return f


def holomorphic_form(rng: random.Random, space: Space, p: int, max_degree: int = 4) -> Form:
    """Random (p, 0) form whose coefficients depend on z only."""
    return random_form(rng, space, p, max_degree, labels=range(space.dim), variables=range(space.dim))


def antiholomorphic_form(rng: random.Random, space: Space, q: int, max_degree: int = 4) -> Form:
    """Random (0, q) form whose coefficients depend on zbar only."""
    n = space.dim
    return random_form(rng, space, q, max_degree, labels=range(n, 2 * n), variables=range(n, 2 * n))


def real_corpus(seed: int, count: int, max_dim: int = 4, max_degree: int = 5) -> list[Form]:
    """``count`` nonzero forms with 1 <= n <= max_dim, 0 <= k <= n, random rational bases."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_dim)
        space = random_space(rng, REAL, n)
        out.append(random_form(rng, space, rng.randint(0, n), max_degree))
    return out


def complex_corpus(seed: int, count: int, max_dim: int = 2, max_degree: int = 4) -> list[Form]:
    """Random complex forms with n <= max_dim, mixing bidegrees (p, q) with p, q <= 2."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_dim)
        space = random_space(rng, COMPLEX, n)
        p = rng.randint(0, min(2, n))
        q = rng.randint(0, min(2, n))
        f = random_bidegree_form(rng, space, p, q, max_degree)
        if rng.random() < 0.5 and p + q >= 1:
            # mix in a second bidegree of the same total degree
            p2 = rng.randint(max(0, p + q - n), min(p + q, n))
            f = f + random_bidegree_form(rng, space, p2, p + q - p2, max_degree)
        if not f:
            f = random_bidegree_form(rng, space, p, q, max_degree)
        out.append(f)
    return out
