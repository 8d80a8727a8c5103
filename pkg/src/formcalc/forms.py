"""Differential forms with exact polynomial coefficients on a star-shaped chart.

A :class:`Space` fixes the coordinate mode, the dimension and the base point
x0 (or z0).  A :class:`Form` is a degree-homogeneous map from basis terms to
:class:`~formcalc.polynomial.Poly` coefficients written in coordinates shifted
to that base point.  Operations never rebase silently: combining forms from
different spaces raises :class:`~formcalc.errors.DomainError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError
from .exterior_basis import _merge, bidegree, check_term, conjugate_label, sort_with_sign
from .polynomial import COMPLEX, MODES, REAL, Poly, canon, expand_point, nvars_for

FULL = "full"
PLUS = "plus"
MINUS = "minus"


@dataclass(frozen=True)
class Space:
    """Coordinate chart: mode, dimension and base point.

    ``base`` holds ``dim`` entries; in complex mode these are the z0 values and
    the conjugate entries are derived, never stored.
    """

    mode: str
    dim: int
    base: tuple

    def __post_init__(self):
        if self.mode not in MODES:
            raise DomainError(f"unknown mode {self.mode!r}")
        if not isinstance(self.dim, int) or self.dim < 1:
            raise DomainError(f"dimension must be a positive integer, got {self.dim!r}")
        full = expand_point(self.base, self.mode, self.dim)
        object.__setattr__(self, "base", full[: self.dim])

    @classmethod
    def real(cls, dim: int, base: Iterable | None = None) -> "Space":
        return cls(REAL, dim, tuple(base) if base is not None else (0,) * dim)

    @classmethod
    def complex(cls, dim: int, base: Iterable | None = None) -> "Space":
        return cls(COMPLEX, dim, tuple(base) if base is not None else (0,) * dim)

    @property
    def nvars(self) -> int:
        return nvars_for(self.mode, self.dim)

    @property
    def full_base(self) -> tuple:
        return expand_point(self.base, self.mode, self.dim)

    @property
    def is_complex(self) -> bool:
        return self.mode == COMPLEX

    def var(self, i: int) -> Poly:
        """Shifted coordinate ``i`` as a polynomial."""
        return Poly.variable(self.nvars, i)

    def coordinate(self, i: int) -> Poly:
        """Unshifted coordinate ``x^i = u^i + x0^i`` as a polynomial."""
        return Poly.variable(self.nvars, i) + self.full_base[i]

    def const(self, c) -> Poly:
        return Poly.constant(self.nvars, c)

    def zero(self, degree: int | None = None) -> "Form":
        return Form(self, {}, degree)

    def function(self, p) -> "Form":
        """Wrap a polynomial (or scalar) as a 0-form."""
        if not isinstance(p, Poly):
            p = self.const(p)
        return Form(self, {(): p})

    def dx(self, *labels: int) -> "Form":
        """Constant basis form ``dx^{l1} ^ ... ^ dx^{lk}`` (labels in any order)."""
        sign, t = sort_with_sign(labels)
        if not sign:
            return Form(self, {}, len(labels))
        return Form(self, {t: self.const(sign)})

    def radial(self, part: str = FULL) -> "RadialField":
        return RadialField(self, part)


@dataclass(frozen=True)
class RadialField:
    """The radial field K = (x - x0)^i d/dx^i, or its holomorphic/antiholomorphic half.

    In complex mode ``plus`` is K+ = (z - z0)^mu d/dz^mu and ``minus`` its
    conjugate K-; ``full`` is K = K+ + K-.
    """

    space: Space
    part: str = FULL

    def __post_init__(self):
        if self.part not in (FULL, PLUS, MINUS):
            raise DomainError(f"unknown radial field part {self.part!r}")
        if self.part != FULL and not self.space.is_complex:
            raise DomainError("K+ and K- exist only in complex mode")

    @property
    def directions(self) -> range:
        n = self.space.dim
        if self.part == PLUS:
            return range(n)
        if self.part == MINUS:
            return range(n, 2 * n)
        return range(self.space.nvars)


def _accumulate(out: dict, t, p: Poly):
    prev = out.get(t)
    if prev is None:
        if p:
            out[t] = p
        return
    s = prev + p
    if s:
        out[t] = s
    else:
        del out[t]


class Form:
    """Homogeneous differential form of degree ``degree`` on ``space``.

    The zero form may carry a degree or be degree-less (``degree is None``);
    zero forms of any degree compare equal.
    """

    __slots__ = ("space", "degree", "terms")

    def __init__(self, space: Space, terms: dict | None = None, degree: int | None = None):
        nv = space.nvars
        clean = {}
        for t, c in (terms or {}).items():
            t = check_term(t, nv)
            if not isinstance(c, Poly):
                c = Poly.constant(nv, c)
            elif c.nvars != nv:
                raise DomainError(f"coefficient over {c.nvars} variables in a space with {nv}")
            if c:
                _accumulate(clean, t, c)
        degrees = sorted({len(t) for t in clean})
        if len(degrees) > 1:
            raise DomainError(f"mixed-degree form (degrees {degrees}); use GradedForm")
        if degrees:
            if degree is not None and degree != degrees[0]:
                raise DomainError(f"terms of degree {degrees[0]} in a form declared degree {degree}")
            degree = degrees[0]
        if degree is not None and not 0 <= degree <= nv:
            raise DomainError(f"degree {degree} out of range 0..{nv}")
        self.space = space
        self.degree = degree
        self.terms = clean

    @classmethod
    def _raw(cls, space, terms, degree):
        f = cls.__new__(cls)
        f.space = space
        f.terms = terms
        f.degree = degree if not terms else len(next(iter(terms)))
        return f

    # -- queries -------------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def mode(self) -> str:
        return self.space.mode

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def base(self) -> tuple:
        return self.space.base

    def coefficient(self, t) -> Poly:
        return self.terms.get(tuple(t), Poly.zero(self.space.nvars))

    def items(self):
        return sorted(self.terms.items())

    def max_coefficient_degree(self) -> int:
        return max((c.degree() for c in self.terms.values()), default=-1)

    def bidegrees(self) -> set[tuple[int, int]]:
        if not self.space.is_complex:
            raise DomainError("bidegree is defined only in complex mode")
        return {bidegree(t, self.space.dim) for t in self.terms}

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.terms.values())

    def __eq__(self, other):
        if isinstance(other, Form):
            return self.space == other.space and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"Form({self.space.mode}, dim={self.space.dim}, degree={self.degree}, terms={self.terms!r})"

    def __str__(self):
        from .formatting import format_text

        return format_text(self)

    # -- linear structure ------------------------------------------------------

    def _check(self, other: "Form"):
        if not isinstance(other, Form):
            raise DomainError(f"expected a Form, got {type(other).__name__}")
        if other.space != self.space:
            raise DomainError("forms live on different spaces (mode, dimension or base point differ)")

    def _sum_degree(self, other):
        if not self.terms:
            return other.degree if other.degree is not None else self.degree
        if not other.terms:
            return self.degree
        if self.degree != other.degree:
            raise DomainError(f"cannot add forms of degree {self.degree} and {other.degree}")
        return self.degree

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        degree = self._sum_degree(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            _accumulate(out, t, c)
        return Form._raw(self.space, out, degree)

    def __radd__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return Form._raw(self.space, {t: -c for t, c in self.terms.items()}, self.degree)

    def __sub__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        return self + (-other)

    def __mul__(self, other):
        """Multiply every coefficient by a scalar or polynomial (shifted variables)."""
        if isinstance(other, Form):
            return wedge(self, other)
        if isinstance(other, Poly):
            if other.nvars != self.space.nvars:
                raise DomainError("polynomial multiplier over the wrong number of variables")
            out = {}
            for t, c in self.terms.items():
                p = c * other
                if p:
                    out[t] = p
            return Form._raw(self.space, out, self.degree)
        try:
            c = canon(other)
        except DomainError:
            return NotImplemented
        out = {}
        for t, p in self.terms.items():
            p = p.scale(c)
            if p:
                out[t] = p
        return Form._raw(self.space, out, self.degree)

    __rmul__ = __mul__

    def __xor__(self, other):
        return wedge(self, other)

    # -- pointwise -------------------------------------------------------------

    def at(self, point) -> dict:
        """Exact coefficient values at ``point`` (user coordinates), keyed by basis term."""
        sp = self.space
        x = expand_point(point, sp.mode, sp.dim)
        shifted = [a - b for a, b in zip(x, sp.full_base)]
        out = {}
        for t, c in sorted(self.terms.items()):
            v = c.evaluate_shifted(shifted)
            if v:
                out[t] = v
        return out

    def value_at_base(self) -> "Form":
        """The constant form with coefficients frozen at the base point, i.e. omega|_{x0}."""
        out = {}
        for t, c in self.terms.items():
            v = c.constant_term()
            if v:
                out[t] = Poly.constant(self.space.nvars, v)
        return Form._raw(self.space, out, self.degree)

    def conjugate(self) -> "Form":
        """Complex conjugate of a complex-mode form (dz <-> dzbar, v <-> vbar)."""
        sp = self.space
        if not sp.is_complex:
            raise DomainError("conjugation of coordinates needs complex mode")
        n = sp.dim
        out = {}
        for t, c in self.terms.items():
            sign, u = sort_with_sign(conjugate_label(i, n) for i in t)
            _accumulate(out, u, c.conjugate().scale(sign))
        return Form._raw(sp, out, self.degree)

    def rebased(self, new_base) -> "Form":
        """The same form re-expressed around another base point."""
        from .polynomial import rebase

        sp = self.space
        new_space = Space(sp.mode, sp.dim, tuple(new_base))
        out = {t: rebase(c, sp.base, new_space.base, sp.mode) for t, c in self.terms.items()}
        return Form(new_space, out, self.degree)


class GradedForm:
    """Sum of homogeneous forms of different degrees on one space."""

    def __init__(self, space: Space, components: dict | None = None):
        self.space = space
        self.components: dict[int, Form] = {}
        for k, f in (components or {}).items():
            if f:
                self.components[k] = f

    @classmethod
    def from_terms(cls, space: Space, terms: dict) -> "GradedForm":
        by_degree: dict[int, dict] = {}
        for t, c in terms.items():
            by_degree.setdefault(len(t), {})[t] = c
        return cls(space, {k: Form(space, v) for k, v in by_degree.items()})

    @property
    def degrees(self) -> list[int]:
        return sorted(self.components)

    def homogeneous(self) -> Form:
        """The single homogeneous component; DomainError when degrees mix."""
        if len(self.components) > 1:
            raise DomainError(f"expression mixes form degrees {self.degrees}")
        if not self.components:
            return self.space.zero()
        return next(iter(self.components.values()))

    def __add__(self, other: "GradedForm") -> "GradedForm":
        comps = dict(self.components)
        for k, f in other.components.items():
            comps[k] = comps[k] + f if k in comps else f
        return GradedForm(self.space, comps)

    def __eq__(self, other):
        if not isinstance(other, GradedForm):
            return NotImplemented
        return self.space == other.space and self.components == other.components


# -- operations ------------------------------------------------------------------

def wedge(a: Form, b: Form) -> Form:
    """Exterior product; degree(a ^ b) = deg a + deg b."""
    a._check(b)
    degree = None
    if a.degree is not None and b.degree is not None:
        degree = a.degree + b.degree
        if degree > a.space.nvars:
            return Form._raw(a.space, {}, None)
    out: dict = {}
    for ta, ca in a.terms.items():
        for tb, cb in b.terms.items():
            sign, t = _merge(ta, tb)
            if sign:
                p = ca * cb
                _accumulate(out, t, p if sign > 0 else -p)
    return Form._raw(a.space, out, degree)


def d_along(omega: Form, directions) -> Form:
    """Sum over ``j`` in ``directions`` of dx^j ^ (d/dx^j) omega."""
    out: dict = {}
    for t, c in omega.terms.items():
        for j in directions:
            dc = c.partial(j)
            if not dc:
                continue
            sign, u = _merge((j,), t)
            if sign:
                _accumulate(out, u, dc if sign > 0 else -dc)
    degree = omega.degree + 1 if omega.degree is not None else None
    if degree is not None and degree > omega.space.nvars:
        degree = None
    return Form._raw(omega.space, out, degree)


def ext_d(omega: Form) -> Form:
    """Exterior derivative (in complex mode this equals del + delbar)."""
    return d_along(omega, range(omega.space.nvars))


def contract_along(omega: Form, directions) -> Form:
    """Interior product with the radial field restricted to ``directions``."""
    dirs = set(directions)
    out: dict = {}
    for t, c in omega.terms.items():
        for pos, j in enumerate(t):
            if j not in dirs:
                continue
            p = c.mul_var(j)
            _accumulate(out, t[:pos] + t[pos + 1:], -p if pos & 1 else p)
    degree = omega.degree - 1 if omega.degree else None
    return Form._raw(omega.space, out, degree)


def interior(K: RadialField, omega: Form) -> Form:
    """K _| omega for the radial field K (or K+/K-); zero on 0-forms."""
    if K.space != omega.space:
        raise DomainError("radial field and form have different spaces")
    return contract_along(omega, K.directions)


def eval_at_base(omega: Form) -> Form:
    """Pullback along the constant map x -> x0.

    A 0-form becomes the constant function omega(x0); positive-degree forms
    pull back to zero.
    """
    if omega.degree == 0:
        return omega.value_at_base()
    return Form._raw(omega.space, {}, omega.degree)



__all__ = [
    "FULL", "PLUS", "MINUS", "Space", "RadialField", "Form", "GradedForm",
    "wedge", "ext_d", "d_along", "interior", "contract_along", "eval_at_base",
]
