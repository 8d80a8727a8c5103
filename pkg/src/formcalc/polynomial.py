"""Exact multivariate polynomials over Q and Q(i).

Polynomials are sparse maps from exponent tuples to coefficients.  The
variables are the coordinates shifted to a base point, ``u^i = x^i - x0^i``
(real mode) or ``v^mu = z^mu - z0^mu`` followed by ``vbar^mu`` (complex mode).
The polynomial itself does not remember the base point; the functions that
need one (:func:`rebase`, :func:`evaluate`) take it as an argument.

Coefficients are :class:`fractions.Fraction` or :class:`GaussRat`.  A Gaussian
rational with zero imaginary part is always stored as a plain Fraction, so
two polynomials are equal exactly when their term maps are.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError

REAL = "real"
COMPLEX = "complex"
MODES = (REAL, COMPLEX)


class GaussRat:
    """Gaussian rational ``re + im*i`` with exact Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @staticmethod
    def _coerce(other):
        t = type(other)
        if t is GaussRat:
            return other
        if t is Fraction or t is int:
            return GaussRat(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussRat(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        t = type(other)
        if t is Fraction or t is int:
            return GaussRat(self.re * other, self.im * other)
        if t is not GaussRat:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussRat(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        den = o.re * o.re + o.im * o.im
        if not den:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussRat((self.re * o.re + self.im * o.im) / den,
                        (self.im * o.re - self.re * o.im) / den)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = GaussRat(1, 0)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def conjugate(self):
        return GaussRat(self.re, -self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussRat({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


I = GaussRat(0, 1)


def canon(c):
    """Coerce a scalar to its canonical exact representation."""
    t = type(c)
    if t is Fraction:
        return c
    if t is int:
        return Fraction(c)
    if t is GaussRat:
        return c.re if not c.im else c
    if t is bool:
        return Fraction(int(c))
    if isinstance(c, Fraction):
        return Fraction(c)
    raise DomainError(f"not an exact scalar: {c!r}")


def conj(c):
    """Complex conjugate of an exact scalar."""
    return c.conjugate() if type(c) is GaussRat else c


def is_real_scalar(c) -> bool:
    return type(canon(c)) is Fraction


class Poly:
    """Sparse polynomial in ``nvars`` shifted variables with exact coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        if nvars < 0:
            raise DomainError("number of variables must be non-negative")
        self.nvars = nvars
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars or any((not isinstance(e, int)) or e < 0 for e in exps):
                    raise DomainError(f"bad exponent vector {exps} for {nvars} variables")
                c = canon(c)
                if c:
                    clean[exps] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted constructor: terms already canonical with no zeros
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c) -> "Poly":
        c = canon(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Poly":
        if not 0 <= i < nvars:
            raise DomainError(f"variable index {i} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[i] = 1
        return cls._raw(nvars, {tuple(exps): Fraction(1)})

    # -- basic queries ----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def is_constant(self) -> bool:
        zero = (0,) * self.nvars
        return all(e == zero for e in self.terms)

    def is_real(self) -> bool:
        return all(type(c) is Fraction for c in self.terms.values())

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            c = canon(other)
        except DomainError:
            return NotImplemented
        return self.terms == ({(0,) * self.nvars: c} if c else {})

    __hash__ = None

    def __repr__(self):
        return f"Poly({self.nvars}, {self.terms!r})"

    def sorted_terms(self):
        """Terms in graded-lex descending order of their exponents."""
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])))

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "Poly"):
        if other.nvars != self.nvars:
            raise DomainError(f"polynomials over {self.nvars} and {other.nvars} variables")

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        try:
            return Poly.constant(self.nvars, other)
        except DomainError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for e, c in b.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = canon(s + c)
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "Poly":
        c = canon(c)
        if not c:
            return Poly.zero(self.nvars)
        out = {}
        for e, v in self.terms.items():
            v = canon(v * c)
            if v:
                out[e] = v
        return Poly._raw(self.nvars, out)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except DomainError:
                return NotImplemented
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return Poly(self.nvars, out) if out else Poly.zero(self.nvars)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = Poly.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- calculus and structure --------------------------------------------

    def partial(self, i: int) -> "Poly":
        """Formal partial derivative in shifted variable ``i``."""
        if not 0 <= i < self.nvars:
            raise DomainError(f"direction {i} out of range for {self.nvars} variables")
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return Poly._raw(self.nvars, out)

    def mul_var(self, i: int) -> "Poly":
        """Multiply by shifted variable ``i`` (exponent shift, no arithmetic)."""
        return Poly._raw(self.nvars, {e[:i] + (e[i] + 1,) + e[i + 1:]: c
                                      for e, c in self.terms.items()})

    def homogeneous_split(self) -> list[tuple[int, "Poly"]]:
        """``[(m, p_m), ...]`` by increasing total degree ``m``; empty for zero."""
        buckets: dict[int, dict] = {}
        for e, c in self.terms.items():
            buckets.setdefault(sum(e), {})[e] = c
        return [(m, Poly._raw(self.nvars, buckets[m])) for m in sorted(buckets)]

    def map_coefficients(self, f) -> "Poly":
        return Poly(self.nvars, {e: f(c) for e, c in self.terms.items()})

    def conjugate(self) -> "Poly":
        """Complex conjugate as a function, for complex-mode polynomials.

        Conjugates coefficients and swaps the ``v`` and ``vbar`` blocks.
        """
        if self.nvars % 2:
            raise DomainError("conjugation needs paired holomorphic/antiholomorphic variables")
        n = self.nvars // 2
        return Poly._raw(self.nvars, {e[n:] + e[:n]: conj(c) for e, c in self.terms.items()})

    def real_part(self) -> "Poly":
        return Poly(self.nvars, {e: (c.re if type(c) is GaussRat else c)
                                 for e, c in self.terms.items()})

    def imag_part(self) -> "Poly":
        return Poly(self.nvars, {e: (c.im if type(c) is GaussRat else 0)
                                 for e, c in self.terms.items()})

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Compose: replace variable ``i`` by the polynomial ``images[i]``."""
        if len(images) != self.nvars:
            raise DomainError(f"need {self.nvars} images, got {len(images)}")
        if not images:
            return Poly.constant(0, self.constant_term())
        target = images[0].nvars
        for img in images:
            if img.nvars != target:
                raise DomainError("substitution images over different variable sets")
        powers: dict[tuple[int, int], Poly] = {}

        def power(i, k):
            key = (i, k)
            if key not in powers:
                powers[key] = images[i] ** k
            return powers[key]

        out = Poly.zero(target)
        for e, c in self.terms.items():
            term = Poly.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def evaluate_shifted(self, values: Sequence):
        """Value at the given values of the shifted variables (exact)."""
        if len(values) != self.nvars:
            raise DomainError(f"need {self.nvars} values, got {len(values)}")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term = term * v ** k
            total = total + term
        return canon(total)


# -- module-level operations ------------------------------------------------

def add(p: Poly, q) -> Poly:
    return p + q


def mul(p: Poly, q) -> Poly:
    return p * q


def scale(p: Poly, c) -> Poly:
    return p.scale(c)


def partial(p: Poly, direction: int) -> Poly:
    return p.partial(direction)


def homogeneous_split(p: Poly) -> list[tuple[int, Poly]]:
    return p.homogeneous_split()


def nvars_for(mode: str, dim: int) -> int:
    if mode == REAL:
        return dim
    if mode == COMPLEX:
        return 2 * dim
    raise DomainError(f"unknown mode {mode!r}")


def expand_point(point: Iterable, mode: str, dim: int) -> tuple:
    """Values of all ``nvars`` coordinates for a point given in user form.

    Complex mode accepts the ``dim`` holomorphic entries (the antiholomorphic
    ones are filled by conjugation) or all ``2*dim`` entries, in which case the
    conjugate pairing is checked.
    """
    pt = tuple(canon(c) for c in point)
    if mode == REAL:
        if len(pt) != dim:
            raise DomainError(f"point has {len(pt)} entries, expected {dim}")
        if any(type(c) is GaussRat for c in pt):
            raise DomainError("real-mode points must have rational entries")
        return pt
    if mode != COMPLEX:
        raise DomainError(f"unknown mode {mode!r}")
    if len(pt) == dim:
        return pt + tuple(conj(c) for c in pt)
    if len(pt) == 2 * dim:
        for a, b in zip(pt[:dim], pt[dim:]):
            if conj(a) != b:
                raise DomainError(f"antiholomorphic entry {b} is not the conjugate of {a}")
        return pt
    raise DomainError(f"point has {len(pt)} entries, expected {dim} (or {2 * dim})")


def rebase(p: Poly, expressed_at, new_base, mode: str = REAL) -> Poly:
    """Re-expand ``p`` (in powers of ``x - expressed_at``) in powers of ``x - new_base``."""
    dim = p.nvars if mode == REAL else p.nvars // 2
    a = expand_point(expressed_at, mode, dim)
    b = expand_point(new_base, mode, dim)
    if a == b:
        return p
    images = [Poly.variable(p.nvars, i) + (bi - ai) for i, (ai, bi) in enumerate(zip(a, b))]
    return p.substitute(images)


def evaluate(p: Poly, point, base=None, mode: str = REAL):
    """Exact value of ``p`` at ``point`` given that it is stored relative to ``base``."""
    dim = p.nvars if mode == REAL else p.nvars // 2
    x = expand_point(point, mode, dim)
    x0 = expand_point(base if base is not None else (0,) * dim, mode, dim)
    return p.evaluate_shifted([xi - bi for xi, bi in zip(x, x0)])

