"""The radial homotopy operator H and the structures built from it.

For a k-form with coefficient monomial c * u^alpha (``|alpha| = m``) the
linear homotopy F(t, x) = x0 + t (x - x0) turns the integrand into
t^(m + k - 1) times K _| (c u^alpha dx^I), so

    H(c u^alpha dx^I) = c / (m + k) * K _| (u^alpha dx^I).

Everything here is exact; :mod:`formcalc.oracle` checks the rule against
Gauss-Legendre quadrature of the integral itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .forms import Form, contract_along, eval_at_base, ext_d
from .polynomial import canon

EIGENVECTOR = "eigenvector"
ZERO = "zero"
NOT_EIGENVECTOR = "not_eigenvector"


def radial_integral(omega: Form, directions) -> Form:
    """Homotopy operator built from the radial field restricted to ``directions``."""
    k = omega.degree
    if not k:
        # H of a function (or of a degree-less zero) vanishes
        return Form._raw(omega.space, {}, None)
    scaled = {}
    for t, c in omega.terms.items():
        acc = None
        for m, part in c.homogeneous_split():
            part = part.scale(Fraction(1, m + k))
            acc = part if acc is None else acc + part
        scaled[t] = acc
    return contract_along(Form._raw(omega.space, scaled, k), directions)


def homotopy_H(omega: Form) -> Form:
    """H omega = int_0^1 K _| omega(F(t, x)) t^(k-1) dt, of degree k - 1."""
    return radial_integral(omega, range(omega.space.nvars))


@dataclass
class DecompResult:
    """omega = exact + antiexact + constant with exact = dH omega, antiexact = Hd omega."""

    exact: Form
    antiexact: Form
    constant: Form

    def total(self) -> Form:
        return self.exact + self.antiexact + self.constant


def decompose(omega: Form) -> DecompResult:
    return DecompResult(
        exact=ext_d(homotopy_H(omega)),
        antiexact=homotopy_H(ext_d(omega)),
        constant=eval_at_base(omega),
    )


def is_antiexact(omega: Form) -> bool:
    """K _| omega = 0 and omega vanishes at the base point.

    For 0-forms only the second condition applies.  For top-degree forms the
    first condition already forces omega = 0.
    """
    if not omega:
        return True
    if omega.value_at_base():
        return False
    if omega.degree == 0:
        return True
    return not contract_along(omega, range(omega.space.nvars))


def potential(omega: Form) -> Form:
    """A primitive alpha = H omega with d alpha = omega, for closed omega of degree >= 1."""
    if omega.degree == 0:
        raise PreconditionError("a potential needs a form of degree >= 1", residual=omega)
    residual = ext_d(omega)
    if residual:
        raise PreconditionError("form is not closed", residual=residual)
    return homotopy_H(omega)


def oscillator_apply(omega: Form) -> Form:
    """Hd omega - dH omega."""
    return homotopy_H(ext_d(omega)) - ext_d(homotopy_H(omega))


@dataclass
class OscillatorVerdict:
    """Outcome of the eigenvalue problem Hbar omega = lambda omega.

    ``eigenvalue`` is set for eigenvectors.  For non-eigenvectors ``witness``
    is the nonzero residual Hbar omega - lam * omega for the admissible
    ``lam`` in {-1, +1} that leaves the smaller residual.
    """

    kind: str
    eigenvalue: int | None = None
    witness: Form | None = None
    lam: int | None = None

    def __str__(self):
        if self.kind == EIGENVECTOR:
            return f"eigenvector lambda={self.eigenvalue:+d}"
        return self.kind


def _ratio(image: Form, omega: Form):
    t, c = next(iter(sorted(omega.terms.items())))
    e, v = next(iter(sorted(c.terms.items())))
    w = image.terms.get(t)
    return canon((w.terms.get(e, 0) if w is not None else 0) / v)


def _size(f: Form) -> int:
    return sum(len(c.terms) for c in f.terms.values())


def oscillator_classify(omega: Form) -> OscillatorVerdict:
    if not omega:
        return OscillatorVerdict(ZERO)
    image = oscillator_apply(omega)
    lam = _ratio(image, omega)
    if lam in (1, -1) and image == omega * lam:
        return OscillatorVerdict(EIGENVECTOR, eigenvalue=int(lam))
    # lam = 0 happens only for nonzero constants, which are excluded as eigenvectors
    best = min((1, -1), key=lambda l: (_size(image - omega * l), -l))
    return OscillatorVerdict(NOT_EIGENVECTOR, witness=image - omega * best, lam=best)
