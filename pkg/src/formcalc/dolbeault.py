"""Complex-mode operators: del, delbar, the split homotopy operators H+ and H-.

Complex forms are polynomial in the shifted variables v = z - z0 and
vbar = zbar - zbar0, treated as independent (Wirtinger) variables; the
conjugate relation is only imposed when evaluating at a point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .forms import Form, Space, _accumulate, d_along, eval_at_base, wedge
from .homotopy import homotopy_H, radial_integral
from .polynomial import COMPLEX, REAL, GaussRat, Poly

HALF = Fraction(1, 2)

INVARIANCE_LABELS = (
    "H+del", "delH+", "H-delbar", "delbarH-",
    "H-del", "delH-", "H+delbar", "delbarH+",
)


def _require_complex(omega: Form):
    if not omega.space.is_complex:
        raise DomainError("operator is defined only for complex-mode forms")


def _hol(space: Space) -> range:
    return range(space.dim)


def _antihol(space: Space) -> range:
    return range(space.dim, 2 * space.dim)


def del_(omega: Form) -> Form:
    """del = dz^mu ^ d/dz^mu, raising the holomorphic degree p."""
    _require_complex(omega)
    return d_along(omega, _hol(omega.space))


def delbar(omega: Form) -> Form:
    """delbar = dzbar^mu ^ d/dzbar^mu, raising the antiholomorphic degree q."""
    _require_complex(omega)
    return d_along(omega, _antihol(omega.space))


def h_plus(omega: Form) -> Form:
    """Homotopy operator built from K+; maps (p, q) to (p - 1, q)."""
    _require_complex(omega)
    return radial_integral(omega, _hol(omega.space))


def h_minus(omega: Form) -> Form:
    """Homotopy operator built from K-; maps (p, q) to (p, q - 1)."""
    _require_complex(omega)
    return radial_integral(omega, _antihol(omega.space))


def split_check(omega: Form) -> tuple[Form, Form, Form]:
    """Return (H omega, H+ omega, H- omega); H = H+ + H- holds exactly."""
    _require_complex(omega)
    return homotopy_H(omega), h_plus(omega), h_minus(omega)


def invariance_terms(omega: Form) -> dict[str, Form]:
    """The eight operator products whose sum is I - s* in the complex setting."""
    _require_complex(omega)
    hp, hm = h_plus(omega), h_minus(omega)
    dw, dbw = del_(omega), delbar(omega)
    return {
        "H+del": h_plus(dw),
        "delH+": del_(hp),
        "H-delbar": h_minus(dbw),
        "delbarH-": delbar(hm),
        "H-del": h_minus(dw),
        "delH-": del_(hm),
        "H+delbar": h_plus(dbw),
        "delbarH+": delbar(hp),
    }


def invariance_sum(terms: dict[str, Form]) -> Form:
    """Sum of the eight terms, tolerant of the zeros having mixed degrees."""
    forms = list(terms.values())
    space = forms[0].space
    out: dict = {}
    for f in forms:
        for t, c in f.terms.items():
            _accumulate(out, t, c)
    return Form(space, out)


HOLOMORPHIC = "holomorphic"
ANTIHOLOMORPHIC = "antiholomorphic"


@dataclass
class SubcomplexReport:
    """Result of checking one of the two boundary subcomplex identities.

    ``kind`` names the subcomplex whose hypotheses were tested; ``failed``
    lists the hypotheses that did not hold (then ``identity_holds`` is None).
    """

    kind: str | None
    hypotheses: dict = field(default_factory=dict)
    side_conditions: dict = field(default_factory=dict)
    identity_holds: bool | None = None
    failed: list = field(default_factory=list)

    @property
    def applicable(self) -> bool:
        return not self.failed

    @property
    def ok(self) -> bool:
        return bool(self.identity_holds) and all(self.side_conditions.values())


def subcomplex_check(omega: Form) -> SubcomplexReport:
    _require_complex(omega)
    bideg = omega.bidegrees()
    pure_holo = all(q == 0 for _, q in bideg)
    pure_anti = all(p == 0 for p, _ in bideg)
    db, d = delbar(omega), del_(omega)

    holo = {"bidegree (p,0)": pure_holo, "delbar omega = 0": not db}
    anti = {"bidegree (0,q)": pure_anti, "del omega = 0": not d}
    if all(holo.values()):
        kind, hyp = HOLOMORPHIC, holo
    elif all(anti.values()):
        kind, hyp = ANTIHOLOMORPHIC, anti
    else:
        # report against whichever shape the form has, holomorphic by default
        kind, hyp = (ANTIHOLOMORPHIC, anti) if pure_anti and not pure_holo else (HOLOMORPHIC, holo)
        return SubcomplexReport(kind, hyp, failed=[k for k, v in hyp.items() if not v])

    target = omega - eval_at_base(omega)
    if kind == HOLOMORPHIC:
        hp = h_plus(omega)
        lhs = h_plus(d) + del_(hp)
        side = {"H- omega = 0": not h_minus(omega), "delbar H+ omega = 0": not delbar(hp)}
    else:
        hm = h_minus(omega)
        lhs = h_minus(db) + delbar(hm)
        side = {"H+ omega = 0": not h_plus(omega), "del H- omega = 0": not del_(hm)}
    return SubcomplexReport(kind, hyp, side, identity_holds=(lhs == target))


# -- real <-> complex coordinates ---------------------------------------------------

def real_space_of(space: Space) -> Space:
    """Real chart of dimension 2n with interleaved coordinates (x1, y1, ..., xn, yn)."""
    if not space.is_complex:
        raise DomainError("expected a complex space")
    base = []
    for z in space.base:
        if type(z) is GaussRat:
            base.extend((z.re, z.im))
        else:
            base.extend((z, 0))
    return Space(REAL, 2 * space.dim, tuple(base))


def complex_space_of(space: Space) -> Space:
    if space.is_complex:
        raise DomainError("expected a real space")
    if space.dim % 2:
        raise DomainError(f"real dimension {space.dim} is odd; cannot pair into complex coordinates")
    b = space.base
    return Space(COMPLEX, space.dim // 2, tuple(GaussRat(b[2 * m], b[2 * m + 1]) for m in range(space.dim // 2)))


def _convert(omega: Form, target: Space, var_images, one_form_images) -> Form:
    out: dict = {}
    for t, c in omega.terms.items():
        coeff = target.function(c.substitute(var_images))
        piece = coeff
        for label in t:
            piece = wedge(piece, one_form_images[label])
        for u, p in piece.terms.items():
            _accumulate(out, u, p)
    return Form(target, out, omega.degree)


def realify(omega: Form) -> Form:
    """Rewrite a complex-mode form in real coordinates z = x + i y.

    The result may carry Gaussian-rational coefficients; see
    :func:`realify_parts` for the split into real and imaginary forms.
    """
    _require_complex(omega)
    sp = omega.space
    rs = real_space_of(sp)
    n = sp.dim
    nv = rs.nvars
    i = GaussRat(0, 1)
    a = [Poly.variable(nv, 2 * m) for m in range(n)]
    b = [Poly.variable(nv, 2 * m + 1) for m in range(n)]
    var_images = [a[m] + b[m] * i for m in range(n)] + [a[m] - b[m] * i for m in range(n)]
    dx = [rs.dx(2 * m) for m in range(n)]
    dy = [rs.dx(2 * m + 1) for m in range(n)]
    one_forms = [dx[m] + dy[m] * i for m in range(n)] + [dx[m] - dy[m] * i for m in range(n)]
    return _convert(omega, rs, var_images, one_forms)


def realify_parts(omega: Form) -> tuple[Form, Form]:
    """(Re, Im) of :func:`realify` as forms with rational coefficients."""
    r = realify(omega)
    re = Form(r.space, {t: c.real_part() for t, c in r.terms.items()}, r.degree)
    im = Form(r.space, {t: c.imag_part() for t, c in r.terms.items()}, r.degree)
    return re, im


def complexify(omega: Form) -> Form:
    """Rewrite a real form on R^2n (interleaved x, y) in z, zbar coordinates."""
    if omega.space.is_complex:
        raise DomainError("complexify expects a real-mode form")
    cs = complex_space_of(omega.space)
    n = cs.dim
    nv = cs.nvars
    i = GaussRat(0, 1)
    v = [Poly.variable(nv, m) for m in range(n)]
    vb = [Poly.variable(nv, n + m) for m in range(n)]
    dz = [cs.dx(m) for m in range(n)]
    dzb = [cs.dx(n + m) for m in range(n)]
    var_images, one_forms = [], []
    for m in range(n):
        var_images.append((v[m] + vb[m]) * HALF)
        var_images.append((v[m] - vb[m]) * (-i * HALF))
        one_forms.append((dz[m] + dzb[m]) * HALF)
        one_forms.append((dz[m] - dzb[m]) * (-i * HALF))
    return _convert(omega, cs, var_images, one_forms)


__all__ = [
    "del_", "delbar", "h_plus", "h_minus", "split_check", "invariance_terms",
    "invariance_sum", "INVARIANCE_LABELS", "subcomplex_check", "SubcomplexReport",
    "realify", "realify_parts", "complexify", "real_space_of", "complex_space_of",
]
