"""Exact exterior calculus of polynomial differential forms.

Real forms on R^n and complex forms on C^n (z and zbar as independent
variables) with rational or Gaussian-rational coefficients, the radial
homotopy operator H and its Dolbeault split H = H+ + H-.
"""

from .dolbeault import (
    complexify, del_, delbar, h_minus, h_plus, invariance_sum, invariance_terms, realify,
    realify_parts, split_check, subcomplex_check,
)
from .errors import DomainError, FormcalcError, ParseError, PreconditionError, UnderResolvedError
from .formatting import format_text, from_json, to_json
from .forms import (
    Form, GradedForm, RadialField, Space, eval_at_base, ext_d, interior, wedge,
)
from .homotopy import (
    DecompResult, OscillatorVerdict, decompose, homotopy_H, is_antiexact, oscillator_apply,
    oscillator_classify, potential,
)
from .oracle import QuadratureRule, fd_d_at, quad_H_at
from .parsing import SessionConfig, parse, parse_point
from .polynomial import COMPLEX, REAL, GaussRat, Poly

__all__ = [
    "COMPLEX", "REAL", "GaussRat", "Poly",
    "Space", "Form", "GradedForm", "RadialField", "wedge", "ext_d", "interior", "eval_at_base",
    "homotopy_H", "decompose", "DecompResult", "is_antiexact", "potential",
    "oscillator_apply", "oscillator_classify", "OscillatorVerdict",
    "del_", "delbar", "h_plus", "h_minus", "split_check", "invariance_terms", "invariance_sum",
    "subcomplex_check", "realify", "realify_parts", "complexify",
    "QuadratureRule", "quad_H_at", "fd_d_at",
    "SessionConfig", "parse", "parse_point", "format_text", "to_json", "from_json",
    "FormcalcError", "DomainError", "ParseError", "PreconditionError", "UnderResolvedError",
]
