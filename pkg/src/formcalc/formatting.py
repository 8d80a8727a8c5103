"""Text and JSON rendering of forms.

Text output is valid parser input: every shifted variable is written as
``(x1 - a)`` (or plain ``x1`` when the base coordinate is 0), so the text
re-parses to the same form at the same base point.

JSON output is the machine contract::

    {"mode": "real", "dim": 2, "base": ["0", "0"], "degree": 0,
     "terms": [{"basis": [], "coeff": [{"monomial": {"u1": 1, "u2": 1}, "value": "1/2"}]}]}

Monomials are reported in shifted variables (``u<i>`` in real mode, ``v<i>``
and ``vb<i>`` in complex mode).  Values are exact rational strings; complex
values are ``{"re": ..., "im": ...}``.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, ParseError
from .forms import Form, Space
from .polynomial import COMPLEX, REAL, GaussRat, Poly, canon


def variable_names(space: Space, paired: bool = False) -> list[str]:
    n = space.dim
    if space.is_complex:
        return [f"z{m}" for m in range(1, n + 1)] + [f"zb{m}" for m in range(1, n + 1)]
    if paired:
        if n % 2:
            raise DomainError("paired x/y naming needs an even real dimension")
        names = []
        for m in range(1, n // 2 + 1):
            names += [f"x{m}", f"y{m}"]
        return names
    return [f"x{i}" for i in range(1, n + 1)]


def differential_names(space: Space, paired: bool = False) -> list[str]:
    return ["d" + v for v in variable_names(space, paired)]


def shifted_names(space: Space) -> list[str]:
    n = space.dim
    if space.is_complex:
        return [f"v{m}" for m in range(1, n + 1)] + [f"vb{m}" for m in range(1, n + 1)]
    return [f"u{i}" for i in range(1, n + 1)]


# -- text -------------------------------------------------------------------------

def _rat(q: Fraction) -> str:
    return str(q)


def _signed_scalar(c) -> str:
    """Render ``+ c`` / ``- c`` pieces for an offset inside a shifted variable."""
    out = []
    re, im = (c.re, c.im) if type(c) is GaussRat else (c, Fraction(0))
    if re:
        out.append(f" {'+' if re > 0 else '-'} {_rat(abs(re))}")
    if im:
        mag = "i" if abs(im) == 1 else f"{_rat(abs(im))}*i"
        out.append(f" {'+' if im > 0 else '-'} {mag}")
    return "".join(out)


def _factor(name: str, shift, exp: int) -> str:
    s = name if not shift else f"({name}{_signed_scalar(-shift)})"
    return s if exp == 1 else f"{s}^{exp}"


def _coeff_parts(c, bare: bool):
    """(negative, text) for a coefficient; ``bare`` means no other factors follow."""
    if type(c) is GaussRat:
        if not c.re:
            mag = abs(c.im)
            return c.im < 0, ("i" if mag == 1 else f"{_rat(mag)}*i")
        im = "i" if abs(c.im) == 1 else f"{_rat(abs(c.im))}*i"
        return False, f"({_rat(c.re)} {'+' if c.im > 0 else '-'} {im})"
    mag = abs(c)
    return c < 0, ("" if mag == 1 and not bare else _rat(mag))


def format_text(omega: Form, paired: bool = False) -> str:
    if not omega:
        return "0"
    sp = omega.space
    names = variable_names(sp, paired)
    dnames = differential_names(sp, paired)
    shifts = sp.full_base
    pieces = []
    for t, c in sorted(omega.terms.items()):
        basis = "/\\".join(dnames[j] for j in t)
        for exps, v in c.sorted_terms():
            factors = [_factor(names[i], shifts[i], e) for i, e in enumerate(exps) if e]
            neg, ctext = _coeff_parts(v, bare=not factors and not basis)
            body = "*".join(s for s in [ctext] + factors + [basis] if s)
            pieces.append((neg, body))
    out = []
    for idx, (neg, body) in enumerate(pieces):
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" {'-' if neg else '+'} {body}")
    return "".join(out)


def format_scalar(c) -> str:
    """Compact exact scalar such as ``3/2`` or ``1-2i`` (CLI base/point syntax)."""
    c = canon(c)
    if type(c) is Fraction:
        return _rat(c)
    if not c.re:
        return f"{_rat(c.im)}i"
    return f"{_rat(c.re)}{'+' if c.im > 0 else '-'}{_rat(abs(c.im))}i"


# -- JSON ---------------------------------------------------------------------------

def _value_json(c, complex_mode: bool):
    if complex_mode or type(c) is GaussRat:
        re, im = (c.re, c.im) if type(c) is GaussRat else (c, Fraction(0))
        return {"re": _rat(re), "im": _rat(im)}
    return _rat(c)


def to_json(omega: Form) -> dict:
    sp = omega.space
    cm = sp.is_complex
    snames = shifted_names(sp)
    dnames = differential_names(sp)
    terms = []
    for t, c in sorted(omega.terms.items()):
        coeff = []
        for exps, v in c.sorted_terms():
            coeff.append({
                "monomial": {snames[i]: e for i, e in enumerate(exps) if e},
                "value": _value_json(v, cm),
            })
        terms.append({"basis": [dnames[j] for j in t], "coeff": coeff})
    return {
        "mode": sp.mode,
        "dim": sp.dim,
        "base": [_value_json(b, cm) for b in sp.base],
        "degree": omega.degree,
        "terms": terms,
    }


def _value_from_json(v):
    if isinstance(v, dict):
        return canon(GaussRat(Fraction(v["re"]), Fraction(v["im"])))
    return Fraction(v)


def from_json(data: dict) -> Form:
    """Inverse of :func:`to_json`."""
    try:
        mode, dim = data["mode"], int(data["dim"])
        if mode not in (REAL, COMPLEX):
            raise DomainError(f"unknown mode {mode!r}")
        space = Space(mode, dim, tuple(_value_from_json(b) for b in data["base"]))
        sidx = {name: i for i, name in enumerate(shifted_names(space))}
        didx = {name: i for i, name in enumerate(differential_names(space))}
        terms = {}
        for entry in data["terms"]:
            labels = [didx[b] for b in entry["basis"]]
            if labels != sorted(labels):
                raise DomainError(f"basis {entry['basis']} is not in canonical order")
            poly = {}
            for mono in entry["coeff"]:
                exps = [0] * space.nvars
                for name, e in mono["monomial"].items():
                    exps[sidx[name]] = int(e)
                poly[tuple(exps)] = _value_from_json(mono["value"])
            terms[tuple(labels)] = Poly(space.nvars, poly)
        return Form(space, terms, data.get("degree"))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise ParseError(f"malformed form JSON: {exc}") from exc
