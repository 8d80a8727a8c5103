"""Multi-index algebra for wedge monomials dx^{i1} ^ ... ^ dx^{ik}.

A basis term is a strictly increasing tuple of integer labels.  In real mode
with ``n`` coordinates the labels are ``0..n-1``.  In complex mode with ``n``
complex coordinates the labels are ``0..2n-1``: label ``mu`` stands for
``dz^{mu+1}`` and label ``n + mu`` for ``dzbar^{mu+1}``, so the holomorphic
block always sorts before the antiholomorphic block and the bidegree of a
term can be read off from its labels.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .errors import DomainError

BasisTerm = tuple  # tuple[int, ...], strictly increasing

HOLOMORPHIC = 0
ANTIHOLOMORPHIC = 1


def check_term(t: BasisTerm, nlabels: int | None = None) -> BasisTerm:
    """Validate ``t`` as a canonical basis term and return it as a tuple."""
    t = tuple(t)
    prev = -1
    for label in t:
        if not isinstance(label, int) or label < 0:
            raise DomainError(f"invalid basis label {label!r}")
        if label <= prev:
            raise DomainError(f"basis labels must be strictly increasing: {t}")
        if nlabels is not None and label >= nlabels:
            raise DomainError(f"basis label {label} out of range for {nlabels} directions")
        prev = label
    return t


def wedge_merge(a: BasisTerm, b: BasisTerm, nlabels: int | None = None):
    """Wedge two canonical basis terms.

    Returns ``(sign, merged)``; ``sign`` is 0 (and ``merged`` is None) when the
    terms share a label, otherwise the parity of the shuffle that sorts the
    concatenation ``a + b``.
    """
    if nlabels is not None:
        check_term(a, nlabels)
        check_term(b, nlabels)
    return _merge(a, b)


def _merge(a, b):
    # unchecked fast path used by the form layer
    if not a:
        return 1, b
    if not b:
        return 1, a
    out = []
    inversions = 0
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        x, y = a[i], b[j]
        if x == y:
            return 0, None
        if x < y:
            out.append(x)
            i += 1
        else:
            # y jumps over the remaining la - i labels of a
            inversions += la - i
            out.append(y)
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return (-1 if inversions & 1 else 1), tuple(out)


def contract_basis(direction: int, t: BasisTerm):
    """Interior product of the coordinate vector ``d/dx^direction`` with ``t``.

    Returns ``(sign, reduced)`` where ``sign = (-1)**(j-1)`` if ``direction`` is
    the j-th label of ``t`` and 0 (with ``reduced`` None) if it is absent.
    """
    for pos, label in enumerate(t):
        if label == direction:
            return (-1 if pos & 1 else 1), t[:pos] + t[pos + 1:]
        if label > direction:
            break
    return 0, None


def wedge_direction(direction: int, t: BasisTerm):
    """Left-multiply ``t`` by the single differential ``dx^direction``."""
    return _merge((direction,), t)


def sort_with_sign(labels: Iterable[int]):
    """Sort an arbitrary label sequence; return ``(sign, sorted_term)``.

    ``sign`` is 0 when a label repeats.
    """
    labels = list(labels)
    if len(set(labels)) != len(labels):
        return 0, None
    inversions = 0
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            if labels[i] > labels[j]:
                inversions += 1
    return (-1 if inversions & 1 else 1), tuple(sorted(labels))


def all_terms(nlabels: int, k: int) -> list[BasisTerm]:
    """All canonical basis terms of length ``k`` over ``nlabels`` directions."""
    return list(combinations(range(nlabels), k))


def bidegree(t: BasisTerm, dim: int) -> tuple[int, int]:
    """``(p, q)`` of a complex-mode term over ``dim`` complex coordinates."""
    p = sum(1 for label in t if label < dim)
    return p, len(t) - p


def complex_label(index: int, dim: int) -> tuple[int, int]:
    """Map an internal label to ``(HOLOMORPHIC|ANTIHOLOMORPHIC, mu)`` with mu 1-based."""
    if not 0 <= index < 2 * dim:
        raise DomainError(f"label {index} out of range for complex dimension {dim}")
    if index < dim:
        return HOLOMORPHIC, index + 1
    return ANTIHOLOMORPHIC, index - dim + 1


def complex_index(kind: int, mu: int, dim: int) -> int:
    """Inverse of :func:`complex_label`."""
    if not 1 <= mu <= dim:
        raise DomainError(f"coordinate {mu} out of range for complex dimension {dim}")
    if kind == HOLOMORPHIC:
        return mu - 1
    if kind == ANTIHOLOMORPHIC:
        return dim + mu - 1
    raise DomainError(f"unknown label kind {kind!r}")


def conjugate_label(index: int, dim: int) -> int:
    """Swap a holomorphic label with its antiholomorphic partner."""
    return index + dim if index < dim else index - dim
