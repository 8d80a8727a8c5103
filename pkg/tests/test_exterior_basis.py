import itertools

import pytest
from hypothesis import given, strategies as st

from formcalc.errors import DomainError
from formcalc.exterior_basis import (
    ANTIHOLOMORPHIC, HOLOMORPHIC, all_terms, bidegree, check_term, complex_index, complex_label,
    conjugate_label, contract_basis, sort_with_sign, wedge_direction, wedge_merge,
)


def _parity(perm):
    inv = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


def test_wedge_merge_signs():
    assert wedge_merge((0,), (1,)) == (1, (0, 1))
    assert wedge_merge((1,), (0,)) == (-1, (0, 1))
    assert wedge_merge((0, 2), (1,)) == (-1, (0, 1, 2))
    assert wedge_merge((0,), (0, 1)) == (0, None)
    assert wedge_merge((), (0, 2)) == (1, (0, 2))


def test_check_term_rejects_bad_terms():
    with pytest.raises(DomainError):
        check_term((1, 0))
    with pytest.raises(DomainError):
        check_term((0, 0))
    with pytest.raises(DomainError):
        check_term((0, 3), nlabels=3)
    assert check_term((0, 2), nlabels=3) == (0, 2)


def test_contract_basis():
    assert contract_basis(0, (0, 1)) == (1, (1,))
    assert contract_basis(1, (0, 1)) == (-1, (0,))
    assert contract_basis(2, (0, 1)) == (0, None)
    assert contract_basis(0, (0,)) == (1, ())


def test_wedge_direction_matches_merge():
    assert wedge_direction(1, (0, 2)) == wedge_merge((1,), (0, 2))


@given(st.lists(st.integers(0, 6), min_size=0, max_size=6, unique=True))
def test_sort_with_sign_is_permutation_parity(labels):
    sign, t = sort_with_sign(labels)
    assert t == tuple(sorted(labels))
    assert sign == _parity(labels)


@given(st.lists(st.integers(0, 5), max_size=5))
def test_sort_with_sign_repeated_labels_vanish(labels):
    sign, _ = sort_with_sign(labels)
    if len(set(labels)) < len(labels):
        assert sign == 0


@given(st.sets(st.integers(0, 7), max_size=4), st.sets(st.integers(0, 7), max_size=4))
def test_wedge_graded_commutativity(a, b):
    a, b = tuple(sorted(a)), tuple(sorted(b))
    s1, t1 = wedge_merge(a, b)
    s2, t2 = wedge_merge(b, a)
    assert t1 == t2
    assert s1 == s2 * (-1) ** (len(a) * len(b))


def test_all_terms_counts():
    assert len(all_terms(4, 2)) == 6
    assert all_terms(3, 0) == [()]
    assert all_terms(2, 3) == []


def test_complex_labels():
    n = 2
    assert complex_label(0, n) == (HOLOMORPHIC, 1)
    assert complex_label(3, n) == (ANTIHOLOMORPHIC, 2)
    assert complex_index(ANTIHOLOMORPHIC, 1, n) == 2
    assert all(complex_index(*complex_label(j, n), n) == j for j in range(2 * n))
    assert conjugate_label(1, n) == 3
    assert conjugate_label(3, n) == 1
    assert bidegree((0, 2, 3), n) == (1, 2)


def test_wedge_merge_associative_exhaustive():
    for n in range(1, 5):
        terms = [t for k in range(n + 1) for t in all_terms(n, k)]
        for a in terms:
            for b in terms:
                s_ab, ab = wedge_merge(a, b)
                for c in terms:
                    s_bc, bc = wedge_merge(b, c)
                    left = (0, None) if not s_ab else wedge_merge(ab, c)
                    right = (0, None) if not s_bc else wedge_merge(a, bc)
                    assert (s_ab * left[0], left[1] if left[0] else None) == \
                        (s_bc * right[0], right[1] if right[0] else None)


def test_contract_then_wedge_exhaustive():
    for n in range(1, 5):
        for k in range(1, n + 1):
            for t in all_terms(n, k):
                for j in t:
                    s1, reduced = contract_basis(j, t)
                    s2, back = wedge_direction(j, reduced)
                    assert back == t and s1 * s2 == 1
