import dataclasses
from itertools import permutations
from fractions import Fraction

import pytest

from schemebounds.builders import cameron_seidel, complete_graph, gq_point_graph, hamming
from schemebounds.exactmath import RationalMatrix, SingularMatrixError
from schemebounds.explicit import hamming_matrices
from schemebounds.scheme import (
    SchemeParameters,
    derive_q_from_p,
    intersection_numbers,
    krein_parameters,
    validate_parameters,
)

from oracles import cs_symbolic, to_fractions, triple_counts

BUILT_IN = [cameron_seidel(t) for t in (1, 2, 3)] + [gq_point_graph(2), gq_point_graph(3)] + \
    [hamming(d) for d in (1, 3, 5)] + [complete_graph(n) for n in (2, 5, 9)]


def ids(schemes):
    return [s.name for s in schemes]


def test_complete_graph_is_self_dual():
    for n in (2, 5, 11):
        P = RationalMatrix.from_rows([[1, n - 1], [1, -1]])
        assert derive_q_from_p(P, n) == P


@pytest.mark.parametrize("t", [1, 2])
def test_derived_q_matches_displayed(t):
    _, Q = cs_symbolic(t)
    s = cameron_seidel(t)
    assert derive_q_from_p(s.P, s.n).to_rows() == to_fractions(Q)


def test_derived_q_t2_first_row():
    s = cameron_seidel(2)
    Q = derive_q_from_p(s.P, 128)
    assert Q.row(0) == (1, 15, 105, 7)


def test_derive_singular():
    with pytest.raises(SingularMatrixError):
        derive_q_from_p(RationalMatrix.from_rows([[1, 1], [1, 1]]), 2)


@pytest.mark.parametrize("s", BUILT_IN, ids=ids(BUILT_IN))
def test_built_ins_validate(s):
    report = validate_parameters(s)
    assert report.passed, report.failures
    assert not report.warnings


@pytest.mark.parametrize("s", BUILT_IN, ids=ids(BUILT_IN))
def test_duality_of_derivation(s):
    assert derive_q_from_p(s.Q, s.n) == s.P


def test_perturbed_p_fails():
    s = cameron_seidel(2)
    rows = s.P.to_rows()
    rows[0][1] = Fraction(14)
    bad = dataclasses.replace(s, P=RationalMatrix.from_rows(rows))
    report = validate_parameters(bad)
    assert not report.passed
    assert "valency-sum" in report.failed_checks()
    assert "PQ=nI" in report.failed_checks()


def test_failures_are_all_collected():
    s = complete_graph(4)
    bad = dataclasses.replace(s, n=5)
    report = validate_parameters(bad)
    assert {"valency-sum", "multiplicity-sum", "PQ=nI"} <= set(report.failed_checks())


def test_pretender_with_consistent_pq_fails():
    # PQ = nI holds by construction; multiplicities and p's come out fractional
    P = RationalMatrix.from_rows([[1, 2, 2], [1, Fraction(1, 2), Fraction(-3, 2)], [1, -2, 1]])
    report = validate_parameters(SchemeParameters.from_p(P, 5))
    assert "PQ=nI" not in report.failed_checks()
    assert {"multiplicity-integrality", "intersection-numbers"} <= set(report.failed_checks())


@pytest.mark.parametrize("n", [3, 5, 8])
def test_complete_graph_intersection_and_krein(n):
    s = complete_graph(n)
    assert intersection_numbers(s)(1, 1, 1) == n - 2
    assert krein_parameters(s)(1, 1, 1) == n - 2


@pytest.mark.parametrize("s", BUILT_IN, ids=ids(BUILT_IN))
def test_boundary_rows(s):
    p, q = intersection_numbers(s), krein_parameters(s)
    k, f = s.valencies, s.multiplicities
    for i in range(s.d + 1):
        for j in range(s.d + 1):
            assert p(0, i, j) == (k[i] if i == j else 0)
            assert q(0, i, j) == (f[i] if i == j else 0)
            for kk in range(s.d + 1):
                assert p(kk, i, j) == p(kk, j, i)
                assert q(kk, i, j) == q(kk, j, i)


def test_cs2_krein_nonnegative():
    assert all(x >= 0 for _, x in krein_parameters(cameron_seidel(2)).entries())


def test_cs1_intersection_numbers_by_counting():
    # CS(1) is hamming(3) up to reordering relations and eigenspaces
    s = cameron_seidel(1)
    h = hamming(3)
    perm = None
    for cols in permutations(range(1, 4)):
        for rows in permutations(range(1, 4)):
            if all(s.P[u, i] == h.P[([0] + list(rows))[u], ([0] + list(cols))[i]]
                   for u in range(4) for i in range(4)):
                perm = [0] + list(cols)
    assert perm is not None
    mats = hamming_matrices(3).matrices
    counted = triple_counts([mats[perm[i]] for i in range(4)])
    p = intersection_numbers(s)
    for (k, i, j), value in counted.items():
        assert p(k, i, j) == value


def test_hamming_intersection_numbers_by_counting():
    for d in (2, 3, 4):
        counted = triple_counts(hamming_matrices(d).matrices)
        p = intersection_numbers(hamming(d))
        assert all(p(*key) == v for key, v in counted.items())
