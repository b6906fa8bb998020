import math
import random
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from schemebounds.bounds import delsarte_feasibility, delsarte_lp_bound, inertia_bound, ratio_bound, union_spectrum
from schemebounds.builders import complete_graph, hamming
from schemebounds.explicit import (
    ExplicitScheme,
    SizeError,
    brute_force_alpha,
    complete_graph_matrices,
    hamming_matrices,
    inner_distribution,
    pentagon_matrices,
    permuted,
    verify_explicit_scheme,
)
from schemebounds.scheme import intersection_numbers

from oracles import alpha_networkx


def nonempty_subsets(d):
    return [set(c) for r in range(1, d + 1) for c in combinations(range(1, d + 1), r)]


def test_hamming1():
    assert hamming_matrices(1).matrices[1].tolist() == [[0, 1], [1, 0]]


def test_hamming3_cube():
    A1 = hamming_matrices(3).matrices[1]
    assert (A1.sum(axis=1) == 3).all()
    report, p = verify_explicit_scheme(hamming_matrices(3))
    assert report.passed
    assert p(2, 1, 1) == 2


def test_size_limits():
    with pytest.raises(SizeError):
        hamming_matrices(7)
    with pytest.raises(SizeError):
        complete_graph_matrices(65)
    with pytest.raises(SizeError):
        complete_graph_matrices(1)


def test_complete_matrices():
    assert complete_graph_matrices(2).matrices[1].tolist() == [[0, 1], [1, 0]]
    _, p = verify_explicit_scheme(complete_graph_matrices(3))
    assert p(1, 1, 1) == 1
    assert brute_force_alpha(complete_graph_matrices(5), {1}) == 1


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_counted_matches_parameters_hamming(d):
    report, counted = verify_explicit_scheme(hamming_matrices(d))
    assert report.passed
    assert counted == intersection_numbers(hamming(d))


@pytest.mark.parametrize("n", range(2, 11))
def test_counted_matches_parameters_complete(n):
    report, counted = verify_explicit_scheme(complete_graph_matrices(n))
    assert report.passed
    assert counted == intersection_numbers(complete_graph(n))


def test_asymmetric_flagged():
    mats = [m.copy() for m in hamming_matrices(3).matrices]
    mats[1][0, 1], mats[2][0, 1] = 0, 1
    report, _ = verify_explicit_scheme(ExplicitScheme(mats))
    assert "axiom (iii)" in report.failed_checks()
    detail = dict(report.failures)["axiom (iii)"]
    assert "witness" in detail


def test_non_partition_flagged():
    mats = [m.copy() for m in hamming_matrices(2).matrices]
    mats[1][0, 3] = mats[1][3, 0] = 1
    report, _ = verify_explicit_scheme(ExplicitScheme(mats))
    assert "axiom (i)" in report.failed_checks()


def test_non_regular_flagged():
    # path on 3 vertices plus complement is not a scheme
    A1 = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]])
    A2 = 1 - np.eye(3, dtype=int) - A1
    report, _ = verify_explicit_scheme(ExplicitScheme([np.eye(3, dtype=int), A1, A2]))
    assert "axiom (iv)" in report.failed_checks()


def test_pentagon():
    report, p = verify_explicit_scheme(pentagon_matrices())
    assert report.passed
    # strongly regular (5, 2, 0, 1)
    assert (p(0, 1, 1), p(1, 1, 1), p(2, 1, 1)) == (2, 0, 1)
    assert brute_force_alpha(pentagon_matrices(), {1}) == 2
    assert brute_force_alpha(pentagon_matrices(), {1, 2}) == 1


def test_inner_distribution_examples():
    e = hamming_matrices(3)
    assert inner_distribution(e, {5}).a == (1, 0, 0, 0)
    even = [x for x in range(8) if bin(x).count("1") % 2 == 0]
    a = inner_distribution(e, even)
    assert a.a == (1, 0, 3, 0)
    assert delsarte_feasibility(a, hamming(3)).passed
    assert inner_distribution(complete_graph_matrices(5), {0, 1}).a == (1, 1)
    with pytest.raises(ValueError):
        inner_distribution(e, [])


def test_alpha_examples():
    assert brute_force_alpha(complete_graph_matrices(7), {1}) == 1
    assert brute_force_alpha(hamming_matrices(3), {1}) == 4
    assert brute_force_alpha(hamming_matrices(3), {1, 3}) == 4


@pytest.mark.parametrize("d", [2, 3, 4])
def test_alpha_matches_networkx(d):
    e = hamming_matrices(d)
    for S in nonempty_subsets(d):
        assert brute_force_alpha(e, S) == alpha_networkx(e.graph(S))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_oracle_dominance(d):
    e, s = hamming_matrices(d), hamming(d)
    for S in nonempty_subsets(d):
        alpha = brute_force_alpha(e, S)
        spec = union_spectrum(s, S)
        assert alpha <= inertia_bound(spec)
        assert alpha <= math.floor(ratio_bound(spec))
        assert alpha <= math.floor(delsarte_lp_bound(s, S)[0])


@pytest.mark.parametrize("d", [5, 6])
def test_alpha_large_fixtures(d):
    e = hamming_matrices(d)
    for S in ({1}, {1, 2}, {2}):
        alpha = brute_force_alpha(e, S)
        assert alpha <= math.floor(delsarte_lp_bound(hamming(d), S)[0])
    assert brute_force_alpha(e, {1}) == 2 ** (d - 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), st.randoms(use_true_random=False), st.data())
def test_alpha_permutation_invariant(d, rnd, data):
    e = hamming_matrices(d)
    S = data.draw(st.sampled_from(nonempty_subsets(d)))
    perm = list(range(e.n))
    rnd.shuffle(perm)
    pe = permuted(e, perm)
    assert verify_explicit_scheme(pe)[0].passed
    assert brute_force_alpha(pe, S) == brute_force_alpha(e, S)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 5).flatmap(lambda d: st.tuples(
    st.just(d), st.sets(st.integers(0, 2 ** d - 1), min_size=1))))
def test_real_subsets_are_delsarte_feasible(args):
    d, Y = args
    a = inner_distribution(hamming_matrices(d), Y)
    assert a[0] == 1 and a.size() == len(Y)
    assert all((x * len(Y)).denominator == 1 for x in a.a)
    assert delsarte_feasibility(a, hamming(d)).passed


def test_independent_sets_respect_lp():
    rnd = random.Random(5)
    e, s = hamming_matrices(4), hamming(4)
    for S in nonempty_subsets(4):
        G = e.graph(S)
        Y = []
        for v in rnd.sample(range(16), 16):
            if all(G[v, w] == 0 for w in Y):
                Y.append(v)
        a = inner_distribution(e, Y)
        assert all(a[i] == 0 for i in S)
        assert a.size() <= delsarte_lp_bound(s, S)[0]
