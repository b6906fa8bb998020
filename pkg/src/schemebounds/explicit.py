"""Concrete 0/1 relation matrices and brute-force ground truth.

Small schemes are realized as explicit adjacency matrices so that the
parameter-level machinery can be checked against direct counting.  Vertex
sets in the independence search are Python ints used as bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .bounds import InnerDistribution, RelationSet
from .scheme import IntersectionNumbers, ValidationReport

__all__ = [
    "MAX_POINTS",
    "ExplicitScheme",
    "SizeError",
    "hamming_matrices",
    "complete_graph_matrices",
    "pentagon_matrices",
    "verify_explicit_scheme",
    "inner_distribution",
    "brute_force_alpha",
    "permuted",
]

MAX_POINTS = 64


class SizeError(ValueError):
    """Fixture too large for the brute-force oracle."""


@dataclass(frozen=True, eq=False)
class ExplicitScheme:
    matrices: tuple[np.ndarray, ...]
    name: str = ""

    def __init__(self, matrices: Sequence, name: str = ""):
        mats = tuple(np.array(m, dtype=np.int64) for m in matrices)
        if not mats:
            raise ValueError("need at least A_0")
        n = mats[0].shape[0]
        for m in mats:
            if m.shape != (n, n):
                raise ValueError(f"relation matrix of shape {m.shape}, expected {(n, n)}")
            m.setflags(write=False)
        object.__setattr__(self, "matrices", mats)
        object.__setattr__(self, "name", name)

    @property
    def n(self) -> int:
        return self.matrices[0].shape[0]

    @property
    def d(self) -> int:
        return len(self.matrices) - 1

    def graph(self, S) -> np.ndarray:
        S = S if isinstance(S, RelationSet) else RelationSet(S)
        S.check_against(self.d)
        return sum((self.matrices[i] for i in S), np.zeros((self.n, self.n), dtype=np.int64))


def hamming_matrices(d: int) -> ExplicitScheme:
    """Binary words of length ``d``; ``(x, y) in R_i`` iff they differ in ``i`` places."""
    if d < 1 or 2 ** d > MAX_POINTS:
        raise SizeError(f"hamming fixture needs 1 <= d <= 6, got {d}")
    n = 2 ** d
    words = np.arange(n)
    dist = np.array([[bin(x ^ y).count("1") for y in words] for x in words])
    return ExplicitScheme([(dist == i).astype(np.int64) for i in range(d + 1)], name=f"hamming(d={d})")


def complete_graph_matrices(n: int) -> ExplicitScheme:
    if not 2 <= n <= MAX_POINTS:
        raise SizeError(f"complete fixture needs 2 <= n <= {MAX_POINTS}, got {n}")
    eye = np.eye(n, dtype=np.int64)
    return ExplicitScheme([eye, 1 - eye], name=f"complete(n={n})")


def pentagon_matrices() -> ExplicitScheme:
    """The 5-cycle and its complement (also a 5-cycle)."""
    idx = np.arange(5)
    gap = np.minimum((idx[:, None] - idx[None, :]) % 5, (idx[None, :] - idx[:, None]) % 5)
    return ExplicitScheme([(gap == i).astype(np.int64) for i in range(3)], name="pentagon")


def permuted(e: ExplicitScheme, perm: Sequence[int]) -> ExplicitScheme:
    """Relabel points: new point ``perm[x]`` plays the role of old point ``x``."""
    perm = np.asarray(perm)
    inv = np.argsort(perm)
    return ExplicitScheme([m[np.ix_(inv, inv)] for m in e.matrices], name=e.name)


def verify_explicit_scheme(e: ExplicitScheme) -> tuple[ValidationReport, IntersectionNumbers]:
    """Check axioms (i)-(iv) by direct computation and count ``p[k][i][j]``.

    Entries of the returned table are ``None`` where a product does not
    decompose (axiom (iv) violated) or relation ``k`` is empty.
    """
    report = ValidationReport()
    mats, n, m = e.matrices, e.n, e.d + 1

    for i, A in enumerate(mats):
        if not np.isin(A, (0, 1)).all():
            x, y = np.argwhere(~np.isin(A, (0, 1)))[0]
            report.fail("0/1 entries", f"A_{i}[{x}][{y}] = {A[x, y]}")
    if not np.array_equal(mats[0], np.eye(n, dtype=np.int64)):
        x, y = np.argwhere(mats[0] != np.eye(n, dtype=np.int64))[0]
        report.fail("axiom (ii)", f"A_0 is not the identity: witness ({x}, {y})")
    total = sum(mats)
    if not (total == 1).all():
        x, y = np.argwhere(total != 1)[0]
        report.fail("axiom (i)", f"pair ({x}, {y}) lies in {total[x, y]} relations")
    for i, A in enumerate(mats):
        if not np.array_equal(A, A.T):
            x, y = np.argwhere(A != A.T)[0]
            report.fail("axiom (iii)", f"A_{i} not symmetric: witness ({x}, {y})")
        if i > 0 and not A.any():
            report.fail("nonempty", f"relation {i} is empty")

    witness = []
    for k, A in enumerate(mats):
        nz = np.argwhere(A)
        witness.append(tuple(nz[0]) if len(nz) else None)

    table = [[[None] * m for _ in range(m)] for _ in range(m)]
    for i, j in product(range(m), repeat=2):
        prod = mats[i] @ mats[j]
        coeffs = []
        for k in range(m):
            if witness[k] is None:
                coeffs.append(0)
                continue
            x, y = witness[k]
            coeffs.append(int(prod[x, y]))
        recon = sum(c * A for c, A in zip(coeffs, mats))
        if not np.array_equal(prod, recon):
            x, y = np.argwhere(prod != recon)[0]
            k = next(kk for kk in range(m) if mats[kk][x, y])
            report.fail(
                "axiom (iv)",
                f"(A_{i} A_{j})[{x}][{y}] = {prod[x, y]} but pair is in R_{k} where p[{k}][{i}][{j}] = {coeffs[k]}",
            )
            continue
        for k in range(m):
            if witness[k] is not None:
                table[k][i][j] = Fraction(coeffs[k])
    p = tuple(tuple(tuple(row) for row in block) for block in table)
    return report, IntersectionNumbers(p)


def inner_distribution(e: ExplicitScheme, members: Iterable[int]) -> InnerDistribution:
    """``a_i = chi^T A_i chi / |Y|`` for the subset ``Y`` given by ``members``."""
    members = sorted(set(members))
    if not members:
        raise ValueError("inner distribution of the empty set is undefined")
    if members[0] < 0 or members[-1] >= e.n:
        raise ValueError(f"subset members must lie in 0..{e.n - 1}")
    chi = np.zeros(e.n, dtype=np.int64)
    chi[members] = 1
    size = len(members)
    return InnerDistribution(Fraction(int(chi @ A @ chi), size) for A in e.matrices)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _degeneracy_order(nbrs: list[int]) -> list[int]:
    """Repeatedly remove a minimum-degree vertex; return removal order."""
    n = len(nbrs)
    remaining = (1 << n) - 1
    order = []
    while remaining:
        v = min(
            (v for v in range(n) if remaining >> v & 1),
            key=lambda v: (_popcount(nbrs[v] & remaining), v),
        )
        order.append(v)
        remaining &= ~(1 << v)
    return order


def _clique_cover_bound(cand: int, nbrs: list[int]) -> int:
    """Number of cliques in a greedy clique partition of ``cand``.

    An independent set meets each clique at most once.
    """
    count = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        clique_pool = cand & nbrs[v]
        cand &= ~low
        while clique_pool:
            low = clique_pool & -clique_pool
            w = low.bit_length() - 1
            cand &= ~low
            clique_pool &= nbrs[w]
        count += 1
    return count


def brute_force_alpha(e: ExplicitScheme, S) -> int:
    """Exact independence number of ``sum_{i in S} A_i`` by branch and bound."""
    if e.n > MAX_POINTS:
        raise SizeError(f"brute force limited to {MAX_POINTS} points, got {e.n}")
    G = e.graph(S)
    n = e.n
    # relabel to degeneracy order so low bits are low-degree vertices
    raw = [sum(1 << int(w) for w in np.flatnonzero(G[v])) for v in range(n)]
    order = _degeneracy_order(raw)
    pos = {v: i for i, v in enumerate(order)}
    nbrs = [0] * n
    for v in range(n):
        nbrs[pos[v]] = sum(1 << pos[int(w)] for w in np.flatnonzero(G[v]))

    best = 0

    def search(cand: int, size: int) -> None:
        nonlocal best
        while True:
            if cand == 0:
                best = max(best, size)
                return
            if size + _popcount(cand) <= best or size + _clique_cover_bound(cand, nbrs) <= best:
                return
            # a vertex with at most one candidate neighbour can always be taken
            v = next(
                (v for v in _bits(cand) if _popcount(nbrs[v] & cand) <= 1),
                None,
            )
            if v is None:
                break
            cand &= ~(nbrs[v] | (1 << v))
            size += 1
        v = (cand & -cand).bit_length() - 1
        search(cand & ~(nbrs[v] | (1 << v)), size + 1)
        search(cand & ~(1 << v), size)

    search((1 << n) - 1, 0)
    return best


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low
