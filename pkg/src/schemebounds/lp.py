"""Exact two-phase primal simplex over the rationals.

Problems are in inequality form::

    maximize c.x  subject to  A x <= b,  x >= 0

Every outcome carries a certificate that is re-checked in exact arithmetic
before it is returned: a dual optimum for ``optimal``, a Farkas vector for
``infeasible`` and a feasible point plus improving ray for ``unbounded``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exactmath import RationalMatrix, ShapeError, as_rational, mat_inverse

__all__ = [
    "LPProblem",
    "LPOutcome",
    "LPStatus",
    "CycleError",
    "CertificateError",
    "solve_lp_simplex",
    "check_outcome",
]

ZERO = Fraction(0)


class LPStatus(str, enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


class CycleError(RuntimeError):
    """Raised when the iteration cap is hit (only reachable with non-Bland rules)."""


class CertificateError(AssertionError):
    """A returned certificate failed exact verification."""


@dataclass(frozen=True)
class LPProblem:
    c: tuple
    A: RationalMatrix
    b: tuple

    def __init__(self, c: Sequence, A, b: Sequence):
        if not isinstance(A, RationalMatrix):
            A = RationalMatrix.from_rows(A) if len(A) else RationalMatrix(0, len(c), [])
        c = tuple(as_rational(x) for x in c)
        b = tuple(as_rational(x) for x in b)
        if A.cols != len(c) or A.rows != len(b):
            raise ShapeError(f"A is {A.shape} but len(c) = {len(c)}, len(b) = {len(b)}")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)

    @property
    def num_vars(self) -> int:
        return len(self.c)

    @property
    def num_constraints(self) -> int:
        return len(self.b)

    def objective(self, x: Sequence[Fraction]) -> Fraction:
        return sum((ci * xi for ci, xi in zip(self.c, x)), ZERO)

    def slacks(self, x: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(
            bi - sum((aij * xj for aij, xj in zip(self.A.row(i), x)), ZERO)
            for i, bi in enumerate(self.b)
        )

    def is_feasible(self, x: Sequence[Fraction]) -> bool:
        return all(xi >= 0 for xi in x) and all(s >= 0 for s in self.slacks(x))


@dataclass(frozen=True)
class LPOutcome:
    status: LPStatus
    primal: tuple = ()
    value: Optional[Fraction] = None
    dual: tuple = ()
    ray: tuple = ()
    pivots: int = 0

    @property
    def optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL


class _Tableau:
    """Dense tableau for ``M z = rhs, z >= 0`` with a fixed basis bookkeeping."""

    def __init__(self, M: list[list[Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = [row[:] + [r] for row, r in zip(M, rhs)]
        self.basis = basis[:]
        self.ncols = len(M[0]) if M else 0
        self.pivots = 0

    def value(self, j: int) -> Fraction:
        return self.rows[self.basis.index(j)][-1] if j in self.basis else ZERO

    def pivot(self, r: int, col: int) -> None:
        prow = self.rows[r]
        inv = 1 / prow[col]
        prow = [x * inv for x in prow]
        self.rows[r] = prow
        for i, row in enumerate(self.rows):
            if i != r and row[col] != 0:
                f = row[col]
                self.rows[i] = [x - f * y for x, y in zip(row, prow)]
        self.basis[r] = col
        self.pivots += 1

    def reduced_costs(self, cost: list[Fraction]) -> list[Fraction]:
        rc = cost[:]
        for row, bj in zip(self.rows, self.basis):
            cb = cost[bj]
            if cb:
                for j in range(self.ncols):
                    rc[j] -= cb * row[j]
        return rc

    def run(self, cost: list[Fraction], allowed: int, rule: str, max_pivots: int):
        """Maximize ``cost.z`` over columns ``< allowed``; returns entering column if unbounded."""
        while True:
            rc = self.reduced_costs(cost)
            candidates = [j for j in range(allowed) if rc[j] > 0]
            if not candidates:
                return None
            if rule == "bland":
                col = candidates[0]
            else:
                col = max(candidates, key=lambda j: (rc[j], -j))
            best = None
            for i, row in enumerate(self.rows):
                if row[col] > 0:
                    key = (row[-1] / row[col], self.basis[i] if rule == "bland" else i)
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return col
            if self.pivots >= max_pivots:
                raise CycleError(f"no termination after {self.pivots} pivots with rule {rule!r}")
            self.pivot(best[1], col)


def _basis_dual(M_cols: list[list[Fraction]], basis: list[int], cost: list[Fraction]) -> tuple[Fraction, ...]:
    m = len(basis)
    B = RationalMatrix(m, m, (M_cols[bj][i] for i in range(m) for bj in basis))
    return (RationalMatrix(1, m, [cost[bj] for bj in basis]) @ mat_inverse(B)).row(0)


def solve_lp_simplex(p: LPProblem, rule: str = "bland", max_pivots: int = 10_000) -> LPOutcome:
    """Solve ``max c.x, Ax <= b, x >= 0`` exactly.

    ``rule="bland"`` picks the lowest-index improving column and breaks ratio
    ties by lowest basic index, which guarantees termination.
    ``rule="dantzig"`` (largest reduced cost) exists for comparison only and
    may cycle on degenerate problems.
    """
    if rule not in ("bland", "dantzig"):
        raise ValueError(f"unknown pivot rule {rule!r}")
    nv, m = p.num_vars, p.num_constraints
    neg = [i for i in range(m) if p.b[i] < 0]

    # columns: x (nv), slacks (m), artificials (len(neg)); artificial for row i has -1 in row i
    M = []
    for i in range(m):
        row = list(p.A.row(i)) + [Fraction(int(i == k)) for k in range(m)]
        row += [Fraction(-1 if i == r else 0) for r in neg]
        M.append(row)
    ncols = nv + m + len(neg)
    art_of = {r: nv + m + t for t, r in enumerate(neg)}
    basis = [art_of.get(i, nv + i) for i in range(m)]
    # scale rows with artificial basis so the basic column is +e_i
    rhs = list(p.b)
    for i in neg:
        M[i] = [-x for x in M[i]]
        rhs[i] = -rhs[i]
    cols_original = [[(row[j] if i not in neg else -row[j]) for i, row in enumerate(M)] for j in range(ncols)]

    tab = _Tableau(M, rhs, basis)
    if neg:
        phase1 = [ZERO] * (nv + m) + [Fraction(-1)] * len(neg)
        tab.run(phase1, ncols, rule, max_pivots)
        infeas = -sum((tab.value(j) for j in art_of.values()), ZERO)
        if infeas < 0:
            y = _basis_dual(cols_original, tab.basis, phase1)
            out = LPOutcome(LPStatus.INFEASIBLE, dual=y, pivots=tab.pivots)
            check_outcome(p, out)
            return out
        # drive zero-level artificials out of the basis
        for r, bj in enumerate(tab.basis):
            if bj >= nv + m:
                col = next(j for j in range(nv + m) if tab.rows[r][j] != 0)
                tab.pivot(r, col)

    cost = list(p.c) + [ZERO] * (m + len(neg))
    entering = tab.run(cost, nv + m, rule, max_pivots)
    x = tuple(tab.value(j) for j in range(nv))
    if entering is not None:
        ray = [ZERO] * nv
        if entering < nv:
            ray[entering] = Fraction(1)
        for row, bj in zip(tab.rows, tab.basis):
            if bj < nv:
                ray[bj] = -row[entering]
        out = LPOutcome(LPStatus.UNBOUNDED, primal=x, ray=tuple(ray), pivots=tab.pivots)
    else:
        y = _basis_dual(cols_original, tab.basis, cost) if m else ()
        out = LPOutcome(LPStatus.OPTIMAL, primal=x, value=p.objective(x), dual=y, pivots=tab.pivots)
    check_outcome(p, out)
    return out


def check_outcome(p: LPProblem, out: LPOutcome) -> None:
    """Verify the certificate carried by ``out`` exactly; raise CertificateError if not."""
    A, b, c = p.A, p.b, p.c
    if out.status is LPStatus.OPTIMAL:
        x, y = out.primal, out.dual
        if not p.is_feasible(x):
            raise CertificateError("primal point is infeasible")
        if len(y) != p.num_constraints or any(yi < 0 for yi in y):
            raise CertificateError("dual vector is not nonnegative")
        Aty = A.vecmul(y)
        if any(Aty[j] < c[j] for j in range(p.num_vars)):
            raise CertificateError("dual vector violates A^T y >= c")
        dual_value = sum((bi * yi for bi, yi in zip(b, y)), ZERO)
        if dual_value != out.value or p.objective(x) != out.value:
            raise CertificateError(f"duality gap: c.x = {out.value}, b.y = {dual_value}")
    elif out.status is LPStatus.INFEASIBLE:
        y = out.dual
        Aty = A.vecmul(y)
        if any(yi < 0 for yi in y) or any(v < 0 for v in Aty):
            raise CertificateError("Farkas vector must satisfy y >= 0 and A^T y >= 0")
        if sum((bi * yi for bi, yi in zip(b, y)), ZERO) >= 0:
            raise CertificateError("Farkas vector must satisfy b.y < 0")
    else:
        x, d = out.primal, out.ray
        if not p.is_feasible(x):
            raise CertificateError("unbounded outcome carries an infeasible point")
        Ad = [b_i - s_i for b_i, s_i in zip(b, p.slacks(d))]
        if any(dj < 0 for dj in d) or any(v > 0 for v in Ad) or p.objective(d) <= 0:
            raise CertificateError("ray must satisfy d >= 0, A d <= 0, c.d > 0")
