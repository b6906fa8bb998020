"""Parameter-level symmetric association schemes.

A scheme with ``d`` classes on ``n`` points is described by its eigenmatrices
``P`` and ``Q``.  Row ``u`` of ``P`` lists the eigenvalues of the relation
matrices ``A_0..A_d`` on the ``u``-th common eigenspace; column ``j`` of
``Q`` expresses the idempotent ``E_j`` in the basis ``A_i / n``.  Index 0 is
always the identity relation and the all-ones eigenspace.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactmath import RationalMatrix, ShapeError, format_rational, mat_inverse

__all__ = [
    "SchemeParameters",
    "IntersectionNumbers",
    "KreinParameters",
    "ValidationReport",
    "derive_q_from_p",
    "validate_parameters",
    "intersection_numbers",
    "krein_parameters",
]


def derive_q_from_p(P: RationalMatrix, n) -> RationalMatrix:
    """Return ``n * P^-1``; raises SingularMatrixError for singular ``P``."""
    return mat_inverse(P).scale(n)


@dataclass(frozen=True)
class SchemeParameters:
    P: RationalMatrix
    Q: RationalMatrix
    n: int
    name: str = ""

    def __post_init__(self):
        if not (self.P.is_square and self.Q.is_square and self.P.shape == self.Q.shape):
            raise ShapeError(f"P {self.P.shape} and Q {self.Q.shape} must be equal square shapes")
        if self.P.rows < 2:
            raise ShapeError("a scheme needs at least one class")
        n = Fraction(self.n)
        if n.denominator != 1 or n <= 0:
            raise ValueError(f"order must be a positive integer, got {self.n}")
        object.__setattr__(self, "n", int(n))

    @classmethod
    def from_p(cls, P: RationalMatrix, n: Optional[int] = None, name: str = "") -> "SchemeParameters":
        """Build from ``P`` alone; ``n`` defaults to the sum of the valencies."""
        if n is None:
            n = sum(P.row(0))
        return cls(P=P, Q=derive_q_from_p(P, n), n=n, name=name)

    @property
    def d(self) -> int:
        return self.P.rows - 1

    @property
    def valencies(self) -> tuple[Fraction, ...]:
        return self.P.row(0)

    @property
    def multiplicities(self) -> tuple[Fraction, ...]:
        return self.Q.row(0)


@dataclass(frozen=True)
class IntersectionNumbers:
    """``p[k][i][j]``: common ``z`` with ``(x,z) in R_i, (z,y) in R_j`` for ``(x,y) in R_k``."""

    p: tuple

    def __call__(self, k: int, i: int, j: int) -> Fraction:
        return self.p[k][i][j]

    @property
    def size(self) -> int:
        return len(self.p)

    def entries(self):
        r = range(self.size)
        return (((k, i, j), self.p[k][i][j]) for k in r for i in r for j in r)


@dataclass(frozen=True)
class KreinParameters:
    q: tuple

    def __call__(self, k: int, i: int, j: int) -> Fraction:
        return self.q[k][i][j]

    @property
    def size(self) -> int:
        return len(self.q)

    def entries(self):
        r = range(self.size)
        return (((k, i, j), self.q[k][i][j]) for k in r for i in r for j in r)


@dataclass
class ValidationReport:
    """Outcome of a battery of checks.

    ``warnings`` never affect ``passed``; they hold conditions that a
    feasible parameter set may violate without being inconsistent.
    """

    failures: list[tuple[str, str]] = field(default_factory=list)
    warnings: list[tuple[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, check: str, detail: str) -> None:
        self.failures.append((check, detail))

    def warn(self, check: str, detail: str) -> None:
        self.warnings.append((check, detail))

    def failed_checks(self) -> list[str]:
        return sorted({name for name, _ in self.failures})

    def extend(self, other: "ValidationReport") -> None:
        self.failures.extend(other.failures)
        self.warnings.extend(other.warnings)

    def __bool__(self) -> bool:
        return self.passed


def _triple_table(m: int, value) -> tuple:
    return tuple(
        tuple(tuple(value(k, i, j) for j in range(m)) for i in range(m)) for k in range(m)
    )


def intersection_numbers(s: SchemeParameters) -> IntersectionNumbers:
    """Solve the eigenvalue relations ``P[u][i] P[u][j] = sum_k P[u][k] p[k][i][j]``.

    Because ``P Q = n I`` this inverts to
    ``p[k][i][j] = (1/n) sum_u Q[k][u] P[u][i] P[u][j]``.
    """
    P, Q, m = s.P, s.Q, s.d + 1
    n = Fraction(s.n)

    def value(k, i, j):
        return sum((Q[k, u] * P[u, i] * P[u, j] for u in range(m)), Fraction(0)) / n

    return IntersectionNumbers(_triple_table(m, value))


def krein_parameters(s: SchemeParameters) -> KreinParameters:
    """``q[k][i][j] = (1/n) sum_u P[k][u] Q[u][i] Q[u][j]``."""
    P, Q, m = s.P, s.Q, s.d + 1
    n = Fraction(s.n)

    def value(k, i, j):
        return sum((P[k, u] * Q[u, i] * Q[u, j] for u in range(m)), Fraction(0)) / n

    return KreinParameters(_triple_table(m, value))


def _is_positive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x > 0


def validate_parameters(s: SchemeParameters) -> ValidationReport:
    """Run every parameter identity and feasibility check, collecting all failures."""
    report = ValidationReport()
    P, Q, m = s.P, s.Q, s.d + 1
    n = s.n

    for u in range(m):
        if P[u, 0] != 1:
            report.fail("first-column", f"P[{u}][0] = {format_rational(P[u, 0])}, expected 1")
        if Q[u, 0] != 1:
            report.fail("first-column", f"Q[{u}][0] = {format_rational(Q[u, 0])}, expected 1")

    k, f = s.valencies, s.multiplicities
    for name, seq in (("valency", k), ("multiplicity", f)):
        if seq[0] != 1:
            report.fail(f"{name}-trivial", f"{name} 0 is {format_rational(seq[0])}, expected 1")
        for i, x in enumerate(seq):
            if not _is_positive_integer(x):
                report.fail(f"{name}-integrality", f"{name} {i} = {format_rational(x)} is not a positive integer")
        total = sum(seq)
        if total != n:
            report.fail(f"{name}-sum", f"{name}s sum to {format_rational(total)}, order is {n}")

    # Each row of P other than row 0 is orthogonal to the all-ones eigenvector's row.
    for u in range(1, m):
        row_sum = sum(P.row(u))
        if row_sum != 0:
            report.fail("row-sum", f"row {u} of P sums to {format_rational(row_sum)}, expected 0")

    PQ = P @ Q
    bad = [(i, j) for i in range(m) for j in range(m) if PQ[i, j] != (n if i == j else 0)]
    if bad:
        i, j = bad[0]
        report.fail("PQ=nI", f"{len(bad)} entries wrong, e.g. (PQ)[{i}][{j}] = {format_rational(PQ[i, j])}")
        return report

    if all(_is_positive_integer(x) for x in k + f):
        for i in range(m):
            for j in range(m):
                if Q[i, j] * k[i] != P[j, i] * f[j]:
                    report.fail(
                        "duality",
                        f"Q[{i}][{j}]/f_{j} = {format_rational(Q[i, j] / f[j])} "
                        f"but P[{j}][{i}]/k_{i} = {format_rational(P[j, i] / k[i])}",
                    )

    for (kk, i, j), x in intersection_numbers(s).entries():
        if x.denominator != 1 or x < 0:
            report.fail("intersection-numbers", f"p[{kk}][{i}][{j}] = {format_rational(x)} is not a nonnegative integer")
    for (kk, i, j), x in krein_parameters(s).entries():
        if x < 0:
            report.warn("krein", f"q[{kk}][{i}][{j}] = {format_rational(x)} is negative")
    return report
