"""Independence-number bounds for graphs that are unions of scheme relations.

Three bounds are computed from parameters alone:

* the Delsarte linear-programming bound, which for such graphs coincides
  with the Lovasz theta number,
* the unweighted inertia (Cvetkovic) bound,
* the unweighted ratio (Hoffman) bound.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exactmath import RationalMatrix
from .lp import LPOutcome, LPProblem, LPStatus, solve_lp_simplex
from .scheme import SchemeParameters, ValidationReport

__all__ = [
    "RelationSet",
    "UnionSpectrum",
    "InnerDistribution",
    "BoundsReport",
    "LPBound",
    "InconsistentSchemeError",
    "union_spectrum",
    "inertia_bound",
    "ratio_bound",
    "delsarte_lp",
    "delsarte_lp_bound",
    "delsarte_feasibility",
    "bounds_report",
]


class InconsistentSchemeError(RuntimeError):
    """The Delsarte LP was infeasible or unbounded, which no valid scheme allows."""


@dataclass(frozen=True)
class RelationSet:
    members: tuple[int, ...]

    def __init__(self, members: Iterable[int]):
        members = tuple(sorted(set(members)))
        if any(isinstance(i, bool) or not isinstance(i, int) for i in members):
            raise TypeError("relation indices must be integers")
        if 0 in members:
            raise ValueError("relation 0 (the identity) cannot be part of a graph")
        if any(i < 0 for i in members):
            raise ValueError(f"negative relation index in {members}")
        object.__setattr__(self, "members", members)

    def check_against(self, d: int) -> None:
        if not self.members:
            raise ValueError("relation set is empty")
        bad = [i for i in self.members if i > d]
        if bad:
            raise ValueError(f"relation index {bad[0]} out of range 1..{d}")

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, i) -> bool:
        return i in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return ",".join(map(str, self.members))


def _relations(S) -> RelationSet:
    return S if isinstance(S, RelationSet) else RelationSet(S)


@dataclass(frozen=True)
class UnionSpectrum:
    """Distinct eigenvalues (descending) with multiplicities."""

    pairs: tuple[tuple[Fraction, int], ...]
    n: int
    valency: Fraction

    @property
    def min_eigenvalue(self) -> Fraction:
        return self.pairs[-1][0]

    def trace(self) -> Fraction:
        return sum((lam * m for lam, m in self.pairs), Fraction(0))


@dataclass(frozen=True)
class InnerDistribution:
    a: tuple[Fraction, ...]

    def __init__(self, a: Iterable):
        object.__setattr__(self, "a", tuple(Fraction(x) for x in a))

    def __getitem__(self, i: int) -> Fraction:
        return self.a[i]

    def __len__(self) -> int:
        return len(self.a)

    def size(self) -> Fraction:
        """``|Y|`` for a genuine subset: the distribution sums to the subset size."""
        return sum(self.a, Fraction(0))


def union_spectrum(s: SchemeParameters, S) -> UnionSpectrum:
    """Eigenvalue ``sum_{i in S} P[u][i]`` on eigenspace ``u``, with multiplicity ``f_u``."""
    S = _relations(S)
    S.check_against(s.d)
    f = s.multiplicities
    counts: Counter = Counter()
    for u in range(s.d + 1):
        counts[sum((s.P[u, i] for i in S), Fraction(0))] += f[u]
    pairs = []
    for lam in sorted(counts, reverse=True):
        mult = counts[lam]
        if mult.denominator != 1 or mult <= 0:
            raise ValueError(f"eigenvalue {lam} has non-integral multiplicity {mult}")
        pairs.append((lam, int(mult)))
    valency = sum((s.P[0, i] for i in S), Fraction(0))
    return UnionSpectrum(pairs=tuple(pairs), n=s.n, valency=valency)


def inertia_bound(spec: UnionSpectrum) -> int:
    """``min(#eigenvalues >= 0, #eigenvalues <= 0)``; zero eigenvalues count on both sides."""
    if not spec.pairs:
        raise ValueError("empty spectrum")
    nonneg = sum(m for lam, m in spec.pairs if lam >= 0)
    nonpos = sum(m for lam, m in spec.pairs if lam <= 0)
    return min(nonneg, nonpos)


def ratio_bound(spec: UnionSpectrum) -> Fraction:
    """``n * (-lambda_min) / (k - lambda_min)``, exact and unfloored."""
    lam_min = spec.min_eigenvalue
    if lam_min >= 0 or spec.valency <= 0:
        raise ValueError("ratio bound needs a nonempty regular graph (k > 0, lambda_min < 0)")
    return spec.n * -lam_min / (spec.valency - lam_min)


@dataclass(frozen=True)
class LPBound:
    """Optimal Delsarte LP solution together with its solver outcome."""

    value: Fraction
    optimizer: InnerDistribution
    free: tuple[int, ...]
    outcome: LPOutcome
    problem: LPProblem

    def aQ(self, s: SchemeParameters) -> tuple[Fraction, ...]:
        return s.Q.vecmul(self.optimizer.a)

    def tight_constraints(self, s: SchemeParameters) -> tuple[int, ...]:
        return tuple(j for j, v in enumerate(self.aQ(s)) if v == 0)


def delsarte_problem(s: SchemeParameters, S) -> tuple[LPProblem, tuple[int, ...]]:
    """LP over ``a_i, i not in S u {0}`` with ``a_0 = 1`` substituted.

    ``(aQ)_j >= 0`` becomes ``-sum_i a_i Q[i][j] <= Q[0][j]``.
    """
    S = _relations(S)
    S.check_against(s.d)
    free = tuple(i for i in range(1, s.d + 1) if i not in S)
    rows = [[-s.Q[i, j] for i in free] for j in range(s.d + 1)]
    A = RationalMatrix(s.d + 1, len(free), (x for r in rows for x in r))
    return LPProblem(c=[1] * len(free), A=A, b=s.Q.row(0)), free


def delsarte_lp(s: SchemeParameters, S) -> LPBound:
    problem, free = delsarte_problem(s, S)
    out = solve_lp_simplex(problem)
    if out.status is not LPStatus.OPTIMAL:
        raise InconsistentSchemeError(f"Delsarte LP for {s.name or 'scheme'} is {out.status.value}")
    a = [Fraction(0)] * (s.d + 1)
    a[0] = Fraction(1)
    for i, v in zip(free, out.primal):
        a[i] = v
    return LPBound(value=1 + out.value, optimizer=InnerDistribution(a), free=free, outcome=out, problem=problem)


def delsarte_lp_bound(s: SchemeParameters, S) -> tuple[Fraction, InnerDistribution]:
    """Maximum of ``sum a_i`` over Delsarte-feasible inner distributions avoiding ``S``."""
    res = delsarte_lp(s, S)
    return res.value, res.optimizer


def delsarte_feasibility(a, s: SchemeParameters) -> ValidationReport:
    """Check ``a_0 = 1``, ``a >= 0`` and ``(aQ)_j >= 0`` exactly.

    Sign problems in ``a`` itself are reported first and suppress the
    ``aQ`` check.
    """
    a = a if isinstance(a, InnerDistribution) else InnerDistribution(a)
    report = ValidationReport()
    if len(a) != s.d + 1:
        report.fail("dimension", f"inner distribution has length {len(a)}, scheme has {s.d + 1} relations")
        return report
    if a[0] != 1:
        report.fail("a0", f"a_0 = {a[0]}, expected 1")
    for i, x in enumerate(a.a):
        if x < 0:
            report.fail("nonnegativity", f"a_{i} = {x} < 0")
    if not report.passed:
        return report
    for j, v in enumerate(s.Q.vecmul(a.a)):
        if v < 0:
            report.fail("delsarte", f"(aQ)_{j} = {v} < 0")
    return report


@dataclass(frozen=True)
class BoundsReport:
    scheme: str
    relations: RelationSet
    n: int
    lp_bound: Fraction
    lp_optimizer: InnerDistribution
    inertia: int
    ratio: Fraction
    spectrum: UnionSpectrum
    lp: LPBound


def bounds_report(s: SchemeParameters, S) -> BoundsReport:
    S = _relations(S)
    spec = union_spectrum(s, S)
    lp = delsarte_lp(s, S)
    return BoundsReport(
        scheme=s.name,
        relations=S,
        n=s.n,
        lp_bound=lp.value,
        lp_optimizer=lp.optimizer,
        inertia=inertia_bound(spec),
        ratio=ratio_bound(spec),
        spectrum=spec,
        lp=lp,
    )
