"""Closed-form scheme families."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb

from .exactmath import RationalMatrix
from .scheme import SchemeParameters

__all__ = [
    "FAMILIES",
    "FamilyParameter",
    "ClosedFormBounds",
    "NonPrimePowerWarning",
    "cameron_seidel",
    "cs_closed_form",
    "gq_point_graph",
    "hamming",
    "complete_graph",
    "build_family",
    "is_prime_power",
]

# family name -> (parameter name, minimum value)
FAMILIES = {
    "cameron-seidel": ("t", 1),
    "gq": ("q", 2),
    "hamming": ("d", 1),
    "complete": ("n", 2),
}


class NonPrimePowerWarning(UserWarning):
    """A GQ of order (q, q^2) is only known to exist for prime powers q."""


@dataclass(frozen=True)
class FamilyParameter:
    family: str
    parameter: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        pname, low = FAMILIES[self.family]
        if isinstance(self.parameter, bool) or not isinstance(self.parameter, int) or self.parameter < low:
            raise ValueError(f"{self.family} needs integer {pname} >= {low}, got {self.parameter!r}")


@dataclass(frozen=True)
class ClosedFormBounds:
    n: int
    lovasz: int
    inertia: int


def _check(value, low, name):
    if isinstance(value, bool) or not isinstance(value, int) or value < low:
        raise ValueError(f"{name} must be an integer >= {low}, got {value!r}")


def cameron_seidel(t: int) -> SchemeParameters:
    """The 3-class Cameron-Seidel scheme on ``2^(4t-1)`` points.

    Both eigenmatrices are entered in closed form; relation 3 is the graph
    whose Lovasz number and inertia bound separate.
    """
    _check(t, 1, "t")
    a, b, c, e = 2 ** (4 * t - 2), 2 ** (3 * t - 2), 2 ** (2 * t - 1), 2 ** (t - 1)
    s = 2 ** t
    P = RationalMatrix.from_rows([
        [1, 2 ** (2 * t) - 1, a + b - c - e, a - b - c + e],
        [1, -1, b - e, -b + e],
        [1, -1, -e, e],
        [1, 2 ** (2 * t) - 1, -c - e, -c + e],
    ])
    Q = RationalMatrix.from_rows([
        [1, 2 ** (2 * t) - 1, 2 ** (4 * t - 1) - 3 * c + 1, c - 1],
        [1, -1, -c + 1, c - 1],
        [1, s - 1, -s + 1, -1],
        [1, -s - 1, s + 1, -1],
    ])
    return SchemeParameters(P=P, Q=Q, n=2 ** (4 * t - 1), name=f"cameron-seidel(t={t})")


def cs_closed_form(t: int) -> ClosedFormBounds:
    _check(t, 1, "t")
    return ClosedFormBounds(
        n=2 ** (4 * t - 1),
        lovasz=2 ** (3 * t - 1),
        inertia=3 * 2 ** (2 * t - 1) - 2,
    )


def is_prime_power(m: int) -> bool:
    if m < 2:
        return False
    p = next(p for p in range(2, m + 1) if m % p == 0)
    while m % p == 0:
        m //= p
    return m == 1


def gq_point_graph(q: int) -> SchemeParameters:
    """Collinearity graph of a generalized quadrangle of order ``(q, q^2)``.

    Built from strongly regular graph parameters: valency ``q(q^2+1)`` and
    restricted eigenvalues ``q-1`` and ``-q^2-1``.  Relation 2 is
    non-collinearity.
    """
    _check(q, 2, "q")
    if not is_prime_power(q):
        warnings.warn(
            f"q = {q} is not a prime power; no GQ of order ({q}, {q * q}) is known",
            NonPrimePowerWarning,
            stacklevel=2,
        )
    n = (q ** 3 + 1) * (q + 1)
    k = q * (q * q + 1)
    r, s = q - 1, -q * q - 1
    P = RationalMatrix.from_rows([
        [1, k, n - k - 1],
        [1, r, -1 - r],
        [1, s, -1 - s],
    ])
    return SchemeParameters.from_p(P, n, name=f"gq(q={q})")


def _krawtchouk(d: int) -> list[list[int]]:
    # K[i][j] = K_j(i)
    K = [[0] * (d + 1) for _ in range(d + 1)]
    for j in range(d + 1):
        K[0][j] = comb(d, j)
    for i in range(1, d + 1):
        K[i][0] = 1
        for j in range(1, d + 1):
            K[i][j] = K[i - 1][j] - K[i - 1][j - 1] - K[i][j - 1]
    return K


def hamming(d: int) -> SchemeParameters:
    """Binary Hamming scheme H(d, 2); self-dual, so ``Q = P``."""
    _check(d, 1, "d")
    P = RationalMatrix.from_rows(_krawtchouk(d))
    return SchemeParameters(P=P, Q=P, n=2 ** d, name=f"hamming(d={d})")


def complete_graph(n: int) -> SchemeParameters:
    _check(n, 2, "n")
    P = RationalMatrix.from_rows([[1, n - 1], [1, -1]])
    return SchemeParameters(P=P, Q=P, n=n, name=f"complete(n={n})")


_BUILDERS = {
    "cameron-seidel": cameron_seidel,
    "gq": gq_point_graph,
    "hamming": hamming,
    "complete": complete_graph,
}


def build_family(fp: FamilyParameter) -> SchemeParameters:
    return _BUILDERS[fp.family](fp.parameter)
