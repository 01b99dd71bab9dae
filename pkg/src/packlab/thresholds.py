"""Closed-form edge thresholds for perfect matchings, clique packings and
equitable colourings, with explicit branch reporting.

All values are computed in exact integer arithmetic (Python integers), so
there is no overflow or rounding anywhere in this module except in the real
analytic bound ``second_branch_lower_bound``, which is documented as float.
Fractional range bounds such as ``n/(r-1) <= D`` are compared by
cross-multiplication, never by rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ParameterRangeError


@dataclass(frozen=True)
class ThresholdValue:
    """A threshold together with which branch of its max/min attained it.

    ``branch`` is ``"first"``, ``"second"`` or ``"tie"``, naming the argument
    order in the defining formula.
    """

    value: int
    branch: str


def _pick(first: int, second: int, *, largest: bool) -> ThresholdValue:
    if first == second:
        return ThresholdValue(first, "tie")
    if (first > second) == largest:
        return ThresholdValue(first, "first")
    return ThresholdValue(second, "second")


def turan_edges(m: int, s: int) -> int:
    """Edge count of the balanced complete s-partite graph on m vertices.

    Exact for every m >= 0, s >= 1; equals C(m, 2) when m <= s.
    """
    if s < 1 or m < 0:
        raise ParameterRangeError("need s >= 1 and m >= 0")
    q, a = divmod(m, s)
    return comb(m, 2) - a * comb(q + 1, 2) - (s - a) * comb(q, 2)


def turan_complement_edges(m: int, s: int) -> int:
    """Edge count of the disjoint union of s near-equal cliques on m vertices."""
    return comb(m, 2) - turan_edges(m, s)


def matching_blocker_edges(n: int, d: int) -> int:
    """Edge count of the minimum-degree-d matching blocker on n vertices.

    The blocker is a clique on n-d-1 vertices with d+1 extra vertices joined
    to d clique vertices; see ``constructions.build_matching_blocker``.
    """
    if n < 2 or n % 2:
        raise ParameterRangeError("need n >= 2 even")
    if not 0 <= d <= n // 2 - 1:
        raise ParameterRangeError("need 0 <= d <= n/2 - 1")
    return comb(n - d - 1, 2) + d * (d + 1)


def matching_threshold(n: int, d: int) -> ThresholdValue:
    """Maximum edge count of an n-vertex graph with min degree >= d and no
    perfect matching: max of the blocker edge counts at d and at n/2 - 1."""
    if n < 4 or n % 2:
        raise ParameterRangeError("need n >= 4 even")
    if not 1 <= d < n // 2:
        raise ParameterRangeError("need 1 <= d < n/2")
    return _pick(
        matching_blocker_edges(n, d),
        matching_blocker_edges(n, n // 2 - 1),
        largest=True,
    )


def packing_threshold(n: int, r: int, big_d: int) -> ThresholdValue:
    """Maximum edge count of an n-vertex graph with min degree >= D and no
    perfect r-clique packing, for r >= 3, r | n, r-1 <= D <= (r-1)n/r - 1."""
    if r < 3:
        raise ParameterRangeError("need r >= 3")
    if n <= 0 or n % r:
        raise ParameterRangeError("need r | n with n >= r")
    if not r - 1 <= big_d <= (r - 1) * n // r - 1:
        raise ParameterRangeError("need r-1 <= D <= (r-1)n/r - 1")
    first = comb(n, 2) - comb(n // r + 1, 2)
    second = big_d * (n - big_d) + comb(n - 1 - big_d, 2) + turan_edges(big_d, r - 2)
    return _pick(first, second, largest=True)


def colouring_threshold(n: int, r: int, big_d: int) -> ThresholdValue:
    """Minimum edge count of an n-vertex graph with max degree <= D and no
    equitable (n/r)-colouring, for r >= 3, r | n, n/r <= D <= n - r."""
    if r < 3:
        raise ParameterRangeError("need r >= 3")
    if n <= 0 or n % r:
        raise ParameterRangeError("need r | n with n >= r")
    if not n // r <= big_d <= n - r:
        raise ParameterRangeError("need n/r <= D <= n - r")
    first = comb(n // r + 1, 2)
    second = big_d + turan_complement_edges(n - big_d - 1, r - 2)
    return _pick(first, second, largest=False)


def duality_check(n: int, r: int, big_d: int) -> bool:
    """Packing and colouring thresholds are complementary:
    g(n, r, D) + f(n, r, n-1-D) == C(n, 2), checked exactly."""
    g = packing_threshold(n, r, big_d)
    f = colouring_threshold(n, r, n - 1 - big_d)
    return g.value + f.value == comb(n, 2)


def first_branch_regime(n: int, r: int, big_d: int) -> bool:
    """True when the colouring threshold is attained by its clique-number
    branch C(n/r + 1, 2) (ties count as attained)."""
    return colouring_threshold(n, r, big_d).branch in ("first", "tie")


def second_branch_lower_bound(n: int, r: int, x: float) -> float:
    """Real lower bound for the second colouring-threshold branch at degree x:
    x + (n-x-1)^2 / (2(r-2)) - (n-x-1)/2.  Float arithmetic, documented."""
    if r < 3:
        raise ParameterRangeError("need r >= 3")
    m = n - x - 1.0
    return x + m * m / (2.0 * (r - 2)) - m / 2.0


def second_branch_bound_decreasing(n: int, r: int) -> bool:
    """Strict decrease of ``second_branch_lower_bound`` on a 1/16-step grid
    over [0, n/(r-1)], and over [0, (n+r)/(r-1)] when n >= 3r.

    Preconditions r >= 3, r | n, n >= 2r mirror where the bound is used.
    """
    if r < 3:
        raise ParameterRangeError("need r >= 3")
    if n % r or n < 2 * r:
        raise ParameterRangeError("need r | n and n >= 2r")
    upper = (n + r) / (r - 1) if n >= 3 * r else n / (r - 1)
    steps = int(upper * 16)
    prev = second_branch_lower_bound(n, r, 0.0)
    for t in range(1, steps + 1):
        cur = second_branch_lower_bound(n, r, t / 16.0)
        if not cur < prev:
            return False
        prev = cur
    return True
