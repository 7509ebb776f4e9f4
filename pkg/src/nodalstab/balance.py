"""Recursive twist balancing: find integer fibral-twist coefficients that
make a bundle class pass every window inequality.

Positions are processed from N-1 down to 1.  Twisting by a*Y_i shifts
the chi sum over G(i) by exactly -r*a while leaving every window bound
and every already-settled higher position untouched, so each step is a
one-dimensional integer search in a rational window of width exactly 1
(width r before dividing by r).  The window therefore contains one or
two integers; ties go to the smaller coefficient, which parks the chi
sum at the upper endpoint.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .curve import Ordering, TreeLikeCurve, prune_ordering
from .errors import IndexOutOfRange, PreconditionViolated
from .stability import Polarization, lambda_check
from .twist import BundleClass, TwistDivisor, euler_char_total, twist


@dataclass(frozen=True)
class BalanceStep:
    """Log entry for one step: the window seen and the coefficient chosen."""

    i: int
    component: int
    value: int               # chi sum over G(i) before this step
    lower: Fraction
    upper: Fraction
    candidates: tuple        # admissible integers, ascending
    chosen: int


@dataclass(frozen=True)
class BalanceResult:
    ordering: Ordering
    twist: TwistDivisor
    balanced: BundleClass
    steps: tuple


@dataclass(frozen=True)
class DistanceEntry:
    i: int
    component: int
    distance: Fraction       # 0 when the value lies inside the window
    value: int
    lower: Fraction
    upper: Fraction


def window_integers(value: int, lower: Fraction, rank: int) -> tuple:
    """Integers a with lower <= value - rank*a <= lower + rank, ascending."""
    hi = Fraction(value - lower, rank)
    lo = hi - 1
    return tuple(a for a in range(math.ceil(lo), math.floor(hi) + 1))


def balance_step(c: TreeLikeCurve, ordering: Ordering, bc: BundleClass,
                 pol: Polarization, i: int):
    """Choose the twist coefficient at order position i and apply it.

    Requires every position above i to pass already; afterwards every
    position from i up passes.  Returns the coefficient and the twisted
    class.
    """
    n = ordering.n
    if not 1 <= i < n:
        raise IndexOutOfRange(f"balance steps run at positions 1..{n - 1}")
    verdicts = lambda_check(c, ordering, bc, pol)
    bad = [v.i for v in verdicts if v.i > i and not v.passes]
    if bad:
        raise PreconditionViolated(
            f"positions {bad} above {i} must pass before balancing position {i}")
    v = verdicts[i - 1]
    candidates = window_integers(v.value, v.lower, bc.rank)
    a = candidates[0]
    y = ordering.perm[i - 1]
    step_twist = TwistDivisor(coeffs={j: (a if j == y else 0) for j in c.ids})
    return a, twist(c, bc, step_twist)


def balance(c: TreeLikeCurve, bc: BundleClass, pol: Polarization) -> BalanceResult:
    """Twist the class into one passing every window inequality.

    Runs exactly N-1 steps in decreasing position order; the last
    position needs no twist.  Total degree and chi are conserved and the
    verdicts at already-processed positions are asserted unchanged after
    every step.
    """
    ordering = prune_ordering(c)
    n = ordering.n
    coeffs = {j: 0 for j in c.ids}
    current = bc
    steps = []
    for i in range(n - 1, 0, -1):
        before = lambda_check(c, ordering, current, pol)
        v = before[i - 1]
        candidates = window_integers(v.value, v.lower, bc.rank)
        a, current = balance_step(c, ordering, current, pol, i)
        coeffs[ordering.perm[i - 1]] = a
        after = lambda_check(c, ordering, current, pol)
        assert all(after[t - 1].passes for t in range(i, n + 1)), \
            "balance step failed to settle its own position"
        assert all((after[t - 1].value, after[t - 1].lower) ==
                   (before[t - 1].value, before[t - 1].lower)
                   for t in range(i + 1, n + 1)), \
            "balance step disturbed a higher position"
        steps.append(BalanceStep(i=i, component=ordering.perm[i - 1], value=v.value,
                                 lower=v.lower, upper=v.upper,
                                 candidates=candidates, chosen=a))
    t = TwistDivisor(coeffs=coeffs)
    replayed = twist(c, bc, t)
    assert replayed == current, "accumulated twist does not replay the steps"
    assert euler_char_total(c, replayed) == euler_char_total(c, bc)
    assert replayed.total_degree == bc.total_degree
    return BalanceResult(ordering=ordering, twist=t, balanced=current, steps=tuple(steps))


def unbalance_report(c: TreeLikeCurve, bc: BundleClass, pol: Polarization) -> list:
    """Distance of each position's chi sum to its window, for diagnostics."""
    ordering = prune_ordering(c)
    out = []
    for v in lambda_check(c, ordering, bc, pol):
        if v.passes:
            dist = Fraction(0)
        else:
            dist = min(abs(v.value - v.lower), abs(v.value - v.upper))
        out.append(DistanceEntry(i=v.i, component=v.component, distance=dist,
                                 value=v.value, lower=v.lower, upper=v.upper))
    return out
