"""Greedy underapproximation and exhaustive optimality search.

The enumerator walks nondecreasing denominator tuples depth first. At a
node with prefix sum s, m open positions, and incumbent threshold t:

* validity forces the next term b to satisfy 1/b < target - s, so
  b >= floor(1/(target - s)) + 1 (the + 1 is exact even when the
  reciprocal gap is an integer, because the comparison is strict);
* every remaining term is at least b, so the completed total is at most
  s + m/b; any b > m/(t - s) therefore cannot reach the threshold and is
  discarded. The floor keeps the boundary case where all remaining terms
  are equal and the total lands exactly on the threshold.

Ties with the incumbent are collected, never discarded, so the search
reports the full optimum set. Worker processes split the tree at a fixed
depth and explore their subtrees against the seed threshold with local
tightening only; the explored node set is therefore a pure function of
the problem, and reports are byte-identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import DepthCapExceeded, VerificationFailed
from .rationals import (
    ONE,
    ZERO,
    DenominatorTuple,
    format_rational,
    sum_reciprocals,
    validate_tuple,
)
from .sylvester import sylvester

DEFAULT_DEPTH_CAP = 8
DEFAULT_SPLIT_DEPTH = 2


@dataclass(frozen=True)
class SearchProblem:
    k: int
    target: Fraction
    incumbent_threshold: Fraction


@dataclass(frozen=True)
class OptimalityReport:
    problem: SearchProblem
    optima: tuple[DenominatorTuple, ...]
    optimum_sum: Optional[Fraction]
    nodes_explored: int
    matches_sylvester: bool


def greedy_underapprox(target: Union[Fraction, int], k: int) -> DenominatorTuple:
    """Take the largest unit fraction below the remaining gap, k times.

    The picks are strictly increasing, so the result is a valid tuple and
    its sum stays strictly below the target.
    """
    target = Fraction(target)
    if not 0 < target <= 1:
        raise ValueError(f"target must be in (0, 1], got {target}")
    if k < 0:
        raise ValueError(f"term count must be nonnegative, got {k}")
    remaining = target
    terms = []
    for _ in range(k):
        b = remaining.denominator // remaining.numerator + 1
        terms.append(b)
        remaining -= Fraction(1, b)
    return DenominatorTuple(tuple(terms))


def _greedy_completion_sum(
    target: Fraction, s: Fraction, prev: int, m: int
) -> Fraction:
    """Sum of the greedy completion of a prefix, respecting nondecreasingness."""
    total = s
    b = prev
    for _ in range(m):
        gap = target - total
        b = max(b, gap.denominator // gap.numerator + 1)
        total += Fraction(1, b)
    return total


def _subtree_search(
    k: int,
    target: Fraction,
    threshold: Fraction,
    prefix: tuple[int, ...],
    prefix_sum: Fraction,
) -> tuple[Fraction, list[tuple[int, ...]], int]:
    """Explore all completions of one prefix with local tightening.

    Returns (final local best, tuples attaining it inclusively of the
    starting threshold, nodes explored). Pure function of its arguments.
    """
    best = threshold
    cands: list[tuple[int, ...]] = []
    nodes = 0

    def rec(pref: tuple[int, ...], s: Fraction) -> None:
        nonlocal best, cands, nodes
        m = k - len(pref)
        prev = pref[-1] if pref else 2
        gap = target - s
        lo = max(prev, gap.denominator // gap.numerator + 1)
        if best <= s:
            # Only reachable off the unit target with a weak seed: every
            # completion would beat the incumbent, so reseed with this
            # prefix's greedy completion to keep the candidate range finite.
            best = _greedy_completion_sum(target, s, prev, m)
            cands = []
        room = best - s
        hi = (m * room.denominator) // room.numerator
        if m == 1:
            # Totals fall as b grows, so the smallest admissible term is
            # the only candidate that can match or beat the incumbent.
            if lo <= hi:
                nodes += 1
                total = s + Fraction(1, lo)
                if total > best:
                    best = total
                    cands = [pref + (lo,)]
                else:  # total == best by the bound derivation
                    cands.append(pref + (lo,))
            return
        b = lo
        while b <= hi:
            nodes += 1
            rec(pref + (b,), s + Fraction(1, b))
            b += 1
            room = best - s
            hi = (m * room.denominator) // room.numerator
    rec(prefix, prefix_sum)
    return best, cands, nodes


def _subtree_job(
    args: tuple[int, Fraction, Fraction, tuple[int, ...], Fraction]
) -> tuple[Fraction, list[tuple[int, ...]], int]:
    return _subtree_search(*args)


def _frontier(
    k: int, target: Fraction, threshold: Fraction, depth: int
) -> tuple[list[tuple[tuple[int, ...], Fraction]], Fraction, int]:
    """Enumerate all admissible prefixes of the split depth, in order."""
    out: list[tuple[tuple[int, ...], Fraction]] = []
    nodes = 0

    def rec(pref: tuple[int, ...], s: Fraction) -> None:
        nonlocal nodes, threshold
        if len(pref) == depth:
            out.append((pref, s))
            return
        m = k - len(pref)
        prev = pref[-1] if pref else 2
        gap = target - s
        lo = max(prev, gap.denominator // gap.numerator + 1)
        if threshold <= s:
            threshold = _greedy_completion_sum(target, s, prev, m)
        room = threshold - s
        hi = (m * room.denominator) // room.numerator
        b = lo
        while b <= hi:
            nodes += 1
            rec(pref + (b,), s + Fraction(1, b))
            b += 1
            room = threshold - s
            hi = (m * room.denominator) // room.numerator

    rec((), ZERO)
    return out, threshold, nodes


def best_tuples(
    k: int,
    target: Union[Fraction, int] = ONE,
    *,
    incumbent_threshold: Optional[Fraction] = None,
    workers: int = 1,
    depth_cap: int = DEFAULT_DEPTH_CAP,
    split_depth: int = DEFAULT_SPLIT_DEPTH,
) -> OptimalityReport:
    """Enumerate every k-term tuple whose sum attains the maximum below target.

    Seeds the incumbent with the greedy tuple unless a threshold is given.
    The optimum set is collected inclusively (sums equal to the threshold
    count) and returned in lexicographic order.
    """
    target = Fraction(target)
    if not 0 < target <= 1:
        raise ValueError(f"target must be in (0, 1], got {target}")
    if k < 0:
        raise ValueError(f"term count must be nonnegative, got {k}")
    if k > depth_cap:
        raise DepthCapExceeded(
            f"k = {k} exceeds the exhaustive-search depth cap {depth_cap}"
        )
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")

    if incumbent_threshold is None:
        threshold = sum_reciprocals(greedy_underapprox(target, k))
    else:
        threshold = Fraction(incumbent_threshold)
    if not ZERO <= threshold < target:
        raise ValueError(
            f"incumbent threshold {format_rational(threshold)} must lie in "
            f"[0, {format_rational(target)})"
        )
    problem = SearchProblem(k, target, threshold)

    if k == 0:
        optima = (DenominatorTuple(()),) if threshold == ZERO else ()
        return OptimalityReport(
            problem,
            optima,
            ZERO if optima else None,
            0,
            bool(optima) and target == ONE,
        )

    depth = max(0, min(split_depth, k - 1))
    frontier, threshold, nodes = _frontier(k, target, threshold, depth)
    jobs = [(k, target, threshold, pref, s) for pref, s in frontier]
    if workers == 1 or len(jobs) <= 1:
        results = [_subtree_job(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_subtree_job, jobs))

    all_cands: list[tuple[Fraction, tuple[int, ...]]] = []
    for local_best, local_cands, local_nodes in results:
        nodes += local_nodes
        all_cands.extend((local_best, cand) for cand in local_cands)

    if not all_cands:
        return OptimalityReport(problem, (), None, nodes, False)

    optimum = max(value for value, _ in all_cands)
    optima_terms = sorted(cand for value, cand in all_cands if value == optimum)
    for cand in optima_terms:
        tup = validate_tuple(cand, target)
        if sum_reciprocals(tup) != optimum:
            raise VerificationFailed(
                f"reported optimum {format_rational(optimum)} is not the sum "
                f"of {tup}"
            )
    optima = tuple(DenominatorTuple(cand) for cand in optima_terms)
    matches = target == ONE and optima_terms == [sylvester(k).terms]
    return OptimalityReport(problem, optima, optimum, nodes, matches)


def verify_theorem(
    k: int,
    *,
    workers: int = 1,
    depth_cap: int = DEFAULT_DEPTH_CAP,
) -> OptimalityReport:
    """Exhaustively confirm the k-term optimum is the Sylvester prefix.

    Seeds the search with the Sylvester sum itself (which the shortfall
    identity pins at 1 - 1/(running product)) and demands that the optimum
    set is exactly the Sylvester prefix at exactly that sum.
    """
    prefix = sylvester(k)
    threshold = ONE - Fraction(1, prefix.running_product)
    report = best_tuples(
        k,
        ONE,
        incumbent_threshold=threshold,
        workers=workers,
        depth_cap=depth_cap,
    )
    if report.optimum_sum != threshold:
        raise VerificationFailed(
            f"optimum sum {report.optimum_sum} differs from the Sylvester "
            f"sum {format_rational(threshold)} at k = {k}"
        )
    if not report.matches_sylvester:
        found = ", ".join(str(t) for t in report.optima)
        raise VerificationFailed(
            f"optimum set at k = {k} is not the Sylvester prefix: {found}"
        )
    return report
