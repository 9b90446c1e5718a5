"""Product-dominated sequences, augmentation, and Muirhead comparisons.

The central fact used by the certificate builder is: given two positive
nonincreasing sequences x and y whose prefix products satisfy
y1*...*yj <= x1*...*xj for every j, the sums satisfy sum(x) >= sum(y),
with equality only when the sequences agree entrywise. This module checks
the hypotheses and the conclusion directly in exact arithmetic, exposes
the two mechanical proof steps (augmenting both sequences so their total
products agree, then rescaling so the smallest entry is 1), and provides
an exact integer-exponent Muirhead checker that links multiplicative
prefix domination to additive majorization without logarithms.

A seeded randomized searcher looks for counterexamples to the sum
comparison; it is expected to find none when the hypotheses filter is on,
and to find plenty when the filter is disabled, which is the sanity check
that the hypotheses are doing real work.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    CapExceeded,
    HypothesesViolated,
    InvalidInstance,
    LengthMismatch,
)
from .rationals import ONE, ZERO

# Symmetric sums enumerate all permutations, so the width must stay tiny.
MAX_SYMMETRIC_VALUES = 8


def _as_sorted_positive(name: str, values: Iterable[Fraction]) -> tuple[Fraction, ...]:
    out = tuple(Fraction(v) for v in values)
    for i, v in enumerate(out):
        if v <= 0:
            raise InvalidInstance(f"{name}[{i}] = {v} is not positive")
        if i and out[i - 1] < v:
            raise InvalidInstance(
                f"{name} must be nonincreasing: {name}[{i - 1}] = {out[i - 1]} "
                f"is followed by {name}[{i}] = {v}"
            )
    return out


@dataclass(frozen=True)
class MajorizationInstance:
    """Two positive nonincreasing rational sequences of equal length."""

    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _as_sorted_positive("x", self.x))
        object.__setattr__(self, "y", _as_sorted_positive("y", self.y))
        if len(self.x) != len(self.y):
            raise LengthMismatch(
                f"x has {len(self.x)} entries but y has {len(self.y)}"
            )
        if not self.x:
            raise InvalidInstance("instances must have at least one entry")

    @property
    def n(self) -> int:
        return len(self.x)


@dataclass(frozen=True)
class MuirheadInstance:
    """Exponent vectors (nonincreasing integers) with positive values."""

    alpha: tuple[int, ...]
    alpha_prime: tuple[int, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(int(a) for a in self.alpha))
        object.__setattr__(
            self, "alpha_prime", tuple(int(a) for a in self.alpha_prime)
        )
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        for name, vec in (("alpha", self.alpha), ("alpha_prime", self.alpha_prime)):
            if any(vec[i - 1] < vec[i] for i in range(1, len(vec))):
                raise InvalidInstance(f"{name} must be nonincreasing: {vec}")
        if len(self.alpha) != len(self.alpha_prime):
            raise LengthMismatch(
                f"alpha has {len(self.alpha)} entries but alpha_prime has "
                f"{len(self.alpha_prime)}"
            )
        if len(self.values) != len(self.alpha):
            raise LengthMismatch(
                f"{len(self.alpha)} exponents but {len(self.values)} values"
            )
        for i, v in enumerate(self.values):
            if v <= 0:
                raise InvalidInstance(f"values[{i}] = {v} is not positive")


def check_hypotheses(inst: MajorizationInstance) -> bool:
    """True when every y prefix product is at most the x prefix product."""
    px = ONE
    py = ONE
    for xi, yi in zip(inst.x, inst.y):
        px *= xi
        py *= yi
        if py > px:
            return False
    return True


def sum_dominates(inst: MajorizationInstance) -> tuple[bool, bool]:
    """Return (sum(x) >= sum(y), sum(x) == sum(y)), both exact."""
    sx = sum(inst.x, ZERO)
    sy = sum(inst.y, ZERO)
    return sx >= sy, sx == sy


def augment(inst: MajorizationInstance) -> MajorizationInstance:
    """Append one entry to each side so the total products become equal.

    The appended pair is
        x_new = min(x_n, y_n) * (y1*...*yn) / (x1*...*xn)
        y_new = min(x_n, y_n)
    which keeps both sequences nonincreasing (the product ratio is at
    most 1 under the hypotheses) and makes the full products agree, so
    the extended instance is majorization-ready. Raises
    :class:`HypothesesViolated` when prefix domination does not hold,
    since then x_new could exceed x_n.
    """
    if not check_hypotheses(inst):
        raise HypothesesViolated(
            "prefix products of y must not exceed those of x before augmenting"
        )
    px = ONE
    py = ONE
    for xi, yi in zip(inst.x, inst.y):
        px *= xi
        py *= yi
    tail = min(inst.x[-1], inst.y[-1])
    return MajorizationInstance(inst.x + (tail * py / px,), inst.y + (tail,))


def normalize_scale(inst: MajorizationInstance) -> MajorizationInstance:
    """Rescale both sides by the same factor so the smallest entry is 1.

    Multiplying every entry by one positive rational preserves the
    ordering, the truth value of :func:`check_hypotheses`, the sign of
    sum(x) - sum(y), and equality of total products. Sequences are
    nonincreasing, so the smallest entry is the last of one side.
    """
    scale = 1 / min(inst.x[-1], inst.y[-1])
    return MajorizationInstance(
        tuple(v * scale for v in inst.x),
        tuple(v * scale for v in inst.y),
    )


def prefix_dominates(alpha: Sequence[int], alpha_prime: Sequence[int]) -> bool:
    """Every prefix sum of alpha is at least the matching one of alpha_prime."""
    if len(alpha) != len(alpha_prime):
        raise LengthMismatch(
            f"alpha has {len(alpha)} entries but alpha_prime has {len(alpha_prime)}"
        )
    run = 0
    for a, b in zip(alpha, alpha_prime):
        run += a - b
        if run < 0:
            return False
    return True


def majorizes(alpha: Sequence[int], alpha_prime: Sequence[int]) -> bool:
    """Additive majorization: equal totals plus prefix-sum domination.

    Both vectors are expected nonincreasing; callers hold that invariant
    (see :class:`MuirheadInstance`).
    """
    if len(alpha) != len(alpha_prime):
        raise LengthMismatch(
            f"alpha has {len(alpha)} entries but alpha_prime has {len(alpha_prime)}"
        )
    if sum(alpha) != sum(alpha_prime):
        return False
    return prefix_dominates(alpha, alpha_prime)


def symmetric_sum(alpha: Sequence[int], values: Sequence[Fraction]) -> Fraction:
    """Muirhead symmetric sum: over all permutations s of the indices,
    add the product of values[s(i)] ** alpha[i].

    With the all-zero exponent vector every permutation contributes 1,
    so the result is m factorial. Exponents may be negative; values must
    be nonzero for that to make sense and positive in the intended use.
    """
    if len(alpha) != len(values):
        raise LengthMismatch(
            f"{len(alpha)} exponents but {len(values)} values"
        )
    m = len(values)
    if m > MAX_SYMMETRIC_VALUES:
        raise CapExceeded(
            f"symmetric sums are capped at {MAX_SYMMETRIC_VALUES} values, got {m}"
        )
    vals = tuple(Fraction(v) for v in values)
    total = ZERO
    for perm in itertools.permutations(range(m)):
        prod = ONE
        for i, j in enumerate(perm):
            prod *= vals[j] ** alpha[i]
        total += prod
    return total


@dataclass(frozen=True)
class PropositionCounterexample:
    """A randomly drawn instance violating the sum comparison."""

    trial: int
    instance: MajorizationInstance
    kind: str  # "sum_domination" or "strictness"


def _trial_rng(seed: int, trial: int) -> random.Random:
    # Seeding with a string hashes all of it deterministically, so each
    # trial gets an independent stream regardless of how trials are split
    # across workers or reordered.
    return random.Random(f"{seed}:{trial}")


def random_instance(rng: random.Random, n_max: int, value_bound: int) -> MajorizationInstance:
    """Draw an instance with sorted entries p/q, 1 <= p, q <= value_bound."""
    n = rng.randint(1, n_max)

    def draw() -> tuple[Fraction, ...]:
        entries = [
            Fraction(rng.randint(1, value_bound), rng.randint(1, value_bound))
            for _ in range(n)
        ]
        entries.sort(reverse=True)
        return tuple(entries)

    return MajorizationInstance(draw(), draw())


def brute_force_prop_search(
    n_max: int,
    trials: int,
    value_bound: int,
    seed: int,
    require_hypotheses: bool = True,
) -> Optional[PropositionCounterexample]:
    """Search random instances for a violation of the sum comparison.

    With ``require_hypotheses`` on (the default), instances failing prefix
    domination are skipped and no violation should ever be found. Turning
    the filter off is a diagnostic mode: unconstrained instances violate
    the comparison easily, which confirms the filter is load-bearing.
    Results are a pure function of the arguments; each trial derives its
    own generator from (seed, trial).
    """
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        inst = random_instance(rng, n_max, value_bound)
        if require_hypotheses and not check_hypotheses(inst):
            continue
        dominates, equal = sum_dominates(inst)
        if not dominates:
            return PropositionCounterexample(trial, inst, "sum_domination")
        if equal and inst.x != inst.y:
            return PropositionCounterexample(trial, inst, "strictness")
    return None
