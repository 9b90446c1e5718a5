#!/usr/bin/env python3
"""Walk through the two mechanical reductions behind the tail comparison.

The sum comparison for sequences with dominating prefix products is proved
by massaging an arbitrary instance into a power-of-a-common-base instance:
append one balancing entry so both products agree, rescale so the smallest
entry is 1, and finish with a symmetric-function inequality on the integer
exponents. Each step is shown here on concrete numbers.
"""

from fractions import Fraction

from efrac import (
    MajorizationInstance,
    MuirheadInstance,
    augment,
    check_hypotheses,
    format_rational,
    majorizes,
    normalize_scale,
    sum_dominates,
    symmetric_sum,
)


def show(label, inst):
    xs = ", ".join(format_rational(v) for v in inst.x)
    ys = ", ".join(format_rational(v) for v in inst.y)
    print(f"{label}: x = [{xs}]  y = [{ys}]")


def main():
    print("=== step 0: a tail instance with dominating prefix products ===")
    # reciprocals of (9, 42) against the matching Sylvester tail (7, 43)
    inst = MajorizationInstance(
        x=(Fraction(1, 7), Fraction(1, 43)),
        y=(Fraction(1, 9), Fraction(1, 42)),
    )
    show("input", inst)
    assert check_hypotheses(inst)
    holds, equal = sum_dominates(inst)
    print(f"sum(x) = {format_rational(sum(inst.x))}, "
          f"sum(y) = {format_rational(sum(inst.y))}")
    assert holds and not equal
    print("[OK] hypotheses hold and the sum inequality is strict")
    print()

    print("=== step 1: augment so the full products agree ===")
    aug = augment(inst)
    show("augmented", aug)
    px = aug.x[0] * aug.x[1] * aug.x[2]
    py = aug.y[0] * aug.y[1] * aug.y[2]
    assert px == py
    assert check_hypotheses(aug)
    assert aug.x[2] <= aug.y[2]
    print(f"common product: {format_rational(px)}")
    print("[OK] one appended entry per side, hypotheses preserved")
    print()

    print("=== step 2: rescale so the smallest entry is 1 ===")
    scaled = normalize_scale(aug)
    show("rescaled", scaled)
    assert min(min(scaled.x), min(scaled.y)) == 1
    held_before, _ = sum_dominates(aug)
    held_after, _ = sum_dominates(scaled)
    assert held_before == held_after
    print("[OK] scaling keeps the direction of the sum comparison")
    print()

    print("=== step 3: the symmetric-sum finish on integer exponents ===")
    # once every entry is a power of one base, prefix domination of the
    # products is exactly prefix domination of the exponent vectors
    base = Fraction(3, 2)
    alpha = (4, 1)
    beta = (3, 2)
    assert majorizes(alpha, beta)
    power_inst = MajorizationInstance(
        x=tuple(base ** e for e in alpha),
        y=tuple(base ** e for e in beta),
    )
    assert check_hypotheses(power_inst)
    holds, equal = sum_dominates(power_inst)
    assert holds and not equal
    print(f"base {format_rational(base)}: exponents {alpha} majorize {beta}, "
          "and the power sums compare the same way")

    values = (2, 3)
    mu = MuirheadInstance(alpha=alpha, alpha_prime=beta, values=values)
    s_alpha = symmetric_sum(alpha, values)
    s_beta = symmetric_sum(beta, values)
    print(f"symmetric sums at values {values}: "
          f"{format_rational(s_alpha)} >= {format_rational(s_beta)}")
    assert s_alpha >= s_beta
    assert mu.alpha == alpha
    print("[OK] exponent majorization settles the power-sum comparison")


if __name__ == "__main__":
    main()
