#!/usr/bin/env python3
"""Build optimality certificates for a few tuples and re-check them.

Every nondecreasing tuple of denominators (all at least 2) whose
reciprocals sum to less than 1 obeys an exact bound: the sum is at most
that of the Sylvester prefix 2, 3, 7, 43, ... of the same length, with
equality only for the prefix itself. The certificate object records the
proof for one tuple; the independent validator re-derives every claim.
"""

from dataclasses import replace

from efrac import (
    build_certificate,
    format_rational,
    sum_reciprocals,
    sylvester,
    validate_certificate,
)
from efrac.certificates import Empty, ProductDeficit, Split


def describe(cert, indent=0):
    pad = "  " * indent
    node = cert.node
    terms = ",".join(str(t) for t in cert.terms) or "(empty)"
    if isinstance(node, Empty):
        print(f"{pad}{terms}: base case, both sums are 0")
    elif isinstance(node, ProductDeficit):
        print(
            f"{pad}{terms}: product {node.b_product} < {node.a_product}, "
            "so the sum is strictly short"
        )
    elif isinstance(node, Split):
        print(
            f"{pad}{terms}: split at position {node.ell}, chain {node.chain}, "
            f"tail {'equal' if node.tail_equality else 'strictly below'}"
        )
        describe(node.head, indent + 1)


def main():
    for terms in ((2, 3, 7, 43), (2, 3, 9, 42), (2, 3, 11, 14), (3, 3, 4)):
        print(f"=== {','.join(map(str, terms))} ===")
        total = sum_reciprocals(terms)
        bound = sum_reciprocals(sylvester(len(terms)).terms)
        print(f"sum {format_rational(total)} vs bound {format_rational(bound)}")

        cert = build_certificate(terms)
        describe(cert)
        result = validate_certificate(cert)
        assert result.ok, result.reason
        print(f"[OK] validator agrees, equality={cert.is_equality}")
        print()

    print("=== tampering is caught ===")
    cert = build_certificate((2, 3, 9, 42))
    lowered = replace(cert, node=replace(cert.node, ell=2))
    verdict = validate_certificate(lowered)
    assert not verdict.ok
    print(f"[OK] lowered split index rejected: {verdict.reason}")

    wrong_pair = replace(cert, node=replace(cert.node, chain=((9, 7), (378, 300))))
    verdict = validate_certificate(wrong_pair)
    assert not verdict.ok
    print(f"[OK] doctored chain rejected: {verdict.reason}")


if __name__ == "__main__":
    main()
