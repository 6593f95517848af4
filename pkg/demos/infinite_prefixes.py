"""Prefix-verify the infinite-word statements.

Infinite claims cannot be checked whole, but any finite prefix can: the
blockwise self-shuffle of the 48-uniform image, the fixed point that is a
shuffle of its own 17-uniform image with itself, abelian periodicity, and
the Lyndon pair.
"""

from shufflecraft import (
    verify_abelian_periodicity,
    verify_lyndon_example,
    verify_theorem4,
    verify_theorem5,
)

for verdict in (
    verify_theorem4(10_000),
    verify_theorem5(10_000),
    verify_abelian_periodicity(48 * 50, 48),
    verify_lyndon_example(),
):
    state = "holds" if verdict.holds else f"FAILS: {verdict.first_violation}"
    print(f"{verdict.theorem:10s} prefix {verdict.prefix_length:5d}  {state}")
