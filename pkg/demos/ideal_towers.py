"""Iterating the ideal construction until the numbers leave the universe.

Starting from two tiny chains, each level replaces the poset by its
poset of down-closed sets ordered by containment.  Level sizes are exact
while they fit; past that, a certified antichain at level three fixes a
2^width floor for level four, and the tower keeps count symbolically.
"""

from ramseykit import (
    antichain_witness,
    build_J,
    j4_log2_lower_bound,
    max_antichain,
    tower,
    two_chains,
)


def main():
    t, k = 10, 3
    print(f"levels for t={t}, k={k}:")
    P = two_chains(1, t - k)
    print(f"  level 1: two chains, {P.p} elements")
    for level in (2, 3):
        J = build_J(level, t, k)
        print(f"  level {level}: {J.p} elements, width {max_antichain(J)}")
    J3 = build_J(3, t, k)
    witness = antichain_witness(J3)
    print(f"  level 3 antichain witness: ideals {witness}")
    w = j4_log2_lower_bound(t, k)
    print(f"  level 4 therefore holds at least 2^{w} elements")
    print()

    print("tower growth from that exponent:")
    for height in (1, 2, 3, 4):
        print(f"  height {height}: {tower(height, w)!r}")
    print()

    # the level-two size follows a clean closed form
    print("level-two sizes 2(t-k+1) across a few gaps:")
    for t2 in (8, 12, 16):
        sizes = [build_J(2, t2, k2).p for k2 in range(4, t2)]
        print(f"  t={t2}: {sizes}")


if __name__ == "__main__":
    main()
