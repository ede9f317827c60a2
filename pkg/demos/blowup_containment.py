"""Which tight cycles land inside cliques once fibers are allowed.

A per-edge-injective homomorphism into G is the same thing as an exact
copy inside a blowup of G.  Against the 3-uniform clique on four
vertices, every short tight cycle fits except the five-cycle.
"""

from ramseykit import (
    blowup,
    complete,
    embeds_in_blowup,
    exists_homomorphism,
    tight_cycle,
    validate_homomorphism,
)


def main():
    K4 = complete(3, 4)
    print("tight s-cycle -> clique on 4, per-edge injective:")
    for s in range(4, 13):
        phi = exists_homomorphism(tight_cycle(3, s), K4)
        if phi is None:
            print(f"  s={s:2d}: none")
        else:
            assert validate_homomorphism(tight_cycle(3, s), K4, phi)
            print(f"  s={s:2d}: {phi}")
    print()

    got = embeds_in_blowup(tight_cycle(3, 6), K4)
    p, phi = got
    print(f"six-cycle sits in the {p}-blowup of the clique via {phi}")

    B = blowup(K4, 2)
    print(f"that blowup has {B.n} vertices and {len(B.edges)} edges")
    inside = exists_homomorphism(tight_cycle(3, 6), B)
    print(f"direct check against the blowup itself: {inside}")


if __name__ == "__main__":
    main()
