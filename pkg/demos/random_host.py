"""The counting side: independence scaling, packing floors, thresholds.

Three quick experiments that each pin one quantity the constructions
lean on: independence numbers of lifted graphs grow like log n, greedy
triple packings clear the t^2/7 floor with room, and the union-bound
clique threshold tracks log n within a constant band.
"""

import math

from ramseykit import (
    alpha_experiment,
    greedy_steiner_packing,
    union_bound_threshold,
)


def main():
    print("independence numbers of random lifts (30 seeds each):")
    rows = alpha_experiment([16, 32, 64], 30, base_seed=0)
    for n in (16, 32, 64):
        vals = [r.alpha for r in rows if r.n == n]
        mean = sum(vals) / len(vals)
        print(
            f"  n={n:2d}: mean alpha {mean:5.2f} ({mean / math.log2(n):.2f} "
            f"per log2 n), spread {min(vals)}..{max(vals)}"
        )
    print()

    print("greedy triple packings, best of 10 seeds vs the t^2/7 floor:")
    for t in (15, 21, 33):
        best = max(len(greedy_steiner_packing(t, s)) for s in range(10))
        print(f"  t={t:2d}: {best:3d} triples vs floor {t * t / 7:6.1f}")
    print()

    print("union-bound clique threshold:")
    for n in (10**3, 10**4, 10**5, 10**6):
        thr = union_bound_threshold(n)
        print(f"  n={n:>7}: t = {thr:3d} = {thr / math.log2(n):5.2f} log2 n")


if __name__ == "__main__":
    main()
