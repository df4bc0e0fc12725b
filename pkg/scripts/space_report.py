#!/usr/bin/env python3
"""Compare the iterative route's peak cell count against the game arena size.

The game graph stores one edge per right-side Agent-2 choice at every
successor-set pair, so its size carries a factor the pruning engine never
materializes.  This script samples random instances (right Agent-2
alphabet size >= 3 by default) and tabulates both cell counts.

Usage: python3 scripts/space_report.py [--trials N] [--seed S] [--a2-right K]
"""
import argparse
import random

from simrel import arena_cells, build_altsim_game, build_succ_index, iterative_run
from simrel.generate import random_ats


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=40)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--min-states", type=int, default=3)
    parser.add_argument("--max-states", type=int, default=8)
    parser.add_argument("--a2-right", type=int, default=3)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    print("left_n\tright_n\ta2_right\titer_cells\tarena_cells\titer_smaller")
    wins = 0
    for _ in range(args.trials):
        n_obs = rng.randint(1, 2)
        k = random_ats(rng, rng.randint(args.min_states, args.max_states),
                       rng.randint(2, 3), rng.randint(1, 3), n_obs)
        k2 = random_ats(rng, rng.randint(args.min_states, args.max_states),
                        rng.randint(2, 3), args.a2_right, n_obs)
        run = iterative_run(k, k2)
        game = build_altsim_game(k, k2, build_succ_index(k), build_succ_index(k2))
        cells = arena_cells(game.arena)
        smaller = run.data_cells < cells
        wins += smaller
        print(f"{k.n_states}\t{k2.n_states}\t{args.a2_right}\t"
              f"{run.data_cells}\t{cells}\t{'yes' if smaller else 'no'}")
    print(f"# iterative route smaller on {wins}/{args.trials} instances")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
