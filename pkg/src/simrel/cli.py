"""Command-line front end.

Subcommands::

    simrel compute KIND LEFT RIGHT [--algo A] [--out F] [flags]
    simrel check KIND LEFT RIGHT [--algo A]
    simrel export-dot KIND LEFT RIGHT --out F [--strict-game]
    simrel gen-random --states N ... --seed S [--out F]
    simrel bench --sizes 2,3 --trials N [--seed S]

KIND is one of altsim, fairaltsim, fairsim, sim; ``sim`` runs the
alternating-simulation engines on TS embeddings.  ``basic``/``iterative``
apply to altsim/sim only, the fair kinds are game-only.  Exit codes:
0 related/success, 1 not-related, 2 error.
"""
from __future__ import annotations

import argparse
import sys
import time

from . import relations
from .generate import RandomSpec, gen_random, random_ats
from .reductions import (build_altsim_game, build_fairaltsim_game,
                         build_fairsim_game, compute_fairness_region,
                         game_to_dot)
from .relations import arena_cells, iterative_run
from .succ_index import build_succ_index
from .systems import (Ats, FairAts, FairTs, SimRelation, Ts, embed_fair_ts,
                      parse_system, serialize_relation, ts_to_ats)

KINDS = ("altsim", "fairaltsim", "fairsim", "sim")
ALGOS = ("basic", "game", "iterative")


class CliError(Exception):
    pass


def _read_system(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_system(fh.read())
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror or exc}") from exc
    except ValueError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _as_ats(system) -> Ats:
    """Plain alternating view; fairness, if declared, is ignored here."""
    if isinstance(system, FairAts):
        system = system.ats
    elif isinstance(system, FairTs):
        system = system.ts
    if isinstance(system, Ts):
        raise CliError("this kind expects an ats file (use kind 'sim' for ts files)")
    return system


def _as_ts_pair(system) -> FairTs:
    if isinstance(system, Ts):
        return FairTs(system, frozenset())
    if isinstance(system, FairTs):
        return system
    raise CliError("this kind expects a ts file")


def _as_fair_ats(system) -> FairAts:
    if isinstance(system, Ats):
        return FairAts(system, frozenset())
    if isinstance(system, FairAts):
        return system
    raise CliError("this kind expects an ats file")


def _compute_relation(kind: str, left, right, algo: str | None,
                      assert_invariants: bool, strict: bool) -> SimRelation:
    if kind in ("altsim", "sim"):
        algo = algo or "iterative"
        if kind == "sim":
            k = ts_to_ats(_as_ts_pair(left).ts)
            k2 = ts_to_ats(_as_ts_pair(right).ts)
        else:
            k, k2 = _as_ats(left), _as_ats(right)
        if algo == "basic":
            return relations.altsim_basic(k, k2)
        if algo == "game":
            return relations.altsim_game(k, k2, strict=strict)
        if algo == "iterative":
            return relations.altsim_iterative(k, k2, assert_invariants=assert_invariants)
        raise CliError(f"unknown algo '{algo}'")
    if algo not in (None, "game"):
        raise CliError(f"kind '{kind}' supports only the game algorithm")
    if kind == "fairaltsim":
        return relations.fairaltsim(_as_fair_ats(left), _as_fair_ats(right), strict=strict)
    if kind == "fairsim":
        return relations.fairsim(_as_ts_pair(left), _as_ts_pair(right))
    raise CliError(f"unknown kind '{kind}'")


def _dump_succ(system, side: str) -> None:
    try:
        k = _as_ats(system)
    except CliError:
        k = ts_to_ats(_as_ts_pair(system).ts)
    idx = build_succ_index(k)
    print(f"succ-{side}:")
    for i, members_list in enumerate(idx.g_lists):
        print(f"{i}: {{{', '.join(str(m) for m in members_list)}}}")


def _state_names(system) -> tuple[str, ...]:
    if isinstance(system, (FairAts, FairTs)):
        system = system.ats if isinstance(system, FairAts) else system.ts
    return system.states


def cmd_compute(args) -> int:
    left = _read_system(args.left)
    right = _read_system(args.right)
    if args.dump_succ:
        _dump_succ(left, "left")
        _dump_succ(right, "right")
    rel = _compute_relation(args.kind, left, right, args.algo,
                            args.assert_invariants, args.strict_game)
    text = serialize_relation(rel)
    text += "# left-names " + " ".join(_state_names(left)) + "\n"
    text += "# right-names " + " ".join(_state_names(right)) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"pairs={len(rel.pairs)} left={rel.left_size} right={rel.right_size}")
    return 0


def cmd_check(args) -> int:
    left = _read_system(args.left)
    right = _read_system(args.right)
    rel = _compute_relation(args.kind, left, right, args.algo,
                            args.assert_invariants, args.strict_game)
    def init_of(system):
        if isinstance(system, FairAts):
            return system.ats.init
        if isinstance(system, FairTs):
            return system.ts.init
        return system.init
    related = (init_of(left), init_of(right)) in rel.as_set()
    print("related" if related else "not-related")
    return 0 if related else 1


def cmd_export_dot(args) -> int:
    left = _read_system(args.left)
    right = _read_system(args.right)
    if args.kind in ("altsim", "sim"):
        if args.kind == "sim":
            k = ts_to_ats(_as_ts_pair(left).ts)
            k2 = ts_to_ats(_as_ts_pair(right).ts)
        else:
            k, k2 = _as_ats(left), _as_ats(right)
        game = build_altsim_game(k, k2, build_succ_index(k), build_succ_index(k2),
                                 strict=args.strict_game)
    elif args.kind == "fairaltsim":
        fk, fk2 = _as_fair_ats(left), _as_fair_ats(right)
        game = build_fairaltsim_game(fk, fk2, compute_fairness_region(fk),
                                     strict=args.strict_game)
    elif args.kind == "fairsim":
        ft, ft2 = _as_ts_pair(left), _as_ts_pair(right)
        game = build_fairsim_game(ft, ft2,
                                  compute_fairness_region(embed_fair_ts(ft)))
    else:
        raise CliError(f"unknown kind '{args.kind}'")
    dot = game_to_dot(game)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(dot)
    print(f"wrote {args.out} vertices={game.arena.n} edges={game.arena.n_edges}")
    return 0


def cmd_gen_random(args) -> int:
    spec = RandomSpec(args.states, args.actions1, args.actions2, args.obs,
                      args.fair_density, args.seed)
    text = gen_random(spec)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    import random as _random

    sizes = [int(s) for s in args.sizes.split(",")]
    header = ["n", "seed", "pairs", "t_basic", "t_game", "t_iter",
              "arena_v", "arena_e", "arena_cells", "iter_cells"]
    header += ["outer", "a3_s1", "a3_s11", "a3_s111A", "a4_s1", "a4_s11",
               "a4_s111A", "ceilings_ok"]
    print("\t".join(header))
    for n in sizes:
        for trial in range(args.trials):
            seed = args.seed * 1_000_003 + n * 1_009 + trial
            rng = _random.Random(seed)
            k = random_ats(rng, n, args.actions1, args.actions2, args.obs)
            k2 = random_ats(rng, n, args.actions1, args.actions2, args.obs)

            t0 = time.perf_counter()
            rel_basic = relations.altsim_basic(k, k2)
            t_basic = time.perf_counter() - t0

            t0 = time.perf_counter()
            idx, idx2 = build_succ_index(k), build_succ_index(k2)
            game = build_altsim_game(k, k2, idx, idx2)
            rel_game = relations.altsim_game(k, k2)
            t_game = time.perf_counter() - t0

            t0 = time.perf_counter()
            run = iterative_run(k, k2)
            t_iter = time.perf_counter() - t0

            if not (rel_basic.pairs == rel_game.pairs == run.relation.pairs):
                print(f"DISAGREEMENT: reproduce with seed={seed} n={n}",
                      file=sys.stderr)
                return 2
            ok = all(run.counters[key] <= run.ceilings[key] for key in run.counters)
            row = [n, seed, len(rel_basic.pairs),
                   f"{t_basic:.6f}", f"{t_game:.6f}", f"{t_iter:.6f}",
                   game.arena.n, game.arena.n_edges, arena_cells(game.arena),
                   run.data_cells]
            row += [run.counters[key] for key in
                    ("outer", "a3_s1", "a3_s11", "a3_s111A", "a4_s1", "a4_s11",
                     "a4_s111A")]
            row.append("yes" if ok else "NO")
            print("\t".join(str(x) for x in row))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simrel", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("kind", choices=KINDS)
        p.add_argument("left")
        p.add_argument("right")
        p.add_argument("--algo", choices=ALGOS, default=None)
        p.add_argument("--assert-invariants", action="store_true")
        p.add_argument("--strict-game", action="store_true",
                       help="materialize every successor-set pair vertex")
        p.add_argument("--dump-succ", action="store_true",
                       help="print the successor-set tables before computing")

    p = sub.add_parser("compute", help="compute a relation and write it out")
    add_common(p)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("check", help="exit 0 iff the initial states are related")
    add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("export-dot", help="write the game graph in DOT form")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--out", required=True)
    p.add_argument("--strict-game", action="store_true")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("gen-random", help="emit a seeded random system file")
    p.add_argument("--states", type=int, required=True)
    p.add_argument("--actions1", type=int, required=True)
    p.add_argument("--actions2", type=int, required=True)
    p.add_argument("--obs", type=int, required=True)
    p.add_argument("--fair-density", type=float, default=0.0)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen_random)

    p = sub.add_parser("bench", help="cross-validate the three routes and time them")
    p.add_argument("--sizes", default="2,3,4")
    p.add_argument("--actions1", type=int, default=2)
    p.add_argument("--actions2", type=int, default=2)
    p.add_argument("--obs", type=int, default=2)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
