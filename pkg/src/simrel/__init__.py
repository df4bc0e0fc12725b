"""Refinement relations for (alternating) transition systems.

Computes simulation, alternating simulation, fair simulation, and fair
alternating simulation, each through game reductions (reachability and
3-priority parity games) with a brute-force fixpoint and an iterative
pruning engine cross-validating the alternating-simulation routes.
"""
from .arena import (GameArena, Lasso, MemorylessStrategy, P1, P2, attractor,
                    make_arena, parity3_odd_strategy, solve_buchi,
                    solve_parity3, solve_parity_zielonka, solve_reachability,
                    verify_strategy)
from .generate import RandomSpec, gen_random, random_ats, random_system
from .reductions import (AltSimGame, FairGame, build_altsim_game,
                         build_fairaltsim_game, build_fairsim_game,
                         compute_fairness_region, game_to_dot, play_to_runs)
from .relations import (InvariantViolation, IterativeRun, RelationGraph,
                        altsim_basic, altsim_game, altsim_iterative,
                        arena_cells, build_relation_graph, fairaltsim,
                        fairsim, iterative_run)
from .succ_index import SuccIndex, build_succ_index, members, succ_of
from .systems import (Ats, FairAts, FairTs, ParseError, SimRelation, Ts,
                      embed_fair_ts, parse_relation, parse_system,
                      relation_from_pairs, serialize_relation,
                      serialize_system, ts_to_ats, validate)

__all__ = [name for name in dir() if not name.startswith("_")]
