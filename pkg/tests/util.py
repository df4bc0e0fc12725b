"""Shared generators, oracles, and bound formulas for the test suite."""
from __future__ import annotations

import itertools
import random

from simrel import P1, P2, make_arena
from simrel.generate import random_ats, random_fair_set
from simrel.systems import Ats, FairAts, FairTs, Ts


def random_shared_pair(rng: random.Random, max_states=5, max_a1=3, max_a2=3,
                       max_obs=3) -> tuple[Ats, Ats]:
    """Two random ATSs over one observation alphabet."""
    n_obs = rng.randint(1, max_obs)
    k = random_ats(rng, rng.randint(1, max_states), rng.randint(1, max_a1),
                   rng.randint(1, max_a2), n_obs)
    k2 = random_ats(rng, rng.randint(1, max_states), rng.randint(1, max_a1),
                    rng.randint(1, max_a2), n_obs)
    return k, k2


def random_ts(rng: random.Random, n_states: int, n_obs: int, max_deg=3) -> Ts:
    succ = tuple(
        tuple(sorted({rng.randrange(n_states) for _ in range(rng.randint(1, max_deg))}))
        for _ in range(n_states))
    return Ts(tuple(f"o{i}" for i in range(n_obs)),
              tuple(f"s{i}" for i in range(n_states)), 0,
              tuple(rng.randrange(n_obs) for _ in range(n_states)), succ)


def random_fair_ts_pair(rng: random.Random, max_states=5, max_obs=3,
                        density=0.4) -> tuple[FairTs, FairTs]:
    n_obs = rng.randint(1, max_obs)
    t1 = random_ts(rng, rng.randint(1, max_states), n_obs)
    t2 = random_ts(rng, rng.randint(1, max_states), n_obs)
    return (FairTs(t1, random_fair_set(rng, t1.n_states, density)),
            FairTs(t2, random_fair_set(rng, t2.n_states, density)))


def random_fair_pair(rng: random.Random, max_states=5, max_a1=3, max_a2=3,
                     max_obs=3, density=0.4) -> tuple[FairAts, FairAts]:
    k, k2 = random_shared_pair(rng, max_states, max_a1, max_a2, max_obs)
    return (FairAts(k, random_fair_set(rng, k.n_states, density)),
            FairAts(k2, random_fair_set(rng, k2.n_states, density)))


def random_arena(rng: random.Random, max_n=40, n_priorities=3, max_deg=3):
    n = rng.randint(1, max_n)
    owner = [rng.choice((P1, P2)) for _ in range(n)]
    out = [[rng.randrange(n) for _ in range(rng.randint(1, min(max_deg, n)))]
           for _ in range(n)]
    prio = [rng.randrange(n_priorities) for _ in range(n)]
    return make_arena(owner, out, priority=prio)


def label_matching_pairs(k: Ats, k2: Ats) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(
        (w, w2) for w in range(k.n_states) for w2 in range(k2.n_states)
        if k.obs[k.label[w]] == k2.obs[k2.label[w2]]))


# ---------------------------------------------------------------------------
# oracles


def succ_sets_oracle(k: Ats) -> dict[tuple[int, int], frozenset[int]]:
    """Successor sets by direct enumeration of Agent-2 choices."""
    return {(w, a): frozenset(k.delta[w][a][b] for b in k.enabled2[w])
            for w in range(k.n_states) for a in k.enabled1[w]}


def canonical_ids_oracle(k: Ats) -> dict[frozenset[int], int]:
    """Distinct successor sets numbered by characteristic-vector order."""
    distinct = set(succ_sets_oracle(k).values())
    def key(s: frozenset[int]) -> tuple[int, ...]:
        return tuple(1 if i in s else 0 for i in range(k.n_states))
    return {s: i for i, s in enumerate(sorted(distinct, key=key))}


def attractor_oracle(g, player, target) -> frozenset[int]:
    """Naive fixpoint: add vertices whose owner can (or must) step inside."""
    cur = set(target)
    while True:
        nxt = set(cur)
        for v in range(g.n):
            if v in cur:
                continue
            succ_in = [u for u in g.out[v] if u in cur]
            if g.owner[v] == player and succ_in:
                nxt.add(v)
            elif g.owner[v] != player and len(succ_in) == len(g.out[v]):
                nxt.add(v)
        if nxt == cur:
            return frozenset(cur)
        cur = nxt


def companion_oracle(k: Ats, k2: Ats, relation) -> set[tuple[int, int]]:
    """Maximal companion relation over (right set, left set) id pairs.

    Built from a known-good pair relation: (Succ(w',a'), Succ(w,a)) is in
    the companion whenever every Agent-2 choice on the right has a matching
    choice on the left.
    """
    from simrel import build_succ_index
    idx, idx2 = build_succ_index(k), build_succ_index(k2)
    rel = set(relation)
    out = set()
    for (w, w2) in rel:
        for a in k.enabled1[w]:
            for a2 in k2.enabled1[w2]:
                if all(any((k.delta[w][a][b], k2.delta[w2][a2][b2]) in rel
                           for b in k.enabled2[w])
                       for b2 in k2.enabled2[w2]):
                    out.add((idx2.h_table[w2][a2], idx.h_table[w][a]))
    return out


def walk_lasso(arena, next_of, start) -> tuple[list[int], list[int]]:
    """Stem and cycle of the unique play from ``start`` under ``next_of``."""
    seen = {}
    seq = []
    v = start
    while v not in seen:
        seen[v] = len(seq)
        seq.append(v)
        v = next_of(v)
    i = seen[v]
    return seq[:i], seq[i:]


def combined_strategy(rng, arena, *strategies):
    """Total successor function from partial strategies plus random filling."""
    choice = {}
    for strat in strategies:
        for v, u in strat.choice.items():
            choice.setdefault(v, u)
    for v in range(arena.n):
        if v not in choice:
            choice[v] = rng.choice(arena.out[v])
    return lambda v: choice[v]


def lasso_checks(game, rng, n_strategy_pairs=3) -> int:
    """Verify the run-correspondence implications on sampled lassos.

    For every sampled memoryless strategy pair and every pair vertex: if
    the lasso cycle avoids both sinks, an even minimum priority implies a
    fair left cycle is matched by a fair right cycle, and an odd minimum
    priority implies the left cycle is fair while the right one is not.
    Returns the number of lassos checked.
    """
    from simrel import play_to_runs, solve_parity3
    from simrel.arena import P2
    from simrel.reductions import FROWN, WIN_SINK

    arena = game.arena
    fair_l, fair_r = game.left.fair, game.right.fair
    _, _, strat2 = solve_parity3(arena, P2)
    samples = [combined_strategy(rng, arena, strat2)]
    for _ in range(n_strategy_pairs - 1):
        samples.append(combined_strategy(rng, arena))
    checked = 0
    for next_of in samples:
        for vid in game.pair_ids.values():
            stem, cycle = walk_lasso(arena, next_of, vid)
            cyc_entries = [game.decode[v] for v in cycle]
            if any(e in (FROWN, WIN_SINK) for e in cyc_entries):
                continue
            min_prio = min(arena.priority[v] for v in cycle)
            left_inf = {e[1] for e in cyc_entries if e[0] == "pair"}
            right_inf = {e[2] for e in cyc_entries if e[0] == "pair"}
            left, right, reached_frown = play_to_runs(game, stem + cycle)
            assert not reached_frown
            assert len(left) == len(right)
            if min_prio % 2 == 0:
                if left_inf & fair_l:
                    assert right_inf & fair_r, "fair left cycle must be matched fairly"
            else:
                assert left_inf & fair_l and not (right_inf & fair_r)
            checked += 1
    return checked


# ---------------------------------------------------------------------------
# closed-form size bounds (summation forms)


def altsim_game_bounds(k, k2, idx, idx2) -> tuple[int, int]:
    nl, nr, sl = k.n_states, k2.n_states, idx.count
    v_bound = nl * nr + idx.count * idx2.count + 2 * sl * nr
    e1 = nr * sum(len(k.enabled1[w]) for w in range(nl))
    e2 = sl * sum(len(k2.enabled1[w]) for w in range(nr))
    e3 = sl * sum(len(t) for t in idx2.g_lists)
    e4 = nr * sum(len(t) for t in idx.g_lists)
    return v_bound, e1 + e2 + e3 + e4


def fairaltsim_game_bounds(fk, fk2, idx, idx2) -> tuple[int, int]:
    v_bound, e_bound = altsim_game_bounds(fk.ats, fk2.ats, idx, idx2)
    # two absorbing sinks; each $-vertex may add one frown edge; two self-loops
    return v_bound + 2, e_bound + idx.count * fk2.ats.n_states + 2


def fairsim_game_bounds(ft, ft2) -> tuple[int, int]:
    nl, nr = ft.ts.n_states, ft2.ts.n_states
    rl = ft.ts.n_edges
    rr = ft2.ts.n_edges
    v_bound = 2 * nl * nr + 2
    e_bound = 2 + 2 * nl * nr + nr * rl + nl * rr
    return v_bound, e_bound


# ---------------------------------------------------------------------------
# exhaustive enumeration of 2-state systems (2 actions, 2 observations)


def enum_two_state_systems() -> list[Ats]:
    subsets = ((0,), (1,), (0, 1))
    per_state = []
    for lab in range(2):
        for p1 in subsets:
            for p2 in subsets:
                for vals in itertools.product(range(2), repeat=len(p1) * len(p2)):
                    delta = [[-1, -1], [-1, -1]]
                    it = iter(vals)
                    for a in p1:
                        for b in p2:
                            delta[a][b] = next(it)
                    per_state.append((lab, p1, p2, tuple(tuple(r) for r in delta)))
    systems = []
    for s0 in per_state:
        for s1 in per_state:
            systems.append(Ats(("p", "q"), ("0", "1"), 0, ("a0", "a1"),
                               ("b0", "b1"), (s0[1], s1[1]), (s0[2], s1[2]),
                               (s0[0], s1[0]), (s0[3], s1[3])))
    return systems
