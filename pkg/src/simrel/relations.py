"""The four refinement relations and the three routes that compute them.

``altsim_basic`` is the straightforward fixpoint over state pairs and acts
as the reference oracle.  ``altsim_game`` decides the same relation through
the reachability game, ``altsim_iterative`` through simultaneous pruning of
the state-pair relation and a companion relation over successor-set pairs,
without materializing a game graph.  ``fairaltsim`` and ``fairsim`` solve
the 3-priority parity games built in :mod:`simrel.reductions`.

All cross-system operations require a shared observation alphabet and
return a canonical ``SimRelation``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .arena import P2, GameArena, solve_parity3, solve_reachability
from .reductions import (build_altsim_game, build_fairaltsim_game,
                         build_fairsim_game, compute_fairness_region)
from .succ_index import SuccIndex, build_succ_index
from .systems import (Ats, FairAts, FairTs, SimRelation, embed_fair_ts,
                      label_names, relation_from_pairs, shared_alphabet)


# ---------------------------------------------------------------------------
# basic fixpoint (oracle)


def altsim_basic(k: Ats, k2: Ats) -> SimRelation:
    """Maximum alternating simulation by fixpoint deletion over state pairs.

    Starts from all label-matching pairs and deletes a pair whenever the
    left system has an action no right response can cover, until stable.
    The quantifier block is evaluated by direct nested loops with early
    exit; this is the reference oracle, clarity over speed.
    """
    shared_alphabet(k, k2)
    nl, nr = k.n_states, k2.n_states
    lname, rname = label_names(k), label_names(k2)
    cur = [bytearray(1 if lname[w] == rname[w2] else 0 for w2 in range(nr))
           for w in range(nl)]
    prev = [bytearray(b"\x01" * nr) for _ in range(nl)]

    def deletable(w: int, w2: int) -> bool:
        for a in k.enabled1[w]:
            responses_fail = True
            for a2 in k2.enabled1[w2]:
                exists_bad_b2 = False
                for b2 in k2.enabled2[w2]:
                    v2 = k2.delta[w2][a2][b2]
                    if all(not prev[k.delta[w][a][b]][v2] for b in k.enabled2[w]):
                        exists_bad_b2 = True
                        break
                if not exists_bad_b2:
                    responses_fail = False
                    break
            if responses_fail:
                return True
        return False

    while prev != cur:
        prev = [row[:] for row in cur]
        for w in range(nl):
            for w2 in range(nr):
                if prev[w][w2] and deletable(w, w2):
                    cur[w][w2] = 0
    return relation_from_pairs(
        ((w, w2) for w in range(nl) for w2 in range(nr) if cur[w][w2]), nl, nr)


# ---------------------------------------------------------------------------
# game route


def altsim_game(k: Ats, k2: Ats, strict: bool = False) -> SimRelation:
    """Alternating simulation as the player-2 safe region of the pair game."""
    idx, idx2 = build_succ_index(k), build_succ_index(k2)
    game = build_altsim_game(k, k2, idx, idx2, strict=strict)
    _, win2, _, _ = solve_reachability(game.arena)
    nl, nr = k.n_states, k2.n_states
    return relation_from_pairs(
        ((w, w2) for w in range(nl) for w2 in range(nr)
         if game.pair_vertex(w, w2) in win2), nl, nr)


# ---------------------------------------------------------------------------
# relation graphs


@dataclass(frozen=True)
class RelationGraph:
    """Bipartite-ish graph over states and successor-set ids.

    Edges run from a state to each of its successor sets and from a set to
    each of its members; both directions are kept because the pruning
    engine walks predecessors as often as successors.
    """

    n_states: int
    n_sets: int
    state_to_sets: tuple[tuple[int, ...], ...]   # Post of a state: set ids
    set_to_states: tuple[tuple[int, ...], ...]   # Post of a set: its members
    sets_of_state: tuple[tuple[int, ...], ...]   # Pre of a state: sets containing it
    states_to_set: tuple[tuple[int, ...], ...]   # Pre of a set: states mapping to it

    @property
    def n_vertices(self) -> int:
        return self.n_states + self.n_sets

    @property
    def n_edges(self) -> int:
        return (sum(len(x) for x in self.state_to_sets)
                + sum(len(x) for x in self.set_to_states))


def build_relation_graph(k: Ats, idx: SuccIndex) -> RelationGraph:
    if idx.n_states != k.n_states:
        raise ValueError("index does not match its system")
    n, s = k.n_states, idx.count
    state_to_sets = tuple(
        tuple(sorted({idx.h_table[w][a] for a in k.enabled1[w]})) for w in range(n))
    set_to_states = idx.g_lists
    sets_of_state: list[list[int]] = [[] for _ in range(n)]
    states_to_set: list[list[int]] = [[] for _ in range(s)]
    for t in range(s):
        for r in idx.g_lists[t]:
            sets_of_state[r].append(t)
    for w in range(n):
        for t in state_to_sets[w]:
            states_to_set[t].append(w)
    return RelationGraph(n, s, state_to_sets, set_to_states,
                         tuple(tuple(x) for x in sets_of_state),
                         tuple(tuple(sorted(x)) for x in states_to_set))


# ---------------------------------------------------------------------------
# iterative pruning engine


@dataclass
class IterativeRun:
    """Result of one iterative computation plus its instrumentation."""

    relation: SimRelation
    counters: dict[str, int]
    ceilings: dict[str, int]
    data_cells: int
    companion_pairs: frozenset[tuple[int, int]]  # surviving (T', T) entries
    n_sets_left: int
    n_sets_right: int


class InvariantViolation(AssertionError):
    pass


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvariantViolation(message)


def iterative_run(k: Ats, k2: Ats, assert_invariants: bool = False) -> IterativeRun:
    """Simultaneously prune the pair relation and its companion set relation.

    ``sim`` over-approximates the result, ``simS[T'][T]`` the companion
    relation; ``count``/``countS`` track how many witnesses each entry
    still has, and the ``remove`` worklists carry entries whose witness
    count just hit zero.  A zeroed count can never recover (counts only
    decrease), so each element enters each worklist at most once, which the
    byte flags enforce in O(1).

    With ``assert_invariants`` the count/remove characterizations are
    re-derived from scratch at their program points and compared.
    """
    shared_alphabet(k, k2)
    idx, idx2 = build_succ_index(k), build_succ_index(k2)
    gl = build_relation_graph(k, idx)
    gr = build_relation_graph(k2, idx2)
    nl, nr, sl, sr = k.n_states, k2.n_states, idx.count, idx2.count
    lname, rname = label_names(k), label_names(k2)

    sim = [bytearray(1 if lname[w] == rname[w2] else 0 for w2 in range(nr))
           for w in range(nl)]
    simS = [bytearray(b"\x01" * sl) for _ in range(sr)]

    count = [[len(gr.state_to_sets[w2])] * sl for w2 in range(nr)]
    countS = [[sum(sim[r][w2] for r in gl.set_to_states[t]) for w2 in range(nr)]
              for t in range(sl)]

    remove: list[list[int]] = [[] for _ in range(nr)]
    in_remove = [bytearray(sl) for _ in range(nr)]
    removeS: list[list[int]] = [[] for _ in range(sl)]
    in_removeS = [bytearray(nr) for _ in range(sl)]
    remove_total = removeS_total = 0
    for w2 in range(nr):
        for t in range(sl):
            if countS[t][w2] == 0:
                remove[w2].append(t)
                in_remove[w2][t] = 1
                remove_total += 1

    counters = {key: 0 for key in
                ("outer", "a3_s1", "a3_s11", "a3_s111A", "a4_s1", "a4_s11", "a4_s111A")}

    def check_counts() -> None:
        for w2 in range(nr):
            for t in range(sl):
                expect = sum(simS[t2][t] for t2 in gr.state_to_sets[w2])
                _require(count[w2][t] == expect,
                         f"count({w2},{t})={count[w2][t]} expected {expect}")
        for t in range(sl):
            for w2 in range(nr):
                expect = sum(sim[r][w2] for r in gl.set_to_states[t])
                _require(countS[t][w2] == expect,
                         f"countS({t},{w2})={countS[t][w2]} expected {expect}")

    def check_removeS(prev_simS) -> None:
        for t in range(sl):
            prev_pre = {s2 for s2 in range(nr)
                        if any(prev_simS[t2][t] for t2 in gr.state_to_sets[s2])}
            now_pre = {s2 for s2 in range(nr)
                       if any(simS[t2][t] for t2 in gr.state_to_sets[s2])}
            _require(set(removeS[t]) == prev_pre - now_pre,
                     f"removeS({t}) deviates from its characterization")

    def check_remove(prev_sim) -> None:
        for w2 in range(nr):
            prev_pre = {t for t in range(sl)
                        if any(prev_sim[r][w2] for r in gl.set_to_states[t])}
            now_pre = {t for t in range(sl)
                       if any(sim[r][w2] for r in gl.set_to_states[t])}
            _require(set(remove[w2]) == prev_pre - now_pre,
                     f"remove({w2}) deviates from its characterization")

    # The loop guard checks both worklists; the second pruning pass always
    # drains the set-side worklist, so the extra check costs nothing.
    while remove_total or removeS_total:
        counters["outer"] += 1
        if assert_invariants:
            check_counts()
            prev_sim = [row[:] for row in sim]
            prev_simS = [row[:] for row in simS]

        for w2 in range(nr):
            if not remove[w2]:
                continue
            counters["a3_s1"] += 1
            batch = remove[w2]
            remove[w2] = []
            remove_total -= len(batch)
            for t in batch:
                in_remove[w2][t] = 0
            for t2 in gr.sets_of_state[w2]:
                row = simS[t2]
                for t in batch:
                    counters["a3_s11"] += 1
                    if row[t]:
                        row[t] = 0
                        for s2 in gr.states_to_set[t2]:
                            counters["a3_s111A"] += 1
                            count[s2][t] -= 1
                            if count[s2][t] == 0 and not in_removeS[t][s2]:
                                in_removeS[t][s2] = 1
                                removeS[t].append(s2)
                                removeS_total += 1
        if assert_invariants:
            check_removeS(prev_simS)

        for t in range(sl):
            if not removeS[t]:
                continue
            counters["a4_s1"] += 1
            batch = removeS[t]
            removeS[t] = []
            removeS_total -= len(batch)
            for s2 in batch:
                in_removeS[t][s2] = 0
            for w in gl.states_to_set[t]:
                row = sim[w]
                for w2 in batch:
                    counters["a4_s11"] += 1
                    if row[w2]:
                        row[w2] = 0
                        for d in gl.sets_of_state[w]:
                            counters["a4_s111A"] += 1
                            countS[d][w2] -= 1
                            if countS[d][w2] == 0 and not in_remove[w2][d]:
                                in_remove[w2][d] = 1
                                remove[w2].append(d)
                                remove_total += 1
        if assert_invariants:
            check_remove(prev_sim)

    edges_ss_l = sum(len(x) for x in gl.state_to_sets)
    edges_sts_l = sum(len(x) for x in gl.set_to_states)
    edges_ss_r = sum(len(x) for x in gr.state_to_sets)
    edges_sts_r = sum(len(x) for x in gr.set_to_states)
    ceilings = {
        "outer": nl * nr + 1,  # +1: the final iteration may change nothing
        "a3_s1": nr * sl,
        "a3_s11": sl * edges_sts_r,
        "a3_s111A": sl * edges_ss_r,
        "a4_s1": sl * nr,
        "a4_s11": nr * edges_ss_l,
        "a4_s111A": nr * edges_sts_l,
    }
    if assert_invariants:
        for key, value in counters.items():
            _require(value <= ceilings[key],
                     f"loop counter {key}={value} exceeds ceiling {ceilings[key]}")

    def graph_cells(g: RelationGraph) -> int:
        return g.n_vertices + 2 * g.n_edges

    def index_cells(ix: SuccIndex) -> int:
        return ix.n_states * ix.n_actions1 + sum(len(x) for x in ix.g_lists)

    data_cells = (nl * nr + sr * sl + 2 * nr * sl + 2 * sl * nr
                  + graph_cells(gl) + graph_cells(gr)
                  + index_cells(idx) + index_cells(idx2))

    relation = relation_from_pairs(
        ((w, w2) for w in range(nl) for w2 in range(nr) if sim[w][w2]), nl, nr)
    companion = frozenset((t2, t) for t2 in range(sr) for t in range(sl)
                          if simS[t2][t])
    return IterativeRun(relation, counters, ceilings, data_cells, companion, sl, sr)


def altsim_iterative(k: Ats, k2: Ats, assert_invariants: bool = False) -> SimRelation:
    """Maximum alternating simulation via the pruning engine."""
    return iterative_run(k, k2, assert_invariants=assert_invariants).relation


# ---------------------------------------------------------------------------
# fair relations (game-only routes)


def fairaltsim(fk: FairAts, fk2: FairAts, strict: bool = False) -> SimRelation:
    """Maximum fair alternating simulation (weak and strong coincide)."""
    z = compute_fairness_region(fk)
    game = build_fairaltsim_game(fk, fk2, z, strict=strict)
    win2, _, _ = solve_parity3(game.arena, P2)
    return relation_from_pairs(
        (pw for pw, vid in game.pair_ids.items() if vid in win2),
        fk.ats.n_states, fk2.ats.n_states)


def fairsim(ft: FairTs, ft2: FairTs) -> SimRelation:
    """Maximum fair simulation between fair transition systems."""
    z = compute_fairness_region(embed_fair_ts(ft))
    game = build_fairsim_game(ft, ft2, z)
    win2, _, _ = solve_parity3(game.arena, P2)
    return relation_from_pairs(
        (pw for pw, vid in game.pair_ids.items() if vid in win2),
        ft.ts.n_states, ft2.ts.n_states)


def arena_cells(arena: GameArena) -> int:
    """Cell count of a stored arena: owner, payload, and both edge directions."""
    payload = arena.n if (arena.priority is not None or arena.target is not None) else 0
    return 2 * arena.n + payload + 2 * arena.n_edges
