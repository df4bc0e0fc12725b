"""Game graphs deciding the refinement relations.

Three constructions over a left system K and a right system K':

- the alternating-simulation game: a reachability game whose player-2 safe
  region at state-pair vertices is the maximum alternating simulation;
- the fair-alternating-simulation game: a 3-priority parity game over
  label-matching pairs, successor-set pairs, and two absorbing sinks;
- the fair-simulation game: the specialized (and much smaller) variant for
  plain transition systems.

Vertex payloads are decoded through per-vertex tuples:
``("pair", w, w')``, ``("hash", T, w')``, ``("sets", T, T')``,
``("dollar", T, r')``, ``("tsdollar", w, w')``, ``("frown",)``,
``("win",)``.  ``frown`` is the absorbing sink entered when no
label-matching successor exists (bad for the simulating player); ``win``
is an absorbing priority-2 sink that makes pairs whose left state cannot
ensure fairness trivially winning for player 2.

All builders emit edges via the successor-set index tables, so build time
is linear in the output size plus the index construction.
"""
from __future__ import annotations

from dataclasses import dataclass

from .arena import P1, P2, GameArena, make_arena, solve_buchi
from .succ_index import SuccIndex, build_succ_index
from .systems import Ats, FairAts, FairTs, label_names, shared_alphabet, ts_to_ats

FROWN = ("frown",)
WIN_SINK = ("win",)


@dataclass(frozen=True)
class AltSimGame:
    arena: GameArena          # reachability payload: target = label-mismatch pairs
    decode: tuple[tuple, ...]
    pair_base: int            # pair vertex id = pair_base + w * n_right + w'
    left: Ats
    right: Ats
    idx_left: SuccIndex
    idx_right: SuccIndex
    rule_counts: dict[str, int]

    def pair_vertex(self, w: int, w2: int) -> int:
        return self.pair_base + w * self.right.n_states + w2


@dataclass(frozen=True)
class FairGame:
    arena: GameArena          # priority payload
    decode: tuple[tuple, ...]
    pair_ids: dict[tuple[int, int], int]
    left: FairAts
    right: FairAts
    idx_left: SuccIndex | None
    idx_right: SuccIndex | None
    fair_region: frozenset[int]
    rule_counts: dict[str, int]


def build_altsim_game(k: Ats, k2: Ats, idx: SuccIndex, idx2: SuccIndex,
                      strict: bool = False) -> AltSimGame:
    """Reachability game for alternating simulation.

    Player-1 vertices: all state pairs and successor-set pairs; player-2
    vertices: (set, right-state) tuples tagged # and $.  With
    ``strict=False`` only set pairs reachable through some response edge
    are materialized (they are the only ones that can influence pair
    verdicts); ``strict=True`` materializes the full product.
    """
    shared_alphabet(k, k2)
    if idx.n_states != k.n_states or idx2.n_states != k2.n_states:
        raise ValueError("index does not match its system")
    nl, nr = k.n_states, k2.n_states
    sl, sr = idx.count, idx2.count
    lname, rname = label_names(k), label_names(k2)

    hash_base = nl * nr
    dollar_base = hash_base + sl * nr
    sets_base = dollar_base + sl * nr

    decode: list[tuple] = []
    decode.extend(("pair", w, w2) for w in range(nl) for w2 in range(nr))
    decode.extend(("hash", t, w2) for t in range(sl) for w2 in range(nr))
    decode.extend(("dollar", t, r2) for t in range(sl) for r2 in range(nr))
    out: list[list[int]] = [[] for _ in range(sets_base)]
    owner = [P1] * (nl * nr) + [P2] * (2 * sl * nr)

    sets_id: dict[tuple[int, int], int] = {}

    def sets_vertex(t: int, t2: int) -> int:
        vid = sets_id.get((t, t2))
        if vid is None:
            vid = len(decode)
            sets_id[(t, t2)] = vid
            decode.append(("sets", t, t2))
            out.append([])
            owner.append(P1)
        return vid

    if strict:
        for t in range(sl):
            for t2 in range(sr):
                sets_vertex(t, t2)

    counts = {"e1": 0, "e2": 0, "e3": 0, "e4": 0}
    for w in range(nl):
        for w2 in range(nr):
            src = w * nr + w2
            for a in k.enabled1[w]:
                out[src].append(hash_base + idx.h_table[w][a] * nr + w2)
                counts["e1"] += 1
    for t in range(sl):
        for w2 in range(nr):
            src = hash_base + t * nr + w2
            for a2 in k2.enabled1[w2]:
                out[src].append(sets_vertex(t, idx2.h_table[w2][a2]))
                counts["e2"] += 1
    for (t, t2), vid in sets_id.items():
        for r2 in idx2.g_lists[t2]:
            out[vid].append(dollar_base + t * nr + r2)
            counts["e3"] += 1
    for t in range(sl):
        for r2 in range(nr):
            src = dollar_base + t * nr + r2
            for r in idx.g_lists[t]:
                out[src].append(r * nr + r2)
                counts["e4"] += 1

    target = frozenset(w * nr + w2 for w in range(nl) for w2 in range(nr)
                       if lname[w] != rname[w2])
    arena = make_arena(owner, out, target=target)
    return AltSimGame(arena, tuple(decode), 0, k, k2, idx, idx2, counts)


def fairness_move_arena(k: Ats) -> GameArena:
    """Move graph for the fairness preprocessing game.

    Agent 1 owns the states ``0..n-1`` and picks an action; Agent 2 owns
    one vertex per enabled (state, action) move and picks the successor.
    """
    n = k.n_states
    move_id: dict[tuple[int, int], int] = {}
    for w in range(n):
        for a in k.enabled1[w]:
            move_id[(w, a)] = n + len(move_id)
    owner = [P1] * n + [P2] * len(move_id)
    out: list[list[int]] = [[] for _ in range(len(owner))]
    for (w, a), vid in move_id.items():
        out[w].append(vid)
        out[vid] = sorted({k.delta[w][a][b] for b in k.enabled2[w]})
    return make_arena(owner, out)


def compute_fairness_region(fk: FairAts) -> frozenset[int]:
    """States from which Agent 1 has a strategy forcing a fair run.

    Solved as a Büchi game on the move graph; quadratic preprocessing.
    """
    n = fk.ats.n_states
    winning, _ = solve_buchi(fairness_move_arena(fk.ats), P1, fk.fair)
    return frozenset(v for v in winning if v < n)


def _pair_priority(w: int, w2: int, fair_l: frozenset[int], fair_r: frozenset[int]) -> int:
    if w2 in fair_r:
        return 0
    if w in fair_l:
        return 1
    return 2


def build_fairaltsim_game(fk: FairAts, fk2: FairAts, z: frozenset[int],
                          strict: bool = False) -> FairGame:
    """3-priority parity game for fair alternating simulation.

    ``z`` must be ``compute_fairness_region(fk)``.  Pair vertices exist for
    label-matching pairs only; a pair whose left state lies outside ``z``
    is rewired to the player-2-winning sink, every other pair plays the
    action/response rounds.  Priorities: 0 on pairs whose right state is
    fair, 1 on pairs with a fair left and unfair right state and on the
    frown sink, 2 elsewhere.
    """
    k, k2 = fk.ats, fk2.ats
    shared_alphabet(k, k2)
    if any(not 0 <= w < k.n_states for w in z):
        raise ValueError("fairness region inconsistent with the left system")
    idx, idx2 = build_succ_index(k), build_succ_index(k2)
    nl, nr = k.n_states, k2.n_states
    sl = idx.count
    lname, rname = label_names(k), label_names(k2)

    decode: list[tuple] = []
    pair_ids: dict[tuple[int, int], int] = {}
    for w in range(nl):
        for w2 in range(nr):
            if lname[w] == rname[w2]:
                pair_ids[(w, w2)] = len(decode)
                decode.append(("pair", w, w2))
    n_pairs = len(decode)
    hash_base = n_pairs
    decode.extend(("hash", t, w2) for t in range(sl) for w2 in range(nr))
    dollar_base = hash_base + sl * nr
    decode.extend(("dollar", t, r2) for t in range(sl) for r2 in range(nr))
    frown = dollar_base + sl * nr
    win = frown + 1
    decode.append(FROWN)
    decode.append(WIN_SINK)

    owner = [P1] * n_pairs + [P2] * (2 * sl * nr) + [P1, P1]
    out: list[list[int]] = [[] for _ in range(win + 1)]
    priority = [2] * (win + 1)
    for (w, w2), vid in pair_ids.items():
        priority[vid] = _pair_priority(w, w2, fk.fair, fk2.fair)
    priority[frown] = 1

    sets_id: dict[tuple[int, int], int] = {}

    def sets_vertex(t: int, t2: int) -> int:
        vid = sets_id.get((t, t2))
        if vid is None:
            vid = len(decode)
            sets_id[(t, t2)] = vid
            decode.append(("sets", t, t2))
            out.append([])
            owner.append(P1)
            priority.append(2)
        return vid

    if strict:
        for t in range(sl):
            for t2 in range(idx2.count):
                sets_vertex(t, t2)

    counts = {"e1": 0, "e2": 0, "e3": 0, "e4a": 0, "e4b": 0, "sink": 0}
    for (w, w2), src in pair_ids.items():
        if w not in z:
            out[src].append(win)
            counts["sink"] += 1
            continue
        for a in k.enabled1[w]:
            out[src].append(hash_base + idx.h_table[w][a] * nr + w2)
            counts["e1"] += 1
    for t in range(sl):
        for w2 in range(nr):
            src = hash_base + t * nr + w2
            for a2 in k2.enabled1[w2]:
                out[src].append(sets_vertex(t, idx2.h_table[w2][a2]))
                counts["e2"] += 1
    for (t, t2), vid in sets_id.items():
        for r2 in idx2.g_lists[t2]:
            out[vid].append(dollar_base + t * nr + r2)
            counts["e3"] += 1
    # Bucketing members by label lets the no-match case fall out of the scan.
    for t in range(sl):
        for r2 in range(nr):
            src = dollar_base + t * nr + r2
            matched = False
            for r in idx.g_lists[t]:
                if lname[r] == rname[r2]:
                    out[src].append(pair_ids[(r, r2)])
                    matched = True
                    counts["e4a"] += 1
            if not matched:
                out[src].append(frown)
                counts["e4b"] += 1
    out[frown].append(frown)
    out[win].append(win)
    counts["sink"] += 2

    arena = make_arena(owner, out, priority=priority)
    return FairGame(arena, tuple(decode), pair_ids, fk, fk2, idx, idx2,
                    frozenset(z), counts)


def build_fairsim_game(ft: FairTs, ft2: FairTs, z: frozenset[int]) -> FairGame:
    """Specialized parity game for fair simulation between transition systems.

    ``z`` must be the fair-run region of the left system (its embedding's
    fairness region).  Player 1 moves the left system, player 2 answers on
    the right; a move the right system cannot label-match falls into the
    frown sink.
    """
    t1, t2 = ft.ts, ft2.ts
    shared_alphabet(t1, t2)
    if any(not 0 <= w < t1.n_states for w in z):
        raise ValueError("fairness region inconsistent with the left system")
    nl, nr = t1.n_states, t2.n_states
    lname = tuple(t1.obs[t1.label[w]] for w in range(nl))
    rname = tuple(t2.obs[t2.label[w]] for w in range(nr))

    decode: list[tuple] = []
    pair_ids: dict[tuple[int, int], int] = {}
    for w in range(nl):
        for w2 in range(nr):
            if lname[w] == rname[w2]:
                pair_ids[(w, w2)] = len(decode)
                decode.append(("pair", w, w2))
    n_pairs = len(decode)
    dollar_base = n_pairs
    decode.extend(("tsdollar", w, w2) for w in range(nl) for w2 in range(nr))
    frown = dollar_base + nl * nr
    win = frown + 1
    decode.append(FROWN)
    decode.append(WIN_SINK)

    owner = [P1] * n_pairs + [P2] * (nl * nr) + [P1, P1]
    out: list[list[int]] = [[] for _ in range(win + 1)]
    priority = [2] * (win + 1)
    for (w, w2), vid in pair_ids.items():
        priority[vid] = _pair_priority(w, w2, ft.fair, ft2.fair)
    priority[frown] = 1

    counts = {"move": 0, "answer": 0, "frown": 0, "sink": 0}
    for (w, w2), src in pair_ids.items():
        if w not in z:
            out[src].append(win)
            counts["sink"] += 1
            continue
        for v in t1.succ[w]:
            out[src].append(dollar_base + v * nr + w2)
            counts["move"] += 1
    for w in range(nl):
        for w2 in range(nr):
            src = dollar_base + w * nr + w2
            matched = False
            for v2 in t2.succ[w2]:
                if lname[w] == rname[v2]:
                    out[src].append(pair_ids[(w, v2)])
                    matched = True
                    counts["answer"] += 1
            if not matched:
                out[src].append(frown)
                counts["frown"] += 1
    out[frown].append(frown)
    out[win].append(win)
    counts["sink"] += 2

    arena = make_arena(owner, out, priority=priority)
    return FairGame(arena, tuple(decode), pair_ids, FairAts(ts_to_ats(t1), ft.fair),
                    FairAts(ts_to_ats(t2), ft2.fair), None, None, frozenset(z), counts)


def play_to_runs(game: AltSimGame | FairGame, play) -> tuple[list[int], list[int], bool]:
    """Project a finite play starting at a pair vertex onto the two systems.

    Returns the left and right run prefixes and whether the frown sink was
    reached.  After a frown, the final left state is recovered from the
    preceding $-vertex: the lowest-index member of its successor set (every
    member mismatches the right state, or the edge would not exist).
    """
    play = list(play)
    if not play:
        raise ValueError("empty play")
    arena = game.arena
    decode = game.decode
    if decode[play[0]][0] != "pair":
        raise ValueError("play does not start at a pair vertex")
    for u, v in zip(play, play[1:]):
        if v not in arena.out[u]:
            raise ValueError(f"({u},{v}) is not an arena edge")
    left: list[int] = []
    right: list[int] = []
    reached_frown = False
    for i, v in enumerate(play):
        entry = decode[v]
        if entry[0] == "pair":
            left.append(entry[1])
            right.append(entry[2])
        elif entry == FROWN and not reached_frown:
            reached_frown = True
            prev = decode[play[i - 1]]
            if prev[0] == "dollar":
                left.append(min(game.idx_left.g_lists[prev[1]]))
                right.append(prev[2])
            elif prev[0] == "tsdollar":
                left.append(prev[1])
    return left, right, reached_frown


# ---------------------------------------------------------------------------
# DOT export


def _vertex_label(entry: tuple, left_states, right_states) -> str:
    kind = entry[0]
    if kind == "pair":
        return f"⟨{left_states[entry[1]]},{right_states[entry[2]]}⟩"
    if kind == "hash":
        return f"⟨T{entry[1]},{right_states[entry[2]]},#⟩"
    if kind == "dollar":
        return f"⟨T{entry[1]},{right_states[entry[2]]},$⟩"
    if kind == "tsdollar":
        return f"⟨{left_states[entry[1]]},{right_states[entry[2]]},$⟩"
    if kind == "sets":
        return f"⟨T{entry[1]},T'{entry[2]}⟩"
    if kind == "frown":
        return "FROWN"
    return "WINSINK"


def game_to_dot(game: AltSimGame | FairGame) -> str:
    """Deterministic DOT rendering: boxes for player 1, diamonds for player 2."""
    arena = game.arena
    if isinstance(game, AltSimGame):
        left_states = game.left.states
        right_states = game.right.states
    else:
        left_states = game.left.ats.states
        right_states = game.right.ats.states
    lines = ["digraph game {"]
    for v in range(arena.n):
        label = _vertex_label(game.decode[v], left_states, right_states)
        if arena.priority is not None:
            label += f" p={arena.priority[v]}"
        elif arena.target is not None and v in arena.target:
            label += " target"
        shape = "box" if arena.owner[v] == P1 else "diamond"
        lines.append(f'  v{v} [shape={shape}, label="{label}"];')
    for u in range(arena.n):
        for v in arena.out[u]:
            lines.append(f"  v{u} -> v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
