"""Two-player turn-based game arenas and their solvers.

Vertices are dense integers, each owned by player 1 or player 2; every
vertex has at least one out-edge, so all plays are infinite.  The payload
is either a target vertex set (reachability/safety) or a 3-valued priority
function (parity: the minimum priority seen infinitely often must be even
for the "even" player to win).

Solvers: linear-time attractor/reachability, the repeated-attractor Büchi
solver, a small-progress-measures parity solver for priorities {0,1,2}
(the shipped path), and a recursive attractor-decomposition solver for any
number of priorities (the cross-check oracle).  All solvers return
memoryless strategies and deterministically tie-break on the lowest vertex
index.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

P1 = 1
P2 = 2


def _other(player: int) -> int:
    return P1 + P2 - player


@dataclass(frozen=True)
class MemorylessStrategy:
    player: int
    choice: dict[int, int]


@dataclass(frozen=True)
class Lasso:
    """Counterexample play: finite stem followed by a repeated cycle."""

    stem: tuple[int, ...]
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class GameArena:
    owner: tuple[int, ...]
    out: tuple[tuple[int, ...], ...]
    pre: tuple[tuple[int, ...], ...] = field(repr=False)
    target: frozenset[int] | None = None
    priority: tuple[int, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.owner)

    @property
    def n_edges(self) -> int:
        return sum(len(o) for o in self.out)


def make_arena(owner, edges_out, target=None, priority=None) -> GameArena:
    """Normalize adjacency (sorted, unique), derive in-lists, check invariants."""
    owner = tuple(owner)
    n = len(owner)
    out = tuple(tuple(sorted(set(succs))) for succs in edges_out)
    if len(out) != n:
        raise ValueError("owner and adjacency sizes differ")
    pre: list[list[int]] = [[] for _ in range(n)]
    for u in range(n):
        if not out[u]:
            raise ValueError(f"vertex {u} has no outgoing edge")
        if owner[u] not in (P1, P2):
            raise ValueError(f"vertex {u} has invalid owner {owner[u]}")
        for v in out[u]:
            if not 0 <= v < n:
                raise ValueError(f"edge ({u},{v}) out of range")
            pre[v].append(u)
    if priority is not None:
        priority = tuple(priority)
        if len(priority) != n or any(p < 0 for p in priority):
            raise ValueError("bad priority assignment")
    if target is not None:
        target = frozenset(target)
        if any(not 0 <= v < n for v in target):
            raise ValueError("target vertex out of range")
    return GameArena(owner, out, tuple(tuple(p) for p in pre), target, priority)


# ---------------------------------------------------------------------------
# attractor / reachability


def attractor(g: GameArena, player: int, target, within=None
              ) -> tuple[frozenset[int], MemorylessStrategy]:
    """Vertices from which ``player`` forces reaching ``target``, with a witness.

    ``within`` restricts the computation to an induced subgraph.  Backward
    worklist with per-vertex escape counters; O(|V|+|E|).
    """
    alive = None if within is None else set(within)

    def ok(v: int) -> bool:
        return alive is None or v in alive

    attracted = bytearray(g.n)
    escape = [0] * g.n
    for v in range(g.n):
        if ok(v):
            escape[v] = sum(1 for u in g.out[v] if ok(u))
    choice: dict[int, int] = {}
    queue = deque()
    for v in sorted(set(target)):
        if ok(v) and not attracted[v]:
            attracted[v] = 1
            queue.append(v)
    while queue:
        u = queue.popleft()
        for v in g.pre[u]:
            if not ok(v) or attracted[v]:
                continue
            if g.owner[v] == player:
                attracted[v] = 1
                choice[v] = u
                queue.append(v)
            else:
                escape[v] -= 1
                if escape[v] == 0:
                    attracted[v] = 1
                    queue.append(v)
    for v in sorted(set(target)):
        if ok(v) and g.owner[v] == player and v not in choice:
            inside = [u for u in g.out[v] if ok(u)]
            choice[v] = inside[0] if inside else g.out[v][0]
    won = frozenset(v for v in range(g.n) if attracted[v])
    return won, MemorylessStrategy(player, choice)


def solve_reachability(g: GameArena, target=None):
    """Partition into the player-1 reach region and the player-2 safe region.

    Returns ``(win1, win2, strat1, strat2)``; ``strat2`` stays inside
    ``win2``, which is closed for player 2 by attractor duality.
    """
    if target is None:
        target = g.target
    if target is None:
        raise ValueError("arena has no target payload")
    win1, strat1 = attractor(g, P1, target)
    win2 = frozenset(range(g.n)) - win1
    choice = {}
    for v in sorted(win2):
        if g.owner[v] == P2:
            choice[v] = next(u for u in g.out[v] if u in win2)
    return win1, win2, strat1, MemorylessStrategy(P2, choice)


# ---------------------------------------------------------------------------
# Büchi


def solve_buchi(g: GameArena, player: int, b) -> tuple[frozenset[int], MemorylessStrategy]:
    """Vertices from which ``player`` forces visiting ``b`` infinitely often.

    Classical repeated-attractor scheme, O(|V|·|E|): repeatedly remove the
    opponent attractor of the region that cannot re-reach ``b``.
    """
    b = frozenset(b)
    opponent = _other(player)
    alive = set(range(g.n))
    while alive:
        reach, _ = attractor(g, player, b & alive, within=alive)
        trapped = alive - reach
        if not trapped:
            break
        lost, _ = attractor(g, opponent, trapped, within=alive)
        alive -= lost
    winning = frozenset(alive)
    choice: dict[int, int] = {}
    if alive:
        _, astrat = attractor(g, player, b & alive, within=alive)
        for v in sorted(alive):
            if g.owner[v] != player:
                continue
            if v in b:
                choice[v] = next(u for u in g.out[v] if u in alive)
            else:
                choice[v] = astrat.choice[v]
    return winning, MemorylessStrategy(player, choice)


# ---------------------------------------------------------------------------
# parity, small progress measures (priorities 0/1/2)


def solve_parity3(g: GameArena, even_player: int):
    """Solve a 3-priority parity game for the player wanting even min-parity.

    Small progress measures over ``{0..|p^-1(1)|} ∪ {top}``: a vertex measure
    bounds how many priority-1 vertices the even player need concede before
    the next priority-0 visit.  Total lifting work O(|V|·|E|).  Returns
    ``(win_even, win_odd, strategy)`` where the strategy picks a
    minimal-measure successor on the winning set.
    """
    if g.priority is None:
        raise ValueError("arena has no priority payload")
    if any(p > 2 for p in g.priority):
        raise ValueError("small progress measures solver expects priorities 0..2")
    p = g.priority
    n1 = sum(1 for x in p if x == 1)
    top = n1 + 1
    mu = [0] * g.n

    def prog(v: int, w: int) -> int:
        m = mu[w]
        if p[v] == 0:
            return 0 if m < top else top
        if p[v] == 1:
            return m + 1 if m < n1 else top
        return m

    def lift(v: int) -> int:
        vals = [prog(v, w) for w in g.out[v]]
        return min(vals) if g.owner[v] == even_player else max(vals)

    inq = bytearray(g.n)
    queue = deque(range(g.n))
    for v in range(g.n):
        inq[v] = 1
    while queue:
        v = queue.popleft()
        inq[v] = 0
        new = lift(v)
        if new > mu[v]:
            mu[v] = new
            for u in g.pre[v]:
                if not inq[u] and mu[u] < top:
                    inq[u] = 1
                    queue.append(u)

    win_even = frozenset(v for v in range(g.n) if mu[v] < top)
    win_odd = frozenset(range(g.n)) - win_even
    choice = {}
    for v in sorted(win_even):
        if g.owner[v] == even_player:
            choice[v] = min(g.out[v], key=lambda w: (prog(v, w), w))
    return win_even, win_odd, MemorylessStrategy(even_player, choice)


# ---------------------------------------------------------------------------
# parity, recursive oracle (any priorities)


def solve_parity_zielonka(g: GameArena, even_player: int):
    """Recursive attractor-decomposition parity solver; oracle for solve_parity3.

    Handles any number of priorities (minimum-parity winning condition) and
    returns memoryless strategies for both players:
    ``(win_even, win_odd, strat_even, strat_odd)``.
    """
    if g.priority is None:
        raise ValueError("arena has no priority payload")
    odd_player = _other(even_player)

    def solve(alive: frozenset[int]):
        if not alive:
            return frozenset(), frozenset(), {}, {}
        d = min(g.priority[v] for v in alive)
        favored = even_player if d % 2 == 0 else odd_player
        opponent = _other(favored)
        head = frozenset(v for v in alive if g.priority[v] == d)
        region, astrat = attractor(g, favored, head, within=alive)
        we1, wo1, se1, so1 = solve(alive - region)
        fav_sub, opp_sub = (we1, wo1) if favored == even_player else (wo1, we1)
        fav_strat_sub, opp_strat_sub = (se1, so1) if favored == even_player else (so1, se1)
        if not opp_sub:
            strat = dict(fav_strat_sub)
            strat.update(astrat.choice)
            for v in sorted(head):
                if g.owner[v] == favored:
                    strat[v] = next(u for u in g.out[v] if u in alive)
            if favored == even_player:
                return alive, frozenset(), strat, {}
            return frozenset(), alive, {}, strat
        block, bstrat = attractor(g, opponent, opp_sub, within=alive)
        we2, wo2, se2, so2 = solve(alive - block)
        opp_strat = dict(bstrat.choice)
        opp_strat.update(opp_strat_sub)
        if favored == even_player:
            opp_strat.update(so2)
            return we2, wo2 | block, dict(se2), opp_strat
        opp_strat.update(se2)
        return we2 | block, wo2, opp_strat, dict(so2)

    win_even, win_odd, strat_even, strat_odd = solve(frozenset(range(g.n)))
    return (win_even, win_odd,
            MemorylessStrategy(even_player, strat_even),
            MemorylessStrategy(odd_player, strat_odd))


def parity3_odd_strategy(g: GameArena, even_player: int) -> MemorylessStrategy:
    """Winning strategy for the odd player, via the dual arena.

    Shifting every priority by +1 turns the odd player into the even player
    of the dual game; its winning strategy there wins the original game.
    """
    dual = make_arena(g.owner, g.out, priority=tuple(p + 1 for p in g.priority))
    odd_player = _other(even_player)
    _, _, strat, _ = solve_parity_zielonka(dual, odd_player)
    return MemorylessStrategy(odd_player, strat.choice)


# ---------------------------------------------------------------------------
# strategy verification


def verify_strategy(g: GameArena, strat: MemorylessStrategy, objective,
                    claimed_winning) -> Lasso | None:
    """Check a memoryless strategy wins ``objective`` from every claimed vertex.

    The arena is restricted to the strategy's choices at the owner's
    vertices (the opponent keeps all edges).  Objectives:

    - ``("reach", T)``: every restricted play from the claimed set hits T;
    - ``("safe", F)``: the restriction never leaves F;
    - ``("parity", "even")`` / ``("parity", "odd")``: every cycle reachable
      inside the restriction has even (resp. odd) minimum priority.

    Returns ``None`` when the strategy wins, otherwise a ``Lasso``
    counterexample.
    """
    claimed = sorted(set(claimed_winning))

    def succs(v: int) -> tuple[int, ...]:
        if g.owner[v] == strat.player:
            if v not in strat.choice:
                raise ValueError(f"strategy undefined at owned vertex {v}")
            c = strat.choice[v]
            if c not in g.out[v]:
                raise ValueError(f"strategy edge ({v},{c}) not in arena")
            return (c,)
        return g.out[v]

    kind = objective[0]
    if kind == "reach":
        stop = frozenset(objective[1])
        return _check_no_cycle(succs, claimed, stop)
    if kind == "safe":
        safe = frozenset(objective[1])
        return _check_safety(succs, claimed, safe)
    if kind == "parity":
        if g.priority is None:
            raise ValueError("arena has no priority payload")
        want_even = objective[1] == "even"
        return _check_cycle_parity(g, succs, claimed, want_even)
    raise ValueError(f"unknown objective {objective!r}")


def _restricted_reachable(succs, claimed, stop=frozenset()):
    seen = {}
    queue = deque()
    for v in claimed:
        if v not in seen:
            seen[v] = None  # BFS tree parent, None at roots
            if v not in stop:
                queue.append(v)
    while queue:
        u = queue.popleft()
        for v in succs(u):
            if v not in seen:
                seen[v] = u
                if v not in stop:
                    queue.append(v)
    return seen


def _stem_to(parents, v) -> tuple[int, ...]:
    path = [v]
    while parents[path[-1]] is not None:
        path.append(parents[path[-1]])
    return tuple(reversed(path))


def _check_safety(succs, claimed, safe) -> Lasso | None:
    parents = _restricted_reachable(succs, claimed)
    for v in sorted(parents):
        if v not in safe:
            return Lasso(_stem_to(parents, v), ())
    return None


def _check_no_cycle(succs, claimed, stop) -> Lasso | None:
    """A cycle in the restriction that avoids ``stop`` witnesses non-reaching."""
    parents = _restricted_reachable(succs, claimed, stop)
    live = [v for v in parents if v not in stop]
    color = {v: 0 for v in live}  # 0 unvisited, 1 on stack, 2 done
    for root in sorted(live):
        if color[root]:
            continue
        stack = [(root, iter([w for w in succs(root) if w in color]))]
        color[root] = 1
        trail = [root]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if color[w] == 1:
                    i = trail.index(w)
                    return Lasso(_stem_to(parents, w), tuple(trail[i:]))
                if color[w] == 0:
                    color[w] = 1
                    trail.append(w)
                    stack.append((w, iter([x for x in succs(w) if x in color])))
                    advanced = True
                    break
            if not advanced:
                color[v] = 2
                trail.pop()
                stack.pop()
    return None


def _sccs(vertices, succs_in) -> list[list[int]]:
    """Iterative Tarjan over the induced subgraph."""
    vset = set(vertices)
    index = {}
    low = {}
    onstack = set()
    stack: list[int] = []
    out: list[list[int]] = []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        work = [(root, iter([w for w in succs_in(root) if w in vset]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        onstack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    onstack.add(w)
                    work.append((w, iter([x for x in succs_in(w) if x in vset])))
                    advanced = True
                    break
                if w in onstack:
                    low[v] = min(low[v], index[w])
            if not advanced:
                work.pop()
                if work:
                    pv = work[-1][0]
                    low[pv] = min(low[pv], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        onstack.discard(w)
                        comp.append(w)
                        if w == v:
                            break
                    out.append(comp)
    return out


def _check_cycle_parity(g, succs, claimed, want_even) -> Lasso | None:
    parents = _restricted_reachable(succs, claimed)
    live = set(parents)
    bad_parity = 1 if want_even else 0
    while live:
        d = min(g.priority[v] for v in live)
        heads = [v for v in sorted(live) if g.priority[v] == d]
        if d % 2 == bad_parity:
            for comp in _sccs(sorted(live), succs):
                cset = set(comp)
                cyclic = len(comp) > 1 or any(
                    v in succs(v) for v in comp)
                if not cyclic:
                    continue
                for h in sorted(cset):
                    if g.priority[h] != d:
                        continue
                    cycle = _cycle_through(h, cset, succs)
                    return Lasso(_stem_to(parents, h), cycle)
        live -= set(heads)
    return None


def _cycle_through(h, component, succs) -> tuple[int, ...]:
    """Shortest loop from ``h`` back to itself inside one SCC."""
    parent = {h: None}
    queue = deque([h])
    while queue:
        u = queue.popleft()
        for v in succs(u):
            if v == h:
                path = [u]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return tuple(reversed(path))
            if v in component and v not in parent:
                parent[v] = u
                queue.append(v)
    raise AssertionError("SCC claimed cyclic but no loop found")
