"""Labeled transition systems and two-agent alternating transition systems.

A transition system (``Ts``) is a set of labeled states with a total edge
relation.  An alternating transition system (``Ats``) generalizes it: in
every state the two agents pick actions ``(a, b)`` jointly and ``delta``
gives the unique next state.  A ``Ts`` is the special case with a singleton
Agent-2 alphabet.  Both come in "fair" variants that add a Büchi state set.

States, actions, and observations are declared by name in the text format
but canonicalized to dense 0-based indices in declaration order; every
in-memory structure speaks indices, the name tables are kept for I/O.

Text format (UTF-8, line based, ``#`` starts a comment, blank lines
ignored; directives may appear in any order after the header)::

    ats                       # or: ts
    obs p q                   # observation names
    states s0 s1              # state names; index = position
    init s0
    label s0 p                # exactly one per state
    acts1 a b                 # optional: fixes Agent-1 alphabet order
    acts2 x y                 # optional: same for Agent 2
    act1 s0 a b               # enabled Agent-1 actions (ats only)
    act2 s0 x y               # enabled Agent-2 actions (ats only)
    trans s0 a x s0           # delta(s0,a,x)=s0; one line per enabled triple
    edge s0 s1                # (ts only) at least one per state
    fair s1                   # optional; zero or more state names

Relation files carry a ``# pairs=<N>`` header followed by ``N`` tab
separated index pairs in increasing lexicographic order.
"""
from __future__ import annotations

from dataclasses import dataclass


class ParseError(ValueError):
    """Raised on malformed input text; carries the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class Ts:
    """Labeled transition system with a total successor relation."""

    obs: tuple[str, ...]
    states: tuple[str, ...]
    init: int
    label: tuple[int, ...]
    succ: tuple[tuple[int, ...], ...]  # ascending successor lists, one per state

    @property
    def n_states(self) -> int:
        return len(self.states)

    @property
    def n_edges(self) -> int:
        return sum(len(s) for s in self.succ)

    def edges(self) -> list[tuple[int, int]]:
        return [(w, v) for w in range(self.n_states) for v in self.succ[w]]


@dataclass(frozen=True)
class FairTs:
    """A ``Ts`` plus a Büchi constraint: fair runs visit ``fair`` infinitely often."""

    ts: Ts
    fair: frozenset[int]


@dataclass(frozen=True)
class Ats:
    """Two-agent alternating transition system.

    ``enabled1[w]`` / ``enabled2[w]`` are the non-empty per-state action
    subsets (ascending index tuples).  ``delta[w][a][b]`` is the successor
    state; cells outside the enabled sets hold ``-1`` and are unreachable
    by contract.
    """

    obs: tuple[str, ...]
    states: tuple[str, ...]
    init: int
    actions1: tuple[str, ...]
    actions2: tuple[str, ...]
    enabled1: tuple[tuple[int, ...], ...]
    enabled2: tuple[tuple[int, ...], ...]
    label: tuple[int, ...]
    delta: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def n_states(self) -> int:
        return len(self.states)

    def succ_set(self, w: int, a: int) -> frozenset[int]:
        """Successor set of ``w`` under Agent-1 action ``a``, over all Agent-2 picks."""
        return frozenset(self.delta[w][a][b] for b in self.enabled2[w])


@dataclass(frozen=True)
class FairAts:
    """An ``Ats`` plus a Büchi constraint (possibly empty: then no run is fair)."""

    ats: Ats
    fair: frozenset[int]


@dataclass(frozen=True)
class SimRelation:
    """A finite set of (left, right) state index pairs, kept sorted and unique."""

    pairs: tuple[tuple[int, int], ...]
    left_size: int
    right_size: int

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return pair in set(self.pairs)

    def as_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.pairs)


def relation_from_pairs(pairs, left_size: int, right_size: int) -> SimRelation:
    """Sort, dedupe, and bounds-check pairs into a ``SimRelation``."""
    uniq = sorted(set((int(a), int(b)) for a, b in pairs))
    for a, b in uniq:
        if not (0 <= a < left_size and 0 <= b < right_size):
            raise ValueError(f"pair ({a},{b}) out of bounds for sizes "
                             f"({left_size},{right_size})")
    return SimRelation(tuple(uniq), left_size, right_size)


# ---------------------------------------------------------------------------
# parsing


def _logical_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body.split()))
    return out


class _NameTable:
    """Name -> dense index mapping, preserving first-appearance order."""

    def __init__(self):
        self.index: dict[str, int] = {}
        self.names: list[str] = []

    def add(self, name: str) -> int:
        if name not in self.index:
            self.index[name] = len(self.names)
            self.names.append(name)
        return self.index[name]

    def get(self, lineno: int, kind: str, name: str) -> int:
        if name not in self.index:
            raise ParseError(lineno, f"undeclared {kind} '{name}'")
        return self.index[name]


def parse_system(text: str) -> Ts | FairTs | Ats | FairAts:
    """Parse a system file; the header line and a ``fair`` line pick the kind."""
    lines = _logical_lines(text)
    if not lines:
        raise ParseError(1, "empty input")
    lineno0, head = lines[0]
    if head != ["ts"] and head != ["ats"]:
        raise ParseError(lineno0, f"expected header 'ts' or 'ats', got {' '.join(head)!r}")
    kind = head[0]

    groups: dict[str, list[tuple[int, list[str]]]] = {}
    for lineno, toks in lines[1:]:
        groups.setdefault(toks[0], []).append((lineno, toks[1:]))

    allowed = {"obs", "states", "init", "label", "fair"}
    allowed |= {"acts1", "acts2", "act1", "act2", "trans"} if kind == "ats" else {"edge"}
    for directive, entries in groups.items():
        if directive not in allowed:
            raise ParseError(entries[0][0], f"directive '{directive}' not allowed in a {kind} file")

    def single(directive: str, required: bool = True):
        entries = groups.get(directive, [])
        if len(entries) > 1:
            raise ParseError(entries[1][0], f"duplicate '{directive}' line")
        if not entries:
            if required:
                raise ParseError(lineno0, f"missing '{directive}' line")
            return None
        return entries[0]

    obs_line = single("obs")
    obs = _NameTable()
    for name in obs_line[1]:
        if name in obs.index:
            raise ParseError(obs_line[0], f"duplicate observation '{name}'")
        obs.add(name)
    if not obs.names:
        raise ParseError(obs_line[0], "no observations declared")

    states_line = single("states")
    states = _NameTable()
    for name in states_line[1]:
        if name in states.index:
            raise ParseError(states_line[0], f"duplicate state '{name}'")
        states.add(name)
    if not states.names:
        raise ParseError(states_line[0], "no states declared")
    n = len(states.names)

    init_line = single("init")
    if len(init_line[1]) != 1:
        raise ParseError(init_line[0], "init takes exactly one state")
    init = states.get(init_line[0], "state", init_line[1][0])

    label = [-1] * n
    for lineno, args in groups.get("label", []):
        if len(args) != 2:
            raise ParseError(lineno, "label takes a state and an observation")
        w = states.get(lineno, "state", args[0])
        if label[w] != -1:
            raise ParseError(lineno, f"duplicate label for state '{args[0]}'")
        label[w] = obs.get(lineno, "observation", args[1])
    for w in range(n):
        if label[w] == -1:
            raise ParseError(lineno0, f"state '{states.names[w]}' has no label")

    fair_entries = groups.get("fair", [])
    if len(fair_entries) > 1:
        raise ParseError(fair_entries[1][0], "duplicate 'fair' line")
    fair: frozenset[int] | None = None
    if fair_entries:
        lineno, args = fair_entries[0]
        fair = frozenset(states.get(lineno, "state", s) for s in args)

    if kind == "ts":
        succ: list[set[int]] = [set() for _ in range(n)]
        for lineno, args in groups.get("edge", []):
            if len(args) != 2:
                raise ParseError(lineno, "edge takes two states")
            w = states.get(lineno, "state", args[0])
            v = states.get(lineno, "state", args[1])
            if v in succ[w]:
                raise ParseError(lineno, f"duplicate edge {args[0]} -> {args[1]}")
            succ[w].add(v)
        for w in range(n):
            if not succ[w]:
                raise ParseError(lineno0, f"state {states.names[w]} has no outgoing edge")
        ts = Ts(tuple(obs.names), tuple(states.names), init, tuple(label),
                tuple(tuple(sorted(s)) for s in succ))
        return FairTs(ts, fair) if fair is not None else ts

    acts1 = _NameTable()
    acts2 = _NameTable()
    for table, directive in ((acts1, "acts1"), (acts2, "acts2")):
        entry = single(directive, required=False)
        if entry is not None:
            for name in entry[1]:
                if name in table.index:
                    raise ParseError(entry[0], f"duplicate action '{name}'")
                table.add(name)
    declared1 = bool(acts1.names)
    declared2 = bool(acts2.names)

    enabled1: list[tuple[int, ...] | None] = [None] * n
    enabled2: list[tuple[int, ...] | None] = [None] * n
    for directive, table, declared, enabled in (
            ("act1", acts1, declared1, enabled1),
            ("act2", acts2, declared2, enabled2)):
        for lineno, args in groups.get(directive, []):
            if len(args) < 2:
                raise ParseError(lineno, f"{directive} takes a state and at least one action")
            w = states.get(lineno, "state", args[0])
            if enabled[w] is not None:
                raise ParseError(lineno, f"duplicate {directive} line for state '{args[0]}'")
            ids = []
            for name in args[1:]:
                idx = table.get(lineno, "action", name) if declared else table.add(name)
                if idx in ids:
                    raise ParseError(lineno, f"duplicate action '{name}' in {directive} line")
                ids.append(idx)
            enabled[w] = tuple(sorted(ids))
        for w in range(n):
            if enabled[w] is None:
                raise ParseError(lineno0, f"state '{states.names[w]}' has no {directive} line")

    delta = [[[-1] * len(acts2.names) for _ in range(len(acts1.names))] for _ in range(n)]
    for lineno, args in groups.get("trans", []):
        if len(args) != 4:
            raise ParseError(lineno, "trans takes a state, two actions, and a target state")
        w = states.get(lineno, "state", args[0])
        a = acts1.get(lineno, "action", args[1])
        b = acts2.get(lineno, "action", args[2])
        v = states.get(lineno, "state", args[3])
        if a not in enabled1[w] or b not in enabled2[w]:
            raise ParseError(lineno, f"transition on disabled action at ({args[0]},{args[1]},{args[2]})")
        if delta[w][a][b] != -1:
            raise ParseError(lineno, f"duplicate trans line for ({args[0]},{args[1]},{args[2]})")
        delta[w][a][b] = v
    for w in range(n):
        for a in enabled1[w]:
            for b in enabled2[w]:
                if delta[w][a][b] == -1:
                    raise ParseError(
                        lineno0,
                        f"missing transition for enabled triple "
                        f"({states.names[w]},{acts1.names[a]},{acts2.names[b]})")

    ats = Ats(tuple(obs.names), tuple(states.names), init,
              tuple(acts1.names), tuple(acts2.names),
              tuple(enabled1), tuple(enabled2), tuple(label),
              tuple(tuple(tuple(row) for row in per_state) for per_state in delta))
    return FairAts(ats, fair) if fair is not None else ats


# ---------------------------------------------------------------------------
# serialization


def serialize_system(system: Ts | FairTs | Ats | FairAts) -> str:
    """Canonical text form; ``parse_system`` of the result reproduces the object."""
    fair: frozenset[int] | None = None
    if isinstance(system, FairTs):
        fair, system = system.fair, system.ts
    elif isinstance(system, FairAts):
        fair, system = system.fair, system.ats

    lines = []
    if isinstance(system, Ts):
        lines.append("ts")
        lines.append("obs " + " ".join(system.obs))
        lines.append("states " + " ".join(system.states))
        lines.append("init " + system.states[system.init])
        for w in range(system.n_states):
            lines.append(f"label {system.states[w]} {system.obs[system.label[w]]}")
        for w in range(system.n_states):
            for v in system.succ[w]:
                lines.append(f"edge {system.states[w]} {system.states[v]}")
    else:
        lines.append("ats")
        lines.append("obs " + " ".join(system.obs))
        lines.append("states " + " ".join(system.states))
        lines.append("init " + system.states[system.init])
        for w in range(system.n_states):
            lines.append(f"label {system.states[w]} {system.obs[system.label[w]]}")
        lines.append("acts1 " + " ".join(system.actions1))
        lines.append("acts2 " + " ".join(system.actions2))
        for w in range(system.n_states):
            lines.append(f"act1 {system.states[w]} "
                         + " ".join(system.actions1[a] for a in system.enabled1[w]))
            lines.append(f"act2 {system.states[w]} "
                         + " ".join(system.actions2[b] for b in system.enabled2[w]))
        for w in range(system.n_states):
            for a in system.enabled1[w]:
                for b in system.enabled2[w]:
                    lines.append(f"trans {system.states[w]} {system.actions1[a]} "
                                 f"{system.actions2[b]} {system.states[system.delta[w][a][b]]}")
    if fair is not None:
        lines.append(("fair " + " ".join(system.states[w] for w in sorted(fair))).rstrip())
    return "\n".join(lines) + "\n"


def serialize_relation(rel: SimRelation) -> str:
    """Emit the relation file format: header then sorted index pairs."""
    lines = [f"# pairs={len(rel.pairs)}"]
    lines.extend(f"{a}\t{b}" for a, b in rel.pairs)
    return "\n".join(lines) + "\n"


def parse_relation(text: str, left_size: int | None = None,
                   right_size: int | None = None) -> SimRelation:
    """Parse a relation file; sizes default to the smallest consistent bounds."""
    pairs = []
    count = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if count is None:
                body = line[1:].strip()
                if not body.startswith("pairs="):
                    raise ParseError(lineno, "expected '# pairs=<N>' header")
                count = int(body[len("pairs="):])
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(lineno, "expected '<left>\\t<right>'")
        try:
            pairs.append((int(toks[0]), int(toks[1])))
        except ValueError:
            raise ParseError(lineno, f"non-numeric pair {line!r}") from None
    if count is None:
        raise ParseError(1, "missing '# pairs=<N>' header")
    if count != len(pairs):
        raise ParseError(1, f"header claims {count} pairs, found {len(pairs)}")
    if left_size is None:
        left_size = 1 + max((a for a, _ in pairs), default=-1)
    if right_size is None:
        right_size = 1 + max((b for _, b in pairs), default=-1)
    if pairs != sorted(set(pairs)):
        raise ParseError(1, "pairs not in strictly increasing lexicographic order")
    return relation_from_pairs(pairs, left_size, right_size)


# ---------------------------------------------------------------------------
# validation


def validate(system) -> list[str]:
    """Return every invariant violation of the given system (empty list = ok)."""
    if isinstance(system, FairTs):
        out = validate(system.ts)
        out.extend(f"fair state {w} out of range" for w in sorted(system.fair)
                   if not 0 <= w < system.ts.n_states)
        return out
    if isinstance(system, FairAts):
        out = validate(system.ats)
        out.extend(f"fair state {w} out of range" for w in sorted(system.fair)
                   if not 0 <= w < system.ats.n_states)
        return out
    if isinstance(system, Ts):
        return _validate_ts(system)
    if isinstance(system, Ats):
        return _validate_ats(system)
    raise TypeError(f"not a system: {system!r}")


def _validate_ts(ts: Ts) -> list[str]:
    out = []
    n = ts.n_states
    if not 0 <= ts.init < n:
        out.append(f"init {ts.init} out of range")
    for w in range(n):
        if not 0 <= ts.label[w] < len(ts.obs):
            out.append(f"label({w}) out of range")
        if not ts.succ[w]:
            out.append(f"state {w} has no outgoing edge")
        for v in ts.succ[w]:
            if not 0 <= v < n:
                out.append(f"edge ({w},{v}) target out of range")
    return out


def _validate_ats(k: Ats) -> list[str]:
    out = []
    n = k.n_states
    n1, n2 = len(k.actions1), len(k.actions2)
    if not 0 <= k.init < n:
        out.append(f"init {k.init} out of range")
    for w in range(n):
        if not 0 <= k.label[w] < len(k.obs):
            out.append(f"label({w}) out of range")
        if not k.enabled1[w]:
            out.append(f"P1({w}) empty")
        if not k.enabled2[w]:
            out.append(f"P2({w}) empty")
        for a in k.enabled1[w]:
            if not 0 <= a < n1:
                out.append(f"P1({w}) action {a} out of range")
        for b in k.enabled2[w]:
            if not 0 <= b < n2:
                out.append(f"P2({w}) action {b} out of range")
        e1 = set(k.enabled1[w])
        e2 = set(k.enabled2[w])
        for a in range(min(n1, len(k.delta[w]))):
            for b in range(min(n2, len(k.delta[w][a]))):
                v = k.delta[w][a][b]
                enabled = a in e1 and b in e2
                if enabled and v == -1:
                    out.append(f"missing transition delta({w},{a},{b})")
                elif not enabled and v != -1:
                    out.append(f"transition on disabled action at delta({w},{a},{b})")
                elif enabled and not 0 <= v < n:
                    out.append(f"delta({w},{a},{b}) target {v} out of range")
    return out


# ---------------------------------------------------------------------------
# embedding


def ts_to_ats(ts: Ts) -> Ats:
    """Embed a transition system as an ATS with a singleton Agent-2 alphabet.

    Agent 1 picks the successor: ``P1(w)`` has one action per outgoing edge
    of ``w`` (named by target position), and ``delta(w, a_i, bot)`` is the
    i-th successor in ascending state order.
    """
    bad = validate(ts)
    if bad:
        raise ValueError("invalid ts: " + "; ".join(bad))
    max_deg = max(len(s) for s in ts.succ)
    actions1 = tuple(f"a{i}" for i in range(max_deg))
    enabled1 = tuple(tuple(range(len(ts.succ[w]))) for w in range(ts.n_states))
    enabled2 = ((0,),) * ts.n_states
    delta = tuple(
        tuple((ts.succ[w][a],) if a < len(ts.succ[w]) else (-1,) for a in range(max_deg))
        for w in range(ts.n_states))
    return Ats(ts.obs, ts.states, ts.init, actions1, ("bot",),
               enabled1, enabled2, ts.label, delta)


def embed_fair_ts(ft: FairTs) -> FairAts:
    return FairAts(ts_to_ats(ft.ts), ft.fair)


def shared_alphabet(left, right) -> None:
    """Cross-system operations require equal declared observation sets."""
    lo = left.ats.obs if isinstance(left, FairAts) else left.obs
    ro = right.ats.obs if isinstance(right, FairAts) else right.obs
    if set(lo) != set(ro):
        raise ValueError("systems do not share an observation alphabet")


def label_names(k: Ats) -> tuple[str, ...]:
    """Per-state observation names; cross-system labels compare by name."""
    return tuple(k.obs[k.label[w]] for w in range(k.n_states))
