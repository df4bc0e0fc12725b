"""Canonical numbering of successor sets via a binary trie.

Each enabled ``(state, action)`` of an ATS yields a successor set; the index
assigns every distinct set a dense id and supports two lookups: ``succ_of``
maps ``(w, a)`` to its set id in O(1), ``members`` lists a set's states in
O(|set|).  Ids follow the lexicographic order of the sets' characteristic
bit-vectors over states ``0..n-1`` (absent before present), which is the
left-first depth-first leaf order of a membership trie of depth ``n``.
The trie itself is transient: only the two tables and the node count
survive construction.
"""
from __future__ import annotations

from dataclasses import dataclass

from .systems import Ats, validate


@dataclass(frozen=True)
class SuccIndex:
    n_states: int
    n_actions1: int
    count: int
    h_table: tuple[tuple[int, ...], ...]  # (state, action) -> set id, -1 if disabled
    g_lists: tuple[tuple[int, ...], ...]  # set id -> ascending member states
    trie_nodes: int                       # size of the (dropped) construction trie


def build_succ_index(k: Ats) -> SuccIndex:
    bad = validate(k)
    if bad:
        raise ValueError("invalid ats: " + "; ".join(bad))
    n = k.n_states
    n1 = len(k.actions1)

    # Trie with child tables; node 0 is the root, depth i branches on state i.
    left = [-1]
    right = [-1]

    def membership_bits(w: int, a: int) -> bytearray:
        bits = bytearray(n)
        for b in k.enabled2[w]:
            bits[k.delta[w][a][b]] = 1
        return bits

    for w in range(n):
        for a in k.enabled1[w]:
            node = 0
            for bit in membership_bits(w, a):
                table = right if bit else left
                child = table[node]
                if child < 0:
                    child = len(left)
                    left.append(-1)
                    right.append(-1)
                    table[node] = child
                node = child

    # Depth-first traversal, absent-edge first, numbers the leaves; the path
    # bits reconstruct each set while walking.
    g: list[tuple[int, ...]] = []
    leaf_id: dict[int, int] = {}
    path = bytearray(n)
    stack: list[tuple[int, int, int]] = [(0, 0, 0)]
    while stack:
        node, depth, bit = stack.pop()
        if depth > 0:
            path[depth - 1] = bit
        if depth == n:
            leaf_id[node] = len(g)
            g.append(tuple(i for i in range(n) if path[i]))
            continue
        if right[node] >= 0:
            stack.append((right[node], depth + 1, 1))
        if left[node] >= 0:
            stack.append((left[node], depth + 1, 0))

    h = [[-1] * n1 for _ in range(n)]
    for w in range(n):
        for a in k.enabled1[w]:
            node = 0
            for bit in membership_bits(w, a):
                node = right[node] if bit else left[node]
            h[w][a] = leaf_id[node]

    return SuccIndex(n, n1, len(g), tuple(tuple(row) for row in h),
                     tuple(g), len(left))


def members(idx: SuccIndex, set_id: int) -> tuple[int, ...]:
    """Ascending member states of the given set id."""
    if not 0 <= set_id < idx.count:
        raise IndexError(f"set id {set_id} out of range (count={idx.count})")
    return idx.g_lists[set_id]


def succ_of(idx: SuccIndex, w: int, a: int) -> int:
    """Set id of the successor set of ``(w, a)``; ``a`` must be enabled at ``w``."""
    if not 0 <= w < idx.n_states:
        raise IndexError(f"state {w} out of range")
    if not 0 <= a < idx.n_actions1 or idx.h_table[w][a] < 0:
        raise ValueError(f"action {a} not enabled at state {w}")
    return idx.h_table[w][a]
