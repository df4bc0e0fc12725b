"""Seeded random instance generation for the CLI, benchmarks, and tests.

Structure draws and fairness draws come from separately seeded PRNG
streams (``random.Random(f"{seed}/system")`` and ``.../fair``), so the
fair set can be re-rolled without disturbing the transition structure.
Equal spec + seed always yields byte-identical files.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .systems import Ats, FairAts, serialize_system


@dataclass(frozen=True)
class RandomSpec:
    n_states: int
    n_actions1: int
    n_actions2: int
    n_obs: int
    fair_density: float
    seed: int

    def __post_init__(self):
        if min(self.n_states, self.n_actions1, self.n_actions2, self.n_obs) < 1:
            raise ValueError("all counts must be >= 1")
        if not 0.0 <= self.fair_density <= 1.0:
            raise ValueError("fair_density must lie in [0,1]")


def _nonempty_subset(rng: random.Random, size: int) -> tuple[int, ...]:
    while True:
        bits = rng.getrandbits(size)
        if bits:
            return tuple(i for i in range(size) if bits >> i & 1)


def random_ats(rng: random.Random, n_states: int, n_actions1: int,
               n_actions2: int, n_obs: int) -> Ats:
    """Uniform enabled subsets, successor states, and labels."""
    enabled1 = tuple(_nonempty_subset(rng, n_actions1) for _ in range(n_states))
    enabled2 = tuple(_nonempty_subset(rng, n_actions2) for _ in range(n_states))
    label = tuple(rng.randrange(n_obs) for _ in range(n_states))
    delta = tuple(
        tuple(
            tuple(rng.randrange(n_states) if a in enabled1[w] and b in enabled2[w] else -1
                  for b in range(n_actions2))
            for a in range(n_actions1))
        for w in range(n_states))
    return Ats(
        obs=tuple(f"o{i}" for i in range(n_obs)),
        states=tuple(f"s{i}" for i in range(n_states)),
        init=0,
        actions1=tuple(f"a{i}" for i in range(n_actions1)),
        actions2=tuple(f"b{i}" for i in range(n_actions2)),
        enabled1=enabled1,
        enabled2=enabled2,
        label=label,
        delta=delta,
    )


def random_fair_set(rng: random.Random, n_states: int, density: float) -> frozenset[int]:
    return frozenset(w for w in range(n_states) if rng.random() < density)


def random_system(spec: RandomSpec) -> Ats | FairAts:
    sys_rng = random.Random(f"{spec.seed}/system")
    ats = random_ats(sys_rng, spec.n_states, spec.n_actions1,
                     spec.n_actions2, spec.n_obs)
    if spec.fair_density == 0.0:
        return ats
    fair_rng = random.Random(f"{spec.seed}/fair")
    return FairAts(ats, random_fair_set(fair_rng, spec.n_states, spec.fair_density))


def gen_random(spec: RandomSpec) -> str:
    """System file text for the spec; deterministic in the seed."""
    return serialize_system(random_system(spec))
