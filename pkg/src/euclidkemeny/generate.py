"""Seeded random instances for tests, benchmarks and ``ek generate``."""

from __future__ import annotations

import os
import random

import numpy as np

from .core import Profile, WeightedTournament
from .pipeline import FasInstance

DEFAULT_SEED = 20240101


def seeded_rng(seed: int | None = None) -> random.Random:
    """``random.Random`` seeded from ``seed``, else ``$EK_SEED``, else a fixed default."""
    if seed is None:
        seed = int(os.environ.get("EK_SEED", DEFAULT_SEED))
    return random.Random(seed)


def random_bipartite_tournament(rng: random.Random, n_max: int = 12, weights=(2, 4, 6, 8, 10),
                                density: float = 0.7, n_min: int = 2) -> WeightedTournament:
    n = rng.randint(n_min, n_max)
    left = [i for i in range(n) if rng.random() < 0.5] or [0]
    m = np.zeros((n, n), dtype=np.int64)
    for i in left:
        for j in range(n):
            if j in left or rng.random() > density:
                continue
            w = rng.choice(weights)
            if rng.random() < 0.5:
                i2, j2 = i, j
            else:
                i2, j2 = j, i
            m[i2, j2], m[j2, i2] = w, -w
    return WeightedTournament(m)


def random_parity_tournament(rng: random.Random, odd: bool, n_max: int = 10, w_max: int = 9,
                             n_min: int = 1) -> WeightedTournament:
    """Complete margin matrix whose entries are all odd (never zero) or all even."""
    n = rng.randint(n_min, n_max)
    values = [w for w in range(-w_max, w_max + 1) if w % 2 == (1 if odd else 0)]
    m = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            w = rng.choice(values)
            m[i, j], m[j, i] = w, -w
    return WeightedTournament(m)


def random_profile(rng: random.Random, n_max: int = 8, v_max: int = 15, n_min: int = 1) -> Profile:
    n = rng.randint(n_min, n_max)
    V = rng.randint(1, v_max)
    rankings = []
    for _ in range(V):
        r = list(range(n))
        rng.shuffle(r)
        rankings.append(tuple(r))
    return Profile.from_rankings(rankings, n)


def random_bipartite_fas(rng: random.Random, n_max: int = 8, max_arcs: int = 12) -> FasInstance:
    """Digraph whose arcs all join ``{0..k-1}`` to ``{k..n-1}``, in random directions."""
    n = rng.randint(2, n_max)
    k = rng.randint(1, n - 1)
    slots = [(a, b) for a in range(k) for b in range(k, n)]
    arcs = []
    for a, b in rng.sample(slots, min(len(slots), rng.randint(0, max_arcs))):
        arcs.append((a, b) if rng.random() < 0.5 else (b, a))
    return FasInstance(n, tuple(arcs))
