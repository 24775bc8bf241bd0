"""Rankings, profiles, Kendall tau distances and weighted majority tournaments.

Candidates are dense 0-based integer ids. A ranking is a tuple listing the
candidates from most to least preferred.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError

Ranking = tuple[int, ...]


def as_ranking(order: Iterable[int], n: int | None = None) -> Ranking:
    """Validate ``order`` as a permutation of ``0..n-1`` and return it as a tuple."""
    r = tuple(int(c) for c in order)
    if n is None:
        n = len(r)
    if len(r) != n or sorted(r) != list(range(n)):
        raise InputError(f"ranking {list(r)} is not a permutation of 0..{n - 1}")
    return r


def positions(r: Sequence[int]) -> list[int]:
    """Inverse permutation: ``positions(r)[c]`` is the rank of candidate ``c``."""
    pos = [0] * len(r)
    for k, c in enumerate(r):
        pos[c] = k
    return pos


@dataclass(frozen=True)
class Profile:
    """A multiset of rankings stored as ``(ranking, multiplicity)`` entries."""

    n_candidates: int
    entries: tuple[tuple[Ranking, int], ...]

    def __post_init__(self):
        if self.n_candidates < 1:
            raise InputError("a profile needs at least one candidate")
        entries = []
        for ranking, mult in self.entries:
            mult = int(mult)
            if mult < 1:
                raise InputError(f"multiplicity must be positive, got {mult}")
            entries.append((as_ranking(ranking, self.n_candidates), mult))
        if not entries:
            raise InputError("a profile needs at least one voter")
        object.__setattr__(self, "entries", tuple(entries))

    @classmethod
    def from_rankings(cls, rankings: Iterable[Sequence[int]], n_candidates: int | None = None) -> Profile:
        """Build a profile with one entry of multiplicity 1 per ranking, in order."""
        rankings = [tuple(r) for r in rankings]
        if n_candidates is None:
            if not rankings:
                raise InputError("cannot infer candidate count from an empty ranking list")
            n_candidates = len(rankings[0])
        return cls(n_candidates, tuple((r, 1) for r in rankings))

    @property
    def n_voters(self) -> int:
        return sum(m for _, m in self.entries)


class WeightedTournament:
    """Antisymmetric integer margin matrix over ``n`` nodes.

    ``margin[i][j] > 0`` means an arc ``(i, j)`` of weight ``margin[i][j]``.
    The matrix is stored as a read-only ``int64`` array.
    """

    __slots__ = ("margin",)

    def __init__(self, margin):
        m = np.array(margin, dtype=np.int64)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise InputError(f"margin matrix must be square, got shape {m.shape}")
        if m.shape[0] < 1:
            raise InputError("a tournament needs at least one node")
        if np.any(np.diag(m) != 0):
            raise InputError("margin diagonal must be zero")
        if not np.array_equal(m, -m.T):
            raise InputError("margin matrix must be antisymmetric")
        m.setflags(write=False)
        self.margin = m

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int, int]]) -> WeightedTournament:
        """Build from ``(winner, loser, weight)`` triples; unlisted pairs get margin 0."""
        m = np.zeros((n, n), dtype=np.int64)
        for i, j, w in arcs:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise InputError(f"bad arc ({i}, {j}) for n={n}")
            if m[i, j] != 0:
                raise InputError(f"pair ({i}, {j}) given twice")
            m[i, j] = w
            m[j, i] = -w
        return cls(m)

    @property
    def n(self) -> int:
        return self.margin.shape[0]

    def arcs(self) -> list[tuple[int, int, int]]:
        """Positive arcs as ``(i, j, w)`` sorted by ``(i, j)``."""
        ii, jj = np.nonzero(self.margin > 0)
        return [(int(i), int(j), int(self.margin[i, j])) for i, j in zip(ii, jj)]

    def __eq__(self, other):
        if not isinstance(other, WeightedTournament):
            return NotImplemented
        return np.array_equal(self.margin, other.margin)

    def __hash__(self):
        return hash(self.margin.tobytes())

    def __repr__(self):
        return f"WeightedTournament(n={self.n}, arcs={self.arcs()})"


@dataclass(frozen=True)
class Bipartition:
    left: frozenset[int]
    right: frozenset[int]


class Parity(enum.Enum):
    ALL_EVEN = "even"
    ALL_ODD = "odd"
    MIXED = "mixed"


def kendall_tau(a: Sequence[int], b: Sequence[int]) -> int:
    """Number of unordered candidate pairs ranked oppositely by ``a`` and ``b``."""
    if len(a) != len(b):
        raise InputError(f"rankings have different lengths ({len(a)} vs {len(b)})")
    return _kendall_tau(as_ranking(a), as_ranking(b))


def _kendall_tau(a: Ranking, b: Ranking) -> int:
    pos_b = positions(b)
    # inversions of a read through b's positions
    seq = [pos_b[c] for c in a]
    n = len(seq)
    return sum(1 for x in range(n) for y in range(x + 1, n) if seq[x] > seq[y])


def kt_to_profile(r: Sequence[int], p: Profile) -> int:
    """Multiplicity-weighted sum of Kendall tau distances from ``r`` to ``p``."""
    if len(r) != p.n_candidates:
        raise InputError(f"ranking has {len(r)} candidates, profile has {p.n_candidates}")
    r = as_ranking(r, p.n_candidates)
    return sum(m * _kendall_tau(r, ranking) for ranking, m in p.entries)


def majority_tournament(p: Profile) -> WeightedTournament:
    """Weighted majority tournament: supporters of i over j minus supporters of j over i."""
    n = p.n_candidates
    m = np.zeros((n, n), dtype=np.int64)
    for ranking, mult in p.entries:
        pos = np.array(positions(ranking))
        # +mult where i is ranked before j, -mult otherwise
        m += mult * np.sign(pos[None, :] - pos[:, None])
    return WeightedTournament(m)


def check_parity(t: WeightedTournament) -> Parity:
    """Classify off-diagonal margins as all even, all odd or mixed; zeros count as even."""
    if t.n < 2:
        return Parity.ALL_EVEN
    off = t.margin[~np.eye(t.n, dtype=bool)] % 2
    if not off.any():
        return Parity.ALL_EVEN
    if off.all():
        return Parity.ALL_ODD
    return Parity.MIXED


def check_bipartite(t: WeightedTournament) -> Bipartition | None:
    """Two-colour the undirected support of the positive arcs, or return ``None``.

    Each connected component is coloured by BFS from its smallest node, which
    goes to ``left``; isolated nodes therefore land in ``left``.
    """
    n = t.n
    adj = (t.margin != 0)
    colour = [-1] * n
    for start in range(n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in np.flatnonzero(adj[u]):
                v = int(v)
                if colour[v] == -1:
                    colour[v] = 1 - colour[u]
                    queue.append(v)
                elif colour[v] == colour[u]:
                    return None
    left = frozenset(i for i in range(n) if colour[i] == 0)
    right = frozenset(i for i in range(n) if colour[i] == 1)
    return Bipartition(left, right)
