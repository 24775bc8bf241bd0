"""Exact Kemeny and Slater ranking.

Both problems are linear-ordering problems over a pairwise cost matrix:
``cost_before[i][j]`` is what it costs to rank ``i`` above ``j``. Two exact
routes are provided and kept independent: full enumeration of all ``n!``
orderings and a ``2**n`` subset dynamic program. Both return the
lexicographically smallest optimal ranking.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _backend
from .core import Profile, Ranking, WeightedTournament, majority_tournament
from .errors import CapacityError

BRUTE_FORCE_MAX_N = 10
DP_MAX_N = 24
ENUMERATE_OPTIMA_MAX_N = 8
MAX_VOTERS = 2 ** 20


@dataclass(frozen=True)
class PairCostMatrix:
    """``cost_before[i][j]``: voters preferring ``j`` to ``i``."""

    n: int
    cost_before: np.ndarray
    n_voters: int

    @classmethod
    def from_profile(cls, p: Profile) -> PairCostMatrix:
        t = majority_tournament(p)
        V = p.n_voters
        cost = (V - t.margin) // 2
        np.fill_diagonal(cost, 0)
        cost.setflags(write=False)
        return cls(p.n_candidates, cost, V)


@dataclass(frozen=True)
class KemenyResult:
    """Optimal ranking and its cost.

    ``optima_count`` is only known to brute-force solvers; ``optima`` lists
    every co-optimal ranking when ``n <= 8`` under brute force.
    """

    optimal: Ranking
    cost: int
    optima_count: int | None = None
    optima: tuple[Ranking, ...] | None = None


def _brute(cost: np.ndarray, kernels=None) -> KemenyResult:
    n = cost.shape[0]
    if n > BRUTE_FORCE_MAX_N:
        raise CapacityError(f"brute force is limited to n <= {BRUTE_FORCE_MAX_N}, got n={n}")
    kernels = kernels or _backend.kernels
    collect = n <= ENUMERATE_OPTIMA_MAX_N
    order, best, count, optima = kernels.brute_order(cost, collect)
    return KemenyResult(tuple(order), best, count, tuple(optima) if collect else None)


def _dp(cost: np.ndarray, kernels=None) -> KemenyResult:
    n = cost.shape[0]
    if n > DP_MAX_N:
        raise CapacityError(f"subset DP is limited to n <= {DP_MAX_N}, got n={n}")
    kernels = kernels or _backend.kernels
    order, best = kernels.dp_order(cost)
    return KemenyResult(tuple(order), best)


def _check_voters(p: Profile) -> None:
    if p.n_voters > MAX_VOTERS:
        raise CapacityError(f"at most {MAX_VOTERS} voters supported, got {p.n_voters}")


def kemeny_brute_force(p: Profile, kernels=None) -> KemenyResult:
    """Minimise the Kendall tau cost by enumerating every ranking (``n <= 10``)."""
    _check_voters(p)
    return _brute(PairCostMatrix.from_profile(p).cost_before, kernels)


def kemeny_dp(p: Profile, kernels=None) -> KemenyResult:
    """Minimise the Kendall tau cost with the subset DP (``n <= 24``)."""
    _check_voters(p)
    return _dp(PairCostMatrix.from_profile(p).cost_before, kernels)


def slater_costs(t: WeightedTournament) -> np.ndarray:
    """Unit cost for ranking ``i`` above ``j`` whenever ``j`` beats ``i``."""
    return (t.margin.T > 0).astype(np.int64)


def slater_ranking(t: WeightedTournament, brute_force: bool = False, kernels=None) -> KemenyResult:
    """Ranking contradicting the fewest majority arcs; zero-margin pairs are free."""
    cost = slater_costs(t)
    return _brute(cost, kernels) if brute_force else _dp(cost, kernels)


def kemeny_lower_bound(p: Profile) -> int:
    """Sum over pairs of the cheaper orientation; never above the optimum."""
    cost = PairCostMatrix.from_profile(p).cost_before
    return int(np.triu(np.minimum(cost, cost.T), 1).sum())


def consistent_margin_sum(ranking, t: WeightedTournament) -> int:
    """Sum of ``margin[i][j]`` over pairs with ``i`` ranked above ``j``."""
    r = list(ranking)
    idx = np.array(r)
    upper = np.triu(np.ones((len(r), len(r)), dtype=bool), 1)
    return int(t.margin[np.ix_(idx, idx)][upper].sum())


def kemeny_cost_from_margin_sum(margin_sum: int, n: int, n_voters: int) -> int:
    """Kendall tau cost of a ranking whose consistent margin sum is ``margin_sum``."""
    twice = n_voters * (n * (n - 1) // 2) - margin_sum
    assert twice % 2 == 0
    return twice // 2
