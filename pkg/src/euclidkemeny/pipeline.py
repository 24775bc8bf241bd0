"""End-to-end checks: tournament round trips and the feedback-arc-set reduction.

The reduction turns a digraph into an even tournament (each arc weighs 2),
embeds it, solves Kemeny on the derived profile, and reads the minimum
feedback arc set size back off the Kemeny cost.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
import numpy as np

from . import _backend
from .construct import construct
from .core import Parity, WeightedTournament, check_bipartite, check_parity, majority_tournament
from .errors import BipartitionError, CapacityError, EmptyProfile, InputError, ParityError, VerificationError
from .geometry import Embedding, Norm, TieReport, coordinate_bit_length, derive_profile, verify_embedding
from .solve import kemeny_cost_from_margin_sum, kemeny_dp

FAS_BRUTE_FORCE_MAX_N = 9


@dataclass(frozen=True)
class FasInstance:
    """Directed multigraph without self-loops; opposite arcs (2-cycles) are allowed."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        arcs = tuple((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if u == v:
                raise InputError(f"self-loop at node {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"arc ({u}, {v}) out of range for n={self.n}")
        object.__setattr__(self, "arcs", arcs)

    def arc_counts(self) -> np.ndarray:
        counts = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.arcs:
            counts[u, v] += 1
        return counts


def fas_to_tournament(f: FasInstance) -> WeightedTournament:
    counts = f.arc_counts()
    return WeightedTournament(2 * (counts - counts.T))


def fas_brute_force(f: FasInstance, kernels=None) -> int:
    """Fewest backward arcs over all ``n!`` orderings (``n <= 9``)."""
    if f.n > FAS_BRUTE_FORCE_MAX_N:
        raise CapacityError(f"FAS brute force is limited to n <= {FAS_BRUTE_FORCE_MAX_N}, got n={f.n}")
    kernels = kernels or _backend.kernels
    # ranking i above j breaks every arc j -> i
    _, best, _, _ = kernels.brute_order(f.arc_counts().T.copy())
    return best


@dataclass(frozen=True)
class PipelineReport:
    n: int
    n_arcs: int
    norm: str
    margin: list[list[int]]
    embedding: dict
    n_voters: int
    kemeny_ranking: list[int]
    kemeny_cost: int
    implied_fas: int
    brute_force_fas: int | None = None

    @property
    def consistent(self) -> bool:
        return self.brute_force_fas is None or self.brute_force_fas == self.implied_fas

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    def to_text(self) -> str:
        lines = [
            f"norm: {self.norm}",
            f"nodes: {self.n}  arcs: {self.n_arcs}",
            f"embedding: {self.embedding['voter_records']} voter records, "
            f"coordinate bit length {self.embedding['bit_length']}",
            f"voters: {self.n_voters}",
            f"kemeny ranking: {' > '.join(map(str, self.kemeny_ranking))}",
            f"kemeny cost: {self.kemeny_cost}",
            f"implied FAS: {self.implied_fas}",
            f"brute-force FAS: {'n/a' if self.brute_force_fas is None else self.brute_force_fas}",
        ]
        return "\n".join(lines)


def implied_fas(kemeny_cost: int, n: int, n_voters: int, n_arcs: int) -> int:
    """Minimum feedback arc set size recovered from the Kemeny optimum.

    With arc weight 2, the best consistent margin sum equals
    ``2 * (n_arcs - 2 * fas)``.
    """
    margin_sum = n_voters * (n * (n - 1) // 2) - 2 * kemeny_cost
    value, rem = divmod(2 * n_arcs - margin_sum, 4)
    if rem:
        raise VerificationError(f"Kemeny cost {kemeny_cost} is inconsistent with {n_arcs} arcs")
    return value


def run_pipeline(f: FasInstance, norm: Norm, brute_force: bool | None = None) -> PipelineReport:
    """FAS instance -> tournament -> embedding -> profile -> Kemeny -> implied FAS.

    The brute-force oracle runs whenever ``n <= 9`` unless ``brute_force``
    says otherwise; a disagreement raises :class:`VerificationError`.
    """
    t = fas_to_tournament(f)
    e = construct(t, norm)
    try:
        p = derive_profile(e)
    except EmptyProfile:
        # every pair cancels: the empty profile has cost 0 under every ranking
        ranking, cost, V = tuple(range(f.n)), 0, 0
    else:
        if majority_tournament(p) != t:
            raise VerificationError("derived profile does not induce the tournament")
        res = kemeny_dp(p)
        ranking, cost, V = res.optimal, res.cost, p.n_voters
    value = implied_fas(cost, f.n, V, len(f.arcs))
    if brute_force is None:
        brute_force = f.n <= FAS_BRUTE_FORCE_MAX_N
    oracle = fas_brute_force(f) if brute_force else None
    report = PipelineReport(
        n=f.n,
        n_arcs=len(f.arcs),
        norm=norm.value,
        margin=t.margin.tolist(),
        embedding={"voter_records": len(e.voters), "bit_length": coordinate_bit_length(e)},
        n_voters=V,
        kemeny_ranking=list(ranking),
        kemeny_cost=cost,
        implied_fas=value,
        brute_force_fas=oracle,
    )
    if not report.consistent:
        raise VerificationError(f"implied FAS {value} != brute-force FAS {oracle}")
    return report


@dataclass
class InducibilityVerdict:
    ok: bool
    diagnostics: list[str] = field(default_factory=list)
    ties: list[TieReport] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def check_induces(t: WeightedTournament, e: Embedding) -> InducibilityVerdict:
    """Does the profile derived from ``e`` have exactly the margins of ``t``?"""
    if e.n_candidates != t.n:
        return InducibilityVerdict(False, [f"embedding has {e.n_candidates} candidates, tournament has {t.n}"])
    ties = verify_embedding(e)
    if ties:
        return InducibilityVerdict(False, [f"{len(ties)} equidistance ties, first: voter {ties[0].voter} "
                                           f"pair {ties[0].pair}"], ties)
    try:
        induced = majority_tournament(derive_profile(e))
    except EmptyProfile:
        induced = WeightedTournament(np.zeros((t.n, t.n), dtype=np.int64))
        note = ["no voters; the empty profile induces the zero tournament"]
    else:
        note = []
    if induced != t:
        diff = np.argwhere(induced.margin != t.margin)
        i, j = (int(v) for v in diff[0])
        return InducibilityVerdict(False, note + [f"margin mismatch at ({i}, {j}): "
                                                  f"induced {induced.margin[i, j]}, expected {t.margin[i, j]}"])
    return InducibilityVerdict(True, note)


def verify_inducibility(t: WeightedTournament, norm: Norm) -> InducibilityVerdict:
    """Construct, derive and recompute margins; inapplicable inputs give ``False`` with a reason."""
    try:
        e = construct(t, norm)
    except ParityError as exc:
        return InducibilityVerdict(False, [f"ParityError: {exc}"])
    except BipartitionError as exc:
        return InducibilityVerdict(False, [f"BipartitionError: {exc}"])
    return check_induces(t, e)


def admissible_norms(t: WeightedTournament) -> list[Norm]:
    """Norms whose construction accepts ``t``."""
    parity = check_parity(t)
    norms = []
    if parity is Parity.ALL_EVEN and check_bipartite(t) is not None:
        norms += [Norm.L1, Norm.LINF]
    if parity is not Parity.MIXED:
        norms.append(Norm.L2)
    return norms
