"""Compile weighted tournaments into 2-dimensional Euclidean embeddings.

Every arc ``(i, j)`` of weight ``w`` becomes ``w/2`` copies of two voters
``f_i_j`` and ``g_i_j``. Both prefer ``i`` to ``j`` and they disagree on every
other candidate pair, so together they add exactly ``w`` to ``margin[i][j]``
and nothing elsewhere. The three constructions differ only in where the
voters go:

* ``l1``: candidates on the left/right sides of an axis-parallel square,
  voters just beside the equidistant points on the top and bottom sides.
* ``linf``: the same idea on a square rotated by 45 degrees.
* ``l2``: candidates and voters on a circle; ``g`` voters sit on the far
  side of the circle, just beside the second intersection of the bisector.

Node ``i`` always gets the power of two ``2**(i + 1)``, which keeps every
equidistant point distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Bipartition, Parity, Profile, WeightedTournament, check_bipartite, check_parity
from .errors import BipartitionError, EmptyProfile, InputError, ParityError
from .geometry import CircularEmbedding, CircularVoter, Norm, PlanarEmbedding, PlanarVoter

HALF = Fraction(1, 2)


def _exp2(i: int) -> int:
    return 1 << (i + 1)


@dataclass(frozen=True)
class L1ConstructionParams:
    """Square geometry shared by the ``l1`` and ``linf`` constructions (before scaling by 2)."""

    n: int

    @property
    def delta(self) -> Fraction:
        return Fraction(2 ** (self.n + 1))

    @property
    def epsilon(self) -> Fraction:
        return HALF

    def y(self, i: int) -> Fraction:
        return Fraction(_exp2(i))

    def a_point_x(self, left: int, right: int) -> Fraction:
        """x-coordinate of the top-side point equidistant (``l1``) from ``left`` and ``right``."""
        return (self.delta + self.y(left) - self.y(right)) / 2


@dataclass(frozen=True)
class L2ConstructionParams:
    n: int

    def theta(self, i: int) -> Fraction:
        return Fraction(_exp2(i), 2 ** self.n)

    @property
    def epsilon(self) -> Fraction:
        return Fraction(1, 2 ** (self.n + 1))

    def midline(self, i: int, j: int) -> Fraction:
        """Angle of the bisector of candidates ``i`` and ``j``."""
        return (self.theta(i) + self.theta(j)) / 2


def _require_even(t: WeightedTournament) -> None:
    parity = check_parity(t)
    if parity is not Parity.ALL_EVEN:
        raise ParityError(f"parity: construction needs all-even weights, tournament is {parity.value}")


def _require_bipartition(t: WeightedTournament, b: Bipartition | None) -> Bipartition:
    if b is None:
        b = check_bipartite(t)
        if b is None:
            raise BipartitionError("tournament is not bipartite")
        return b
    if b.left & b.right or (b.left | b.right) != frozenset(range(t.n)):
        raise BipartitionError("bipartition must split the nodes 0..n-1 into two disjoint sets")
    for i, j, _ in t.arcs():
        if (i in b.left) == (j in b.left):
            raise BipartitionError(f"arc ({i}, {j}) does not cross the bipartition")
    return b


def _square_construction(t, b, place):
    """Shared driver for ``l1``/``linf``; ``place`` maps ``(left, right, shift)`` to f/g points."""
    _require_even(t)
    b = _require_bipartition(t, b)
    voters = []
    for i, j, w in t.arcs():
        left, right = (i, j) if i in b.left else (j, i)
        # the winner's side of the equidistant points
        shift = -HALF if i == left else HALF
        f, g = place(left, right, shift)
        voters.append(PlanarVoter(f"f_{i}_{j}", 2 * f[0], 2 * f[1], w // 2))
        voters.append(PlanarVoter(f"g_{i}_{j}", 2 * g[0], 2 * g[1], w // 2))
    return b, voters


def construct_l1(t: WeightedTournament, b: Bipartition | None = None) -> PlanarEmbedding:
    """Embed an even bipartite tournament under ``l1``.

    The square is ``[0, delta]^2`` with ``delta = 2**(n+1)``, and every
    coordinate is then doubled so the output is integral. If ``b`` is
    omitted it is computed with :func:`check_bipartite`.
    """
    params = L1ConstructionParams(t.n)
    delta = params.delta

    def place(left, right, shift):
        xa = params.a_point_x(left, right)
        return (xa + shift, delta), (delta - xa + shift, Fraction(0))

    b, voters = _square_construction(t, b, place)
    cands = [(i, Fraction(0) if i in b.left else 2 * delta, 2 * params.y(i)) for i in range(t.n)]
    return PlanarEmbedding(Norm.L1, tuple(cands), tuple(voters))


def construct_linf(t: WeightedTournament, b: Bipartition | None = None) -> PlanarEmbedding:
    """Embed an even bipartite tournament under ``linf`` on the square ``|x| + |y| = delta``.

    Left candidates lie on the lower-left side, right candidates on the
    upper-right side; f voters sit on the upper-left side and g voters on
    the lower-right side. Coordinates are doubled for integrality.
    """
    params = L1ConstructionParams(t.n)
    delta = params.delta

    def place(left, right, shift):
        s = Fraction(_exp2(left) + _exp2(right), 2)
        a = (s - delta, s)
        bpt = (-a[0], -a[1])
        return (a[0] + shift, a[1] + shift), (bpt[0] + shift, bpt[1] + shift)

    b, voters = _square_construction(t, b, place)
    cands = []
    for i in range(t.n):
        p = _exp2(i)
        x, y = (-p, p - delta) if i in b.left else (p, delta - p)
        cands.append((i, 2 * Fraction(x), 2 * Fraction(y)))
    return PlanarEmbedding(Norm.LINF, tuple(cands), tuple(voters))


def _circle_pair(params: L2ConstructionParams, i: int, j: int, copies: int) -> list[CircularVoter]:
    m = params.midline(i, j)
    eps = params.epsilon
    sigma = 1 if params.theta(i) > params.theta(j) else -1
    return [
        CircularVoter(f"f_{i}_{j}", m + sigma * eps, False, copies),
        # stored angle is offset from B = m + pi; the true position m - sigma*eps + pi lies on i's side
        CircularVoter(f"g_{i}_{j}", m - sigma * eps, True, copies),
    ]


def construct_l2(t: WeightedTournament) -> CircularEmbedding:
    """Embed a same-parity tournament under ``l2`` on the unit circle.

    Odd tournaments first get one auxiliary voter at angle 0, whose ranking
    is ``0 > 1 > ... > n-1``; the remaining even residual margins are then
    realised by f/g pairs.
    """
    parity = check_parity(t)
    if parity is Parity.MIXED:
        raise ParityError("parity: weights of mixed parity are not inducible")
    params = L2ConstructionParams(t.n)
    residual = t.margin.copy()
    voters = []
    if parity is Parity.ALL_ODD:
        voters.append(CircularVoter("aux", Fraction(0), False, 1))
        for i in range(t.n):
            for j in range(t.n):
                if i != j:
                    residual[i, j] -= 1 if i < j else -1
    for i in range(t.n):
        for j in range(t.n):
            r = int(residual[i, j])
            if r > 0:
                voters.extend(_circle_pair(params, i, j, r // 2))
    cands = [(i, params.theta(i)) for i in range(t.n)]
    return CircularEmbedding(tuple(cands), tuple(voters))


def construct(t: WeightedTournament, norm: Norm, b: Bipartition | None = None):
    """Dispatch to the construction for ``norm``."""
    if norm is Norm.L1:
        return construct_l1(t, b)
    if norm is Norm.LINF:
        return construct_linf(t, b)
    if norm is Norm.L2:
        return construct_l2(t)
    raise InputError(f"unknown norm {norm!r}")


def construct_mcgarvey(t: WeightedTournament) -> Profile:
    """Unrestricted baseline profile inducing ``t``.

    For an arc ``(i, j)``: ``w/2`` voters ``i > j > 0 > 1 > ...`` and ``w/2``
    voters ``... > 1 > 0 > i > j`` (other candidates in ascending, resp.
    descending, order). Odd tournaments get one extra identity-ranking voter
    and the even residual is handled the same way.

    Raises
    ------
    EmptyProfile
        If ``t`` has no arcs (and is even), so no voter would be produced.
    """
    parity = check_parity(t)
    if parity is Parity.MIXED:
        raise ParityError("parity: weights of mixed parity are not inducible")
    n = t.n
    residual = t.margin.copy()
    entries = []
    if parity is Parity.ALL_ODD:
        entries.append((tuple(range(n)), 1))
        for i in range(n):
            for j in range(n):
                if i != j:
                    residual[i, j] -= 1 if i < j else -1
    for i in range(n):
        for j in range(n):
            r = int(residual[i, j])
            if r > 0:
                rest = [c for c in range(n) if c not in (i, j)]
                entries.append(((i, j, *rest), r // 2))
                entries.append(((*reversed(rest), i, j), r // 2))
    if not entries:
        raise EmptyProfile("tournament has no arcs; no voters to emit")
    return Profile(n, tuple(entries))
