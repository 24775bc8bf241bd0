"""Exact 2-dimensional embeddings and the preference profiles they induce.

Planar embeddings (``l1``/``linf``) hold ``Fraction`` coordinates. Circular
embeddings (``l2``) place every point on the unit circle and store only its
angle; because chord length grows strictly with angular separation on
``[0, pi]``, comparing distances reduces to comparing rational angle
differences. An antipodal voter sits at ``angle + pi`` and is encoded by a flag,
so no arithmetic with pi is ever needed.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

from .core import Profile
from .errors import EmptyProfile, InputError, TieError

#: Upper bound on stored angles; strictly below pi so separations never wrap.
ANGLE_CAP = Fraction(3)


class Norm(enum.Enum):
    L1 = "l1"
    L2 = "l2"
    LINF = "linf"


class Preference(enum.Enum):
    PREFER_A = "a"
    PREFER_B = "b"
    TIE = "tie"


class PlanarVoter(NamedTuple):
    label: str
    x: Fraction
    y: Fraction
    multiplicity: int = 1


class CircularVoter(NamedTuple):
    label: str
    angle: Fraction
    antipode: bool = False
    multiplicity: int = 1


def _check_candidate_ids(ids):
    if sorted(ids) != list(range(len(ids))):
        raise InputError(f"candidate ids must be 0..n-1, got {sorted(ids)}")


@dataclass(frozen=True)
class PlanarEmbedding:
    """Candidates ``(id, x, y)`` and voters on the plane under ``l1`` or ``linf``."""

    norm: Norm
    candidates: tuple[tuple[int, Fraction, Fraction], ...]
    voters: tuple[PlanarVoter, ...] = ()

    def __post_init__(self):
        if self.norm not in (Norm.L1, Norm.LINF):
            raise InputError(f"planar embeddings support l1 and linf only, got {self.norm.value}")
        cands = tuple(sorted((int(i), Fraction(x), Fraction(y)) for i, x, y in self.candidates))
        _check_candidate_ids([c[0] for c in cands])
        voters = tuple(
            PlanarVoter(str(v.label), Fraction(v.x), Fraction(v.y), int(v.multiplicity)) for v in self.voters
        )
        if any(v.multiplicity < 1 for v in voters):
            raise InputError("voter multiplicities must be positive")
        object.__setattr__(self, "candidates", cands)
        object.__setattr__(self, "voters", voters)

    @property
    def n_candidates(self) -> int:
        return len(self.candidates)


@dataclass(frozen=True)
class CircularEmbedding:
    """Candidates ``(id, angle)`` and voters on the unit circle under ``l2``."""

    candidates: tuple[tuple[int, Fraction], ...]
    voters: tuple[CircularVoter, ...] = ()

    norm = Norm.L2

    def __post_init__(self):
        cands = tuple(sorted((int(i), _check_angle(Fraction(a))) for i, a in self.candidates))
        _check_candidate_ids([c[0] for c in cands])
        voters = tuple(
            CircularVoter(str(v.label), _check_angle(Fraction(v.angle)), bool(v.antipode), int(v.multiplicity))
            for v in self.voters
        )
        if any(v.multiplicity < 1 for v in voters):
            raise InputError("voter multiplicities must be positive")
        object.__setattr__(self, "candidates", cands)
        object.__setattr__(self, "voters", voters)

    @property
    def n_candidates(self) -> int:
        return len(self.candidates)


Embedding = Union[PlanarEmbedding, CircularEmbedding]


def _check_angle(a: Fraction) -> Fraction:
    if not 0 <= a <= ANGLE_CAP:
        raise InputError(f"angle {a} outside [0, {ANGLE_CAP}]")
    return a


def dist_l1(p, q) -> Fraction:
    return abs(Fraction(p[0]) - Fraction(q[0])) + abs(Fraction(p[1]) - Fraction(q[1]))


def dist_linf(p, q) -> Fraction:
    return max(abs(Fraction(p[0]) - Fraction(q[0])), abs(Fraction(p[1]) - Fraction(q[1])))


_PLANAR_DIST = {Norm.L1: dist_l1, Norm.LINF: dist_linf}


def compare_l2_on_circle(voter: tuple[Fraction, bool], cand_a: Fraction, cand_b: Fraction) -> Preference:
    """Compare the chord distances from a voter to two candidates on the unit circle.

    ``voter`` is ``(angle, antipode)``. For an antipodal voter the true
    separation from a candidate at ``theta`` is ``pi - |angle - theta|``, so
    the candidate *farther* in stored angle is nearer on the circle.
    """
    angle, antipode = voter
    angle, cand_a, cand_b = (_check_angle(Fraction(x)) for x in (angle, cand_a, cand_b))
    da = abs(angle - cand_a)
    db = abs(angle - cand_b)
    if da == db:
        return Preference.TIE
    if (da < db) != bool(antipode):
        return Preference.PREFER_A
    return Preference.PREFER_B


def _voter_keys(e: Embedding):
    """Yield ``(voter, {candidate: key})`` where a smaller key means a nearer candidate."""
    if isinstance(e, PlanarEmbedding):
        dist = _PLANAR_DIST[e.norm]
        for v in e.voters:
            yield v, {c: dist((v.x, v.y), (x, y)) for c, x, y in e.candidates}
    else:
        for v in e.voters:
            sign = -1 if v.antipode else 1
            yield v, {c: sign * abs(v.angle - a) for c, a in e.candidates}


def _ranking_and_ties(keys: dict[int, Fraction]):
    order = sorted(keys, key=lambda c: (keys[c], c))
    ties = []
    k = 0
    while k < len(order):
        m = k
        while m + 1 < len(order) and keys[order[m + 1]] == keys[order[k]]:
            m += 1
        group = sorted(order[k:m + 1])
        ties.extend((a, b) for i, a in enumerate(group) for b in group[i + 1:])
        k = m + 1
    return tuple(order), ties


def derive_profile(e: Embedding) -> Profile:
    """Rank candidates by strictly increasing distance for every voter record.

    Raises
    ------
    TieError
        If some voter is equidistant from two candidates.
    EmptyProfile
        If the embedding has no voters.
    """
    entries = []
    for v, keys in _voter_keys(e):
        ranking, ties = _ranking_and_ties(keys)
        if ties:
            raise TieError(v.label, ties[0])
        entries.append((ranking, v.multiplicity))
    if not entries:
        raise EmptyProfile("embedding has no voters")
    return Profile(e.n_candidates, tuple(entries))


@dataclass(frozen=True)
class TieReport:
    voter: str
    pair: tuple[int, int]


def verify_embedding(e: Embedding) -> list[TieReport]:
    """Every ``(voter, candidate pair)`` at equal distance; empty means strict."""
    reports = []
    for v, keys in _voter_keys(e):
        _, ties = _ranking_and_ties(keys)
        reports.extend(TieReport(v.label, pair) for pair in ties)
    return reports


def to_float_points(e: Embedding, precision: int = 12) -> dict[str, list[tuple]]:
    """Approximate Cartesian coordinates, for rendering only.

    Returns ``{"candidates": [(id, x, y)], "voters": [(label, x, y)]}``;
    circular embeddings map to the unit circle.
    """
    if isinstance(e, PlanarEmbedding):
        cands = [(c, round(float(x), precision), round(float(y), precision)) for c, x, y in e.candidates]
        voters = [(v.label, round(float(v.x), precision), round(float(v.y), precision)) for v in e.voters]
    else:
        def point(angle, antipode=False):
            t = float(angle) + (math.pi if antipode else 0.0)
            return round(math.cos(t), precision) + 0.0, round(math.sin(t), precision) + 0.0

        cands = [(c, *point(a)) for c, a in e.candidates]
        voters = [(v.label, *point(v.angle, v.antipode)) for v in e.voters]
    return {"candidates": cands, "voters": voters}


def coordinate_bit_length(e: Embedding) -> int:
    """Largest bit length of any numerator or denominator among stored coordinates."""
    values = []
    if isinstance(e, PlanarEmbedding):
        for _, x, y in e.candidates:
            values += [x, y]
        for v in e.voters:
            values += [v.x, v.y]
    else:
        values += [a for _, a in e.candidates]
        values += [v.angle for v in e.voters]
    return max((max(abs(q.numerator).bit_length(), q.denominator.bit_length()) for q in values), default=0)
