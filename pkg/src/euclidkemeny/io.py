"""Text formats for tournaments, FAS instances, profiles and embeddings.

Tournament file::

    # comments start with '#'
    n 3
    0 1 2        # arc 0 -> 1 with weight 2

FAS file: the same header followed by ``<from> <to>`` lines.

Profile file::

    candidates 3
    2 : 0 > 1 > 2

Embedding file: JSON with exact rationals written as ``"p/q"`` strings.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .core import Profile, WeightedTournament
from .errors import InputError
from .geometry import CircularEmbedding, CircularVoter, Embedding, Norm, PlanarEmbedding, PlanarVoter
from .pipeline import FasInstance

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class ParseError(InputError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _int(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


def _header(lines, keyword):
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(f"missing '{keyword} <count>' header") from None
    parts = line.split()
    if len(parts) != 2 or parts[0] != keyword:
        raise ParseError(f"expected '{keyword} <count>', got {line!r}", lineno)
    n = _int(parts[1], lineno)
    if n < 1:
        raise ParseError(f"{keyword} must be positive", lineno)
    return n


def _node(token, n, lineno):
    v = _int(token, lineno)
    if not 0 <= v < n:
        raise ParseError(f"node id {v} out of range 0..{n - 1}", lineno)
    return v


def parse_tournament(text: str) -> WeightedTournament:
    lines = _lines(text)
    n = _header(lines, "n")
    arcs = []
    seen = set()
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected '<from> <to> <weight>', got {line!r}", lineno)
        i, j = _node(parts[0], n, lineno), _node(parts[1], n, lineno)
        w = _int(parts[2], lineno)
        if i == j:
            raise ParseError(f"self-loop at node {i}", lineno)
        if w <= 0:
            raise ParseError(f"weights must be positive, got {w}", lineno)
        if frozenset((i, j)) in seen:
            raise ParseError(f"pair {{{i}, {j}}} listed twice", lineno)
        seen.add(frozenset((i, j)))
        arcs.append((i, j, w))
    return WeightedTournament.from_arcs(n, arcs)


def format_tournament(t: WeightedTournament) -> str:
    return "".join([f"n {t.n}\n"] + [f"{i} {j} {w}\n" for i, j, w in t.arcs()])


def parse_fas(text: str) -> FasInstance:
    lines = _lines(text)
    n = _header(lines, "n")
    arcs = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected '<from> <to>', got {line!r}", lineno)
        u, v = _node(parts[0], n, lineno), _node(parts[1], n, lineno)
        if u == v:
            raise ParseError(f"self-loop at node {u}", lineno)
        if (u, v) in arcs:
            raise ParseError(f"arc ({u}, {v}) listed twice", lineno)
        arcs.append((u, v))
    return FasInstance(n, tuple(arcs))


def format_fas(f: FasInstance) -> str:
    return "".join([f"n {f.n}\n"] + [f"{u} {v}\n" for u, v in f.arcs])


def parse_profile(text: str) -> Profile:
    lines = _lines(text)
    n = _header(lines, "candidates")
    entries = []
    for lineno, line in lines:
        mult, sep, body = line.partition(":")
        if not sep:
            raise ParseError(f"expected '<multiplicity> : a > b > ...', got {line!r}", lineno)
        m = _int(mult.strip(), lineno)
        if m < 1:
            raise ParseError(f"multiplicity must be positive, got {m}", lineno)
        ranking = tuple(_node(tok.strip(), n, lineno) for tok in body.split(">"))
        if sorted(ranking) != list(range(n)):
            raise ParseError(f"ranking must list each of the {n} candidates once", lineno)
        entries.append((ranking, m))
    if not entries:
        raise ParseError("profile has no voters")
    return Profile(n, tuple(entries))


def format_profile(p: Profile) -> str:
    body = [f"{m} : {' > '.join(map(str, r))}\n" for r, m in p.entries]
    return "".join([f"candidates {p.n_candidates}\n"] + body)


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.match(s):
        raise ParseError(f"expected a rational string 'p/q', got {s!r}")
    return Fraction(s)


def format_embedding(e: Embedding, names: dict[int, str] | None = None) -> str:
    doc = {"norm": e.norm.value}
    if isinstance(e, PlanarEmbedding):
        doc["candidates"] = [{"id": c, "x": format_rational(x), "y": format_rational(y)} for c, x, y in e.candidates]
        doc["voters"] = [
            {"label": v.label, "x": format_rational(v.x), "y": format_rational(v.y), "multiplicity": v.multiplicity}
            for v in e.voters
        ]
    else:
        doc["candidates"] = [{"id": c, "angle": format_rational(a)} for c, a in e.candidates]
        doc["voters"] = [
            {"label": v.label, "angle": format_rational(v.angle), "antipode": v.antipode,
             "multiplicity": v.multiplicity}
            for v in e.voters
        ]
    if names:
        doc["names"] = {str(k): names[k] for k in sorted(names)}
    return json.dumps(doc, indent=2) + "\n"


def parse_embedding(text: str) -> tuple[Embedding, dict[int, str]]:
    """Parse an embedding file; returns the embedding and its optional display names."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("embedding file must hold a JSON object")
    try:
        norm = Norm(doc.get("norm"))
    except ValueError:
        raise ParseError(f"unknown norm {doc.get('norm')!r}; expected l1, l2 or linf") from None
    cands = doc.get("candidates", [])
    voters = doc.get("voters", [])
    try:
        planar = any("x" in c for c in cands) or any("x" in v for v in voters)
        if norm is Norm.L2:
            if planar:
                raise ParseError("unsupported norm for planar embedding: l2 embeddings are circular only")
            e = CircularEmbedding(
                tuple((int(c["id"]), parse_rational(c["angle"])) for c in cands),
                tuple(CircularVoter(str(v["label"]), parse_rational(v["angle"]), _bool(v["antipode"]),
                                    int(v.get("multiplicity", 1))) for v in voters),
            )
        else:
            e = PlanarEmbedding(
                norm,
                tuple((int(c["id"]), parse_rational(c["x"]), parse_rational(c["y"])) for c in cands),
                tuple(PlanarVoter(str(v["label"]), parse_rational(v["x"]), parse_rational(v["y"]),
                                  int(v.get("multiplicity", 1))) for v in voters),
            )
    except KeyError as exc:
        raise ParseError(f"missing field {exc}") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from None
    names = {int(k): str(v) for k, v in doc.get("names", {}).items()}
    return e, names


def _bool(v):
    if not isinstance(v, bool):
        raise ParseError(f"expected true/false, got {v!r}")
    return v
