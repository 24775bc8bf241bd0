import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from euclidkemeny.core import (
    Parity,
    Profile,
    WeightedTournament,
    as_ranking,
    check_bipartite,
    check_parity,
    kendall_tau,
    kt_to_profile,
    majority_tournament,
)
from euclidkemeny.errors import InputError

from helpers import kt_oracle, margins_oracle

CYCLE = Profile.from_rankings([(0, 1, 2), (1, 2, 0), (2, 0, 1)])


def rankings(n):
    return st.permutations(list(range(n))).map(tuple)


@st.composite
def profiles(draw, n_max=6, v_max=6):
    n = draw(st.integers(1, n_max))
    entries = draw(st.lists(st.tuples(rankings(n), st.integers(1, 3)), min_size=1, max_size=v_max))
    return Profile(n, tuple(entries))


@pytest.mark.parametrize("a, b, expected", [
    ((0, 1, 2), (0, 1, 2), 0),
    ((0, 1, 2), (2, 1, 0), 3),
    ((0, 1, 2), (1, 2, 0), 2),
])
def test_kendall_tau_examples(a, b, expected):
    assert kendall_tau(a, b) == expected
    assert kt_oracle(a, b) == expected


def test_kendall_tau_length_mismatch():
    with pytest.raises(InputError):
        kendall_tau((0, 1), (0, 1, 2))


@pytest.mark.parametrize("bad", [(0, 0, 1), (0, 2), (1, 2, 3)])
def test_rankings_must_be_permutations(bad):
    with pytest.raises(InputError):
        as_ranking(bad)


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(rankings(n), rankings(n), rankings(n))))
def test_kendall_tau_is_a_metric(triple):
    a, b, c = triple
    n = len(a)
    assert kendall_tau(a, b) == kendall_tau(b, a) == kt_oracle(a, b)
    assert (kendall_tau(a, b) == 0) == (a == b)
    assert kendall_tau(a, c) <= kendall_tau(a, b) + kendall_tau(b, c)
    assert 0 <= kendall_tau(a, b) <= n * (n - 1) // 2


def test_kt_to_profile_examples():
    assert kt_to_profile((0, 1, 2), Profile(3, (((0, 1, 2), 3),))) == 0
    assert kt_to_profile((0, 1, 2), CYCLE) == 4
    assert kt_to_profile((0, 2, 1), CYCLE) == 5


def test_kt_to_profile_dimension_mismatch():
    with pytest.raises(InputError):
        kt_to_profile((0, 1), CYCLE)


def test_majority_tournament_examples():
    m = majority_tournament(Profile.from_rankings([(0, 1, 2)])).margin
    assert m[0, 1] == m[0, 2] == m[1, 2] == 1
    m = majority_tournament(CYCLE).margin
    assert m[0, 1] == m[1, 2] == m[2, 0] == 1
    m = majority_tournament(Profile.from_rankings([(0, 1), (1, 0)])).margin
    assert not m.any()


@given(profiles())
def test_majority_tournament_against_oracle(p):
    t = majority_tournament(p)
    assert np.array_equal(t.margin, margins_oracle(p.n_candidates, p.entries))
    assert np.array_equal(t.margin, -t.margin.T)
    assert not np.diag(t.margin).any()
    off = t.margin[~np.eye(p.n_candidates, dtype=bool)]
    assert np.all(off % 2 == p.n_voters % 2)


@given(profiles(n_max=5))
@settings(max_examples=60)
def test_kt_margin_identity(p):
    n, V = p.n_candidates, p.n_voters
    m = majority_tournament(p).margin
    for r in itertools.permutations(range(n)):
        pos = {c: k for k, c in enumerate(r)}
        twice = sum(V - (1 if pos[i] < pos[j] else -1) * m[i, j] for i, j in itertools.combinations(range(n), 2))
        assert kt_to_profile(r, p) * 2 == twice


def test_profile_validation():
    with pytest.raises(InputError):
        Profile(2, ())
    with pytest.raises(InputError):
        Profile(2, (((0, 1), 0),))
    with pytest.raises(InputError):
        Profile(3, (((0, 1), 1),))


def test_tournament_validation():
    with pytest.raises(InputError):
        WeightedTournament([[0, 1], [1, 0]])
    with pytest.raises(InputError):
        WeightedTournament([[1, 0], [0, -1]])
    with pytest.raises(InputError):
        WeightedTournament.from_arcs(2, [(0, 1, 2), (1, 0, 2)])
    t = WeightedTournament.from_arcs(3, [(0, 2, 2), (1, 2, 4)])
    assert t.arcs() == [(0, 2, 2), (1, 2, 4)]
    with pytest.raises(ValueError):
        t.margin[0, 1] = 5


def test_check_parity_examples():
    even = WeightedTournament([[0, 2, -4], [-2, 0, 0], [4, 0, 0]])
    assert check_parity(even) is Parity.ALL_EVEN
    odd = WeightedTournament.from_arcs(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])
    assert check_parity(odd) is Parity.ALL_ODD
    mixed = WeightedTournament.from_arcs(3, [(0, 1, 1), (1, 2, 2), (2, 0, 1)])
    assert check_parity(mixed) is Parity.MIXED
    # a zero margin counts as even
    assert check_parity(WeightedTournament.from_arcs(3, [(0, 1, 1), (1, 2, 1)])) is Parity.MIXED


def test_check_bipartite_examples():
    b = check_bipartite(WeightedTournament.from_arcs(3, [(0, 2, 2), (1, 2, 2)]))
    assert b.left == {0, 1} and b.right == {2}
    assert check_bipartite(WeightedTournament.from_arcs(3, [(0, 1, 2), (1, 2, 2), (2, 0, 2)])) is None
    b = check_bipartite(WeightedTournament(np.zeros((3, 3), dtype=int)))
    assert b.left == {0, 1, 2} and b.right == set()


@given(profiles(n_max=7))
def test_bipartition_is_valid_when_found(p):
    t = majority_tournament(p)
    b = check_bipartite(t)
    if b is None:
        return
    assert b.left | b.right == set(range(t.n)) and not b.left & b.right
    for i, j, _ in t.arcs():
        assert (i in b.left) != (j in b.left)
