"""Independent oracles shared by several test modules."""

import itertools
import math
from fractions import Fraction

import numpy as np

#: one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_RESULTS = []


def kt_oracle(a, b):
    """Pairs ordered oppositely, by direct position comparison."""
    pa = {c: k for k, c in enumerate(a)}
    pb = {c: k for k, c in enumerate(b)}
    return sum(1 for i, j in itertools.combinations(sorted(a), 2) if (pa[i] < pa[j]) != (pb[i] < pb[j]))


def margins_oracle(n, rankings_with_mult):
    m = [[0] * n for _ in range(n)]
    for r, mult in rankings_with_mult:
        pos = {c: k for k, c in enumerate(r)}
        for i in range(n):
            for j in range(n):
                if i != j:
                    m[i][j] += mult if pos[i] < pos[j] else -mult
    return np.array(m, dtype=np.int64)


def brute_min_cost(n, cost_fn):
    """Minimum of ``cost_fn`` over all permutations, with the lexicographically first argmin."""
    best = None
    for perm in itertools.permutations(range(n)):
        c = cost_fn(perm)
        if best is None or c < best[0]:
            best = (c, perm)
    return best


def float_circle_ranking(candidates, angle, antipode):
    """Rank candidate angles by 64-bit Euclidean chord distance."""
    t = float(angle) + (math.pi if antipode else 0.0)
    vx, vy = math.cos(t), math.sin(t)
    d = {c: math.hypot(math.cos(float(a)) - vx, math.sin(float(a)) - vy) for c, a in candidates}
    return tuple(sorted(d, key=lambda c: d[c]))


def voter_rankings(e, profile):
    """Map each voter label to its derived ranking."""
    return {v.label: r for v, (r, _) in zip(e.voters, profile.entries)}


def check_pair_conditions(e, profile, n):
    """Every f_i_j/g_i_j pair prefers i to j and disagrees on every other pair."""
    rankings = voter_rankings(e, profile)
    problems = []
    for label, rf in rankings.items():
        if not label.startswith("f_"):
            continue
        i, j = (int(x) for x in label[2:].split("_"))
        rg = rankings["g_" + label[2:]]
        pf = {c: k for k, c in enumerate(rf)}
        pg = {c: k for k, c in enumerate(rg)}
        if not (pf[i] < pf[j] and pg[i] < pg[j]):
            problems.append((label, "winner"))
        for c, d in itertools.combinations(range(n), 2):
            if {c, d} != {i, j} and (pf[c] < pf[d]) == (pg[c] < pg[d]):
                problems.append((label, (c, d)))
    return problems


def fraction_bits(q: Fraction) -> int:
    return max(abs(q.numerator).bit_length(), q.denominator.bit_length())
