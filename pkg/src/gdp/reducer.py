"""Constructive decomposition of generalized Catalan lists.

A list is *reducible* when its positions split into two nonempty parts whose
sublists are both generalized Catalan.  Writing ``cost`` for the sum of the
per-run maxima and ``width`` for the length, the decision procedure is:

  * cost < width: always reducible; a witness comes out of a pigeonhole
    argument over the phases of the greedy reordering (:func:`reduce_strict`).
  * cost = width, more than one peak: always reducible; either the reordered
    walk returns to zero inside the first up-phase, or the same pigeonhole
    fires (:func:`reduce_equality`).
  * cost = width, single peak: reducible unless every entry is the up-run
    maximum or the negated down-run maximum and those maxima are coprime;
    the constructive search sorts the up-run, walks it greedily and pigeonholes
    the running sums (:func:`reduce_y1`).
  * cost > width: no structural criterion; fall back to exhaustive search up
    to a width limit (:func:`reduce`).

Phases: with gamma_i the first step visiting up-run i and delta_j the last
step visiting down-run j, the i-th up-phase is [gamma_i, gamma_{i+1}) (the
last one ends at t) and the j-th down-phase is [delta_{j-1}, delta_j) (the
first one starts at 0).  Up-phases tile [t]; down-phases tile {0} + [t-1].
Counting negative steps per up-phase (u_i) and positive follow-ups per
down-phase (d_j) gives u_1 + ... + u_y + d_1 + ... + d_y = t, which forces a
phase to overflow its run maximum whenever cost < width.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .catalan import (
    Decomposition,
    SignedList,
    cost,
    is_generalized_catalan,
    is_valid_decomposition,
    run_profile,
    width,
)
from .staircase import GreedyPermutation, build_pi, build_sigma

DEFAULT_SEARCH_LIMIT = 24


@dataclass(frozen=True, slots=True)
class Irreducible:
    """Certificate that no decomposition exists.

    For the single-peak equality case the certificate means: all entries are
    either ``alpha1`` or ``-beta1`` with gcd(alpha1, beta1) = 1.  After an
    exhaustive search the fields simply record the first-run maxima and the
    sign counts of the input.
    """

    alpha1: int
    beta1: int
    n_up: int
    n_down: int


@dataclass(frozen=True, slots=True)
class Undecided:
    """The exhaustive fallback was skipped because the list is too wide."""

    width: int
    limit: int


ReduceOutcome = Union[Decomposition, Irreducible, Undecided]


@dataclass(frozen=True, slots=True)
class PhaseProfile:
    """Phase windows of the greedy reordering and their step counts.

    ``up_phases``/``down_phases`` are inclusive (lo, hi) ranges; see the
    module docstring for the definitions and the counting identity.
    """

    gammas: tuple[int, ...]
    deltas: tuple[int, ...]
    up_phases: tuple[tuple[int, int], ...]
    down_phases: tuple[tuple[int, int], ...]
    u_counts: tuple[int, ...]
    d_counts: tuple[int, ...]


def _phase_invariants_ok(xs, p, prof, profile) -> bool:
    """Structural checks enforced on every phase profile in test builds."""
    t = len(xs)
    entries = xs.entries
    sums = p.running_sums

    def walk(h):  # running sum after h steps, h in [0, t]
        return 0 if h == 0 else sums[h - 1]

    covered = []
    for lo, hi in profile.up_phases:
        covered.extend(range(lo, hi + 1))
    if covered != list(range(1, t + 1)):
        return False
    covered = []
    for lo, hi in profile.down_phases:
        covered.extend(range(lo, hi + 1))
    if covered != list(range(0, t)):
        return False
    if sum(profile.u_counts) + sum(profile.d_counts) != t:
        return False
    for i, (lo, hi) in enumerate(profile.up_phases):
        for h in range(lo, hi + 1):
            if entries[p.one_line[h - 1] - 1] < 0 and not 0 <= walk(h) < prof.alphas[i]:
                return False
    for j, (lo, hi) in enumerate(profile.down_phases):
        for h in range(lo, hi + 1):
            if entries[p.one_line[h] - 1] > 0 and not 0 <= walk(h) < prof.betas[j]:
                return False
    return True


def phase_profile(xs: SignedList, p: GreedyPermutation) -> PhaseProfile:
    """Compute the phase windows and counts for ``p = build_pi(xs)``."""
    prof = run_profile(xs)
    t = len(xs)
    entries = xs.entries
    y = prof.y

    up_idx = [-1] * t
    for i, run in enumerate(prof.up_runs):
        for pos in run:
            up_idx[pos - 1] = i
    down_idx = [-1] * t
    for j, run in enumerate(prof.down_runs):
        for pos in run:
            down_idx[pos - 1] = j

    gammas = [0] * y
    deltas = [0] * y
    for step, pos in enumerate(p.one_line, 1):
        i = up_idx[pos - 1]
        if i >= 0 and gammas[i] == 0:
            gammas[i] = step
        j = down_idx[pos - 1]
        if j >= 0:
            deltas[j] = step  # later writes win: delta is the last such step

    up_phases = [
        (gammas[i], gammas[i + 1] - 1 if i + 1 < y else t) for i in range(y)
    ]
    down_phases = [
        (deltas[j - 1] if j > 0 else 0, deltas[j] - 1) for j in range(y)
    ]

    u_counts = []
    for lo, hi in up_phases:
        u_counts.append(
            sum(1 for h in range(lo, hi + 1) if entries[p.one_line[h - 1] - 1] < 0)
        )
    d_counts = []
    for lo, hi in down_phases:
        d_counts.append(
            sum(1 for h in range(lo, hi + 1) if entries[p.one_line[h] - 1] > 0)
        )

    profile = PhaseProfile(
        gammas=tuple(gammas),
        deltas=tuple(deltas),
        up_phases=tuple(up_phases),
        down_phases=tuple(down_phases),
        u_counts=tuple(u_counts),
        d_counts=tuple(d_counts),
    )
    assert _phase_invariants_ok(xs, p, prof, profile)
    return profile


def _lex_least_equal_pair(keyed):
    """Lexicographically least (h1, h2), h1 < h2, with equal keys.

    ``keyed`` is an iterable of (h, key) with strictly increasing h.
    Returns None when all keys are distinct.
    """
    first = {}
    best = None
    for h, k in keyed:
        if k in first:
            cand = (first[k], h)
            if best is None or cand < best:
                best = cand
        else:
            first[k] = h
    return best


def _walk(p, h):
    return 0 if h == 0 else p.running_sums[h - 1]


def _split_between(xs, p, h1, h2):
    """Part carried by steps h1+1..h2 of the reordering, as original positions."""
    d = Decomposition(frozenset(p.one_line[h1:h2]))
    assert is_valid_decomposition(xs, d.part)
    return d


def _overfull_phase_split(xs, p, prof, profile):
    """Pigeonhole split from the first phase exceeding its run maximum."""
    entries = xs.entries
    for i, (lo, hi) in enumerate(profile.up_phases):
        if profile.u_counts[i] > prof.alphas[i]:
            keyed = [
                (h, _walk(p, h))
                for h in range(lo, hi + 1)
                if entries[p.one_line[h - 1] - 1] < 0
            ]
            pair = _lex_least_equal_pair(keyed)
            assert pair is not None, "pigeonhole must fire when u_i > alpha_i"
            return _split_between(xs, p, *pair)
    for j, (lo, hi) in enumerate(profile.down_phases):
        if profile.d_counts[j] > prof.betas[j]:
            keyed = [
                (h, _walk(p, h))
                for h in range(lo, hi + 1)
                if entries[p.one_line[h] - 1] > 0
            ]
            pair = _lex_least_equal_pair(keyed)
            assert pair is not None, "pigeonhole must fire when d_j > beta_j"
            return _split_between(xs, p, *pair)
    return None


def reduce_strict(xs: SignedList) -> Decomposition:
    """Decompose a generalized Catalan list with cost < width."""
    if not is_generalized_catalan(xs) or len(xs) == 0:
        raise ValueError("input list is not a nonempty generalized Catalan list")
    if cost(xs) >= width(xs):
        raise ValueError("cost must be strictly less than width")
    p = build_pi(xs)
    prof = run_profile(xs)
    profile = phase_profile(xs, p)
    d = _overfull_phase_split(xs, p, prof, profile)
    assert d is not None, "counting identity guarantees an overfull phase"
    return d


def reduce_equality(xs: SignedList) -> Decomposition:
    """Decompose a generalized Catalan list with cost = width and > 1 peak."""
    if not is_generalized_catalan(xs) or len(xs) == 0:
        raise ValueError("input list is not a nonempty generalized Catalan list")
    prof = run_profile(xs)
    if cost(xs) != width(xs):
        raise ValueError("cost must equal width")
    if prof.y <= 1:
        raise ValueError("the list must have more than one up-run")
    p = build_pi(xs)
    profile = phase_profile(xs, p)
    d = _overfull_phase_split(xs, p, prof, profile)
    if d is not None:
        return d
    # Every phase is exactly full.  If the reordered walk returns to zero
    # inside the first up-phase, cut there; the cut is proper because the
    # first up-phase ends before step t when there is a second up-run.
    lo, hi = profile.up_phases[0]
    for h in range(lo, hi + 1):
        if _walk(p, h) == 0:
            assert h < len(xs)
            return _split_between(xs, p, 0, h)
    # Otherwise the u_1 = alpha_1 negative steps of the first up-phase have
    # running sums inside (0, alpha_1): one value short, so two collide.
    entries = xs.entries
    keyed = [
        (h, _walk(p, h))
        for h in range(lo, hi + 1)
        if entries[p.one_line[h - 1] - 1] < 0
    ]
    pair = _lex_least_equal_pair(keyed)
    assert pair is not None, "pigeonhole must fire when u_1 = alpha_1 and no zero"
    return _split_between(xs, p, *pair)


def _y1_zero_multisets(ups, downs):
    """Find a proper nonempty zero-sum value multiset of a single-peak list.

    ``ups`` are the up-run values (some strictly below their maximum) and
    ``downs`` the down-run values in order.  Sorts the up-run ascending,
    reorders greedily, and splits either at a zero running sum or at the
    first repeated running sum.  Returns (positive values, negative values).
    """
    arranged = SignedList(tuple(sorted(ups)) + tuple(downs))
    t = len(arranged)
    sig = build_sigma(arranged)
    sums = sig.running_sums
    chosen = None
    for q in range(1, t):  # running sums M_1 .. M_{t-1}
        if sums[q - 1] == 0:
            chosen = [arranged.entries[pos - 1] for pos in sig.one_line[:q]]
            break
    if chosen is None:
        pair = _lex_least_equal_pair((q, sums[q - 1]) for q in range(1, t))
        assert pair is not None, "t-1 sums over t-2 possible values must collide"
        q1, q2 = pair
        chosen = [arranged.entries[pos - 1] for pos in sig.one_line[q1:q2]]
    return [v for v in chosen if v > 0], [v for v in chosen if v < 0]


def _leftmost_positions(xs, values):
    """Positions realizing a multiset of values, leftmost occurrences first."""
    need = {}
    for v in values:
        need[v] = need.get(v, 0) + 1
    part = set()
    for pos, e in enumerate(xs.entries, 1):
        if need.get(e, 0) > 0:
            need[e] -= 1
            part.add(pos)
    assert all(c == 0 for c in need.values()), "values must occur in the list"
    return frozenset(part)


def reduce_y1(xs: SignedList) -> ReduceOutcome:
    """Decide a generalized Catalan list with cost = width and a single peak.

    Any sublist of a single-peak list keeps all positives before all
    negatives, so being generalized Catalan is the same as having zero sum;
    decompositions are therefore value multisets and position choices inside
    each run are free (leftmost occurrences are used).
    """
    if not is_generalized_catalan(xs) or len(xs) == 0:
        raise ValueError("input list is not a nonempty generalized Catalan list")
    prof = run_profile(xs)
    if cost(xs) != width(xs):
        raise ValueError("cost must equal width")
    if prof.y != 1:
        raise ValueError("the list must have exactly one up-run")
    entries = xs.entries
    ups = [entries[pos - 1] for pos in prof.up_runs[0]]
    downs = [entries[pos - 1] for pos in prof.down_runs[0]]
    alpha, beta = prof.alphas[0], prof.betas[0]

    if any(v < alpha for v in ups):
        pos_vals, neg_vals = _y1_zero_multisets(ups, downs)
    elif any(v > -beta for v in downs):
        # Mirror the list (reverse and negate): its up-run is the negated
        # down-run, whose minimum is now below the maximum.
        mirror_ups = [-v for v in reversed(downs)]
        mirror_downs = [-v for v in reversed(ups)]
        mirror_pos, mirror_neg = _y1_zero_multisets(mirror_ups, mirror_downs)
        pos_vals = [-v for v in mirror_neg]
        neg_vals = [-v for v in mirror_pos]
    else:
        # All entries are alpha or -beta; cost = width then forces exactly
        # beta positive and alpha negative entries.
        g = math.gcd(alpha, beta)
        if g == 1:
            return Irreducible(alpha, beta, len(ups), len(downs))
        pos_vals = [alpha] * (beta // g)
        neg_vals = [-beta] * (alpha // g)

    d = Decomposition(_leftmost_positions(xs, pos_vals + neg_vals))
    assert is_valid_decomposition(xs, d.part)
    return d


def reduce(xs: SignedList, search_limit: int = DEFAULT_SEARCH_LIMIT) -> ReduceOutcome:
    """Decide reducibility of a nonempty generalized Catalan list.

    Dispatches on cost versus width; the cost > width regime has no
    structural criterion and is settled by exhaustive search when the width
    is at most ``search_limit``, otherwise :class:`Undecided` is returned.
    """
    if len(xs) == 0:
        raise ValueError("cannot reduce an empty list")
    if not is_generalized_catalan(xs):
        raise ValueError("input list is not generalized Catalan")
    c, w = cost(xs), width(xs)
    if c < w:
        return reduce_strict(xs)
    prof = run_profile(xs)
    if c == w:
        return reduce_equality(xs) if prof.y > 1 else reduce_y1(xs)
    if w > search_limit:
        return Undecided(width=w, limit=search_limit)
    from .oracle import SearchBudget, reducible_bruteforce

    found = reducible_bruteforce(xs, SearchBudget(max_width=w))
    if found is not None:
        return found
    n_up = sum(1 for e in xs if e > 0)
    return Irreducible(prof.alphas[0], prof.betas[0], n_up, len(xs) - n_up)
