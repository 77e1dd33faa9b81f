"""Exhaustive ground-truth engines for small instances.

Everything here trades speed for transparent correctness: plain enumerations
in a fixed deterministic (lexicographic) order, guarded by explicit budgets.
"""
from __future__ import annotations

from dataclasses import dataclass

from .catalan import Decomposition, SignedList
from .kostka import KostkaPair, Partition, dominates


@dataclass(frozen=True, slots=True)
class SearchBudget:
    """Hard limits for the exhaustive searches."""

    max_width: int = 24
    max_pair_size: int = 12

    def __post_init__(self) -> None:
        if self.max_width < 1 or self.max_pair_size < 1:
            raise ValueError("budget bounds must be positive")


class BudgetExceededError(RuntimeError):
    """An exhaustive search was asked to exceed its budget."""


def reducible_bruteforce(xs: SignedList, budget: SearchBudget | None = None):
    """First valid decomposition in lexicographic order of position sets,
    or None when the list is irreducible.

    Subsets whose chosen prefix already dips below zero are skipped along
    with their extensions; that cannot hide a witness since such a prefix
    invalidates every superset.
    """
    budget = budget or SearchBudget()
    t = len(xs)
    if t > budget.max_width:
        raise BudgetExceededError(f"width {t} exceeds the budget {budget.max_width}")
    entries = xs.entries
    in_part = [False] * (t + 1)

    def complement_ok():
        s = 0
        for pos in range(1, t + 1):
            if not in_part[pos]:
                s += entries[pos - 1]
                if s < 0:
                    return False
        return s == 0

    def search(start, running, chosen):
        for nxt in range(start, t + 1):
            s = running + entries[nxt - 1]
            if s < 0:
                continue
            chosen.append(nxt)
            in_part[nxt] = True
            if s == 0 and len(chosen) < t and complement_ok():
                return tuple(chosen)
            found = search(nxt + 1, s, chosen)
            if found is not None:
                return found
            in_part[nxt] = False
            chosen.pop()
        return None

    witness = search(1, 0, [])
    return Decomposition(frozenset(witness)) if witness is not None else None


def all_catalan_subsets(
    xs: SignedList, budget: SearchBudget | None = None
) -> list[tuple[int, ...]]:
    """Every position set (including the empty one) whose sublist is
    generalized Catalan, in lexicographic order."""
    budget = budget or SearchBudget()
    t = len(xs)
    if t > budget.max_width:
        raise BudgetExceededError(f"width {t} exceeds the budget {budget.max_width}")
    entries = xs.entries
    out = [()]

    def search(start, running, chosen):
        for nxt in range(start, t + 1):
            s = running + entries[nxt - 1]
            if s < 0:
                continue
            chosen.append(nxt)
            if s == 0:
                out.append(tuple(chosen))
            search(nxt + 1, s, chosen)
            chosen.pop()

    search(1, 0, [])
    return out


def _subpartitions(parts):
    """All componentwise-bounded weakly decreasing tuples, lexicographic."""
    out = []

    def rec(i, prev, acc):
        if i == len(parts):
            out.append(tuple(acc))
            return
        for v in range(0, min(parts[i], prev) + 1):
            acc.append(v)
            rec(i + 1, v, acc)
            acc.pop()

    rec(0, parts[0] if parts else 0, [])
    return out


def kostka_reducible_bruteforce(kp: KostkaPair, budget: SearchBudget | None = None):
    """First componentwise decomposition of the pair into two valid
    nontrivial pairs, or None.

    Unlike a column split, the two summands need not come from a common set
    of columns; this is the weaker notion used for the Hilbert basis.
    """
    budget = budget or SearchBudget()
    n = kp.size
    if n > budget.max_pair_size:
        raise BudgetExceededError(f"size {n} exceeds the budget {budget.max_pair_size}")
    lam, mu, r = kp.lam.parts, kp.mu.parts, kp.r

    mu_subs_by_size: dict[int, list[tuple[int, ...]]] = {}
    for ms in _subpartitions(mu):
        rest = tuple(a - b for a, b in zip(mu, ms))
        if any(rest[i] < rest[i + 1] for i in range(len(rest) - 1)):
            continue
        mu_subs_by_size.setdefault(sum(ms), []).append(ms)

    for ls in _subpartitions(lam):
        s = sum(ls)
        if s == 0 or s == n:
            continue
        lam_rest = tuple(a - b for a, b in zip(lam, ls))
        if any(lam_rest[i] < lam_rest[i + 1] for i in range(len(lam_rest) - 1)):
            continue
        for ms in mu_subs_by_size.get(s, ()):
            left_lam, left_mu = Partition(ls), Partition(ms)
            if not dominates(left_lam, left_mu):
                continue
            rest_lam = Partition(lam_rest)
            rest_mu = Partition(tuple(a - b for a, b in zip(mu, ms)))
            if not dominates(rest_lam, rest_mu):
                continue
            return (
                KostkaPair(left_lam, left_mu, r),
                KostkaPair(rest_lam, rest_mu, r),
            )
    return None


def _partitions_of(n, max_len, max_part=None):
    """All partitions of n with at most max_len parts, as tuples."""
    if max_part is None:
        max_part = n
    out = []

    def rec(remaining, bound, length, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if length == max_len:
            return
        for v in range(min(bound, remaining), 0, -1):
            acc.append(v)
            rec(remaining - v, v, length + 1, acc)
            acc.pop()

    rec(n, max_part, 0, [])
    return out


def enumerate_hilbert_basis(
    r: int, n_max: int, budget: SearchBudget | None = None
) -> list[KostkaPair]:
    """All componentwise-irreducible pairs in r rows with size up to n_max,
    sorted lexicographically.

    Desk-scale only: r is capped at 4 and n_max by the pair-size budget.
    """
    budget = budget or SearchBudget()
    if r < 1 or r > 4:
        raise BudgetExceededError("row bound must be between 1 and 4")
    if n_max > budget.max_pair_size:
        raise BudgetExceededError(
            f"size bound {n_max} exceeds the budget {budget.max_pair_size}"
        )
    basis = []
    for n in range(1, n_max + 1):
        shapes = [Partition(p) for p in _partitions_of(n, r)]
        for lam in shapes:
            for mu in shapes:
                if not dominates(lam, mu):
                    continue
                pair = KostkaPair(lam, mu, r)
                if kostka_reducible_bruteforce(pair, budget) is None:
                    basis.append(pair)
    basis.sort(key=lambda kp: (kp.lam.parts, kp.mu.parts))
    return basis
