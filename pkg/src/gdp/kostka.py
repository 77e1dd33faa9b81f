"""Partitions, dominance order, and common reducibility of Kostka pairs.

A *Kostka pair* is a pair of partitions (lambda, mu) of equal size fitting in
``r`` rows with lambda dominating mu.  Such a pair is *commonly reducible*
when some proper nonempty set of columns C of the Young diagrams splits it:
restricting both partitions to C and to the complementary columns must give
two valid pairs again.

The bridge to lattice walks: the column vector x_j = mu'_j - lambda'_j
(conjugates, 1 <= j <= lambda_1) sums to zero, and its prefix sums are
nonnegative exactly when lambda dominates mu.  A zero column already splits
the pair on its own; otherwise the column vector is a signed list whose
decompositions are exactly the column splits, so the reducer decides the
question constructively.
"""
from __future__ import annotations

from dataclasses import dataclass
from operator import index as _as_int

from .catalan import Decomposition, SignedList, ParseError
from .reducer import DEFAULT_SEARCH_LIMIT, Irreducible, reduce


@dataclass(frozen=True, slots=True)
class Partition:
    """Weakly decreasing nonnegative integers; trailing zeros are accepted
    at construction and stripped."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(_as_int(v) for v in self.parts)
        for i, v in enumerate(parts):
            if v < 0:
                raise ValueError(f"part {i + 1} is negative")
            if i and parts[i - 1] < v:
                raise ValueError(f"parts must be weakly decreasing (part {i + 1})")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return len(self.parts)

    @property
    def first(self) -> int:
        """Largest part (0 for the empty partition)."""
        return self.parts[0] if self.parts else 0

    def row(self, i: int) -> int:
        """i-th part, 1-based, 0 beyond the last nonzero part."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        return self.parts + (0,) * (n - len(self.parts))

    def rectangle(self) -> tuple[int, int] | None:
        """(rows, columns) when all nonzero parts are equal, else None."""
        if not self.parts or any(v != self.parts[0] for v in self.parts):
            return None
        return (len(self.parts), self.parts[0])

    @classmethod
    def parse(cls, text: str) -> "Partition":
        stripped = text.strip()
        if not stripped:
            raise ParseError("empty input: expected a partition")
        values = []
        for pos, tok in enumerate(stripped.replace(",", " ").split(), 1):
            try:
                values.append(int(tok))
            except ValueError:
                raise ParseError(f"part {pos}: {tok!r} is not an integer") from None
        try:
            return cls(tuple(values))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def format(self) -> str:
        return ",".join(str(v) for v in self.parts) if self.parts else "0"


def conjugate(p: Partition) -> Partition:
    """Transpose of the Young diagram: row j of the result counts the parts
    of size at least j."""
    if not p.parts:
        return Partition()
    return Partition(
        tuple(sum(1 for v in p.parts if v >= j) for j in range(1, p.parts[0] + 1))
    )


def dominates(a: Partition, b: Partition) -> bool:
    """True iff every prefix sum of ``a`` is at least that of ``b``.

    Only defined for equal sizes (ValueError otherwise).
    """
    if a.size != b.size:
        raise ValueError("dominance compares partitions of equal size")
    sa = sb = 0
    for i in range(1, max(a.length, b.length) + 1):
        sa += a.row(i)
        sb += b.row(i)
        if sa < sb:
            return False
    return True


@dataclass(frozen=True, slots=True)
class KostkaPair:
    """A dominance-ordered pair of equal-size partitions in ``r`` rows.

    ``r`` defaults to the larger of the two lengths.
    """

    lam: Partition
    mu: Partition
    r: int | None = None

    def __post_init__(self) -> None:
        r = self.r
        if r is None:
            r = max(self.lam.length, self.mu.length)
        else:
            r = _as_int(r)
        object.__setattr__(self, "r", r)
        if self.lam.length > r or self.mu.length > r:
            raise ValueError(f"pair does not fit in {r} rows")
        if self.lam.size != self.mu.size:
            raise ValueError("partitions must have equal size")
        if not dominates(self.lam, self.mu):
            raise ValueError("first partition must dominate the second")

    @property
    def size(self) -> int:
        return self.lam.size

    def format(self) -> str:
        return f"{self.lam.format()} / {self.mu.format()}"


@dataclass(frozen=True, slots=True)
class ColumnSplit:
    """Columns C witnessing common reducibility: both (lambda, mu) restricted
    to C and to the complement are valid nontrivial pairs."""

    columns: frozenset[int]


@dataclass(frozen=True, slots=True)
class KostkaIrreducible:
    """Certificate that no column split exists.

    When the pair satisfies lambda_1 >= length(mu) this forces both
    partitions to be rectangles with coprime widths; the rectangle fields
    are (rows, columns), or None when a partition is not a rectangle.
    """

    alpha1: int | None
    beta1: int | None
    lam_rect: tuple[int, int] | None
    mu_rect: tuple[int, int] | None


def column_vector(kp: KostkaPair) -> tuple[int, ...]:
    """Per-column conjugate differences mu'_j - lambda'_j for j in [lambda_1].

    Sums to zero; all prefix sums are nonnegative (zeros may occur)."""
    n = kp.lam.first
    lc = conjugate(kp.lam).padded(n)
    mc = conjugate(kp.mu).padded(n)
    return tuple(m - l for l, m in zip(lc, mc))


def _column_rows(p: Partition, cols) -> Partition:
    """Row counts over a column set; columns wider than the partition simply
    contribute no cells."""
    return Partition(tuple(sum(1 for c in cols if c <= v) for v in p.parts))


def restrict_columns(p: Partition, columns) -> Partition:
    """Partition formed by the given columns: row i counts the chosen columns
    of width at most p_i."""
    cols = frozenset(_as_int(c) for c in columns)
    for c in cols:
        if not 1 <= c <= p.first:
            raise ValueError(f"column {c} out of range for largest part {p.first}")
    return _column_rows(p, cols)


def verify_column_split(kp: KostkaPair, columns) -> bool:
    """True iff the columns split the pair into two valid nontrivial pairs.

    Columns live in [lambda_1]; the narrower partition is unaffected by its
    empty columns.
    """
    n = kp.lam.first
    full = frozenset(range(1, n + 1))
    cols = frozenset(_as_int(c) for c in columns)
    if not cols or not cols < full:
        return False
    for side in (cols, full - cols):
        lam_side = _column_rows(kp.lam, side)
        mu_side = _column_rows(kp.mu, side)
        if lam_side.size != mu_side.size or lam_side.size == 0:
            return False
        if not dominates(lam_side, mu_side):
            return False
    return True


def split_pair(kp: KostkaPair, columns) -> tuple[KostkaPair, KostkaPair]:
    """Both restricted pairs for a valid column split (ValueError otherwise)."""
    if not verify_column_split(kp, columns):
        raise ValueError("columns do not form a valid split of the pair")
    cols = frozenset(_as_int(c) for c in columns)
    rest = frozenset(range(1, kp.lam.first + 1)) - cols
    return (
        KostkaPair(_column_rows(kp.lam, cols), _column_rows(kp.mu, cols), kp.r),
        KostkaPair(_column_rows(kp.lam, rest), _column_rows(kp.mu, rest), kp.r),
    )


def common_reduce(
    kp: KostkaPair, search_limit: int = DEFAULT_SEARCH_LIMIT
) -> ColumnSplit | KostkaIrreducible:
    """Find a column split of a nonempty pair, or certify none exists.

    A zero column of the column vector splits on its own (the lowest such
    column is returned).  Otherwise the column vector is a zero-free signed
    list whose decompositions are exactly the column splits, and the reducer
    settles it.  A split always exists when lambda_1 > length(mu), and when
    lambda_1 = length(mu) unless both partitions are rectangles with coprime
    widths.
    """
    if kp.size < 1:
        raise ValueError("the pair must have at least one cell")
    n = kp.lam.first
    if n == 1:
        # Single-column pairs (lambda = mu, one column) have no proper
        # nonempty column subset.
        return KostkaIrreducible(None, None, kp.lam.rectangle(), kp.mu.rectangle())
    vec = column_vector(kp)
    for j, v in enumerate(vec, 1):
        if v == 0:
            split = ColumnSplit(frozenset({j}))
            assert verify_column_split(kp, split.columns)
            return split
    outcome = reduce(SignedList(vec), search_limit)
    if isinstance(outcome, Decomposition):
        split = ColumnSplit(outcome.part)  # zero-free: positions are columns
        assert verify_column_split(kp, split.columns)
        return split
    if isinstance(outcome, Irreducible):
        return KostkaIrreducible(
            outcome.alpha1, outcome.beta1, kp.lam.rectangle(), kp.mu.rectangle()
        )
    from .oracle import BudgetExceededError

    raise BudgetExceededError(
        f"column vector width {n} exceeds the search limit {search_limit}"
    )
