"""Stirling numbers of the first kind and the rational triangle F built on them.

F(n, k) is the sum of 1/(i_1 * ... * i_k) over all ordered ways of writing n
as k positive parts; equivalently k!/n! times |s(n, k)|. The production route
is a two-term recurrence filling the triangle row by row; four further routes
(direct enumeration, the Stirling quotient, a subset sum, and a partial-sum
recurrence) recompute single entries so that each can serve as an oracle for
the others. The denominators of F form the d-table that the headline
constants are folded from.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Iterator

from .exact_arith import EnumerationCapError, denominator_of
from .triangles import IntegerTriangle, RationalTriangle, StirlingTable

# Direct enumeration walks all C(n-1, k-1) compositions per entry, so it is
# reserved for oracle duty at small n.
DEFAULT_ENUM_CAP = 22


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``parts`` positive integers summing to ``total``."""
    if parts < 0 or total < 0:
        return
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _check_cap(what: str, n: int, cap: int | None) -> None:
    limit = DEFAULT_ENUM_CAP if cap is None else cap
    if n > limit:
        raise EnumerationCapError(what, n, limit)


def stirling_first(max_n: int) -> StirlingTable:
    """Triangle of Stirling numbers of the first kind up to row max_n.

    Built from s(0, 0) = 1 by s(n+1, k) = s(n, k-1) - n*s(n, k).
    """
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    rows = [[1]]
    for n in range(max_n):
        prev = rows[-1]
        rows.append(
            [
                (prev[k - 1] if 1 <= k <= n + 1 else 0) - n * (prev[k] if k <= n else 0)
                for k in range(n + 2)
            ]
        )
    return StirlingTable(rows)


def f_table(max_n: int) -> RationalTriangle:
    """The F triangle up to row max_n by its two-term recurrence.

    F(0, 0) = 1 and F(n, 0) = 0 for n >= 1; each later entry is
    F(n+1, k) = k/(n+1) * F(n, k-1) + n/(n+1) * F(n, k).
    """
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    rows = [[Fraction(1)]]
    for n in range(max_n):
        prev = rows[-1]
        row = [Fraction(0)]
        for k in range(1, n + 2):
            entry = Fraction(k, n + 1) * prev[k - 1]
            if k <= n:
                entry += Fraction(n, n + 1) * prev[k]
            row.append(entry)
        rows.append(row)
    return RationalTriangle(rows)


def f_direct(n: int, k: int, cap: int | None = None) -> Fraction:
    """F(n, k) by brute force: sum 1/(product of parts) over compositions."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got ({n}, {k})")
    _check_cap("direct composition sum", n, cap)
    total = Fraction(0)
    for parts in compositions(n, k):
        total += Fraction(1, math.prod(parts))
    return total


def f_from_stirling(n: int, k: int, table: StirlingTable) -> Fraction:
    """F(n, k) as k!/n! times the absolute Stirling number."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got ({n}, {k})")
    if n > table.max_n:
        raise ValueError(f"Stirling table covers rows up to {table.max_n}, need {n}")
    return Fraction(math.factorial(k), math.factorial(n)) * abs(table[n, k])


def f_from_subsets(n: int, k: int, cap: int | None = None) -> Fraction:
    """F(n, k) for k >= 2 as k!/n times a sum over (k-1)-subsets of 1..n-1.

    Each subset {i_1 < ... < i_{k-1}} contributes 1/(i_1 * ... * i_{k-1}).
    """
    if k < 2:
        raise ValueError(f"the subset formula needs k >= 2, got k = {k}")
    if k > n:
        raise ValueError(f"need k <= n, got ({n}, {k})")
    _check_cap("subset reciprocal sum", n, cap)
    total = Fraction(0)
    for subset in itertools.combinations(range(1, n), k - 1):
        total += Fraction(1, math.prod(subset))
    return Fraction(math.factorial(k), n) * total


def f_from_partial_sums(n: int, k: int, table: RationalTriangle) -> Fraction:
    """F(n, k) for 1 <= k <= n as k/n times the partial column sum
    of F(m, k-1) over k-1 <= m <= n-1."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got ({n}, {k})")
    if table.max_n < n - 1:
        raise ValueError(f"table covers rows up to {table.max_n}, need {n - 1}")
    return Fraction(k, n) * sum(
        (table[m, k - 1] for m in range(k - 1, n)), Fraction(0)
    )


def d_table(f: RationalTriangle) -> IntegerTriangle:
    """Elementwise denominators of the F triangle (den of 0 and 1 is 1)."""
    return IntegerTriangle(
        [[denominator_of(entry) for entry in row] for row in f.rows],
        label="d-table",
    )
