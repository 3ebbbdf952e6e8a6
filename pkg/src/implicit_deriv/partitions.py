"""One- and two-dimensional integer partitions.

A two-dimensional partition is a multiset of parts (i, j), where i and j are
non-negative integers not both zero, kept as a lexicographically non-increasing
sequence.  The partitions indexing the implicit-derivative expansion of order n
("formula partitions") are those whose first coordinates sum to n, whose second
coordinates sum to one less than the number of parts, and which avoid the part
(0, 1).

One-dimensional partitions are represented as plain non-increasing tuples of
positive integers.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import factorial, prod
from typing import Iterable, Iterator

Part = tuple[int, int]


def lex_compare(a: Part, b: Part) -> int:
    """Compare two parts lexicographically: first coordinate, then second.

    Returns -1, 0 or 1.  This is the plain tuple ordering; the function exists
    to give the ordering rule a testable name.
    """
    if a == b:
        return 0
    return 1 if a > b else -1


def _validate_part(part: Part) -> Part:
    i, j = part
    if i < 0 or j < 0 or (i, j) == (0, 0):
        raise ValueError(f"invalid part {part!r}: coordinates must be "
                         "non-negative and not both zero")
    return (i, j)


class Partition2D:
    """A two-dimensional partition: canonically sorted multiset of parts.

    Construction canonicalizes (sorts non-increasing) and validates the parts.
    Instances are immutable values; all derived quantities (coordinate sums,
    multiplicities) are computed from the part sequence.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[Part]):
        items = [_validate_part((int(i), int(j))) for i, j in parts]
        if not items:
            raise ValueError("a partition needs at least one part")
        self._parts = tuple(sorted(items, reverse=True))

    @classmethod
    def _from_sorted(cls, parts: tuple[Part, ...]) -> "Partition2D":
        # Fast path for enumerators that already produce canonical sequences.
        self = object.__new__(cls)
        self._parts = parts
        return self

    @property
    def parts(self) -> tuple[Part, ...]:
        return self._parts

    @property
    def x_sum(self) -> int:
        """Sum of the first coordinates."""
        return sum(i for i, _ in self._parts)

    @property
    def y_sum(self) -> int:
        """Sum of the second coordinates."""
        return sum(j for _, j in self._parts)

    @property
    def size(self) -> int:
        """Number of parts, counted with multiplicity."""
        return len(self._parts)

    def multiplicity(self, i: int, j: int) -> int:
        """Number of occurrences of the part (i, j)."""
        return self._parts.count((i, j))

    def multiplicities(self) -> dict[Part, int]:
        """Multiplicity table, keyed by part in canonical (descending) order."""
        return dict(Counter(self._parts))

    def is_formula_partition(self) -> bool:
        """True when this partition indexes a term of the derivative formula
        of order ``x_sum``: second coordinates sum to size - 1 and (0, 1) is
        not a part."""
        return self.y_sum == self.size - 1 and (0, 1) not in self

    def remove(self, *parts: Part) -> "Partition2D":
        """Partition with one copy of each listed part removed.

        Raises ValueError if a part is absent or nothing would remain.
        """
        remaining = list(self._parts)
        for part in parts:
            try:
                remaining.remove(part)
            except ValueError:
                raise ValueError(f"part {part!r} not present in {self}") from None
        if not remaining:
            raise ValueError("removal would leave an empty partition")
        return Partition2D._from_sorted(tuple(remaining))

    def add(self, *parts: Part) -> "Partition2D":
        """Partition with the listed parts adjoined."""
        return Partition2D(self._parts + tuple(parts))

    def to_json(self) -> list[list[int]]:
        """Serialize as a list of [i, j] pairs in canonical order."""
        return [[i, j] for i, j in self._parts]

    @classmethod
    def from_json(cls, pairs: Iterable[Iterable[int]]) -> "Partition2D":
        return cls(tuple(pair) for pair in pairs)

    def __contains__(self, part: Part) -> bool:
        return part in self._parts

    def __iter__(self) -> Iterator[Part]:
        return iter(self._parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition2D):
            return NotImplemented
        return self._parts == other._parts

    def __lt__(self, other: "Partition2D") -> bool:
        return self._parts < other._parts

    def __le__(self, other: "Partition2D") -> bool:
        return self._parts <= other._parts

    def __gt__(self, other: "Partition2D") -> bool:
        return self._parts > other._parts

    def __ge__(self, other: "Partition2D") -> bool:
        return self._parts >= other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __str__(self) -> str:
        pieces = []
        for part, count in Counter(self._parts).items():
            text = f"({part[0]},{part[1]})"
            pieces.append(text if count == 1 else f"{text}^{count}")
        return "+".join(pieces)

    def __repr__(self) -> str:
        return f"Partition2D({list(self._parts)!r})"


def lower_x(p: Partition2D, i: int, j: int) -> Partition2D:
    """Move one copy of the part (i, j) to (i - 1, j).

    Defined for i > 0, j >= 0, (i, j) != (1, 0) and (i, j) present in p; the
    excluded case would create the empty part (0, 0).  The number of parts is
    preserved; the first-coordinate sum drops by one.
    """
    if i <= 0 or j < 0 or (i, j) == (1, 0):
        raise ValueError(f"lower_x undefined for part ({i},{j})")
    if p.multiplicity(i, j) == 0:
        raise ValueError(f"part ({i},{j}) not present in {p}")
    remaining = list(p.parts)
    remaining.remove((i, j))
    remaining.append((i - 1, j))
    return Partition2D(remaining)


def lower_y(p: Partition2D, i: int, j: int) -> Partition2D:
    """Move one copy of the part (i, j) to (i, j - 1).

    Defined for i >= 0, j > 0, (i, j) != (0, 1) and (i, j) present in p.  The
    number of parts is preserved; the second-coordinate sum drops by one.
    """
    if i < 0 or j <= 0 or (i, j) == (0, 1):
        raise ValueError(f"lower_y undefined for part ({i},{j})")
    if p.multiplicity(i, j) == 0:
        raise ValueError(f"part ({i},{j}) not present in {p}")
    remaining = list(p.parts)
    remaining.remove((i, j))
    remaining.append((i, j - 1))
    return Partition2D(remaining)


def partitions_1d(n: int, max_part: int | None = None) -> list[tuple[int, ...]]:
    """All partitions of n into positive parts, non-increasing, in descending
    lexicographic order.  partitions_1d(0) is [()]."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    result: list[tuple[int, ...]] = []
    for first in range(min(max_part, n), 0, -1):
        for rest in partitions_1d(n - first, first):
            result.append((first,) + rest)
    return result


def partitions_2d(n: int, m: int) -> list[Partition2D]:
    """All two-dimensional partitions with first coordinates summing to n and
    second coordinates summing to m, in descending lexicographic order."""
    if n < 0 or m < 0:
        raise ValueError("coordinate sums must be non-negative")
    if n == 0 and m == 0:
        raise ValueError("(0, 0) has no partitions: parts are non-zero")
    result: list[Partition2D] = []
    chosen: list[Part] = []

    def descend(bound_i: int, bound_j: int, rx: int, ry: int) -> None:
        if rx == 0 and ry == 0:
            result.append(Partition2D._from_sorted(tuple(chosen)))
            return
        for i in range(min(bound_i, rx), 0, -1):
            j_top = min(ry, bound_j) if i == bound_i else ry
            for j in range(j_top, -1, -1):
                chosen.append((i, j))
                descend(i, j, rx - i, ry - j)
                chosen.pop()
        if rx == 0:
            j_top = min(ry, bound_j) if bound_i == 0 else ry
            for j in range(j_top, 0, -1):
                chosen.append((0, j))
                descend(0, j, 0, ry - j)
                chosen.pop()

    descend(n, m, n, m)
    return result


def formula_partitions(n: int) -> list[Partition2D]:
    """The partitions indexing the order-n derivative expansion, in descending
    lexicographic order.

    These are the two-dimensional partitions with first coordinates summing to
    n, second coordinates summing to (number of parts) - 1, and (0, 1) not a
    part.  Every such partition has at most 2n - 1 parts.

    The walk places parts in non-increasing order, tracking the remaining
    first-coordinate weight rx and the remaining value `deficit` that the sum
    of (j - 1) over the still-unplaced parts must reach (the second-coordinate
    constraint rewritten per part).  Parts with i = 0 must have j >= 2 and can
    only raise the deficit, so they are placed only once rx is exhausted.
    """
    if n < 1:
        raise ValueError("derivative order must be >= 1")
    result: list[Partition2D] = []
    chosen: list[Part] = []

    def descend(bound_i: int, bound_j: int, rx: int, deficit: int) -> None:
        if rx == 0 and deficit == 0:
            result.append(Partition2D._from_sorted(tuple(chosen)))
            return
        for i in range(min(bound_i, rx), 0, -1):
            # j - 1 may not exceed what later parts can compensate: each of
            # the at most rx - i remaining x-carrying parts contributes >= -1.
            j_top = deficit + rx - i + 1
            if i == bound_i:
                j_top = min(j_top, bound_j)
            for j in range(j_top, -1, -1):
                chosen.append((i, j))
                descend(i, j, rx - i, deficit - (j - 1))
                chosen.pop()
        if rx == 0:
            j_top = deficit + 1
            if bound_i == 0:
                j_top = min(j_top, bound_j)
            for j in range(j_top, 1, -1):
                chosen.append((0, j))
                descend(0, j, 0, deficit - (j - 1))
                chosen.pop()

    descend(n, n, n, -1)
    return result


def faa_di_bruno_coefficient(parts: Iterable[int]) -> int:
    """Weight of a one-dimensional partition in the higher chain rule.

    For a partition of n this is n! divided by the product of the part
    factorials and the multiplicity factorials; it counts the set partitions
    of an n-element set whose block sizes realize the given parts.
    """
    items = tuple(int(k) for k in parts)
    if not items or any(k < 1 for k in items):
        raise ValueError("parts must be positive integers")
    n = sum(items)
    denominator = prod(factorial(k) for k in items)
    denominator *= prod(factorial(e) for e in Counter(items).values())
    value = Fraction(factorial(n), denominator)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral chain-rule weight for {items}")
    return int(value)


def partition_coefficient(p: Partition2D) -> int:
    """Weight of a two-dimensional partition: the bivariate analogue of the
    chain-rule coefficient.

    With n and m the coordinate sums, this is n! * m! divided by the product
    of i! * j! over the parts and the factorials of the multiplicities.  The
    value is computed as an exact rational and checked to be an integer, which
    holds empirically but is asserted rather than assumed.
    """
    numerator = factorial(p.x_sum) * factorial(p.y_sum)
    denominator = prod(factorial(i) * factorial(j) for i, j in p.parts)
    denominator *= prod(factorial(e) for e in p.multiplicities().values())
    value = Fraction(numerator, denominator)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral partition weight for {p}")
    return int(value)
