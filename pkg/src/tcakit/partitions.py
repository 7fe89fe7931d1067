"""Partitions, integer weights and the enumerations built on them.

A :class:`Partition` is a trimmed, weakly decreasing tuple of positive
integers; it compares and hashes like the underlying tuple, so it can be used
directly as a dictionary key.  A :class:`Weight` is an arbitrary finite integer
sequence whose length is significant (trailing zeros are kept).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """Weakly decreasing sequence of nonnegative integers, trailing zeros removed."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be nonnegative: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part, 1-based, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self) > n:
            raise ValueError(f"{list(self)} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def transpose(self) -> "Partition":
        return transpose(self)

    def contains(self, other: Sequence[int]) -> bool:
        """True iff the Young diagram of ``other`` sits inside this one."""
        if len(other) > len(self):
            return False
        return all(o <= s for o, s in zip(other, self))


class Weight(tuple):
    """Finite integer sequence of a fixed declared length."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        return super().__new__(cls, (int(x) for x in entries))

    def __repr__(self) -> str:
        return f"Weight({list(self)})"

    @property
    def is_dominant(self) -> bool:
        return all(a >= b for a, b in zip(self, self[1:]))


@dataclass(frozen=True)
class TailedWeight:
    """The eventually-zero weight ``(entries..., 0, 0, ...)``.

    ``window`` is the declared finite part: the head length plus the length of
    the partition appended to it.
    """

    entries: tuple[int, ...]
    window: int

    def truncate(self, length: int) -> Weight:
        if length < len(self.entries):
            raise ValueError("cannot truncate inside the nonzero prefix")
        return Weight(self.entries + (0,) * (length - len(self.entries)))

    def __getitem__(self, i: int) -> int:
        return self.entries[i] if i < len(self.entries) else 0


def transpose(p: Sequence[int]) -> Partition:
    """Conjugate partition: the i-th part counts the parts of ``p`` that are >= i."""
    p = Partition(p)
    if not p:
        return p
    return Partition(sum(1 for x in p if x >= i) for i in range(1, p[0] + 1))


def concat_weight(head: Sequence[int], mu: Sequence[int]) -> TailedWeight:
    mu = Partition(mu)
    entries = tuple(int(x) for x in head) + tuple(mu)
    return TailedWeight(entries, len(head) + len(mu))


def fits_rectangle(p: Sequence[int], rows: int, cols: int) -> bool:
    p = Partition(p)
    return len(p) <= rows and (not p or p[0] <= cols)


def sort_key(p: Sequence[int]) -> tuple:
    """Canonical order: ascending size, then reverse lexicographic."""
    return (sum(p), tuple(-x for x in p))


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int, max_len: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    if max_len == 0 or max_part == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first, max_len - 1):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> list[Partition]:
    """All partitions of ``n`` with optional bounds, in reverse lexicographic order."""
    if n < 0:
        return []
    max_part = n if max_part is None else max_part
    max_len = n if max_len is None else max_len
    return [Partition(p) for p in _partitions(n, max_part, max_len)]


def partitions_up_to(size: int, max_len: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of size 0..size in canonical order."""
    for n in range(size + 1):
        yield from partitions_of(n, max_part=max_part, max_len=max_len)


def rectangle_partitions(rows: int, cols: int) -> list[Partition]:
    """Partitions inside the rows x cols box, canonically ordered."""
    return list(partitions_up_to(rows * cols, max_len=rows, max_part=cols))


def parse_partition(text: str) -> Partition:
    """Parse a literal such as ``[3,1,1]``; ``[]`` is the empty partition."""
    return Partition(_parse_int_list(text, "partition"))


def parse_weight(text: str) -> Weight:
    return Weight(_parse_int_list(text, "weight"))


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed {what} literal {text!r}: {exc.msg}") from None
    if not isinstance(value, list):
        raise ValueError(f"malformed {what} literal {text!r}: expected a list like [3,1,1]")
    for tok in value:
        if isinstance(tok, bool) or not isinstance(tok, int):
            raise ValueError(f"malformed {what} literal {text!r}: bad token {json.dumps(tok)}")
    if what == "partition":
        for tok in value:
            if tok < 0:
                raise ValueError(f"malformed partition literal {text!r}: negative token {tok}")
        for a, b in zip(value, value[1:]):
            if b > a:
                raise ValueError(f"malformed partition literal {text!r}: token {b} exceeds preceding {a}")
    return value
