#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.

Splitting types of vector bundles on the projective line and their arithmetic:
the dominance order, dimensions of spaces of maps and the balanced tuples used
to build stable pairs.
"""
import logging
from typing import Iterable, Iterator, Optional, Sequence
from util.config import resolve_guard_limit
from util.errors import CrossCheckError, GuardExceededError, PreconditionError

log = logging.getLogger(__name__)


class SplittingType:
    """
    The bundle O(f_1) + ... + O(f_r) represented by its weakly increasing twists.
    Any iterable of integers is accepted and sorted, so two orderings of the same
    multiset are the same splitting type. Indexing with [] is 0-based, entry() is
    1-based as in the formulas.
    """
    __slots__ = ('_entries',)

    def __init__(self, entries: Iterable[int] = ()):
        """Constructor.
        """
        values = []
        for value in entries:
            if isinstance(value, bool) or not isinstance(value, int):
                try:
                    as_int = int(value)
                except (TypeError, ValueError) as error:
                    raise PreconditionError(f'not an integer twist: {value!r}') from error
                if as_int != value:
                    raise PreconditionError(f'not an integer twist: {value!r}')
                value = as_int
            values.append(value)
        self._entries = tuple(sorted(values))

    @property
    def entries(self) -> tuple:
        """The twists in weakly increasing order."""
        return self._entries

    @property
    def rank(self) -> int:
        """Number of line bundle summands."""
        return len(self._entries)

    @property
    def degree(self) -> int:
        """Sum of the twists."""
        return sum(self._entries)

    def entry(self, index: int) -> int:
        """The twist f_index, counting from 1."""
        if not 1 <= index <= len(self._entries):
            raise PreconditionError(f'index {index} outside 1..{len(self._entries)}')
        return self._entries[index - 1]

    def prefix_sums(self) -> list:
        """[0, f_1, f_1 + f_2, ...]"""
        sums = [0]
        for value in self._entries:
            sums.append(sums[-1] + value)
        return sums

    def to_json(self) -> list:
        """JSON encoding, a plain list of integers."""
        return list(self._entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, index):
        return self._entries[index]

    def __eq__(self, other) -> bool:
        if isinstance(other, SplittingType):
            return self._entries == other._entries
        if isinstance(other, (tuple, list)):
            return self._entries == tuple(sorted(other))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._entries)

    def __lt__(self, other) -> bool:
        # Lexicographic, only used to sort reports deterministically.
        return self._entries < SplittingType(other)._entries

    def __repr__(self) -> str:
        return f"SplittingType(({','.join(str(v) for v in self._entries)}))"

    def __str__(self) -> str:
        return f"({','.join(str(v) for v in self._entries)})"


def as_splitting_type(value) -> SplittingType:
    """Coerce a sequence of integers into a SplittingType."""
    if isinstance(value, SplittingType):
        return value
    return SplittingType(value)


def parse_splitting_type(text: str) -> SplittingType:
    """Parse the text encoding "0,4,5,6,8,12". The empty string is rank 0."""
    text = (text or '').strip()
    if text.startswith('(') and text.endswith(')'):
        text = text[1:-1]
    if text == '':
        return SplittingType()
    values = []
    for token in text.split(','):
        token = token.strip()
        try:
            values.append(int(token))
        except ValueError as error:
            raise PreconditionError(f'malformed splitting type entry {token!r} in {text!r}') \
                from error
    return SplittingType(values)


def _require_comparable(f: SplittingType, g: SplittingType):
    if f.rank != g.rank or f.degree != g.degree:
        raise PreconditionError(f'{f} and {g} differ in rank or degree and are not comparable')


def more_balanced_geq(f, g) -> bool:
    """True if f is at least as balanced as g: every prefix sum of f is at least
    the corresponding prefix sum of g.
    """
    f, g = as_splitting_type(f), as_splitting_type(g)
    _require_comparable(f, g)
    return all(x >= y for x, y in zip(f.prefix_sums(), g.prefix_sums()))


def strictly_more_balanced(f, g) -> bool:
    """f is at least as balanced as g and different from it."""
    return more_balanced_geq(f, g) and as_splitting_type(f) != as_splitting_type(g)


def hom_dim(f, g) -> int:
    """Dimension of Hom(O(f), O(g))."""
    return sum(max(0, y - x + 1) for x in f for y in g)


def ext1_dim(f, g) -> int:
    """Dimension of Ext^1(O(f), O(g))."""
    return sum(max(0, x - y - 1) for x in f for y in g)


def end_dim(f) -> int:
    """Dimension of End(O(f))."""
    return hom_dim(f, f)


def sort_concat(b, a) -> SplittingType:
    """The splitting type of O(b) + O(a)."""
    return SplittingType(list(b) + list(a))


def reverse_negate(f) -> SplittingType:
    """Splitting type of the dual bundle."""
    return SplittingType(-value for value in f)


def repeat(f, k: int) -> SplittingType:
    """Direct sum of k copies."""
    if k < 1:
        raise PreconditionError(f'repeat count must be positive, got {k}')
    return SplittingType(value for value in f for _ in range(k))


def alpha_balance(q, delta: int) -> SplittingType:
    """Add delta to the entries of q in the most balanced way: one unit at a
    time to the last occurrence of the current minimum, which keeps the tuple
    sorted and ends at the dominance maximum among entrywise larger tuples.
    """
    values = list(as_splitting_type(q))
    if delta < 0:
        raise PreconditionError(f'alpha_balance needs delta >= 0, got {delta}')
    if not values:
        if delta:
            raise PreconditionError('cannot distribute a positive delta over a rank 0 type')
        return SplittingType()
    for _ in range(delta):
        low = values[0]
        index = 0
        while index + 1 < len(values) and values[index + 1] == low:
            index += 1
        values[index] += 1
    return SplittingType(values)


def beta_balance(p, delta: int) -> SplittingType:
    """Subtract delta from the entries of p in the most balanced way, one unit
    at a time from the first occurrence of the current maximum.
    """
    values = list(as_splitting_type(p))
    if delta < 0:
        raise PreconditionError(f'beta_balance needs delta >= 0, got {delta}')
    if not values:
        if delta:
            raise PreconditionError('cannot distribute a positive delta over a rank 0 type')
        return SplittingType()
    for _ in range(delta):
        high = values[-1]
        index = len(values) - 1
        while index > 0 and values[index - 1] == high:
            index -= 1
        values[index] -= 1
    return SplittingType(values)


def weak_compositions(total: int, lower: Sequence[int], upper: Optional[Sequence[int]] = None,
                      guard_limit: Optional[int] = None) -> Iterator[SplittingType]:
    """
    Every weakly increasing tuple t with lower[i] <= t[i] (<= upper[i]) and sum
    total, in lexicographic order. Raises GuardExceededError once more than the
    guard limit of tuples have been produced.
    """
    lower = list(lower)
    upper = None if upper is None else list(upper)
    size = len(lower)
    limit = resolve_guard_limit(guard_limit)
    produced = 0

    if size == 0:
        if total == 0:
            yield SplittingType()
        return

    # Largest sum the positions from i on can still absorb.
    upper_tail = None
    if upper is not None:
        upper_tail = [0] * (size + 1)
        for i in range(size - 1, -1, -1):
            upper_tail[i] = upper_tail[i + 1] + upper[i]

    chosen = [0] * size

    def fill(i: int, previous: Optional[int], remaining: int):
        nonlocal produced
        slots = size - i
        start = lower[i] if previous is None else max(lower[i], previous)
        if slots == 1:
            if remaining >= start and (upper is None or remaining <= upper[i]):
                chosen[i] = remaining
                produced += 1
                if produced > limit:
                    raise GuardExceededError('weak composition enumeration', produced, limit)
                yield SplittingType(chosen)
            return
        stop = remaining // slots
        if upper is not None:
            stop = min(stop, upper[i])
        for value in range(start, stop + 1):
            rest = remaining - value
            if upper_tail is not None and rest > upper_tail[i + 1]:
                continue
            chosen[i] = value
            yield from fill(i + 1, value, rest)

    yield from fill(0, None, total)


def dominance_maximum(candidates: Iterable[SplittingType], what: str = 'candidates') \
        -> SplittingType:
    """The unique element dominating all others. Raises CrossCheckError when the
    set has no maximum and PreconditionError when it is empty.
    """
    pool = list(dict.fromkeys(candidates))
    if not pool:
        raise PreconditionError(f'no {what} to take a dominance maximum of')
    best = pool[0]
    for item in pool[1:]:
        if more_balanced_geq(item, best):
            best = item
    for item in pool:
        if not more_balanced_geq(best, item):
            raise CrossCheckError(f'{what}: {best} and {item} are incomparable maximal '
                                  'elements, the dominance maximum is not unique')
    return best
