"""The sequence a_1 = 1, a_2 = 2, a_{i+1} = i*a_i + a_{i-1}, in exact integer arithmetic.

Terms grow faster than factorially (a_21 already exceeds 64 bits), so
everything here runs on Python's native big integers and the cached
prefix stays short even for astronomically large queries.
"""

from __future__ import annotations

from bisect import bisect_right


class SequenceTable:
    """Lazily extended, append-only cache of the terms a_1, a_2, ...

    Indexing is 1-based throughout, matching the usual mathematical
    convention.  Once a prefix has been built it is never mutated, so
    concurrent reads of an already-extended table are safe; callers that
    share a table across threads should pre-extend it first.
    """

    def __init__(self) -> None:
        self._terms: list[int] = [1, 2]

    def __len__(self) -> int:
        return len(self._terms)

    def extend_to_index(self, k: int) -> "SequenceTable":
        """Ensure terms a_1..a_k are cached; returns self for chaining."""
        if k < 1:
            raise ValueError(f"sequence index must be >= 1, got {k}")
        t = self._terms
        while len(t) < k:
            i = len(t)  # next term is a_{i+1} = i*a_i + a_{i-1}
            t.append(i * t[-1] + t[-2])
        return self

    def term(self, i: int) -> int:
        """Return a_i, extending the cache on demand."""
        if i < 1:
            raise ValueError(f"sequence index must be >= 1, got {i}")
        self.extend_to_index(i)
        return self._terms[i - 1]

    def terms(self, k: int) -> tuple[int, ...]:
        """Return (a_1, ..., a_k)."""
        self.extend_to_index(k)
        return tuple(self._terms[:k])

    def index_of_floor(self, x: int) -> int:
        """Largest n with a_n <= x (so a_n <= x < a_{n+1})."""
        if x < 1:
            raise ValueError(f"index_of_floor requires x >= 1, got {x}")
        t = self._terms
        while t[-1] <= x:
            i = len(t)
            t.append(i * t[-1] + t[-2])
        # t[-1] > x, so the answer lies in the cached prefix.
        return bisect_right(t, x)


# Shared default table.  The sequence is a fixed mathematical object, so a
# process-wide cache is safe and avoids re-deriving terms everywhere.
_TABLE = SequenceTable()


def term(i: int) -> int:
    """a_i from the shared table."""
    return _TABLE.term(i)


def terms(k: int) -> tuple[int, ...]:
    """(a_1, ..., a_k) from the shared table."""
    return _TABLE.terms(k)


def index_of_floor(x: int) -> int:
    """Largest n with a_n <= x, from the shared table."""
    return _TABLE.index_of_floor(x)
