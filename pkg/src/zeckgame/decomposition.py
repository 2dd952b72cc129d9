"""Legal decompositions over the sequence a_1=1, a_2=2, a_{i+1} = i*a_i + a_{i-1}.

A coefficient vector (s_1, ..., s_k) is *legal* when 0 <= s_i <= i for
every i and whenever s_i = i the next-lower coefficient s_{i-1} is 0.
Every non-negative integer has exactly one legal decomposition; the
greedy algorithm (take floor(x / a_n) copies of the largest term
a_n <= x, then recurse on the remainder) computes it.

``enumerate_legal`` is the deliberately independent brute-force oracle:
it walks coefficient choices top-down under the adjacency rule and never
touches the greedy code path, so the two can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import sequence


@dataclass(frozen=True)
class Decomposition:
    """A legal coefficient vector with its cached value.

    ``coeffs[0]`` is s_1.  Canonical form: no trailing zeros, so the top
    coefficient is >= 1 whenever the vector is nonempty.  The empty
    vector represents 0 (handy for interval arithmetic and for comparing
    game states against the terminal decomposition).
    """

    coeffs: tuple[int, ...]
    value: int = field(default=-1)

    def __post_init__(self):
        cs = self.coeffs
        if cs and cs[-1] == 0:
            raise ValueError("decomposition not canonical: trailing zero coefficient")
        for i, s in enumerate(cs, start=1):
            if not 0 <= s <= i:
                raise ValueError(f"coefficient s_{i}={s} outside [0, {i}]")
            if s == i and i >= 2 and cs[i - 2] != 0:
                raise ValueError(f"s_{i}={i} is saturated but s_{i-1}={cs[i-2]} != 0")
        v = value_of(cs)
        if self.value == -1:
            object.__setattr__(self, "value", v)
        elif self.value != v:
            raise ValueError(f"cached value {self.value} != actual {v}")

    @property
    def top_index(self) -> int:
        return len(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = [
            f"{s}*a{i}"
            for i, s in sorted(enumerate(self.coeffs, start=1), reverse=True)
            if s
        ]
        return f"{self.value} = " + " + ".join(parts)


def value_of(coeffs: Sequence[int]) -> int:
    """Exact value sum(coeffs[i-1] * a_i); zero for the empty vector."""
    if not coeffs:
        return 0
    terms = sequence.terms(len(coeffs))
    return sum(s * a for s, a in zip(coeffs, terms))


EMPTY = Decomposition(())


def is_legal(coeffs: Sequence[int]) -> bool:
    """True iff the vector satisfies the coefficient bound and adjacency rule.

    Trailing zeros are allowed here; canonicality is a normalization
    concern of ``Decomposition``, not part of legality itself.
    """
    prev = 0
    for i, s in enumerate(coeffs, start=1):
        if not 0 <= s <= i:
            return False
        if s == i and i >= 2 and prev != 0:
            return False
        prev = s
    return True


def greedy_decompose(x: int) -> Decomposition:
    """The unique legal decomposition of x >= 1, via the greedy algorithm."""
    if x < 1:
        raise ValueError(f"greedy_decompose requires x >= 1, got {x}")
    k = sequence.index_of_floor(x)
    terms = sequence.terms(k)
    coeffs = [0] * k
    rem = x
    for i in range(k, 0, -1):
        if rem == 0:
            break
        s, rem = divmod(rem, terms[i - 1])
        coeffs[i - 1] = s
    # rem is 0 by construction: a_1 = 1 absorbs any remainder.
    return Decomposition(tuple(coeffs), x)


def summand_count(d: Decomposition) -> int:
    """Number of summands counted with multiplicity (LZ of the value)."""
    return sum(d.coeffs)


def enumerate_legal(max_index: int) -> Iterator[Decomposition]:
    """Yield every legal decomposition with top index <= max_index, once each.

    Includes the empty decomposition (value 0).  Enumeration chooses
    coefficients from the top index downward, carrying a "previous
    coefficient was saturated" flag to enforce the adjacency rule
    without post-filtering; by existence/uniqueness the yielded values
    are exactly {0, 1, ..., a_{max_index+1} - 1}, each once.

    Intended as a brute-force oracle: keep max_index at desk scale
    (the yield count is a_{max_index+1}, which explodes past ~10).
    """
    if max_index < 1:
        raise ValueError(f"max_index must be >= 1, got {max_index}")

    yield EMPTY

    def fill(i: int, forced_zero: bool) -> Iterator[tuple[int, ...]]:
        # All legal (s_1..s_i) given that s_i must be 0 when forced_zero.
        if i == 0:
            yield ()
            return
        choices = (0,) if forced_zero else range(i + 1)
        for s in choices:
            for rest in fill(i - 1, s == i):
                yield rest + (s,)

    for top in range(1, max_index + 1):
        for s_top in range(1, top + 1):
            for rest in fill(top - 1, s_top == top):
                yield Decomposition(rest + (s_top,))
