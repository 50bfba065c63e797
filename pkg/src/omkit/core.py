"""Ground sets, signed elements, and oriented simplices.

Signed elements are plain ints: +e is the element itself, -e its negated
(barred) copy.  The fixed total order on signed elements is
1 < -1 < 2 < -2 < ... (each element immediately followed by its bar).

An oriented simplex is a tuple of signed elements.  Two simplices are
equivalent when one arises from the other by repeatedly swapping adjacent
entries while negating the entry that moves left.  normalize() maps a tuple
to its canonical representative: ascending support plus a single sign.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, NamedTuple


def involute(x: int) -> int:
    """Negated copy of a signed element; an involution."""
    if x == 0:
        raise ValueError("0 is not a signed element")
    return -x


def underlying(x: int) -> int:
    """Forget the sign: the element id carried by a signed element."""
    if x == 0:
        raise ValueError("0 is not a signed element")
    return -x if x < 0 else x


def signed_sort_key(x: int):
    """Sort key realizing the fixed order 1 < -1 < 2 < -2 < ..."""
    return (underlying(x), x < 0)


def signed_elements(n: int) -> list[int]:
    """All 2n signed elements of {1..n} in the fixed order."""
    out = []
    for e in range(1, n + 1):
        out.append(e)
        out.append(-e)
    return out


@dataclass(frozen=True)
class GroundSet:
    """Finite ground set, elements identified with 1..n."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ground set needs at least one element")

    def __iter__(self):
        return iter(range(1, self.n + 1))

    def __len__(self):
        return self.n

    def __contains__(self, e):
        return isinstance(e, int) and 1 <= e <= self.n


class CanonicalBasis(NamedTuple):
    """Canonical form of a non-degenerate oriented simplex."""

    support: tuple
    sign: int

    def negate(self):
        return CanonicalBasis(self.support, -self.sign)


def normalize(entries: Iterable[int]):
    """Canonical form of an oriented simplex, or None when degenerate.

    The sign is the parity of the permutation sorting the underlying
    elements, times the product of the entry signs.  A repeated underlying
    element makes the simplex degenerate.
    """
    elems = []
    sign = 1
    for x in entries:
        if x == 0:
            raise ValueError("0 is not a signed element")
        if x < 0:
            sign = -sign
            elems.append(-x)
        else:
            elems.append(x)
    if len(set(elems)) != len(elems):
        return None
    inv = 0
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            if elems[i] > elems[j]:
                inv += 1
    if inv & 1:
        sign = -sign
    return CanonicalBasis(tuple(sorted(elems)), sign)


def enumerate_simplices(ground, d: int):
    """Ascending (d+1)-subsets of the ground set in lexicographic order.

    Accepts a GroundSet or a plain n.  d = -1 yields the single empty
    tuple; d+1 larger than n yields nothing.
    """
    n = ground.n if isinstance(ground, GroundSet) else int(ground)
    if n < 1:
        raise ValueError("ground set needs at least one element")
    if d < -1:
        raise ValueError("dimension below -1")
    return itertools.combinations(range(1, n + 1), d + 1)
