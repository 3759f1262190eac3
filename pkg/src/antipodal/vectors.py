"""Signed vectors with a fixed number of +1 and -1 entries.

A vector of length n over {-1, 0, +1} with exactly k entries equal to +1
and l entries equal to -1 is stored as the pair of disjoint index sets
carrying the nonzero entries.  Indices are 1-based, so the coordinate set
is [n] = {1, ..., n}.  V(n, k, l) denotes the collection of all such
vectors; its size is C(n,k) * C(n-k,l) = C(n,k+l) * C(k+l,l).

Throughout we require 1 <= l <= k and k + l <= n.  For two vectors
v, w in V(n, k, l) the scalar product is bounded below by -2l, and pairs
attaining -2l are called *antipodal*.  Equivalently (see is_antipodal)
the minus set of each vector sits inside the plus set of the other while
the two plus sets are disjoint.  Families avoiding antipodal pairs are
the central objects of this toolkit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import (
    BadCharacter,
    DimensionMismatch,
    EmptyInput,
    InvalidParams,
    OverlapError,
    RangeError,
)

__all__ = [
    "Params",
    "SignedVector",
    "VectorFamily",
    "make_vector",
    "parse_vector",
    "format_vector",
    "scalar_product",
    "is_antipodal",
    "enumerate_v",
    "cardinality_v",
    "antipodal_neighbors",
    "antipodal_degree",
]


@dataclass(frozen=True)
class Params:
    """Parameter triple (n, k, l): dimension, +1 count, -1 count.

    Validation admits the degenerate window k + l <= n < 2k on purpose;
    no antipodal pair exists there (two disjoint k-sets need n >= 2k),
    but enumeration and the closed-form bounds remain well defined.
    """

    n: int
    k: int
    l: int

    def __post_init__(self) -> None:
        if not (isinstance(self.n, int) and isinstance(self.k, int) and isinstance(self.l, int)):
            raise InvalidParams(f"parameters must be integers, got ({self.n!r}, {self.k!r}, {self.l!r})")
        if not 1 <= self.l <= self.k:
            raise InvalidParams(f"need 1 <= l <= k, got k={self.k}, l={self.l}")
        if self.k + self.l > self.n:
            raise InvalidParams(f"need k + l <= n, got k+l={self.k + self.l}, n={self.n}")

    @property
    def nontrivial_regime(self) -> bool:
        """True when n >= 2k, i.e. antipodal pairs can exist at all."""
        return self.n >= 2 * self.k

    @property
    def circle_regime(self) -> bool:
        """True when 2k <= n <= 3k - l, the window of the circle bound."""
        return 2 * self.k <= self.n <= 3 * self.k - self.l


@dataclass(frozen=True)
class SignedVector:
    """Immutable vector over {-1, 0, +1}: dimension plus two index sets."""

    n: int
    plus: frozenset[int]
    minus: frozenset[int]

    def __post_init__(self) -> None:
        if self.plus & self.minus:
            raise OverlapError(f"plus and minus sets overlap in {sorted(self.plus & self.minus)}")
        for i in self.plus | self.minus:
            if not (isinstance(i, int) and 1 <= i <= self.n):
                raise RangeError(f"index {i!r} outside [1..{self.n}]")

    @property
    def support(self) -> frozenset[int]:
        return self.plus | self.minus

    def entry(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise RangeError(f"index {i} outside [1..{self.n}]")
        if i in self.plus:
            return 1
        if i in self.minus:
            return -1
        return 0

    def __str__(self) -> str:
        return format_vector(self)


def make_vector(n: int, plus: Iterable[int], minus: Iterable[int]) -> SignedVector:
    """Build a SignedVector from 1-based index collections."""
    return SignedVector(n, frozenset(plus), frozenset(minus))


def parse_vector(text: str) -> SignedVector:
    """Parse a string over {'+', '-', '0'}, one character per coordinate."""
    if text == "":
        raise EmptyInput("empty vector text")
    plus, minus = [], []
    for pos, ch in enumerate(text, start=1):
        if ch == "+":
            plus.append(pos)
        elif ch == "-":
            minus.append(pos)
        elif ch != "0":
            raise BadCharacter(f"character {ch!r} at position {pos} (want '+', '-' or '0')")
    return SignedVector(len(text), frozenset(plus), frozenset(minus))


def format_vector(v: SignedVector) -> str:
    """Inverse of parse_vector."""
    out = []
    for i in range(1, v.n + 1):
        if i in v.plus:
            out.append("+")
        elif i in v.minus:
            out.append("-")
        else:
            out.append("0")
    return "".join(out)


def scalar_product(v: SignedVector, w: SignedVector) -> int:
    """Standard scalar product, computed from the four set intersections."""
    if v.n != w.n:
        raise DimensionMismatch(f"dimensions differ: {v.n} vs {w.n}")
    return (
        len(v.plus & w.plus)
        + len(v.minus & w.minus)
        - len(v.plus & w.minus)
        - len(v.minus & w.plus)
    )


def _check_conforms(v: SignedVector, p: Params) -> None:
    if v.n != p.n:
        raise DimensionMismatch(f"vector has n={v.n}, params have n={p.n}")
    if len(v.plus) != p.k or len(v.minus) != p.l:
        raise InvalidParams(
            f"vector has {len(v.plus)} plus / {len(v.minus)} minus entries, "
            f"params require k={p.k}, l={p.l}"
        )


def is_antipodal(v: SignedVector, w: SignedVector, p: Params) -> bool:
    """True iff <v, w> attains the minimum -2l.

    Two equivalent routes are evaluated on every call: the scalar product
    against -2l, and the containment characterization (minus of each
    inside plus of the other, plus sets disjoint).  Their agreement is an
    internal consistency check; for conforming inputs the equivalence is
    a theorem, so the assertion can only fire on a coding error.
    """
    _check_conforms(v, p)
    _check_conforms(w, p)
    by_product = scalar_product(v, w) == -2 * p.l
    by_containment = (
        v.minus <= w.plus and w.minus <= v.plus and not (v.plus & w.plus)
    )
    assert by_product == by_containment, "antipodality characterizations disagree"
    return by_product


class VectorFamily:
    """Duplicate-free ordered collection of vectors sharing one Params.

    Construction validates that every member conforms to the parameters;
    duplicates are dropped, keeping the first occurrence.  Membership
    tests are O(1) via an internal frozenset index.
    """

    __slots__ = ("params", "members", "_index")

    def __init__(self, params: Params, members: Iterable[SignedVector]):
        kept: list[SignedVector] = []
        seen: set[SignedVector] = set()
        for v in members:
            _check_conforms(v, params)
            if v not in seen:
                seen.add(v)
                kept.append(v)
        self.params = params
        self.members: tuple[SignedVector, ...] = tuple(kept)
        self._index: frozenset[SignedVector] = frozenset(kept)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SignedVector]:
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def strings(self) -> tuple[str, ...]:
        return tuple(format_vector(v) for v in self.members)

    def restrict(self, keep) -> "VectorFamily":
        """Subfamily of members satisfying the predicate, order preserved."""
        return VectorFamily(self.params, (v for v in self.members if keep(v)))

    def __repr__(self) -> str:
        p = self.params
        return f"VectorFamily(n={p.n}, k={p.k}, l={p.l}, size={len(self)})"


def enumerate_v(p: Params) -> VectorFamily:
    """All of V(n, k, l) in lexicographic order on (plus, minus).

    Plus sets are emitted as lexicographically increasing k-tuples; for a
    fixed plus set the minus sets run lexicographically over the
    remaining indices.  The order is the canonical one used for vertex
    numbering throughout the package.
    """
    idx = range(1, p.n + 1)
    members = []
    for plus in combinations(idx, p.k):
        plus_set = frozenset(plus)
        rest = [i for i in idx if i not in plus_set]
        for minus in combinations(rest, p.l):
            members.append(SignedVector(p.n, plus_set, frozenset(minus)))
    fam = VectorFamily(p, members)
    assert len(fam) == cardinality_v(p)
    return fam


def cardinality_v(p: Params) -> int:
    """|V(n, k, l)| as an exact integer."""
    by_placement = math.comb(p.n, p.k) * math.comb(p.n - p.k, p.l)
    by_support = math.comb(p.n, p.k + p.l) * math.comb(p.k + p.l, p.l)
    assert by_placement == by_support
    return by_placement


def antipodal_neighbors(v: SignedVector, p: Params) -> list[SignedVector]:
    """All w in V(n, k, l) antipodal to v, in deterministic order.

    Constructive generation: w must place its l minus entries inside
    plus(v) (C(k, l) choices) and its plus entries on minus(v) together
    with k - l of the n - k - l zero positions of v
    (C(n-k-l, k-l) choices).  Every such w is antipodal to v and every
    antipodal w arises exactly once, so the count is antipodal_degree(p).
    The brute-force cross-check lives in the test suite.
    """
    _check_conforms(v, p)
    zeros = sorted(set(range(1, p.n + 1)) - v.plus - v.minus)
    plus_sorted = sorted(v.plus)
    out = []
    for new_minus in combinations(plus_sorted, p.l):
        for extra_plus in combinations(zeros, p.k - p.l):
            out.append(SignedVector(p.n, v.minus | frozenset(extra_plus), frozenset(new_minus)))
    return out


def antipodal_degree(p: Params) -> int:
    """Number of antipodal partners of any fixed vector in V(n, k, l).

    Equals C(k, l) * C(n-k-l, k-l): the first factor places the partner's
    minus set inside the vector's plus set, the second chooses the k - l
    fresh plus positions among the vector's zeros (the remaining l plus
    positions are forced onto the vector's minus set).  The second
    exponent is k - l, not k - 2l; the variant with k - 2l undercounts,
    e.g. it gives 2 instead of 4 at (n, k, l) = (5, 2, 1) and fails every
    k = l instance.  The suite pins this down by brute force.
    """
    return math.comb(p.k, p.l) * math.comb(p.n - p.k - p.l, p.k - p.l)
