"""Explicit antipodal-free families and coordinate permutations.

Two deterministic constructions realize the known lower bounds:

* example1(p): vectors whose last nonzero coordinate carries -1.  Size
  C(n, k+l) * C(k+l-1, l-1).  Antipodal-free: an antipodal pair would put
  the larger of the two maximal support elements simultaneously in a
  minus set and in the partner's plus set, forcing it into both the plus
  and the minus set of one vector.
* example2(p): vectors whose first coordinate carries +1.  Size
  C(n-1, k+l-1) * C(k+l-1, k-1) = (k/n) |V|.  Antipodal-free because the
  plus sets all share coordinate 1.

Both are produced by filtering the canonical enumeration, so member
order is inherited from enumerate_v and the sizes double as regression
oracles for the closed forms.

The circle family H places, for each i in [n], a cyclic run of k plus
entries starting at i and a cyclic run of l minus entries ending just
before it.  H is generally NOT antipodal-free; it is the rotation
skeleton the circle-method verifiers permute and intersect against.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DimensionMismatch, RegimeError
from .vectors import Params, SignedVector, VectorFamily, enumerate_v

__all__ = [
    "Permutation",
    "random_permutation",
    "apply_permutation",
    "example1",
    "example2",
    "circle_family",
]


@dataclass(frozen=True)
class Permutation:
    """Bijection on [1..n], stored as the image tuple (image[i-1] = sigma(i))."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"not a bijection on [1..{len(self.image)}]: {self.image}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def apply_to_set(self, s: frozenset[int]) -> frozenset[int]:
        img = self.image
        return frozenset(img[i - 1] for i in s)

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(i) = self(other(i))."""
        if self.n != other.n:
            raise DimensionMismatch(f"cannot compose permutations of sizes {self.n} and {other.n}")
        return Permutation(tuple(self.image[j - 1] for j in other.image))


def random_permutation(n: int, rng: random.Random) -> Permutation:
    image = list(range(1, n + 1))
    rng.shuffle(image)
    return Permutation(tuple(image))


def apply_permutation(fam: VectorFamily, sigma: Permutation) -> VectorFamily:
    """Relabel coordinates of every member; order and size are preserved."""
    if sigma.n != fam.params.n:
        raise DimensionMismatch(f"permutation on [1..{sigma.n}] vs family with n={fam.params.n}")
    return VectorFamily(
        fam.params,
        (
            SignedVector(v.n, sigma.apply_to_set(v.plus), sigma.apply_to_set(v.minus))
            for v in fam
        ),
    )


def example1(p: Params) -> VectorFamily:
    """Vectors of V(n,k,l) whose largest support element lies in the minus set."""
    return enumerate_v(p).restrict(lambda v: max(v.support) in v.minus)


def example2(p: Params) -> VectorFamily:
    """Vectors of V(n,k,l) whose first coordinate is +1."""
    return enumerate_v(p).restrict(lambda v: 1 in v.plus)


def _mod1(x: int, n: int) -> int:
    """Residue of x in 1..n (1-based wrap-around)."""
    return (x - 1) % n + 1


def circle_family(p: Params) -> VectorFamily:
    """The n-member cyclic family H; member i is +1 on the cyclic block
    {i, ..., i+k-1} and -1 on {i-k, ..., i-k+l-1} (residues taken in [1..n]).

    Needs n >= 2k so the two blocks cannot collide.
    """
    if p.n < 2 * p.k:
        raise RegimeError(f"circle family needs n >= 2k, got n={p.n}, k={p.k}")
    members = []
    for i in range(1, p.n + 1):
        plus = frozenset(_mod1(i + t, p.n) for t in range(p.k))
        minus = frozenset(_mod1(i - p.k + t, p.n) for t in range(p.l))
        members.append(SignedVector(p.n, plus, minus))
    fam = VectorFamily(p, members)
    assert len(fam) == p.n
    return fam
