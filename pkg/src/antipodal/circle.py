"""Rotation-and-permutation verifiers built on the cyclic family H.

For a permutation sigma of [1..n], H(sigma) is the image of the circle
family under coordinate relabeling.  Two facts are checked here at desk
scale:

* interval cap: in the regime 2k <= n <= 3k - l, an antipodal-free
  family meets every H(sigma) in at most k members.  The companion
  combinatorial fact, that at most k of the n cyclic k-intervals can
  pairwise intersect, is computed exactly by max_intersecting_cyclic.
* double counting: summed over ALL n! permutations, |H(sigma) cap F| =
  |F| n k! l! (n-k-l)! for ANY subfamily F of V(n, k, l), because each
  fixed vector lands in H(sigma) for exactly n k! l! (n-k-l)! choices of
  sigma.  This identity needs no freeness assumption and is the engine
  behind theorem2_bound: combining it with the interval cap yields
  |F| <= k |V| / n.

Exhaustive sweeps are capped at n = 8 (40320 permutations); larger n
must sample.  Sampled runs are deterministic given their seed.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations as _iter_permutations

from .bounds import theorem2_bound
from .constructions import Permutation, circle_family
from .errors import DimensionMismatch, RegimeError, TooLarge
from .theorem1 import Violation, _find_antipodal_pair
from .vectors import Params, VectorFamily, format_vector

__all__ = [
    "CircleReport",
    "lemma3_count",
    "lemma3_sweep",
    "max_intersecting_cyclic",
    "double_count_check",
    "theorem2_certify",
]

_EXHAUSTIVE_CAP = 8


@dataclass
class CircleReport:
    """Outcome of a permutation sweep; fields vary with the mode.

    count_histogram maps an intersection size to the number of
    permutations attaining it.  identity_lhs/identity_rhs hold the two
    sides of the double-counting identity in exhaustive mode;
    mean_observed/mean_expected the sampled analogue.
    """

    params: tuple[int, int, int]
    family_size: int
    mode: str
    sigmas_checked: int
    count_histogram: dict[int, int] = field(default_factory=dict)
    max_observed: int = 0
    cap: int | None = None
    identity_lhs: int | None = None
    identity_rhs: int | None = None
    mean_observed: float | None = None
    mean_expected: float | None = None
    bound_value: int | None = None
    seed: int | None = None
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "params": list(self.params),
            "family_size": self.family_size,
            "mode": self.mode,
            "sigmas_checked": self.sigmas_checked,
            "count_histogram": {str(k): v for k, v in sorted(self.count_histogram.items())},
            "max_observed": self.max_observed,
            "cap": self.cap,
            "identity_lhs": self.identity_lhs,
            "identity_rhs": self.identity_rhs,
            "mean_observed": self.mean_observed,
            "mean_expected": self.mean_expected,
            "bound_value": self.bound_value,
            "seed": self.seed,
            "violations": [v.as_dict() for v in self.violations],
            "ok": self.ok,
        }


def _family_pairs(fam: VectorFamily) -> frozenset[tuple[frozenset[int], frozenset[int]]]:
    return frozenset((v.plus, v.minus) for v in fam)


def _circle_pairs(p: Params) -> list[tuple[frozenset[int], frozenset[int]]]:
    return [(v.plus, v.minus) for v in circle_family(p)]


def _image_count(image: tuple[int, ...], h_pairs, fam_pairs) -> int:
    """|H(sigma) cap F| for sigma given as an image tuple."""
    count = 0
    for plus, minus in h_pairs:
        ip = frozenset(image[i - 1] for i in plus)
        im = frozenset(image[i - 1] for i in minus)
        if (ip, im) in fam_pairs:
            count += 1
    return count


def lemma3_count(fam: VectorFamily, sigma: Permutation) -> int:
    """|H(sigma) cap F| for one permutation."""
    p = fam.params
    if sigma.n != p.n:
        raise DimensionMismatch(f"permutation on [1..{sigma.n}] vs family with n={p.n}")
    return _image_count(sigma.image, _circle_pairs(p), _family_pairs(fam))


def _sweep_chunk(args) -> dict[int, int]:
    """Histogram of |H(sigma) cap F| over all sigma with a fixed first
    image element.  Top-level so it can cross a process boundary."""
    n, first, h_raw, fam_raw = args
    h_pairs = [(frozenset(pl), frozenset(mi)) for pl, mi in h_raw]
    fam_pairs = frozenset((frozenset(pl), frozenset(mi)) for pl, mi in fam_raw)
    rest = [x for x in range(1, n + 1) if x != first]
    hist: dict[int, int] = {}
    for tail in _iter_permutations(rest):
        image = (first, *tail)
        c = _image_count(image, h_pairs, fam_pairs)
        hist[c] = hist.get(c, 0) + 1
    return hist


def lemma3_sweep(
    fam: VectorFamily,
    *,
    exhaustive: bool = False,
    samples: int = 1000,
    seed: int = 0,
    workers: int = 1,
) -> CircleReport:
    """Histogram of |H(sigma) cap F| over permutations.

    Pure data collection; the caller decides what counts as a violation.
    Exhaustive mode runs all n! permutations (TooLarge for n > 8) and can
    partition by the first image element across workers; sampled mode
    draws `samples` permutations from random.Random(seed) and always adds
    the identity.
    """
    p = fam.params
    h_pairs = _circle_pairs(p)
    fam_pairs = _family_pairs(fam)
    hist: dict[int, int] = {}
    if exhaustive:
        if p.n > _EXHAUSTIVE_CAP:
            raise TooLarge(f"exhaustive sweep capped at n <= {_EXHAUSTIVE_CAP}, got n={p.n}")
        if workers <= 1:
            for image in _iter_permutations(range(1, p.n + 1)):
                c = _image_count(image, h_pairs, fam_pairs)
                hist[c] = hist.get(c, 0) + 1
        else:
            h_raw = tuple((tuple(pl), tuple(mi)) for pl, mi in h_pairs)
            fam_raw = tuple(sorted((tuple(sorted(pl)), tuple(sorted(mi))) for pl, mi in fam_pairs))
            jobs = [(p.n, first, h_raw, fam_raw) for first in range(1, p.n + 1)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(_sweep_chunk, jobs):
                    for c, m in part.items():
                        hist[c] = hist.get(c, 0) + m
        checked = math.factorial(p.n)
        mode = "exhaustive"
        used_seed = None
    else:
        rng = random.Random(seed)
        identity = tuple(range(1, p.n + 1))
        images = [identity]
        base = list(identity)
        for _ in range(max(0, samples)):
            rng.shuffle(base)
            images.append(tuple(base))
        for image in images:
            c = _image_count(image, h_pairs, fam_pairs)
            hist[c] = hist.get(c, 0) + 1
        checked = len(images)
        mode = "sample"
        used_seed = seed
    return CircleReport(
        params=(p.n, p.k, p.l),
        family_size=len(fam),
        mode=mode,
        sigmas_checked=checked,
        count_histogram=hist,
        max_observed=max(hist) if hist else 0,
        cap=p.k,
        seed=used_seed,
    )


def max_intersecting_cyclic(n: int, k: int) -> int:
    """Exact maximum number of pairwise-intersecting cyclic k-intervals of [n].

    Computed as a maximum independent set of the interval disjointness
    graph; for n >= 2k the answer is k, which the suite pins down.
    """
    from .search import Graph, max_independent_set

    if n < 2 * k or k < 1:
        raise RegimeError(f"need n >= 2k >= 2, got n={n}, k={k}")
    intervals = [frozenset((i + t - 1) % n + 1 for t in range(k)) for i in range(1, n + 1)]
    adj = []
    for i, a in enumerate(intervals):
        mask = 0
        for j, b in enumerate(intervals):
            if i != j and not (a & b):
                mask |= 1 << j
        adj.append(mask)
    labels = tuple(",".join(map(str, sorted(s))) for s in intervals)
    graph = Graph(labels=labels, adj=tuple(adj))
    return max_independent_set(graph).optimum


def double_count_check(
    fam: VectorFamily,
    *,
    exhaustive: bool = False,
    samples: int = 1000,
    seed: int = 0,
    workers: int = 1,
) -> CircleReport:
    """Check the double-counting identity for an arbitrary subfamily.

    Exhaustive mode compares sum_sigma |H(sigma) cap F| with
    |F| n k! l! (n-k-l)! exactly and records a violation on mismatch.
    Sampled mode compares the empirical mean against the exact mean with
    a five-standard-error tolerance band (reported, not asserted).
    """
    p = fam.params
    report = lemma3_sweep(fam, exhaustive=exhaustive, samples=samples, seed=seed, workers=workers)
    report.cap = None
    rhs = (
        len(fam)
        * p.n
        * math.factorial(p.k)
        * math.factorial(p.l)
        * math.factorial(p.n - p.k - p.l)
    )
    if exhaustive:
        lhs = sum(c * m for c, m in report.count_histogram.items())
        report.identity_lhs = lhs
        report.identity_rhs = rhs
        if lhs != rhs:
            report.violations.append(
                Violation(
                    "double-count",
                    "permutation sum does not match the closed form",
                    {"lhs": lhs, "rhs": rhs},
                )
            )
    else:
        total = sum(c * m for c, m in report.count_histogram.items())
        checked = report.sigmas_checked
        mean = total / checked
        expected = rhs / math.factorial(p.n)
        sq = sum(c * c * m for c, m in report.count_histogram.items())
        variance = max(sq / checked - mean * mean, 0.0)
        stderr = math.sqrt(variance / checked)
        report.mean_observed = mean
        report.mean_expected = expected
        if abs(mean - expected) > 5.0 * stderr + 1e-9:
            report.violations.append(
                Violation(
                    "double-count-sample",
                    "sampled mean strayed outside five standard errors",
                    {"mean": mean, "expected": expected, "stderr": stderr},
                )
            )
    return report


def theorem2_certify(fam: VectorFamily, samples: int = 1000, seed: int = 0) -> CircleReport:
    """Certify |F| <= theorem2_bound(p) for an antipodal-free family in
    the circle regime.

    RegimeError outside 2k <= n <= 3k - l.  An antipodal pair in the
    input is reported as a violation, not raised.  The interval cap is
    checked for the identity plus `samples` sampled permutations.
    """
    p = fam.params
    if not p.circle_regime:
        raise RegimeError(
            f"circle certification needs 2k <= n <= 3k - l, got (n,k,l)=({p.n},{p.k},{p.l})"
        )
    report = lemma3_sweep(fam, exhaustive=False, samples=samples, seed=seed)
    report.bound_value = theorem2_bound(p)
    pair = _find_antipodal_pair(fam)
    if pair is not None:
        report.violations.append(
            Violation(
                "antipodal-free precheck",
                "input family contains an antipodal pair",
                {"pair": [format_vector(pair[0]), format_vector(pair[1])]},
            )
        )
    if report.max_observed > p.k:
        report.violations.append(
            Violation(
                "interval-cap",
                "a permuted circle family met the input in more than k members",
                {"max_observed": report.max_observed, "cap": p.k},
            )
        )
    if len(fam) > report.bound_value:
        report.violations.append(
            Violation(
                "circle-bound",
                "family exceeds k |V| / n",
                {"size": len(fam), "bound": report.bound_value},
            )
        )
    return report
