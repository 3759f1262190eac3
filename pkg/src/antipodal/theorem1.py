"""Certification pipeline for the two-term bound.

For a family F inside V(n, k, l) and disjoint l-sets (A, B), the slice
F(A, B) collects the (k-l)-sets C with A cup C as plus set and B as
minus set of some member.  The pipeline mechanizes the counting argument
behind theorem1_bound:

1. lemma1_check: for antipodal-free F, the slices F(A, B) and F(B, A)
   must be cross-intersecting; a disjoint witness pair (C, D) folds back
   into an antipodal pair of vectors, which is reported as data.
2. deletion_procedure: every ordered pair whose slice has at most
   C(n-2l-1, k-l-1) members deletes all vectors it indexes.  Thresholds
   are evaluated against the ORIGINAL family in a single pass; pairs are
   processed in lexicographic order, and a deleted vector is charged to
   the first pair that hits it.  That policy is stamped into every
   report.  The survivor count obeys the accounting lower bound
   |F'| >= |F| - C(n,2l) C(2l,l) C(n-2l-1,k-l-1).
3. family_b / certify_theorem1: for each (k+l)-set T, the minus sets of
   surviving vectors supported exactly on T must form an intersecting
   l-uniform family, hence at most C(k+l-1, l-1) of them; summing over T
   gives |F'| <= C(n,k+l) C(k+l-1,l-1) and, with the accounting bound,
   |F| <= theorem1_bound(p).

Violations discovered at any stage are collected in the report, never
raised; an empty violation list certifies every inequality above.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .bounds import choose, theorem1_bound
from .errors import BadPair, BadT, RangeError
from .setfamilies import SetFamily, is_intersecting
from .vectors import (
    Params,
    SignedVector,
    VectorFamily,
    antipodal_neighbors,
    format_vector,
)

__all__ = [
    "Violation",
    "TraceReport",
    "subfamily",
    "lemma1_check",
    "deletion_procedure",
    "family_b",
    "certify_theorem1",
]

_POLICY = "single pass: thresholds evaluated against the input family, pairs in lex order"

PairKey = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class Violation:
    """One failed check, with enough data to reproduce it."""

    stage: str
    message: str
    data: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"stage": self.stage, "message": self.message, "data": self.data}


@dataclass
class TraceReport:
    """Trace of the pipeline; fields are filled by the stages that ran.

    pair_counts holds |F(A, B)| in the input family for every ordered
    disjoint l-pair; deletions holds, for every triggered pair, the
    number of vectors charged to it (first-hitting pair wins), so
    survivor_size = family_size - sum(deletions.values()).
    family_b_sizes records the nonempty supports only.
    """

    family_size: int = 0
    threshold: int = 0
    policy: str = _POLICY
    pair_counts: dict[PairKey, int] = field(default_factory=dict)
    deletions: dict[PairKey, int] = field(default_factory=dict)
    deleted: tuple[str, ...] = ()
    survivor_size: int = 0
    accounting_lower_bound: int = 0
    family_b_sizes: dict[tuple[int, ...], int] = field(default_factory=dict)
    final_bound: int | None = None
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        def pair_str(key: PairKey) -> str:
            a, b = key
            return ",".join(map(str, a)) + "|" + ",".join(map(str, b))

        return {
            "family_size": self.family_size,
            "threshold": self.threshold,
            "policy": self.policy,
            "pair_counts": {pair_str(k): v for k, v in self.pair_counts.items()},
            "deletions": {pair_str(k): v for k, v in self.deletions.items()},
            "deleted": list(self.deleted),
            "survivor_size": self.survivor_size,
            "accounting_lower_bound": self.accounting_lower_bound,
            "family_b_sizes": {",".join(map(str, t)): s for t, s in self.family_b_sizes.items()},
            "final_bound": self.final_bound,
            "violations": [v.as_dict() for v in self.violations],
            "ok": self.ok,
        }


def _check_pair(p: Params, a: frozenset[int], b: frozenset[int]) -> None:
    if len(a) != p.l or len(b) != p.l:
        raise BadPair(f"index sets must both have size l={p.l}, got {len(a)} and {len(b)}")
    if a & b:
        raise BadPair(f"index sets overlap in {sorted(a & b)}")
    for i in a | b:
        if not 1 <= i <= p.n:
            raise RangeError(f"index {i} outside [1..{p.n}]")


def _by_minus(fam: VectorFamily) -> dict[frozenset[int], list[SignedVector]]:
    out: dict[frozenset[int], list[SignedVector]] = {}
    for v in fam:
        out.setdefault(v.minus, []).append(v)
    return out


def subfamily(fam: VectorFamily, a: Iterable[int], b: Iterable[int]) -> SetFamily:
    """The slice F(A, B): plus remainders of members with minus set B and
    plus set containing A, as a (k-l)-uniform family over [1..n]."""
    p = fam.params
    a = frozenset(a)
    b = frozenset(b)
    _check_pair(p, a, b)
    members = [v.plus - a for v in fam if v.minus == b and a <= v.plus]
    return SetFamily(p.n, p.k - p.l, members)


def _ordered_pairs(p: Params):
    """All ordered pairs of disjoint l-sets, lexicographic on (A, B)."""
    idx = range(1, p.n + 1)
    for a in combinations(idx, p.l):
        a_set = frozenset(a)
        rest = [i for i in idx if i not in a_set]
        for b in combinations(rest, p.l):
            yield a, a_set, b, frozenset(b)


def lemma1_check(fam: VectorFamily) -> TraceReport:
    """Cross-intersection of F(A, B) and F(B, A) for every disjoint l-pair.

    A violating pair of slice members (C, D) with C cap D empty is folded
    back into the antipodal vector pair (A cup C minus B, B cup D minus A)
    and reported.  Antipodal-free input therefore yields no violations.
    """
    p = fam.params
    report = TraceReport(family_size=len(fam), threshold=choose(p.n - 2 * p.l - 1, p.k - p.l - 1))
    by_minus = _by_minus(fam)
    seen: set[frozenset[frozenset[int]]] = set()
    for a, a_set, b, b_set in _ordered_pairs(p):
        key = frozenset((a_set, b_set))
        if key in seen:
            continue
        seen.add(key)
        slice_ab = [v.plus - a_set for v in by_minus.get(b_set, ()) if a_set <= v.plus]
        slice_ba = [v.plus - b_set for v in by_minus.get(a_set, ()) if b_set <= v.plus]
        for c in slice_ab:
            for d in slice_ba:
                if not (c & d):
                    v = SignedVector(p.n, a_set | c, b_set)
                    w = SignedVector(p.n, b_set | d, a_set)
                    report.violations.append(
                        Violation(
                            "lemma1",
                            "slices are not cross-intersecting",
                            {
                                "A": sorted(a_set),
                                "B": sorted(b_set),
                                "C": sorted(c),
                                "D": sorted(d),
                                "antipodal_pair": [format_vector(v), format_vector(w)],
                            },
                        )
                    )
    return report


def deletion_procedure(fam: VectorFamily) -> tuple[VectorFamily, TraceReport]:
    """Single-pass deletion of vectors indexed by small slices.

    Returns the survivor family F' and a trace with per-pair slice sizes,
    per-pair deletion charges, and the accounting lower bound on |F'|.
    """
    p = fam.params
    threshold = choose(p.n - 2 * p.l - 1, p.k - p.l - 1)
    report = TraceReport(family_size=len(fam), threshold=threshold)
    by_minus = _by_minus(fam)
    doomed: set[SignedVector] = set()
    for a, a_set, b, b_set in _ordered_pairs(p):
        indexed = [v for v in by_minus.get(b_set, ()) if a_set <= v.plus]
        report.pair_counts[(a, b)] = len(indexed)
        if len(indexed) <= threshold:
            fresh = [v for v in indexed if v not in doomed]
            report.deletions[(a, b)] = len(fresh)
            doomed.update(fresh)
    survivors = VectorFamily(p, (v for v in fam if v not in doomed))
    report.deleted = tuple(format_vector(v) for v in fam if v in doomed)
    report.survivor_size = len(survivors)
    report.accounting_lower_bound = len(fam) - choose(p.n, 2 * p.l) * choose(2 * p.l, p.l) * threshold
    assert report.survivor_size == report.family_size - sum(report.deletions.values())
    if report.survivor_size < report.accounting_lower_bound:
        report.violations.append(
            Violation(
                "accounting",
                "survivor count fell below the accounting lower bound",
                {"survivors": report.survivor_size, "lower_bound": report.accounting_lower_bound},
            )
        )
    return survivors, report


def family_b(fam: VectorFamily, t: Iterable[int]) -> SetFamily:
    """Minus sets of members supported exactly on the (k+l)-set T."""
    p = fam.params
    t = frozenset(t)
    if len(t) != p.k + p.l:
        raise BadT(f"support set must have size k+l={p.k + p.l}, got {len(t)}")
    for i in t:
        if not 1 <= i <= p.n:
            raise RangeError(f"index {i} outside [1..{p.n}]")
    return SetFamily(p.n, p.l, (v.minus for v in fam if v.support == t))


def _find_antipodal_pair(fam: VectorFamily) -> tuple[SignedVector, SignedVector] | None:
    for v in fam:
        for w in antipodal_neighbors(v, fam.params):
            if w in fam:
                return v, w
    return None


def certify_theorem1(fam: VectorFamily) -> TraceReport:
    """Run the full pipeline and certify |F| <= theorem1_bound(p).

    Stops after the antipodal-free precheck if it fails (the remaining
    stages assume it).  Otherwise aggregates the lemma1 check, the
    deletion trace, the per-support intersecting families with their
    EKR cap, and the final two inequalities.
    """
    p = fam.params
    pair = _find_antipodal_pair(fam)
    if pair is not None:
        report = TraceReport(family_size=len(fam))
        report.violations.append(
            Violation(
                "antipodal-free precheck",
                "input family contains an antipodal pair",
                {"pair": [format_vector(pair[0]), format_vector(pair[1])]},
            )
        )
        return report

    report = lemma1_check(fam)
    survivors, deletion_report = deletion_procedure(fam)
    report.pair_counts = deletion_report.pair_counts
    report.deletions = deletion_report.deletions
    report.deleted = deletion_report.deleted
    report.survivor_size = deletion_report.survivor_size
    report.accounting_lower_bound = deletion_report.accounting_lower_bound
    report.violations.extend(deletion_report.violations)

    cap = choose(p.k + p.l - 1, p.l - 1)
    by_support: dict[frozenset[int], list[frozenset[int]]] = {}
    for v in survivors:
        by_support.setdefault(v.support, []).append(v.minus)
    for support in sorted(by_support, key=sorted):
        bt = SetFamily(p.n, p.l, by_support[support])
        t_key = tuple(sorted(support))
        report.family_b_sizes[t_key] = len(bt)
        if not is_intersecting(bt):
            report.violations.append(
                Violation(
                    "lemma2",
                    "surviving minus sets over a support are not intersecting",
                    {"T": list(t_key), "members": [sorted(s) for s in bt]},
                )
            )
        if len(bt) > cap:
            report.violations.append(
                Violation(
                    "lemma2-cap",
                    "surviving minus sets over a support exceed the EKR cap",
                    {"T": list(t_key), "size": len(bt), "cap": cap},
                )
            )

    survivor_cap = choose(p.n, p.k + p.l) * cap
    if report.survivor_size > survivor_cap:
        report.violations.append(
            Violation(
                "survivor-cap",
                "survivors exceed C(n,k+l) C(k+l-1,l-1)",
                {"survivors": report.survivor_size, "cap": survivor_cap},
            )
        )
    report.final_bound = theorem1_bound(p)
    if report.family_size > report.final_bound:
        report.violations.append(
            Violation(
                "final-bound",
                "family exceeds the two-term bound",
                {"size": report.family_size, "bound": report.final_bound},
            )
        )
    return report
