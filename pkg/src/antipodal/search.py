"""Exact maximum independent set over antipodality and disjointness graphs.

Graphs are bit-indexed: the vertex set of a residual subproblem is one
Python int, and each vertex's neighborhood is a precomputed mask, so set
algebra is word-parallel.  The solver is a branch-and-bound with three
exactness-preserving accelerations:

* reductions: isolated vertices are always taken; a degree-1 vertex is
  taken over its neighbor (dominance: swapping the neighbor out for the
  leaf never shrinks an independent set), cascading until the residual
  has minimum degree 2;
* decomposition: connected components are solved independently and
  summed, with exact results memoized per residual mask;
* branching: on a maximum-degree vertex (lowest index on ties), include
  branch first; the exclude branch is skipped when a greedy clique-cover
  bound on the residual cannot beat the include result.  The cover
  greedily pairs each vertex with an earlier unpaired neighbor, i.e. it
  covers by edges and singletons; on the triangle-free antipodality
  graphs that is the full greedy cover, since no clique has three
  vertices.

Runs are deterministic: all scans are in ascending vertex order.  A
budget (wall-clock seconds) caps the search; on exhaustion the result
carries proof_of_optimality=False and a greedy lower bound instead.
"""

from __future__ import annotations

import math
import sys
import time
from dataclasses import dataclass
from itertools import combinations

from .bounds import ekr_bound, theorem1_bound, theorem2_bound
from .errors import InvalidParams, TooLarge
from .vectors import (
    Params,
    VectorFamily,
    antipodal_neighbors,
    cardinality_v,
    enumerate_v,
    parse_vector,
)

__all__ = [
    "Graph",
    "SearchResult",
    "antipodality_graph",
    "kneser_graph",
    "max_independent_set",
    "max_antipodal_free",
    "max_intersecting",
]

DEFAULT_BUDGET = 60.0
DEFAULT_VERTEX_CAP = 5000
_MEMO_BITS = 48        # memoize residuals at most this large
_MEMO_ENTRIES = 400000


@dataclass(frozen=True)
class Graph:
    """Undirected graph: labels plus one adjacency bitmask per vertex."""

    labels: tuple[str, ...]
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(self.adj) != n:
            raise InvalidParams(f"{n} labels but {len(self.adj)} adjacency masks")
        for i, mask in enumerate(self.adj):
            if mask >> n:
                raise InvalidParams(f"adjacency of vertex {i} leaves the vertex range")
            if mask >> i & 1:
                raise InvalidParams(f"self-loop at vertex {i}")
        for i, mask in enumerate(self.adj):
            mm = mask
            while mm:
                lsb = mm & -mm
                j = lsb.bit_length() - 1
                mm ^= lsb
                if not self.adj[j] >> i & 1:
                    raise InvalidParams(f"asymmetric edge {i}-{j}")

    @classmethod
    def from_neighbor_lists(cls, labels, neighbor_lists) -> "Graph":
        masks = []
        for nbrs in neighbor_lists:
            m = 0
            for j in nbrs:
                m |= 1 << j
            masks.append(m)
        return cls(tuple(labels), tuple(masks))

    @property
    def n(self) -> int:
        return len(self.labels)

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one exact (or budget-truncated) optimization."""

    optimum: int
    witness: tuple[str, ...]
    nodes_explored: int
    elapsed: float
    proof_of_optimality: bool

    def as_dict(self) -> dict:
        return {
            "optimum": self.optimum,
            "witness": list(self.witness),
            "nodes_explored": self.nodes_explored,
            "proof_of_optimality": self.proof_of_optimality,
        }


class _OutOfTime(Exception):
    pass


class _Solver:
    __slots__ = ("adj", "closed", "deadline", "nodes", "memo")

    def __init__(self, adj: tuple[int, ...], deadline: float):
        self.adj = adj
        self.closed = tuple(a | (1 << i) for i, a in enumerate(adj))
        self.deadline = deadline
        self.nodes = 0
        self.memo: dict[int, tuple[int, int]] = {}

    def solve(self, mask: int) -> tuple[int, int]:
        """Exact (size, witness_mask) for the induced subgraph on mask."""
        self.nodes += 1
        if self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _OutOfTime
        if mask == 0:
            return 0, 0
        hit = self.memo.get(mask)
        if hit is not None:
            return hit

        adj = self.adj
        chosen = 0
        m = mask
        while True:
            iso = 0
            leaf = -1
            mm = m
            while mm:
                lsb = mm & -mm
                i = lsb.bit_length() - 1
                mm ^= lsb
                d = adj[i] & m
                if d == 0:
                    iso |= lsb
                elif leaf < 0 and d & (d - 1) == 0:
                    leaf = i
            if iso:
                chosen |= iso
                m &= ~iso
            if leaf < 0:
                break
            chosen |= 1 << leaf
            m &= ~self.closed[leaf]

        if m == 0:
            result = (chosen.bit_count(), chosen)
            self._remember(mask, result)
            return result

        comps = self._components(m)
        if len(comps) > 1:
            size = 0
            wit = 0
            for comp in comps:
                s, w = self.solve(comp)
                size += s
                wit |= w
        else:
            v = self._branch_vertex(m)
            s_in, w_in = self.solve(m & ~self.closed[v])
            size = s_in + 1
            wit = w_in | (1 << v)
            rest = m & ~(1 << v)
            if self._cover_bound(rest) > size:
                s_ex, w_ex = self.solve(rest)
                if s_ex > size:
                    size, wit = s_ex, w_ex
        result = (size + chosen.bit_count(), wit | chosen)
        self._remember(mask, result)
        return result

    def _remember(self, mask: int, result: tuple[int, int]) -> None:
        if mask.bit_count() <= _MEMO_BITS and len(self.memo) < _MEMO_ENTRIES:
            self.memo[mask] = result

    def _components(self, m: int) -> list[int]:
        comps = []
        rem = m
        while rem:
            comp = rem & -rem
            frontier = comp
            while frontier:
                nxt = 0
                ff = frontier
                while ff:
                    lsb = ff & -ff
                    i = lsb.bit_length() - 1
                    ff ^= lsb
                    nxt |= self.adj[i] & rem
                nxt &= ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            rem &= ~comp
        return comps

    def _branch_vertex(self, m: int) -> int:
        best_v = -1
        best_d = -1
        mm = m
        while mm:
            lsb = mm & -mm
            i = lsb.bit_length() - 1
            mm ^= lsb
            d = (self.adj[i] & m).bit_count()
            if d > best_d:
                best_d = d
                best_v = i
        return best_v

    def _cover_bound(self, mask: int) -> int:
        """Clique-cover upper bound: vertices minus greedily matched pairs."""
        open_m = 0
        pairs = 0
        mm = mask
        while mm:
            lsb = mm & -mm
            i = lsb.bit_length() - 1
            mm ^= lsb
            cand = self.adj[i] & open_m
            if cand:
                open_m ^= cand & -cand
                pairs += 1
            else:
                open_m |= lsb
        return mask.bit_count() - pairs


def _greedy_mask(adj: tuple[int, ...]) -> int:
    """Min-degree greedy independent set, used as the budget fallback."""
    n = len(adj)
    closed = [a | (1 << i) for i, a in enumerate(adj)]
    m = (1 << n) - 1
    chosen = 0
    while m:
        best_v = -1
        best_d = n + 1
        mm = m
        while mm:
            lsb = mm & -mm
            i = lsb.bit_length() - 1
            mm ^= lsb
            d = (adj[i] & m).bit_count()
            if d < best_d:
                best_d = d
                best_v = i
        chosen |= 1 << best_v
        m &= ~closed[best_v]
    return chosen


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        lsb = mask & -mask
        out.append(lsb.bit_length() - 1)
        mask ^= lsb
    return out


def _is_independent(adj: tuple[int, ...], mask: int) -> bool:
    return all(adj[i] & mask == 0 for i in _bits(mask))


def max_independent_set(g: Graph, budget: float = DEFAULT_BUDGET) -> SearchResult:
    """Exact alpha(g) with witness; lower bound only on budget exhaustion."""
    t0 = time.monotonic()
    solver = _Solver(g.adj, t0 + budget)
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 3 * g.n + 1000))
    try:
        size, wit = solver.solve((1 << g.n) - 1)
        proved = True
    except _OutOfTime:
        wit = _greedy_mask(g.adj)
        size = wit.bit_count()
        proved = False
    finally:
        sys.setrecursionlimit(old_limit)
    assert _is_independent(g.adj, wit) and wit.bit_count() == size
    return SearchResult(
        optimum=size,
        witness=tuple(g.labels[i] for i in _bits(wit)),
        nodes_explored=solver.nodes,
        elapsed=time.monotonic() - t0,
        proof_of_optimality=proved,
    )


def antipodality_graph(p: Params, max_vertices: int = DEFAULT_VERTEX_CAP) -> Graph:
    """V(n, k, l) with an edge per antipodal pair; vertices in canonical order."""
    size = cardinality_v(p)
    if size > max_vertices:
        raise TooLarge(f"|V|={size} exceeds the vertex cap {max_vertices}")
    fam = enumerate_v(p)
    index = {v: i for i, v in enumerate(fam)}
    adj = [0] * size
    for i, v in enumerate(fam):
        for w in antipodal_neighbors(v, p):
            j = index[w]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(labels=fam.strings(), adj=tuple(adj))


def kneser_graph(n: int, k: int, max_vertices: int = DEFAULT_VERTEX_CAP) -> Graph:
    """k-subsets of [n] with an edge per disjoint pair, lex vertex order."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if math.comb(n, k) > max_vertices:
        raise TooLarge(f"C({n},{k})={math.comb(n, k)} exceeds the vertex cap {max_vertices}")
    sets = [frozenset(c) for c in combinations(range(1, n + 1), k)]
    adj = [0] * len(sets)
    for i, a in enumerate(sets):
        for j in range(i + 1, len(sets)):
            if not (a & sets[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    labels = tuple(",".join(map(str, sorted(s))) for s in sets)
    return Graph(labels=labels, adj=tuple(adj))


def max_antipodal_free(p: Params, budget: float = DEFAULT_BUDGET) -> SearchResult:
    """Exact maximum antipodal-free subfamily of V(n, k, l).

    The witness is re-verified antipodal-free, and the optimum is checked
    against the applicable closed-form bounds before returning.
    """
    result = max_independent_set(antipodality_graph(p), budget)
    fam = VectorFamily(p, (parse_vector(s) for s in result.witness))
    assert len(fam) == result.optimum, "witness has duplicate or invalid members"
    for v in fam:
        for w in antipodal_neighbors(v, p):
            assert w not in fam, "witness is not antipodal-free"
    assert result.optimum <= theorem1_bound(p)
    if p.circle_regime:
        assert result.optimum <= theorem2_bound(p)
    return result


def max_intersecting(n: int, k: int, budget: float = DEFAULT_BUDGET) -> SearchResult:
    """Exact maximum intersecting k-uniform family over [n].

    Independent sets of the Kneser graph are exactly the intersecting
    families.  For n >= 2k the optimum is checked against ekr_bound.
    """
    result = max_independent_set(kneser_graph(n, k), budget)
    if n >= 2 * k and result.proof_of_optimality:
        assert result.optimum <= ekr_bound(n, k)
    return result
