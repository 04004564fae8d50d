"""Graph Lie algebras and maximum matchings.

A simple graph G on n vertices with m edges yields a 2-step nilpotent
algebra of dimension n + m: vertex generators v_i, one central wedge
generator per edge, and [v_i, v_j] = the wedge of an edge exactly when
{i, j} is an edge.  The index of that algebra is n + m - 2 * matching
number, which gives two independent computation routes (combinatorial and
rank-based); disagreement between them is a hard internal error.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import LieAlgebra
from .index import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    IndexReport,
    LinearFunctional,
    b_ell_matrix,
    index,
)
from .linalg import rank

Edge = tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"edge {e!r} must be a pair")
            i, j = e
            if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < j < n):
                raise ValueError(f"edge ({i},{j}) must satisfy 0 <= i < j < n")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i},{j})")
            seen.add((i, j))
        object.__setattr__(self, "edges", tuple(sorted((int(i), int(j)) for i, j in self.edges)))

    @classmethod
    def from_dict(cls, d: dict) -> "SimpleGraph":
        if not isinstance(d, dict) or "vertices" not in d or "edges" not in d:
            raise ValueError('graph JSON needs "vertices" and "edges"')
        n = d["vertices"]
        if not isinstance(n, int):
            raise ValueError("vertex count must be an integer")
        edges = [tuple(e) for e in d["edges"]]
        return cls(n, tuple(edges))

    def to_dict(self) -> dict:
        return {"vertices": self.vertex_count, "edges": [list(e) for e in self.edges]}

    def adjacency(self) -> list[list[int]]:
        adj = [[] for _ in range(self.vertex_count)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj


def build_graph_algebra(graph: SimpleGraph) -> LieAlgebra:
    n = graph.vertex_count
    labels = [f"v{i + 1}" for i in range(n)] + [
        f"v{i + 1}^v{j + 1}" for (i, j) in graph.edges
    ]
    brackets = {
        (i, j): {n + e: Fraction(1)} for e, (i, j) in enumerate(graph.edges)
    }
    return LieAlgebra(n + len(graph.edges), tuple(labels), brackets)


def maximum_matching(graph: SimpleGraph) -> tuple[Edge, ...]:
    """A maximum matching via augmenting paths with blossom contraction."""
    n = graph.vertex_count
    adj = graph.adjacency()
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used = [False] * n
        while True:
            a = base[a]
            used[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if used[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]):
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root: int) -> bool:
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    # Odd cycle: contract the blossom at the common base.
                    curbase = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, curbase, to, blossom)
                    mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = parent[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    used[match[to]] = True
                    q.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_path(v)
    return tuple(sorted((v, match[v]) for v in range(n) if v < match[v]))


def matching_number(graph: SimpleGraph) -> tuple[int, tuple[Edge, ...]]:
    m = maximum_matching(graph)
    return len(m), m


def matching_number_exhaustive(graph: SimpleGraph) -> int:
    """Independent oracle: exhaustive search over vertex subsets, memoized.

    Exponential in the vertex count (fine for n <= ~16); used to
    cross-validate the blossom search in tests and the verification harness.
    """
    n = graph.vertex_count
    adj_mask = [0] * n
    for i, j in graph.edges:
        adj_mask[i] |= 1 << j
        adj_mask[j] |= 1 << i

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask == 0:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        out = best(rest)
        free = adj_mask[v] & rest
        while free:
            low = free & -free
            u = low.bit_length() - 1
            free ^= low
            cand = 1 + best(rest & ~(1 << u))
            if cand > out:
                out = cand
        return out

    result = best((1 << n) - 1)
    best.cache_clear()
    return result


def validate_matching(graph: SimpleGraph, matching) -> tuple[Edge, ...]:
    edge_set = set(graph.edges)
    used = set()
    out = []
    for e in matching:
        e = (min(e), max(e))
        if e not in edge_set:
            raise ValueError(f"matching edge {e} is not a graph edge")
        if e[0] in used or e[1] in used:
            raise ValueError(f"matching is not vertex-disjoint at edge {e}")
        used.update(e)
        out.append(e)
    return tuple(sorted(out))


def matching_functional(graph: SimpleGraph, matching) -> LinearFunctional:
    """Sum of duals of the wedge coordinates of the matched edges."""
    matching = validate_matching(graph, matching)
    n = graph.vertex_count
    coords = [Fraction(0)] * (n + len(graph.edges))
    pos = {e: n + t for t, e in enumerate(graph.edges)}
    for e in matching:
        coords[pos[e]] = Fraction(1)
    return LinearFunctional.of(coords)


@dataclass(frozen=True)
class GraphIndexResult:
    graph: SimpleGraph
    matching: tuple[Edge, ...]
    via_matching: int
    via_rank: int
    report: IndexReport

    @property
    def index(self) -> int:
        return self.via_matching


def graph_index(
    graph: SimpleGraph,
    *,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    prime: int | None = None,
) -> GraphIndexResult:
    nu, witness = matching_number(graph)
    dim = graph.vertex_count + len(graph.edges)
    via_matching = dim - 2 * nu
    report = index(build_graph_algebra(graph), trials=trials, seed=seed, prime=prime)
    if report.index != via_matching:
        raise RuntimeError(
            "graph index mismatch between matching and rank routes "
            f"({via_matching} vs {report.index}); this is a bug"
        )
    return GraphIndexResult(graph, witness, via_matching, report.index, report)


def matching_stabilizer_dim(graph: SimpleGraph, matching) -> int:
    """dim of the stabilizer of the matching functional, via exact rank."""
    alg = build_graph_algebra(graph)
    ell = matching_functional(graph, matching)
    return alg.dim - rank(b_ell_matrix(alg, ell))
