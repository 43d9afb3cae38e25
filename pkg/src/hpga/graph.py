"""Weighted graph and partition model, cut-weight objective, and the
brute-force optimum used as a desk-scale verification oracle.

Vertices are numbered 1..n and edges 1..m; the edge *list order* is part of
the model (binary encodings index edges strictly by position).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

DEFAULT_ORACLE_LIMIT = 10


class GraphFormatError(ValueError):
    """Raised for malformed graph documents; message carries the line number."""


class OracleLimitError(ValueError):
    """Raised when a graph is too large for exhaustive enumeration."""


@dataclass(frozen=True)
class Graph:
    """Undirected graph with nonnegative edge weights.

    ``edges[k-1]`` is edge ``e_k`` as ``(u, v, w)`` with ``u < v``.
    Immutable and hashable; safe to share across threads.
    """

    n: int
    edges: tuple[tuple[int, int, float], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        seen = set()
        for u, v, w in self.edges:
            if not 1 <= u < v <= self.n:
                raise ValueError(f"edge ({u},{v}) violates 1 <= u < v <= n")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            if w < 0:
                raise ValueError(f"negative weight on edge ({u},{v})")
            seen.add((u, v))

    @property
    def m(self) -> int:
        return len(self.edges)

    def total_weight(self) -> float:
        return sum(w for _, _, w in self.edges)


@dataclass(frozen=True)
class Partition:
    """Vertex-to-cluster assignment; ``assign[i-1]`` is vertex ``v_i``'s cluster.

    Instances produced by this package are canonical: labels are dense 1..k,
    numbered by increasing smallest member vertex. Build via
    :func:`canonicalize` rather than the raw constructor.
    """

    assign: tuple[int, ...]
    k: int

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True)
class Constraints:
    """Optional feasibility bounds on a partition."""

    max_cluster_size: int | None = None
    max_clusters: int | None = None

    def __post_init__(self) -> None:
        if self.max_cluster_size is not None and self.max_cluster_size < 1:
            raise ValueError("max_cluster_size must be >= 1")
        if self.max_clusters is not None and self.max_clusters < 1:
            raise ValueError("max_clusters must be >= 1")

    def is_bounded(self) -> bool:
        return self.max_cluster_size is not None or self.max_clusters is not None


NO_CONSTRAINTS = Constraints()


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    Format: first non-comment line is ``n m``; then exactly m lines ``u v w``.
    Lines starting with ``#`` are comments; the k-th edge line is edge ``e_k``.
    Endpoints are normalized to ``u < v`` without reordering the list.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int, float]] = []
    seen: dict[tuple[int, int], int] = {}
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphFormatError(f"line {lineno}: expected header 'n m'")
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer header") from None
            if n < 1 or m < 0:
                raise GraphFormatError(f"line {lineno}: invalid header values n={n} m={m}")
            header = (n, m)
            continue
        if len(edges) == m:
            raise GraphFormatError(f"line {lineno}: more than {m} edge lines")
        if len(fields) != 3:
            raise GraphFormatError(f"line {lineno}: expected 'u v w'")
        try:
            u, v = int(fields[0]), int(fields[1])
            w = float(fields[2])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: malformed edge line") from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"line {lineno}: vertex index out of range 1..{n}")
        if w < 0 or math.isnan(w) or math.isinf(w):
            raise GraphFormatError(f"line {lineno}: weight must be finite and >= 0")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise GraphFormatError(
                f"line {lineno}: duplicate edge ({u},{v}), first seen at line {seen[(u, v)]}"
            )
        seen[(u, v)] = lineno
        edges.append((u, v, w))
    if header is None:
        raise GraphFormatError("line 1: empty document, expected header 'n m'")
    if len(edges) != m:
        raise GraphFormatError(f"unexpected end of input: got {len(edges)} of {m} edges")
    return Graph(n=n, edges=tuple(edges))


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    for u, v, w in g.edges:
        lines.append(f"{u} {v} {format_weight(w)}")
    return "\n".join(lines) + "\n"


def format_weight(w: float) -> str:
    """Render a weight with '.' decimal separator, integers without a dot."""
    return format(w, ".12g")


def cut_weight(g: Graph, p: Partition) -> float:
    """Sum of weights of edges whose endpoints lie in different clusters."""
    a = p.assign
    return sum(w for u, v, w in g.edges if a[u - 1] != a[v - 1])


def intra_weight(g: Graph, p: Partition) -> float:
    a = p.assign
    return sum(w for u, v, w in g.edges if a[u - 1] == a[v - 1])


def canonicalize(labels: Sequence[int] | Partition) -> Partition:
    """Renumber cluster labels 1..k by increasing smallest member vertex.

    Accepts any labeling (not necessarily dense or ordered); grouping is
    preserved. Idempotent.
    """
    if isinstance(labels, Partition):
        labels = labels.assign
    remap: dict[int, int] = {}
    out = []
    for lab in labels:
        if lab not in remap:
            remap[lab] = len(remap) + 1
        out.append(remap[lab])
    return Partition(assign=tuple(out), k=len(remap))


def format_partition(p: Partition) -> str:
    return f"{p.k};{','.join(str(a) for a in p.assign)}"


def single_cluster(n: int) -> Partition:
    return Partition(assign=(1,) * n, k=1)


def all_singletons(n: int) -> Partition:
    return Partition(assign=tuple(range(1, n + 1)), k=n)


def clusters_of(p: Partition) -> list[list[int]]:
    """Vertices of each cluster, indexed by cluster label - 1."""
    out: list[list[int]] = [[] for _ in range(p.k)]
    for v, lab in enumerate(p.assign, start=1):
        out[lab - 1].append(v)
    return out


def components_from_intra(g: Graph, intra: Iterable[int]) -> Partition:
    """Canonical partition whose clusters are the connected components of the
    subgraph keeping only the given edges (1-based edge indices).

    Vertices touched by no kept edge become singletons.
    """
    parent = list(range(g.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in intra:
        if not 1 <= k <= g.m:
            raise ValueError(f"edge index {k} out of range 1..{g.m}")
        u, v, _ = g.edges[k - 1]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[rv] = ru
    return canonicalize([find(v) for v in range(1, g.n + 1)])


def satisfies(p: Partition, c: Constraints) -> bool:
    if c.max_clusters is not None and p.k > c.max_clusters:
        return False
    if c.max_cluster_size is not None:
        sizes = [0] * p.k
        for lab in p.assign:
            sizes[lab - 1] += 1
        if max(sizes) > c.max_cluster_size:
            return False
    return True


def _restricted_growth_strings(n: int):
    """All set partitions of 1..n as canonical label vectors, lexicographic."""
    labels = [1] * n
    maxes = [1] * n  # maxes[i] = max(labels[:i+1])

    while True:
        yield tuple(labels)
        # advance to next restricted-growth string
        i = n - 1
        while i > 0 and labels[i] == maxes[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        labels[i] += 1
        maxes[i] = max(maxes[i - 1], labels[i])
        for j in range(i + 1, n):
            labels[j] = 1
            maxes[j] = maxes[i]


def brute_force_optimum(
    g: Graph,
    c: Constraints = NO_CONSTRAINTS,
    limit: int = DEFAULT_ORACLE_LIMIT,
) -> tuple[Partition, float]:
    """Exhaustive minimum-cut-weight partition under the given constraints.

    Enumerates restricted-growth strings in lexicographic order, so ties are
    broken by the lexicographically smallest canonical assignment vector.
    """
    if g.n > limit:
        raise OracleLimitError(
            f"graph has {g.n} vertices, above the oracle limit of {limit}"
        )
    if (
        c.max_clusters is not None
        and c.max_cluster_size is not None
        and c.max_clusters * c.max_cluster_size < g.n
    ):
        raise ValueError(
            f"infeasible constraints: {c.max_clusters} clusters of at most "
            f"{c.max_cluster_size} vertices cannot cover {g.n} vertices"
        )
    best_assign: tuple[int, ...] | None = None
    best_w = math.inf
    for labels in _restricted_growth_strings(g.n):
        k = max(labels)
        if c.max_clusters is not None and k > c.max_clusters:
            continue
        if c.max_cluster_size is not None:
            sizes = [0] * k
            for lab in labels:
                sizes[lab - 1] += 1
            if max(sizes) > c.max_cluster_size:
                continue
        w = sum(wt for u, v, wt in g.edges if labels[u - 1] != labels[v - 1])
        if w < best_w:
            best_w = w
            best_assign = labels
    if best_assign is None:
        raise ValueError("infeasible constraints: no partition satisfies them")
    return Partition(assign=best_assign, k=max(best_assign)), best_w


@lru_cache(maxsize=512)
def adjacency(g: Graph) -> tuple[tuple[tuple[int, float], ...], ...]:
    """Per-vertex (neighbor, weight) lists; index 0 unused."""
    adj: list[list[tuple[int, float]]] = [[] for _ in range(g.n + 1)]
    for u, v, w in g.edges:
        adj[u].append((v, w))
        adj[v].append((u, w))
    return tuple(tuple(x) for x in adj)
