"""Undirected graphs on up to 62 vertices, stored as per-vertex bit rows.

Row ``adj[v]`` is the neighborhood indicator of vertex ``v`` packed into a
single Python int (bit ``u`` set iff ``{u, v}`` is an edge), so neighborhood
intersections, parity sums and BFS frontiers are plain integer bit
operations.  Vertices are labeled 0..n-1 internally; anything printed for
humans uses 1-based labels.

Besides the representation this module holds the named graph families
(complete, complete bipartite/multipartite, path, cycle, double star,
edgeless), and the graph-theoretic subroutines the counting and bound code
needs: connected components, BFS-tree 2-coloring, edge/degree/triangle/
diameter statistics, shortest even paths, and even paths inside a spanning
tree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import LimitError

MAX_VERTICES = 62


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(mask: int) -> tuple[int, ...]:
    """Vertices of a bitset, ascending."""
    return tuple(_iter_bits(mask))


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph: vertex count plus adjacency bit rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references vertices >= {self.n}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in _iter_bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        """Edges as (u, v) pairs with u < v, lexicographic."""
        for u in range(self.n):
            for v in _iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2


FAMILY_KINDS = (
    "complete",
    "bipartite",
    "multipartite",
    "path",
    "cycle",
    "doublestar",
    "edgeless",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family instance, e.g. ``FamilySpec("cycle", (6,))``.

    Kinds and parameters:
      complete: n        bipartite: a, b      multipartite: a_1, ..., a_r
      path: n            cycle: n (n >= 3)    doublestar: a, b
      edgeless: n
    All parameters must be >= 1.
    """

    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {self.kind!r}; choose from {FAMILY_KINDS}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if not self.params or any(p < 1 for p in self.params):
            raise ValueError(f"{self.kind}: parameters must be positive integers")
        arity = {"complete": 1, "path": 1, "cycle": 1, "edgeless": 1,
                 "bipartite": 2, "doublestar": 2}.get(self.kind)
        if arity is not None and len(self.params) != arity:
            raise ValueError(f"{self.kind} takes {arity} parameter(s), got {len(self.params)}")
        if self.kind == "cycle" and self.params[0] < 3:
            raise ValueError("cycle needs at least 3 vertices")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse the ``name:p1,p2,...`` shell syntax, e.g. ``multipartite:2,1,1``."""
        name, sep, rest = text.partition(":")
        if not sep or not rest:
            raise ValueError(f"family spec {text!r} is not of the form name:params")
        try:
            params = tuple(int(p) for p in rest.split(","))
        except ValueError:
            raise ValueError(f"non-integer parameter in family spec {text!r}") from None
        return cls(name.strip().lower(), params)

    @property
    def order(self) -> int:
        """Number of vertices of the resulting graph."""
        if self.kind == "doublestar":
            return self.params[0] + self.params[1] + 2
        return sum(self.params)

    def label(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.params))}"


def build_family(spec: FamilySpec) -> Graph:
    """Construct the graph for a family spec.

    Vertex numbering: multipartite classes (incl. bipartite) are consecutive
    blocks in parameter order; path and cycle vertices follow sequence order;
    the double star has centers 0 and 1 with the first center's leaves
    numbered before the second's.
    """
    kind, p = spec.kind, spec.params
    if kind == "complete":
        n = p[0]
        return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
    if kind == "edgeless":
        return Graph.from_edges(p[0], ())
    if kind in ("bipartite", "multipartite"):
        blocks, start = [], 0
        for a in p:
            blocks.append(range(start, start + a))
            start += a
        edges = [(u, v)
                 for i in range(len(blocks))
                 for j in range(i + 1, len(blocks))
                 for u in blocks[i] for v in blocks[j]]
        return Graph.from_edges(start, edges)
    if kind == "path":
        n = p[0]
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        n = p[0]
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
    if kind == "doublestar":
        a, b = p
        edges = [(0, 1)]
        edges += [(0, 2 + i) for i in range(a)]
        edges += [(1, 2 + a + i) for i in range(b)]
        return Graph.from_edges(a + b + 2, edges)
    raise AssertionError(kind)


def _closure(adj, seed: int) -> int:
    """Vertices reachable from the seed set (bitset fixpoint)."""
    reach = seed
    frontier = seed
    while frontier:
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~reach
        reach |= frontier
    return reach


def components(g: Graph) -> list[int]:
    """Vertex bitsets of the connected components, sorted by least vertex."""
    out = []
    remaining = g.full_mask
    while remaining:
        seed = remaining & -remaining
        comp = _closure(g.adj, seed)
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return _closure(g.adj, 1) == g.full_mask


def _bfs_tree(g: Graph, root: int = 0):
    """BFS from the root with ascending neighbor order.

    Returns (parent, depth) lists; parent[root] = -1, unreachable = -2.
    """
    parent = [-2] * g.n
    depth = [-1] * g.n
    parent[root] = -1
    depth[root] = 0
    frontier = [root]
    seen = 1 << root
    while frontier:
        nxt = []
        for v in frontier:
            for u in _iter_bits(g.adj[v] & ~seen):
                seen |= 1 << u
                parent[u] = v
                depth[u] = depth[v] + 1
                nxt.append(u)
        frontier = nxt
    return parent, depth


@dataclass(frozen=True)
class Bipartition:
    """2-coloring of a connected graph's BFS spanning tree by depth parity.

    ``color_a`` holds the even-depth vertices (including the root),
    ``color_b`` the odd-depth ones.  Every tree edge joins the two classes;
    for non-bipartite graphs this is a coloring of the tree only.
    """

    color_a: int
    color_b: int

    @property
    def a(self) -> int:
        return self.color_a.bit_count()

    @property
    def b(self) -> int:
        return self.color_b.bit_count()


def spanning_tree_bipartition(g: Graph, root: int = 0) -> Bipartition:
    """Color classes of the BFS spanning tree rooted at ``root`` (default 0)."""
    parent, depth = _bfs_tree(g, root)
    if -2 in parent:
        raise ValueError("graph is disconnected; apply per component")
    even = odd = 0
    for v, d in enumerate(depth):
        if d % 2 == 0:
            even |= 1 << v
        else:
            odd |= 1 << v
    return Bipartition(even, odd)


@dataclass(frozen=True)
class GraphStats:
    edges: int
    min_degree: int
    max_degree: int
    triangles: int
    diameter: float  # math.inf when disconnected

    def to_dict(self) -> dict:
        d = None if math.isinf(self.diameter) else int(self.diameter)
        return {"edges": self.edges, "min_degree": self.min_degree,
                "max_degree": self.max_degree, "triangles": self.triangles,
                "diameter": d}


def _eccentricity(adj, v: int, full: int) -> float:
    seen = 1 << v
    frontier = seen
    dist = 0
    while seen != full:
        nxt = 0
        for u in _iter_bits(frontier):
            nxt |= adj[u]
        nxt &= ~seen
        if not nxt:
            return math.inf
        seen |= nxt
        frontier = nxt
        dist += 1
    return dist


def graph_stats(g: Graph) -> GraphStats:
    """Edge count, degree extremes, triangle count, and diameter (all-pairs BFS)."""
    degrees = [row.bit_count() for row in g.adj]
    edges = sum(degrees) // 2
    triangles = 0
    for u, v in g.edges():
        above_v = g.full_mask >> (v + 1) << (v + 1)
        triangles += (g.adj[u] & g.adj[v] & above_v).bit_count()
    diameter = 0.0
    for v in range(g.n):
        ecc = _eccentricity(g.adj, v, g.full_mask)
        if math.isinf(ecc):
            diameter = math.inf
            break
        diameter = max(diameter, ecc)
    return GraphStats(edges, min(degrees), max(degrees), triangles, diameter)


MAX_EVEN_PATH_N = 20


def shortest_even_path(g: Graph, u: int, v: int) -> list[int] | None:
    """Shortest even-length path of distinct vertices from u to v, or None.

    Exact search by iterative deepening over even lengths; among shortest
    even paths the lexicographically smallest vertex sequence is returned.
    BFS on a parity-doubled graph would allow repeated vertices, so this is
    a genuine (exponential) path search, capped at n <= 20.
    """
    if u == v:
        raise ValueError("endpoints must differ")
    if g.n > MAX_EVEN_PATH_N:
        raise LimitError(f"shortest_even_path supports n <= {MAX_EVEN_PATH_N}, got {g.n}")
    dist_to_v = _bfs_distances(g, v)

    def extend(path: list[int], used: int, length: int) -> list[int] | None:
        here = path[-1]
        remaining = length - (len(path) - 1)
        if remaining == 0:
            return path if here == v else None
        for w in _iter_bits(g.adj[here] & ~used):
            if dist_to_v[w] > remaining:
                continue
            found = extend(path + [w], used | 1 << w, length)
            if found:
                return found
        return None

    for length in range(2, g.n, 2):
        found = extend([u], 1 << u, length)
        if found:
            return found
    return None


def _bfs_distances(g: Graph, source: int) -> list[float]:
    dist = [math.inf] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for x in _iter_bits(frontier):
            nxt |= g.adj[x]
        nxt &= ~seen
        for x in _iter_bits(nxt):
            dist[x] = d
        seen |= nxt
        frontier = nxt
    return dist


def tree_path(parent, depth, u: int, v: int) -> list[int]:
    """Unique path from u to v in the tree given by parent pointers."""
    up_u, up_v = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        up_u.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        up_v.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        up_u.append(a)
        up_v.append(b)
    return up_u[:-1] + up_v[::-1]


def tree_even_paths(g: Graph, root: int = 0) -> list[tuple[tuple[int, int], list[int]]]:
    """Even paths inside the BFS spanning tree, one per same-color pair.

    For every pair {u, v} in a common color class of the tree's depth-parity
    coloring, the unique tree path from u to v has even length.  Returns
    ((u, v), path) entries with u < v, sorted; there are C(a,2) + C(b,2).
    """
    parent, depth = _bfs_tree(g, root)
    if -2 in parent:
        raise ValueError("graph is disconnected; apply per component")
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if depth[u] % 2 == depth[v] % 2:
                out.append(((u, v), tree_path(parent, depth, u, v)))
    return out


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; vertices of later graphs are shifted up."""
    if not graphs:
        raise ValueError("need at least one graph")
    n = sum(g.n for g in graphs)
    if n > MAX_VERTICES:
        raise LimitError(f"union has {n} > {MAX_VERTICES} vertices")
    rows = []
    shift = 0
    for g in graphs:
        rows.extend(row << shift for row in g.adj)
        shift += g.n
    return Graph(n, tuple(rows))


def relabel(g: Graph, perm) -> Graph:
    """Apply a vertex permutation: new vertex perm[v] plays old v's role."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of 0..n-1")
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in _iter_bits(g.adj[v]):
            row |= 1 << perm[u]
        rows[perm[v]] = row
    return Graph(g.n, tuple(rows))


def is_bipartite(g: Graph) -> bool:
    """Proper 2-colorability, checked per component via BFS depth parity."""
    color = [-1] * g.n
    for comp in components(g):
        root = (comp & -comp).bit_length() - 1
        color[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for u in _iter_bits(g.adj[v]):
                    if color[u] == -1:
                        color[u] = color[v] ^ 1
                        nxt.append(u)
                    elif color[u] == color[v]:
                        return False
            frontier = nxt
    return True


@lru_cache(maxsize=None)
def edge_pair_order(n: int) -> tuple[tuple[int, int], ...]:
    """Upper-triangle pair order shared with graph6: (0,1), (0,2), (1,2), (0,3), ..."""
    return tuple((u, v) for v in range(1, n) for u in range(v))


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is given by bits of ``mask`` in edge_pair_order."""
    pairs = edge_pair_order(n)
    return Graph.from_edges(n, (pairs[p] for p in _iter_bits(mask)))
