"""Explicit graphs: storage, breadth-first layering, distance-regularity."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from ..model import IntersectionArray


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted neighbor lists."""

    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        adj = tuple(tuple(sorted(set(nb))) for nb in self.adjacency)
        n = len(adj)
        for v, nb in enumerate(adj):
            for w in nb:
                if w == v:
                    raise ValueError(f"loop at vertex {v}")
                if not 0 <= w < n or v not in adj[w]:
                    raise ValueError(f"edge {v}-{w} is not symmetric")
        object.__setattr__(self, "adjacency", adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(tuple(s) for s in nbrs))

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    def edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v, nb in enumerate(self.adjacency) for w in nb if v < w]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def regular_degree(self) -> Optional[int]:
        degs = {len(nb) for nb in self.adjacency}
        return degs.pop() if len(degs) == 1 else None

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        return sum(len(layer) for layer in _layers(self, 0)) == self.vertex_count

    def adjacency_matrix(self):
        import numpy as np

        n = self.vertex_count
        a = np.zeros((n, n))
        for v, nb in enumerate(self.adjacency):
            a[v, list(nb)] = 1.0
        return a


class DisconnectedGraph(ValueError):
    def __init__(self, unreachable):
        self.unreachable = sorted(unreachable)
        super().__init__(f"vertices unreachable from base: {self.unreachable}")


def _layers(g: Graph, x: int) -> list[list[int]]:
    dist = {x: 0}
    layers = [[x]]
    queue = deque([x])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                if dist[w] == len(layers):
                    layers.append([])
                layers[dist[w]].append(w)
                queue.append(w)
    return layers


def distance_partition(g: Graph, x: int) -> list[frozenset[int]]:
    """Vertex sets at distance 0, 1, 2, ... from ``x``."""
    layers = _layers(g, x)
    seen = sum(len(layer) for layer in layers)
    if seen != g.vertex_count:
        reached = set().union(*layers)
        raise DisconnectedGraph(set(range(g.vertex_count)) - reached)
    return [frozenset(layer) for layer in layers]


def verify_distance_regular(g: Graph) -> Optional[IntersectionArray]:
    """The intersection array of ``g`` if it is distance-regular, else None."""
    if g.vertex_count < 2 or g.regular_degree() is None or not g.is_connected():
        return None
    found: Optional[tuple[list[int], list[int]]] = None
    for x in range(g.vertex_count):
        layers = distance_partition(g, x)
        dist = {v: i for i, layer in enumerate(layers) for v in layer}
        b = [0] * len(layers)
        c = [0] * len(layers)
        for i, layer in enumerate(layers):
            counts = set()
            for y in layer:
                nb = [dist[w] for w in g.adjacency[y]]
                counts.add((nb.count(i - 1), nb.count(i + 1)))
            if len(counts) != 1:
                return None
            c[i], b[i] = counts.pop()
        params = (b[:-1], c[1:])
        if found is None:
            found = params
        elif found != params:
            return None
    return IntersectionArray(tuple(found[0]), tuple(found[1]))


def local_graph(g: Graph, x: int) -> Graph:
    """Subgraph induced on the neighbours of ``x``, relabelled 0..k-1 in order."""
    nb = g.adjacency[x]
    index = {v: i for i, v in enumerate(nb)}
    return Graph(tuple(
        tuple(index[w] for w in g.adjacency[v] if w in index) for v in nb
    ))


def is_odd_cycle(g: Graph) -> bool:
    n = g.vertex_count
    return n >= 3 and n % 2 == 1 and g.regular_degree() == 2 and g.is_connected()


# --- edge lists ---------------------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    """Read "u v" pairs, one per line, 0-indexed; blank lines and # comments ignored."""
    edges = []
    n = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex in {line!r}") from None
        if u < 0 or v < 0:
            raise ValueError(f"line {lineno}: negative vertex index")
        edges.append((u, v))
        n = max(n, u + 1, v + 1)
    return Graph.from_edges(n, edges)


def format_edgelist(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges())


# --- constructions --------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(n: int) -> Graph:
    return Graph.from_edges(2 * n, [(i, n + j) for i in range(n) for j in range(n)])


def generalized_petersen(n: int, k: int) -> Graph:
    edges = []
    for i in range(n):
        edges += [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]
    return Graph.from_edges(2 * n, edges)


def petersen_graph() -> Graph:
    return generalized_petersen(5, 2)


def dodecahedron() -> Graph:
    return generalized_petersen(10, 2)


def desargues_graph() -> Graph:
    return generalized_petersen(10, 3)


def hamming_graph(d: int, q: int) -> Graph:
    from itertools import product

    words = list(product(range(q), repeat=d))
    index = {w: i for i, w in enumerate(words)}
    edges = []
    for w in words:
        for pos in range(d):
            for s in range(q):
                if s != w[pos]:
                    u = w[:pos] + (s,) + w[pos + 1:]
                    edges.append((index[w], index[u]))
    return Graph.from_edges(len(words), edges)


def johnson_graph(n: int, k: int) -> Graph:
    sets = [frozenset(s) for s in combinations(range(n), k)]
    edges = [(i, j) for i, j in combinations(range(len(sets)), 2)
             if len(sets[i] & sets[j]) == k - 1]
    return Graph.from_edges(len(sets), edges)


def kneser_graph(n: int, k: int) -> Graph:
    sets = [frozenset(s) for s in combinations(range(n), k)]
    edges = [(i, j) for i, j in combinations(range(len(sets)), 2)
             if not sets[i] & sets[j]]
    return Graph.from_edges(len(sets), edges)


def icosahedron() -> Graph:
    # apex 0, upper ring 1..5, lower ring 6..10, apex 11
    edges = []
    for i in range(5):
        up, low = 1 + i, 6 + i
        edges += [(0, up), (up, 1 + (i + 1) % 5), (low, 6 + (i + 1) % 5), (11, low),
                  (up, low), (up, 6 + (i + 1) % 5)]
    return Graph.from_edges(12, edges)


def heawood_graph() -> Graph:
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return Graph.from_edges(14, edges)


def clebsch_graph() -> Graph:
    """Folded 5-cube: 4-bit words adjacent when they differ in 1 or all 4 bits."""
    edges = [(u, v) for u, v in combinations(range(16), 2)
             if bin(u ^ v).count("1") in (1, 4)]
    return Graph.from_edges(16, edges)


def line_graph(g: Graph) -> Graph:
    es = g.edges()
    edges = [(i, j) for i, j in combinations(range(len(es)), 2) if set(es[i]) & set(es[j])]
    return Graph.from_edges(len(es), edges)


def paley_graph(q: int) -> Graph:
    squares = {(x * x) % q for x in range(1, q)}
    edges = [(u, v) for u, v in combinations(range(q), 2) if (v - u) % q in squares]
    return Graph.from_edges(q, edges)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Graph
    array: IntersectionArray


def _arr(b, c) -> IntersectionArray:
    return IntersectionArray(tuple(b), tuple(c))


def catalog() -> list[CatalogEntry]:
    """Known distance-regular graphs with their intersection arrays."""
    out = [CatalogEntry(f"K{n}", complete_graph(n), _arr([n - 1], [1])) for n in range(2, 8)]
    out += [
        CatalogEntry("C5", cycle_graph(5), _arr([2, 1], [1, 1])),
        CatalogEntry("C6", cycle_graph(6), _arr([2, 1, 1], [1, 1, 2])),
        CatalogEntry("C7", cycle_graph(7), _arr([2, 1, 1], [1, 1, 1])),
        CatalogEntry("K3,3", complete_bipartite(3), _arr([3, 2], [1, 3])),
        CatalogEntry("K4,4", complete_bipartite(4), _arr([4, 3], [1, 4])),
        CatalogEntry("Petersen", petersen_graph(), _arr([3, 2], [1, 1])),
        CatalogEntry("cube H(3,2)", hamming_graph(3, 2), _arr([3, 2, 1], [1, 2, 3])),
        CatalogEntry("rook H(2,3)", hamming_graph(2, 3), _arr([4, 2], [1, 2])),
        CatalogEntry("rook H(2,4)", hamming_graph(2, 4), _arr([6, 3], [1, 2])),
        CatalogEntry("J(5,2)", johnson_graph(5, 2), _arr([6, 2], [1, 4])),
        CatalogEntry("J(6,2)", johnson_graph(6, 2), _arr([8, 3], [1, 4])),
        CatalogEntry("Kneser(6,2)", kneser_graph(6, 2), _arr([6, 4], [1, 3])),
        CatalogEntry("icosahedron", icosahedron(), _arr([5, 2, 1], [1, 2, 5])),
        CatalogEntry("dodecahedron", dodecahedron(), _arr([3, 2, 1, 1, 1], [1, 1, 1, 2, 3])),
        CatalogEntry("Heawood", heawood_graph(), _arr([3, 2, 2], [1, 1, 3])),
        CatalogEntry("Desargues", desargues_graph(), _arr([3, 2, 2, 1, 1], [1, 1, 2, 2, 3])),
        CatalogEntry("Clebsch", clebsch_graph(), _arr([5, 4], [1, 2])),
        CatalogEntry("L(Petersen)", line_graph(petersen_graph()), _arr([4, 2, 1], [1, 1, 4])),
        CatalogEntry("Paley(13)", paley_graph(13), _arr([6, 3], [1, 3])),
    ]
    return out
