"""Intersection graphs of submodule lattices.

Vertices are the nontrivial submodules in canonical lattice order; two
vertices are adjacent exactly when their intersection is nonzero.  Exact
invariants delegate to the branch-and-bound solvers; the two structural
coloring schemes never return an improper coloring, reporting an
applicability failure instead.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .caps import Caps
from .errors import ConstructionError, StructureError
from .lattice import Lattice, simples_isomorphic
from .solvers import (
    chromatic_number,
    is_proper_coloring,
    max_clique,
    max_cliques,
)

INF = math.inf


@dataclass(frozen=True)
class GraphShape:
    tag: str  # null | complete | star | other
    order: int


@dataclass
class Coloring:
    assignment: tuple[int, ...]
    count: int
    tag: str  # exact | greedy | overline | uniform-complement
    extra: dict = field(default_factory=dict)


@dataclass
class ApplicabilityFailure:
    reason: str
    witness: str | None = None
    extra: dict = field(default_factory=dict)


class IntersectionGraph:
    def __init__(self, lattice: Lattice):
        self.lattice = lattice
        self.module = lattice.module
        self.lattice_pos = tuple(lattice.nontrivial_indices())
        self.vertices = tuple(lattice.subs[i] for i in self.lattice_pos)
        self.n = len(self.vertices)
        self.adj = [0] * self.n
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.vertices[i].bits & self.vertices[j].bits != 1:
                    self.adj[i] |= 1 << j
                    self.adj[j] |= 1 << i

    # -- basic invariants --------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def complement_degree(self, v: int) -> int:
        return self.n - 1 - self.degree(v)

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if (self.adj[i] >> j) & 1]

    def complement_adj(self) -> list[int]:
        full = (1 << self.n) - 1
        return [full & ~self.adj[v] & ~(1 << v) for v in range(self.n)]

    def clique_number(self, caps: Caps | None = None) -> tuple[int, list[int]]:
        return max_clique(self.n, self.adj, caps)

    def maximal_cliques(self, caps: Caps | None = None) -> list[list[int]]:
        return max_cliques(self.n, self.adj, caps)

    def chromatic(self, caps: Caps | None = None) -> tuple[int, Coloring]:
        k, colors = chromatic_number(self.n, self.adj, caps)
        omega, _ = max_clique(self.n, self.adj, caps)
        if omega > k:
            raise ConstructionError("solver inconsistency: omega > chi")
        return k, Coloring(tuple(colors), k, "exact")

    def complement_clique_number(self, caps: Caps | None = None) -> tuple[int, list[int]]:
        return max_clique(self.n, self.complement_adj(), caps)

    def complement_chromatic(self, caps: Caps | None = None) -> tuple[int, Coloring]:
        k, colors = chromatic_number(self.n, self.complement_adj(), caps)
        return k, Coloring(tuple(colors), k, "exact")

    # -- walks -------------------------------------------------------------

    def _bfs(self, start: int) -> list[int]:
        dist = [-1] * self.n
        dist[start] = 0
        queue = [start]
        while queue:
            nxt = []
            for u in queue:
                mask = self.adj[u]
                while mask:
                    w = (mask & -mask).bit_length() - 1
                    mask &= mask - 1
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            queue = nxt
        return dist

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return min(self._bfs(0)) >= 0

    def diameter(self) -> float:
        if self.n <= 1:
            return 0
        best = 0
        for v in range(self.n):
            dist = self._bfs(v)
            if min(dist) < 0:
                return INF
            best = max(best, max(dist))
        return best

    def girth(self) -> float:
        best = INF
        for s in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[s] = 0
            queue = [s]
            while queue:
                nxt = []
                for u in queue:
                    mask = self.adj[u]
                    while mask:
                        w = (mask & -mask).bit_length() - 1
                        mask &= mask - 1
                        if dist[w] < 0:
                            dist[w] = dist[u] + 1
                            parent[w] = u
                            nxt.append(w)
                        elif w != parent[u]:
                            best = min(best, dist[u] + dist[w] + 1)
                queue = nxt
        return best

    def is_triangle_free(self) -> bool:
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.adj[i] >> j) & 1 and self.adj[i] & self.adj[j]:
                    return False
        return True

    # -- shapes --------------------------------------------------------------

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def is_null_graph(self) -> bool:
        return self.edge_count() == 0

    def is_complete_graph(self) -> bool:
        return self.n >= 1 and self.edge_count() == self.n * (self.n - 1) // 2

    def is_star_graph(self) -> bool:
        """One vertex adjacent to all others, no other edges; includes the
        two-vertex case."""
        if self.n < 2:
            return False
        for c in range(self.n):
            if self.degree(c) == self.n - 1 and all(
                self.degree(v) == 1 for v in range(self.n) if v != c
            ):
                return True
        return False

    def star_center(self) -> int | None:
        if not self.is_star_graph():
            return None
        return max(range(self.n), key=self.degree)

    def classify_shape(self) -> GraphShape:
        """Priority at the overlapping small orders: null > complete > star."""
        if self.is_null_graph():
            return GraphShape("null", self.n)
        if self.is_complete_graph():
            return GraphShape("complete", self.n)
        if self.is_star_graph():
            return GraphShape("star", self.n)
        return GraphShape("other", self.n)

    # -- submodule-aware pieces ----------------------------------------------

    def vertex_is_simple(self, v: int) -> bool:
        return self.lattice.is_simple(self.lattice_pos[v])

    def vertex_is_uniform(self, v: int) -> bool:
        return self.lattice.is_uniform(self.lattice_pos[v])

    def simple_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.vertex_is_simple(v)]

    def overline(self, v: int) -> list[int]:
        """All vertices containing the simple vertex v; always a clique."""
        if not self.vertex_is_simple(v):
            raise StructureError("overline is defined for simple vertices only")
        nb = self.vertices[v].bits
        return [u for u in range(self.n) if self.vertices[u].bits & nb == nb]

    def vertex_label(self, v: int) -> str:
        return self.vertices[v].describe()

    # -- export ----------------------------------------------------------------

    def export(self, fmt: str) -> str:
        if fmt == "dot":
            lines = ["graph intersection {"]
            for v in range(self.n):
                sub = self.vertices[v]
                lines.append(f'  v{v} [label="v{v} {sub.describe()} size={sub.size}"];')
            for i, j in self.edges():
                lines.append(f"  v{i} -- v{j};")
            lines.append("}")
            return "\n".join(lines) + "\n"
        if fmt == "json":
            payload = {
                "order": self.n,
                "vertices": [
                    {
                        "id": f"v{v}",
                        "generators": [self.module.label(g) for g in self.vertices[v].gens],
                        "size": self.vertices[v].size,
                    }
                    for v in range(self.n)
                ],
                "edges": [[i, j] for i, j in self.edges()],
                "invariants": {
                    "connected": self.is_connected(),
                    "degrees": self.degrees(),
                    "diameter": _json_inf(self.diameter()),
                    "girth": _json_inf(self.girth()),
                    "shape": self.classify_shape().tag,
                },
            }
            return json.dumps(payload, sort_keys=True, indent=2) + "\n"
        raise ConstructionError(f"unknown export format {fmt!r}")


def _json_inf(x):
    return "inf" if x == INF else int(x)


def build_graph(lattice: Lattice) -> IntersectionGraph:
    return IntersectionGraph(lattice)


# -- structural socle gate ----------------------------------------------------


def homogeneous_socle_pair(lattice: Lattice) -> dict | None:
    """Detect Soc(M) = S + S' with S, S' isomorphic simples and Soc essential.

    Returns {socle, pair} as lattice indices, or None when the structure is
    absent.  This is the shared hypothesis of the clique/coloring statements.
    """
    soc = lattice.socle_index()
    if lattice.length_of(soc) != 2 or not lattice.is_essential(soc):
        return None
    atoms = lattice.atom_indices()
    for ai in range(len(atoms)):
        for bi in range(ai + 1, len(atoms)):
            a, b = atoms[ai], atoms[bi]
            if lattice.subs[a].bits & lattice.subs[b].bits != 1:
                continue
            if lattice.join_index(a, b) != soc:
                continue
            if simples_isomorphic(lattice.subs[a], lattice.subs[b]):
                return {"socle": soc, "pair": (a, b)}
    return None


def color_by_overline(graph: IntersectionGraph) -> Coloring | ApplicabilityFailure:
    """Structural coloring when the socle is a homogeneous direct pair.

    One maximal containment clique over a simple N gets distinct colors;
    every other simple reuses the colors of that clique outside the
    above-socle part.  Proper with clique-number many colors whenever the
    disjointness facts behind the scheme hold.
    """
    lat = graph.lattice
    structure = homogeneous_socle_pair(lat)
    if structure is None:
        raise StructureError("socle is not an essential homogeneous direct pair of simples")
    soc_bits = lat.subs[structure["socle"]].bits
    atom_vertices = graph.simple_vertices()
    over = {a: graph.overline(a) for a in atom_vertices}
    above = [v for v in range(graph.n) if graph.vertices[v].bits & soc_bits == soc_bits]
    star = max(atom_vertices, key=lambda a: len(over[a]))
    colors = [-1] * graph.n
    for c, v in enumerate(over[star]):
        colors[v] = c
    pool = [colors[v] for v in over[star] if v not in above]
    for a in atom_vertices:
        if a == star:
            continue
        rest = [v for v in over[a] if v not in above]
        if len(rest) > len(pool):
            return ApplicabilityFailure(
                "containment clique larger than the chosen one",
                witness=graph.vertex_label(a),
            )
        for v, c in zip(rest, pool):
            colors[v] = c
    if any(c < 0 for c in colors):
        v = colors.index(-1)
        return ApplicabilityFailure("vertex not covered by any containment clique",
                                    witness=graph.vertex_label(v))
    if not is_proper_coloring(graph.n, graph.adj, colors):
        return ApplicabilityFailure("scheme produced an improper coloring")
    return Coloring(tuple(colors), len(over[star]), "overline")


def color_complement_by_uniform_clique(
    graph: IntersectionGraph,
) -> Coloring | ApplicabilityFailure:
    """Color the complement graph by least intersecting member of a maximal
    clique of uniform vertices (greedy in canonical order).

    Fails, with the witness vertex, when some vertex meets no clique member;
    statement checks must then fall back to the exact solvers.
    """
    clique: list[int] = []
    for v in range(graph.n):
        if graph.vertex_is_uniform(v) and all((graph.adj[u] >> v) & 1 for u in clique):
            clique.append(v)
    extra = {"clique": tuple(clique)}
    if graph.n == 0:
        return Coloring((), 0, "uniform-complement", extra)
    if not clique:
        return ApplicabilityFailure("no uniform vertices", extra=extra)
    raw = []
    for v in range(graph.n):
        vb = graph.vertices[v].bits
        hit = next(
            (t for t, u in enumerate(clique) if graph.vertices[u].bits & vb != 1), None
        )
        if hit is None:
            return ApplicabilityFailure(
                "vertex meets no member of the uniform clique",
                witness=graph.vertex_label(v),
                extra=extra,
            )
        raw.append(hit)
    used = sorted(set(raw))
    renum = {t: i for i, t in enumerate(used)}
    colors = [renum[t] for t in raw]
    if not is_proper_coloring(graph.n, graph.complement_adj(), colors):
        return ApplicabilityFailure("scheme produced an improper complement coloring", extra=extra)
    return Coloring(tuple(colors), len(used), "uniform-complement", extra)
