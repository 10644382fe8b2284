"""Exact clique and coloring solvers on bitset adjacency.

Graphs are given as (n, adj) where adj[v] is an int bitmask of neighbours.
All searches use fixed canonical orders, so witnesses are deterministic.
The exact solvers refuse graphs above a vertex cap instead of silently
approximating.
"""

from __future__ import annotations

from .caps import Caps
from .errors import CapExceeded


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_cap(n: int, caps: Caps | None) -> None:
    cap = (caps or Caps()).max_exact_vertices
    if n > cap:
        raise CapExceeded(f"{n} vertices exceeds the exact-solver cap {cap}")


def max_clique(n: int, adj: list[int], caps: Caps | None = None) -> tuple[int, list[int]]:
    """Maximum clique by branch and bound with a greedy coloring bound."""
    _check_cap(n, caps)
    if n == 0:
        return 0, []
    best: list[int] = []

    def color_bound(cand: int) -> list[tuple[int, int]]:
        # greedy color classes; vertices emitted with their class number
        order = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                order.append((v, color))
                avail &= ~adj[v] & ~(1 << v)
                rest &= ~(1 << v)
        return order

    def expand(current: list[int], cand: int) -> None:
        nonlocal best
        order = color_bound(cand)
        for v, color in reversed(order):
            if len(current) + color <= len(best):
                return
            current.append(v)
            sub = cand & adj[v]
            if sub:
                expand(current, sub)
            elif len(current) > len(best):
                best = current[:]
            current.pop()
            cand &= ~(1 << v)

    expand([], (1 << n) - 1)
    return len(best), sorted(best)


def max_cliques(n: int, adj: list[int], caps: Caps | None = None) -> list[list[int]]:
    """All maximal cliques (Bron-Kerbosch with pivot), sorted canonically."""
    _check_cap(n, caps)
    out: list[list[int]] = []

    def bk(r: list[int], p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(sorted(r))
            return
        pux = p | x
        pivot = max(_bits(pux), key=lambda u: (p & adj[u]).bit_count())
        for v in _bits(p & ~adj[pivot]):
            r.append(v)
            bk(r, p & adj[v], x & adj[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    if n:
        bk([], (1 << n) - 1, 0)
    return sorted(out)


def clique_lower_bound(n: int, adj: list[int]) -> tuple[int, list[int]]:
    """Greedy clique: a LOWER BOUND only, for graphs past the exact cap."""
    best: list[int] = []
    for start in range(n):
        clique = [start]
        cand = adj[start]
        while cand:
            v = (cand & -cand).bit_length() - 1
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return len(best), sorted(best)


def greedy_coloring(n: int, adj: list[int]) -> list[int]:
    colors = [-1] * n
    for v in range(n):
        used = {colors[u] for u in _bits(adj[v]) if colors[u] >= 0}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def _colorable(n: int, adj: list[int], k: int) -> list[int] | None:
    """Backtracking k-colorability; first feasible assignment in search order.

    Symmetry is broken by allowing at most one brand-new color per vertex.
    """
    colors = [-1] * n
    # order vertices by degree descending (ties by index) to fail fast
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        banned = {colors[u] for u in _bits(adj[v]) if colors[u] >= 0}
        limit = min(used + 1, k)
        for c in range(limit):
            if c in banned:
                continue
            colors[v] = c
            if place(i + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    return colors if place(0, 0) else None


def chromatic_number(n: int, adj: list[int], caps: Caps | None = None) -> tuple[int, list[int]]:
    """Exact chromatic number with a witness coloring.

    Seeded with the clique lower bound and the greedy upper bound, then
    k-colorability is decided for each k in between.
    """
    _check_cap(n, caps)
    if n == 0:
        return 0, []
    lower, _ = max_clique(n, adj, caps)
    greedy = greedy_coloring(n, adj)
    upper = max(greedy) + 1
    if lower == upper:
        return upper, greedy
    for k in range(lower, upper):
        got = _colorable(n, adj, k)
        if got is not None:
            return k, got
    return upper, greedy


def is_proper_coloring(n: int, adj: list[int], colors: list[int]) -> bool:
    return all(colors[v] != colors[u] for v in range(n) for u in _bits(adj[v]) if u > v)
