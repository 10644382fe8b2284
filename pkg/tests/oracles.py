"""Independent brute-force oracles the fast implementations are tested against.

Everything here is deliberately naive pure Python: fixpoint loops instead of
frontier bitsets, full subset scans instead of branch and bound.  Keep it
that way; the value of these functions is that they share no code with the
package.
"""

from itertools import combinations


def naive_closure(module, seed):
    """Fixpoint closure under addition and ring action, by repeated scans."""
    current = set(int(x) for x in seed) | {0}
    while True:
        nxt = set(current)
        for x in current:
            for y in current:
                nxt.add(int(module.add[x, y]))
            for r in range(module.ring.size):
                nxt.add(int(module.act[r, x]))
        if nxt == current:
            return frozenset(current)
        current = nxt


def _is_closed(module, members):
    s = set(members)
    for x in members:
        for y in members:
            if int(module.add[x, y]) not in s:
                return False
        for r in range(module.ring.size):
            if int(module.act[r, x]) not in s:
                return False
    return True


def brute_submodules_subsets(module):
    """All submodules by scanning every subset containing 0 (carrier <= 16)."""
    m = module.size
    assert m <= 16, "literal subset scan is limited to carriers <= 16"
    out = []
    for mask in range(1, 1 << m, 2):
        members = [i for i in range(m) if (mask >> i) & 1]
        if _is_closed(module, members):
            out.append(tuple(members))
    return sorted(out, key=lambda t: (len(t), t))


def brute_submodules_grow(module):
    """All submodules by closing one extra element at a time from {0}.

    Every submodule K is reached: adding elements of K one by one walks a
    strictly increasing chain of submodules inside K.
    """
    start = naive_closure(module, [])
    found = {start}
    frontier = [start]
    while frontier:
        fresh = []
        for h in frontier:
            for x in range(module.size):
                if x in h:
                    continue
                c = naive_closure(module, set(h) | {x})
                if c not in found:
                    found.add(c)
                    fresh.append(c)
        frontier = fresh
    return sorted((tuple(sorted(h)) for h in found), key=lambda t: (len(t), t))


def brute_max_clique(n, adj):
    best = ()
    for size in range(n, 0, -1):
        for combo in combinations(range(n), size):
            if all((adj[u] >> v) & 1 for u, v in combinations(combo, 2)):
                return size, list(combo)
    return 0, []


def brute_maximal_cliques(n, adj):
    cliques = []
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            if all((adj[u] >> v) & 1 for u, v in combinations(combo, 2)):
                cliques.append(set(combo))
    maximal = [c for c in cliques if not any(c < d for d in cliques)]
    return sorted(sorted(c) for c in maximal)


def brute_chromatic(n, adj):
    if n == 0:
        return 0

    def colorable(k):
        colors = [-1] * n

        def go(v):
            if v == n:
                return True
            for c in range(k):
                if all(colors[u] != c for u in range(n) if (adj[v] >> u) & 1):
                    colors[v] = c
                    if go(v + 1):
                        return True
                    colors[v] = -1
            return False

        return go(0)

    for k in range(1, n + 1):
        if colorable(k):
            return k
    return n


def gaussian_binomial(n, k, q):
    num, den = 1, 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_count(d, q):
    return sum(gaussian_binomial(d, k, q) for k in range(d + 1))


def brute_goldie(lattice):
    """Largest direct family of nonzero submodules, by exhaustive extension.

    A family is direct iff each member meets the sum of the earlier ones
    trivially, in any fixed order, so scanning in canonical order is enough.
    """
    subs = lattice.subs
    nonzero = [i for i in range(len(subs)) if subs[i].size > 1]

    def extend(acc_idx, start, depth):
        best = depth
        for pos in range(start, len(nonzero)):
            idx = nonzero[pos]
            if subs[idx].bits & subs[acc_idx].bits == 1:
                best = max(best, extend(lattice.join_index(acc_idx, idx), pos + 1, depth + 1))
        return best

    return extend(lattice.zero_index, 0, 0)


def brute_endomorphism_count(sub):
    """#End of a simple submodule by checking every candidate map completely."""
    module = sub.module
    members = sub.members
    gen = next(x for x in members if x)
    count = 0
    for target in members:
        # phi(r*gen) = r*target must be a well defined additive, action
        # compatible map; verify on the whole carrier
        image = {}
        ok = True
        for r in range(module.ring.size):
            src = int(module.act[r, gen])
            dst = int(module.act[r, target])
            if src in image and image[src] != dst:
                ok = False
                break
            image[src] = dst
        if not ok or set(image) != set(members):
            continue
        for x in members:
            for y in members:
                if image[int(module.add[x, y])] != int(module.add[image[x], image[y]]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


def brute_girth(n, adj):
    """Shortest cycle by DFS over simple paths (small graphs only)."""
    best = [float("inf")]

    def dfs(start, v, visited, length):
        for u in range(n):
            if not (adj[v] >> u) & 1:
                continue
            if u == start and length >= 2:
                best[0] = min(best[0], length + 1)
            elif u not in visited and length + 1 < best[0]:
                visited.add(u)
                dfs(start, u, visited, length + 1)
                visited.remove(u)

    for s in range(n):
        dfs(s, s, {s}, 0)
    return best[0]
