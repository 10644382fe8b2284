import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modgraph.caps import Caps
from modgraph.errors import CapExceeded
from modgraph.solvers import (
    chromatic_number,
    clique_lower_bound,
    greedy_coloring,
    is_proper_coloring,
    max_clique,
    max_cliques,
)

from .oracles import brute_chromatic, brute_max_clique, brute_maximal_cliques


def graph_from_edges(n, edges):
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def cycle(n):
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return graph_from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


PETERSEN = graph_from_edges(
    10,
    [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
     (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
     (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
)

KNOWN = [
    ("c5", 5, cycle(5), 2, 3),
    ("petersen", 10, PETERSEN, 2, 3),
    ("k5", 5, complete(5), 5, 5),
    ("n7", 7, [0] * 7, 1, 1),
    ("star6", 6, graph_from_edges(6, [(0, i) for i in range(1, 6)]), 2, 2),
    ("path4", 4, graph_from_edges(4, [(0, 1), (1, 2), (2, 3)]), 2, 2),
    ("empty", 0, [], 0, 0),
]


@pytest.mark.parametrize("name,n,adj,omega,chi", KNOWN, ids=[k[0] for k in KNOWN])
def test_known_graphs(name, n, adj, omega, chi):
    got_omega, witness = max_clique(n, adj)
    assert got_omega == omega
    assert all((adj[u] >> v) & 1 for i, u in enumerate(witness) for v in witness[i + 1:])
    got_chi, colors = chromatic_number(n, adj)
    assert got_chi == chi
    assert is_proper_coloring(n, adj, colors)
    assert len(set(colors)) == chi


@st.composite
def random_graph(draw):
    n = draw(st.integers(1, 9))
    edges = draw(
        st.sets(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda t: t[0] < t[1]),
            max_size=n * (n - 1) // 2,
        )
    )
    return n, graph_from_edges(n, edges)


@given(random_graph())
@settings(max_examples=120, deadline=None)
def test_solvers_match_brute_force(g):
    n, adj = g
    omega, witness = max_clique(n, adj)
    assert omega == brute_max_clique(n, adj)[0]
    assert len(witness) == omega
    chi, colors = chromatic_number(n, adj)
    assert chi == brute_chromatic(n, adj)
    assert is_proper_coloring(n, adj, colors)
    assert sorted(max_cliques(n, adj)) == brute_maximal_cliques(n, adj)


@given(random_graph())
@settings(max_examples=60, deadline=None)
def test_greedy_coloring_always_proper(g):
    n, adj = g
    assert is_proper_coloring(n, adj, greedy_coloring(n, adj))


def test_omega_never_exceeds_chi():
    for _, n, adj, _, _ in KNOWN:
        if n == 0:
            continue
        assert max_clique(n, adj)[0] <= chromatic_number(n, adj)[0]


def test_vertex_cap_enforced():
    n = 70
    with pytest.raises(CapExceeded):
        max_clique(n, [0] * n)
    assert max_clique(n, [0] * n, Caps(max_exact_vertices=128))[0] == 1


@given(random_graph())
@settings(max_examples=60, deadline=None)
def test_clique_lower_bound_is_a_valid_clique(g):
    n, adj = g
    size, witness = clique_lower_bound(n, adj)
    assert len(witness) == size
    assert all((adj[u] >> v) & 1 for i, u in enumerate(witness) for v in witness[i + 1:])
    assert size <= brute_max_clique(n, adj)[0]


def test_deterministic_witnesses():
    n, adj = 6, complete(6)
    assert max_clique(n, adj) == max_clique(n, adj)
    assert chromatic_number(n, adj) == chromatic_number(n, adj)
    assert max_cliques(5, cycle(5)) == max_cliques(5, cycle(5))
