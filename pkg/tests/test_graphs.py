import json
import math

import pytest

from modgraph.errors import StructureError
from modgraph.fields import gf_build
from modgraph.graphs import (
    ApplicabilityFailure,
    Coloring,
    build_graph,
    color_by_overline,
    color_complement_by_uniform_clique,
    homogeneous_socle_pair,
)
from modgraph.lattice import enumerate_submodules
from modgraph.modules import regular_module
from modgraph.rings import ring_zmod
from modgraph.solvers import is_proper_coloring

from .oracles import brute_girth

INF = math.inf


def graph_of(module):
    return build_graph(enumerate_submodules(module))


def test_z12_graph_matches_hand_computation(z12_module):
    g = graph_of(z12_module)
    assert g.n == 4
    by_size = {g.vertices[v].size: v for v in range(g.n)}
    s6, s4, s3, s2 = by_size[2], by_size[3], by_size[4], by_size[6]
    assert set(g.edges()) == {(s6, s3), (s6, s2), (s4, s2), (s3, s2)}
    assert g.degree(s2) == 3 and g.degree(s4) == 1
    assert g.clique_number()[0] == 3
    assert g.chromatic()[0] == 3
    assert g.girth() == 3
    assert g.diameter() == 2
    assert g.is_connected()
    assert g.classify_shape().tag == "other"


def test_degree_complement_identity(named_contexts):
    for ctx in named_contexts:
        g = ctx.graph
        for v in range(g.n):
            assert g.degree(v) + g.complement_degree(v) + 1 == g.n


def test_complete_iff_uniform(named_contexts):
    for ctx in named_contexts:
        g, lat = ctx.graph, ctx.lattice
        if g.n == 0:
            continue
        assert g.is_complete_graph() == lat.is_uniform(lat.full_index), ctx.instance_id


def test_null_iff_unique_or_pair_of_simples(named_contexts):
    for ctx in named_contexts:
        g, lat = ctx.graph, ctx.lattice
        if g.n == 0:
            continue
        atoms = lat.atom_indices()
        pair = any(
            lat.subs[a].bits & lat.subs[b].bits == 1
            and lat.join_index(a, b) == lat.full_index
            for a in atoms
            for b in atoms
            if a < b
        )
        assert g.is_null_graph() == (g.n == 1 or pair), ctx.instance_id


def test_complement_clique_bounded_by_complement_chromatic(named_contexts):
    for ctx in named_contexts:
        g = ctx.graph
        assert g.complement_clique_number()[0] <= g.complement_chromatic()[0]


def test_shape_classification_small_cases():
    assert graph_of(regular_module(ring_zmod(4))).classify_shape().tag == "null"  # K1 = N1
    assert graph_of(regular_module(ring_zmod(8))).classify_shape().tag == "complete"  # K2
    assert graph_of(regular_module(ring_zmod(6))).classify_shape().tag == "null"  # N2


def test_named_shapes(ctx_by_id):
    assert ctx_by_id["M2(F2)/regular"].graph.classify_shape() .tag == "null"
    assert ctx_by_id["M2(F2)/regular"].graph.n == 3
    star = ctx_by_id["polyquot(F2,x^2,x*y,y^2)/regular"].graph
    assert star.classify_shape().tag == "star" and star.n == 4
    assert ctx_by_id["zmod(12)/regular"].graph.classify_shape().tag == "other"


def test_star_center_is_socle(ctx_by_id):
    ctx = ctx_by_id["polyquot(F3,x^2,x*y,y^2)/regular"]
    g, lat = ctx.graph, ctx.lattice
    center = g.star_center()
    assert g.lattice_pos[center] == lat.socle_index()


def test_girth_and_diameter():
    assert graph_of(regular_module(ring_zmod(8))).girth() == INF
    z12 = graph_of(regular_module(ring_zmod(12)))
    assert z12.girth() == 3
    z6 = graph_of(regular_module(ring_zmod(6)))
    assert not z6.is_connected()
    assert z6.diameter() == INF


def test_girth_matches_path_oracle(named_contexts):
    for ctx in named_contexts:
        g = ctx.graph
        if g.n > 8:
            continue
        assert g.girth() == brute_girth(g.n, g.adj), ctx.instance_id


def test_triangle_free_agrees_with_clique_number(named_contexts):
    for ctx in named_contexts:
        g = ctx.graph
        assert g.is_triangle_free() == (g.clique_number()[0] <= 2)


def test_overline_is_a_clique(named_contexts):
    for ctx in named_contexts:
        g = ctx.graph
        for v in g.simple_vertices():
            over = g.overline(v)
            assert v in over
            for i, a in enumerate(over):
                for b in over[i + 1:]:
                    assert (g.adj[a] >> b) & 1


def test_overline_examples(triangular_f4, f2_squared):
    g = graph_of(triangular_f4)
    # the simple inside T has overline {S', Soc, T}; the complements get {L, Soc}
    sizes = sorted(len(g.overline(v)) for v in g.simple_vertices())
    assert sizes == [2, 2, 2, 2, 3]
    g2 = graph_of(f2_squared)
    for v in g2.simple_vertices():
        assert g2.overline(v) == [v]


def test_overline_requires_simple_vertex(z12_module):
    g = graph_of(z12_module)
    big = max(range(g.n), key=lambda v: g.vertices[v].size)
    with pytest.raises(StructureError):
        g.overline(big)


def test_homogeneous_socle_gate(z12_module, triangular_f4, f2_squared):
    assert homogeneous_socle_pair(enumerate_submodules(z12_module)) is None  # Z/2 vs Z/3
    assert homogeneous_socle_pair(enumerate_submodules(triangular_f4)) is not None
    assert homogeneous_socle_pair(enumerate_submodules(f2_squared)) is not None


def test_color_by_overline_on_triangular(triangular_f4):
    g = graph_of(triangular_f4)
    coloring = color_by_overline(g)
    assert isinstance(coloring, Coloring)
    assert coloring.count == 3 == g.clique_number()[0]
    assert is_proper_coloring(g.n, g.adj, list(coloring.assignment))


def test_color_by_overline_on_null_graph(f2_squared):
    g = graph_of(f2_squared)
    coloring = color_by_overline(g)
    assert isinstance(coloring, Coloring)
    assert coloring.count == 1


def test_color_by_overline_requires_structure(z12_module):
    with pytest.raises(StructureError):
        color_by_overline(graph_of(z12_module))


def test_uniform_clique_complement_coloring_cases(triangular_f4, z2_x_z4):
    g8 = graph_of(regular_module(ring_zmod(8)))
    got = color_complement_by_uniform_clique(g8)
    assert isinstance(got, Coloring)
    assert got.count == 1  # complement of a chain graph has no edges
    assert is_proper_coloring(g8.n, g8.complement_adj(), list(got.assignment))
    gt = graph_of(triangular_f4)
    failed = color_complement_by_uniform_clique(gt)
    assert isinstance(failed, ApplicabilityFailure)
    assert failed.witness is not None
    assert len(failed.extra["clique"]) >= 1


def test_export_dot_and_json(z12_module):
    g = graph_of(z12_module)
    dot = g.export("dot")
    assert dot.count("--") == 4
    assert "v0" in dot and dot == g.export("dot")
    payload = json.loads(g.export("json"))
    assert payload["order"] == 4
    assert len(payload["edges"]) == 4
    assert payload["invariants"]["shape"] == "other"
    assert payload["invariants"]["girth"] == 3
    g8 = graph_of(regular_module(ring_zmod(8)))
    assert json.loads(g8.export("json"))["invariants"]["girth"] == "inf"


def test_export_byte_determinism(z12_module):
    a = graph_of(z12_module)
    b = graph_of(regular_module(ring_zmod(12)))
    assert a.export("json") == b.export("json")
    assert a.export("dot") == b.export("dot")
