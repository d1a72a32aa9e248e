from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fpec.errors import ContractionError, NotBridgelessError, PlaneMapError
from fpec.generators import cycle, cycle_chain, random_map, theta, two_pentagons, wheel
from fpec.planemap import (
    BundledMultigraph,
    PlaneMap,
    adjacent_face_pairs,
    blocks,
    bridges,
    canonical_relabel,
    common_edges_in_walk_order,
    contract_edge,
    contract_subgraph,
    dual_restricted,
    dumps,
    face_adjacent_pairs,
    is_nontrivial_edge_cut,
    medial_adjacency_graph,
    parse,
    require_bridgeless,
    split_at_cut_vertex,
)
from fpec.qfo import qfo_color

C3_TEXT = """pmap 3 3
v 0 : 0 5
v 1 : 1 2
v 2 : 3 4
"""

W4_PAIRS = {
    (0, 1), (0, 3), (0, 4), (0, 7), (1, 2), (1, 4), (1, 5), (2, 3),
    (2, 5), (2, 6), (3, 6), (3, 7), (4, 5), (4, 7), (5, 6), (6, 7),
}


def euler(g: PlaneMap) -> int:
    return g.num_vertices - g.num_edges + g.num_faces


def face_lengths(g):
    return sorted(len(f) for f in g.faces)


# -- parsing ----------------------------------------------------------------


def test_parse_triangle():
    g = parse(C3_TEXT)
    assert (g.num_vertices, g.num_edges, g.num_faces) == (3, 3, 2)
    assert euler(g) == 2


def test_parse_theta_and_two_pentagons():
    g = parse(dumps(theta(3)))
    assert (g.num_vertices, g.num_edges, g.num_faces) == (2, 3, 3)
    g = parse(dumps(two_pentagons()))
    assert (g.num_vertices, g.num_edges, g.num_faces) == (9, 10, 3)


def test_parse_comments_and_blank_lines():
    g = parse("# triangle\n\n" + C3_TEXT.replace("1 2\n", "1 2  # middle\n"))
    assert g == parse(C3_TEXT)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "empty"),
        ("graph 3 3\n", "pmap"),
        ("pmap 2 1\nv 0 : 0\n", "vertex lines"),
        ("pmap 2 1\nv 0 : 0 1\nv 1 :\n", "loop"),
        ("pmap 2 1\nv 0 : 0 0\nv 1 : 1\n", "duplicate"),
        ("pmap 2 2\nv 0 : 0 2\nv 1 : 1\n", "missing"),
        ("pmap 2 1\nv 0 : 0\nv 0 : 1\n", "duplicate vertex"),
        ("pmap 2 1\nv 0 : 0\nv 1 : x\n", "non-integer"),
        ("pmap 2 1\nv 0 : 0\nv 1 : 7\n", "out of range"),
        # three parallel edges with equal rotations at both ends: one face, genus 1
        ("pmap 2 3\nv 0 : 0 2 4\nv 1 : 1 3 5\n", "not planar"),
    ],
)
def test_parse_rejects(text, fragment):
    with pytest.raises(PlaneMapError, match=fragment):
        parse(text)


def test_disconnected_map_parses_but_is_reported():
    g = parse("pmap 4 2\nv 0 : 0\nv 1 : 1\nv 2 : 2\nv 3 : 3\n")
    assert not g.is_connected()
    assert len(g.components()) == 2


def test_round_trip_bytes():
    for g in (cycle(7), wheel(5), theta(4), two_pentagons(), random_map(40, 3)):
        text = dumps(g)
        assert dumps(parse(text)) == text
        assert parse(text) == canonical_relabel(g)


# -- faces ------------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 5, 9])
def test_cycle_faces(n):
    g = cycle(n)
    assert face_lengths(g) == [n, n]


def test_two_pentagon_and_theta_faces():
    assert face_lengths(two_pentagons()) == [5, 5, 10]
    assert face_lengths(theta(3)) == [2, 2, 2]


def test_face_adjacent_pairs():
    assert face_adjacent_pairs(cycle(3)) == {(0, 1), (0, 2), (1, 2)}
    assert face_adjacent_pairs(theta(3)) == {(0, 1), (0, 2), (1, 2)}
    assert face_adjacent_pairs(wheel(4)) == W4_PAIRS


def test_common_edges():
    g = cycle(5)
    common = common_edges_in_walk_order(g, 0, 1)
    assert sorted(common) == [0, 1, 2, 3, 4]
    assert common[0] == 0
    t = theta(3)
    for (f1, f2), es in adjacent_face_pairs(t).items():
        assert len(common_edges_in_walk_order(t, f1, f2)) == len(es) == 1
    p = two_pentagons()
    outer = max(p.faces, key=len).id
    for f in p.faces:
        if f.id != outer:
            shared = common_edges_in_walk_order(p, f.id, outer)
            assert sorted(shared) == sorted(f.edges)
            # walk order: consecutive shared edges meet at a vertex
            for a, b in zip(shared, shared[1:]):
                assert set(p.endpoints(a)) & set(p.endpoints(b))


def test_medial_adjacency():
    k3 = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}
    assert medial_adjacency_graph(cycle(3)) == k3
    assert medial_adjacency_graph(theta(3)) == k3
    c5 = medial_adjacency_graph(cycle(5))
    assert all(c5[i] == {(i - 1) % 5, (i + 1) % 5} for i in range(5))


# -- dual restriction ---------------------------------------------------------


def test_dual_restricted_examples():
    g = cycle(4)
    m = dual_restricted(g, {e: e + 1 for e in g.edges}, 1)
    assert len(m.vertices) == 2 and m.num_edges == 1
    g = cycle(6)
    m = dual_restricted(g, {e: 1 + e % 2 for e in g.edges}, 1)
    assert [len(es) for es in m.bundles().values()] == [3]


def test_dual_restricted_two_pentagons_has_two_bundle():
    g = two_pentagons()
    q = qfo_color(g)
    found = False
    for c in (1, 2, 3, 4):
        m = dual_restricted(g, q.colors, c)
        found |= any(len(es) == 2 for es in m.bundles().values())
    assert found


def test_dual_restricted_requires_bridgeless():
    g = parse("pmap 2 1\nv 0 : 0\nv 1 : 1\n")
    with pytest.raises(NotBridgelessError):
        dual_restricted(g, {0: 1}, 1)


# -- contraction --------------------------------------------------------------


def test_contract_edge_examples():
    g = contract_edge(cycle(4), 1)
    assert (g.num_vertices, g.num_edges) == (3, 3)
    assert face_lengths(g) == [3, 3]
    assert 1 not in g.edges and g.edges == [0, 2, 3]
    d = contract_edge(cycle(3), 0)
    assert (d.num_vertices, d.num_edges, face_lengths(d)) == (2, 2, [2, 2])
    with pytest.raises(ContractionError):
        contract_edge(theta(3), 0)


def test_contract_subgraph_examples():
    g = two_pentagons()
    dec = blocks(g)
    (cut,) = dec.cut_vertices
    b = dec.blocks[1]
    h = contract_subgraph(g, b.vertices)
    assert face_lengths(h) == [5, 5]
    assert set(h.edges) == set(dec.blocks[0].edges)

    c6 = cycle(6)
    # path e1..e4 runs through vertices 1..5
    h = contract_subgraph(c6, {1, 2, 3, 4, 5})
    assert sorted(h.edges) == [0, 5]
    assert face_lengths(h) == [2, 2]

    assert contract_subgraph(wheel(4), {3}) == wheel(4)


# -- blocks and cuts ----------------------------------------------------------


def test_blocks_examples():
    dec = blocks(two_pentagons())
    assert len(dec.blocks) == 2 and all(b.is_c5 for b in dec.blocks)
    assert len(dec.cut_vertices) == 1
    dec = blocks(cycle(9))
    assert len(dec.blocks) == 1 and not dec.blocks[0].is_c5
    assert len(blocks(wheel(4)).blocks) == 1
    assert blocks(cycle(5)).blocks[0].is_c5


def test_edge_cuts():
    g = cycle(5)
    cut = is_nontrivial_edge_cut(g, 0, 2)
    assert cut.is_cut and cut.nontrivial
    assert sorted(len(s) for s in cut.sides) == [2, 3]
    cut = is_nontrivial_edge_cut(g, 0, 1)
    assert cut.is_cut and not cut.nontrivial
    assert sorted(len(s) for s in cut.sides) == [1, 4]
    w = wheel(4)
    assert not is_nontrivial_edge_cut(w, 4, 6).is_cut


@pytest.mark.parametrize(
    "lengths, expected",
    [([5, 5], [5, 5]), ([3, 3], [3, 3]), ([5, 4], [4, 5])],
)
def test_split_at_cut_vertex(lengths, expected):
    g = cycle_chain(lengths)
    (v,) = blocks(g).cut_vertices
    c1, c2, ((e1, e1p), (e2, e2p)) = split_at_cut_vertex(g, v)
    assert sorted([c1.num_edges, c2.num_edges]) == expected
    assert set(c1.edges) | set(c2.edges) == set(g.edges)
    assert e1 in c1.edges and e2 in c1.edges and e1p in c2.edges and e2p in c2.edges
    # each cross pair is face-adjacent in g
    pairs = face_adjacent_pairs(g)
    for a, b in ((e1, e1p), (e2, e2p)):
        assert (min(a, b), max(a, b)) in pairs


def test_split_picks_contiguous_component():
    # three pendant cycles around one vertex
    g = cycle_chain([4, 3])
    from fpec.generators import _MutableMap

    m = _MutableMap(g)
    (v,) = blocks(g).cut_vertices
    m.pendant_cycle(g.rotation[v][0], 3)
    g = m.freeze()
    c1, c2, _ = split_at_cut_vertex(g, v)
    for part in (c1, c2):
        assert euler(part) == 2
    assert c1.num_edges + c2.num_edges == g.num_edges


# -- properties over random maps ----------------------------------------------

seeds = st.integers(0, 10_000)
sizes = st.integers(3, 60)


@settings(max_examples=60, deadline=None)
@given(sizes, seeds)
def test_random_map_invariants(n, seed):
    g = random_map(n, seed)
    assert g.num_edges == n
    assert euler(g) == 2
    assert not bridges(g)
    require_bridgeless(g)
    # walks partition the half-edges; successor closes every walk
    seen = Counter(h for f in g.faces for h in f.half_edges)
    assert set(seen) == set(g.half_edges) and set(seen.values()) == {1}
    for f in g.faces:
        hs = f.half_edges
        for i, h in enumerate(hs):
            assert g.face_successor(h) == hs[(i + 1) % len(hs)]
    for e in g.edges:
        f1, f2 = g.edge_faces(e)
        assert f1 != f2
    dec = blocks(g)
    assert sum(len(b.edges) for b in dec.blocks) == g.num_edges
    assert (len(dec.blocks) == 1) == (not dec.cut_vertices)


@settings(max_examples=60, deadline=None)
@given(sizes, seeds, st.integers(0, 1000))
def test_contraction_preserves_euler(n, seed, pick):
    g = random_map(n, seed)
    simple = [e for e in g.edges if len({e2 for e2 in g.edges if set(g.endpoints(e2)) == set(g.endpoints(e))}) == 1]
    if not simple:
        return
    e = simple[pick % len(simple)]
    h = contract_edge(g, e)
    assert (h.num_vertices, h.num_edges) == (g.num_vertices - 1, g.num_edges - 1)
    assert euler(h) == 2


@settings(max_examples=40, deadline=None)
@given(sizes, seeds)
def test_dual_restrictions_partition_dual_edges(n, seed):
    g = random_map(n, seed)
    q = qfo_color(g)
    union = {}
    for c in (1, 2, 3, 4):
        m = dual_restricted(g, q.colors, c)
        assert not set(union) & set(m.edges)
        union.update(m.edges)
    assert union == {e: g.edge_faces(e) for e in g.edges}


def test_bundled_multigraph_basics():
    m = BundledMultigraph.from_edges({0: (0, 1), 1: (1, 0), 2: (1, 2)}, [5])
    assert m.bundles() == {(0, 1): [0, 1], (1, 2): [2]}
    assert m.degree(1) == 3 and m.degree(5) == 0
    assert len(m.components()) == 2
    assert m.without_isolated().is_connected()
    with pytest.raises(ValueError):
        BundledMultigraph.from_edges({0: (1, 1)})
