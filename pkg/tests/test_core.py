"""Instance model: validation, canonical form, serialization, generators."""

import json
import math
import random

import pytest

from chromabound import core
from chromabound.errors import InvalidInstanceError


def test_validate_accepts_fano():
    H = core.fano()
    assert core.validate(H.n, H.num_vertices, H.edges) == []


def test_validate_rejects_small_uniformity():
    violations = core.validate(1, 3, ((0,),))
    assert any("uniformity" in v for v in violations)


def test_validate_rejects_vertex_out_of_range():
    violations = core.validate(2, 3, ((0, 5),))
    assert violations


def test_validate_rejects_repeated_vertex():
    violations = core.validate(3, 5, ((1, 1, 2),))
    assert any("repeated" in v for v in violations)


def test_validate_rejects_wrong_arity():
    violations = core.validate(3, 5, ((0, 1),))
    assert violations


def test_validate_rejects_duplicate_edges():
    violations = core.validate(2, 4, ((0, 1), (0, 1)))
    assert any("duplicate" in v for v in violations)


def test_validate_sorted_mode_rejects_unsorted():
    assert core.validate(2, 4, ((1, 0),), require_sorted=True)
    assert core.validate(2, 4, ((0, 1),), require_sorted=True) == []


def test_build_canonicalizes_edge_and_listing_order():
    H = core.Hypergraph.build(3, 6, [(5, 2, 0), (1, 0, 3)])
    assert H.edges == ((0, 1, 3), (0, 2, 5))


def test_build_raises_with_violation_list():
    with pytest.raises(InvalidInstanceError) as err:
        core.Hypergraph.build(3, 4, [(0, 1, 2), (2, 1, 0)])
    assert err.value.violations


def test_json_round_trip(fano):
    text = fano.to_json()
    again = core.Hypergraph.from_json(text)
    assert again == fano
    payload = json.loads(text)
    assert set(payload) == {"n", "num_vertices", "edges"}


def test_from_json_requires_canonical_edges():
    text = json.dumps({"n": 2, "num_vertices": 3, "edges": [[2, 1]]})
    with pytest.raises(InvalidInstanceError):
        core.Hypergraph.from_json(text)


def test_degrees_fano(fano):
    assert core.degrees(fano) == (3,) * 7


def test_fano_pairwise_intersections(fano):
    for i, e in enumerate(fano.edges):
        for f in fano.edges[i + 1 :]:
            assert len(set(e) & set(f)) == 1


def test_complete_sizes():
    H = core.complete(3, 5)
    assert H.num_vertices == 5
    assert H.num_edges == math.comb(5, 3)
    assert len(set(H.edges)) == H.num_edges


def test_induced_remaps_and_back_maps(fano):
    sub, back = core.induced(fano, [0, 1, 2, 3, 4, 5, 6][:4])
    assert sub.num_vertices == 4
    for e_sub, e_orig in zip(sub.edges, [(0, 1, 2)]):
        assert tuple(back[v] for v in e_sub) == e_orig


def test_induced_drops_edges_leaving_subset(fano):
    sub, _ = core.induced(fano, [0, 1, 2])
    assert sub.edges == ((0, 1, 2),)


def test_random_uniform_shape_and_determinism():
    a = core.random_uniform(3, 12, 9, 31337)
    b = core.random_uniform(3, 12, 9, 31337)
    c = core.random_uniform(3, 12, 9, 31338)
    assert a == b
    assert a.num_edges == 9
    assert len(set(a.edges)) == 9
    assert a != c


def test_random_uniform_dense_regime_uses_all_edges():
    H = core.random_uniform(2, 5, 10, 7)
    assert H.num_edges == 10 == math.comb(5, 2)


def test_random_uniform_rejects_impossible_count():
    with pytest.raises(ValueError):
        core.random_uniform(3, 5, 99, 1)


def test_chain_blocks_shape():
    H, idx = core.chain_blocks(3, 2)
    assert H.num_vertices == 5
    assert H.edges == ((0, 1, 2), (2, 3, 4))
    assert idx == (0, 1)


def test_generate_dispatch():
    assert core.generate("fano", n=3, num_vertices=7, num_edges=7, seed=1) == core.fano()
    assert (
        core.generate("complete", n=3, num_vertices=5, num_edges=0, seed=1).num_edges
        == 10
    )
    H = core.generate("random", n=2, num_vertices=6, num_edges=4, seed=5)
    assert H.num_edges == 4
    with pytest.raises(ValueError):
        core.generate("mystery", n=3, num_vertices=5, num_edges=5, seed=1)


def test_coloring_validates_palette():
    with pytest.raises(ValueError):
        core.Coloring((1, 4), 3)
    with pytest.raises(ValueError):
        core.Coloring((0, 1), 2)


def test_vertex_order_positions_invert_permutation():
    order = core.VertexOrder((2, 0, 1))
    pos = order.positions()
    for rank, v in enumerate(order.permutation):
        assert pos[v] == rank


def test_vertex_order_shuffled_is_seed_stable():
    a = core.VertexOrder.shuffled(8, random.Random(4))
    b = core.VertexOrder.shuffled(8, random.Random(4))
    assert a == b
    assert sorted(a.permutation) == list(range(8))


def test_is_proper_reports_monochromatic_edges(fano):
    ok, mono = core.is_proper(fano, core.Coloring((1,) * 7, 3))
    assert not ok
    assert list(mono) == list(range(7))
    ok, mono = core.is_proper(fano, core.Coloring((1, 1, 2, 1, 2, 3, 1), 3))
    assert ok and not mono


def test_is_proper_rejects_wrong_length(fano):
    with pytest.raises(ValueError):
        core.is_proper(fano, core.Coloring((1, 2), 2))
