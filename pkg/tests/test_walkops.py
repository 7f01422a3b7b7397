import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from irregwalk.errors import EmptyWalk, InvalidWalk
from irregwalk.generators import complete_bipartite, complete_graph, path_graph
from irregwalk.graph import Walk, degree_profile, is_locally_irregular, norm_edge
from irregwalk.walkops import (
    NormalForm,
    check_irregularising,
    expand_normal_form,
    normalize_path_walk,
    normalize_walk,
)

from conftest import figure_instance, random_walk_on


# ──────────────────────────────────────────────────────────────────────────
# check_irregularising
# ──────────────────────────────────────────────────────────────────────────


def test_figure_walk_has_no_conflicts():
    g, w = figure_instance()
    assert check_irregularising(g, w).ok


def test_triangle_empty_walk_all_edges_conflict():
    rep = check_irregularising(complete_graph(3), Walk(()))
    assert not rep.ok
    assert rep.conflicts == ((0, 1), (0, 2), (1, 2))


def test_unbalanced_bipartite_needs_no_walk():
    assert check_irregularising(complete_bipartite(3, 4), Walk(())).ok


def test_check_rejects_invalid_walk():
    with pytest.raises(InvalidWalk):
        check_irregularising(path_graph(3), Walk((0, 2)))


def test_conflict_report_is_falsy_when_conflicting():
    rep = check_irregularising(complete_graph(3), Walk(()))
    assert bool(rep) is False


# ──────────────────────────────────────────────────────────────────────────
# expand_normal_form
# ──────────────────────────────────────────────────────────────────────────


def test_expand_no_half_turns():
    w = expand_normal_form(NormalForm(Walk((0, 1)), (0,), frozenset(), frozenset()))
    assert w.vertices == (0, 1)
    assert w.length == 1


def test_expand_two_half_turns_single_edge():
    w = expand_normal_form(NormalForm(Walk((0, 1)), (2,), frozenset(), frozenset()))
    assert w.vertices == (0, 1, 0, 1, 0, 1)
    assert w.length == 5


def test_expand_mixed_half_turns():
    w = expand_normal_form(NormalForm(Walk((0, 1, 2)), (1, 0), frozenset(), frozenset()))
    assert w.vertices == (0, 1, 0, 1, 2)
    assert w.length == 4


def test_normal_form_length_property():
    nf = NormalForm(Walk((0, 1, 2)), (1, 3), frozenset(), frozenset())
    assert nf.length == 2 + 2 * 4
    assert expand_normal_form(nf).length == nf.length


def test_normal_form_validates_shape():
    with pytest.raises(InvalidWalk):
        NormalForm(Walk((0, 1)), (1, 2), frozenset(), frozenset())  # one count per edge of S
    with pytest.raises(InvalidWalk):
        NormalForm(Walk((0, 1)), (-1,), frozenset(), frozenset())


# ──────────────────────────────────────────────────────────────────────────
# normalize_walk
# ──────────────────────────────────────────────────────────────────────────


def test_normalize_three_path_detour_walk():
    # u1 u0 u1 u2 follows S = u1 u2 after gathering edge u0u1
    g = path_graph(2)
    nf = normalize_walk(g, Walk((1, 0, 1, 2)))
    assert nf.e_odd == frozenset({(1, 2)})
    assert nf.e_even == frozenset({(0, 1)})
    assert expand_normal_form(nf).edge_multiset() == Walk((1, 0, 1, 2)).edge_multiset()


def test_normalize_already_normal_walk():
    g = path_graph(1)
    w = Walk((0, 1, 0, 1, 0, 1))  # u0 (u1 u0)^2 u1
    nf = normalize_walk(g, w)
    assert expand_normal_form(nf).edge_multiset() == w.edge_multiset()
    assert nf.length == w.length


def test_normalize_rejects_empty():
    with pytest.raises(EmptyWalk):
        normalize_walk(path_graph(2), Walk(()))
    with pytest.raises(EmptyWalk):
        normalize_walk(path_graph(2), Walk((1,)))


def test_normalize_rejects_invalid():
    with pytest.raises(InvalidWalk):
        normalize_walk(path_graph(3), Walk((0, 2, 1)))


def _assert_normal_invariants(g, w, nf):
    # expansion reproduces the edge multiset
    assert expand_normal_form(nf).edge_multiset() == w.edge_multiset()
    # E_o edges appear exactly once in S, E_e at most twice, others never
    base_count = {}
    for a, b in nf.base.steps():
        e = norm_edge(a, b)
        base_count[e] = base_count.get(e, 0) + 1
    for e in nf.e_odd:
        assert base_count.get(e, 0) == 1
    for e in nf.e_even:
        assert base_count.get(e, 0) <= 2
    allowed = set(nf.e_odd) | set(nf.e_even)
    assert set(base_count) <= allowed


def test_normalize_preserves_multiset_many_walks():
    g = complete_graph(4)
    rng = random.Random(20240817)
    for _ in range(1000):
        w = random_walk_on(g, 8, rng)
        _assert_normal_invariants(g, w, normalize_walk(g, w))


def test_normalize_preserves_irregularising_status():
    # irregularity depends only on the edge multiset, so the normal form of
    # an irregularising walk must stay irregularising
    g, w = figure_instance()
    nf = normalize_walk(g, w)
    expanded = expand_normal_form(nf)
    assert check_irregularising(g, expanded).ok
    prof = degree_profile(g, expanded)
    assert is_locally_irregular(g, prof)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=12), st.integers(0, 3))
def test_normalize_walk_property_k4(steps, start):
    # walk on K_4 built from neighbour choices, so always valid
    g = complete_graph(4)
    verts = [start]
    for c in steps:
        verts.append(g.adjacency[verts[-1]][c])
    w = Walk(tuple(verts))
    _assert_normal_invariants(g, w, normalize_walk(g, w))


# ──────────────────────────────────────────────────────────────────────────
# normalize_path_walk
# ──────────────────────────────────────────────────────────────────────────


def test_path_normalize_plain_subpath():
    nf = normalize_path_walk(4, Walk((1, 2, 3)))
    assert nf.base.vertices == (1, 2, 3)
    assert nf.half_turns == (0, 0)
    assert nf.e_odd == frozenset({(1, 2), (2, 3)})
    assert nf.e_even == frozenset()


def test_path_normalize_mixed_walk():
    # multiplicities t_1 = 2, t_2 = 3 force the S shape u2 u1 u2 u3
    w = Walk((2, 1, 2, 3, 2, 3))
    nf = normalize_path_walk(4, w)
    assert nf.base.vertices == (2, 1, 2, 3)
    assert nf.half_turns == (0, 0, 1)
    assert nf.e_odd == frozenset({(2, 3)})
    assert nf.e_even == frozenset({(1, 2)})
    assert expand_normal_form(nf).edge_multiset() == w.edge_multiset()


def test_path_normalize_reverses_when_needed():
    # same multiset as the mixed walk but traversed from the high end
    w = Walk((3, 2, 3, 2, 1, 2))
    nf = normalize_path_walk(4, w)
    assert expand_normal_form(nf).edge_multiset() == w.edge_multiset()


def test_path_normalize_rejects_non_path_steps():
    with pytest.raises(InvalidWalk):
        normalize_path_walk(4, Walk((0, 2)))
    with pytest.raises(InvalidWalk):
        normalize_path_walk(3, Walk((3, 4)))


def test_path_normalize_rejects_empty():
    with pytest.raises(EmptyWalk):
        normalize_path_walk(5, Walk(()))


def test_path_normalize_many_random_walks():
    g = path_graph(8)
    rng = random.Random(77)
    for _ in range(1000):
        w = random_walk_on(g, rng.randrange(1, 17), rng)
        nf = normalize_path_walk(8, w)
        assert expand_normal_form(nf).edge_multiset() == w.edge_multiset()
        # nonzero multiplicities form one contiguous block m..M-1
        counts = w.edge_multiset().counts
        ks = sorted(k for (k, _) in counts)
        assert ks == list(range(ks[0], ks[-1] + 1))
