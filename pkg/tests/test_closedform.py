"""Closed-form values and witnesses for the four solved families."""

from __future__ import annotations

from collections import Counter

import pytest

from irregwalk.closedform import (
    _SMALL_PATH_WITNESS,
    ClosedFormAnswer,
    mlw_complete,
    mlw_complete_bipartite,
    mlw_cycle,
    mlw_path,
    phi_path,
    phi_path_multiset,
)
from irregwalk.errors import OrderTooSmall
from irregwalk.exact import exact_mlw, exact_phi
from irregwalk.generators import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
)
from irregwalk.graph import Walk, is_locally_irregular, norm_edge
from irregwalk.walkops import check_irregularising


# ── formula values against the exact solver ──────────────────────────────


@pytest.mark.parametrize("n", [3, 4, 5])
def test_complete_matches_exact(n):
    assert mlw_complete(n).value == exact_mlw(complete_graph(n)).value


@pytest.mark.parametrize(
    "a,b", [(1, 2), (1, 3), (2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (4, 4),
            (1, 6), (2, 6), (3, 5), (1, 7)]
)
def test_bipartite_matches_exact(a, b):
    assert mlw_complete_bipartite(a, b).value == exact_mlw(
        complete_bipartite(a, b)
    ).value


@pytest.mark.parametrize("n", range(2, 10))
def test_path_matches_exact(n):
    assert mlw_path(n).value == exact_mlw(path_graph(n)).value


@pytest.mark.parametrize("n", range(3, 8))
def test_cycle_matches_exact(n):
    assert mlw_cycle(n).value == exact_mlw(cycle_graph(n)).value


@pytest.mark.parametrize("n", range(2, 13))
def test_phi_matches_exact(n):
    assert phi_path(n) == exact_phi(path_graph(n)).value


# ── named values ─────────────────────────────────────────────────────────


def test_formula_values():
    assert [mlw_complete(n).value for n in (3, 4, 5, 6)] == [3, 3, 5, 8]
    assert mlw_complete(10).value == (100 - 50 + 10) // 2
    assert mlw_complete_bipartite(3, 4).value == 0
    assert mlw_complete_bipartite(2, 2).value == 2
    assert mlw_complete_bipartite(3, 3).value == 4
    assert [mlw_path(n).value for n in range(2, 11)] == [0, 1, 2, 2, 2, 4, 6, 8, 10]
    assert [mlw_cycle(n).value for n in (3, 4, 8)] == [3, 2, 10]
    assert [phi_path(n) for n in (4, 6, 7)] == [2, 2, 3]


def test_named_witnesses():
    assert mlw_complete(3).witness == Walk((0, 1, 2, 1))
    assert mlw_complete_bipartite(3, 3).witness == Walk((3, 0, 4, 0, 5))
    assert mlw_complete_bipartite(3, 4).witness == Walk(())
    assert mlw_path(2).witness == Walk(())
    assert mlw_cycle(3).witness == Walk((0, 1, 2, 1))


def test_order_too_small():
    for bad in (mlw_complete, mlw_cycle):
        with pytest.raises(OrderTooSmall):
            bad(2)
    with pytest.raises(OrderTooSmall):
        mlw_path(1)
    with pytest.raises(OrderTooSmall):
        phi_path(1)
    with pytest.raises(OrderTooSmall):
        mlw_complete_bipartite(1, 1)
    with pytest.raises(OrderTooSmall):
        mlw_complete_bipartite(0, 5)


# ── witness validity at scale ────────────────────────────────────────────


@pytest.mark.parametrize("n", range(3, 31))
def test_complete_witness_to_thirty(n):
    ans = mlw_complete(n)
    assert ans.witness.length == ans.value
    assert check_irregularising(complete_graph(n), ans.witness).ok


@pytest.mark.parametrize("n", list(range(2, 31)) + [43, 44])
def test_path_witness_to_thirty(n):
    ans = mlw_path(n)
    assert ans.witness.length == ans.value
    assert check_irregularising(path_graph(n), ans.witness).ok


@pytest.mark.parametrize("n", list(range(3, 31)) + [41, 42])
def test_cycle_witness_to_thirty(n):
    ans = mlw_cycle(n)
    assert ans.witness.length == ans.value
    assert check_irregularising(cycle_graph(n), ans.witness).ok


@pytest.mark.parametrize("n", list(range(2, 31)) + [35])
def test_bipartite_witness_to_thirty(n):
    ans = mlw_complete_bipartite(n, n)
    assert ans.witness.length == ans.value == 2 * n - 2
    assert check_irregularising(complete_bipartite(n, n), ans.witness).ok
    uneven = mlw_complete_bipartite(n, n + 1)
    assert uneven.value == 0 and uneven.witness.is_empty()


# ── structural invariants ────────────────────────────────────────────────


@pytest.mark.parametrize("n", range(4, 31))
def test_complete_alteration_multiset(n):
    alt = Counter()
    for u, v in mlw_complete(n).witness.steps():
        alt[u] += 1
        alt[v] += 1
    got = sorted(alt[v] for v in range(n))
    if n == 4:
        want = [0, 1, 2, 3]
    else:
        want = sorted({0, 1, 2, 3, 4} | set(range(6, 2 * (n - 3) + 1, 2)))
    assert got == want


def test_small_path_witnesses_regenerate():
    # The embedded constants are the solver's lexicographically smallest
    # optimal walks; recompute them from scratch.
    for n, verts in _SMALL_PATH_WITNESS.items():
        found = exact_mlw(path_graph(n))
        assert found.witness == Walk(verts), n


@pytest.mark.parametrize("n", range(2, 31))
def test_phi_multiset_is_a_witness(n):
    ms = phi_path_multiset(n)
    assert sum(ms.counts.values()) == phi_path(n)
    g = path_graph(n)
    degs = [g.degree(v) for v in range(g.n)]
    for (u, v), c in ms.counts.items():
        degs[u] += c
        degs[v] += c
    assert is_locally_irregular(g, tuple(degs))
    for k, _ in ms.counts:
        assert k % 4 in (2, 3)


@pytest.mark.parametrize("n", range(4, 31))
def test_cycle_witness_leaves_segment_untouched(n):
    # The folded witness never touches the two edges around v_0.
    walk = mlw_cycle(n).witness
    touched = {norm_edge(a, b) for a, b in walk.steps()}
    assert norm_edge(n - 1, 0) not in touched
    assert norm_edge(0, 1) not in touched


def test_path_shape_tie_break_is_deterministic():
    # Same (value, witness) on every call; i is smallest, j largest among
    # optimal grid cells.
    for n in (10, 11, 12, 13, 14):
        a, b = mlw_path(n), mlw_path(n)
        assert a == b
        assert isinstance(a, ClosedFormAnswer)


def test_closed_form_answer_equality():
    a = ClosedFormAnswer(2, Walk((2, 3, 4)))
    assert a == ClosedFormAnswer(2, Walk((2, 3, 4)))
    assert a != ClosedFormAnswer(2, Walk((0, 1, 2)))
    assert "witness" in repr(a)
