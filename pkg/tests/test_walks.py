"""Closed-walk counts on paths and odd cycles: combinatorial formulas vs an
exact matrix-power trace, plus the spectral identities tying the counts to
the cosine power sums."""

import pytest
from hypothesis import given, settings, strategies as st

from trigsum.closed_forms import cos_power_sum
from trigsum.errors import ParameterError
from trigsum.walks import (
    GraphKind,
    GraphSpec,
    WalkCount,
    adjacency_matrix,
    cycle_closed_walks,
    path_closed_walks,
    trace_oracle,
    walk_table_lines,
)


def test_path_frozen_small_values():
    # 3-vertex path (n = 4): 3, 4, 8, 16, 32 for m = 0..4
    assert [path_closed_walks(4, m) for m in range(5)] == [3, 4, 8, 16, 32]
    # single vertex (n = 2): no edges, only the trivial walk at m = 0
    assert path_closed_walks(2, 0) == 1
    assert path_closed_walks(2, 3) == 0
    # two vertices (n = 3): one edge, 2 closed walks of every even length
    assert [path_closed_walks(3, m) for m in range(4)] == [2, 2, 2, 2]


def test_cycle_frozen_small_values():
    # triangle: trace of A^{2m} for m = 0..3
    assert [cycle_closed_walks(3, m) for m in range(4)] == [3, 6, 18, 66]
    # 5-cycle
    assert cycle_closed_walks(5, 0) == 5
    assert cycle_closed_walks(5, 1) == 10
    assert cycle_closed_walks(5, 2) == 30


@given(
    st.integers(min_value=2, max_value=14),
    st.integers(min_value=0, max_value=9),
)
@settings(max_examples=60, deadline=None)
def test_path_formula_equals_trace(n, m):
    """Property: the binomial formula counts exactly trace(A^{2m})."""
    graph = GraphSpec(GraphKind.PATH, n)
    assert path_closed_walks(n, m) == trace_oracle(graph, 2 * m)


@given(
    st.integers(min_value=1, max_value=7),
    st.integers(min_value=0, max_value=9),
)
@settings(max_examples=60, deadline=None)
def test_cycle_formula_equals_trace(half_n, m):
    """Property: same for odd cycles."""
    n = 2 * half_n + 1
    graph = GraphSpec(GraphKind.CYCLE, n)
    assert cycle_closed_walks(n, m) == trace_oracle(graph, 2 * m)


@given(
    st.integers(min_value=2, max_value=16),
    st.integers(min_value=0, max_value=10),
)
@settings(max_examples=80)
def test_path_spectral_identity(n, m):
    """Property: p_path(2m) = 2^{2m} * (C(m, n) - 1)."""
    assert path_closed_walks(n, m) == 2 ** (2 * m) * (cos_power_sum(m, n) - 1)


@given(
    st.integers(min_value=1, max_value=8),
    st.integers(min_value=0, max_value=10),
)
@settings(max_examples=80)
def test_cycle_spectral_identity(half_n, m):
    """Property: p_cycle(2m) = 2^{2m} * C(m, n) for odd n."""
    n = 2 * half_n + 1
    assert cycle_closed_walks(n, m) == 2 ** (2 * m) * cos_power_sum(m, n)


def test_paths_have_no_odd_closed_walks():
    """Paths are bipartite: every odd-length trace vanishes."""
    for n in range(2, 10):
        graph = GraphSpec(GraphKind.PATH, n)
        for length in (1, 3, 5, 7):
            assert trace_oracle(graph, length) == 0


def test_odd_cycles_have_odd_closed_walks():
    # the n-cycle has exactly 2n closed walks of length n (n odd >= 3:
    # go all the way around, n starts x 2 directions)
    for n in (3, 5, 7, 9):
        graph = GraphSpec(GraphKind.CYCLE, n)
        assert trace_oracle(graph, n) == 2 * n


def test_even_cycles_rejected():
    with pytest.raises(ParameterError):
        cycle_closed_walks(4, 2)
    with pytest.raises(ParameterError):
        GraphSpec(GraphKind.CYCLE, 6).validate()
    with pytest.raises(ParameterError):
        GraphSpec(GraphKind.CYCLE, 1).validate()


def test_path_parameter_validation():
    with pytest.raises(ParameterError):
        path_closed_walks(1, 2)
    with pytest.raises(ParameterError):
        path_closed_walks(4, -1)
    with pytest.raises(ParameterError):
        trace_oracle(GraphSpec(GraphKind.PATH, 4), -2)


def test_walk_count_type():
    assert isinstance(path_closed_walks(4, 2), int)
    with pytest.raises(ValueError):
        WalkCount(-1)
    assert WalkCount(7) == 7


def test_adjacency_shapes():
    path = adjacency_matrix(GraphSpec(GraphKind.PATH, 5))
    assert len(path) == 4
    assert sum(sum(row) for row in path) == 2 * 3  # 3 edges
    cycle = adjacency_matrix(GraphSpec(GraphKind.CYCLE, 5))
    assert len(cycle) == 5
    assert all(sum(row) == 2 for row in cycle)  # 2-regular
    triangle = adjacency_matrix(GraphSpec(GraphKind.CYCLE, 3))
    assert sum(sum(row) for row in triangle) == 6


def test_walk_table_lines_format():
    lines = walk_table_lines(GraphKind.PATH, 4, 3)
    assert lines == ["0 3", "1 4", "2 8", "3 16"]
    lines = walk_table_lines(GraphKind.CYCLE, 3, 2)
    assert lines == ["0 3", "1 6", "2 18"]
