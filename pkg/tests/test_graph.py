import io
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from adaptcc.graph import (
    Graph,
    GraphFormatError,
    compute_stats,
    erdos_renyi,
    generate,
    grid,
    normalize,
    parse_dimacs,
    parse_edge_list,
    parse_matrix_market,
    rmat,
    write_dimacs,
    write_edge_list,
    write_matrix_market,
)
from adaptcc.oracle import oracle_cc


def parse(text, **kw):
    return parse_edge_list(io.StringIO(text), **kw)


# -- edge list ----------------------------------------------------------------

def test_edge_list_basic():
    g = parse("0 1\n1 2\n")
    assert g.n == 3
    assert g.pairs() == [(0, 1), (1, 2)]


def test_edge_list_comment_and_implicit_n():
    g = parse("# c\n3 4\n")
    assert g.n == 5 and g.pairs() == [(3, 4)]


def test_edge_list_malformed_reports_line():
    with pytest.raises(GraphFormatError) as err:
        parse("0 x\n")
    assert err.value.line == 1


def test_edge_list_malformed_later_line():
    with pytest.raises(GraphFormatError, match="line 3"):
        parse("0 1\n# skip\n1 2 3\n")


def test_edge_list_header():
    g = parse("# header follows\n6 2\n0 1\n4 5\n", header=True)
    assert g.n == 6 and g.m == 2


def test_edge_list_endpoint_beyond_header():
    with pytest.raises(GraphFormatError, match="line 2"):
        parse("3 1\n0 3\n", header=True)


def test_edge_list_empty():
    g = parse("")
    assert g.n == 0 and g.m == 0
    assert parse("# only comments\n\n").n == 0


# -- DIMACS -------------------------------------------------------------------

def test_dimacs_basic():
    g = parse_dimacs(io.StringIO("p sp 3 2\na 1 2 7\na 2 3 4\n"))
    assert g.n == 3 and g.pairs() == [(0, 1), (1, 2)]


def test_dimacs_arc_before_problem_line():
    with pytest.raises(GraphFormatError, match="before problem"):
        parse_dimacs(io.StringIO("a 1 2 7\n"))


def test_dimacs_endpoint_out_of_range():
    with pytest.raises(GraphFormatError, match="out of range"):
        parse_dimacs(io.StringIO("p sp 2 1\na 1 3 1\n"))


def test_dimacs_missing_problem_line():
    with pytest.raises(GraphFormatError, match="missing"):
        parse_dimacs(io.StringIO("c nothing here\n"))


# -- MatrixMarket -------------------------------------------------------------

MM_SYM = "%%MatrixMarket matrix coordinate pattern symmetric\n"


def test_matrix_market_symmetric_pattern():
    g = parse_matrix_market(io.StringIO(MM_SYM + "3 3 2\n1 2\n2 3\n"))
    assert g.n == 3 and g.pairs() == [(0, 1), (1, 2)]


def test_matrix_market_self_loop_kept():
    g = parse_matrix_market(io.StringIO(MM_SYM + "2 2 1\n1 1\n"))
    assert g.n == 2 and g.pairs() == [(0, 0)]


def test_matrix_market_index_out_of_range():
    with pytest.raises(GraphFormatError):
        parse_matrix_market(io.StringIO(MM_SYM + "2 2 1\n3 1\n"))


def test_matrix_market_count_mismatch():
    with pytest.raises(GraphFormatError, match="declared 2"):
        parse_matrix_market(io.StringIO(MM_SYM + "3 3 2\n1 2\n"))


def test_matrix_market_unsupported_header():
    with pytest.raises(GraphFormatError, match="unsupported"):
        parse_matrix_market(io.StringIO("%%MatrixMarket matrix array real general\n2 2\n"))


def test_matrix_market_rectangular_takes_max_dimension():
    text = "%%MatrixMarket matrix coordinate real general\n2 5 1\n1 5 3.5\n"
    g = parse_matrix_market(io.StringIO(text))
    assert g.n == 5 and g.pairs() == [(0, 4)]


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 30).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(
        st.tuples(st.integers(1, n), st.integers(1, n)).filter(lambda e: e[0] != e[1]),
        max_size=40))))
def test_matrix_market_symmetric_not_mirrored(case):
    n, entries = case
    body = "".join(f"{i} {j}\n" for i, j in entries)
    g = parse_matrix_market(io.StringIO(MM_SYM + f"{n} {n} {len(entries)}\n" + body))
    assert g.m == len(entries)


# -- Graph invariants -------------------------------------------------------------

def test_graph_rejects_out_of_range_endpoint():
    with pytest.raises(ValueError, match="outside"):
        Graph.from_pairs(2, [(0, 2)])


def test_graph_edges_read_only():
    g = Graph.from_pairs(3, [(0, 1)])
    with pytest.raises(ValueError):
        g.edges[0, 0] = 2


def test_normalize():
    g = Graph.from_pairs(4, [(1, 0), (0, 1), (2, 2), (3, 1)])
    assert normalize(g).pairs() == [(0, 1), (1, 3)]


# -- round-trips ----------------------------------------------------------------

graphs = st.integers(1, 40).flatmap(
    lambda n: st.builds(
        Graph.from_pairs, st.just(n),
        st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=60)))


@settings(max_examples=80, deadline=None)
@given(graphs)
def test_edge_list_round_trip_with_header(g):
    buf = io.StringIO()
    write_edge_list(g, buf, header=True)
    assert parse(buf.getvalue(), header=True) == g


@settings(max_examples=80, deadline=None)
@given(graphs)
def test_dimacs_round_trip(g):
    buf = io.StringIO()
    write_dimacs(g, buf)
    assert parse_dimacs(io.StringIO(buf.getvalue())) == g


@settings(max_examples=80, deadline=None)
@given(graphs)
def test_matrix_market_round_trip(g):
    buf = io.StringIO()
    write_matrix_market(g, buf)
    assert parse_matrix_market(io.StringIO(buf.getvalue())) == g


def test_edge_list_round_trip_without_header_needs_used_max_vertex():
    g = Graph.from_pairs(4, [(0, 3), (2, 1)])
    buf = io.StringIO()
    write_edge_list(g, buf)
    assert parse(buf.getvalue()) == g


# -- generators -----------------------------------------------------------------

def test_grid_2x2():
    g = grid(2, 2)
    assert g.n == 4
    assert g.pairs() == [(0, 1), (2, 3), (0, 2), (1, 3)]


def test_grid_degree_and_connectivity():
    for r, c in [(1, 1), (1, 7), (5, 3), (20, 20)]:
        g = grid(r, c)
        assert g.m == r * (c - 1) + (r - 1) * c
        assert compute_stats(g).max_degree <= 4
        assert set(oracle_cc(g).tolist()) == {0}


def test_erdos_renyi_deterministic():
    a = erdos_renyi(4, 3, seed=1)
    b = erdos_renyi(4, 3, seed=1)
    assert a.m == 3 and a == b
    assert a.edges.tobytes() == b.edges.tobytes()
    assert erdos_renyi(1000, 50, seed=2) != erdos_renyi(1000, 50, seed=3)


def test_rmat_size_and_skew():
    g = rmat(scale=10, edge_factor=16, a=0.57, b=0.19, c=0.19, d=0.05, seed=7)
    assert g.n == 1024 and g.m == 16384
    degree = np.bincount(g.edges.ravel(), minlength=g.n)
    assert degree.max() > 3 * degree.mean()


def test_rmat_deterministic_bytes():
    assert rmat(8, 4, seed=5).edges.tobytes() == rmat(8, 4, seed=5).edges.tobytes()


def test_rmat_quadrant_frequencies():
    # top-level bit pattern follows the quadrant probabilities
    g = rmat(scale=1, edge_factor=50_000, a=0.5, b=0.2, c=0.2, d=0.1, seed=0)
    src, dst = g.edges[:, 0], g.edges[:, 1]
    freq = [np.mean((src == i) & (dst == j)) for i, j in [(0, 0), (0, 1), (1, 0), (1, 1)]]
    assert np.allclose(freq, [0.5, 0.2, 0.2, 0.1], atol=0.01)


@pytest.mark.parametrize("kwargs", [
    dict(a=0.5, b=0.2, c=0.2, d=0.2),
    dict(a=-0.1, b=0.5, c=0.5, d=0.1),
])
def test_rmat_probabilities_validated(kwargs):
    with pytest.raises(ValueError):
        rmat(4, 2, **kwargs)


def test_generators_reject_zero_vertices():
    with pytest.raises(ValueError):
        erdos_renyi(0, 1)
    with pytest.raises(ValueError):
        grid(0, 3)


def test_generate_specs():
    assert generate("grid:2x2") == grid(2, 2)
    assert generate("er:n=4,m=3,seed=1") == erdos_renyi(4, 3, seed=1)
    assert generate("er:n=4,m=3", seed=1) == erdos_renyi(4, 3, seed=1)
    g = generate("rmat:scale=3,ef=2,seed=9")
    assert g.n == 8 and g.m == 16


@pytest.mark.parametrize("spec", ["foo:1", "er:n=4", "rmat:scale=3,bogus=1", "er:n=4,m"])
def test_generate_bad_specs(spec):
    with pytest.raises(ValueError):
        generate(spec)


# -- statistics -----------------------------------------------------------------

def test_stats_path():
    s = compute_stats(Graph.from_pairs(3, [(0, 1), (1, 2)]))
    assert s.avg_degree == Fraction(4, 3) and s.max_degree == 2


def test_stats_no_edges():
    s = compute_stats(Graph.from_pairs(5, []))
    assert s.avg_degree == 0 and s.max_degree == 0


def test_stats_dedup_and_self_loops():
    s = compute_stats(Graph.from_pairs(2, [(0, 1), (1, 0), (0, 0)]))
    assert s.avg_degree == 1 and s.max_degree == 1
    assert s.m_stored == 3 and s.m_unique == 1


def test_stats_empty_graph():
    s = compute_stats(Graph.from_pairs(0, []))
    assert s.avg_degree == 0 and s.n == 0


@settings(max_examples=60, deadline=None)
@given(graphs)
def test_stats_bounds(g):
    s = compute_stats(g)
    assert s.avg_degree >= 0
    assert s.max_degree <= max(g.n - 1, 0)
    # brute-force degree count over the set of distinct non-loop adjacencies
    adj = {frozenset(e) for e in g.pairs() if e[0] != e[1]}
    assert s.avg_degree == Fraction(2 * len(adj), g.n)
