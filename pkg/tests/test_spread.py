import numpy as np
import pytest

from qborel import (
    Graph,
    MonomialIdeal,
    Poset,
    analytic_spread_principal,
    analytic_spread_rank,
    analytic_spread_sf,
    check_transitive_closure_theorem,
    exponent_matrix,
    format_monomial,
    generate_principal,
    generate_sf_principal,
    hasse_incidence_matrix,
    integer_rank,
    linear_relation_graph,
    order_ideal,
    parse_monomial,
    spread_via_relation_graph,
)


def test_integer_rank_basics():
    assert integer_rank(np.eye(3, dtype=np.int64)) == 3
    assert integer_rank(np.zeros((2, 5), dtype=np.int64)) == 0
    assert integer_rank(np.array([[1, 1, 0], [0, 1, 1]]).T) == 2
    assert integer_rank(np.array([[2, 4], [1, 2]])) == 1
    with pytest.raises(ValueError):
        integer_rank(np.array([1, 2, 3]))


def test_integer_rank_needs_exact_arithmetic():
    # a float path would lose this rank to rounding; Hilbert-like matrix
    # scaled to integers keeps full rank only under exact elimination
    n = 7
    M = np.array([[1 << (abs(i - j) * 8) for j in range(n)] for i in range(n)],
                 dtype=object)
    assert integer_rank(np.array(M, dtype=np.int64)) == n


def test_exponent_matrix_shape(q3, m23):
    I = generate_principal(q3, m23)
    A = exponent_matrix(I)
    assert A.shape == (3, 2)
    assert sorted(map(tuple, A.T.tolist())) == [(0, 1, 1), (1, 1, 0)]


def test_spread_rank(q11, m49, q3, m23):
    assert analytic_spread_rank(generate_principal(q3, m23)) == 2
    assert analytic_spread_rank(generate_principal(q11, m49)) == 4
    assert analytic_spread_rank(MonomialIdeal.from_strings(["x1*x2"], 3)) == 1
    with pytest.raises(ValueError):
        analytic_spread_rank(MonomialIdeal.zero(3))
    with pytest.raises(ValueError):
        analytic_spread_rank(MonomialIdeal.from_strings(["x1", "x2*x3"], 3))


def test_spread_formula(q11, m49, q3, m23):
    assert analytic_spread_principal(q3, m23) == 2
    assert analytic_spread_principal(q11, m49) == 4
    anti = Poset(4, [])
    assert analytic_spread_principal(anti, parse_monomial("x1*x3^2", 4)) == 1
    with pytest.raises(ValueError):
        analytic_spread_principal(q3, parse_monomial("1", 3))


def test_relation_graph_examples(q11, m49, q3, m23):
    small = linear_relation_graph(generate_principal(q3, m23))
    assert small.edges == {frozenset({1, 3})}
    assert small.vertices == {1, 3}

    single = linear_relation_graph(MonomialIdeal.from_strings(["x1*x2^2"], 3))
    assert single.edges == frozenset() and single.vertices == frozenset()

    big = linear_relation_graph(generate_principal(q11, m49))
    cliques = {frozenset((a, b)) for comp in ({1, 4}, {6, 7, 9})
               for a in comp for b in comp if a < b}
    assert big.edges == cliques


def test_relation_graph_degenerate_inputs():
    # no preconditions: zero, unit and mixed-degree ideals all give graphs
    assert linear_relation_graph(MonomialIdeal.zero(3)).edges == frozenset()
    assert linear_relation_graph(MonomialIdeal.unit(3)).edges == frozenset()
    mixed = MonomialIdeal.from_strings(["x1", "x2*x3"], 3)
    assert linear_relation_graph(mixed).edges == frozenset()


def test_spread_via_graph():
    assert spread_via_relation_graph(Graph({1, 3}, [(1, 3)])) == 2
    assert spread_via_relation_graph(Graph(frozenset())) == 1
    two_cliques = Graph(
        {1, 2, 3, 4, 5},
        [(1, 2), (3, 4), (3, 5), (4, 5)])
    assert spread_via_relation_graph(two_cliques) == 4


def test_closure_theorem_check(q11, m49, q3, m23):
    assert check_transitive_closure_theorem(q3, m23).ok
    assert check_transitive_closure_theorem(q11, m49).ok
    anti = Poset(3, [])
    report = check_transitive_closure_theorem(anti, parse_monomial("x1*x2", 3))
    assert report.ok and report.graph.edges == frozenset()


def test_incidence_matrix_identity(q11, m49, q3, m23, q6, m1236):
    for poset, m in ((q11, m49), (q3, m23), (q6, m1236)):
        B = hasse_incidence_matrix(poset, m)
        assert (B.sum(axis=0) == 0).all()
        ideal = order_ideal(poset, m)
        comps = poset.connected_components(ideal)
        assert integer_rank(B) == len(ideal) - len(comps)
        assert analytic_spread_principal(poset, m) == integer_rank(B) + 1


def test_incidence_matrix_edges(q3, m23):
    B = hasse_incidence_matrix(q3, m23)
    assert B.shape == (3, 1)
    assert B[:, 0].tolist() == [-1, 0, 1]


def test_sf_spread_worked_example(q6, m1236):
    result = analytic_spread_sf(q6, m1236)
    assert result.spread == 3
    assert format_monomial(result.gcd) == "x1*x2*x3"
    assert result.induced_ground == {4, 5, 6}
    assert analytic_spread_rank(generate_sf_principal(q6, m1236)) == 3
    induced = q6.induced(result.induced_ground)
    assert induced.poset.covers == {(1, 2), (2, 3)}


def test_sf_spread_antichain():
    anti = Poset(3, [])
    m = parse_monomial("x1*x3", 3)
    result = analytic_spread_sf(anti, m)
    assert result.spread == 1
    assert format_monomial(result.gcd) == "x1*x3"


def test_sf_spread_no_minimal_support():
    # support misses every minimal element, so the gcd must be 1
    chain = Poset(3, [(1, 2), (2, 3)])
    m = parse_monomial("x2*x3", 3)
    result = analytic_spread_sf(chain, m)
    assert format_monomial(result.gcd) == "1"
    assert result.spread == analytic_spread_principal(chain, m)


def test_sf_spread_rejects_squares(q11, m49):
    with pytest.raises(ValueError):
        analytic_spread_sf(q11, m49)
