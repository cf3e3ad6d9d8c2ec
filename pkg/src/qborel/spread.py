"""Analytic spread of equigenerated monomial ideals, three ways.

The rank of the exponent matrix, the closed form on the order ideal and
the linear relation graph all compute the same number for closure
ideals; keeping the routes separate is what makes the agreement checks
meaningful.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels, engine, monomials
from .poset import Graph, transitive_closure
from .spectra import order_ideal


def exponent_matrix(I):
    """Generator exponent vectors as columns, canonical generator order."""
    return np.ascontiguousarray(I.gens.T)


def integer_rank(mat):
    """Exact rank of an integer matrix over the rationals."""
    mat = np.asarray(mat, dtype=np.int64)
    if mat.ndim != 2:
        raise ValueError("rank wants a 2-dimensional matrix")
    return _kernels.integer_rank_kernel(mat)


def analytic_spread_rank(I):
    """Analytic spread of an equigenerated ideal via its exponent matrix."""
    if I.is_zero():
        raise ValueError("the zero ideal has no analytic spread")
    if not I.is_equigenerated():
        raise ValueError("the rank formula needs an equigenerated ideal")
    return integer_rank(exponent_matrix(I))


def analytic_spread_principal(poset, m):
    """Closed form for closure ideals: |A(m)| - K(A(m)) + 1."""
    m = monomials.monomial(m)
    engine._check_ambient(poset, m)
    if monomials.degree(m) == 0:
        raise ValueError("the monomial 1 has no closure ideal")
    ideal = order_ideal(poset, m)
    comps = poset.connected_components(ideal)
    return len(ideal) - len(comps) + 1


def linear_relation_graph(I):
    """Edges {i, j} with x_i u = x_j v for generators u, v of I.

    Vertices are the endpoints of edges, so the graph never carries
    isolated vertices.  Works for any monomial ideal; generators of
    different degrees simply never produce an edge.
    """
    adj = np.zeros((I.nvars, I.nvars), dtype=np.bool_)
    _kernels.relation_adjacency(np.ascontiguousarray(I.gens), adj)
    edges = frozenset(
        frozenset((int(i) + 1, int(j) + 1))
        for i, j in zip(*np.nonzero(np.triu(adj)))
    )
    verts = frozenset().union(*edges) if edges else frozenset()
    return Graph(verts, edges)


def spread_via_relation_graph(graph):
    """Vertex count minus component count plus one.

    Reads the spread off a linear relation graph.  The count is only
    meaningful for graphs of polymatroidal ideals, which closure ideals
    are; the caller vouches for that.
    """
    return len(graph.vertices) - len(graph.components()) + 1


def hasse_incidence_matrix(poset, m):
    """Signed vertex/edge incidence matrix of the Hasse diagram of A(m).

    Diagnostic companion to analytic_spread_principal: the rank of this
    matrix is |A(m)| - K(A(m)), one less than the spread.  Columns are
    the cover relations inside A(m), -1 at the lower element and +1 at
    the upper.
    """
    m = monomials.monomial(m)
    engine._check_ambient(poset, m)
    ideal = order_ideal(poset, m)
    edges = [(j, i) for j, i in sorted(poset.covers)
             if j in ideal and i in ideal]
    B = np.zeros((poset.n, len(edges)), dtype=np.int64)
    for col, (j, i) in enumerate(edges):
        B[j - 1, col] = -1
        B[i - 1, col] = 1
    return B


@dataclass(frozen=True)
class ClosureComparison:
    """Relation graph of a closure ideal versus its predicted shape."""

    ok: bool
    graph: Graph
    expected: Graph
    missing_edges: frozenset
    extra_edges: frozenset


def check_transitive_closure_theorem(poset, m):
    """Compare the relation graph with the closed Hasse diagram.

    The relation graph of the closure ideal of m must equal the
    transitive closure of the Hasse diagram of A(m) with isolated
    vertices dropped.
    """
    I = engine.generate_principal(poset, m)
    graph = linear_relation_graph(I)
    hasse = poset.hasse_graph(order_ideal(poset, m))
    expected = transitive_closure(hasse).without_isolated()
    missing = expected.edges - graph.edges
    extra = graph.edges - expected.edges
    ok = (not missing and not extra and graph.vertices == expected.vertices)
    return ClosureComparison(ok, graph, expected,
                             frozenset(missing), frozenset(extra))


@dataclass(frozen=True, eq=False)
class SquarefreeSpread:
    """Spread of a square-free closure ideal with its reduction data."""

    spread: int
    gcd: np.ndarray
    induced_ground: frozenset


def analytic_spread_sf(poset, m):
    """Spread of the square-free closure ideal via its gcd reduction.

    Dividing out m' = gcd of the generators leaves a closure ideal over
    the induced subposet on the complement of supp(m'); its closed form
    gives the spread.
    """
    I = engine.generate_sf_principal(poset, m)
    m = monomials.monomial(m)
    shared = I.gens.min(axis=0)
    ground = frozenset(range(1, poset.n + 1)) - monomials.support(shared)
    induced = poset.induced(ground)
    quotient = m - shared
    sub = np.zeros(induced.poset.n, dtype=np.int64)
    for k, label in enumerate(induced.labels):
        sub[k] = quotient[label - 1]
    ideal = induced.poset.down_closure(monomials.support(sub))
    comps = induced.poset.connected_components(ideal)
    return SquarefreeSpread(
        spread=len(ideal) - len(comps) + 1,
        gcd=shared,
        induced_ground=ground,
    )
