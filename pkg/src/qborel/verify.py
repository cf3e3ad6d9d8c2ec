"""Randomized verification of the structural identities.

Each property draws seeded random instances and compares an independent
computation against the closed form; a trial passes when every check on
the instance holds.  Trials are reproducible from (seed, property,
index) alone, so a worker pool returns the same report as a plain loop.
"""

import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import engine, monomials, oracle, spectra, spread
from .errors import TheoremViolation
from .poset import Poset

_EDGE_PROBABILITY = 0.3


def random_poset(rng, max_n):
    """Random order: a DAG with edge probability 0.3, relabeled."""
    n = int(rng.integers(1, max_n + 1))
    perm = rng.permutation(n) + 1
    rels = [
        (int(perm[j]), int(perm[i]))
        for j in range(n)
        for i in range(j + 1, n)
        if rng.random() < _EDGE_PROBABILITY
    ]
    return Poset(n, rels)


def random_monomial(rng, n, max_deg):
    """Random exponent vector with total degree in 1..max_deg."""
    d = int(rng.integers(1, max_deg + 1))
    return np.bincount(rng.integers(0, n, size=d), minlength=n).astype(np.int64)


def random_squarefree(rng, n, max_deg):
    """Random 0/1 exponent vector with 1..min(n, max_deg) entries."""
    k = int(rng.integers(1, min(n, max_deg) + 1))
    m = np.zeros(n, dtype=np.int64)
    m[rng.choice(n, size=k, replace=False)] = 1
    return m


def random_disjoint_pair(rng, max_n, max_deg):
    """A two-block poset with one monomial supported in each block.

    The blocks share no relations, so the two order ideals are disjoint
    by construction.
    """
    top = max(2, max_n)
    n1 = int(rng.integers(1, top))
    n2 = int(rng.integers(1, top - n1 + 1))
    n = n1 + n2
    rels = [
        (j + 1, i + 1)
        for j in range(n1)
        for i in range(j + 1, n1)
        if rng.random() < _EDGE_PROBABILITY
    ]
    rels += [
        (n1 + j + 1, n1 + i + 1)
        for j in range(n2)
        for i in range(j + 1, n2)
        if rng.random() < _EDGE_PROBABILITY
    ]
    poset = Poset(n, rels)
    m1 = np.zeros(n, dtype=np.int64)
    m1[:n1] = random_monomial(rng, n1, max_deg)
    m2 = np.zeros(n, dtype=np.int64)
    m2[n1:] = random_monomial(rng, n2, max_deg)
    return poset, m1, m2


def check_symbolic_powers(poset, m, d_max=3):
    """Oracle symbolic power = ordinary power = closure of m^d."""
    fails = []
    I = engine.generate_principal(poset, m)
    for d in range(1, d_max + 1):
        via_oracle = oracle.symbolic_power_bruteforce(I, d)
        via_power = monomials.power(I, d)
        via_closure = engine.generate_principal(poset, np.asarray(m) * d)
        if not (via_oracle == via_power == via_closure):
            fails.append(
                f"symbolic power {d} of {monomials.format_monomial(m)} on "
                f"{poset!r}: oracle/power/closure disagree")
    return fails


def check_ass_powers(poset, m, s_max=3):
    """Witness-search primes of every power match the characterization."""
    fails = []
    I = engine.generate_principal(poset, m)
    want = spectra.associated_primes(poset, m)
    Is = I
    for s in range(1, s_max + 1):
        if s > 1:
            Is = monomials.product(Is, I)
        got = oracle.associated_primes_bruteforce(Is)
        if got != want:
            fails.append(
                f"associated primes of power {s} of "
                f"{monomials.format_monomial(m)} on {poset!r}: "
                f"oracle {sorted(map(sorted, got))} vs "
                f"characterization {sorted(map(sorted, want))}")
    return fails


def check_spread(poset, m):
    """Formula, rank and relation-graph spread agree; graph shape matches."""
    fails = []
    I = engine.generate_principal(poset, m)
    by_formula = spread.analytic_spread_principal(poset, m)
    by_rank = spread.analytic_spread_rank(I)
    by_graph = spread.spread_via_relation_graph(spread.linear_relation_graph(I))
    if not by_formula == by_rank == by_graph:
        fails.append(
            f"spread of {monomials.format_monomial(m)} on {poset!r}: "
            f"formula={by_formula} rank={by_rank} graph={by_graph}")
    report = spread.check_transitive_closure_theorem(poset, m)
    if not report.ok:
        fails.append(
            f"relation graph of {monomials.format_monomial(m)} on {poset!r}: "
            f"missing {sorted(map(sorted, report.missing_edges))}, "
            f"extra {sorted(map(sorted, report.extra_edges))}")
    ideal = spectra.order_ideal(poset, m)
    hasse = poset.hasse_graph(ideal)
    isolated = len(hasse.isolated_vertices())
    graph = report.graph
    if len(ideal) != len(graph.vertices) + isolated:
        fails.append(f"vertex count of the relation graph is off on {poset!r}")
    if len(poset.connected_components(ideal)) != len(graph.components()) + isolated:
        fails.append(f"component count of the relation graph is off on {poset!r}")
    return fails


def check_sf_spread(poset, m):
    """Reduction formula for the square-free closure agrees with the rank."""
    fails = []
    I = engine.generate_sf_principal(poset, m)
    result = spread.analytic_spread_sf(poset, m)
    by_rank = spread.analytic_spread_rank(I)
    if result.spread != by_rank:
        fails.append(
            f"square-free spread of {monomials.format_monomial(m)} on "
            f"{poset!r}: reduction={result.spread} rank={by_rank}")
    shared = monomials.support(result.gcd)
    if not poset.is_order_ideal(shared):
        fails.append(
            f"gcd support of {monomials.format_monomial(m)} on {poset!r} "
            f"is not an order ideal")
    if not (monomials.support(m) & poset.minimal_elements()) and shared:
        fails.append(
            f"gcd of {monomials.format_monomial(m)} on {poset!r} should be 1: "
            f"support avoids the minimal elements")
    return fails


def check_product_identity(poset, m1, m2):
    """Closure of a product = product of closures; transversal expansion."""
    fails = []
    I1 = engine.generate_principal(poset, m1)
    I2 = engine.generate_principal(poset, m2)
    both = engine.generate_principal(poset, np.asarray(m1) + np.asarray(m2))
    if monomials.product(I1, I2) != both:
        fails.append(
            f"product of closures of {monomials.format_monomial(m1)} and "
            f"{monomials.format_monomial(m2)} on {poset!r} is off")
    return fails


def check_transversal(poset, m):
    """Expanding the variable-prime factorization recovers the closure."""
    fails = []
    I = engine.generate_principal(poset, m)
    factors = engine.transversal_factorization(poset, m)
    if engine.expand_factorization(factors, poset.n) != I:
        fails.append(
            f"transversal factorization of {monomials.format_monomial(m)} "
            f"on {poset!r} does not expand to the closure")
    return fails


def check_disjoint_intersection(poset, m1, m2):
    """Disjoint order ideals: intersection of closures is their product."""
    fails = []
    a1 = spectra.order_ideal(poset, m1)
    a2 = spectra.order_ideal(poset, m2)
    assert not a1 & a2
    I1 = engine.generate_principal(poset, m1)
    I2 = engine.generate_principal(poset, m2)
    meet = monomials.intersection(I1, I2)
    join = monomials.product(I1, I2)
    if meet != join:
        fails.append(
            f"disjoint intersection of {monomials.format_monomial(m1)} and "
            f"{monomials.format_monomial(m2)} on {poset!r} is not the product")
    return fails


def check_decomposition(poset, m):
    """Component closures intersect back to the closure ideal."""
    fails = []
    I = engine.generate_principal(poset, m)
    parts = spectra.component_decomposition(poset, m)
    meet = parts[0]
    for piece in parts[1:]:
        meet = monomials.intersection(meet, piece)
    if meet != I:
        fails.append(
            f"component decomposition of {monomials.format_monomial(m)} "
            f"on {poset!r} does not intersect back")
    restrictions = spectra.maximal_components(poset, m)
    back = np.sum(restrictions, axis=0) if restrictions else None
    if back is None or not np.array_equal(back, np.asarray(m)):
        fails.append(
            f"component restrictions of {monomials.format_monomial(m)} "
            f"on {poset!r} do not multiply back")
    return fails


def check_containment(poset, m, d_max=3):
    """Containment invariants exist and take their closed-form values."""
    try:
        data = spectra.containment_invariants(poset, m, d_max)
    except TheoremViolation as exc:
        return [str(exc)]
    fails = []
    if data.waldschmidt != monomials.degree(m):
        fails.append(f"waldschmidt of {monomials.format_monomial(m)} is off")
    if any(data.sdefect) or data.resurgence_bound != 1:
        fails.append(f"containment data of {monomials.format_monomial(m)} is off")
    return fails


def _trial_symbolic(rng, max_n, max_deg):
    poset = random_poset(rng, max_n)
    return check_symbolic_powers(poset, random_monomial(rng, poset.n, max_deg))


def _trial_ass(rng, max_n, max_deg):
    poset = random_poset(rng, max_n)
    return check_ass_powers(poset, random_monomial(rng, poset.n, max_deg))


def _trial_spread(rng, max_n, max_deg):
    poset = random_poset(rng, max_n)
    return check_spread(poset, random_monomial(rng, poset.n, max_deg))


def _trial_sf_spread(rng, max_n, max_deg):
    poset = random_poset(rng, max_n)
    return check_sf_spread(poset, random_squarefree(rng, poset.n, max_deg))


def _trial_product(rng, max_n, max_deg):
    poset = random_poset(rng, max_n)
    return check_product_identity(
        poset,
        random_monomial(rng, poset.n, max_deg),
        random_monomial(rng, poset.n, max_deg))


def _trial_transversal(rng, max_n, max_deg):
    poset = random_poset(rng, max_n)
    return check_transversal(poset, random_monomial(rng, poset.n, max_deg))


def _trial_disjoint(rng, max_n, max_deg):
    return check_disjoint_intersection(*random_disjoint_pair(rng, max_n, max_deg))


def _trial_decomposition(rng, max_n, max_deg):
    poset = random_poset(rng, max_n)
    return check_decomposition(poset, random_monomial(rng, poset.n, max_deg))


def _trial_containment(rng, max_n, max_deg):
    poset = random_poset(rng, max_n)
    return check_containment(poset, random_monomial(rng, poset.n, max_deg))


PROPERTIES = {
    "symbolic-powers": _trial_symbolic,
    "ass-persistence": _trial_ass,
    "spread-agreement": _trial_spread,
    "squarefree-spread": _trial_sf_spread,
    "product-identity": _trial_product,
    "transversal-expansion": _trial_transversal,
    "disjoint-intersection": _trial_disjoint,
    "component-decomposition": _trial_decomposition,
    "containment-invariants": _trial_containment,
}


@dataclass
class PropertyReport:
    """Outcome of one property over all its trials."""

    name: str
    passed: int
    total: int
    failures: list


def run_trial(name, seed, index, max_n, max_deg):
    """One reproducible trial; returns failure strings, empty on pass."""
    rng = np.random.default_rng([seed, zlib.crc32(name.encode()), index])
    return PROPERTIES[name](rng, max_n, max_deg)


def _run_trial_args(args):
    return run_trial(*args)


def run_suite(seed, trials, max_n, max_deg, properties=None, jobs=1):
    """Run every property for the given trial count and aggregate."""
    names = list(PROPERTIES) if properties is None else list(properties)
    for name in names:
        if name not in PROPERTIES:
            raise ValueError(f"unknown property {name!r}")
    tasks = [
        (name, seed, index, max_n, max_deg)
        for name in names
        for index in range(trials)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run_trial_args, tasks, chunksize=8))
    else:
        outcomes = [_run_trial_args(t) for t in tasks]
    reports = []
    for k, name in enumerate(names):
        chunk = outcomes[k * trials:(k + 1) * trials]
        failures = [msg for fails in chunk for msg in fails]
        passed = sum(1 for fails in chunk if not fails)
        reports.append(PropertyReport(name, passed, trials, failures))
    return reports
