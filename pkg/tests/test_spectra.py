from fractions import Fraction

import numpy as np
import pytest

from qborel import (
    MonomialIdeal,
    Poset,
    associated_primes,
    component_decomposition,
    containment_invariants,
    format_monomial,
    generate_principal,
    intersection,
    max_associated_primes,
    maximal_components,
    monomial_of_order_ideal,
    order_ideal,
    parse_monomial,
    persistence_spectrum,
    power,
    symbolic_power,
    symbolic_power_contractions,
)
from qborel.spectra import _associated_primes_all_divisors


def primes(*sets):
    return frozenset(frozenset(s) for s in sets)


def test_order_ideal(q11, m49):
    assert order_ideal(q11, m49) == {1, 4, 6, 7, 9}
    assert order_ideal(q11, parse_monomial("x9", 11)) == {6, 7, 9}
    assert order_ideal(q11, parse_monomial("x9^2", 11)) == {6, 7, 9}
    assert order_ideal(q11, parse_monomial("1", 11)) == frozenset()


def test_monomial_of_order_ideal(q11, m49):
    assert format_monomial(monomial_of_order_ideal(q11, m49, {6, 7, 9})) == "x9^2"
    assert format_monomial(monomial_of_order_ideal(q11, m49, {1, 4})) == "x4"
    full = monomial_of_order_ideal(q11, m49, {1, 4, 6, 7, 9})
    assert np.array_equal(full, m49)
    with pytest.raises(ValueError):
        monomial_of_order_ideal(q11, m49, {4, 9})  # not an order ideal
    with pytest.raises(ValueError):
        monomial_of_order_ideal(q11, m49, {3})  # no divisor realizes it


def test_maximal_components(q11, m49, q3, m23):
    assert [format_monomial(p) for p in maximal_components(q11, m49)] == ["x4", "x9^2"]
    assert [format_monomial(p) for p in maximal_components(q3, m23)] == ["x2", "x3"]
    m = parse_monomial("x5", 11)
    assert [format_monomial(p) for p in maximal_components(q11, m)] == ["x5"]
    with pytest.raises(ValueError):
        maximal_components(q3, parse_monomial("1", 3))


def test_associated_primes_worked(q11, m49):
    assert associated_primes(q11, m49) == primes({1, 4}, {6, 7, 9})


def test_associated_primes_small(q3, m23):
    assert associated_primes(q3, m23) == primes({2}, {1, 3})


def test_associated_primes_antichain():
    anti = Poset(2, [])
    assert associated_primes(anti, parse_monomial("x1*x2", 2)) == primes({1}, {2})


def test_associated_primes_chain():
    chain = Poset(3, [(1, 2), (2, 3)])
    m = parse_monomial("x1*x3", 3)
    assert associated_primes(chain, m) == primes({1}, {1, 2, 3})
    assert max_associated_primes(chain, m) == primes({1, 2, 3})


def test_all_divisor_scan_matches(q11, m49, q3, m23):
    assert _associated_primes_all_divisors(q11, m49) == associated_primes(q11, m49)
    assert _associated_primes_all_divisors(q3, m23) == associated_primes(q3, m23)


def test_max_associated_primes(q11, m49):
    assert max_associated_primes(q11, m49) == primes({1, 4}, {6, 7, 9})
    # every associated prime sits inside exactly one maximal one
    maxes = max_associated_primes(q11, m49)
    for p in associated_primes(q11, m49):
        assert sum(p <= q for q in maxes) == 1


def test_component_decomposition(q11, m49, q3, m23):
    parts = component_decomposition(q11, m49)
    assert len(parts) == 2
    meet = intersection(parts[0], parts[1])
    assert meet == generate_principal(q11, m49)

    small = component_decomposition(q3, m23)
    assert [p.generator_strings() for p in small] == [["x2"], ["x1", "x3"]]
    assert intersection(small[0], small[1]) == generate_principal(q3, m23)


def test_component_decomposition_connected(q3):
    m = parse_monomial("x3", 3)
    assert component_decomposition(q3, m) == [generate_principal(q3, m)]


def test_symbolic_power_routes(q3, m23):
    want = MonomialIdeal.from_strings(
        ["x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2"], 3)
    assert symbolic_power(q3, m23, 2) == want
    assert symbolic_power_contractions(q3, m23, 2) == want
    assert symbolic_power_contractions(q3, m23, 2, maximal_only=False) == want


def test_symbolic_power_is_closure_of_power(q11, m49):
    d = 2
    assert symbolic_power(q11, m49, d) == generate_principal(
        q11, np.asarray(m49) * d)
    assert symbolic_power_contractions(q11, m49, d) == symbolic_power(q11, m49, d)


def test_symbolic_power_d1(q3, m23):
    assert symbolic_power(q3, m23, 1) == generate_principal(q3, m23)


def test_persistence_spectrum(q11, m49, q3, m23):
    spec3 = persistence_spectrum(q11, m49, 3)
    assert [s for s, _ in spec3] == [1, 2, 3]
    assert all(p == primes({1, 4}, {6, 7, 9}) for _, p in spec3)
    spec2 = persistence_spectrum(q3, m23, 2)
    assert all(p == primes({2}, {1, 3}) for _, p in spec2)
    with pytest.raises(ValueError):
        persistence_spectrum(q3, m23, 0)


def test_containment_invariants(q11, m49, q3, m23):
    data = containment_invariants(q11, m49, 2)
    assert data.waldschmidt == Fraction(3)
    assert data.sdefect == (0, 0)
    assert data.resurgence_bound == Fraction(1)
    assert data.alpha_over_s == (Fraction(3), Fraction(3))

    small = containment_invariants(q3, m23, 3)
    assert small.alpha_over_s == (Fraction(2), Fraction(2), Fraction(2))
    assert small.waldschmidt == 2


def test_containment_invariants_principal():
    anti = Poset(3, [])
    data = containment_invariants(anti, parse_monomial("x1^2*x2", 3), 3)
    assert data.sdefect == (0, 0, 0)
    assert data.waldschmidt == 3
