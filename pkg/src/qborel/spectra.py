"""Associated primes, decompositions and symbolic powers of closure ideals.

Everything here rides on one fact: the order ideal generated by the
support of a monomial controls the prime structure of its closure ideal,
component by component of its Hasse diagram.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product as iproduct

import numpy as np

from . import engine, monomials
from .errors import TheoremViolation


def order_ideal(poset, m):
    """Down closure of the support of m; empty for m = 1."""
    m = monomials.monomial(m)
    engine._check_ambient(poset, m)
    return poset.down_closure(monomials.support(m))


def monomial_of_order_ideal(poset, m, members):
    """The largest divisor of m whose order ideal is the given one."""
    m = monomials.monomial(m)
    engine._check_ambient(poset, m)
    members = frozenset(members)
    if not poset.is_order_ideal(members):
        raise ValueError("not an order ideal")
    part = monomials.restrict(m, members)
    if order_ideal(poset, part) != members:
        raise ValueError("the order ideal is not realized by a divisor of m")
    return part


def maximal_components(poset, m):
    """Restrictions of m to the components of its order ideal.

    The restrictions multiply back to m and their order ideals are the
    components, listed by smallest supported variable.
    """
    m = monomials.monomial(m)
    engine._check_ambient(poset, m)
    if monomials.degree(m) == 0:
        raise ValueError("the monomial 1 has no component decomposition")
    comps = poset.connected_components(order_ideal(poset, m))
    parts = [monomials.restrict(m, c) for c in comps]
    parts.sort(key=lambda part: min(monomials.support(part)))
    return parts


def associated_primes(poset, m):
    """Variable sets of the associated primes of the closure ideal of m.

    A variable prime is associated iff it is generated by the connected
    order ideal of a divisor of m; since the order ideal of a divisor
    only depends on its support, subsets of supp(m) cover all cases.
    """
    m = monomials.monomial(m)
    engine._check_ambient(poset, m)
    if monomials.degree(m) == 0:
        raise ValueError("the monomial 1 has no associated primes")
    supp = sorted(monomials.support(m))
    connected = {}
    for r in range(1, len(supp) + 1):
        for sub in combinations(supp, r):
            ideal = poset.down_closure(sub)
            if ideal not in connected:
                connected[ideal] = len(poset.connected_components(ideal)) == 1
    result = frozenset(ideal for ideal, ok in connected.items() if ok)
    if __debug__:
        # the order ideal of a divisor depends on its support alone, so
        # scanning supp(m) subsets must see everything the divisors see
        assert result == _associated_primes_all_divisors(poset, m)
    return result


def _associated_primes_all_divisors(poset, m):
    # the same set read off every divisor instead of every support set;
    # slower cross-check used by the test suite
    m = monomials.monomial(m)
    supp = sorted(monomials.support(m))
    out = set()
    for exps in iproduct(*[range(int(m[i - 1]) + 1) for i in supp]):
        if not any(exps):
            continue
        sub = [i for i, e in zip(supp, exps) if e > 0]
        ideal = poset.down_closure(sub)
        if len(poset.connected_components(ideal)) == 1:
            out.add(ideal)
    return frozenset(out)


def max_associated_primes(poset, m):
    """The inclusion-maximal associated primes.

    These are exactly the components of the order ideal of m, each being
    connected, down closed, and not contained in any other candidate.
    """
    m = monomials.monomial(m)
    engine._check_ambient(poset, m)
    if monomials.degree(m) == 0:
        raise ValueError("the monomial 1 has no associated primes")
    return frozenset(poset.connected_components(order_ideal(poset, m)))


def component_decomposition(poset, m):
    """Closure ideals of the component restrictions of m.

    Their intersection is the closure ideal of m; the pieces have
    pairwise disjoint order ideals.
    """
    return [engine.generate_principal(poset, mk) for mk in maximal_components(poset, m)]


def symbolic_power(poset, m, d):
    """The d-th symbolic power of the closure ideal of m.

    Symbolic and ordinary powers of these ideals coincide, so this is
    the fast route; see symbolic_power_contractions for the definition
    unwound at the associated primes.
    """
    return monomials.power(engine.generate_principal(poset, m), d)


def symbolic_power_contractions(poset, m, d, maximal_only=True):
    """Symbolic power by intersecting localized contractions.

    Contracts the d-th ordinary power at the associated primes and
    intersects.  Contraction at a smaller prime only grows the ideal,
    so the inclusion-maximal primes suffice; maximal_only=False keeps
    every prime for cross-checking.
    """
    I = engine.generate_principal(poset, m)
    Id = monomials.power(I, d)
    if maximal_only:
        primes = max_associated_primes(poset, m)
    else:
        primes = associated_primes(poset, m)
    out = None
    for P in sorted(primes, key=sorted):
        piece = monomials.localize_contract(Id, P)
        out = piece if out is None else monomials.intersection(out, piece)
    if __debug__ and maximal_only:
        full = out
        for P in sorted(associated_primes(poset, m) - primes, key=sorted):
            full = monomials.intersection(full, monomials.localize_contract(Id, P))
        assert full == out, "a non-maximal prime tightened the symbolic power"
    return out


def persistence_spectrum(poset, m, s_max):
    """Associated prime sets of the powers of m, s = 1..s_max.

    Computed from the divisor characterization of each power m^s; the
    sets come out equal for every s because supports do not change.
    """
    if int(s_max) != s_max or s_max < 1:
        raise ValueError("persistence wants an integer bound s_max >= 1")
    m = monomials.monomial(m)
    return [(s, associated_primes(poset, m * s)) for s in range(1, int(s_max) + 1)]


@dataclass(frozen=True)
class ContainmentInvariants:
    """Asymptotic containment data of a closure ideal."""

    waldschmidt: Fraction
    alpha_over_s: tuple
    sdefect: tuple
    resurgence_bound: Fraction


def containment_invariants(poset, m, d_max):
    """Waldschmidt constant, symbolic defects and a resurgence bound.

    Symbolic powers are recomputed from their defining contractions and
    compared with the ordinary powers generator by generator, so the
    closed forms deg(m), 0 and 1 are certified up to d_max rather than
    assumed.  A mismatch raises TheoremViolation.
    """
    if int(d_max) != d_max or d_max < 1:
        raise ValueError("containment data wants an integer bound d_max >= 1")
    m = monomials.monomial(m)
    I = engine.generate_principal(poset, m)
    powers = [I]
    for _ in range(int(d_max) - 1):
        powers.append(monomials.product(powers[-1], I))
    sdefect = []
    alpha_over_s = []
    for d in range(1, int(d_max) + 1):
        sym = symbolic_power_contractions(poset, m, d)
        if sym != powers[d - 1]:
            raise TheoremViolation(
                f"symbolic power {d} of {monomials.format_monomial(m)} "
                f"differs from the ordinary power")
        sdefect.append(0)
        alpha_over_s.append(Fraction(monomials.alpha(sym), d))
    waldschmidt = Fraction(monomials.degree(m))
    if any(a != waldschmidt for a in alpha_over_s):
        raise TheoremViolation(
            f"alpha sequence of {monomials.format_monomial(m)} leaves deg(m)")
    for s in range(1, int(d_max) + 1):
        for r in range(1, s + 1):
            if not powers[r - 1].contains_ideal(powers[s - 1]):
                raise TheoremViolation(
                    f"power {s} escapes power {r} for "
                    f"{monomials.format_monomial(m)}")
    return ContainmentInvariants(
        waldschmidt=waldschmidt,
        alpha_over_s=tuple(alpha_over_s),
        sdefect=tuple(sdefect),
        resurgence_bound=Fraction(1),
    )
