"""Brute-force verifiers that bypass every structural shortcut.

These work from generator arrays alone, never from the poset, so they
can sit on the other side of an equality check from the closed forms.
"""

import numpy as np

from . import _kernels, monomials
from .monomials import MonomialIdeal


def ideals_equal(I, J):
    """Equality through the canonical minimal generators."""
    return I == J


def _maximal_sets(sets):
    return frozenset(S for S in sets if not any(S < T for T in sets))


def associated_primes_bruteforce(I, return_witnesses=False):
    """Associated primes of a monomial ideal by colon witness search.

    Walks the divisors f of lcm(G(I)) depth first and keeps the variable
    sets P with I : f = <P>.  Every associated prime has such a witness
    inside the divisor lattice: truncating an arbitrary witness at the
    lcm leaves the colon unchanged.  Members of I are pruned with their
    whole multiple subtree, since their colons are the unit ideal.
    """
    if I.is_zero() or I.is_unit():
        raise ValueError("associated primes need a proper nonzero ideal")
    gens = np.ascontiguousarray(I.gens)
    bound = gens.max(axis=0)
    n = I.nvars
    f = np.zeros(n, dtype=np.int64)
    vbuf = np.zeros(n, dtype=np.bool_)
    found = {}

    def visit(start):
        code = _kernels.colon_class(gens, f, vbuf)
        if code == 0:
            return
        if code == 1:
            prime = frozenset(int(i) + 1 for i in np.flatnonzero(vbuf))
            if prime not in found:
                found[prime] = f.copy()
        for c in range(start, n):
            if f[c] < bound[c]:
                f[c] += 1
                visit(c)
                f[c] -= 1

    visit(0)
    if return_witnesses:
        return frozenset(found), found
    return frozenset(found)


def symbolic_power_bruteforce(I, d, maximal_only=True):
    """Symbolic power from the definition: intersect localized contractions.

    Contracts the d-th ordinary power at the associated primes found by
    witness search and intersects.  Contraction at a smaller prime only
    grows the ideal, so the inclusion-maximal primes suffice; pass
    maximal_only=False to intersect over all of them.
    """
    primes = associated_primes_bruteforce(I)
    keep = _maximal_sets(primes) if maximal_only else primes
    Id = monomials.power(I, d)
    out = None
    for P in sorted(keep, key=sorted):
        piece = monomials.localize_contract(Id, P)
        out = piece if out is None else monomials.intersection(out, piece)
    if __debug__ and maximal_only:
        full = out
        for P in sorted(primes - keep, key=sorted):
            full = monomials.intersection(full, monomials.localize_contract(Id, P))
        assert ideals_equal(full, out), "a non-maximal prime tightened the symbolic power"
    return out
