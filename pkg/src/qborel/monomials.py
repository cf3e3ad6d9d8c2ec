"""Monomials and monomial ideals as integer exponent vectors.

A monomial in n variables is a length-n int64 array of exponents; an
ideal is held by the rows of a (k, n) array.  Variables are 1-indexed
in every public interface, so x4*x9^2 in 11 variables is the vector
with entries 1 and 2 at positions 4 and 9.
"""

import re

import numpy as np

from . import _kernels
from .errors import ParseError

# Sums and differences of two in-range exponents stay well inside int64.
_EXPONENT_LIMIT = 1 << 31

_TERM_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def _check_exponents(arr):
    if arr.size and int(arr.max()) >= _EXPONENT_LIMIT:
        raise OverflowError("exponent exceeds the supported range")


def monomial(exponents):
    """Validate and copy an exponent sequence into a monomial."""
    m = np.array(exponents, dtype=np.int64)
    if m.ndim != 1:
        raise ValueError("a monomial is a flat exponent vector")
    if m.size and int(m.min()) < 0:
        raise ValueError("exponents must be nonnegative")
    _check_exponents(m)
    return m


def parse_monomial(text, nvars):
    """Parse 'x4*x9^2' into an exponent vector; '1' is the empty product."""
    s = text.strip()
    exps = np.zeros(nvars, dtype=np.int64)
    if s == "1":
        return exps
    for term in s.split("*"):
        t = term.strip()
        mt = _TERM_RE.match(t)
        if mt is None:
            raise ParseError(f"bad monomial term {t!r}")
        idx = int(mt.group(1))
        exp = int(mt.group(2)) if mt.group(2) else 1
        if not 1 <= idx <= nvars:
            raise ParseError(f"variable x{idx} out of range 1..{nvars}")
        exps[idx - 1] += exp
    _check_exponents(exps)
    return exps


def format_monomial(m):
    """Inverse of parse_monomial, factors in ascending variable order."""
    parts = [
        f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
        for i, e in enumerate(np.asarray(m)) if e > 0
    ]
    return "*".join(parts) if parts else "1"


def degree(m):
    return int(np.asarray(m).sum())


def support(m):
    """Indices of the variables dividing m, 1-indexed."""
    return frozenset(int(i) + 1 for i in np.flatnonzero(np.asarray(m)))


def divides(a, b):
    return bool((np.asarray(a) <= np.asarray(b)).all())


def lcm(a, b):
    return np.maximum(np.asarray(a), np.asarray(b)).astype(np.int64)


def gcd(a, b):
    return np.minimum(np.asarray(a), np.asarray(b)).astype(np.int64)


def is_squarefree(m):
    return bool((np.asarray(m) <= 1).all())


def restrict(m, members):
    """Zero every exponent outside the given variable set."""
    m = np.asarray(m)
    out = np.zeros_like(m)
    for i in members:
        if not 1 <= i <= m.shape[0]:
            raise ValueError(f"variable index {i} out of range 1..{m.shape[0]}")
        out[i - 1] = m[i - 1]
    return out


def _canonical_order(rows):
    # ascending total degree, then descending lexicographic exponents,
    # the order a worked example is read in
    if rows.shape[0] <= 1:
        return rows
    keys = np.vstack([(-rows[:, ::-1]).T, rows.sum(axis=1)])
    return rows[np.lexsort(keys)]


def _minimal_rows(rows):
    if rows.shape[0] == 0:
        return rows
    rows = np.unique(rows, axis=0)
    degs = rows.sum(axis=1)
    order = np.argsort(degs, kind="stable")
    rows = np.ascontiguousarray(rows[order])
    keep = _kernels.minimalize_keep(rows, degs[order])
    return _canonical_order(rows[keep])


class MonomialIdeal:
    """A monomial ideal held by its unique minimal generators.

    The generator rows are minimalized and stored in canonical order on
    construction, so equal ideals compare equal.  The zero ideal has no
    rows and the unit ideal the single row of the monomial 1.
    """

    __slots__ = ("gens", "nvars")

    def __init__(self, gens, nvars):
        nvars = int(nvars)
        rows = np.asarray(gens, dtype=np.int64)
        if rows.size == 0:
            rows = rows.reshape(0, nvars)
        if rows.ndim != 2 or rows.shape[1] != nvars:
            raise ValueError(f"generators must be rows of length {nvars}")
        if rows.size and int(rows.min()) < 0:
            raise ValueError("exponents must be nonnegative")
        _check_exponents(rows)
        rows = _minimal_rows(rows)
        rows.flags.writeable = False
        self.gens = rows
        self.nvars = nvars

    @classmethod
    def zero(cls, nvars):
        return cls(np.zeros((0, nvars), dtype=np.int64), nvars)

    @classmethod
    def unit(cls, nvars):
        return cls(np.zeros((1, nvars), dtype=np.int64), nvars)

    @classmethod
    def principal(cls, m):
        m = monomial(m)
        return cls(m[None, :], m.shape[0])

    @classmethod
    def from_strings(cls, texts, nvars):
        texts = list(texts)
        rows = np.array([parse_monomial(t, nvars) for t in texts],
                        dtype=np.int64).reshape(len(texts), nvars)
        return cls(rows, nvars)

    def __len__(self):
        return self.gens.shape[0]

    def __iter__(self):
        return iter(self.gens)

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal)
                and self.nvars == other.nvars
                and self.gens.shape == other.gens.shape
                and bool((self.gens == other.gens).all()))

    def __hash__(self):
        return hash((self.nvars, self.gens.shape, self.gens.tobytes()))

    def __repr__(self):
        if self.is_zero():
            return f"MonomialIdeal(<0>, nvars={self.nvars})"
        body = ", ".join(self.generator_strings())
        return f"MonomialIdeal(<{body}>, nvars={self.nvars})"

    def generator_strings(self):
        return [format_monomial(g) for g in self.gens]

    def is_zero(self):
        return self.gens.shape[0] == 0

    def is_unit(self):
        return self.gens.shape[0] == 1 and degree(self.gens[0]) == 0

    def degrees(self):
        return self.gens.sum(axis=1)

    def is_equigenerated(self):
        degs = self.degrees()
        return degs.size <= 1 or bool((degs == degs[0]).all())

    def contains(self, m):
        """Membership of a single monomial."""
        m = np.ascontiguousarray(np.asarray(m, dtype=np.int64)[None, :])
        return bool(_kernels.divides_any(self.gens, m)[0])

    def contains_each(self, rows):
        """Membership mask over the rows of an array of monomials."""
        rows = np.ascontiguousarray(np.asarray(rows, dtype=np.int64))
        return _kernels.divides_any(self.gens, rows)

    def contains_ideal(self, other):
        """True iff every generator of other lies in self."""
        _check_same_ring(self, other)
        return bool(self.contains_each(other.gens).all())


def _check_same_ring(I, J):
    if I.nvars != J.nvars:
        raise ValueError("ideals live in different variable counts")


def minimalize(rows, nvars):
    """Build the ideal generated by arbitrary monomial rows."""
    return MonomialIdeal(rows, nvars)


def _accumulate_minimal(blocks, nvars):
    # running minimalize keeps peak memory at one block; discarding
    # non-minimal rows early never changes the final minimal set
    acc = np.zeros((0, nvars), dtype=np.int64)
    for block in blocks:
        acc = _minimal_rows(np.concatenate([acc, block]))
    return MonomialIdeal(acc, nvars)


def product(I, J):
    """The product ideal, generated by pairwise products."""
    _check_same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return MonomialIdeal.zero(I.nvars)
    _check_exponents(I.gens)
    _check_exponents(J.gens)

    def blocks():
        step = max(1, _kernels._CHUNK_CELLS // max(1, J.gens.shape[0]))
        for s in range(0, I.gens.shape[0], step):
            chunk = I.gens[s:s + step]
            yield (chunk[:, None, :] + J.gens[None, :, :]).reshape(-1, I.nvars)

    return _accumulate_minimal(blocks(), I.nvars)


def power(I, d):
    """The d-th ordinary power, d >= 1."""
    if int(d) != d or d < 1:
        raise ValueError("power wants an integer exponent d >= 1")
    out = I
    for _ in range(int(d) - 1):
        out = product(out, I)
    return out


def intersection(I, J):
    """The intersection ideal, generated by pairwise lcms."""
    _check_same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return MonomialIdeal.zero(I.nvars)

    def blocks():
        step = max(1, _kernels._CHUNK_CELLS // max(1, J.gens.shape[0]))
        for s in range(0, I.gens.shape[0], step):
            chunk = I.gens[s:s + step]
            yield np.maximum(chunk[:, None, :], J.gens[None, :, :]).reshape(-1, I.nvars)

    return _accumulate_minimal(blocks(), I.nvars)


def colon(I, f):
    """The colon ideal I : f for a monomial f."""
    f = monomial(f)
    if f.shape[0] != I.nvars:
        raise ValueError("monomial lives in the wrong variable count")
    if I.is_zero():
        return MonomialIdeal.zero(I.nvars)
    rows = I.gens - f[None, :]
    np.clip(rows, 0, None, out=rows)
    return MonomialIdeal(rows, I.nvars)


def localize_contract(I, members):
    """Contraction of I localized at the prime on the given variables.

    For a monomial ideal this is generated by the generators with every
    exponent outside the variable set zeroed out.
    """
    members = frozenset(members)
    for i in members:
        if not 1 <= i <= I.nvars:
            raise ValueError(f"variable index {i} out of range 1..{I.nvars}")
    if I.is_zero():
        return MonomialIdeal.zero(I.nvars)
    rows = I.gens.copy()
    drop = [i for i in range(I.nvars) if (i + 1) not in members]
    if drop:
        rows[:, drop] = 0
    return MonomialIdeal(rows, I.nvars)


def variable_prime(members, nvars):
    """The prime ideal generated by the given variables."""
    members = sorted(frozenset(members))
    rows = np.zeros((len(members), nvars), dtype=np.int64)
    for r, i in enumerate(members):
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        rows[r, i - 1] = 1
    return MonomialIdeal(rows, nvars)


def alpha(I):
    """Least degree of a member, undefined for the zero ideal."""
    if I.is_zero():
        raise ValueError("alpha is undefined for the zero ideal")
    return int(I.degrees().min())
