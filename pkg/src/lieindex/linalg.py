"""Exact linear algebra over the rationals and over prime fields.

Matrices are dense row-major lists of lists.  Rational entries are
`fractions.Fraction` (ints are accepted and promoted); prime-field entries
are plain ints reduced mod p.  No floating point anywhere.  Matrices in this
package are small (n <= ~100), so the routines favour clarity over blocking
or sparsity tricks.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

# Default modulus for randomized rank: the 61-bit Mersenne prime.  Minors of
# the matrices we specialize have degree <= n <= ~100, so the per-trial
# Schwartz-Zippel failure bound n/p is below 2^-54.
DEFAULT_PRIME = (1 << 61) - 1

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin, deterministic for n < 3.3 * 10^24 with the fixed bases."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _copy(rows) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows, ncols: int | None = None):
    """Reduced row-echelon form.

    Returns (nonzero rows of the RREF, pivot column indices).  Pivots are
    found by first-nonzero row-major scan, which makes the result canonical:
    two row spans are equal iff their rrefs are identical.
    """
    m = _copy(rows)
    nr = len(m)
    nc = ncols if ncols is not None else (len(m[0]) if m else 0)
    pivots: list[int] = []
    r = 0
    for c in range(nc):
        pr = None
        for i in range(r, nr):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = m[r][c]
        if inv != 1:
            m[r] = [x / inv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c]:
                f = m[i][c]
                mr = m[r]
                m[i] = [a - f * b for a, b in zip(m[i], mr)]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return m[:r], pivots


def rank(rows) -> int:
    """Rank over Q.

    Each row is scaled by the lcm of its denominators (rank-preserving) and
    the integer matrix is reduced by fraction-free one-step elimination, so
    no Fraction arithmetic happens in the O(n^3) loop.  Exact: divisions in
    the update are exact by the Sylvester minor identity.
    """
    m = []
    for row in rows:
        fr = [Fraction(x) for x in row]
        den = 1
        for x in fr:
            den = den * x.denominator // gcd(den, x.denominator)
        m.append([int(x.numerator * (den // x.denominator)) for x in fr])
    nr = len(m)
    nc = len(m[0]) if m else 0
    r = 0
    prev = 1
    for c in range(nc):
        pr = None
        for i in range(r, nr):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        mr = m[r]
        for i in range(r + 1, nr):
            mi = m[i]
            f = mi[c]
            if f:
                m[i] = [(piv * a - f * b) // prev for a, b in zip(mi, mr)]
            elif prev != 1 or piv != 1:
                m[i] = [piv * a // prev for a in mi]
        prev = piv
        r += 1
        if r == nr:
            break
    return r


def nullspace(rows, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column.

    The basis is canonical given the RREF: vector for free column f has a 1
    in position f and minus the RREF entries in the pivot positions.
    """
    nc = ncols if ncols is not None else (len(rows[0]) if rows else 0)
    red, pivots = rref(rows, nc)
    pivset = set(pivots)
    basis = []
    for f in range(nc):
        if f in pivset:
            continue
        v = [Fraction(0)] * nc
        v[f] = Fraction(1)
        for t, p in enumerate(pivots):
            v[p] = -red[t][f]
        basis.append(v)
    return basis


def invert(rows) -> list[list[Fraction]]:
    """Inverse of a square rational matrix; raises ValueError if singular."""
    n = len(rows)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    red, pivots = rref(m, 2 * n)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def rank_mod_p(rows, p: int) -> int:
    """Rank over F_p.  Entries are ints (any residues; reduced here)."""
    m = [[x % p for x in row] for row in rows]
    nr = len(m)
    nc = len(m[0]) if m else 0
    r = 0
    for c in range(nc):
        pr = None
        for i in range(r, nr):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], p - 2, p)
        for i in range(r + 1, nr):
            if m[i][c]:
                f = m[i][c] * inv % p
                mr = m[r]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], mr)]
        r += 1
        if r == nr:
            break
    return r


def mat_vec(rows, v) -> list[Fraction]:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in rows]


def transpose(rows):
    return [list(col) for col in zip(*rows)]
