"""Sparse multivariate polynomials over Q and fraction-free matrix rank.

Support for the certified rank path: entries of a structure matrix are
linear forms in the dual coordinates, and Bareiss elimination keeps all
intermediate values as polynomials (exact divisions only), so the computed
rank is the true generic rank, with no probabilistic caveat.

A monomial is a tuple of (variable, exponent) pairs, sorted by variable,
exponents > 0.  The empty tuple is the constant monomial.
"""

from __future__ import annotations

from fractions import Fraction

Monomial = tuple[tuple[int, int], ...]


def _mul_monomials(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps: dict[int, int] = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _div_monomials(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b, or None if b does not divide a."""
    exps = dict(a)
    for v, e in b:
        have = exps.get(v, 0)
        if have < e:
            return None
        if have == e:
            del exps[v]
        else:
            exps[v] = have - e
    return tuple(sorted(exps.items()))


def _grlex_key(m: Monomial, nvars: int):
    # Graded lex with x0 > x1 > ...: compare total degree, then the dense
    # exponent vector.  Multiplication-compatible, as exact_div requires.
    dense = [0] * nvars
    deg = 0
    for v, e in m:
        dense[v] = e
        deg += e
    return (deg, tuple(dense))


class Poly:
    """Immutable-by-convention sparse polynomial over Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Fraction]):
        self.terms = terms

    @staticmethod
    def zero() -> "Poly":
        return Poly({})

    @staticmethod
    def constant(c) -> "Poly":
        c = Fraction(c)
        return Poly({(): c} if c else {})

    @staticmethod
    def variable(v: int) -> "Poly":
        return Poly({((v, 1),): Fraction(1)})

    @staticmethod
    def linear_form(coeffs: dict[int, Fraction]) -> "Poly":
        return Poly({((v, 1),): Fraction(c) for v, c in coeffs.items() if c})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if not self.terms or not other.terms:
            return Poly({})
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = _mul_monomials(ma, mb)
                s = out.get(m)
                if s is None:
                    out[m] = ca * cb
                else:
                    s = s + ca * cb
                    if s:
                        out[m] = s
                    else:
                        del out[m]
        return Poly(out)

    def _nvars(self) -> int:
        n = 0
        for m in self.terms:
            for v, _ in m:
                if v + 1 > n:
                    n = v + 1
        return n

    def leading(self, nvars: int | None = None):
        """(monomial, coefficient) maximal under graded lex."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if nvars is None:
            nvars = self._nvars()
        m = max(self.terms, key=lambda mm: _grlex_key(mm, nvars))
        return m, self.terms[m]

    def exact_div(self, d: "Poly") -> "Poly":
        """Quotient self / d when the division is exact; raises otherwise.

        When d | self the leading term of every partial remainder stays
        divisible by lt(d), so the naive reduction loop terminates with
        remainder zero.
        """
        if d.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return Poly({})
        nvars = max(self._nvars(), d._nvars())
        dm, dc = d.leading(nvars)
        if len(d) == 1:
            # Monomial divisor: divide term by term (common case: pivot 1x1).
            out = {}
            for m, c in self.terms.items():
                q = _div_monomials(m, dm)
                if q is None:
                    raise ArithmeticError("inexact polynomial division")
                out[q] = c / dc
            return Poly(out)
        rem = dict(self.terms)
        quot: dict[Monomial, Fraction] = {}
        while rem:
            r = Poly(rem)
            m, c = r.leading(nvars)
            qm = _div_monomials(m, dm)
            if qm is None:
                raise ArithmeticError("inexact polynomial division")
            qc = c / dc
            quot[qm] = quot.get(qm, Fraction(0)) + qc
            step = Poly({qm: qc}) * d
            for sm, sc in step.terms.items():
                s = rem.get(sm, Fraction(0)) - sc
                if s:
                    rem[sm] = s
                else:
                    rem.pop(sm, None)
        return Poly({m: c for m, c in quot.items() if c})

    def __repr__(self) -> str:
        if not self.terms:
            return "Poly(0)"
        bits = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(f"y{v}^{e}" if e > 1 else f"y{v}" for v, e in m)
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "Poly(" + " + ".join(bits) + ")"


def bareiss_rank(matrix: list[list[Poly]]) -> int:
    """Rank of a polynomial matrix by fraction-free Gaussian elimination.

    Full (row and column) pivoting; among nonzero candidates the pivot with
    the fewest terms is chosen to keep intermediate minors small.  Every
    division is exact by the Sylvester identity, and Q[y] is a domain, so
    the count of pivots is exactly the rank.
    """
    m = [row[:] for row in matrix]
    nr = len(m)
    nc = len(m[0]) if m else 0
    prev = Poly.constant(1)
    r = 0
    while r < nr and r < nc:
        best = None
        for i in range(r, nr):
            for j in range(r, nc):
                if not m[i][j].is_zero:
                    if best is None or len(m[i][j]) < len(m[best[0]][best[1]]):
                        best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != r:
            m[r], m[bi] = m[bi], m[r]
        if bj != r:
            for row in m:
                row[r], row[bj] = row[bj], row[r]
        piv = m[r][r]
        for i in range(r + 1, nr):
            mir = m[i][r]
            for j in range(r + 1, nc):
                num = piv * m[i][j] - mir * m[r][j]
                m[i][j] = num.exact_div(prev)
            m[i][r] = Poly.zero()
        prev = piv
        r += 1
    return r
