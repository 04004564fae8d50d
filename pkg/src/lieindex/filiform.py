"""Filiform nilpotent Lie algebras on an adapted basis e_1 .. e_n.

Adapted means [e_1, e_i] = e_{i+1} for 2 <= i <= n-1, [e_1, e_n] = 0, the
lower central series has the maximal-class dimensions n, n-2, n-3, ..., 1, 0,
and brackets respect the position filtration: [e_i, e_j] lies in
span(e_{i+j}, ..., e_n) for i + j <= n, in span(e_n) for i + j = n + 1, and
vanishes for i + j > n + 1.  (For n >= 5 this forces [e_2, e_3] into
span(e_5, ..., e_n).)  The ideals g_i = span(e_i, ..., e_n) then agree with
the lower central series from i = 3 on, independently of basis choices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    LieAlgebra,
    Subspace,
    check_jacobi,
    lower_central_series,
)
from .linalg import invert, mat_vec


def _labels(n: int) -> tuple[str, ...]:
    return tuple(f"e{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class FiliformAlgebra:
    """An adapted-basis filiform algebra plus its top-bracket coefficients.

    alpha_coeffs[i-1] is the e_n coefficient of [e_i, e_{n-i}] for
    i = 1 .. n-1; these drive the index-1 criterion.
    """

    algebra: LieAlgebra
    family: str
    k: int | None
    alpha_coeffs: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return self.algebra.dim


def adapted_violation(alg: LieAlgebra) -> str | None:
    """None if alg carries the adapted filiform shape; else a reason."""
    n = alg.dim
    if n < 3:
        return "need dimension at least 3"
    for i in range(2, n):
        if alg.structure_coeffs(0, i - 1) != {i: Fraction(1)}:
            return f"[e1,e{i}] != e{i + 1}"
    if alg.structure_coeffs(0, n - 1):
        return "[e1,en] != 0"
    for i in range(2, n):
        for j in range(i + 1, n + 1):
            coeffs = alg.structure_coeffs(i - 1, j - 1)
            s = i + j
            if s <= n:
                if any(k < s - 1 for k in coeffs):
                    return f"[e{i},e{j}] leaves span(e{s}..e{n})"
            elif s == n + 1:
                if any(k != n - 1 for k in coeffs):
                    return f"[e{i},e{j}] leaves span(e{n})"
            elif coeffs:
                return f"[e{i},e{j}] != 0 with {i}+{j} > n+1"
    dims = [s.dim for s in lower_central_series(alg)]
    expected = [n] + list(range(n - 2, -1, -1))
    if dims != expected:
        return f"lower central series dims {dims} are not filiform"
    return None


def make_filiform(alg: LieAlgebra, family: str = "adapted", k: int | None = None) -> FiliformAlgebra:
    reason = adapted_violation(alg)
    if reason is not None:
        raise ValueError(f"not an adapted filiform algebra: {reason}")
    n = alg.dim
    alphas = tuple(
        alg.structure_coeffs(i - 1, n - i - 1).get(n - 1, Fraction(0))
        for i in range(1, n)
    )
    return FiliformAlgebra(alg, family, k, alphas)


def build_L(n: int) -> FiliformAlgebra:
    """The model filiform algebra: [e_1, e_i] = e_{i+1} and nothing else."""
    if n < 3:
        raise ValueError("the L family needs dimension >= 3")
    brackets = {(0, i): {i + 1: Fraction(1)} for i in range(1, n - 1)}
    return make_filiform(LieAlgebra(n, _labels(n), brackets), "L")


def build_Q(n: int) -> FiliformAlgebra:
    """Even-dimensional family with [e_i, e_{n+1-i}] = (-1)^i e_n added."""
    if n < 4 or n % 2:
        raise ValueError("the Q family needs even dimension >= 4")
    brackets = {(0, i): {i + 1: Fraction(1)} for i in range(1, n - 1)}
    for i in range(2, n // 2 + 1):
        key = (i - 1, n - i)
        extra = {n - 1: Fraction((-1) ** i)}
        if key in brackets:
            cur = dict(brackets[key])
            cur[n - 1] = cur.get(n - 1, Fraction(0)) + extra[n - 1]
            brackets[key] = cur
        else:
            brackets[key] = extra
    return make_filiform(LieAlgebra(n, _labels(n), brackets), "Q")


def build_G(n: int, k: int) -> FiliformAlgebra:
    """Semidirect family with index n - k + 1 (k odd, 3 <= k <= n).

    Built literally as a one-dimensional algebra acting on an (n-1)-dim core
    t_2 .. t_n via the shift t_i -> t_{i+1}, after checking that the shift
    is a derivation of the core bracket [t_i, t_j] = (-1)^i t_n for i+j = k.
    """
    if k % 2 == 0 or not 3 <= k <= n:
        raise ValueError("need odd k with 3 <= k <= n")
    core_dim = n - 1  # coordinates t_2 .. t_n, index t -> t - 2
    core: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i in range(2, k):
        j = k - i
        if i < j <= n:
            core[(i - 2, j - 2)] = {core_dim - 1: Fraction((-1) ** i)}

    def core_bracket(a: int, b: int) -> dict[int, Fraction]:
        if a == b:
            return {}
        if a < b:
            return core.get((a, b), {})
        return {m: -c for m, c in core.get((b, a), {}).items()}

    def shift(vec: dict[int, Fraction]) -> dict[int, Fraction]:
        return {m + 1: c for m, c in vec.items() if m + 1 < core_dim}

    for a in range(core_dim):
        for b in range(a + 1, core_dim):
            lhs = shift(core_bracket(a, b))
            rhs: dict[int, Fraction] = {}
            for m, c in core_bracket(a + 1, b).items() if a + 1 < core_dim else ():
                rhs[m] = rhs.get(m, Fraction(0)) + c
            for m, c in core_bracket(a, b + 1).items() if b + 1 < core_dim else ():
                rhs[m] = rhs.get(m, Fraction(0)) + c
            rhs = {m: c for m, c in rhs.items() if c}
            if lhs != rhs:
                raise AssertionError("shift map is not a derivation of the core")

    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i in range(1, n - 1):  # [e_1, e_{i+1}] = e_{i+2} from the action
        brackets[(0, i)] = {i + 1: Fraction(1)}
    for (a, b), coeffs in core.items():
        brackets[(a + 1, b + 1)] = {m + 1: c for m, c in coeffs.items()}
    return make_filiform(LieAlgebra(n, _labels(n), brackets), "G", k)


def filiform_ideals(f: FiliformAlgebra) -> list[Subspace]:
    """g_1 .. g_n with g_i = span(e_i .. e_n); checks g_i equals the
    (i-1)-th lower central series term for i >= 3."""
    n = f.n
    ideals = []
    for i in range(1, n + 1):
        vecs = [f.algebra.basis_vector(j) for j in range(i - 1, n)]
        ideals.append(Subspace.from_vectors(n, vecs))
    series = lower_central_series(f.algebra)
    for i in range(3, n + 1):
        assert ideals[i - 1] == series[i - 2], f"g_{i} differs from the series term"
    return ideals


@dataclass(frozen=True)
class IndexOneResult:
    is_index_one: bool
    witness: int | None  # smallest i with [g_i, g_{n-i}] = 0, when not index 1


def index_one_criterion(f: FiliformAlgebra) -> IndexOneResult:
    """Odd dimension only: index 1 iff [g_i, g_{n-i}] != 0 for i = 1 .. n-1,
    read off the alpha coefficients."""
    n = f.n
    if n % 2 == 0:
        raise ValueError("the index-1 criterion applies to odd dimension only")
    for i in range(1, n):
        if not f.alpha_coeffs[i - 1]:
            return IndexOneResult(False, i)
    return IndexOneResult(True, None)


def lower_bound(f: FiliformAlgebra, k: int) -> int | None:
    """n - 2(k-1) when [g_k, g_k] = 0; None when that bracket is nonzero."""
    n = f.n
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    for i in range(k, n + 1):
        for j in range(i + 1, n + 1):
            if f.algebra.structure_coeffs(i - 1, j - 1):
                return None
    return n - 2 * (k - 1)


def achievable_indices(n: int, **index_options) -> list[int]:
    """Sorted indices realized by the semidirect family in dimension n."""
    from .index import index as _index

    out = set()
    for k in range(3, n + 1, 2):
        out.add(_index(build_G(n, k).algebra, **index_options).index)
    return sorted(out)


def random_adapted_deformation(base: FiliformAlgebra, seed: int) -> FiliformAlgebra:
    """Isomorphic copy of base through a random unitriangular adapted basis.

    e_1' = e_1 + (junk in g_3), e_2' = e_2 + (junk in g_3), then
    e_{i+1}' = [e_1', e_i'].  Starting the junk at g_3 keeps every forced
    chain vector of the form e_m + (tail), so the transition matrix is
    unitriangular, and cross terms in pairs with index sum n + 1 land past
    weight n + 1, so those brackets keep their e_n coefficients verbatim.
    """
    g = base.algebra
    n = g.dim
    rng = random.Random(seed)
    e1 = [Fraction(0)] * n
    e1[0] = Fraction(1)
    for j in range(2, n):
        e1[j] = Fraction(rng.randint(-2, 2))
    e2 = [Fraction(0)] * n
    e2[1] = Fraction(1)
    for j in range(2, n):
        e2[j] = Fraction(rng.randint(-2, 2))
    cols = [e1, e2]
    for _ in range(2, n):
        cols.append(g.bracket(cols[0], cols[-1]))
    trans = [[cols[c][r] for c in range(n)] for r in range(n)]
    tinv = invert(trans)
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for s in range(n):
        for t in range(s + 1, n):
            w = g.bracket(cols[s], cols[t])
            if not any(w):
                continue
            coords = mat_vec(tinv, w)
            coeffs = {r: c for r, c in enumerate(coords) if c}
            if coeffs:
                brackets[(s, t)] = coeffs
    alg = LieAlgebra(n, _labels(n), brackets)
    assert check_jacobi(alg) is None
    return make_filiform(alg, "deformed", base.k)
