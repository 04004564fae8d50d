"""The index of a nilpotent Lie algebra and everything that certifies it.

The index is codim of a generic coadjoint stabilizer, computed as
dim g - generic rank of the structure matrix M(g) whose (i, j) entry is the
linear form sum_k c_ijk * y_k.  Generic rank is obtained either by seeded
random specialization over a large prime field (the rank can only be
underestimated, never overestimated, so the maximum over trials is a sound
lower bound that is correct with overwhelming probability) or by certified
fraction-free elimination on the polynomial entries.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    LieAlgebra,
    NotAbelianError,
    Subspace,
    abelian_witness,
    center,
)
from .linalg import DEFAULT_PRIME, is_probable_prime, nullspace, rank, rank_mod_p
from .polynomials import Poly, bareiss_rank

DEFAULT_TRIALS = 3
DEFAULT_SEED = 0
CERTIFY_DIM_LIMIT = 40


class CertifySizeError(ValueError):
    """Certified rank was requested above the configured dimension gate."""


def _check_prime(prime: int | None) -> int:
    if prime is None:
        return DEFAULT_PRIME
    if prime.bit_length() < 61 or not is_probable_prime(prime):
        raise ValueError("modulus must be a prime of at least 61 bits")
    return prime


def _trial_rng(seed: int, trial: int) -> random.Random:
    # Substream derivation keyed on (seed, trial): reproducible regardless of
    # execution order of the trials.
    return random.Random(1_000_003 * seed + trial)


@dataclass(frozen=True)
class StructureMatrix:
    """Upper triangle of M(g); entry (i, j) with i < j maps k -> c_ijk."""

    n: int
    entries: tuple  # ((i, j, ((k, Fraction), ...)), ...)

    @classmethod
    def of(cls, g: LieAlgebra) -> "StructureMatrix":
        items = tuple(
            (i, j, tuple(sorted(coeffs.items())))
            for (i, j), coeffs in sorted(g.brackets.items())
        )
        return cls(g.dim, items)

    def to_poly_matrix(self) -> list[list[Poly]]:
        m = [[Poly.zero() for _ in range(self.n)] for _ in range(self.n)]
        for i, j, coeffs in self.entries:
            form = Poly.linear_form(dict(coeffs))
            m[i][j] = form
            m[j][i] = -form
        return m


def structure_matrix(g: LieAlgebra) -> StructureMatrix:
    return StructureMatrix.of(g)


def _entries_mod_p(entries, p: int):
    out = []
    for i, j, coeffs in entries:
        row = []
        for k, c in coeffs:
            den = c.denominator % p
            if den == 0:
                raise ValueError("coefficient denominator divisible by the modulus")
            row.append((k, c.numerator % p * pow(den, p - 2, p) % p))
        out.append((i, j, row))
    return out


def _specialized_rank(entries_p, shape, point, p: int, skew: bool) -> int:
    rows, cols = shape
    m = [[0] * cols for _ in range(rows)]
    for i, j, coeffs in entries_p:
        val = 0
        for k, c in coeffs:
            val += c * point[k]
        val %= p
        m[i][j] = val
        if skew:
            m[j][i] = (p - val) % p
    return rank_mod_p(m, p)


def _randomized_rank(entries, shape, nvars, trials, seed, p, skew):
    """(max rank over trials, specialization point attaining it)."""
    entries_p = _entries_mod_p(entries, p)
    best_rank = 0
    best_point = [0] * nvars
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        point = [rng.randrange(p) for _ in range(nvars)]
        r = _specialized_rank(entries_p, shape, point, p, skew)
        if r > best_rank:
            best_rank = r
            best_point = point
    return best_rank, best_point


def certified_generic_rank(
    sm: StructureMatrix, dim_limit: int = CERTIFY_DIM_LIMIT
) -> int:
    if sm.n > dim_limit:
        raise CertifySizeError(
            f"certified rank gated at dimension {dim_limit}; this algebra has {sm.n}"
        )
    return bareiss_rank(sm.to_poly_matrix())


def generic_rank(
    sm: StructureMatrix,
    *,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    prime: int | None = None,
    certify: bool = False,
    dim_limit: int = CERTIFY_DIM_LIMIT,
) -> int:
    if certify:
        return certified_generic_rank(sm, dim_limit)
    p = _check_prime(prime)
    r, _ = _randomized_rank(sm.entries, (sm.n, sm.n), sm.n, trials, seed, p, skew=True)
    return r


@dataclass(frozen=True)
class LinearFunctional:
    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, values) -> "LinearFunctional":
        return cls(tuple(Fraction(v) for v in values))

    def __len__(self) -> int:
        return len(self.coords)


def b_ell_matrix(g: LieAlgebra, ell: LinearFunctional) -> list[list[Fraction]]:
    """Skew bilinear form (x, y) -> ell([x, y]) on the chosen basis."""
    if len(ell) != g.dim:
        raise ValueError("functional length does not match algebra dimension")
    n = g.dim
    m = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), coeffs in g.brackets.items():
        val = sum((c * ell.coords[k] for k, c in coeffs.items()), Fraction(0))
        if val:
            m[i][j] = val
            m[j][i] = -val
    return m


@dataclass(frozen=True)
class StabilizerResult:
    functional: LinearFunctional
    b_ell: tuple
    stabilizer: Subspace

    @property
    def dim(self) -> int:
        return self.stabilizer.dim


def stabilizer(g: LieAlgebra, ell: LinearFunctional) -> StabilizerResult:
    b = b_ell_matrix(g, ell)
    ker = nullspace(b, g.dim)
    sub = Subspace.from_vectors(g.dim, ker)
    assert (g.dim - sub.dim) % 2 == 0, "skew form must have even rank"
    return StabilizerResult(ell, tuple(tuple(row) for row in b), sub)


@dataclass(frozen=True)
class IndexReport:
    dim: int
    index: int
    generic_rank: int
    method: dict
    witness: LinearFunctional | None
    center_dim: int


def index(
    g: LieAlgebra,
    *,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    prime: int | None = None,
    certify: bool = False,
    want_witness: bool = False,
    dim_limit: int = CERTIFY_DIM_LIMIT,
) -> IndexReport:
    p = _check_prime(prime)
    n = g.dim
    sm = structure_matrix(g)
    best_point = None
    if certify:
        r = certified_generic_rank(sm, dim_limit)
        method = {"mode": "certified", "dim_limit": dim_limit}
    else:
        r, best_point = _randomized_rank(
            sm.entries, (n, n), n, trials, seed, p, skew=True
        )
        method = {
            "mode": "randomized",
            "trials": trials,
            "seed": seed,
            "prime": p,
            "failure_bound": format((n / p) ** trials, ".3e") if n else "0",
        }
    witness = None
    if want_witness and n:
        if best_point is None:
            rr, best_point = _randomized_rank(
                sm.entries, (n, n), n, trials, seed, p, skew=True
            )
            if rr != r:
                raise RuntimeError(
                    "randomized search did not reach the certified rank; "
                    "raise trials to find a witness"
                )
        witness = LinearFunctional.of(best_point)
        exact = rank(b_ell_matrix(g, witness))
        if exact != r:
            raise RuntimeError("witness confirmation failed: lifted point lost rank")
    chi = n - r
    z = center(g).dim
    assert r % 2 == 0, "generic rank of a skew matrix must be even"
    assert z <= chi <= n, "index must sit between center dimension and dim"
    return IndexReport(n, chi, r, method, witness, z)


def index_by_sampling(
    g: LieAlgebra, samples: int = 50, seed: int = DEFAULT_SEED, bound: int = 9
) -> int:
    """Minimum stabilizer dimension over seeded small-integer functionals.

    An upper-bound oracle for the index that is independent of the
    structure-matrix path; with enough samples it is exact.
    """
    rng = random.Random(seed)
    best = g.dim
    for _ in range(samples):
        ell = LinearFunctional.of(
            [rng.randint(-bound, bound) for _ in range(g.dim)]
        )
        d = g.dim - rank(b_ell_matrix(g, ell))
        if d < best:
            best = d
    return best


@dataclass(frozen=True)
class OomsResult:
    holds: bool
    rect_rank: int
    required_rank: int
    claimed_index: int | None


def ooms_criterion(
    g: LieAlgebra,
    h: Subspace,
    *,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    prime: int | None = None,
) -> OomsResult:
    """Abelian-subalgebra index criterion.

    For abelian h <= g, the index equals 2 dim h - dim g exactly when the
    rectangular matrix ([x_i, h_j]) of linear forms has generic rank
    dim g - dim h.  Raises NotAbelianError (with witness pair) otherwise.
    """
    w = abelian_witness(g, h)
    if w is not None:
        raise NotAbelianError(*w)
    p = _check_prime(prime)
    n = g.dim
    entries = []
    for i in range(n):
        for t, hv in enumerate(h.basis):
            vec = g.bracket(g.basis_vector(i), hv)
            coeffs = tuple((k, c) for k, c in enumerate(vec) if c)
            if coeffs:
                entries.append((i, t, coeffs))
    r, _ = _randomized_rank(
        tuple(entries), (n, h.dim), n, trials, seed, p, skew=False
    )
    required = n - h.dim
    holds = r == required
    return OomsResult(holds, r, required, 2 * h.dim - n if holds else None)


@dataclass(frozen=True)
class AlphaSandwich:
    lower: int
    upper: int
    certified: bool
    alpha: int | None


def alpha_sandwich(
    g: LieAlgebra,
    candidate: Subspace,
    *,
    chi: int | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    prime: int | None = None,
) -> AlphaSandwich:
    """Bounds for the maximal abelian subalgebra dimension.

    lower = dim of the supplied abelian candidate, upper = (index + dim)/2
    rounded down.  When they agree the maximum is certified (over any field
    extension, since the upper bound is field-independent and the candidate
    is rational).
    """
    w = abelian_witness(g, candidate)
    if w is not None:
        raise NotAbelianError(*w)
    if chi is None:
        chi = index(g, trials=trials, seed=seed, prime=prime).index
    lower = candidate.dim
    upper = (chi + g.dim) // 2
    certified = lower == upper
    return AlphaSandwich(lower, upper, certified, lower if certified else None)
