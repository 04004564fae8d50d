"""Free-nilpotent Lie algebras on a Hall basis, and their metabelian quotients.

The Hall family used here is the right-leaning one: a bracket [u, v] of Hall
elements is itself a Hall element when u < v in the Hall order and, if
v = [a, b] is not a generator, a <= u.  The order is length-lex: lower weight
first, generators by index, equal-weight internal nodes by recursive
comparison of subtrees.  With generators x1 < x2 this makes the first basis
elements x1, x2, [x1,x2], [x1,[x1,x2]], [x2,[x1,x2]], matching the bases the
verification harness checks against.

Trees are nested tuples: a generator is an int (0-based), an internal node a
pair (left, right).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    LieAlgebra,
    derived_subalgebra_pair,
    ideal_closure,
    quotient,
)

DEFAULT_MAX_DIM = 500


class ResourceLimitError(RuntimeError):
    """Construction would exceed the configured dimension ceiling."""


def mobius(n: int) -> int:
    """Moebius function by trial division; n >= 1."""
    if n < 1:
        raise ValueError("mobius is defined for n >= 1")
    res = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            res = -res
        d += 1
    if n > 1:
        res = -res
    return res


def witt_layer(g: int, m: int) -> int:
    """Dimension of the weight-m homogeneous layer of the free Lie algebra."""
    total = 0
    for d in range(1, m + 1):
        if m % d == 0:
            total += mobius(d) * g ** (m // d)
    assert total % m == 0
    return total // m


def witt_dimension(g: int, c: int) -> tuple[int, int]:
    """(dim of the free c-step algebra on g generators, dim of its top layer)."""
    if g < 1 or c < 1:
        raise ValueError("need g >= 1 generators and class c >= 1")
    return sum(witt_layer(g, m) for m in range(1, c + 1)), witt_layer(g, c)


def tree_weight(t) -> int:
    if isinstance(t, int):
        return 1
    return tree_weight(t[0]) + tree_weight(t[1])


def tree_label(t, gen_labels) -> str:
    if isinstance(t, int):
        return gen_labels[t]
    return f"[{tree_label(t[0], gen_labels)},{tree_label(t[1], gen_labels)}]"


@dataclass(frozen=True)
class HallBasisElement:
    tree: object
    weight: int
    index: int
    label: str


@dataclass
class FreeNilpotentAlgebra:
    """A structure-constant algebra together with its bracket-tree basis.

    layer_offsets[w-1] is the index of the first basis element of weight w;
    a final entry equal to dim is appended so layer w is the slice
    [layer_offsets[w-1] : layer_offsets[w]].
    """

    generators: int
    nil_class: int
    algebra: LieAlgebra
    hall_basis: list[HallBasisElement]
    layer_offsets: list[int]

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def layer_range(self, w: int) -> range:
        return range(self.layer_offsets[w - 1], self.layer_offsets[w])


class HallBuilder:
    """Hall basis and normal-form rewriting up to a weight cutoff.

    Rewriting uses [u,[a,b]] = [[u,a],b] + [a,[u,b]] when u < a; at fixed
    total weight every recursive call strictly increases the first argument
    in the Hall order, so the recursion is well founded.  Results are
    memoized, which makes the computed constants independent of the order
    in which bracket pairs are requested.
    """

    def __init__(self, g: int, c: int):
        self.g = g
        self.c = c
        self._key_cache: dict = {}
        self._memo: dict = {}
        self.layers: list[list] = [[]]  # layers[w] = trees of weight w
        self.layers.append(list(range(g)))
        for w in range(2, c + 1):
            found = []
            for wu in range(1, w):
                for u in self.layers[wu]:
                    for v in self.layers[w - wu]:
                        if self.key(u) >= self.key(v):
                            continue
                        if not isinstance(v, int) and self.key(v[0]) > self.key(u):
                            continue
                        found.append((u, v))
            found.sort(key=self.key)
            self.layers.append(found)
        self.basis = [t for w in range(1, c + 1) for t in self.layers[w]]
        self.index_of = {t: i for i, t in enumerate(self.basis)}

    def key(self, t):
        k = self._key_cache.get(t)
        if k is None:
            if isinstance(t, int):
                k = (1, t)
            else:
                kl, kr = self.key(t[0]), self.key(t[1])
                k = (kl[0] + kr[0], kl, kr)
            self._key_cache[t] = k
        return k

    def rewrite(self, u, v) -> dict:
        """[u, v] as {tree: int coefficient} over the Hall basis."""
        if tree_weight(u) + tree_weight(v) > self.c:
            return {}
        if u == v:
            return {}
        if self.key(u) > self.key(v):
            return {t: -c for t, c in self.rewrite(v, u).items()}
        cached = self._memo.get((u, v))
        if cached is not None:
            return cached
        if isinstance(v, int) or self.key(v[0]) <= self.key(u):
            res = {(u, v): 1}
        else:
            a, b = v
            res: dict = {}
            for w, cw in self.rewrite(u, a).items():
                for t, ct in self.rewrite(w, b).items():
                    res[t] = res.get(t, 0) + cw * ct
            for w, cw in self.rewrite(u, b).items():
                for t, ct in self.rewrite(a, w).items():
                    res[t] = res.get(t, 0) + cw * ct
            res = {t: c for t, c in res.items() if c}
        self._memo[(u, v)] = res
        return res

    def bracket_coeffs(self, i: int, j: int) -> dict[int, int]:
        """[basis[i], basis[j]] as {basis index: int coefficient}."""
        out = self.rewrite(self.basis[i], self.basis[j])
        return {self.index_of[t]: c for t, c in out.items()}


def build_free_nilpotent(
    g: int, c: int, max_dim: int = DEFAULT_MAX_DIM
) -> FreeNilpotentAlgebra:
    """Free nilpotent-of-class-c Lie algebra on g generators."""
    total, _top = witt_dimension(g, c)
    if total > max_dim:
        raise ResourceLimitError(
            f"free nilpotent algebra with g={g}, c={c} has dimension {total}, "
            f"above the ceiling {max_dim}"
        )
    builder = HallBuilder(g, c)
    for w in range(1, c + 1):
        assert len(builder.layers[w]) == witt_layer(g, w), "Hall layer count is off"
    gen_labels = [f"x{i + 1}" for i in range(g)]
    elements = []
    offsets = []
    pos = 0
    for w in range(1, c + 1):
        offsets.append(pos)
        for t in builder.layers[w]:
            elements.append(HallBasisElement(t, w, pos, tree_label(t, gen_labels)))
            pos += 1
    offsets.append(pos)
    weights = [e.weight for e in elements]
    brackets = {}
    for i in range(total):
        for j in range(i + 1, total):
            if weights[i] + weights[j] > c:
                continue
            coeffs = builder.bracket_coeffs(i, j)
            if coeffs:
                brackets[(i, j)] = {k: Fraction(v) for k, v in coeffs.items()}
    alg = LieAlgebra(total, tuple(e.label for e in elements), brackets)
    return FreeNilpotentAlgebra(g, c, alg, elements, offsets)


def build_metabelian(
    g: int, c: int, max_dim: int = DEFAULT_MAX_DIM
) -> FreeNilpotentAlgebra:
    """Free metabelian-and-nilpotent algebra: the class-c free algebra modulo
    the ideal generated by brackets of derived-subalgebra elements."""
    free = build_free_nilpotent(g, c, max_dim)
    _d1, d2 = derived_subalgebra_pair(free.algebra)
    ideal = ideal_closure(free.algebra, d2)
    qalg, _proj = quotient(free.algebra, ideal)
    by_label = {e.label: e for e in free.hall_basis}
    survivors = [by_label[s] for s in qalg.labels]
    elements = [
        HallBasisElement(e.tree, e.weight, i, e.label) for i, e in enumerate(survivors)
    ]
    offsets = []
    for w in range(1, c + 1):
        offsets.append(sum(1 for e in elements if e.weight < w))
    offsets.append(len(elements))
    if g == 2:
        assert qalg.dim == (c * c - c + 4) // 2
    return FreeNilpotentAlgebra(g, c, qalg, elements, offsets)


def build_fg3_explicit_basis(g: int) -> FreeNilpotentAlgebra:
    """The class-3 free algebra on the explicit basis x_i, x_ij, x_ijk.

    x_ij = [x_i, x_j] for 1 <= i < j <= g, ordered (1,2),(1,3),(2,3),(1,4)...;
    x_ijk = [x_i, [x_j, x_k]] for 1 <= j < k <= g and 1 <= i <= k, ordered by
    (k, j, i).  Brackets [x_i, x_jk] with i > k are rewritten through the
    Jacobi identity as -x_jki + x_kji.  Useful because the distinguished
    functionals in the verification harness are written in these coordinates.
    """
    if g < 2:
        raise ValueError("need at least two generators")
    pairs = sorted(
        ((i, j) for j in range(2, g + 1) for i in range(1, j)), key=lambda p: (p[1], p[0])
    )
    triples = [
        (i, j, k)
        for k in range(2, g + 1)
        for j in range(1, k)
        for i in range(1, k + 1)
    ]
    triples.sort(key=lambda t: (t[2], t[1], t[0]))
    gen_labels = [f"x{i}" for i in range(1, g + 1)]
    labels = (
        gen_labels
        + [f"x_{i}{j}" for (i, j) in pairs]
        + [f"x_{i}{j}{k}" for (i, j, k) in triples]
    )
    pair_at = {p: g + t for t, p in enumerate(pairs)}
    triple_at = {t: g + len(pairs) + s for s, t in enumerate(triples)}
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j) in pairs:
        brackets[(i - 1, j - 1)] = {pair_at[(i, j)]: Fraction(1)}
    for (j, k) in pairs:
        col = pair_at[(j, k)]
        for i in range(1, g + 1):
            if i <= k:
                coeffs = {triple_at[(i, j, k)]: Fraction(1)}
            else:
                coeffs = {
                    triple_at[(j, k, i)]: Fraction(-1),
                    triple_at[(k, j, i)]: Fraction(1),
                }
            brackets[(i - 1, col)] = coeffs
    alg = LieAlgebra(len(labels), tuple(labels), brackets)
    trees = (
        [i for i in range(g)]
        + [(i - 1, j - 1) for (i, j) in pairs]
        + [(i - 1, (j - 1, k - 1)) for (i, j, k) in triples]
    )
    wts = [1] * g + [2] * len(pairs) + [3] * len(triples)
    elements = [
        HallBasisElement(t, w, idx, labels[idx])
        for idx, (t, w) in enumerate(zip(trees, wts))
    ]
    total, top = witt_dimension(g, 3)
    assert len(labels) == total and len(triples) == top
    return FreeNilpotentAlgebra(g, 3, alg, elements, [0, g, g + len(pairs), total])
