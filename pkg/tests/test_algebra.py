from fractions import Fraction

import pytest

from lieindex.algebra import (
    LieAlgebra,
    NotAnIdealError,
    Subspace,
    abelian_witness,
    bracket_span,
    center,
    centralizer,
    check_jacobi,
    derived_subalgebra_pair,
    ideal_closure,
    is_abelian_subalgebra,
    lower_central_series,
    nilpotency_class,
    quotient,
    subalgebra_generated,
)
from lieindex.linalg import nullspace


def heisenberg():
    return LieAlgebra(3, None, {(0, 1): {2: 1}})


def two_step_free():
    # Two generators, class 3: basis x1, x2, [x1,x2], [x1,[x1,x2]], [x2,[x1,x2]].
    return LieAlgebra(
        5, None, {(0, 1): {2: 1}, (0, 2): {3: 1}, (1, 2): {4: 1}}
    )


def center_oracle(g):
    # Stacked ad-constraint rows: coordinate m of [x, x_j] for every j, m.
    rows = []
    for j in range(g.dim):
        images = [g.bracket(g.basis_vector(i), g.basis_vector(j)) for i in range(g.dim)]
        for m in range(g.dim):
            rows.append([images[i][m] for i in range(g.dim)])
    return Subspace.from_vectors(g.dim, nullspace(rows, g.dim))


class TestConstruction:
    def test_rejects_bad_keys(self):
        with pytest.raises(ValueError):
            LieAlgebra(3, None, {(1, 0): {2: 1}})
        with pytest.raises(ValueError):
            LieAlgebra(3, None, {(0, 0): {2: 1}})
        with pytest.raises(ValueError):
            LieAlgebra(3, None, {(0, 3): {2: 1}})
        with pytest.raises(ValueError):
            LieAlgebra(3, None, {(0, 1): {3: 1}})
        with pytest.raises(ValueError):
            LieAlgebra(-1)

    def test_rejects_bad_labels(self):
        with pytest.raises(ValueError):
            LieAlgebra(2, ("a",))
        with pytest.raises(ValueError):
            LieAlgebra(2, ("a", "a"))

    def test_drops_zero_coefficients(self):
        g = LieAlgebra(3, None, {(0, 1): {2: 0}, (0, 2): {1: Fraction(0)}})
        assert g.brackets == {}

    def test_default_labels(self):
        assert heisenberg().labels == ("x1", "x2", "x3")

    def test_antisymmetry_of_lookup(self):
        g = heisenberg()
        assert g.structure_coeffs(0, 1) == {2: Fraction(1)}
        assert g.structure_coeffs(1, 0) == {2: Fraction(-1)}
        assert g.structure_coeffs(1, 1) == {}

    def test_bracket_of_vectors(self):
        g = heisenberg()
        x = [Fraction(2), Fraction(1), Fraction(0)]
        y = [Fraction(1), Fraction(3), Fraction(5)]
        # [2x1 + x2, x1 + 3x2] = (2*3 - 1*1) [x1, x2]
        assert g.bracket(x, y) == [Fraction(0), Fraction(0), Fraction(5)]
        assert g.bracket(y, x) == [Fraction(0), Fraction(0), Fraction(-5)]
        with pytest.raises(ValueError):
            g.bracket([1, 2], y)

    def test_ad_vector(self):
        g = two_step_free()
        assert g.ad_vector(0, {1: Fraction(2)}) == {2: Fraction(2)}
        assert g.ad_vector(2, {0: Fraction(1), 1: Fraction(1)}) == {
            3: Fraction(-1),
            4: Fraction(-1),
        }


class TestJacobi:
    def test_valid_algebras(self):
        assert check_jacobi(heisenberg()) is None
        assert check_jacobi(two_step_free()) is None
        assert check_jacobi(LieAlgebra(4)) is None

    def test_detects_violation(self):
        bad = LieAlgebra(3, None, {(0, 1): {2: 1}, (0, 2): {1: 1}, (1, 2): {1: 1}})
        violation = check_jacobi(bad)
        assert violation is not None
        triple, residual = violation
        assert triple == (0, 1, 2)
        assert residual == [Fraction(0), Fraction(0), Fraction(1)]


class TestSubspace:
    def test_canonical_basis(self):
        a = Subspace.from_vectors(3, [[2, 4, 0], [0, 0, 3]])
        b = Subspace.from_vectors(3, [[1, 2, 1], [0, 0, -1]])
        assert a == b
        assert a.basis == (
            (Fraction(1), Fraction(2), Fraction(0)),
            (Fraction(0), Fraction(0), Fraction(1)),
        )

    def test_membership_and_sum(self):
        s = Subspace.from_vectors(3, [[1, 1, 0]])
        assert s.contains_vector([2, 2, 0])
        assert not s.contains_vector([1, 0, 0])
        t = s.sum_with(Subspace.from_vectors(3, [[0, 0, 1]]))
        assert t.dim == 2
        assert t.contains(s)
        assert not s.contains(t)
        assert Subspace.full(3).contains(t)
        assert t.contains(Subspace.zero(3))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            Subspace.from_vectors(3, [[1, 2]])


class TestCenter:
    def test_heisenberg(self):
        z = center(heisenberg())
        assert z.dim == 1
        assert z.contains_vector([0, 0, 1])

    def test_matches_constraint_oracle(self):
        abelian_plus = LieAlgebra(4, None, {(0, 1): {2: 1}})  # h3 + line
        for g in (heisenberg(), two_step_free(), LieAlgebra(3), abelian_plus):
            assert center(g) == center_oracle(g)

    def test_centralizer(self):
        g = heisenberg()
        c = centralizer(g, Subspace.from_vectors(3, [[1, 0, 0]]))
        assert c == Subspace.from_vectors(3, [[1, 0, 0], [0, 0, 1]])
        assert centralizer(g, Subspace.zero(3)) == Subspace.full(3)

    def test_zero_algebra(self):
        assert center(LieAlgebra(0)).dim == 0


class TestSeries:
    def test_lower_central_series(self):
        dims = [s.dim for s in lower_central_series(two_step_free())]
        assert dims == [5, 3, 2, 0]
        assert nilpotency_class(two_step_free()) == 3
        assert nilpotency_class(heisenberg()) == 2
        assert nilpotency_class(LieAlgebra(2)) == 1
        assert nilpotency_class(LieAlgebra(0)) == 0

    def test_not_nilpotent(self):
        # [e0, e1] = e1 is solvable but not nilpotent.
        g = LieAlgebra(2, None, {(0, 1): {1: 1}})
        assert check_jacobi(g) is None
        with pytest.raises(ValueError):
            nilpotency_class(g)

    def test_derived_pair(self):
        d1, d2 = derived_subalgebra_pair(two_step_free())
        assert (d1.dim, d2.dim) == (3, 0)

    def test_bracket_span(self):
        g = two_step_free()
        full = Subspace.full(5)
        d1 = bracket_span(g, full, full)
        assert d1 == Subspace.from_vectors(5, [[0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])


class TestSubalgebras:
    def test_abelian_witness(self):
        g = two_step_free()
        assert abelian_witness(g, Subspace.from_vectors(5, [[0, 0, 1, 0, 0], [0, 0, 0, 0, 1]])) is None
        w = abelian_witness(g, Subspace.full(5))
        assert w is not None
        u, v = w
        assert any(g.bracket(u, v))
        assert is_abelian_subalgebra(g, Subspace.zero(5))

    def test_ideal_closure(self):
        g = heisenberg()
        closed = ideal_closure(g, Subspace.from_vectors(3, [[1, 0, 0]]))
        assert closed == Subspace.from_vectors(3, [[1, 0, 0], [0, 0, 1]])

    def test_subalgebra_generated(self):
        g = two_step_free()
        s = subalgebra_generated(g, [g.basis_vector(0), g.basis_vector(1)])
        assert s.dim == 5
        t = subalgebra_generated(g, [g.basis_vector(0), g.basis_vector(2)])
        assert t == Subspace.from_vectors(5, [[1, 0, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0]])


class TestQuotient:
    def test_heisenberg_mod_center(self):
        g = heisenberg()
        q, proj = quotient(g, center(g))
        assert q.dim == 2
        assert q.brackets == {}
        assert q.labels == ("x1", "x2")
        assert proj == [[Fraction(1), Fraction(0), Fraction(0)], [Fraction(0), Fraction(1), Fraction(0)]]

    def test_projection_is_a_homomorphism(self):
        g = two_step_free()
        ideal = Subspace.from_vectors(5, [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
        q, proj = quotient(g, ideal)
        assert q.dim == 3
        assert q.brackets == {(0, 1): {2: Fraction(1)}}
        for i in range(5):
            for j in range(i + 1, 5):
                w = g.bracket(g.basis_vector(i), g.basis_vector(j))
                down = [sum(proj[r][k] * w[k] for k in range(5)) for r in range(3)]
                xi = [proj[r][i] for r in range(3)]
                xj = [proj[r][j] for r in range(3)]
                assert q.bracket(xi, xj) == down

    def test_complement_is_lexicographically_first(self):
        g = LieAlgebra(3)
        q, _ = quotient(g, Subspace.from_vectors(3, [[0, 1, 0]]))
        assert q.labels == ("x1", "x3")

    def test_not_an_ideal(self):
        with pytest.raises(NotAnIdealError) as exc:
            quotient(heisenberg(), Subspace.from_vectors(3, [[1, 0, 0]]))
        assert exc.value.basis_index == 1
