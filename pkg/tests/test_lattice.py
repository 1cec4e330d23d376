"""Integer linear algebra: Smith form, kernels, primitivity, image order."""

import math

import pytest

from fibercomm.errors import ZeroClass
from fibercomm.lattice import (
    CohomologyClass,
    IntMatrix,
    image_order_mod_n,
    is_primitive,
    kernel_basis,
    smith_normal_form,
)
from helpers import random_matrix_rows, rng, solve_unique, subgroup_mod_n
from fractions import Fraction


class TestCohomologyClass:
    def test_basics(self):
        w = CohomologyClass.of([3, -2])
        assert w.coords == (3, -2)
        assert w.dot((1, 1)) == 1
        assert w.negated().coords == (-3, 2)
        assert w.scaled(2).coords == (6, -4)
        assert not w.is_zero()
        assert CohomologyClass.of([0, 0]).is_zero()

    def test_ordering_is_lexicographic(self):
        a = CohomologyClass.of([0, 5])
        b = CohomologyClass.of([1, -9])
        assert a < b
        assert sorted([b, a]) == [a, b]

    def test_rejects_bad_coordinates(self):
        with pytest.raises(ValueError):
            CohomologyClass.of([])
        with pytest.raises(ValueError):
            CohomologyClass.of([1.5, 2])
        with pytest.raises(ValueError):
            CohomologyClass.of([True, 1])


class TestIntMatrix:
    def test_construction_and_access(self):
        m = IntMatrix.from_rows([[1, 2], [3, 4]])
        assert m.at(1, 0) == 3
        assert m.row(0) == (1, 2)
        assert m.to_rows() == [[1, 2], [3, 4]]
        assert m.transpose().to_rows() == [[1, 3], [2, 4]]

    def test_matmul_and_apply(self):
        a = IntMatrix.from_rows([[1, 2], [0, 1]])
        b = IntMatrix.from_rows([[1, 0], [3, 1]])
        assert (a @ b).to_rows() == [[7, 2], [3, 1]]
        assert a.apply((5, 7)) == (19, 7)

    def test_det(self):
        assert IntMatrix.from_rows([[3]]).det() == 3
        assert IntMatrix.from_rows([[1, 2], [3, 4]]).det() == -2
        assert IntMatrix.from_rows([[2, 0, 1], [1, 1, 0], [0, 3, 1]]).det() == 5
        assert IntMatrix.identity(4).det() == 1

    def test_det_matches_cofactor_expansion_on_random(self):
        def cofactor_det(rows):
            n = len(rows)
            if n == 1:
                return rows[0][0]
            total = 0
            for j in range(n):
                minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
                total += (-1) ** j * rows[0][j] * cofactor_det(minor)
            return total

        r = rng(11)
        for _ in range(60):
            n = r.randint(1, 4)
            rows = random_matrix_rows(r, n, n, 6)
            assert IntMatrix.from_rows(rows).det() == cofactor_det(rows)

    def test_unimodular(self):
        assert IntMatrix.from_rows([[0, 1], [1, 0]]).is_unimodular()
        assert IntMatrix.from_rows([[1, 1], [0, 1]]).is_unimodular()
        assert not IntMatrix.from_rows([[2, 0], [0, 1]]).is_unimodular()
        assert not IntMatrix.from_rows([[1, 2, 3]]).is_unimodular()

    def test_rejects_ragged_rows(self):
        with pytest.raises(ValueError):
            IntMatrix.from_rows([[1, 2], [3]])


def _assert_valid_smith(rows):
    a = IntMatrix.from_rows(rows)
    dec = smith_normal_form(a)
    assert dec.left.is_unimodular()
    assert dec.right.is_unimodular()
    product = dec.left @ dec.diag @ dec.right
    assert product.to_rows() == a.to_rows()
    diag = dec.diagonal()
    for i in range(a.rows):
        for j in range(a.cols):
            if i != j:
                assert dec.diag.at(i, j) == 0
    assert all(d >= 0 for d in diag)
    for i in range(len(diag) - 1):
        if diag[i + 1] != 0:
            assert diag[i] != 0 or diag[i + 1] == 0
        if diag[i] != 0 and diag[i + 1] != 0:
            assert diag[i + 1] % diag[i] == 0
    # zeros only at the tail of the nonzero chain
    nz = [d for d in diag if d != 0]
    assert diag[: len(nz)] == nz


class TestSmithNormalForm:
    def test_diagonal_example(self):
        dec = smith_normal_form(IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, 4, 16]]))
        assert dec.diagonal() == [2, 2, 156]

    def test_non_square(self):
        dec = smith_normal_form(IntMatrix.from_rows([[2, 4, 6]]))
        assert dec.diagonal() == [2]
        _assert_valid_smith([[2, 4, 6]])

    def test_zero_matrix(self):
        dec = smith_normal_form(IntMatrix.from_rows([[0, 0], [0, 0]]))
        assert dec.diagonal() == [0, 0]

    def test_random_matrices_decompose_exactly(self):
        r = rng(20260818)
        for _ in range(200):
            n_rows = r.randint(1, 4)
            n_cols = r.randint(1, 4)
            _assert_valid_smith(random_matrix_rows(r, n_rows, n_cols))

    def test_invariant_factors_match_gcd_of_minors(self):
        # d_1 * ... * d_k equals the gcd of all k x k minors
        import itertools

        def minor_gcd(rows, k):
            n, m = len(rows), len(rows[0])
            g = 0
            for ri in itertools.combinations(range(n), k):
                for ci in itertools.combinations(range(m), k):
                    sub = [[rows[i][j] for j in ci] for i in ri]
                    g = math.gcd(g, abs(IntMatrix.from_rows(sub).det()))
            return g

        r = rng(7)
        for _ in range(40):
            n = r.randint(1, 3)
            m = r.randint(1, 3)
            rows = random_matrix_rows(r, n, m, 7)
            diag = smith_normal_form(IntMatrix.from_rows(rows)).diagonal()
            prod = 1
            for k, d in enumerate(diag, start=1):
                prod *= d
                assert prod == minor_gcd(rows, k)


class TestKernelBasis:
    def test_rank_one_functional(self):
        ker = kernel_basis(IntMatrix.from_rows([[1, 2, 3]]))
        assert len(ker) == 2
        for v in ker:
            assert sum(a * b for a, b in zip((1, 2, 3), v)) == 0

    def test_full_rank_square_has_trivial_kernel(self):
        assert kernel_basis(IntMatrix.from_rows([[2, 1], [1, 1]])) == []

    def test_zero_matrix_kernel_is_identity_lattice(self):
        ker = kernel_basis(IntMatrix.from_rows([[0, 0, 0]]))
        assert sorted(ker) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]

    def test_kernel_is_saturated_on_random(self):
        # every integer solution must be an integer combination of the basis
        r = rng(99)
        for _ in range(120):
            n_rows = r.randint(1, 3)
            n_cols = r.randint(1, 4)
            rows = random_matrix_rows(r, n_rows, n_cols, 6)
            a = IntMatrix.from_rows(rows)
            ker = kernel_basis(a)
            for v in ker:
                assert a.apply(v) == tuple(0 for _ in range(n_rows))
            # check saturation against integer vectors found by box scan
            import itertools

            for cand in itertools.product(range(-2, 3), repeat=n_cols):
                if a.apply(cand) != tuple(0 for _ in range(n_rows)):
                    continue
                if not ker:
                    assert all(x == 0 for x in cand)
                    continue
                cols = [[Fraction(k[i]) for k in ker] for i in range(n_cols)]
                sol = solve_unique(cols, [Fraction(x) for x in cand])
                assert sol is not None, f"{cand} outside kernel lattice of {rows}"
                assert all(x.denominator == 1 for x in sol), f"{cand} not an integer combination"

    def test_basis_vectors_are_independent(self):
        r = rng(5)
        for _ in range(40):
            rows = random_matrix_rows(r, r.randint(1, 3), 4, 5)
            ker = kernel_basis(IntMatrix.from_rows(rows))
            if not ker:
                continue
            mat = IntMatrix.from_rows([list(v) for v in ker])
            dec = smith_normal_form(mat)
            assert all(d != 0 for d in dec.diagonal()[: len(ker)])


class TestIsPrimitive:
    def test_examples(self):
        assert is_primitive(CohomologyClass.of([1, 0]))
        assert is_primitive(CohomologyClass.of([2, 3]))
        assert is_primitive(CohomologyClass.of([-3, 5, 7]))
        assert not is_primitive(CohomologyClass.of([2, 4]))
        assert not is_primitive(CohomologyClass.of([-2, -2]))

    def test_zero_class_rejected(self):
        with pytest.raises(ZeroClass):
            is_primitive(CohomologyClass.of([0, 0]))


class TestImageOrderModN:
    def test_documented_example(self):
        # functional values 6 and 10 on the generators, modulus 8:
        # image subgroup is generated by gcd(8, gcd(6, 10)) = 2, order 4
        d, order = image_order_mod_n([(1, 0), (0, 1)], CohomologyClass.of([6, 10]), 8)
        assert (d, order) == (2, 4)

    def test_zero_image(self):
        d, order = image_order_mod_n([(0, 0)], CohomologyClass.of([3, 5]), 6)
        assert (d, order) == (6, 1)

    def test_empty_generators(self):
        d, order = image_order_mod_n([], CohomologyClass.of([3, 5]), 6)
        assert (d, order) == (6, 1)

    def test_modulus_one(self):
        assert image_order_mod_n([(1, 1)], CohomologyClass.of([2, 3]), 1) == (1, 1)

    def test_invalid_modulus(self):
        with pytest.raises(ValueError):
            image_order_mod_n([(1, 0)], CohomologyClass.of([1, 1]), 0)

    def test_matches_subgroup_enumeration(self):
        r = rng(12345)
        for _ in range(150):
            b = r.randint(1, 4)
            n = r.randint(1, 30)
            k = r.randint(0, 3)
            gens = [tuple(r.randint(-9, 9) for _ in range(b)) for _ in range(k)]
            w = CohomologyClass.of([r.randint(-9, 9) for _ in range(b)] or [1])
            d, order = image_order_mod_n(gens, w, n)
            sub = subgroup_mod_n([w.dot(g) for g in gens], n)
            assert order == len(sub)
            assert d * order == n
            assert sub == {(d * i) % n for i in range(order)}
