"""Exact linear algebra: frozen examples plus brute-force oracle sweeps."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from preordgrp.errors import DimensionError, ResourceLimitError
from preordgrp.intmat import (
    IntMatrix,
    determinant,
    hermite_normal_form,
    hilbert_basis,
    hnf_reduced,
    lattice_membership,
    left_kernel,
    monoid_zero_solutions,
    nonneg_feasible,
    row_times_matrix,
    smith_normal_form,
    solve_integer,
    unimodular_inverse,
    vec_add,
    xgcd,
)


def brute_minimal_solutions(system: IntMatrix, bound: int):
    """Oracle: all componentwise-minimal nonzero solutions within a box."""
    n = system.cols
    sols = []
    for x in itertools.product(range(bound + 1), repeat=n):
        if all(v == 0 for v in x):
            continue
        if all(
            sum(system.entry(i, j) * x[j] for j in range(n)) == 0
            for i in range(system.rows)
        ):
            sols.append(x)
    return sorted(
        s
        for s in sols
        if not any(t != s and all(a <= b for a, b in zip(t, s)) for t in sols)
    )


def brute_feasible(gens: IntMatrix, modulus: IntMatrix, x, coeff_sum=12, t_bound=12):
    """Oracle: bounded enumeration of x = a*gens + t*modulus with a >= 0."""
    k, r, n = gens.rows, modulus.rows, gens.cols
    for a in itertools.product(range(coeff_sum + 1), repeat=k):
        if sum(a) > coeff_sum:
            continue
        base = tuple(sum(a[i] * gens.entry(i, j) for i in range(k)) for j in range(n))
        for t in itertools.product(range(-t_bound, t_bound + 1), repeat=r):
            got = tuple(
                base[j] + sum(t[m] * modulus.entry(m, j) for m in range(r))
                for j in range(n)
            )
            if got == x:
                return a, t
    return None


def assert_row_echelon(h: IntMatrix):
    prev = -1
    seen_zero = False
    for i in range(h.rows):
        row = h.row(i)
        lead = next((j for j, e in enumerate(row) if e), None)
        if lead is None:
            seen_zero = True
            continue
        assert not seen_zero, "nonzero row under a zero row"
        assert lead > prev
        prev = lead
        assert row[lead] > 0
        for k in range(i):
            assert 0 <= h.row(k)[lead] < row[lead]


def random_matrix(rng, max_rows=5, max_cols=5, lo=-9, hi=9):
    r = rng.randint(0, max_rows)
    c = rng.randint(1, max_cols)
    return IntMatrix.from_rows(
        [[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)], cols=c
    )


class TestIntMatrix:
    def test_shape_validation(self):
        with pytest.raises(DimensionError):
            IntMatrix(2, 2, (1, 2, 3))
        with pytest.raises(DimensionError):
            IntMatrix.from_rows([[1, 2], [3]])
        with pytest.raises(DimensionError):
            IntMatrix.from_rows([])

    def test_basic_ops(self):
        m = IntMatrix.from_rows([[1, 2], [3, 4]])
        assert m.row(1) == (3, 4)
        assert m.col(0) == (1, 3)
        assert m.transpose().to_rows() == ((1, 3), (2, 4))
        assert m.mul(IntMatrix.identity(2)) == m
        assert m.stack(m).rows == 4
        assert row_times_matrix((1, 1), m) == (4, 6)

    def test_mul_shape_mismatch(self):
        with pytest.raises(DimensionError):
            IntMatrix.identity(2).mul(IntMatrix.identity(3))


class TestXgcd:
    @given(st.integers(-10**9, 10**9), st.integers(-10**9, 10**9))
    def test_bezout(self, a, b):
        g, s, t = xgcd(a, b)
        assert s * a + t * b == g
        assert g >= 0
        if a or b:
            assert a % g == 0 and b % g == 0


class TestHermite:
    def test_example(self):
        m = IntMatrix.from_rows([[2, 4], [1, 1]])
        h, u = hermite_normal_form(m)
        assert h.to_rows() == ((1, 1), (0, 2))
        assert u.mul(m) == h
        assert abs(determinant(u)) == 1

    def test_zero_and_empty(self):
        h, u = hermite_normal_form(IntMatrix.zeros(2, 3))
        assert h == IntMatrix.zeros(2, 3)
        h, u = hermite_normal_form(IntMatrix.zeros(0, 3))
        assert h.rows == 0 and u.rows == 0

    def test_random_sweep(self):
        rng = random.Random(20260814)
        for _ in range(200):
            m = random_matrix(rng)
            h, u = hermite_normal_form(m)
            assert u.mul(m) == h
            assert abs(determinant(u)) == 1
            assert_row_echelon(h)

    def test_hnf_reduced_drops_zero_rows(self):
        m = IntMatrix.from_rows([[0, 0], [2, 4], [1, 2]])
        r = hnf_reduced(m)
        assert r.to_rows() == ((1, 2),)


class TestSmith:
    def test_example(self):
        m = IntMatrix.from_rows([[2, 4], [1, 1]])
        d, u, v = smith_normal_form(m)
        assert d.to_rows() == ((1, 0), (0, 2))
        assert u.mul(m).mul(v) == d

    def test_random_sweep(self):
        rng = random.Random(777)
        for _ in range(200):
            m = random_matrix(rng)
            d, u, v = smith_normal_form(m)
            assert u.mul(m).mul(v) == d
            assert abs(determinant(u)) == 1
            assert abs(determinant(v)) == 1
            for i in range(d.rows):
                for j in range(d.cols):
                    if i != j:
                        assert d.entry(i, j) == 0
            diag = [d.entry(i, i) for i in range(min(d.rows, d.cols))]
            assert all(x >= 0 for x in diag)
            for a, b in zip(diag, diag[1:]):
                if a:
                    assert b % a == 0
                else:
                    assert b == 0

    def test_termination_regression(self):
        # This matrix cycled forever before the divide-first elimination rule.
        m = IntMatrix.from_rows([(1, -4, 3, 1, -9), (-8, -8, 5, -7, 3)])
        d, u, v = smith_normal_form(m)
        assert u.mul(m).mul(v) == d


class TestSolve:
    def test_examples(self):
        a = IntMatrix.from_rows([[2, 0], [0, 3]])
        assert solve_integer(a, (4, 6)) == (2, 2)
        assert solve_integer(IntMatrix.from_rows([[2]]), (3,)) is None

    def test_round_trip(self):
        rng = random.Random(31337)
        for _ in range(200):
            m = random_matrix(rng, max_rows=4, max_cols=4)
            x = tuple(rng.randint(-5, 5) for _ in range(m.rows))
            b = row_times_matrix(x, m)
            y = solve_integer(m, b)
            assert y is not None
            assert row_times_matrix(y, m) == b

    def test_solutions_certified(self):
        rng = random.Random(99)
        for _ in range(200):
            m = random_matrix(rng, max_rows=4, max_cols=4)
            b = tuple(rng.randint(-9, 9) for _ in range(m.cols))
            y = solve_integer(m, b)
            if y is not None:
                assert row_times_matrix(y, m) == b

    def test_lattice_membership(self):
        gens = IntMatrix.from_rows([[2, 0], [0, 2]])
        assert lattice_membership(gens, (4, -2))
        assert not lattice_membership(gens, (1, 0))
        assert lattice_membership(gens, (0, 0))


class TestLeftKernel:
    def test_example(self):
        m = IntMatrix.from_rows([[2, 4], [1, 2], [0, 0]])
        k = left_kernel(m)
        assert k.rows == 2
        for i in range(k.rows):
            assert row_times_matrix(k.row(i), m) == (0, 0)

    def test_spans_kernel(self):
        rng = random.Random(4242)
        for _ in range(100):
            m = random_matrix(rng, max_rows=4, max_cols=3, lo=-4, hi=4)
            k = left_kernel(m)
            for i in range(k.rows):
                assert all(v == 0 for v in row_times_matrix(k.row(i), m))
            # any random kernel element must be an integer combination of k
            for _ in range(5):
                x = tuple(rng.randint(-3, 3) for _ in range(m.rows))
                if all(v == 0 for v in row_times_matrix(x, m)):
                    assert solve_integer(k, x) is not None


class TestUnimodularInverse:
    def test_round_trip(self):
        rng = random.Random(5)
        for _ in range(100):
            m = random_matrix(rng, max_rows=4, max_cols=4)
            _, u = hermite_normal_form(m)
            ui = unimodular_inverse(u)
            assert u.mul(ui) == IntMatrix.identity(u.rows)
            assert ui.mul(u) == IntMatrix.identity(u.rows)

    def test_rejects_singular(self):
        with pytest.raises(DimensionError):
            unimodular_inverse(IntMatrix.from_rows([[2, 0], [0, 1]]))


class TestHilbertBasis:
    def test_frozen_examples(self):
        assert hilbert_basis(IntMatrix.from_rows([[1, -1]])) == ((1, 1),)
        assert hilbert_basis(IntMatrix.from_rows([[1]])) == ()
        assert hilbert_basis(IntMatrix.from_rows([[2, 3, -5]])) == (
            (0, 5, 3),
            (1, 1, 1),
            (5, 0, 2),
        )

    def test_no_equations(self):
        # With no constraints every unit vector is minimal.
        assert hilbert_basis(IntMatrix.zeros(0, 3)) == (
            (0, 0, 1),
            (0, 1, 0),
            (1, 0, 0),
        )

    def test_against_brute_force(self):
        rng = random.Random(60046)
        for _ in range(60):
            r = rng.randint(1, 2)
            c = rng.randint(2, 3)
            m = IntMatrix.from_rows(
                [[rng.randint(-5, 5) for _ in range(c)] for _ in range(r)], cols=c
            )
            basis = hilbert_basis(m)
            brute = brute_minimal_solutions(m, 6)
            assert set(brute) <= set(basis)
            inside_box = [b for b in basis if all(v <= 6 for v in b)]
            assert set(inside_box) <= set(brute)
            # every brute-force solution decomposes over the basis
            for x in brute:
                assert _decomposes(x, basis)

    def test_solutions_are_solutions(self):
        rng = random.Random(123)
        for _ in range(40):
            m = random_matrix(rng, max_rows=2, max_cols=4, lo=-3, hi=3)
            for b in hilbert_basis(m):
                assert all(v == 0 for v in row_times_matrix(b, m.transpose()))

    def test_state_cap(self):
        with pytest.raises(ResourceLimitError):
            hilbert_basis(IntMatrix.from_rows([[1, -1], [-1, 1]]), state_cap=0)


def _decomposes(x, basis):
    if all(v == 0 for v in x):
        return True
    for b in basis:
        if all(bv <= xv for bv, xv in zip(b, x)):
            if _decomposes(tuple(xv - bv for xv, bv in zip(x, b)), basis):
                return True
    return False


class TestNonnegFeasible:
    def test_examples(self):
        two_three = IntMatrix.from_rows([[2], [3]])
        none = IntMatrix.zeros(0, 1)
        a, t = nonneg_feasible(two_three, none, (7,))
        assert row_times_matrix(a, two_three) == (7,)
        assert nonneg_feasible(IntMatrix.from_rows([[2]]), none, (1,)) is None
        a, t = nonneg_feasible(
            IntMatrix.from_rows([[2]]), IntMatrix.from_rows([[3]]), (1,)
        )
        assert a[0] * 2 + t[0] * 3 == 1

    def test_zero_target(self):
        a, t = nonneg_feasible(IntMatrix.from_rows([[5]]), IntMatrix.zeros(0, 1), (0,))
        assert a == (0,) and t == ()

    def test_against_brute_force(self):
        rng = random.Random(808)
        for _ in range(60):
            k = rng.randint(1, 4)
            n = rng.randint(1, 2)
            r = rng.randint(0, 1)
            gens = IntMatrix.from_rows(
                [[rng.randint(-4, 4) for _ in range(n)] for _ in range(k)], cols=n
            )
            modulus = (
                IntMatrix.from_rows(
                    [[rng.randint(-4, 4) for _ in range(n)] for _ in range(r)], cols=n
                )
                if r
                else IntMatrix.zeros(0, n)
            )
            x = tuple(rng.randint(-6, 6) for _ in range(n))
            mine = brute = None
            mine = nonneg_feasible(gens, modulus, x)
            brute = brute_feasible(gens, modulus, x)
            if brute is not None:
                assert mine is not None
            if mine is not None:
                a, t = mine
                got = row_times_matrix(a, gens)
                if r:
                    got = vec_add(got, row_times_matrix(t, modulus))
                assert got == x


class TestMonoidZeroSolutions:
    def test_examples(self):
        gens = IntMatrix.from_rows([[1], [-1], [2]])
        assert monoid_zero_solutions(gens, IntMatrix.zeros(0, 1)) == (
            (0, 2, 1),
            (1, 1, 0),
        )
        assert monoid_zero_solutions(
            IntMatrix.from_rows([[2]]), IntMatrix.from_rows([[3]])
        ) == ((3,),)

    def test_projections_solve(self):
        rng = random.Random(2024)
        for _ in range(40):
            k = rng.randint(1, 3)
            n = rng.randint(1, 2)
            gens = IntMatrix.from_rows(
                [[rng.randint(-3, 3) for _ in range(n)] for _ in range(k)], cols=n
            )
            lat = IntMatrix.from_rows([[rng.randint(-3, 3) for _ in range(n)]], cols=n)
            for c in monoid_zero_solutions(gens, lat):
                img = row_times_matrix(c, gens)
                assert solve_integer(lat, img) is not None


class TestDeterminant:
    @settings(max_examples=60)
    @given(
        st.lists(
            st.lists(st.integers(-6, 6), min_size=3, max_size=3),
            min_size=3,
            max_size=3,
        )
    )
    def test_matches_cofactor_expansion(self, rows):
        m = IntMatrix.from_rows(rows)
        a = rows
        cofactor = (
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        )
        assert determinant(m) == cofactor
