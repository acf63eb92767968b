import random
from functools import reduce
from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from oracles import predicted, quotient_size
from strategies import small_matrices

from quandle_cocycles.errors import UnsupportedModulusError
from quandle_cocycles.linalg import (
    ModulePresentation,
    cokernel,
    kernel_mod_p,
    mat_inverse_mod,
    mat_inverse_unimodular,
    mat_mod,
    mat_mul,
    identity,
    smith_decomposition,
    smith_normal_form,
    solve_affine,
)


def random_matrix(rng, r, c, bound=6):
    return [[rng.randint(-bound, bound) for _ in range(c)] for _ in range(r)]


def test_snf_examples():
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == (2, 6, 12)
    assert smith_normal_form([[0, 0], [0, 0]]) == (0, 0)
    assert smith_normal_form([[6]]) == (6,)
    assert smith_normal_form([]) == ()


def test_cokernel_examples():
    assert cokernel([[2, 0], [0, 3]]) == ModulePresentation((6,), 0)
    assert cokernel([[0, 0], [0, 0]]) == ModulePresentation((), 2)
    assert cokernel([[3]], q=9) == ModulePresentation((3,), 0)
    assert cokernel([[1]], q=3) == ModulePresentation((), 0)
    assert cokernel([[0]], q=3) == ModulePresentation((3,), 0)
    assert str(ModulePresentation((3, 15), 2)) == "Z_3 + Z_15 + Z^2"


@given(small_matrices())
def test_snf_matches_sympy(A):
    ours = smith_normal_form(A)
    theirs = sympy_snf(Matrix(A), domain=ZZ)
    d = [abs(theirs[i, i]) for i in range(min(theirs.shape))]
    assert sorted(ours, key=lambda v: (v == 0, v)) == sorted(d, key=lambda v: (v == 0, v))


@given(small_matrices())
def test_snf_divisibility_chain(A):
    d = smith_normal_form(A)
    nz = [v for v in d if v]
    assert all(v > 0 for v in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert all(v == 0 for v in d[len(nz):])


@given(small_matrices())
def test_smith_decomposition_factors(A):
    D, U, V = smith_decomposition(A)
    assert mat_mul(mat_mul(U, A), V) == D
    det = lambda M: Matrix(M).det()
    assert abs(det(U)) == 1 and abs(det(V)) == 1


def test_cokernel_against_enumeration_over_z():
    rng = random.Random(20261016)
    for _ in range(100):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        A = random_matrix(rng, r, c)
        mp = cokernel(A)
        for m in (2, 3, 4, 5, 6, 7, 8, 9):
            if m**r > 7000:
                continue
            assert quotient_size(A, m) == predicted(mp, m), (A, m, mp)


@pytest.mark.parametrize("q", [2, 3, 4, 6, 9])
def test_cokernel_against_enumeration_mod_q(q):
    rng = random.Random(q)
    for _ in range(40):
        r, c = rng.randint(1, 3), rng.randint(1, 3)
        A = random_matrix(rng, r, c)
        mp = cokernel(A, q)
        assert mp.free_rank == 0
        assert quotient_size(A, q) == reduce(lambda a, t: a * t, mp.torsion, 1)
        for m in range(2, q + 1):
            g = gcd(m, q)
            assert quotient_size([[v % q for v in row] for row in A], g) == predicted(mp, m)


def test_unimodular_inverse():
    A = [[2, 1], [7, 4]]
    assert mat_mul(A, mat_inverse_unimodular(A)) == identity(2)


@given(st.sampled_from([2, 3, 5, 7, 9]), small_matrices(3, 3, 8))
def test_inverse_mod(q, A):
    if len(A) != len(A[0]):
        return
    det = int(Matrix(A).det())
    if gcd(det, q) != 1:
        with pytest.raises(Exception):
            mat_inverse_mod(A, q)
        return
    assert mat_mod(mat_mul(A, mat_inverse_mod(A, q)), q) == identity(len(A))


@settings(max_examples=60)
@given(st.sampled_from([2, 3, 4, 6]), small_matrices(3, 3, 5), st.data())
def test_solve_affine_mod_q(q, A, data):
    b = data.draw(st.lists(st.integers(0, q - 1), min_size=len(A), max_size=len(A)))
    x = solve_affine(A, b, q)
    solvable = any(
        all(sum(a * v for a, v in zip(row, xs)) % q == bi % q for row, bi in zip(A, b))
        for xs in product(range(q), repeat=len(A[0]))
    )
    assert (x is not None) == solvable
    if x is not None:
        assert all(sum(a * v for a, v in zip(row, x)) % q == bi % q for row, bi in zip(A, b))


@given(small_matrices(4, 4, 4), st.data())
def test_solve_affine_over_z(A, data):
    xs = data.draw(st.lists(st.integers(-3, 3), min_size=len(A[0]), max_size=len(A[0])))
    b = [sum(a * v for a, v in zip(row, xs)) for row in A]
    x = solve_affine(A, b)
    assert x is not None
    assert [sum(a * v for a, v in zip(row, x)) for row in A] == b


@given(st.sampled_from([2, 3, 5]), small_matrices(3, 4, 4))
def test_kernel_mod_p(p, A):
    basis = kernel_mod_p(A, p)
    n = len(A[0])
    for v in basis:
        assert all(sum(a * x for a, x in zip(row, v)) % p == 0 for row in A)
    size = sum(1 for xs in product(range(p), repeat=n) if all(sum(a * x for a, x in zip(row, xs)) % p == 0 for row in A))
    assert size == p ** len(basis)


def test_kernel_needs_prime():
    with pytest.raises(UnsupportedModulusError):
        kernel_mod_p([[1]], 4)
    with pytest.raises(UnsupportedModulusError):
        cokernel([[1]], -1)
