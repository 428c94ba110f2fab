from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import classes, symplectic_matrices
from torelli_bcj.gf2 import F2Matrix
from torelli_bcj.symplectic import (
    E,
    GLMatrix,
    HClass,
    SpMatrix,
    a,
    b,
    gl_elementary,
    gl_embed,
    handle_swap,
    is_symplectic,
    lower_unipotent,
    omega,
    permutation_matrix,
    reduce_mod2,
    transvection_power,
)


def omega_by_basis(x: HClass, y: HClass) -> int:
    """Bilinear extension of the basis pairings, written out by hand."""
    g = x.genus
    total = 0
    for i in range(g):
        # omega(a_i, b_i) = -1, omega(b_i, a_i) = 1
        total += x.coords[i] * y.coords[g + i] * -1
        total += x.coords[g + i] * y.coords[i] * 1
    return total


def test_omega_examples():
    assert omega(b(3, 1), a(3, 1)) == 1
    assert omega(a(3, 1), b(3, 1)) == -1
    assert omega(a(3, 1), a(3, 2)) == 0
    with pytest.raises(ValueError):
        omega(a(2, 1), a(3, 1))


@given(classes(3), classes(3))
def test_omega_matches_basis_expansion(x, y):
    assert omega(x, y) == omega_by_basis(x, y)
    assert omega(x, y) == -omega(y, x)
    assert omega(x, x) == 0


def test_transvection_examples():
    g = 3
    assert transvection_power(a(g, 1) + b(g, 2), 0).is_identity()
    M = transvection_power(b(g, 2), -1)
    assert M == lower_unipotent(E(g, 2, 2))
    T = transvection_power(a(g, 1), 1)
    assert T.apply(b(g, 1)) == b(g, 1) + a(g, 1)
    for x in (a(g, 1), a(g, 2), a(g, 3), b(g, 2), b(g, 3)):
        assert T.apply(x) == x


@given(classes(3, -1, 1), st.integers(-3, 3), classes(3))
def test_transvection_formula(x, k, y):
    M = transvection_power(x, k)
    assert M.apply(y) == y + (k * omega(y, x)) * x
    assert transvection_power(x, k) @ transvection_power(x, -k) == SpMatrix.identity(3)


def test_gl_embed_examples():
    g = 2
    assert gl_embed(GLMatrix(np.eye(2, dtype=np.int64))).is_identity()
    M = gl_embed(gl_elementary(g, 2, 1))
    assert np.array_equal(M.blocks()[3], np.eye(2, dtype=np.int64) - E(g, 1, 2))
    P = permutation_matrix([2, 0, 1])
    A, B, C, D = gl_embed(P).blocks()
    assert np.array_equal(A, D) and np.array_equal(A, P.entries)
    assert handle_swap(3, 1, 2).apply(a(3, 1)) == a(3, 2)


def test_reduce_mod2_examples():
    assert reduce_mod2(SpMatrix.identity(2)) == F2Matrix.identity(4)
    assert reduce_mod2(lower_unipotent(E(3, 1, 1))) == F2Matrix.from_array(lower_unipotent(E(3, 1, 1)).entries)
    assert reduce_mod2(transvection_power(a(2, 1) + b(2, 1), 2)) == F2Matrix.identity(4)


def test_is_symplectic_examples():
    assert is_symplectic(np.eye(4, dtype=np.int64))
    assert not is_symplectic(2 * np.eye(4, dtype=np.int64))
    with pytest.raises(ValueError):
        is_symplectic(np.eye(3, dtype=np.int64))
    with pytest.raises(ValueError):
        SpMatrix(2, 2 * np.eye(4, dtype=np.int64))
    with pytest.raises(ValueError):
        GLMatrix(2 * np.eye(2, dtype=np.int64))


@given(symplectic_matrices(3), classes(3), classes(3))
def test_products_preserve_omega(M, x, y):
    assert is_symplectic(M.entries)
    assert omega(M.apply(x), M.apply(y)) == omega(x, y)
    assert (M @ M.inverse()).is_identity()
    assert (M.inverse() @ M).is_identity()


@given(symplectic_matrices(2), st.integers(3, 5), classes(2))
def test_stabilize_matrix(M, h, x):
    S = M.stabilize(h)
    assert S.apply(x.stabilize(h)) == M.apply(x).stabilize(h)
    assert S.apply(a(h, h)) == a(h, h)
