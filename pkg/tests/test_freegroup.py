from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from torelli_bcj.freegroup import FreeAutomorphism, FreeGroupWord, compose, conjugating_automorphism, reduce_word

words3 = st.lists(st.sampled_from([1, 2, 3, -1, -2, -3]), max_size=12).map(lambda xs: FreeGroupWord(3, tuple(xs)))


def test_reduction():
    assert reduce_word([1, 2, -2, -1, 3]) == (3,)
    assert str(FreeGroupWord(3, (1, -1))) == "1"
    assert str(FreeGroupWord(3, (3, 2, -1))) == "a3*a2*a1^-1"
    with pytest.raises(ValueError):
        FreeGroupWord(2, (3,))


@given(words3, words3)
def test_group_laws(u, v):
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert len(u * u.inverse()) == 0


def test_conjugating_automorphism():
    K = conjugating_automorphism(3, 1, 2)
    assert K(FreeGroupWord(3, (1,))).letters == (2, 1, -2)
    assert K(FreeGroupWord(3, (3,))).letters == (3,)
    Kinv = FreeAutomorphism.from_mapping(3, {1: (-2, 1, 2)})
    assert K.is_inverse_of(Kinv)


@given(words3)
def test_composition_order(w):
    phi = FreeAutomorphism.from_mapping(3, {3: (3, 2)})
    psi = conjugating_automorphism(3, 1, 3)
    assert compose(phi, psi)(w) == phi(psi(w))
    assert (phi @ psi)(w) == phi(psi(w))


def test_automorphisms_are_homomorphisms():
    phi = FreeAutomorphism.from_mapping(3, {3: (3, 2)})
    u, v = FreeGroupWord(3, (1, 3)), FreeGroupWord(3, (-3, 2))
    assert phi(u * v) == phi(u) * phi(v)
