from __future__ import annotations

import itertools

from hypothesis import settings
from hypothesis import strategies as st

from torelli_bcj.symplectic import HClass, SpMatrix, gl_elementary, gl_embed, transvection_power

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def classes(g: int, lo: int = -2, hi: int = 2):
    return st.lists(st.integers(lo, hi), min_size=2 * g, max_size=2 * g).map(lambda c: HClass(g, c))


@st.composite
def symplectic_matrices(draw, g: int, max_length: int = 6):
    M = SpMatrix.identity(g)
    for _ in range(draw(st.integers(0, max_length))):
        if draw(st.booleans()):
            i, j = draw(st.sampled_from(list(itertools.permutations(range(1, g + 1), 2))))
            M = M @ gl_embed(gl_elementary(g, i, j, sign=draw(st.sampled_from([-1, 1]))))
        else:
            x = draw(classes(g, -1, 1))
            M = M @ transvection_power(x, draw(st.sampled_from([-1, 1])))
    return M


@st.composite
def gl_matrices(draw, g: int, max_length: int = 6):
    M = SpMatrix.identity(g)
    for _ in range(draw(st.integers(0, max_length))):
        i, j = draw(st.sampled_from(list(itertools.permutations(range(1, g + 1), 2))))
        M = M @ gl_embed(gl_elementary(g, i, j, sign=draw(st.sampled_from([-1, 1]))))
    return M
